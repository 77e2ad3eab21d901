#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccopt/problem.hpp"
#include "ccopt/random.hpp"

using namespace ccopt;

TEST_CASE("function names round-trip") {
    CHECK(all_functions().size() == 8);
    for (FunctionKind kind : all_functions()) {
        CHECK(function_from_name(function_name(kind)) == kind);
    }
    CHECK_THROWS_AS(function_from_name("mystery"), std::invalid_argument);
}

TEST_CASE("every base function has its minimum value 0 at the origin") {
    const std::vector<double> origin(10, 0.0);
    for (FunctionKind kind : all_functions()) {
        CHECK(std::fabs(evaluate_base(kind, origin)) < 1e-12);
    }
}

TEST_CASE("base functions reproduce hand-computed values") {
    CHECK(evaluate_base(FunctionKind::sphere, {1.0, 2.0, 3.0}) == 14.0);
    CHECK(evaluate_base(FunctionKind::elliptic, {1.0, 1.0, 1.0}) ==
          doctest::Approx(1001001.0).epsilon(1e-12));
    CHECK(evaluate_base(FunctionKind::rastrigin, std::vector<double>(10, 1.0)) ==
          doctest::Approx(10.0).epsilon(1e-9));
    CHECK(evaluate_base(FunctionKind::rosenbrock, {-1.0, 0.0}) ==
          doctest::Approx(101.0).epsilon(1e-12));
    CHECK(evaluate_base(FunctionKind::schwefel_1_2, {1.0, 2.0, 3.0}) == 46.0);
    CHECK(evaluate_base(FunctionKind::bent_cigar, {1.0, 1.0, 1.0}) ==
          doctest::Approx(2000001.0).epsilon(1e-12));
    // second griewank coordinate is damped by sqrt(2)
    CHECK(evaluate_base(FunctionKind::griewank, {0.0, 2.0}) ==
          doctest::Approx(0.001 - std::cos(2.0 / std::sqrt(2.0)) + 1.0).epsilon(1e-14));
    // one-dimensional ackley, spelled out
    const double expected_ackley =
        -20.0 * std::exp(-0.2 * 0.5) - std::exp(std::cos(std::acos(-1.0))) + 20.0 +
        std::exp(1.0);
    CHECK(evaluate_base(FunctionKind::ackley, {0.5}) ==
          doctest::Approx(expected_ackley).epsilon(1e-12));
    CHECK_THROWS_AS(evaluate_base(FunctionKind::sphere, {}), std::invalid_argument);
}

TEST_CASE("random rotations are orthonormal and norm-preserving") {
    RandomSource rng(2718);
    const Matrix m = random_rotation(100, rng);
    double max_err = 0.0;
    for (std::size_t i = 0; i < 100; ++i) {
        for (std::size_t j = 0; j < 100; ++j) {
            double dot = 0.0;
            for (std::size_t r = 0; r < 100; ++r) {
                dot += m.at(r, i) * m.at(r, j);
            }
            max_err = std::max(max_err, std::fabs(dot - (i == j ? 1.0 : 0.0)));
        }
    }
    CHECK(max_err < 1e-9);

    const Matrix small = random_rotation(30, rng);
    std::vector<double> v(30);
    std::vector<double> out;
    for (int trial = 0; trial < 1000; ++trial) {
        double norm_in = 0.0;
        for (double& x : v) {
            x = rng.next_symmetric() * 50.0;
            norm_in += x * x;
        }
        small.apply(v, out);
        double norm_out = 0.0;
        for (double x : out) {
            norm_out += x * x;
        }
        CHECK(std::fabs(norm_out - norm_in) <= 1e-9 * std::max(1.0, norm_in));
    }
}

TEST_CASE("rotating the sphere changes nothing") {
    // Same seed draws the same shift before the rotation is generated.
    const Problem plain = make_problem(FunctionKind::sphere, 10, 404, true, false);
    const Problem rotated = make_problem(FunctionKind::sphere, 10, 404, true, true);
    REQUIRE(plain.shift == rotated.shift);
    REQUIRE(rotated.rotation.n == 10);
    RandomSource rng(5);
    std::vector<double> x(10);
    for (int trial = 0; trial < 200; ++trial) {
        for (double& v : x) {
            v = rng.next_symmetric() * 100.0;
        }
        const double a = plain.evaluate(x);
        const double b = rotated.evaluate(x);
        CHECK(std::fabs(a - b) <= 1e-9 * std::max(1.0, a));
    }
}

TEST_CASE("the optimum of every instance sits strictly inside the box at value zero") {
    SuiteSpec spec;
    spec.seed = 91;
    const ProblemSuite suite = make_suite(spec);
    for (const Problem& p : suite.problems) {
        REQUIRE(p.shift.size() == p.dim);
        for (double o : p.shift) {
            CHECK(std::fabs(o) <= 80.0);
        }
        CHECK(std::fabs(p.evaluate(p.shift)) < 1e-12);
    }
}

TEST_CASE("suites are deterministic in every byte") {
    SuiteSpec spec;
    spec.seed = 2025;
    spec.dims = {10, 50};
    const ProblemSuite a = make_suite(spec);
    const ProblemSuite b = make_suite(spec);
    REQUIRE(a.problems.size() == b.problems.size());
    for (std::size_t i = 0; i < a.problems.size(); ++i) {
        CHECK(a.problems[i].id == b.problems[i].id);
        CHECK(a.problems[i].shift == b.problems[i].shift);
        CHECK(a.problems[i].rotation.data == b.problems[i].rotation.data);
    }

    SuiteSpec other = spec;
    other.seed = 2026;
    const ProblemSuite c = make_suite(other);
    CHECK(a.problems[0].shift != c.problems[0].shift);
}

TEST_CASE("the full suite has the expected shape") {
    SuiteSpec spec;
    spec.seed = 7;
    spec.dims = {10, 50, 100};
    const ProblemSuite suite = make_suite(spec);
    CHECK(suite.problems.size() == 24);

    std::set<std::string> ids;
    for (const Problem& p : suite.problems) {
        ids.insert(p.id);
    }
    CHECK(ids.size() == 24);  // no duplicates

    int separable = 0;
    for (const Problem& p : suite.problems) {
        if (p.dim != 10) {
            continue;
        }
        if (p.kind == FunctionKind::sphere || p.kind == FunctionKind::rastrigin) {
            CHECK(p.rotation.empty());
            CHECK(p.separable);
        } else {
            CHECK(!p.rotation.empty());
            CHECK(!p.separable);
        }
        separable += p.separable ? 1 : 0;
    }
    CHECK(separable == 2);

    CHECK(suite.by_id("sphere-d10").kind == FunctionKind::sphere);
    CHECK(suite.by_id("ackley-d50").dim == 50);
    CHECK_THROWS_AS(suite.by_id("sphere-d11"), std::invalid_argument);
}

TEST_CASE("evaluation polices the box bounds with a hair of tolerance") {
    const Problem p = make_problem(FunctionKind::sphere, 3, 11, false, false);
    CHECK(p.evaluate({100.0, -100.0, 0.0}) == doctest::Approx(20000.0));
    // within the 1e-9-relative slack: clamped, not rejected
    CHECK(p.evaluate({100.0 + 1e-7, 0.0, 0.0}) == doctest::Approx(10000.0));
    CHECK_THROWS_AS(p.evaluate({100.1, 0.0, 0.0}), std::out_of_range);
    CHECK_THROWS_AS(p.evaluate({0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("constructor guards") {
    CHECK_THROWS_AS(make_problem(FunctionKind::sphere, 0, 1, false, false),
                    std::invalid_argument);
    SuiteSpec empty;
    empty.functions.clear();
    CHECK_THROWS_AS(make_suite(empty), std::invalid_argument);
    SuiteSpec no_dims;
    no_dims.dims.clear();
    CHECK_THROWS_AS(make_suite(no_dims), std::invalid_argument);
    RandomSource rng(1);
    CHECK_THROWS_AS(random_rotation(0, rng), std::invalid_argument);
}

TEST_CASE("shift and rotation compose as f(M(x - o))") {
    Problem p = make_problem(FunctionKind::elliptic, 4, 88, true, true);
    RandomSource rng(6);
    std::vector<double> x(4);
    std::vector<double> shifted(4);
    std::vector<double> z;
    for (int trial = 0; trial < 100; ++trial) {
        for (std::size_t i = 0; i < 4; ++i) {
            x[i] = rng.next_symmetric() * 100.0;
            shifted[i] = x[i] - p.shift[i];
        }
        p.rotation.apply(shifted, z);
        const double expect = evaluate_base(FunctionKind::elliptic, z);
        CHECK(p.evaluate(x) == doctest::Approx(expect).epsilon(1e-12));
    }

    // the custom seam replaces the base function but keeps the transform
    p.custom = [](const std::vector<double>& w) { return w[0]; };
    for (std::size_t i = 0; i < 4; ++i) {
        shifted[i] = 50.0 - p.shift[i];
    }
    p.rotation.apply(shifted, z);
    CHECK(p.evaluate(std::vector<double>(4, 50.0)) == doctest::Approx(z[0]).epsilon(1e-12));
}
