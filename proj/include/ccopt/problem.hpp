#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ccopt/random.hpp"
#include "ccopt/space.hpp"

namespace ccopt {

/// The classical base functions the suite is built from. All are normalized
/// so the global minimum value is exactly 0 at the (pre-shift) origin.
enum class FunctionKind {
    sphere,
    elliptic,
    rastrigin,
    rosenbrock,
    ackley,
    griewank,
    schwefel_1_2,
    bent_cigar,
};

const char* function_name(FunctionKind kind);
FunctionKind function_from_name(const std::string& name);
const std::vector<FunctionKind>& all_functions();

/// Evaluates a base function at z (the already shifted/rotated point).
double evaluate_base(FunctionKind kind, const std::vector<double>& z);

/// Row-major square matrix just big enough for rotation duty.
struct Matrix {
    std::size_t n = 0;
    std::vector<double> data;  // n*n, row-major

    double at(std::size_t r, std::size_t c) const { return data[r * n + c]; }
    double& at(std::size_t r, std::size_t c) { return data[r * n + c]; }
    bool empty() const { return n == 0; }

    /// out = M * v
    void apply(const std::vector<double>& v, std::vector<double>& out) const;
};

/// Random orthogonal matrix: Gram-Schmidt on a Gaussian matrix, with a
/// second orthogonalization pass; max |M^T M - I| entry below 1e-9.
Matrix random_rotation(std::size_t dim, RandomSource& rng);

/// One benchmark instance: base function plus optional shift o and rotation
/// M, evaluated as f(M * (x - o)) over a box.
struct Problem {
    std::string id;
    FunctionKind kind = FunctionKind::sphere;
    std::size_t dim = 0;
    SearchSpace space = SearchSpace::symmetric(1, 100.0);
    std::vector<double> shift;  // empty = no shift
    Matrix rotation;            // empty = identity
    /// Maps the common search box onto the function's natural domain:
    /// z = input_scale * M * (x - o). Classical multimodal functions keep
    /// their intended landscape structure this way (e.g. Rastrigin's natural
    /// box is +-5.12, so its scale from a +-100 box is 0.0512).
    double input_scale = 1.0;
    bool separable = false;
    /// Test seam: when set, replaces the base function entirely (shift and
    /// rotation still apply).
    std::function<double(const std::vector<double>&)> custom;

    /// Objective value at a decision-space point; rejects out-of-bounds
    /// input (beyond a 1e-9 relative tolerance, within which it clamps).
    double evaluate(const std::vector<double>& x) const;
};

/// Builds one instance; shifted instances place the optimum uniformly in
/// +-80 (strictly inside the +-100 box).
Problem make_problem(FunctionKind kind, std::size_t dim, std::uint64_t seed, bool shifted,
                     bool rotated, double half_width = 100.0);

/// Half-width of the box the base function is classically defined on.
double natural_half_width(FunctionKind kind);

struct SuiteSpec {
    std::vector<FunctionKind> functions = all_functions();
    std::vector<std::size_t> dims = {10};
    std::uint64_t seed = 0;
    double half_width = 100.0;
    bool shifted = true;
    /// Rotation is applied to every function except the designated separable
    /// pair (sphere, rastrigin), which the suite keeps axis-aligned.
    bool rotated = true;
};

struct ProblemSuite {
    std::vector<Problem> problems;

    const Problem& by_id(const std::string& id) const;
};

/// Deterministic suite: each (function, dimension) cell derives its own
/// sub-seed from the suite seed, so instances are stable regardless of which
/// subset is built.
ProblemSuite make_suite(const SuiteSpec& spec);

}  // namespace ccopt
