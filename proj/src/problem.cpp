#include "ccopt/problem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ccopt/normal.hpp"

namespace ccopt {
namespace {

struct FunctionEntry {
    FunctionKind kind;
    const char* name;
};

constexpr FunctionEntry kFunctions[] = {
    {FunctionKind::sphere, "sphere"},
    {FunctionKind::elliptic, "elliptic"},
    {FunctionKind::rastrigin, "rastrigin"},
    {FunctionKind::rosenbrock, "rosenbrock"},
    {FunctionKind::ackley, "ackley"},
    {FunctionKind::griewank, "griewank"},
    {FunctionKind::schwefel_1_2, "schwefel_1_2"},
    {FunctionKind::bent_cigar, "bent_cigar"},
};

constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Standard normal draw via the quantile function; u is nudged into (0,1).
double next_gaussian(RandomSource& rng) {
    const double u = rng.next_double() + 0x1.0p-54;
    return normal_quantile(u);
}

}  // namespace

const char* function_name(FunctionKind kind) {
    for (const auto& entry : kFunctions) {
        if (entry.kind == kind) {
            return entry.name;
        }
    }
    throw std::invalid_argument("function_name: unknown function kind");
}

FunctionKind function_from_name(const std::string& name) {
    for (const auto& entry : kFunctions) {
        if (name == entry.name) {
            return entry.kind;
        }
    }
    throw std::invalid_argument("function_from_name: unknown function '" + name + "'");
}

const std::vector<FunctionKind>& all_functions() {
    static const std::vector<FunctionKind> kAll = [] {
        std::vector<FunctionKind> v;
        for (const auto& entry : kFunctions) {
            v.push_back(entry.kind);
        }
        return v;
    }();
    return kAll;
}

double evaluate_base(FunctionKind kind, const std::vector<double>& z) {
    const std::size_t d = z.size();
    if (d == 0) {
        throw std::invalid_argument("evaluate_base: empty point");
    }
    switch (kind) {
        case FunctionKind::sphere: {
            double s = 0.0;
            for (double v : z) {
                s += v * v;
            }
            return s;
        }
        case FunctionKind::elliptic: {
            double s = 0.0;
            for (std::size_t i = 0; i < d; ++i) {
                const double expo = d == 1 ? 0.0
                                           : 6.0 * static_cast<double>(i) /
                                                 static_cast<double>(d - 1);
                s += std::pow(10.0, expo) * z[i] * z[i];
            }
            return s;
        }
        case FunctionKind::rastrigin: {
            double s = 0.0;
            for (double v : z) {
                s += v * v - 10.0 * std::cos(kTwoPi * v) + 10.0;
            }
            return s;
        }
        case FunctionKind::rosenbrock: {
            // Evaluated at w = z + 1 so the minimum sits at z = 0.
            double s = 0.0;
            for (std::size_t i = 0; i + 1 < d; ++i) {
                const double wi = z[i] + 1.0;
                const double wn = z[i + 1] + 1.0;
                const double a = wn - wi * wi;
                const double b = wi - 1.0;
                s += 100.0 * a * a + b * b;
            }
            return s;
        }
        case FunctionKind::ackley: {
            double sq = 0.0;
            double cs = 0.0;
            for (double v : z) {
                sq += v * v;
                cs += std::cos(kTwoPi * v);
            }
            const double n = static_cast<double>(d);
            return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 +
                   std::exp(1.0);
        }
        case FunctionKind::griewank: {
            double s = 0.0;
            double p = 1.0;
            for (std::size_t i = 0; i < d; ++i) {
                s += z[i] * z[i] / 4000.0;
                p *= std::cos(z[i] / std::sqrt(static_cast<double>(i + 1)));
            }
            return s - p + 1.0;
        }
        case FunctionKind::schwefel_1_2: {
            double s = 0.0;
            double prefix = 0.0;
            for (double v : z) {
                prefix += v;
                s += prefix * prefix;
            }
            return s;
        }
        case FunctionKind::bent_cigar: {
            double s = z[0] * z[0];
            for (std::size_t i = 1; i < d; ++i) {
                s += 1e6 * z[i] * z[i];
            }
            return s;
        }
    }
    throw std::invalid_argument("evaluate_base: unknown function kind");
}

void Matrix::apply(const std::vector<double>& v, std::vector<double>& out) const {
    out.resize(n);
    for (std::size_t r = 0; r < n; ++r) {
        const double* row = data.data() + r * n;
        double s = 0.0;
        for (std::size_t c = 0; c < n; ++c) {
            s += row[c] * v[c];
        }
        out[r] = s;
    }
}

Matrix random_rotation(std::size_t dim, RandomSource& rng) {
    if (dim == 0) {
        throw std::invalid_argument("random_rotation: dimension must be positive");
    }
    Matrix m;
    m.n = dim;
    m.data.resize(dim * dim);
    // Columns are orthonormalized with modified Gram-Schmidt; a second pass
    // over previous columns scrubs the residual error that a single pass
    // leaves at larger dimensions. Degenerate columns are redrawn.
    for (std::size_t c = 0; c < dim; ++c) {
        while (true) {
            for (std::size_t r = 0; r < dim; ++r) {
                m.at(r, c) = next_gaussian(rng);
            }
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t p = 0; p < c; ++p) {
                    double dot = 0.0;
                    for (std::size_t r = 0; r < dim; ++r) {
                        dot += m.at(r, c) * m.at(r, p);
                    }
                    for (std::size_t r = 0; r < dim; ++r) {
                        m.at(r, c) -= dot * m.at(r, p);
                    }
                }
            }
            double norm_sq = 0.0;
            for (std::size_t r = 0; r < dim; ++r) {
                norm_sq += m.at(r, c) * m.at(r, c);
            }
            if (norm_sq > 1e-12) {
                const double inv = 1.0 / std::sqrt(norm_sq);
                for (std::size_t r = 0; r < dim; ++r) {
                    m.at(r, c) *= inv;
                }
                break;
            }
        }
    }
    return m;
}

double Problem::evaluate(const std::vector<double>& x) const {
    if (x.size() != dim) {
        throw std::invalid_argument("Problem::evaluate: dimension mismatch");
    }
    thread_local std::vector<double> shifted;
    thread_local std::vector<double> rotated;
    shifted.resize(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const double lo = space.lower()[i];
        const double hi = space.upper()[i];
        const double tol = 1e-9 * (hi - lo);
        double v = x[i];
        if (v < lo - tol || v > hi + tol) {
            throw std::out_of_range("Problem::evaluate: point outside bounds");
        }
        v = std::clamp(v, lo, hi);
        shifted[i] = input_scale * (shift.empty() ? v : v - shift[i]);
    }
    const std::vector<double>* z = &shifted;
    if (!rotation.empty()) {
        rotation.apply(shifted, rotated);
        z = &rotated;
    }
    if (custom) {
        return custom(*z);
    }
    return evaluate_base(kind, *z);
}

double natural_half_width(FunctionKind kind) {
    switch (kind) {
        case FunctionKind::rastrigin:
            return 5.12;
        case FunctionKind::rosenbrock:
            return 2.048;
        case FunctionKind::ackley:
            return 32.768;
        case FunctionKind::griewank:
            return 600.0;
        case FunctionKind::sphere:
        case FunctionKind::elliptic:
        case FunctionKind::schwefel_1_2:
        case FunctionKind::bent_cigar:
            return 100.0;
    }
    throw std::invalid_argument("natural_half_width: unknown function kind");
}

Problem make_problem(FunctionKind kind, std::size_t dim, std::uint64_t seed, bool shifted,
                     bool rotated, double half_width) {
    if (dim == 0) {
        throw std::invalid_argument("make_problem: dimension must be positive");
    }
    Problem p;
    p.kind = kind;
    p.dim = dim;
    p.space = SearchSpace::symmetric(dim, half_width);
    p.input_scale = natural_half_width(kind) / half_width;
    p.id = std::string(function_name(kind)) + "-d" + std::to_string(dim);
    RandomSource rng(seed);
    if (shifted) {
        p.shift.resize(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            p.shift[i] = 0.8 * half_width * rng.next_symmetric();
        }
    }
    if (rotated) {
        p.rotation = random_rotation(dim, rng);
    }
    // Additively separable bases; rotation destroys the property.
    p.separable = !rotated &&
                  (kind == FunctionKind::sphere || kind == FunctionKind::elliptic ||
                   kind == FunctionKind::rastrigin || kind == FunctionKind::bent_cigar);
    return p;
}

const Problem& ProblemSuite::by_id(const std::string& id) const {
    for (const auto& p : problems) {
        if (p.id == id) {
            return p;
        }
    }
    throw std::invalid_argument("ProblemSuite::by_id: unknown problem '" + id + "'");
}

ProblemSuite make_suite(const SuiteSpec& spec) {
    if (spec.functions.empty() || spec.dims.empty()) {
        throw std::invalid_argument("make_suite: functions and dims must be non-empty");
    }
    ProblemSuite suite;
    for (std::size_t dim : spec.dims) {
        for (FunctionKind kind : spec.functions) {
            // Sphere and rastrigin stay axis-aligned so the suite always
            // carries separable instances alongside the rotated ones.
            const bool keep_separable =
                kind == FunctionKind::sphere || kind == FunctionKind::rastrigin;
            const bool rotate = spec.rotated && !keep_separable;
            const std::uint64_t sub_seed =
                mix64(spec.seed ^ fnv1a64(function_name(kind)) ^
                      mix64(static_cast<std::uint64_t>(dim)));
            suite.problems.push_back(
                make_problem(kind, dim, sub_seed, spec.shifted, rotate, spec.half_width));
        }
    }
    for (std::size_t i = 0; i < suite.problems.size(); ++i) {
        for (std::size_t j = i + 1; j < suite.problems.size(); ++j) {
            if (suite.problems[i].id == suite.problems[j].id) {
                throw std::logic_error("make_suite: duplicate problem id " +
                                       suite.problems[i].id);
            }
        }
    }
    return suite;
}

}  // namespace ccopt
