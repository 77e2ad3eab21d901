#pragma once

#include <cmath>
#include <limits>
#include <vector>

namespace ccopt {

/// A solution in the normalized coordinate space [-1,1]^D with its fitness,
/// NaN until evaluated.
struct Candidate {
    std::vector<double> coords;
    double fitness = std::numeric_limits<double>::quiet_NaN();

    bool evaluated() const { return !std::isnan(fitness); }
};

}  // namespace ccopt
