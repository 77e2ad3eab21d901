#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ccopt {

/// Box-bounded decision space with the affine map to and from the normalized
/// cube [-1,1]^D that all engine logic operates in.
class SearchSpace {
public:
    SearchSpace(std::vector<double> lower, std::vector<double> upper);

    /// [-half_width, half_width]^dim.
    static SearchSpace symmetric(std::size_t dim, double half_width);

    std::size_t dim() const { return lower_.size(); }
    const std::vector<double>& lower() const { return lower_; }
    const std::vector<double>& upper() const { return upper_; }

    /// Decision -> normalized; rejects out-of-bounds input.
    std::vector<double> normalize(std::span<const double> x) const;

    /// Normalized -> decision; rejects input outside [-1,1]^D.
    std::vector<double> denormalize(std::span<const double> z) const;
    void denormalize_into(std::span<const double> z, std::vector<double>& out) const;

private:
    std::vector<double> lower_;
    std::vector<double> upper_;
};

}  // namespace ccopt
