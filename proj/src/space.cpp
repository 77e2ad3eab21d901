#include "ccopt/space.hpp"

#include <stdexcept>
#include <string>

namespace ccopt {

SearchSpace::SearchSpace(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.empty() || lower_.size() != upper_.size())
        throw std::invalid_argument("search space bounds must be non-empty and of equal length");
    for (std::size_t i = 0; i < lower_.size(); ++i)
        if (!(lower_[i] < upper_[i]))
            throw std::invalid_argument("search space requires lower[i] < upper[i] at index " +
                                        std::to_string(i));
}

SearchSpace SearchSpace::symmetric(std::size_t dim, double half_width) {
    return SearchSpace(std::vector<double>(dim, -half_width), std::vector<double>(dim, half_width));
}

std::vector<double> SearchSpace::normalize(std::span<const double> x) const {
    if (x.size() != dim()) throw std::invalid_argument("normalize: dimension mismatch");
    std::vector<double> z(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i] < lower_[i] || x[i] > upper_[i])
            throw std::out_of_range("normalize: coordinate " + std::to_string(i) +
                                    " outside bounds");
        z[i] = 2.0 * (x[i] - lower_[i]) / (upper_[i] - lower_[i]) - 1.0;
    }
    return z;
}

std::vector<double> SearchSpace::denormalize(std::span<const double> z) const {
    std::vector<double> x;
    denormalize_into(z, x);
    return x;
}

void SearchSpace::denormalize_into(std::span<const double> z, std::vector<double>& out) const {
    if (z.size() != dim()) throw std::invalid_argument("denormalize: dimension mismatch");
    out.resize(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (z[i] < -1.0 || z[i] > 1.0)
            throw std::out_of_range("denormalize: coordinate " + std::to_string(i) +
                                    " outside [-1,1]");
        out[i] = lower_[i] + 0.5 * (z[i] + 1.0) * (upper_[i] - lower_[i]);
    }
}

}  // namespace ccopt
