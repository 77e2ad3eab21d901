#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace ccopt {

/// Counts objective evaluations against a hard limit. A counter may be
/// chained to a parent so an epoch slice and the whole run are charged by the
/// same call; remaining() is then bounded by the tightest counter in the
/// chain.
class BudgetCounter {
public:
    explicit BudgetCounter(std::uint64_t limit, BudgetCounter* parent = nullptr)
        : limit_(limit), parent_(parent) {
        if (limit == 0) throw std::invalid_argument("budget limit must be positive");
    }

    std::uint64_t limit() const { return limit_; }
    std::uint64_t consumed() const { return consumed_; }

    std::uint64_t remaining() const {
        std::uint64_t own = limit_ - consumed_;
        return parent_ ? std::min(own, parent_->remaining()) : own;
    }

    bool exhausted() const { return remaining() == 0; }

    void charge() {
        if (remaining() == 0) throw std::logic_error("evaluation budget exhausted");
        ++consumed_;
        if (parent_) parent_->charge();
    }

private:
    std::uint64_t limit_;
    std::uint64_t consumed_ = 0;
    BudgetCounter* parent_;
};

}  // namespace ccopt
