#pragma once

#include <cstdint>
#include <vector>

#include "ccopt/budget.hpp"
#include "ccopt/candidate.hpp"
#include "ccopt/problem.hpp"

namespace ccopt {

/// One point of a best-so-far staircase: the fitness that became the best at
/// a given (1-based) evaluation index.
struct TracePoint {
    std::uint64_t evaluation = 0;
    double fitness = 0.0;
};

/// Accumulates the best solution seen so far and the improvement staircase.
/// Fitness along the trace is strictly decreasing by construction.
class BestTracker {
public:
    void observe(std::uint64_t evaluation, const std::vector<double>& coords, double fitness);

    bool has_best() const { return !trace_.empty(); }
    const Candidate& best() const;
    const std::vector<TracePoint>& trace() const { return trace_; }

    /// Best fitness among the first `evaluation` evaluations; requires at
    /// least one observation at or before that index.
    double best_at(std::uint64_t evaluation) const;

private:
    Candidate best_;
    std::vector<TracePoint> trace_;
};

/// Charges the budget, maps a normalized candidate into decision space,
/// evaluates the objective, and feeds the tracker. The single gateway every
/// engine and wrapper uses, so evaluation counts can never drift from the
/// budget ledger.
class Evaluator {
public:
    Evaluator(const Problem& problem, BudgetCounter& budget, BestTracker* tracker = nullptr);

    /// Evaluates in place, setting candidate.fitness. Consumes exactly one
    /// budget unit; throws std::logic_error if none remains.
    double evaluate(Candidate& candidate);

    std::uint64_t remaining() const { return budget_->remaining(); }
    std::uint64_t calls() const { return calls_; }

    /// Redirects budget charging, e.g. to a per-epoch sub-counter chained to
    /// the run counter.
    void set_budget(BudgetCounter& budget) { budget_ = &budget; }

    const Problem& problem() const { return *problem_; }

private:
    const Problem* problem_;
    BudgetCounter* budget_;
    BestTracker* tracker_;
    std::uint64_t calls_ = 0;
    std::vector<double> decision_;  // scratch, avoids per-call allocation
};

}  // namespace ccopt
