#include "ccopt/objective.hpp"

#include <stdexcept>

namespace ccopt {

void BestTracker::observe(std::uint64_t evaluation, const std::vector<double>& coords,
                          double fitness) {
    if (!trace_.empty() && fitness >= best_.fitness) {
        return;
    }
    best_.coords = coords;
    best_.fitness = fitness;
    trace_.push_back({evaluation, fitness});
}

const Candidate& BestTracker::best() const {
    if (trace_.empty()) {
        throw std::logic_error("BestTracker::best: no observations yet");
    }
    return best_;
}

double BestTracker::best_at(std::uint64_t evaluation) const {
    if (trace_.empty() || trace_.front().evaluation > evaluation) {
        throw std::out_of_range("BestTracker::best_at: no observation at or before index");
    }
    // Last trace point with evaluation <= requested index.
    std::size_t lo = 0;
    std::size_t hi = trace_.size();
    while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (trace_[mid].evaluation <= evaluation) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return trace_[lo].fitness;
}

Evaluator::Evaluator(const Problem& problem, BudgetCounter& budget, BestTracker* tracker)
    : problem_(&problem), budget_(&budget), tracker_(tracker) {}

double Evaluator::evaluate(Candidate& candidate) {
    budget_->charge();
    ++calls_;
    problem_->space.denormalize_into(candidate.coords, decision_);
    candidate.fitness = problem_->evaluate(decision_);
    if (tracker_ != nullptr) {
        tracker_->observe(calls_, candidate.coords, candidate.fitness);
    }
    return candidate.fitness;
}

}  // namespace ccopt
