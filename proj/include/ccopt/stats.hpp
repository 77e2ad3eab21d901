#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ccopt {

/// Mean best fitness per (algorithm, problem) cell; the input of the scoring
/// and ranking procedure.
struct ResultTable {
    std::vector<std::string> algorithms;
    std::vector<std::string> problems;
    std::vector<std::vector<double>> means;  // [algorithm][problem]

    void validate() const;
    std::size_t algorithm_index(const std::string& id) const;

    /// Sub-table with the given algorithms (order preserved as given).
    ResultTable subset_algorithms(const std::vector<std::string>& ids) const;

    /// Sub-table with the given problems (order preserved as given).
    ResultTable subset_problems(const std::vector<std::string>& ids) const;
};

/// Per-problem scores (best = NA, worst = 1, ties share averaged positions)
/// averaged over problems; minimization semantics. Result aligns with
/// table.algorithms.
std::vector<double> score_problems(const ResultTable& table);

struct RankRow {
    std::string algorithm;
    double score = 0.0;
    double z = 0.0;
    double p = 0.0;
    double threshold = 0.0;  // delta / j in sequence order
    bool accepted = false;

    friend bool operator==(const RankRow&, const RankRow&) = default;
};

/// Output of the sequentially rejective procedure; rows sorted by ascending
/// p. The reference algorithm appears only in the header fields.
struct RankReport {
    std::string reference;
    double reference_score = 0.0;
    double delta = 0.05;
    std::size_t na = 0;
    std::size_t ntp = 0;
    std::vector<RankRow> rows;

    friend bool operator==(const RankReport&, const RankReport&) = default;
};

/// sqrt(NA (NA + 1) / (6 NTP)), the z-statistic denominator.
double holm_denominator(std::size_t na, std::size_t ntp);

/// Sequentially rejective Holm-Bonferroni procedure over average scores:
/// z_j = (R_j - R_0) / holm_denominator, p_j = Phi(z_j); hypotheses sorted by
/// ascending p and tested against delta / j; the first acceptance accepts
/// every later hypothesis as well.
RankReport holm_bonferroni(const std::vector<std::string>& algorithms,
                           const std::vector<double>& scores, std::size_t ntp,
                           const std::string& reference, double delta = 0.05);

/// Convenience: score_problems + holm_bonferroni on a table.
RankReport rank_table(const ResultTable& table, const std::string& reference,
                      double delta = 0.05);

/// Human-readable table: Rank | z_j | p_j | delta/j | Hypothesis, with the
/// reference shown rank-only in parentheses.
std::string emit_rank_text(const RankReport& report);

/// Machine-readable form; parse_rank_json is its exact inverse.
std::string emit_rank_json(const RankReport& report);
RankReport parse_rank_json(const std::string& text);

}  // namespace ccopt
