#include "ccopt/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ccopt/normal.hpp"

namespace ccopt {
namespace {

std::string format_double(double v, const char* fmt = "%.6g") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

}  // namespace

void ResultTable::validate() const {
    if (algorithms.size() < 2) {
        throw std::invalid_argument("ResultTable: need at least two algorithms");
    }
    if (problems.empty()) {
        throw std::invalid_argument("ResultTable: need at least one problem");
    }
    if (means.size() != algorithms.size()) {
        throw std::invalid_argument("ResultTable: one mean row per algorithm required");
    }
    for (const auto& row : means) {
        if (row.size() != problems.size()) {
            throw std::invalid_argument("ResultTable: ragged mean matrix");
        }
        for (double v : row) {
            if (std::isnan(v)) {
                throw std::invalid_argument("ResultTable: missing cell (NaN)");
            }
        }
    }
}

std::size_t ResultTable::algorithm_index(const std::string& id) const {
    for (std::size_t i = 0; i < algorithms.size(); ++i) {
        if (algorithms[i] == id) {
            return i;
        }
    }
    throw std::invalid_argument("ResultTable: unknown algorithm '" + id + "'");
}

ResultTable ResultTable::subset_algorithms(const std::vector<std::string>& ids) const {
    ResultTable out;
    out.problems = problems;
    for (const auto& id : ids) {
        out.algorithms.push_back(id);
        out.means.push_back(means[algorithm_index(id)]);
    }
    return out;
}

ResultTable ResultTable::subset_problems(const std::vector<std::string>& ids) const {
    ResultTable out;
    out.algorithms = algorithms;
    std::vector<std::size_t> cols;
    for (const auto& id : ids) {
        const auto it = std::find(problems.begin(), problems.end(), id);
        if (it == problems.end()) {
            throw std::invalid_argument("ResultTable: unknown problem '" + id + "'");
        }
        cols.push_back(static_cast<std::size_t>(it - problems.begin()));
        out.problems.push_back(id);
    }
    out.means.resize(algorithms.size());
    for (std::size_t a = 0; a < algorithms.size(); ++a) {
        for (std::size_t c : cols) {
            out.means[a].push_back(means[a][c]);
        }
    }
    return out;
}

std::vector<double> score_problems(const ResultTable& table) {
    table.validate();
    const std::size_t na = table.algorithms.size();
    const std::size_t ntp = table.problems.size();
    std::vector<double> totals(na, 0.0);
    std::vector<std::size_t> order(na);
    for (std::size_t p = 0; p < ntp; ++p) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return table.means[a][p] < table.means[b][p];
        });
        // Walk tie groups; a group spanning positions [k, k+m) shares the
        // average of scores NA-k ... NA-k-m+1.
        std::size_t k = 0;
        while (k < na) {
            std::size_t m = 1;
            while (k + m < na &&
                   table.means[order[k + m]][p] == table.means[order[k]][p]) {
                ++m;
            }
            const double score = static_cast<double>(na) - static_cast<double>(k) -
                                 (static_cast<double>(m) - 1.0) / 2.0;
            for (std::size_t i = 0; i < m; ++i) {
                totals[order[k + i]] += score;
            }
            k += m;
        }
    }
    for (double& t : totals) {
        t /= static_cast<double>(ntp);
    }
    return totals;
}

double holm_denominator(std::size_t na, std::size_t ntp) {
    if (na < 2 || ntp == 0) {
        throw std::invalid_argument("holm_denominator: need NA >= 2 and NTP >= 1");
    }
    const double a = static_cast<double>(na);
    const double n = static_cast<double>(ntp);
    return std::sqrt(a * (a + 1.0) / (6.0 * n));
}

RankReport holm_bonferroni(const std::vector<std::string>& algorithms,
                           const std::vector<double>& scores, std::size_t ntp,
                           const std::string& reference, double delta) {
    if (algorithms.size() != scores.size()) {
        throw std::invalid_argument("holm_bonferroni: ids and scores length mismatch");
    }
    if (algorithms.size() < 2) {
        throw std::invalid_argument("holm_bonferroni: need at least two algorithms");
    }
    if (!(delta > 0.0) || delta >= 1.0) {
        throw std::invalid_argument("holm_bonferroni: delta must be in (0, 1)");
    }
    RankReport report;
    report.reference = reference;
    report.delta = delta;
    report.na = algorithms.size();
    report.ntp = ntp;
    const double denom = holm_denominator(report.na, ntp);

    std::size_t ref_idx = algorithms.size();
    for (std::size_t i = 0; i < algorithms.size(); ++i) {
        if (algorithms[i] == reference) {
            ref_idx = i;
            break;
        }
    }
    if (ref_idx == algorithms.size()) {
        throw std::invalid_argument("holm_bonferroni: unknown reference '" + reference + "'");
    }
    report.reference_score = scores[ref_idx];

    for (std::size_t i = 0; i < algorithms.size(); ++i) {
        if (i == ref_idx) {
            continue;
        }
        RankRow row;
        row.algorithm = algorithms[i];
        row.score = scores[i];
        row.z = (scores[i] - report.reference_score) / denom;
        row.p = normal_cdf(row.z);
        report.rows.push_back(std::move(row));
    }
    std::stable_sort(report.rows.begin(), report.rows.end(),
                     [](const RankRow& a, const RankRow& b) {
                         if (a.p != b.p) return a.p < b.p;
                         return a.algorithm < b.algorithm;
                     });
    bool accept_rest = false;
    for (std::size_t j = 0; j < report.rows.size(); ++j) {
        RankRow& row = report.rows[j];
        row.threshold = delta / static_cast<double>(j + 1);
        row.accepted = accept_rest || row.p > row.threshold;
        accept_rest = row.accepted;
    }
    return report;
}

RankReport rank_table(const ResultTable& table, const std::string& reference, double delta) {
    const std::vector<double> scores = score_problems(table);
    return holm_bonferroni(table.algorithms, scores, table.problems.size(), reference, delta);
}

std::string emit_rank_text(const RankReport& report) {
    std::ostringstream out;
    out << "Holm-Bonferroni ranking (reference: " << report.reference
        << ", delta = " << format_double(report.delta) << ", NA = " << report.na
        << ", NTP = " << report.ntp << ")\n";
    char line[256];
    std::snprintf(line, sizeof(line), "%-12s %12s %12s %12s %12s   %s\n", "algorithm", "rank",
                  "z_j", "p_j", "delta/j", "hypothesis");
    out << line;
    std::snprintf(line, sizeof(line), "%-12s %12s %12s %12s %12s   %s\n", report.reference.c_str(),
                  ("(" + format_double(report.reference_score) + ")").c_str(), "-", "-", "-",
                  "Reference");
    out << line;
    for (const auto& row : report.rows) {
        std::snprintf(line, sizeof(line), "%-12s %12s %12s %12s %12s   %s\n",
                      row.algorithm.c_str(), format_double(row.score).c_str(),
                      format_double(row.z, "%.4e").c_str(), format_double(row.p, "%.4e").c_str(),
                      format_double(row.threshold, "%.4e").c_str(),
                      row.accepted ? "Accepted" : "Rejected");
        out << line;
    }
    return out.str();
}

std::string emit_rank_json(const RankReport& report) {
    nlohmann::json j;
    j["reference"] = report.reference;
    j["reference_score"] = report.reference_score;
    j["delta"] = report.delta;
    j["na"] = report.na;
    j["ntp"] = report.ntp;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : report.rows) {
        j["rows"].push_back({{"algorithm", row.algorithm},
                             {"score", row.score},
                             {"z", row.z},
                             {"p", row.p},
                             {"threshold", row.threshold},
                             {"accepted", row.accepted}});
    }
    return j.dump(2);
}

RankReport parse_rank_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    RankReport report;
    report.reference = j.at("reference").get<std::string>();
    report.reference_score = j.at("reference_score").get<double>();
    report.delta = j.at("delta").get<double>();
    report.na = j.at("na").get<std::size_t>();
    report.ntp = j.at("ntp").get<std::size_t>();
    for (const auto& rj : j.at("rows")) {
        RankRow row;
        row.algorithm = rj.at("algorithm").get<std::string>();
        row.score = rj.at("score").get<double>();
        row.z = rj.at("z").get<double>();
        row.p = rj.at("p").get<double>();
        row.threshold = rj.at("threshold").get<double>();
        row.accepted = rj.at("accepted").get<bool>();
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace ccopt
