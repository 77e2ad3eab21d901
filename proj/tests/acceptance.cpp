// Acceptance suite: eight numbered checks covering formula fidelity,
// distributional behavior, the desk-scale experiment's qualitative ordering,
// ranking equivalence against a brute-force oracle, determinism, and trace
// monotonicity. Prints one [PASS]/[FAIL] line per criterion; exits non-zero
// if any fail.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ccopt/crossover.hpp"
#include "ccopt/experiment.hpp"
#include "ccopt/pv.hpp"
#include "oracle.hpp"

using namespace ccopt;
namespace fs = std::filesystem;

namespace {

struct Criterion {
    int number = 0;
    std::string label;
    bool pass = false;
    std::string detail;  // shown on failure (and for context on some passes)
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return {};
    }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// ---------------------------------------------------------------- criterion 1
Criterion check_formula_fidelity() {
    Criterion c{1, "formula fidelity"};
    std::vector<std::string> problems;

    if (cr_from_alpha(0.05, 10) != 0.25) {
        problems.push_back("cr(0.05,10) = " + fmt(cr_from_alpha(0.05, 10)) + " != 0.25");
    }
    const double cr25 = cr_from_alpha(0.25, 10);
    if (std::fabs(cr25 - 0.757858283255199) > 1e-6) {
        problems.push_back("cr(0.25,10) = " + fmt(cr25));
    }
    // sqrt(13 * 14 / (6 * 90))
    const double denom = holm_denominator(13, 90);
    if (std::fabs(denom - 0.5805489101161392) > 1e-6) {
        problems.push_back("denominator(13,90) = " + fmt(denom));
    }

    ProbabilityVector pv = init_pv(1, 10.0);
    Candidate winner;
    winner.coords = {0.5};
    winner.fitness = 0.0;
    Candidate loser;
    loser.coords = {-0.5};
    loser.fitness = 1.0;
    update_pv(pv, winner, loser);
    if (std::fabs(pv.mu[0] - 0.0033333333333333335) > 1e-9) {
        problems.push_back("updated mu = " + fmt(pv.mu[0]));
    }
    if (std::fabs(pv.sigma[0] - 9.999999444444429) > 1e-9) {
        problems.push_back("updated sigma = " + fmt(pv.sigma[0]));
    }

    c.pass = problems.empty();
    for (const std::string& p : problems) {
        c.detail += (c.detail.empty() ? "" : "; ") + p;
    }
    return c;
}

// ---------------------------------------------------------------- criterion 2
Criterion check_distributions() {
    Criterion c{2, "sampler and crossover distributions"};
    std::vector<std::string> problems;

    {
        const ProbabilityVector pv = init_pv(1, 0.3);
        RandomSource rng(20240816);
        std::vector<double> samples;
        samples.reserve(100000);
        for (int i = 0; i < 100000; ++i) {
            samples.push_back(sample_pv(pv, rng).coords[0]);
        }
        const double ks =
            oracle::ks_statistic(std::move(samples), oracle::truncated_normal_cdf, 0.0, 0.3);
        if (!(ks < 0.01)) {
            problems.push_back("KS = " + fmt(ks) + " (limit 0.01)");
        }
    }
    {
        const double cr = 0.25;
        const std::size_t dim = 10;
        std::vector<std::size_t> closed(dim + 1, 0);
        std::vector<std::size_t> literal(dim + 1, 0);
        RandomSource rng_closed(71);
        RandomSource rng_literal(72);
        for (int i = 0; i < 100000; ++i) {
            ++closed[exp_xover_length(cr, dim, rng_closed)];
            ++literal[oracle::literal_xover_length(cr, dim, rng_literal)];
        }
        const double tv = oracle::tv_distance(closed, literal);
        if (!(tv < 0.02)) {
            problems.push_back("TV = " + fmt(tv) + " (limit 0.02)");
        }
    }
    {
        const double alpha = 0.2;
        const std::size_t dim = 10;
        const double cr = cr_from_alpha(alpha, dim);
        const auto k = static_cast<std::size_t>(std::lround(alpha * static_cast<double>(dim)));
        RandomSource rng(73);
        int longer = 0;
        const int n = 100000;
        for (int i = 0; i < n; ++i) {
            if (exp_xover_length(cr, dim, rng) > k) {
                ++longer;
            }
        }
        const double frac = static_cast<double>(longer) / n;
        if (std::fabs(frac - 0.5) > 0.02) {
            problems.push_back("P(L > D*alpha) = " + fmt(frac));
        }
    }

    c.pass = problems.empty();
    for (const std::string& p : problems) {
        c.detail += (c.detail.empty() ? "" : "; ") + p;
    }
    return c;
}

// ---------------------------------------------------------------- criterion 6
Criterion check_ranking_oracle() {
    Criterion c{6, "ranking matches brute force"};
    RandomSource rng(90125);
    int bad = 0;
    std::string first_bad;
    for (int t = 0; t < 20; ++t) {
        const std::size_t na = t % 2 == 0 ? 3 : 13;
        const std::size_t ntp = t % 4 < 2 ? 10 : 90;
        const bool quantized = t % 5 == 0;

        ResultTable table;
        for (std::size_t a = 0; a < na; ++a) {
            char name[16];
            std::snprintf(name, sizeof(name), "alg%02zu", a);
            table.algorithms.push_back(name);
        }
        for (std::size_t p = 0; p < ntp; ++p) {
            table.problems.push_back("prob" + std::to_string(p));
        }
        table.means.resize(na);
        for (std::size_t a = 0; a < na; ++a) {
            table.means[a].resize(ntp);
            for (std::size_t p = 0; p < ntp; ++p) {
                const double u = rng.next_double();
                table.means[a][p] = quantized ? std::floor(u * 10.0) : u * 100.0;
            }
        }
        const std::string reference = table.algorithms[rng.next_index(na)];
        const RankReport report = rank_table(table, reference, 0.05);
        const auto expected =
            oracle::rank_decisions(table.algorithms, table.means, reference, 0.05);

        for (const RankRow& row : report.rows) {
            const auto it = expected.find(row.algorithm);
            const bool row_ok = it != expected.end() &&
                                std::fabs(row.z - it->second.z) <= 1e-9 &&
                                std::fabs(row.p - it->second.p) <= 1e-9 &&
                                row.accepted == it->second.accepted;
            if (!row_ok) {
                ++bad;
                if (first_bad.empty()) {
                    first_bad = "table " + std::to_string(t) + ", " + row.algorithm;
                }
            }
        }
    }
    c.pass = bad == 0;
    if (bad > 0) {
        c.detail = std::to_string(bad) + " row(s) diverge; first: " + first_bad;
    }
    return c;
}

// ------------------------------------------------------- desk-scale protocol
ExperimentConfig desk_config(const std::string& output_dir) {
    ExperimentConfig config;
    config.suite.seed = 23;
    config.suite.dims = {10};
    config.runs = 30;
    config.budget_multiplier = 5000;
    config.master_seed = 1;
    config.output_dir = output_dir;
    config.threads = 0;
    config.trace_points = 100;
    return config;
}

struct DeskCriteria {
    Criterion rw_worst{3, "random walk is worst"};
    Criterion restarts_help{4, "inheritance restarts help"};
    Criterion ricde_leads{5, "RIcDE leads"};
    Criterion determinism{7, "determinism and budget"};
    Criterion monotone{8, "monotone traces"};
};

DeskCriteria check_desk() {
    DeskCriteria out;

    fs::remove_all("acceptance_desk");
    std::fprintf(stderr, "desk experiment, pass 1 of 2 (this takes a few minutes)...\n");
    const ExperimentResult run_a = run_experiment(desk_config("acceptance_desk/a"));
    std::fprintf(stderr, "desk experiment, pass 2 of 2...\n");
    {
        const ExperimentResult run_b = run_experiment(desk_config("acceptance_desk/b"));
        const std::string records_a = slurp(run_a.records_path);
        const std::string manifest_a = slurp(run_a.manifest_path);
        const bool records_equal = !records_a.empty() && records_a == slurp(run_b.records_path);
        const bool manifests_equal =
            !manifest_a.empty() && manifest_a == slurp(run_b.manifest_path);

        std::uint64_t worst = 0;
        std::size_t over = 0;
        for (const RunRecord& r : run_a.records) {
            const std::uint64_t budget = 5000 * static_cast<std::uint64_t>(r.dim);
            worst = std::max(worst, r.evaluations);
            if (r.evaluations > budget) {
                ++over;
            }
        }
        out.determinism.pass = records_equal && manifests_equal && over == 0;
        if (!records_equal) {
            out.determinism.detail += "records differ between passes; ";
        }
        if (!manifests_equal) {
            out.determinism.detail += "manifests differ between passes; ";
        }
        if (over > 0) {
            out.determinism.detail += std::to_string(over) + " cell(s) over budget; ";
        }
        out.determinism.detail += "max evaluations = " + std::to_string(worst);
    }

    // ------------------------------------------------------------ criterion 8
    std::size_t violations = 0;
    for (const RunRecord& r : run_a.records) {
        for (std::size_t i = 1; i < r.trace.size(); ++i) {
            if (r.trace[i].fitness > r.trace[i - 1].fitness) {
                ++violations;
            }
        }
    }
    out.monotone.pass = violations == 0;
    out.monotone.detail = std::to_string(violations) + " increase(s) across " +
                          std::to_string(run_a.records.size()) + " traces";

    // ------------------------------------------------------- criteria 3, 4, 5
    const Summary summary = summarize(run_a.records);
    const ResultTable& table = summary.table;
    const std::vector<double> scores = score_problems(table);
    const auto score_of = [&](const std::string& id) {
        return scores[table.algorithm_index(id)];
    };

    {
        const double rw = score_of("RW");
        double min_other = 1e300;
        std::string min_name;
        for (std::size_t a = 0; a < table.algorithms.size(); ++a) {
            if (table.algorithms[a] == "RW") {
                continue;
            }
            if (scores[a] < min_other) {
                min_other = scores[a];
                min_name = table.algorithms[a];
            }
        }
        out.rw_worst.pass = rw < min_other;
        out.rw_worst.detail =
            "RW = " + fmt(rw) + ", weakest compact = " + min_name + " at " + fmt(min_other);
    }

    {
        // all problems that are multimodal and/or rotated: everything except
        // the plain sphere
        std::vector<std::string> subset;
        for (const std::string& p : table.problems) {
            if (p.rfind("sphere-", 0) != 0) {
                subset.push_back(p);
            }
        }
        const ResultTable sub = table.subset_problems(subset);
        const std::vector<double> sub_scores = score_problems(sub);
        const auto sub_score = [&](const std::string& id) {
            return sub_scores[sub.algorithm_index(id)];
        };
        bool ok = subset.size() >= 4;
        std::string detail = "subset of " + std::to_string(subset.size()) + ": ";
        for (const char* engine : {"cDE", "rcGA", "cBFO"}) {
            const double bare = sub_score(engine);
            const double ri = sub_score("RI" + std::string(engine));
            ok = ok && ri >= bare;
            detail += std::string(engine) + " " + fmt(bare) + " vs RI " + fmt(ri) + "; ";
        }
        out.restarts_help.pass = ok;
        out.restarts_help.detail = detail;
    }

    {
        const double ricde = score_of("RIcDE");
        const double cde = score_of("cDE");
        std::size_t strictly_above = 0;
        std::string leaders;
        for (std::size_t a = 0; a < table.algorithms.size(); ++a) {
            if (scores[a] > ricde) {
                ++strictly_above;
                leaders += (leaders.empty() ? "" : ", ") + table.algorithms[a];
            }
        }
        out.ricde_leads.pass = ricde > cde && strictly_above <= 1;
        out.ricde_leads.detail = "RIcDE = " + fmt(ricde) + ", cDE = " + fmt(cde) + ", " +
                                 std::to_string(strictly_above) + " algorithm(s) above" +
                                 (leaders.empty() ? "" : " (" + leaders + ")");
    }

    return out;
}

}  // namespace

int main() {
    std::vector<Criterion> results;
    results.push_back(check_formula_fidelity());
    results.push_back(check_distributions());
    results.push_back(check_ranking_oracle());

    const DeskCriteria desk = check_desk();
    results.push_back(desk.rw_worst);
    results.push_back(desk.restarts_help);
    results.push_back(desk.ricde_leads);
    results.push_back(desk.determinism);
    results.push_back(desk.monotone);

    std::sort(results.begin(), results.end(),
              [](const Criterion& a, const Criterion& b) { return a.number < b.number; });

    int failures = 0;
    for (const Criterion& c : results) {
        if (c.pass) {
            std::printf("[PASS] criterion %d: %s%s%s\n", c.number, c.label.c_str(),
                        c.detail.empty() ? "" : " -- ", c.detail.c_str());
        } else {
            std::printf("[FAIL] criterion %d: %s -- %s\n", c.number, c.label.c_str(),
                        c.detail.empty() ? "no detail" : c.detail.c_str());
            ++failures;
        }
    }
    return failures;
}
