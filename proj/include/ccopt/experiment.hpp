#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccopt/engine.hpp"
#include "ccopt/objective.hpp"
#include "ccopt/problem.hpp"
#include "ccopt/stats.hpp"
#include "ccopt/wrapper.hpp"

namespace ccopt {

/// A roster entry decoded from its id: "RW", a bare engine name ("cDE",
/// "rcGA", "cPSO", "cBFO"), or an engine name prefixed with "RI" / "Re".
struct AlgorithmSpec {
    std::string id;
    WrapperMode mode = WrapperMode::none;
    EngineKind engine = EngineKind::cde_light;  // meaningless for RW
};

AlgorithmSpec parse_algorithm_id(const std::string& id);

struct ExperimentConfig {
    SuiteSpec suite;
    std::vector<std::string> roster = default_roster();
    int runs = 30;
    std::uint64_t budget_multiplier = 5000;  // budget = multiplier * dimension
    std::uint64_t master_seed = 1;
    std::string output_dir = "results";
    int threads = 0;        // 0 = hardware concurrency
    int trace_points = 100;  // downsampled trace checkpoints; 0 disables
    double epoch_fraction = 0.25;
    double ri_alpha = 0.05;

    void validate() const;

    /// The full 13-algorithm comparison: four engines bare, with RI, with
    /// random restart, plus the random-walk baseline.
    static std::vector<std::string> default_roster();
};

ExperimentConfig config_from_json(const std::string& text);
std::string config_to_json(const ExperimentConfig& config);
ExperimentConfig load_config(const std::string& path);

struct RunRecord {
    std::string algorithm;
    std::string problem;
    std::size_t dim = 0;
    int run = 0;
    std::uint64_t seed = 0;
    std::uint64_t evaluations = 0;
    double final_best = 0.0;
    std::vector<TracePoint> trace;  // downsampled staircase checkpoints

    friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

inline bool operator==(const TracePoint& a, const TracePoint& b) {
    return a.evaluation == b.evaluation && a.fitness == b.fitness;
}

/// Stable, collision-resistant stream seed for one (algorithm, problem, run)
/// cell.
std::uint64_t derive_seed(std::uint64_t master_seed, const std::string& algorithm,
                          const std::string& problem, int run);

/// One cell, executed in isolation; the building block of run_experiment.
RunRecord run_cell(const ExperimentConfig& config, const std::string& algorithm,
                   const Problem& problem, int run);

struct ExperimentResult {
    std::vector<RunRecord> records;  // canonical order: roster, suite, run
    std::size_t executed = 0;        // cells computed this invocation
    std::size_t resumed = 0;         // cells taken from a previous journal
    std::string records_path;
    std::string manifest_path;
};

/// Runs the full factorial experiment (possibly multi-threaded), journaling
/// each finished cell so an interrupted invocation resumes where it stopped.
/// Persists records.csv and manifest.json under config.output_dir.
ExperimentResult run_experiment(const ExperimentConfig& config);

std::string records_to_csv(const std::vector<RunRecord>& records);
std::vector<RunRecord> records_from_csv(const std::string& text);
std::vector<RunRecord> load_records(const std::string& path);

struct CellStats {
    std::string algorithm;
    std::string problem;
    std::size_t dim = 0;
    int runs = 0;
    double mean = 0.0;
    double stddev = 0.0;
    double median = 0.0;
};

struct Summary {
    ResultTable table;
    std::vector<CellStats> cells;
};

/// Mean/std/median of final best per cell; rejects incomplete coverage with
/// a listing of the missing cells.
Summary summarize(const std::vector<RunRecord>& records);

std::string summary_to_csv(const Summary& summary);

/// One three-way table per base engine {X, RIX, ReX}, reference = RIX.
std::vector<RankReport> report_by_engine(const ResultTable& table, double delta = 0.05);

/// All algorithms in one table; empty reference = highest average score.
RankReport report_all(const ResultTable& table, const std::string& reference = "",
                      double delta = 0.05);

}  // namespace ccopt
