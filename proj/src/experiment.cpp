#include "ccopt/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace ccopt {
namespace {

namespace fs = std::filesystem;

std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write " + tmp);
        }
        out << content;
        out.flush();
        if (!out) {
            throw std::runtime_error("write failed for " + tmp);
        }
    }
    fs::rename(tmp, path);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string trace_to_string(const std::vector<TracePoint>& trace) {
    std::string out;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        if (i > 0) {
            out += ';';
        }
        out += std::to_string(trace[i].evaluation);
        out += ':';
        out += format_g17(trace[i].fitness);
    }
    return out;
}

std::vector<TracePoint> trace_from_string(const std::string& text) {
    std::vector<TracePoint> trace;
    if (text.empty()) {
        return trace;
    }
    for (const std::string& item : split(text, ';')) {
        const std::size_t colon = item.find(':');
        if (colon == std::string::npos) {
            throw std::runtime_error("malformed trace entry '" + item + "'");
        }
        TracePoint tp;
        tp.evaluation = std::stoull(item.substr(0, colon));
        tp.fitness = std::stod(item.substr(colon + 1));
        trace.push_back(tp);
    }
    return trace;
}

/// Downsamples a best-so-far staircase to n evenly spaced budget checkpoints.
std::vector<TracePoint> downsample_trace(const BestTracker& tracker, std::uint64_t budget,
                                         int n) {
    std::vector<TracePoint> out;
    if (n <= 0) {
        return out;
    }
    for (int k = 1; k <= n; ++k) {
        std::uint64_t at = (budget * static_cast<std::uint64_t>(k)) /
                           static_cast<std::uint64_t>(n);
        if (at == 0) {
            at = 1;
        }
        out.push_back({at, tracker.best_at(at)});
    }
    return out;
}

nlohmann::json suite_to_json(const SuiteSpec& suite) {
    nlohmann::json j;
    j["functions"] = nlohmann::json::array();
    for (FunctionKind kind : suite.functions) {
        j["functions"].push_back(function_name(kind));
    }
    j["dims"] = suite.dims;
    j["seed"] = suite.seed;
    j["half_width"] = suite.half_width;
    j["shifted"] = suite.shifted;
    j["rotated"] = suite.rotated;
    return j;
}

SuiteSpec suite_from_json(const nlohmann::json& j) {
    SuiteSpec suite;
    if (j.contains("functions")) {
        suite.functions.clear();
        for (const auto& name : j.at("functions")) {
            suite.functions.push_back(function_from_name(name.get<std::string>()));
        }
    }
    if (j.contains("dims")) {
        suite.dims = j.at("dims").get<std::vector<std::size_t>>();
    }
    suite.seed = j.value("seed", suite.seed);
    suite.half_width = j.value("half_width", suite.half_width);
    suite.shifted = j.value("shifted", suite.shifted);
    suite.rotated = j.value("rotated", suite.rotated);
    return suite;
}

/// Experiment identity for the manifest: everything that determines the
/// records, and nothing that doesn't (output paths, thread counts).
std::string manifest_json(const ExperimentConfig& config, const ProblemSuite& suite) {
    nlohmann::json j;
    j["suite"] = suite_to_json(config.suite);
    j["roster"] = config.roster;
    j["runs"] = config.runs;
    j["budget_multiplier"] = config.budget_multiplier;
    j["master_seed"] = config.master_seed;
    j["trace_points"] = config.trace_points;
    j["epoch_fraction"] = config.epoch_fraction;
    j["ri_alpha"] = config.ri_alpha;
    j["problems"] = nlohmann::json::array();
    for (const Problem& p : suite.problems) {
        j["problems"].push_back({{"id", p.id},
                                 {"function", function_name(p.kind)},
                                 {"dim", p.dim},
                                 {"separable", p.separable},
                                 {"shifted", !p.shift.empty()},
                                 {"rotated", !p.rotation.empty()}});
    }
    return j.dump(2) + "\n";
}

struct TaskKey {
    std::string algorithm;
    std::string problem;
    int run;

    friend bool operator<(const TaskKey& a, const TaskKey& b) {
        if (a.algorithm != b.algorithm) return a.algorithm < b.algorithm;
        if (a.problem != b.problem) return a.problem < b.problem;
        return a.run < b.run;
    }
};

std::string record_to_csv_line(const RunRecord& r) {
    std::string out;
    out += r.algorithm;
    out += ',';
    out += r.problem;
    out += ',';
    out += std::to_string(r.dim);
    out += ',';
    out += std::to_string(r.run);
    out += ',';
    out += std::to_string(r.seed);
    out += ',';
    out += std::to_string(r.evaluations);
    out += ',';
    out += format_g17(r.final_best);
    out += ',';
    out += trace_to_string(r.trace);
    out += '\n';
    return out;
}

}  // namespace

AlgorithmSpec parse_algorithm_id(const std::string& id) {
    AlgorithmSpec spec;
    spec.id = id;
    if (id == "RW") {
        spec.mode = WrapperMode::random_walk;
        return spec;
    }
    auto try_engine = [&](const std::string& name, WrapperMode mode) {
        spec.engine = engine_from_name(name);  // throws on unknown
        spec.mode = mode;
    };
    if (id.size() > 2 && id.compare(0, 2, "RI") == 0) {
        try_engine(id.substr(2), WrapperMode::ri);
    } else if (id.size() > 2 && id.compare(0, 2, "Re") == 0) {
        try_engine(id.substr(2), WrapperMode::random_restart);
    } else {
        try_engine(id, WrapperMode::none);
    }
    return spec;
}

std::vector<std::string> ExperimentConfig::default_roster() {
    std::vector<std::string> roster;
    for (const char* engine : {"cDE", "rcGA", "cPSO", "cBFO"}) {
        roster.push_back(engine);
        roster.push_back(std::string("RI") + engine);
        roster.push_back(std::string("Re") + engine);
    }
    roster.push_back("RW");
    return roster;
}

void ExperimentConfig::validate() const {
    if (roster.empty()) {
        throw std::invalid_argument("ExperimentConfig: roster must be non-empty");
    }
    for (std::size_t i = 0; i < roster.size(); ++i) {
        parse_algorithm_id(roster[i]);  // throws on malformed ids
        for (std::size_t k = i + 1; k < roster.size(); ++k) {
            if (roster[i] == roster[k]) {
                throw std::invalid_argument("ExperimentConfig: duplicate roster id " +
                                            roster[i]);
            }
        }
    }
    if (runs < 1) {
        throw std::invalid_argument("ExperimentConfig: runs must be at least 1");
    }
    if (budget_multiplier == 0) {
        throw std::invalid_argument("ExperimentConfig: budget multiplier must be positive");
    }
    if (threads < 0) {
        throw std::invalid_argument("ExperimentConfig: threads must be non-negative");
    }
    if (trace_points < 0) {
        throw std::invalid_argument("ExperimentConfig: trace_points must be non-negative");
    }
    WrapperConfig wc;
    wc.epoch_fraction = epoch_fraction;
    wc.ri_alpha = ri_alpha;
    wc.validate();
}

ExperimentConfig config_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    ExperimentConfig config;
    if (j.contains("suite")) {
        config.suite = suite_from_json(j.at("suite"));
    }
    if (j.contains("roster")) {
        config.roster = j.at("roster").get<std::vector<std::string>>();
    }
    config.runs = j.value("runs", config.runs);
    config.budget_multiplier = j.value("budget_multiplier", config.budget_multiplier);
    config.master_seed = j.value("master_seed", config.master_seed);
    config.output_dir = j.value("output_dir", config.output_dir);
    config.threads = j.value("threads", config.threads);
    config.trace_points = j.value("trace_points", config.trace_points);
    config.epoch_fraction = j.value("epoch_fraction", config.epoch_fraction);
    config.ri_alpha = j.value("ri_alpha", config.ri_alpha);
    config.validate();
    return config;
}

std::string config_to_json(const ExperimentConfig& config) {
    nlohmann::json j;
    j["suite"] = suite_to_json(config.suite);
    j["roster"] = config.roster;
    j["runs"] = config.runs;
    j["budget_multiplier"] = config.budget_multiplier;
    j["master_seed"] = config.master_seed;
    j["output_dir"] = config.output_dir;
    j["threads"] = config.threads;
    j["trace_points"] = config.trace_points;
    j["epoch_fraction"] = config.epoch_fraction;
    j["ri_alpha"] = config.ri_alpha;
    return j.dump(2) + "\n";
}

ExperimentConfig load_config(const std::string& path) {
    return config_from_json(read_file(path));
}

std::uint64_t derive_seed(std::uint64_t master_seed, const std::string& algorithm,
                          const std::string& problem, int run) {
    std::uint64_t h = fnv1a64(algorithm);
    h = fnv1a64("\x1f", h);
    h = fnv1a64(problem, h);
    h = fnv1a64("\x1f", h);
    h = fnv1a64(std::to_string(run), h);
    return mix64(master_seed ^ mix64(h));
}

RunRecord run_cell(const ExperimentConfig& config, const std::string& algorithm,
                   const Problem& problem, int run) {
    const AlgorithmSpec spec = parse_algorithm_id(algorithm);
    const std::uint64_t seed = derive_seed(config.master_seed, algorithm, problem.id, run);
    const std::uint64_t budget = config.budget_multiplier * problem.dim;
    RandomSource rng(seed);

    WrapperConfig wrapper;
    wrapper.mode = spec.mode;
    wrapper.epoch_fraction = config.epoch_fraction;
    wrapper.ri_alpha = config.ri_alpha;

    const RunResult result =
        run_algorithm(EngineConfig::defaults(spec.engine), problem, budget, wrapper, rng);
    RunRecord record;
    record.algorithm = algorithm;
    record.problem = problem.id;
    record.dim = problem.dim;
    record.run = run;
    record.seed = seed;
    record.evaluations = result.evaluations;
    record.final_best = result.best.fitness;
    if (config.trace_points > 0) {
        // Replay the improvement staircase so checkpoints can be read off it.
        BestTracker staircase;
        const std::vector<double> no_coords;
        for (const TracePoint& tp : result.trace) {
            staircase.observe(tp.evaluation, no_coords, tp.fitness);
        }
        record.trace = downsample_trace(staircase, budget, config.trace_points);
    }
    return record;
}

std::string records_to_csv(const std::vector<RunRecord>& records) {
    std::string out = "algorithm,problem,dim,run,seed,evaluations,final_best,trace\n";
    for (const RunRecord& r : records) {
        out += record_to_csv_line(r);
    }
    return out;
}

std::vector<RunRecord> records_from_csv(const std::string& text) {
    std::vector<RunRecord> records;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        if (first) {
            first = false;
            if (line.rfind("algorithm,", 0) == 0) {
                continue;  // header
            }
        }
        const std::vector<std::string> parts = split(line, ',');
        if (parts.size() != 8) {
            throw std::runtime_error("malformed record line: " + line);
        }
        RunRecord r;
        r.algorithm = parts[0];
        r.problem = parts[1];
        r.dim = static_cast<std::size_t>(std::stoull(parts[2]));
        r.run = std::stoi(parts[3]);
        r.seed = std::stoull(parts[4]);
        r.evaluations = std::stoull(parts[5]);
        r.final_best = std::stod(parts[6]);
        r.trace = trace_from_string(parts[7]);
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<RunRecord> load_records(const std::string& path) {
    return records_from_csv(read_file(path));
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    config.validate();
    const ProblemSuite suite = make_suite(config.suite);

    fs::create_directories(config.output_dir);
    const std::string records_path = (fs::path(config.output_dir) / "records.csv").string();
    const std::string manifest_path = (fs::path(config.output_dir) / "manifest.json").string();
    const std::string journal_path =
        (fs::path(config.output_dir) / "records.partial.csv").string();

    write_file_atomic(manifest_path, manifest_json(config, suite));

    struct Task {
        std::size_t algorithm;  // roster index
        std::size_t problem;    // suite index
        int run;
    };
    std::vector<Task> tasks;
    for (std::size_t a = 0; a < config.roster.size(); ++a) {
        for (std::size_t p = 0; p < suite.problems.size(); ++p) {
            for (int run = 0; run < config.runs; ++run) {
                tasks.push_back({a, p, run});
            }
        }
    }

    // Previously journaled cells (and any complete records file) are reused
    // verbatim instead of being recomputed.
    std::map<TaskKey, RunRecord> done;
    for (const std::string& path : {records_path, journal_path}) {
        if (fs::exists(path)) {
            for (RunRecord& r : load_records(path)) {
                done.emplace(TaskKey{r.algorithm, r.problem, r.run}, std::move(r));
            }
        }
    }

    std::vector<RunRecord> slots(tasks.size());
    std::vector<char> filled(tasks.size(), 0);
    std::size_t resumed = 0;
    std::vector<std::size_t> pending;
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        const TaskKey key{config.roster[tasks[t].algorithm],
                          suite.problems[tasks[t].problem].id, tasks[t].run};
        const auto it = done.find(key);
        if (it != done.end()) {
            slots[t] = it->second;
            filled[t] = 1;
            ++resumed;
        } else {
            pending.push_back(t);
        }
    }

    std::ofstream journal(journal_path, std::ios::binary | std::ios::app);
    if (!journal) {
        throw std::runtime_error("cannot open journal " + journal_path);
    }
    std::mutex journal_mutex;
    std::atomic<std::size_t> next{0};
    std::vector<std::string> failures;

    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= pending.size()) {
                return;
            }
            const std::size_t t = pending[i];
            const Task& task = tasks[t];
            const std::string& algorithm = config.roster[task.algorithm];
            const Problem& problem = suite.problems[task.problem];
            try {
                RunRecord record = run_cell(config, algorithm, problem, task.run);
                {
                    const std::lock_guard<std::mutex> lock(journal_mutex);
                    journal << record_to_csv_line(record);
                    journal.flush();
                }
                slots[t] = std::move(record);
                filled[t] = 1;
            } catch (const std::exception& e) {
                const std::lock_guard<std::mutex> lock(journal_mutex);
                failures.push_back(algorithm + "/" + problem.id + "/run" +
                                   std::to_string(task.run) + ": " + e.what());
            }
        }
    };

    unsigned thread_count = config.threads > 0
                                ? static_cast<unsigned>(config.threads)
                                : std::max(1u, std::thread::hardware_concurrency());
    thread_count = std::min<unsigned>(
        thread_count, static_cast<unsigned>(std::max<std::size_t>(1, pending.size())));
    if (thread_count <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < thread_count; ++i) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    journal.close();

    if (!failures.empty()) {
        std::string message = std::to_string(failures.size()) +
                              " cell(s) failed (completed cells are journaled):";
        for (const std::string& f : failures) {
            message += "\n  " + f;
        }
        throw std::runtime_error(message);
    }

    ExperimentResult result;
    result.records.reserve(tasks.size());
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        result.records.push_back(std::move(slots[t]));
    }
    result.executed = pending.size();
    result.resumed = resumed;
    result.records_path = records_path;
    result.manifest_path = manifest_path;

    write_file_atomic(records_path, records_to_csv(result.records));
    fs::remove(journal_path);
    return result;
}

Summary summarize(const std::vector<RunRecord>& records) {
    if (records.empty()) {
        throw std::invalid_argument("summarize: no records");
    }
    std::vector<std::string> algorithms;
    std::vector<std::string> problems;
    std::map<std::string, std::size_t> dims;
    for (const RunRecord& r : records) {
        if (std::find(algorithms.begin(), algorithms.end(), r.algorithm) == algorithms.end()) {
            algorithms.push_back(r.algorithm);
        }
        if (std::find(problems.begin(), problems.end(), r.problem) == problems.end()) {
            problems.push_back(r.problem);
            dims[r.problem] = r.dim;
        }
    }
    std::map<std::pair<std::string, std::string>, std::vector<double>> cells;
    for (const RunRecord& r : records) {
        cells[{r.algorithm, r.problem}].push_back(r.final_best);
    }
    std::size_t expected = 0;
    for (const auto& [key, values] : cells) {
        expected = std::max(expected, values.size());
    }
    std::vector<std::string> missing;
    for (const auto& a : algorithms) {
        for (const auto& p : problems) {
            const auto it = cells.find({a, p});
            const std::size_t have = it == cells.end() ? 0 : it->second.size();
            if (have < expected) {
                missing.push_back(a + "/" + p + " (" + std::to_string(have) + "/" +
                                  std::to_string(expected) + " runs)");
            }
        }
    }
    if (!missing.empty()) {
        std::string message = "summarize: incomplete cell coverage:";
        const std::size_t shown = std::min<std::size_t>(missing.size(), 20);
        for (std::size_t i = 0; i < shown; ++i) {
            message += "\n  " + missing[i];
        }
        if (shown < missing.size()) {
            message += "\n  ... and " + std::to_string(missing.size() - shown) + " more";
        }
        throw std::invalid_argument(message);
    }

    Summary summary;
    summary.table.algorithms = algorithms;
    summary.table.problems = problems;
    summary.table.means.assign(algorithms.size(),
                               std::vector<double>(problems.size(), 0.0));
    for (std::size_t a = 0; a < algorithms.size(); ++a) {
        for (std::size_t p = 0; p < problems.size(); ++p) {
            std::vector<double>& values = cells[{algorithms[a], problems[p]}];
            const std::size_t n = values.size();
            double mean = 0.0;
            for (double v : values) {
                mean += v;
            }
            mean /= static_cast<double>(n);
            double var = 0.0;
            for (double v : values) {
                var += (v - mean) * (v - mean);
            }
            const double stddev = n > 1 ? std::sqrt(var / static_cast<double>(n - 1)) : 0.0;
            std::sort(values.begin(), values.end());
            const double median = n % 2 == 1
                                      ? values[n / 2]
                                      : 0.5 * (values[n / 2 - 1] + values[n / 2]);
            summary.table.means[a][p] = mean;
            summary.cells.push_back({algorithms[a], problems[p], dims[problems[p]],
                                     static_cast<int>(n), mean, stddev, median});
        }
    }
    return summary;
}

std::string summary_to_csv(const Summary& summary) {
    std::string out = "algorithm,problem,dim,runs,mean,std,median\n";
    for (const CellStats& c : summary.cells) {
        out += c.algorithm + ',' + c.problem + ',' + std::to_string(c.dim) + ',' +
               std::to_string(c.runs) + ',' + format_g17(c.mean) + ',' +
               format_g17(c.stddev) + ',' + format_g17(c.median) + '\n';
    }
    return out;
}

std::vector<RankReport> report_by_engine(const ResultTable& table, double delta) {
    std::vector<RankReport> reports;
    for (const char* engine : {"cDE", "rcGA", "cPSO", "cBFO"}) {
        std::vector<std::string> group;
        for (const std::string& prefix : {std::string(""), std::string("RI"),
                                          std::string("Re")}) {
            const std::string id = prefix + engine;
            if (std::find(table.algorithms.begin(), table.algorithms.end(), id) !=
                table.algorithms.end()) {
                group.push_back(id);
            }
        }
        if (group.size() < 2) {
            continue;
        }
        const ResultTable sub = table.subset_algorithms(group);
        std::string reference = "RI" + std::string(engine);
        if (std::find(group.begin(), group.end(), reference) == group.end()) {
            const std::vector<double> scores = score_problems(sub);
            reference = group[static_cast<std::size_t>(
                std::max_element(scores.begin(), scores.end()) - scores.begin())];
        }
        reports.push_back(rank_table(sub, reference, delta));
    }
    return reports;
}

RankReport report_all(const ResultTable& table, const std::string& reference, double delta) {
    std::string ref = reference;
    if (ref.empty()) {
        const std::vector<double> scores = score_problems(table);
        ref = table.algorithms[static_cast<std::size_t>(
            std::max_element(scores.begin(), scores.end()) - scores.begin())];
    }
    return rank_table(table, ref, delta);
}

}  // namespace ccopt
