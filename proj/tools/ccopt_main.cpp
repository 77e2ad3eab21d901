#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ccopt/experiment.hpp"

namespace {

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << content;
}

int cmd_run(const std::string& config_path, const std::string& output_override,
            int threads_override) {
    ccopt::ExperimentConfig config = ccopt::load_config(config_path);
    if (!output_override.empty()) {
        config.output_dir = output_override;
    }
    if (threads_override >= 0) {
        config.threads = threads_override;
    }
    const ccopt::ExperimentResult result = ccopt::run_experiment(config);
    std::cout << result.records.size() << " records (" << result.executed << " executed, "
              << result.resumed << " resumed)\n"
              << "records:  " << result.records_path << "\n"
              << "manifest: " << result.manifest_path << "\n";
    return 0;
}

int cmd_summarize(const std::string& records_path, const std::string& out_path) {
    const auto records = ccopt::load_records(records_path);
    const ccopt::Summary summary = ccopt::summarize(records);
    const std::string csv = ccopt::summary_to_csv(summary);
    if (out_path.empty()) {
        std::cout << csv;
    } else {
        write_text(out_path, csv);
        std::cout << summary.cells.size() << " cells -> " << out_path << "\n";
    }
    return 0;
}

int cmd_report(const std::string& records_path, bool by_engine, bool all,
               const std::string& reference, double delta, const std::string& json_path) {
    const auto records = ccopt::load_records(records_path);
    const ccopt::Summary summary = ccopt::summarize(records);
    std::vector<ccopt::RankReport> reports;
    if (by_engine) {
        reports = ccopt::report_by_engine(summary.table, delta);
    } else {
        reports.push_back(ccopt::report_all(summary.table, reference, delta));
    }
    for (const auto& report : reports) {
        std::cout << ccopt::emit_rank_text(report) << "\n";
    }
    if (!json_path.empty()) {
        std::string json = "[\n";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            json += ccopt::emit_rank_json(reports[i]);
            if (i + 1 < reports.size()) {
                json += ",";
            }
            json += "\n";
        }
        json += "]\n";
        write_text(json_path, json);
    }
    return 0;
}

int cmd_list_problems(const std::string& config_path) {
    const ccopt::ExperimentConfig config = ccopt::load_config(config_path);
    const ccopt::ProblemSuite suite = ccopt::make_suite(config.suite);
    std::printf("%-24s %-14s %5s %10s %6s %6s\n", "id", "function", "dim", "separable",
                "shift", "rot");
    for (const auto& p : suite.problems) {
        std::printf("%-24s %-14s %5zu %10s %6s %6s\n", p.id.c_str(),
                    ccopt::function_name(p.kind), p.dim, p.separable ? "yes" : "no",
                    p.shift.empty() ? "no" : "yes", p.rotation.empty() ? "no" : "yes");
    }
    std::printf("%zu problems, budget %llu x dim, %zu roster algorithms, %d runs\n",
                suite.problems.size(),
                static_cast<unsigned long long>(config.budget_multiplier),
                config.roster.size(), config.runs);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Compact optimization experiment harness"};
    app.require_subcommand(1);

    std::string config_path;
    std::string records_path;
    std::string output_override;
    std::string out_path;
    std::string reference;
    std::string json_path;
    int threads_override = -1;
    double delta = 0.05;
    bool by_engine = false;
    bool all = false;

    auto* run = app.add_subcommand("run", "Execute an experiment from a config file");
    run->add_option("config", config_path, "Experiment config (JSON)")->required();
    run->add_option("--output", output_override, "Override the config's output directory");
    run->add_option("--threads", threads_override, "Override the worker thread count");

    auto* summarize = app.add_subcommand("summarize", "Aggregate records into cell statistics");
    summarize->add_option("records", records_path, "records.csv from a run")->required();
    summarize->add_option("--out", out_path, "Write CSV here instead of stdout");

    auto* report = app.add_subcommand("report", "Holm-Bonferroni rank tables");
    report->add_option("records", records_path, "records.csv from a run")->required();
    auto* flag_group = report->add_option_group("grouping");
    flag_group->add_flag("--group-by-engine", by_engine,
                         "One three-way table per base engine");
    flag_group->add_flag("--all", all, "Single table over every algorithm");
    report->add_option("--reference", reference,
                       "Reference algorithm (default: highest average score)");
    report->add_option("--delta", delta, "Confidence threshold (default 0.05)");
    report->add_option("--json", json_path, "Also write machine-readable reports here");

    auto* list = app.add_subcommand("list-problems", "Show the benchmark suite of a config");
    list->add_option("config", config_path, "Experiment config (JSON)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            return cmd_run(config_path, output_override, threads_override);
        }
        if (summarize->parsed()) {
            return cmd_summarize(records_path, out_path);
        }
        if (report->parsed()) {
            if (by_engine && all) {
                throw std::invalid_argument("--group-by-engine and --all are exclusive");
            }
            return cmd_report(records_path, by_engine, all, reference, delta, json_path);
        }
        if (list->parsed()) {
            return cmd_list_problems(config_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
