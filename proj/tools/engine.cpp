// Command-line front end: load a social-network dump, evaluate a query file
// (optionally verifying against expected answers), or curate representative
// query parameters from the data.

#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "snq/curate.hpp"
#include "snq/queries.hpp"
#include "snq/workload.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

int run_command(const std::string& data_dir, const std::string& query_file,
                const std::string& answers_file, const std::string& out_file,
                const std::string& summary_file, unsigned threads) {
    const auto wall_start = Clock::now();

    const auto load_start = Clock::now();
    const snq::SocialNetwork net = snq::load_directory(data_dir);
    const double load_seconds = seconds_since(load_start);

    const snq::Workload workload = snq::parse_query_file(query_file);

    snq::RunTimings timings;
    const auto results = snq::run_workload(net, workload, threads, &timings);

    if (out_file.empty()) {
        for (const auto& line : results) std::cout << line << "\n";
    } else {
        std::ofstream out(out_file, std::ios::binary);
        if (!out) throw snq::IoError("cannot create " + out_file);
        for (const auto& line : results) out << line << "\n";
    }

    std::optional<snq::VerificationReport> report;
    if (!answers_file.empty()) {
        report = snq::verify_answers(results, answers_file);
        if (report->line_count_mismatch) {
            const auto [actual, expected] = *report->line_count_mismatch;
            std::cerr << "verification: line count mismatch (got " << actual << ", expected "
                      << expected << ")\n";
        }
        for (const auto& mm : report->mismatches)
            std::cerr << "verification: line " << mm.line << ": got '" << mm.actual
                      << "', expected '" << mm.expected << "'\n";
        std::cerr << "verification: " << report->matched << "/" << report->compared
                  << " lines match\n";
    }

    const double wall_seconds = seconds_since(wall_start);
    std::cerr << "load: " << load_seconds << " s (" << net.person_count() << " persons, "
              << net.knows.edge_count() / 2 << " knows edges)\n";
    for (int q = 0; q < 4; ++q) {
        if (timings.count_by_type[q] == 0) continue;
        std::cerr << "query" << q + 1 << ": " << timings.count_by_type[q] << " queries in "
                  << timings.seconds_by_type[q] << " s\n";
    }
    std::cerr << "evaluation: " << timings.wall_seconds << " s with " << threads
              << " worker(s)\n";
    std::cerr << "total (including load): " << wall_seconds << " s\n";

    if (!summary_file.empty()) {
        nlohmann::json summary;
        summary["load_seconds"] = load_seconds;
        summary["evaluation_seconds"] = timings.wall_seconds;
        summary["wall_seconds"] = wall_seconds;
        summary["threads"] = threads;
        for (int q = 0; q < 4; ++q) {
            const std::string key = "query" + std::to_string(q + 1);
            summary["queries"][key]["count"] = timings.count_by_type[q];
            summary["queries"][key]["seconds"] = timings.seconds_by_type[q];
        }
        if (report) {
            summary["verification"]["matched"] = report->matched;
            summary["verification"]["mismatches"] = report->mismatches.size();
        }
        std::ofstream out(summary_file, std::ios::binary);
        if (!out) throw snq::IoError("cannot create " + summary_file);
        out << summary.dump(2) << "\n";
    }

    return report && !report->ok() ? 1 : 0;
}

int curate_command(const std::string& data_dir, int query_type, unsigned per_category,
                   const std::string& out_file, std::uint64_t seed) {
    const snq::SocialNetwork net = snq::load_directory(data_dir);
    const auto result = snq::curate_parameters(net, query_type, per_category, seed);

    for (const auto& category : result.unsatisfiable)
        std::cerr << "warning: no parameters found for category " << category << "\n";

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_file.empty()) {
        file.open(out_file, std::ios::binary);
        if (!file) throw snq::IoError("cannot create " + out_file);
        out = &file;
    }
    for (const auto& query : result.queries) *out << snq::format_query(query) << "\n";
    std::cerr << result.queries.size() << " queries written\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Social-network graph query engine"};
    app.require_subcommand(1);

    std::string data_dir, query_file, answers_file, out_file, summary_file;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());

    auto* run = app.add_subcommand("run", "evaluate a query file against a data directory");
    run->add_option("--data", data_dir, "directory with the CSV dump")->required();
    run->add_option("--queries", query_file, "query file, one queryN(...) per line")->required();
    run->add_option("--answers", answers_file, "expected answers to verify against");
    run->add_option("--out", out_file, "answer output file (default: stdout)");
    run->add_option("--summary", summary_file, "machine-readable timing summary (JSON)");
    run->add_option("--threads", threads, "worker count")->check(CLI::PositiveNumber);

    int query_type = 1;
    unsigned per_category = 1;
    std::uint64_t seed = 0x5139;
    auto* curate = app.add_subcommand("curate", "sample representative query parameters");
    curate->add_option("--data", data_dir, "directory with the CSV dump")->required();
    curate->add_option("--query-type", query_type, "query type 1..4")->required();
    curate->add_option("--per-category", per_category, "samples per category")->required();
    curate->add_option("--out", out_file, "query file to write (default: stdout)");
    curate->add_option("--seed", seed, "sampling seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed())
            return run_command(data_dir, query_file, answers_file, out_file, summary_file,
                               threads);
        return curate_command(data_dir, query_type, per_category, out_file, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
