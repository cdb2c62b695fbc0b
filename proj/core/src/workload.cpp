#include "snq/workload.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <thread>

namespace snq {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

std::vector<QueryResult> run_workload(const SocialNetwork& net, const Workload& workload,
                                      unsigned worker_count, RunTimings* timings) {
    const auto wall_start = Clock::now();
    std::vector<QueryResult> results(workload.size());

    std::array<double, 4> type_seconds{};
    std::array<std::size_t, 4> type_counts{};

    std::mutex failure_guard;
    std::optional<std::size_t> failed_index;
    std::exception_ptr failure;

    auto evaluate_one = [&](std::size_t i, std::array<double, 4>& local_seconds) {
        const auto& query = workload.queries[i];
        const int type = query_type(query);
        const auto start = Clock::now();
        results[i] = evaluate(net, query);
        local_seconds[type - 1] += seconds_since(start);
    };

    if (worker_count <= 1) {
        for (std::size_t i = 0; i < workload.size(); ++i) {
            try {
                evaluate_one(i, type_seconds);
            } catch (const std::exception& e) {
                throw WorkloadError(workload.lines[i], e.what());
            }
        }
    } else {
        std::atomic<std::size_t> cursor{0};
        const unsigned threads = std::min<std::size_t>(worker_count, std::max<std::size_t>(workload.size(), 1));
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                std::array<double, 4> local_seconds{};
                while (true) {
                    const std::size_t i = cursor.fetch_add(1);
                    if (i >= workload.size()) break;
                    try {
                        evaluate_one(i, local_seconds);
                    } catch (...) {
                        std::lock_guard lock(failure_guard);
                        if (!failed_index || i < *failed_index) {
                            failed_index = i;
                            failure = std::current_exception();
                        }
                    }
                }
                std::lock_guard lock(failure_guard);
                for (int q = 0; q < 4; ++q) type_seconds[q] += local_seconds[q];
            });
        }
        for (auto& th : pool) th.join();

        if (failure) {
            try {
                std::rethrow_exception(failure);
            } catch (const std::exception& e) {
                throw WorkloadError(workload.lines[*failed_index], e.what());
            }
        }
    }

    for (const auto& query : workload.queries) ++type_counts[query_type(query) - 1];

    if (timings) {
        timings->seconds_by_type = type_seconds;
        timings->count_by_type = type_counts;
        timings->wall_seconds = seconds_since(wall_start);
    }
    return results;
}

VerificationReport verify_answers(std::span<const QueryResult> actual,
                                  const std::filesystem::path& expected_file) {
    std::ifstream in(expected_file, std::ios::binary);
    if (!in) throw IoError("cannot open " + expected_file.string());

    std::vector<std::string> expected;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto comment = line.find('%'); comment != std::string::npos)
            line.resize(comment);
        while (!line.empty() &&
               (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.pop_back();
        expected.push_back(line);
    }
    if (in.bad()) throw IoError("read failure: " + expected_file.string());

    VerificationReport report;
    if (actual.size() != expected.size())
        report.line_count_mismatch = {actual.size(), expected.size()};

    report.compared = std::min(actual.size(), expected.size());
    for (std::size_t i = 0; i < report.compared; ++i) {
        if (actual[i] == expected[i])
            ++report.matched;
        else
            report.mismatches.push_back({i + 1, expected[i], actual[i]});
    }
    return report;
}

}  // namespace snq
