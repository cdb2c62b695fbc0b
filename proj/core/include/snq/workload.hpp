#pragma once

#include <array>
#include <optional>
#include <span>

#include "snq/query_file.hpp"

namespace snq {

struct RunTimings {
    std::array<double, 4> seconds_by_type{};
    std::array<std::size_t, 4> count_by_type{};
    double wall_seconds = 0;
};

class WorkloadError : public Error {
public:
    WorkloadError(std::size_t line, const std::string& what)
        : Error("query at line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

// Evaluates every query; results are stored by input index, so the output
// is identical for any worker count.
std::vector<QueryResult> run_workload(const SocialNetwork& net, const Workload& workload,
                                      unsigned worker_count, RunTimings* timings = nullptr);

struct VerificationReport {
    struct Mismatch {
        std::size_t line = 0;  // 1-based
        std::string expected;
        std::string actual;
    };

    std::size_t compared = 0;
    std::size_t matched = 0;
    std::vector<Mismatch> mismatches;
    // (actual count, expected count) when the files disagree in length
    std::optional<std::pair<std::size_t, std::size_t>> line_count_mismatch;

    bool ok() const { return mismatches.empty() && !line_count_mismatch; }
};

// Compares actual answer lines against an expected-answers file. Expected
// lines lose everything from the first '%' (debug comments) and trailing
// whitespace before the exact comparison.
VerificationReport verify_answers(std::span<const QueryResult> actual,
                                  const std::filesystem::path& expected_file);

}  // namespace snq
