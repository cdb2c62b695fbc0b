#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "snq/queries.hpp"

namespace snq {

// Query calls in file order; results must line up index for index.
struct Workload {
    std::vector<QueryInstance> queries;
    std::vector<std::size_t> lines;  // 1-based source line per query

    std::size_t size() const { return queries.size(); }
};

// One `queryN(arg, arg[, arg])` call. The final argument is taken verbatim
// up to the closing parenthesis (names may contain any characters except a
// newline); other arguments are trimmed integers or a yyyy-mm-dd date.
// Throws QuerySyntaxError / UnknownQueryTypeError.
QueryInstance parse_query_line(std::string_view line, std::size_t line_no);

// Parses every non-empty line of the file.
Workload parse_query_file(const std::filesystem::path& path);

// Inverse of parse_query_line.
std::string format_query(const QueryInstance& query);

}  // namespace snq
