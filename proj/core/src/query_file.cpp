#include "snq/query_file.hpp"

#include <charconv>
#include <fstream>

namespace snq {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

// Splits on commas into exactly `count` arguments; the last one is greedy so
// a trailing name argument may contain commas.
std::vector<std::string_view> split_args(std::string_view body, std::size_t count,
                                         std::size_t line_no) {
    std::vector<std::string_view> args;
    std::string_view rest = body;
    for (std::size_t i = 0; i + 1 < count; ++i) {
        const auto comma = rest.find(',');
        if (comma == std::string_view::npos)
            throw QuerySyntaxError(line_no, "expected " + std::to_string(count) + " arguments");
        args.push_back(trim(rest.substr(0, comma)));
        rest.remove_prefix(comma + 1);
    }
    args.push_back(trim(rest));
    return args;
}

std::int64_t parse_int(std::string_view field, std::size_t line_no) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
        throw QuerySyntaxError(line_no, "not an integer: '" + std::string(field) + "'");
    return value;
}

std::uint32_t parse_positive(std::string_view field, const char* what, std::size_t line_no) {
    const std::int64_t value = parse_int(field, line_no);
    if (value < 1 || value > UINT32_MAX)
        throw QuerySyntaxError(line_no, std::string(what) + " must be a positive integer");
    return static_cast<std::uint32_t>(value);
}

Date parse_date_arg(std::string_view field, std::size_t line_no) {
    try {
        return parse_date(field);
    } catch (const DataError& e) {
        throw QuerySyntaxError(line_no, e.what());
    }
}

}  // namespace

QueryInstance parse_query_line(std::string_view line, std::size_t line_no) {
    const std::string_view text = trim(line);
    const auto open = text.find('(');
    if (open == std::string_view::npos || text.back() != ')')
        throw QuerySyntaxError(line_no, "expected queryN(...)");
    const std::string_view name = trim(text.substr(0, open));
    const std::string_view body = text.substr(open + 1, text.size() - open - 2);

    if (name == "query1") {
        const auto args = split_args(body, 3, line_no);
        const std::int64_t threshold = parse_int(args[2], line_no);
        if (threshold < -1) throw QuerySyntaxError(line_no, "x must be >= -1");
        return Query1{static_cast<SparseId>(parse_int(args[0], line_no)),
                      static_cast<SparseId>(parse_int(args[1], line_no)), threshold};
    }
    if (name == "query2") {
        const auto args = split_args(body, 2, line_no);
        return Query2{parse_positive(args[0], "k", line_no), parse_date_arg(args[1], line_no)};
    }
    if (name == "query3") {
        const auto args = split_args(body, 3, line_no);
        return Query3{parse_positive(args[0], "k", line_no),
                      parse_positive(args[1], "h", line_no), std::string(args[2])};
    }
    if (name == "query4") {
        const auto args = split_args(body, 2, line_no);
        return Query4{parse_positive(args[0], "k", line_no), std::string(args[1])};
    }
    throw UnknownQueryTypeError(line_no, std::string(name));
}

Workload parse_query_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());

    Workload workload;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        workload.queries.push_back(parse_query_line(line, line_no));
        workload.lines.push_back(line_no);
    }
    if (in.bad()) throw IoError("read failure: " + path.string());
    return workload;
}

std::string format_query(const QueryInstance& query) {
    return std::visit(
        [](const auto& q) -> std::string {
            using T = std::decay_t<decltype(q)>;
            if constexpr (std::is_same_v<T, Query1>)
                return "query1(" + std::to_string(q.person1) + ", " + std::to_string(q.person2) +
                       ", " + std::to_string(q.reply_threshold) + ")";
            else if constexpr (std::is_same_v<T, Query2>)
                return "query2(" + std::to_string(q.k) + ", " + format_date(q.min_birthday) + ")";
            else if constexpr (std::is_same_v<T, Query3>)
                return "query3(" + std::to_string(q.k) + ", " + std::to_string(q.max_hops) +
                       ", " + q.place + ")";
            else
                return "query4(" + std::to_string(q.k) + ", " + q.tag + ")";
        },
        query);
}

}  // namespace snq
