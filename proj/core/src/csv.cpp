#include "snq/csv.hpp"

#include <charconv>
#include <fstream>

#include "snq/common.hpp"

namespace snq {

namespace {

std::vector<std::string_view> split_pipe(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find('|', start);
        if (pos == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

CsvTable parse_csv(const std::filesystem::path& path,
                   const std::vector<std::string>& required_columns) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());

    std::string line;
    if (!std::getline(in, line)) throw IoError("empty file: " + path.string());
    strip_cr(line);

    const auto header = split_pipe(line);

    // Map each requested column to a header position. Repeated requests of
    // the same name consume successive header occurrences.
    std::vector<std::size_t> projection;
    projection.reserve(required_columns.size());
    std::vector<bool> taken(header.size(), false);
    for (const auto& want : required_columns) {
        std::size_t found = header.size();
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (!taken[i] && header[i] == want) {
                found = i;
                break;
            }
        }
        if (found == header.size()) throw MissingColumnError(path.string(), want);
        taken[found] = true;
        projection.push_back(found);
    }

    CsvTable table;
    table.source = path.string();
    table.column_names = required_columns;

    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        strip_cr(line);
        if (line.empty()) continue;
        const auto fields = split_pipe(line);
        if (fields.size() != header.size()) throw RaggedRowError(path.string(), line_no);
        std::vector<std::string> row;
        row.reserve(projection.size());
        for (auto idx : projection) row.emplace_back(fields[idx]);
        table.rows.push_back(std::move(row));
    }
    if (in.bad()) throw IoError("read failure: " + path.string());
    return table;
}

Date parse_date(std::string_view text) {
    auto fail = [&] { throw DataError("invalid date '" + std::string(text) + "'"); };
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') fail();

    auto parse_field = [&](std::string_view s) -> unsigned {
        unsigned value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc() || ptr != s.data() + s.size()) fail();
        return value;
    };

    const unsigned year = parse_field(text.substr(0, 4));
    const unsigned month = parse_field(text.substr(5, 2));
    const unsigned day = parse_field(text.substr(8, 2));

    static constexpr unsigned days_in_month[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month < 1 || month > 12) fail();
    unsigned max_day = days_in_month[month - 1];
    const bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
    if (month == 2 && leap) max_day = 29;
    if (day < 1 || day > max_day) fail();

    return Date{static_cast<std::uint16_t>(year), static_cast<std::uint8_t>(month),
                static_cast<std::uint8_t>(day)};
}

std::string format_date(Date d) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04u-%02u-%02u", unsigned(d.year), unsigned(d.month),
                  unsigned(d.day));
    return buf;
}

}  // namespace snq
