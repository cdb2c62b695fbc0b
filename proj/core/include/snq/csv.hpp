#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace snq {

// One parsed pipe-delimited file, projected to the requested columns.
// Rows hold raw field strings; the format has no quoting or escaping.
struct CsvTable {
    std::string source;  // originating file, for error messages
    std::vector<std::string> column_names;
    std::vector<std::vector<std::string>> rows;

    std::size_t row_count() const { return rows.size(); }
};

// Reads a pipe-delimited file whose first line is the column header and
// projects every row to `required_columns`, in request order. Extra columns
// are ignored. A name may be requested more than once; its occurrences are
// matched against successive header occurrences of the same name, which is
// how the src/dst columns of edge files (e.g. `Person.id|Person.id`) are
// addressed.
//
// Throws IoError, MissingColumnError, or RaggedRowError.
CsvTable parse_csv(const std::filesystem::path& path,
                   const std::vector<std::string>& required_columns);

}  // namespace snq
