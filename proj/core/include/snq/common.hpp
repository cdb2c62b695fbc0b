#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace snq {

// Sparse ids are the raw 64-bit identifiers from the data files; dense ids
// are consecutive indices in [0, n) assigned at load time.
using SparseId = std::uint64_t;
using DenseId = std::uint32_t;

inline constexpr DenseId kInvalidDense = UINT32_MAX;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

class MissingColumnError : public Error {
public:
    MissingColumnError(const std::string& file, const std::string& column)
        : Error(file + ": missing column '" + column + "'"), column(column) {}
    std::string column;
};

class RaggedRowError : public Error {
public:
    RaggedRowError(const std::string& file, std::size_t line)
        : Error(file + ":" + std::to_string(line) + ": row has wrong field count"), line(line) {}
    std::size_t line;
};

class DanglingReferenceError : public Error {
public:
    DanglingReferenceError(const std::string& file, std::size_t line, const std::string& what)
        : Error(file + ":" + std::to_string(line) + ": " + what), file(file), line(line) {}
    std::string file;
    std::size_t line;
};

class DataError : public Error {
public:
    explicit DataError(const std::string& what) : Error(what) {}
};

class EndpointOutOfRangeError : public Error {
public:
    explicit EndpointOutOfRangeError(const std::string& what) : Error(what) {}
};

class UnknownPersonError : public Error {
public:
    explicit UnknownPersonError(SparseId id)
        : Error("unknown person id " + std::to_string(id)), id(id) {}
    SparseId id;
};

class QuerySyntaxError : public Error {
public:
    QuerySyntaxError(std::size_t line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line(line) {}
    std::size_t line;
};

class UnknownQueryTypeError : public QuerySyntaxError {
public:
    UnknownQueryTypeError(std::size_t line, const std::string& name)
        : QuerySyntaxError(line, "unknown query type '" + name + "'") {}
};

class CategoryUnsatisfiableError : public Error {
public:
    explicit CategoryUnsatisfiableError(const std::string& category)
        : Error("no parameters found for category: " + category), category(category) {}
    std::string category;
};

// Calendar date. Comparison is lexicographic on (year, month, day).
struct Date {
    std::uint16_t year = 0;
    std::uint8_t month = 0;
    std::uint8_t day = 0;

    auto operator<=>(const Date&) const = default;
};

// Parses `yyyy-mm-dd` and validates it as a Gregorian date.
Date parse_date(std::string_view text);

std::string format_date(Date d);

}  // namespace snq
