#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "snq/common.hpp"
#include "snq/social_network.hpp"

namespace snq {

// query1(p1, p2, x): shortest knows-distance between two persons over the
// edges where both directed reply counts exceed x.
struct Query1 {
    SparseId person1 = 0;
    SparseId person2 = 0;
    std::int64_t reply_threshold = -1;
};

// query2(k, d): top-k tags by largest component among interested persons
// born on day d or later.
struct Query2 {
    std::uint32_t k = 1;
    Date min_birthday;
};

// query3(k, h, p): top-k similar person pairs in place p within h hops.
struct Query3 {
    std::uint32_t k = 1;
    std::uint32_t max_hops = 1;
    std::string place;
};

// query4(k, t): top-k persons by closeness centrality among members of
// forums with tag t.
struct Query4 {
    std::uint32_t k = 1;
    std::string tag;
};

using QueryInstance = std::variant<Query1, Query2, Query3, Query4>;

// One contest answer line: no trailing whitespace, no comment.
using QueryResult = std::string;

QueryResult query1(const SocialNetwork& net, SparseId p1, SparseId p2,
                   std::int64_t reply_threshold);
QueryResult query2(const SocialNetwork& net, std::uint32_t k, Date min_birthday);
QueryResult query3(const SocialNetwork& net, std::uint32_t k, std::uint32_t max_hops,
                   std::string_view place_name);
QueryResult query4(const SocialNetwork& net, std::uint32_t k, std::string_view tag_name);

QueryResult evaluate(const SocialNetwork& net, const QueryInstance& query);

// 1-based query type of a parsed instance (matches the queryN file syntax).
int query_type(const QueryInstance& query);

}  // namespace snq
