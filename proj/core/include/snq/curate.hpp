#pragma once

#include <vector>

#include "snq/queries.hpp"

namespace snq {

// Representative query parameters drawn from the loaded data set instead of
// uniform sampling. For query 1 the categories are the cartesian product of
// the subgraph axis (x = -1, a low x, a high x) and the reachability axis
// (unreachable, reachable in <= 2 hops, reachable in >= 4 hops); membership
// is verified by evaluating each sampled pair. Queries 2-4 sample
// k in {3, 5, 10} with dates and names drawn from the data.
struct CurationResult {
    std::vector<QueryInstance> queries;
    // categories the data set could not populate, e.g. "x=none/unreachable"
    // on a connected knows graph
    std::vector<std::string> unsatisfiable;
};

CurationResult curate_parameters(const SocialNetwork& net, int query_type,
                                 std::uint32_t per_category, std::uint64_t seed = 0x5139);

}  // namespace snq
