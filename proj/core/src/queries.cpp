#include "snq/queries.hpp"

#include <algorithm>
#include <cassert>

#include "snq/kernels.hpp"

namespace snq {

namespace {

// Closeness ordering without floating point: with r = (|C(p)|-1)^2 and
// s = s(p), CCV(a) < CCV(b) iff r_a * s_b < r_b * s_a (the shared (n-1)
// divisor cancels). s = 0 means an isolated node with centrality 0.
struct CentralityScore {
    std::uint64_t reach_sq = 0;
    std::uint64_t distance_sum = 0;

    friend bool operator<(const CentralityScore& a, const CentralityScore& b) {
        if (a.distance_sum == 0) return b.distance_sum != 0;
        if (b.distance_sum == 0) return false;
        return static_cast<unsigned __int128>(a.reach_sq) * b.distance_sum <
               static_cast<unsigned __int128>(b.reach_sq) * a.distance_sum;
    }
    friend bool operator>(const CentralityScore& a, const CentralityScore& b) { return b < a; }
    friend bool operator==(const CentralityScore& a, const CentralityScore& b) {
        return !(a < b) && !(b < a);
    }
    friend bool operator!=(const CentralityScore& a, const CentralityScore& b) {
        return !(a == b);
    }
};

std::string join_tokens(const std::vector<std::string>& tokens) {
    std::string line;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i > 0) line += ' ';
        line += tokens[i];
    }
    return line;
}

// Largest connected component among `members`; the two scratch masks must
// come in clear and are left clear.
std::uint32_t largest_component_size(const Csr& g, const std::vector<DenseId>& members,
                                     VertexMask& in_set, VertexMask& visited,
                                     std::vector<DenseId>& queue) {
    for (DenseId p : members) in_set.set(p);
    std::uint32_t best = 0;
    for (DenseId seed : members) {
        if (visited.test(seed)) continue;
        std::uint32_t count = 0;
        queue.clear();
        queue.push_back(seed);
        visited.set(seed);
        while (!queue.empty()) {
            const DenseId v = queue.back();
            queue.pop_back();
            ++count;
            for (DenseId u : g.neighbors_of(v)) {
                if (!in_set.test(u) || visited.test(u)) continue;
                visited.set(u);
                queue.push_back(u);
            }
        }
        best = std::max(best, count);
    }
    for (DenseId p : members) {
        in_set.reset(p);
        visited.reset(p);
    }
    return best;
}

std::uint32_t intersection_size(std::span<const DenseId> a, std::span<const DenseId> b) {
    std::uint32_t count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (b[j] < a[i])
            ++j;
        else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

}  // namespace

QueryResult query1(const SocialNetwork& net, SparseId p1, SparseId p2,
                   std::int64_t reply_threshold) {
    const auto a = net.person_ids.find(p1);
    if (!a) throw UnknownPersonError(p1);
    const auto b = net.person_ids.find(p2);
    if (!b) throw UnknownPersonError(p2);

    std::optional<std::uint32_t> distance;
    if (*a == *b) {
        distance = 0;
    } else if (reply_threshold < 0) {
        // the full knows graph is the induced subgraph; skip the counts
        distance = bidirectional_distance(net.knows, *a, *b);
    } else {
        distance = bidirectional_distance(net.knows, *a, *b,
                                          induce_by_reply_threshold(net, reply_threshold));
    }
    return distance ? std::to_string(*distance) : "-1";
}

QueryResult query2(const SocialNetwork& net, std::uint32_t k, Date min_birthday) {
    assert(k >= 1);
    const VertexMask born = persons_born_on_or_after(net, min_birthday);
    const DenseId tag_count = net.tag_ids.size();

    struct RankedTag {
        std::uint32_t range = 0;
        DenseId tag = 0;
    };
    std::vector<RankedTag> ranked;
    ranked.reserve(tag_count);

    VertexMask in_set(net.person_count());
    VertexMask visited(net.person_count());
    std::vector<DenseId> members;
    std::vector<DenseId> queue;
    for (DenseId tag = 0; tag < tag_count; ++tag) {
        members.clear();
        for (DenseId p : net.persons_with_interest.values_of(tag))
            if (born.test(p)) members.push_back(p);
        const std::uint32_t range =
            members.empty() ? 0
                            : largest_component_size(net.knows, members, in_set, visited, queue);
        ranked.push_back({range, tag});
    }

    // tags sharing a name stay distinct and may repeat the same output token
    const auto top = top_k_select(
        std::move(ranked), k, [](const RankedTag& t) { return t.range; },
        [&](const RankedTag& t) {
            return std::pair<std::string_view, DenseId>(net.tag_names[t.tag], t.tag);
        });

    std::vector<std::string> tokens;
    tokens.reserve(top.size());
    for (const auto& t : top) tokens.push_back(net.tag_names[t.tag]);
    return join_tokens(tokens);
}

QueryResult query3(const SocialNetwork& net, std::uint32_t k, std::uint32_t max_hops,
                   std::string_view place_name) {
    assert(k >= 1 && max_hops >= 1);
    const VertexMask in_place = persons_in_place(net, place_name);

    // candidate list ascending by external id, so pair (i, j) with i < j is
    // already in canonical numeric order
    std::vector<DenseId> candidates = in_place.to_vector();
    std::sort(candidates.begin(), candidates.end(), [&](DenseId a, DenseId b) {
        return net.person_ids.sparse_of(a) < net.person_ids.sparse_of(b);
    });
    if (candidates.size() < 2) return "";

    // distances are measured on the full knows graph, not the place subgraph
    const PairMatrix reachable = msbfs_reach_within_h(net.knows, candidates, max_hops);

    struct RankedPair {
        std::uint32_t similarity = 0;
        std::uint32_t i = 0;
        std::uint32_t j = 0;
    };
    std::vector<RankedPair> pairs;
    for (std::uint32_t i = 0; i < candidates.size(); ++i) {
        for (std::uint32_t j = i + 1; j < candidates.size(); ++j) {
            if (!reachable.test(i, j)) continue;
            const auto sim = intersection_size(net.interests_of_person.values_of(candidates[i]),
                                               net.interests_of_person.values_of(candidates[j]));
            pairs.push_back({sim, i, j});
        }
    }

    const auto top = top_k_select(
        std::move(pairs), k, [](const RankedPair& p) { return p.similarity; },
        [](const RankedPair& p) { return std::pair<std::uint32_t, std::uint32_t>(p.i, p.j); });

    std::vector<std::string> tokens;
    tokens.reserve(top.size());
    for (const auto& p : top)
        tokens.push_back(std::to_string(net.person_ids.sparse_of(candidates[p.i])) + '|' +
                         std::to_string(net.person_ids.sparse_of(candidates[p.j])));
    return join_tokens(tokens);
}

QueryResult query4(const SocialNetwork& net, std::uint32_t k, std::string_view tag_name) {
    assert(k >= 1);
    const VertexMask mask = persons_in_forums_with_tag(net, tag_name);
    if (!mask.any()) return "";

    const ComponentLabeling components = wcc(net.knows, mask);
    const ClosenessResult closeness = msbfs_closeness(net.knows, mask, k, components);

    struct RankedPerson {
        CentralityScore score;
        SparseId id = 0;
    };
    std::vector<RankedPerson> ranked;
    closeness.computed.for_each_set([&](DenseId v) {
        const std::uint64_t reach = components.size[components.label[v]] - 1;
        ranked.push_back(
            {{reach * reach, closeness.distance_sum[v]}, net.person_ids.sparse_of(v)});
    });

    const auto top = top_k_select(
        std::move(ranked), k, [](const RankedPerson& p) { return p.score; },
        [](const RankedPerson& p) { return p.id; });

    std::vector<std::string> tokens;
    tokens.reserve(top.size());
    for (const auto& p : top) tokens.push_back(std::to_string(p.id));
    return join_tokens(tokens);
}

QueryResult evaluate(const SocialNetwork& net, const QueryInstance& query) {
    return std::visit(
        [&](const auto& q) -> QueryResult {
            using T = std::decay_t<decltype(q)>;
            if constexpr (std::is_same_v<T, Query1>)
                return query1(net, q.person1, q.person2, q.reply_threshold);
            else if constexpr (std::is_same_v<T, Query2>)
                return query2(net, q.k, q.min_birthday);
            else if constexpr (std::is_same_v<T, Query3>)
                return query3(net, q.k, q.max_hops, q.place);
            else
                return query4(net, q.k, q.tag);
        },
        query);
}

int query_type(const QueryInstance& query) {
    return static_cast<int>(query.index()) + 1;
}

}  // namespace snq
