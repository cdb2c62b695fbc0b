#include "snq/curate.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace snq {

namespace {

constexpr std::size_t kAttemptsPerSample = 4000;

std::int64_t percentile(std::vector<std::uint32_t> values, double p) {
    if (values.empty()) return 0;
    std::sort(values.begin(), values.end());
    const auto idx = std::min(values.size() - 1,
                              static_cast<std::size_t>(p * static_cast<double>(values.size())));
    return values[idx];
}

struct ReachClass {
    const char* name;
    // hop-count acceptance; -1 encodes unreachable
    bool (*accepts)(std::int64_t);
};

constexpr ReachClass kReachClasses[] = {
    {"unreachable", [](std::int64_t d) { return d == -1; }},
    {"few-hops", [](std::int64_t d) { return d >= 1 && d <= 2; }},
    {"many-hops", [](std::int64_t d) { return d >= 4; }},
};

void curate_query1(const SocialNetwork& net, std::uint32_t per_category, std::mt19937_64& rng,
                   CurationResult& out) {
    const DenseId n = net.person_count();
    if (n < 2) {
        for (const char* xc : {"x=none", "x=low", "x=high"})
            for (const auto& rc : kReachClasses)
                out.unsatisfiable.push_back(std::string(xc) + "/" + rc.name);
        return;
    }

    const std::int64_t low_x = percentile(net.mutual_reply_min, 0.25);
    const std::int64_t high_x = std::max<std::int64_t>(low_x + 1,
                                                       percentile(net.mutual_reply_min, 0.95));
    const std::pair<const char*, std::int64_t> subgraph_classes[] = {
        {"x=none", -1}, {"x=low", low_x}, {"x=high", high_x}};

    std::uniform_int_distribution<DenseId> pick(0, n - 1);
    for (const auto& [x_name, x] : subgraph_classes) {
        for (const auto& rc : kReachClasses) {
            std::set<std::pair<SparseId, SparseId>> chosen;
            std::size_t attempts = kAttemptsPerSample * per_category;
            while (chosen.size() < per_category && attempts-- > 0) {
                const DenseId a = pick(rng);
                const DenseId b = pick(rng);
                if (a == b) continue;
                const SparseId p1 = net.person_ids.sparse_of(a);
                const SparseId p2 = net.person_ids.sparse_of(b);
                if (chosen.count({p1, p2})) continue;
                // verify the category by evaluating the query itself
                const QueryResult answer = query1(net, p1, p2, x);
                const std::int64_t d = std::stoll(answer);
                if (!rc.accepts(d)) continue;
                chosen.insert({p1, p2});
                out.queries.push_back(Query1{p1, p2, x});
            }
            if (chosen.size() < per_category)
                out.unsatisfiable.push_back(std::string(x_name) + "/" + rc.name);
        }
    }
}

constexpr std::uint32_t kTopK[] = {3, 5, 10};

void curate_query2(const SocialNetwork& net, std::uint32_t per_category, std::mt19937_64& rng,
                   CurationResult& out) {
    for (const std::uint32_t k : kTopK) {
        if (net.person_count() == 0) {
            if (per_category > 0)
                out.unsatisfiable.push_back("query2 k=" + std::to_string(k));
            continue;
        }
        std::uniform_int_distribution<DenseId> pick(0, net.person_count() - 1);
        for (std::uint32_t i = 0; i < per_category; ++i)
            out.queries.push_back(Query2{k, net.birthdays[pick(rng)]});
    }
}

void curate_query3(const SocialNetwork& net, std::uint32_t per_category, std::mt19937_64& rng,
                   CurationResult& out) {
    const auto place_count = static_cast<DenseId>(net.place_names.size());
    for (const std::uint32_t k : kTopK) {
        if (place_count == 0) {
            if (per_category > 0)
                out.unsatisfiable.push_back("query3 k=" + std::to_string(k));
            continue;
        }
        std::uniform_int_distribution<DenseId> pick(0, place_count - 1);
        std::uniform_int_distribution<std::uint32_t> hops(2, 3);
        for (std::uint32_t i = 0; i < per_category; ++i)
            out.queries.push_back(Query3{k, hops(rng), net.place_names[pick(rng)]});
    }
}

void curate_query4(const SocialNetwork& net, std::uint32_t per_category, std::mt19937_64& rng,
                   CurationResult& out) {
    const auto tag_count = static_cast<DenseId>(net.tag_names.size());
    for (const std::uint32_t k : kTopK) {
        if (tag_count == 0) {
            if (per_category > 0)
                out.unsatisfiable.push_back("query4 k=" + std::to_string(k));
            continue;
        }
        std::uniform_int_distribution<DenseId> pick(0, tag_count - 1);
        for (std::uint32_t i = 0; i < per_category; ++i)
            out.queries.push_back(Query4{k, net.tag_names[pick(rng)]});
    }
}

}  // namespace

CurationResult curate_parameters(const SocialNetwork& net, int query_type,
                                 std::uint32_t per_category, std::uint64_t seed) {
    if (query_type < 1 || query_type > 4)
        throw Error("query type must be 1..4, got " + std::to_string(query_type));

    CurationResult out;
    if (per_category == 0) return out;

    std::mt19937_64 rng(seed);
    switch (query_type) {
        case 1: curate_query1(net, per_category, rng, out); break;
        case 2: curate_query2(net, per_category, rng, out); break;
        case 3: curate_query3(net, per_category, rng, out); break;
        case 4: curate_query4(net, per_category, rng, out); break;
    }
    return out;
}

}  // namespace snq
