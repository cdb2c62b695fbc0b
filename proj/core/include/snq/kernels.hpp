#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "snq/csr.hpp"
#include "snq/vertex_mask.hpp"

namespace snq {

struct AllEdges {
    bool operator()(DenseId, DenseId, std::uint64_t) const { return true; }
};

// Exact unweighted shortest distance between src and dst over the edges
// accepted by `pred`, expanding alternately from the smaller frontier.
// nullopt = unreachable.
template <typename EdgePred = AllEdges>
std::optional<std::uint32_t> bidirectional_distance(const Csr& g, DenseId src, DenseId dst,
                                                    EdgePred pred = {}) {
    if (src == dst) return 0;

    constexpr std::uint32_t kUnseen = UINT32_MAX;
    std::array<std::vector<std::uint32_t>, 2> dist;
    dist[0].assign(g.n, kUnseen);
    dist[1].assign(g.n, kUnseen);
    std::array<std::vector<DenseId>, 2> frontier;
    std::vector<DenseId> next;
    dist[0][src] = 0;
    dist[1][dst] = 0;
    frontier[0].push_back(src);
    frontier[1].push_back(dst);
    std::array<std::uint32_t, 2> depth = {0, 0};
    std::uint64_t best = UINT64_MAX;

    // Invariant: the true distance is >= min(best, depth[0] + depth[1] + 1),
    // so once the frontiers overlap deeply enough, best is exact.
    while (!frontier[0].empty() && !frontier[1].empty()) {
        if (std::uint64_t{depth[0]} + depth[1] + 1 >= best) break;
        const int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
        const int other = 1 - side;
        const std::uint32_t nd = depth[side] + 1;
        next.clear();
        for (DenseId u : frontier[side]) {
            for (auto e = g.offsets[u]; e < g.offsets[u + 1]; ++e) {
                const DenseId v = g.neighbors[e];
                if (dist[side][v] != kUnseen) continue;
                if (!pred(u, v, e)) continue;
                dist[side][v] = nd;
                if (dist[other][v] != kUnseen)
                    best = std::min(best, std::uint64_t{nd} + dist[other][v]);
                next.push_back(v);
            }
        }
        frontier[side].swap(next);
        depth[side] = nd;
    }
    if (best == UINT64_MAX) return std::nullopt;
    return static_cast<std::uint32_t>(best);
}

struct ComponentLabeling {
    static constexpr std::uint32_t kNoComponent = UINT32_MAX;

    std::vector<std::uint32_t> label;  // per node; kNoComponent outside the mask
    std::vector<std::uint32_t> size;   // per component

    std::uint32_t count() const { return static_cast<std::uint32_t>(size.size()); }
    std::uint32_t largest() const {
        return size.empty() ? 0 : *std::max_element(size.begin(), size.end());
    }
};

// Connected components of the subgraph induced by `mask` (repeated BFS).
ComponentLabeling wcc(const Csr& g, const VertexMask& mask);

struct LevelSum {
    std::uint64_t distance_sum = 0;  // sum of hop distances to every reachable node
    std::uint32_t component_size = 0;
};

// Single-source reference: at each BFS level l, the sum grows by
// l * (nodes first reached at level l). Requires mask[source].
LevelSum level_sum_bfs(const Csr& g, DenseId source, const VertexMask& mask);

struct MsBfsConfig {
    // switch a level from push to pull when the frontier holds more than
    // this fraction of the not-yet-touched nodes
    double pull_ratio = 0.125;
};

// Up to 64 concurrent BFS traversals sharing one pass over the graph.
// Bit j of seen(v) is set iff source j has reached v within level() hops.
class MsBfsBatch {
public:
    MsBfsBatch(const Csr& g, std::span<const DenseId> sources, const VertexMask* mask = nullptr,
               MsBfsConfig config = {});

    unsigned width() const { return width_; }
    std::uint32_t level() const { return level_; }
    std::uint64_t active() const { return active_; }
    const std::vector<std::uint64_t>& seen() const { return seen_; }
    std::uint64_t seen_word(DenseId v) const { return seen_[v]; }

    // Advances every active traversal by one hop. Returns false once no new
    // node was reached (or nothing is active).
    bool advance();

    // Stops advancing source j; its seen bits stay frozen.
    void deactivate(unsigned j) { active_ &= ~(std::uint64_t{1} << j); }

    // Nodes first reached in the last advance(), per source.
    std::span<const std::uint32_t> discovered_last_level() const {
        return {discovered_.data(), width_};
    }

private:
    const Csr* g_;
    const VertexMask* mask_;
    MsBfsConfig config_;
    std::vector<std::uint64_t> seen_;
    std::vector<std::uint64_t> frontier_;
    std::vector<std::uint64_t> next_;
    std::vector<DenseId> frontier_nodes_;
    std::vector<DenseId> next_nodes_;
    std::array<std::uint32_t, 64> discovered_{};
    std::uint64_t active_ = 0;
    std::uint32_t level_ = 0;
    unsigned width_ = 0;
    std::size_t eligible_nodes_ = 0;
    std::size_t touched_nodes_ = 0;
};

// Symmetric bit matrix over source indices.
class PairMatrix {
public:
    explicit PairMatrix(std::size_t n)
        : n_(n), row_words_((n + 63) / 64), bits_(n * row_words_, 0) {}

    std::size_t size() const { return n_; }

    bool test(std::size_t i, std::size_t j) const {
        return (bits_[i * row_words_ + (j >> 6)] >> (j & 63)) & 1u;
    }

    void set(std::size_t i, std::size_t j) {
        bits_[i * row_words_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
    }

    void clear(std::size_t i, std::size_t j) {
        bits_[i * row_words_ + (j >> 6)] &= ~(std::uint64_t{1} << (j & 63));
    }

    void or_into_row(std::size_t i, std::size_t word_index, std::uint64_t word) {
        bits_[i * row_words_ + word_index] |= word;
    }

    void symmetrize();

private:
    std::size_t n_;
    std::size_t row_words_;
    std::vector<std::uint64_t> bits_;
};

// For every unordered source pair: whether their distance in the full graph
// is <= max_hops. Both directions advance only ceil(h/2) levels; odd h
// intersects the level ceil(h/2)-1 and ceil(h/2) seen-sets asymmetrically.
PairMatrix msbfs_reach_within_h(const Csr& g, std::span<const DenseId> sources,
                                std::uint32_t max_hops, MsBfsConfig config = {});

struct ClosenessResult {
    std::vector<std::uint64_t> distance_sum;  // per node; valid where computed
    VertexMask computed;  // sources with an exact distance sum
    VertexMask pruned;    // sources discarded by the lower bound
};

// Exact distance sums for every masked source that survives pruning. A
// source is pruned only when partial + unvisited*(l+1) already exceeds the
// k-th smallest completed sum in its component, so the top-k by centrality
// is identical to an unpruned run. Requires the labeling from wcc(g, mask).
ClosenessResult msbfs_closeness(const Csr& g, const VertexMask& mask, std::uint32_t k,
                                const ComponentLabeling& components, unsigned workers = 1,
                                MsBfsConfig config = {});

// Items sorted by score descending, ties by tie key ascending, then cut to
// k. Tie keys must discriminate equal-score items for a deterministic order.
template <typename T, typename ScoreFn, typename TieFn>
std::vector<T> top_k_select(std::vector<T> items, std::size_t k, ScoreFn score, TieFn tie_key) {
    const auto cmp = [&](const T& a, const T& b) {
        const auto sa = score(a);
        const auto sb = score(b);
        if (sa != sb) return sa > sb;
        return tie_key(a) < tie_key(b);
    };
    if (items.size() > k) {
        std::partial_sort(items.begin(), items.begin() + static_cast<std::ptrdiff_t>(k),
                          items.end(), cmp);
        items.resize(k);
    } else {
        std::sort(items.begin(), items.end(), cmp);
    }
    return items;
}

}  // namespace snq
