#include "snq/csr.hpp"

#include <algorithm>
#include <cassert>

namespace snq {

std::optional<std::uint64_t> Csr::edge_index(DenseId src, DenseId dst) const {
    const auto begin = neighbors.data() + offsets[src];
    const auto end = neighbors.data() + offsets[src + 1];
    const auto it = std::lower_bound(begin, end, dst);
    if (it == end || *it != dst) return std::nullopt;
    return static_cast<std::uint64_t>(it - neighbors.data());
}

Csr build_csr(DenseId n, std::span<const Edge> edges, bool keep_annotations) {
    for (const auto& e : edges) {
        if (e.src >= n || e.dst >= n)
            throw EndpointOutOfRangeError("edge (" + std::to_string(e.src) + "," +
                                          std::to_string(e.dst) + ") out of range for n=" +
                                          std::to_string(n));
    }

    std::vector<Edge> sorted(edges.begin(), edges.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
        return a.src != b.src ? a.src < b.src : a.dst < b.dst;
    });

    Csr g;
    g.n = n;
    g.offsets.assign(n + 1, 0);
    g.neighbors.reserve(sorted.size());
    if (keep_annotations) g.edge_annotation.reserve(sorted.size());

    for (std::size_t i = 0; i < sorted.size(); ++i) {
        // stable sort keeps the first annotation ahead of duplicates
        if (i > 0 && sorted[i].src == sorted[i - 1].src && sorted[i].dst == sorted[i - 1].dst)
            continue;
        g.neighbors.push_back(sorted[i].dst);
        if (keep_annotations) g.edge_annotation.push_back(sorted[i].annotation);
        ++g.offsets[sorted[i].src + 1];
    }
    for (DenseId v = 0; v < n; ++v) g.offsets[v + 1] += g.offsets[v];
    assert(g.offsets[n] == g.neighbors.size());
    return g;
}

Csr induce_by_vertices(const Csr& g, const VertexMask& mask) {
    assert(mask.size() == g.n);
    Csr out;
    out.n = g.n;
    out.offsets.assign(g.n + 1, 0);

    const bool annotated = g.has_annotation();
    for (DenseId v = 0; v < g.n; ++v) {
        out.offsets[v + 1] = out.offsets[v];
        if (!mask.test(v)) continue;
        const auto begin = g.offsets[v];
        const auto end = g.offsets[v + 1];
        for (auto e = begin; e < end; ++e) {
            const DenseId u = g.neighbors[e];
            if (!mask.test(u)) continue;
            out.neighbors.push_back(u);
            if (annotated) out.edge_annotation.push_back(g.edge_annotation[e]);
            ++out.offsets[v + 1];
        }
    }
    return out;
}

std::vector<std::uint32_t> mutual_annotation_min(const Csr& g) {
    std::vector<std::uint32_t> mutual(g.neighbors.size(), 0);
    for (DenseId v = 0; v < g.n; ++v) {
        for (auto e = g.offsets[v]; e < g.offsets[v + 1]; ++e) {
            const DenseId u = g.neighbors[e];
            const auto back = g.edge_index(u, v);
            assert(back.has_value());  // knows adjacency is symmetric
            const std::uint32_t there = g.edge_annotation.empty() ? 0 : g.edge_annotation[e];
            const std::uint32_t reverse = g.edge_annotation.empty() ? 0 : g.edge_annotation[*back];
            mutual[e] = std::min(there, reverse);
        }
    }
    return mutual;
}

AdjacencyIndex AdjacencyIndex::build(std::size_t key_count,
                                     std::vector<std::pair<DenseId, DenseId>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    AdjacencyIndex idx;
    idx.offsets_.assign(key_count + 1, 0);
    idx.values_.reserve(pairs.size());
    for (const auto& [key, value] : pairs) {
        assert(key < key_count);
        idx.values_.push_back(value);
        ++idx.offsets_[key + 1];
    }
    for (std::size_t k = 0; k < key_count; ++k) idx.offsets_[k + 1] += idx.offsets_[k];
    return idx;
}

}  // namespace snq
