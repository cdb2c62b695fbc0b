#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "snq/common.hpp"
#include "snq/vertex_mask.hpp"

namespace snq {

struct Edge {
    DenseId src = 0;
    DenseId dst = 0;
    std::uint32_t annotation = 0;
};

// Compressed sparse row adjacency over dense node indices. Each adjacency
// list is sorted ascending and duplicate-free. `edge_annotation`, when
// non-empty, is parallel to `neighbors` (reply counts on knows edges).
struct Csr {
    DenseId n = 0;
    std::vector<std::uint64_t> offsets;  // length n+1, non-decreasing
    std::vector<DenseId> neighbors;
    std::vector<std::uint32_t> edge_annotation;

    bool has_annotation() const { return !edge_annotation.empty(); }
    std::uint64_t edge_count() const { return neighbors.size(); }

    std::span<const DenseId> neighbors_of(DenseId v) const {
        return {neighbors.data() + offsets[v], neighbors.data() + offsets[v + 1]};
    }

    std::uint32_t degree(DenseId v) const {
        return static_cast<std::uint32_t>(offsets[v + 1] - offsets[v]);
    }

    // Position of directed edge (src, dst) in `neighbors`, if present.
    std::optional<std::uint64_t> edge_index(DenseId src, DenseId dst) const;
};

// Builds a CSR from a directed edge list. Adjacency lists come out sorted
// and deduplicated; a duplicate edge keeps the first annotation seen.
// Throws EndpointOutOfRangeError if an endpoint is >= n.
Csr build_csr(DenseId n, std::span<const Edge> edges, bool keep_annotations = false);

// Keeps exactly the edges whose both endpoints are in `mask`. The index
// space is preserved: excluded nodes become isolated, n is unchanged.
Csr induce_by_vertices(const Csr& g, const VertexMask& mask);

// Per directed edge (a,b): min(annotation(a,b), annotation(b,a)). Requires a
// symmetric, annotated CSR.
std::vector<std::uint32_t> mutual_annotation_min(const Csr& g);

// Bijection between sparse external ids and dense indices in [0, n).
class DenseIdMap {
public:
    // Returns the dense index of `sparse`, assigning the next free index on
    // first appearance.
    DenseId add(SparseId sparse) {
        auto [it, inserted] = to_dense_.try_emplace(sparse, static_cast<DenseId>(to_sparse_.size()));
        if (inserted) to_sparse_.push_back(sparse);
        return it->second;
    }

    std::optional<DenseId> find(SparseId sparse) const {
        auto it = to_dense_.find(sparse);
        if (it == to_dense_.end()) return std::nullopt;
        return it->second;
    }

    SparseId sparse_of(DenseId dense) const { return to_sparse_[dense]; }
    DenseId size() const { return static_cast<DenseId>(to_sparse_.size()); }

private:
    std::unordered_map<SparseId, DenseId> to_dense_;
    std::vector<SparseId> to_sparse_;
};

// Offset-indexed one-to-many mapping (e.g. tag -> interested persons).
// Value lists are sorted ascending and deduplicated.
class AdjacencyIndex {
public:
    AdjacencyIndex() = default;

    static AdjacencyIndex build(std::size_t key_count,
                                std::vector<std::pair<DenseId, DenseId>> pairs);

    std::span<const DenseId> values_of(DenseId key) const {
        return {values_.data() + offsets_[key], values_.data() + offsets_[key + 1]};
    }

    std::size_t key_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }

private:
    std::vector<std::uint64_t> offsets_;
    std::vector<DenseId> values_;
};

}  // namespace snq
