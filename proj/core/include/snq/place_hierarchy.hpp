#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "snq/common.hpp"

namespace snq {

// partOf forest over dense place indices, labelled with nested intervals
// from a pre-order DFS: place q lies in the subtree of p iff
// p.low <= q.low and q.high <= p.high. Sibling intervals are disjoint.
class PlaceHierarchy {
public:
    struct Interval {
        std::uint32_t low = 0;
        std::uint32_t high = 0;
    };

    PlaceHierarchy() = default;

    // `parents[i]` is the dense index of place i's parent, if any.
    // Throws DataError if the parent links contain a cycle.
    static PlaceHierarchy build(const std::vector<std::optional<DenseId>>& parents,
                                const std::vector<std::string>& names);

    std::size_t place_count() const { return intervals_.size(); }

    Interval interval(DenseId place) const { return intervals_[place]; }

    // True iff `descendant` is `ancestor` itself or lies in its subtree.
    bool contains(DenseId ancestor, DenseId descendant) const {
        const auto& a = intervals_[ancestor];
        const auto& d = intervals_[descendant];
        return a.low <= d.low && d.high <= a.high;
    }

    // All places of the subtree rooted at `place` (including it), in
    // pre-order. Nested intervals make the subtree a contiguous range.
    std::span<const DenseId> subtree(DenseId place) const {
        const auto& iv = intervals_[place];
        return {by_preorder_.data() + iv.low, by_preorder_.data() + iv.high + 1};
    }

    // Dense indices of every place with this exact name (names are not
    // unique across hierarchy levels). Empty when the name is unknown.
    std::span<const DenseId> places_named(std::string_view name) const;

private:
    std::vector<Interval> intervals_;
    std::vector<DenseId> by_preorder_;
    std::unordered_map<std::string, std::vector<DenseId>> name_index_;
};

}  // namespace snq
