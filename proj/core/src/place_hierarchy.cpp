#include "snq/place_hierarchy.hpp"

#include <algorithm>
#include <cassert>

namespace snq {

PlaceHierarchy PlaceHierarchy::build(const std::vector<std::optional<DenseId>>& parents,
                                     const std::vector<std::string>& names) {
    const std::size_t n = parents.size();
    assert(names.size() == n);

    std::vector<std::vector<DenseId>> children(n);
    std::vector<DenseId> roots;
    for (DenseId p = 0; p < n; ++p) {
        if (parents[p])
            children[*parents[p]].push_back(p);
        else
            roots.push_back(p);
    }
    // deterministic labels: children visited in dense-index order
    for (auto& c : children) std::sort(c.begin(), c.end());

    PlaceHierarchy h;
    h.intervals_.resize(n);
    h.by_preorder_.reserve(n);

    std::uint32_t next_label = 0;
    std::vector<std::pair<DenseId, bool>> stack;  // (place, children already expanded)
    for (DenseId root : roots) {
        stack.emplace_back(root, false);
        while (!stack.empty()) {
            const auto [place, expanded] = stack.back();
            if (!expanded) {
                stack.back().second = true;
                h.intervals_[place].low = next_label++;
                h.by_preorder_.push_back(place);
                for (auto it = children[place].rbegin(); it != children[place].rend(); ++it)
                    stack.emplace_back(*it, false);
            } else {
                h.intervals_[place].high = next_label - 1;
                stack.pop_back();
            }
        }
    }
    if (h.by_preorder_.size() != n)
        throw DataError("place partOf relation contains a cycle");

    for (DenseId p = 0; p < n; ++p) h.name_index_[names[p]].push_back(p);
    return h;
}

std::span<const DenseId> PlaceHierarchy::places_named(std::string_view name) const {
    auto it = name_index_.find(std::string(name));
    if (it == name_index_.end()) return {};
    return it->second;
}

}  // namespace snq
