#include "snq/kernels.hpp"

#include <cassert>
#include <mutex>
#include <thread>

namespace snq {

ComponentLabeling wcc(const Csr& g, const VertexMask& mask) {
    assert(mask.size() == g.n);
    ComponentLabeling out;
    out.label.assign(g.n, ComponentLabeling::kNoComponent);

    std::vector<DenseId> queue;
    for (DenseId seed = 0; seed < g.n; ++seed) {
        if (!mask.test(seed) || out.label[seed] != ComponentLabeling::kNoComponent) continue;
        const std::uint32_t id = out.count();
        std::uint32_t members = 0;
        queue.clear();
        queue.push_back(seed);
        out.label[seed] = id;
        while (!queue.empty()) {
            const DenseId v = queue.back();
            queue.pop_back();
            ++members;
            for (DenseId u : g.neighbors_of(v)) {
                if (!mask.test(u) || out.label[u] != ComponentLabeling::kNoComponent) continue;
                out.label[u] = id;
                queue.push_back(u);
            }
        }
        out.size.push_back(members);
    }
    return out;
}

LevelSum level_sum_bfs(const Csr& g, DenseId source, const VertexMask& mask) {
    assert(mask.test(source));
    LevelSum result;
    result.component_size = 1;

    std::vector<bool> seen(g.n, false);
    seen[source] = true;
    std::vector<DenseId> frontier{source};
    std::vector<DenseId> next;
    std::uint32_t level = 0;
    while (!frontier.empty()) {
        ++level;
        next.clear();
        for (DenseId v : frontier) {
            for (DenseId u : g.neighbors_of(v)) {
                if (seen[u] || !mask.test(u)) continue;
                seen[u] = true;
                next.push_back(u);
            }
        }
        result.distance_sum += std::uint64_t{level} * next.size();
        result.component_size += static_cast<std::uint32_t>(next.size());
        frontier.swap(next);
    }
    return result;
}

MsBfsBatch::MsBfsBatch(const Csr& g, std::span<const DenseId> sources, const VertexMask* mask,
                       MsBfsConfig config)
    : g_(&g), mask_(mask), config_(config) {
    assert(sources.size() >= 1 && sources.size() <= 64);
    width_ = static_cast<unsigned>(sources.size());
    active_ = width_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width_) - 1;

    seen_.assign(g.n, 0);
    frontier_.assign(g.n, 0);
    next_.assign(g.n, 0);
    eligible_nodes_ = mask_ ? mask_->count() : g.n;

    for (unsigned j = 0; j < width_; ++j) {
        const DenseId s = sources[j];
        assert(s < g.n);
        assert(!mask_ || mask_->test(s));
        if (seen_[s] == 0) {
            frontier_nodes_.push_back(s);
            ++touched_nodes_;
        }
        seen_[s] |= std::uint64_t{1} << j;
        frontier_[s] |= std::uint64_t{1} << j;
    }
}

bool MsBfsBatch::advance() {
    discovered_.fill(0);
    if (frontier_nodes_.empty() || active_ == 0) return false;

    const Csr& g = *g_;
    next_nodes_.clear();

    auto record = [&](DenseId v, std::uint64_t fresh) {
        if (next_[v] == 0) next_nodes_.push_back(v);
        if (seen_[v] == 0) ++touched_nodes_;
        seen_[v] |= fresh;
        next_[v] |= fresh;
        while (fresh) {
            ++discovered_[std::countr_zero(fresh)];
            fresh &= fresh - 1;
        }
    };

    const std::size_t untouched = eligible_nodes_ - touched_nodes_;
    const bool pull = static_cast<double>(frontier_nodes_.size()) >
                      config_.pull_ratio * static_cast<double>(untouched);

    if (pull) {
        // gather from neighbours; frontier words of excluded nodes are 0
        for (DenseId v = 0; v < g.n; ++v) {
            if (mask_ && !mask_->test(v)) continue;
            const std::uint64_t wanted = active_ & ~seen_[v];
            if (wanted == 0) continue;
            std::uint64_t gathered = 0;
            for (DenseId u : g.neighbors_of(v)) gathered |= frontier_[u];
            gathered &= wanted;
            if (gathered) record(v, gathered);
        }
    } else {
        for (DenseId v : frontier_nodes_) {
            const std::uint64_t w = frontier_[v] & active_;
            if (w == 0) continue;
            for (DenseId u : g.neighbors_of(v)) {
                if (mask_ && !mask_->test(u)) continue;
                const std::uint64_t fresh = w & ~seen_[u];
                if (fresh) record(u, fresh);
            }
        }
    }

    for (DenseId v : frontier_nodes_) frontier_[v] = 0;
    frontier_.swap(next_);
    frontier_nodes_.swap(next_nodes_);
    ++level_;
    return !frontier_nodes_.empty();
}

void PairMatrix::symmetrize() {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t w = 0; w < row_words_; ++w) {
            std::uint64_t word = bits_[i * row_words_ + w];
            while (word) {
                const std::size_t j = w * 64 + std::countr_zero(word);
                set(j, i);
                word &= word - 1;
            }
        }
    }
}

PairMatrix msbfs_reach_within_h(const Csr& g, std::span<const DenseId> sources,
                                std::uint32_t max_hops, MsBfsConfig config) {
    assert(max_hops >= 1);
    const std::size_t count = sources.size();
    PairMatrix mat(count);
    if (count < 2) return mat;

    const std::uint32_t levels_hi = (max_hops + 1) / 2;
    const std::uint32_t levels_lo = max_hops - levels_hi;  // == levels_hi for even h

    struct BatchSeen {
        std::vector<std::uint64_t> lo;
        std::vector<std::uint64_t> hi;
    };
    std::vector<BatchSeen> batches;
    for (std::size_t base = 0; base < count; base += 64) {
        const std::size_t w = std::min<std::size_t>(64, count - base);
        MsBfsBatch batch(g, sources.subspan(base, w), nullptr, config);
        BatchSeen snap;
        if (levels_lo == 0) snap.lo = batch.seen();
        bool growing = true;
        for (std::uint32_t l = 1; l <= levels_hi && growing; ++l) {
            growing = batch.advance();
            if (l == levels_lo) snap.lo = batch.seen();
        }
        // once a traversal exhausts, its seen set is final at every level
        if (snap.lo.empty()) snap.lo = batch.seen();
        snap.hi = batch.seen();
        batches.push_back(std::move(snap));
    }

    // a pair is within h iff one side's ceil(h/2)-hop ball meets the other
    // side's floor(h/2)-hop ball
    for (std::size_t ai = 0; ai < batches.size(); ++ai) {
        for (std::size_t bi = 0; bi < batches.size(); ++bi) {
            const auto& a_hi = batches[ai].hi;
            const auto& b_lo = batches[bi].lo;
            for (DenseId v = 0; v < g.n; ++v) {
                std::uint64_t reach_a = a_hi[v];
                const std::uint64_t reach_b = b_lo[v];
                if (reach_a == 0 || reach_b == 0) continue;
                while (reach_a) {
                    const std::size_t i = ai * 64 + std::countr_zero(reach_a);
                    mat.or_into_row(i, bi, reach_b);
                    reach_a &= reach_a - 1;
                }
            }
        }
    }

    mat.symmetrize();
    // a source trivially meets itself; the diagonal carries no pair
    for (std::size_t i = 0; i < count; ++i) mat.clear(i, i);
    return mat;
}

namespace {

constexpr std::uint32_t kSmallComponentCutoff = 4;

struct ComponentPruneState {
    std::mutex guard;
    std::vector<std::uint64_t> best;  // max-heap of the k smallest completed sums
    std::atomic<std::uint64_t> threshold{UINT64_MAX};
    bool prunable = false;

    void record(std::uint64_t sum, std::uint32_t k) {
        if (!prunable) return;
        std::lock_guard lock(guard);
        if (best.size() < k) {
            best.push_back(sum);
            std::push_heap(best.begin(), best.end());
            if (best.size() == k) threshold.store(best.front(), std::memory_order_relaxed);
        } else if (sum < best.front()) {
            std::pop_heap(best.begin(), best.end());
            best.back() = sum;
            std::push_heap(best.begin(), best.end());
            threshold.store(best.front(), std::memory_order_relaxed);
        }
    }
};

}  // namespace

ClosenessResult msbfs_closeness(const Csr& g, const VertexMask& mask, std::uint32_t k,
                                const ComponentLabeling& components, unsigned workers,
                                MsBfsConfig config) {
    assert(mask.size() == g.n);
    assert(k >= 1);

    ClosenessResult result;
    result.distance_sum.assign(g.n, 0);
    result.computed = VertexMask(g.n);
    result.pruned = VertexMask(g.n);

    const std::uint32_t comp_count = components.count();
    std::vector<std::vector<DenseId>> members(comp_count);
    mask.for_each_set([&](DenseId v) { members[components.label[v]].push_back(v); });

    std::vector<ComponentPruneState> prune(comp_count);
    for (std::uint32_t c = 0; c < comp_count; ++c) {
        prune[c].prunable = components.size[c] > k;
        if (prune[c].prunable) prune[c].best.reserve(k);
    }

    // batches of up to 64 sources, never mixing components; high-degree
    // sources go first so the component threshold tightens early
    struct Batch {
        std::uint32_t component;
        std::vector<DenseId> sources;
    };
    std::vector<Batch> batches;
    for (std::uint32_t c = 0; c < comp_count; ++c) {
        auto& list = members[c];
        if (list.empty()) continue;
        if (components.size[c] <= kSmallComponentCutoff) {
            for (DenseId v : list) {
                const LevelSum ls = level_sum_bfs(g, v, mask);
                assert(ls.component_size == components.size[c]);
                result.distance_sum[v] = ls.distance_sum;
                result.computed.set(v);
            }
            continue;
        }
        std::sort(list.begin(), list.end(), [&](DenseId a, DenseId b) {
            const auto da = g.degree(a);
            const auto db = g.degree(b);
            return da != db ? da > db : a < b;
        });
        for (std::size_t base = 0; base < list.size(); base += 64) {
            const std::size_t w = std::min<std::size_t>(64, list.size() - base);
            batches.push_back({c, {list.begin() + base, list.begin() + base + w}});
        }
    }

    std::mutex result_guard;
    auto run_batch = [&](const Batch& batch) {
        auto& state = prune[batch.component];
        const std::uint32_t comp_size = components.size[batch.component];

        // level-0 bound: every unvisited node is at least one hop away
        std::vector<DenseId> sources;
        std::vector<DenseId> pruned_early;
        sources.reserve(batch.sources.size());
        for (DenseId v : batch.sources) {
            const std::uint64_t bound = comp_size - 1;
            if (bound > state.threshold.load(std::memory_order_relaxed))
                pruned_early.push_back(v);
            else
                sources.push_back(v);
        }

        std::array<std::uint64_t, 64> partial{};
        std::array<std::uint32_t, 64> visited{};
        std::array<std::uint8_t, 64> done{};
        std::vector<std::pair<DenseId, std::uint64_t>> completed;
        std::vector<DenseId> pruned_late;

        if (!sources.empty()) {
            visited.fill(1);  // each source has reached itself
            MsBfsBatch bfs(g, sources, &mask, config);
            while (bfs.advance()) {
                const std::uint32_t level = bfs.level();
                const auto found = bfs.discovered_last_level();
                for (unsigned j = 0; j < bfs.width(); ++j) {
                    if (done[j]) continue;
                    partial[j] += std::uint64_t{level} * found[j];
                    visited[j] += found[j];
                    const std::uint32_t unvisited = comp_size - visited[j];
                    if (unvisited == 0) {
                        completed.emplace_back(sources[j], partial[j]);
                        state.record(partial[j], k);
                        done[j] = 1;
                        bfs.deactivate(j);
                        continue;
                    }
                    const std::uint64_t bound =
                        partial[j] + std::uint64_t{unvisited} * (level + 1);
                    if (bound > state.threshold.load(std::memory_order_relaxed)) {
                        pruned_late.push_back(sources[j]);
                        done[j] = 1;
                        bfs.deactivate(j);
                    }
                }
            }
            // the component is connected, so every source completed or was pruned
            for (unsigned j = 0; j < bfs.width(); ++j) assert(done[j]);
        }

        std::lock_guard lock(result_guard);
        for (DenseId v : pruned_early) result.pruned.set(v);
        for (DenseId v : pruned_late) result.pruned.set(v);
        for (const auto& [v, sum] : completed) {
            result.distance_sum[v] = sum;
            result.computed.set(v);
        }
    };

    if (workers <= 1 || batches.size() <= 1) {
        for (const auto& batch : batches) run_batch(batch);
    } else {
        std::atomic<std::size_t> cursor{0};
        const unsigned thread_count = std::min<std::size_t>(workers, batches.size());
        std::vector<std::thread> pool;
        pool.reserve(thread_count);
        for (unsigned t = 0; t < thread_count; ++t) {
            pool.emplace_back([&] {
                while (true) {
                    const std::size_t i = cursor.fetch_add(1);
                    if (i >= batches.size()) break;
                    run_batch(batches[i]);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    return result;
}

}  // namespace snq
