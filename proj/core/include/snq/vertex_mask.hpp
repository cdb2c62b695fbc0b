#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace snq {

// Fixed-size bitset over dense vertex indices.
class VertexMask {
public:
    VertexMask() = default;
    explicit VertexMask(std::size_t bits, bool value = false)
        : bits_(bits), words_((bits + 63) / 64, value ? ~std::uint64_t{0} : 0) {
        trim();
    }

    std::size_t size() const { return bits_; }

    bool test(std::size_t i) const {
        assert(i < bits_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i) {
        assert(i < bits_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(std::size_t i) {
        assert(i < bits_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    VertexMask& operator&=(const VertexMask& other) {
        assert(bits_ == other.bits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }

    VertexMask& operator|=(const VertexMask& other) {
        assert(bits_ == other.bits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    friend VertexMask operator&(VertexMask a, const VertexMask& b) { return a &= b; }
    friend VertexMask operator|(VertexMask a, const VertexMask& b) { return a |= b; }

    bool operator==(const VertexMask&) const = default;

    template <typename F>
    void for_each_set(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                unsigned bit = std::countr_zero(w);
                f(static_cast<std::uint32_t>(wi * 64 + bit));
                w &= w - 1;
            }
        }
    }

    std::vector<std::uint32_t> to_vector() const {
        std::vector<std::uint32_t> out;
        out.reserve(count());
        for_each_set([&](std::uint32_t v) { out.push_back(v); });
        return out;
    }

private:
    void trim() {
        if (bits_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (bits_ % 64)) - 1;
    }

    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace snq
