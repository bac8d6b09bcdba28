#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace modrank {

// Set of vertex ids backed by a dynamic bitset. The universe size is fixed at
// construction; binary operations require both operands over the same universe.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe)
        : n_(universe), words_(static_cast<std::size_t>((universe + 63) / 64), 0) {}

    static VertexSet of(int universe, std::initializer_list<int> members) {
        VertexSet s(universe);
        for (int v : members) s.set(v);
        return s;
    }

    int universe_size() const { return n_; }

    bool test(int v) const {
        assert(v >= 0 && v < n_);
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    void set(int v) {
        assert(v >= 0 && v < n_);
        words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void reset(int v) {
        assert(v >= 0 && v < n_);
        words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (std::uint64_t w : words_) if (w) return false;
        return true;
    }

    // Lowest member, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                int v = static_cast<int>(i * 64 + std::countr_zero(w));
                f(v);
                w &= w - 1;
            }
        }
    }

    bool intersects(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    // Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }
    friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }

    // Total order: cardinality first, then the bit pattern as an integer.
    // Used to order enumerated set families deterministically.
    friend bool size_lex_less(const VertexSet& a, const VertexSet& b) {
        int ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        for (std::size_t i = a.words_.size(); i-- > 0;)
            if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
        return false;
    }

    std::size_t hash() const {
        std::uint64_t h = 0xcbf29ce484222325ull ^ static_cast<std::uint64_t>(n_);
        for (std::uint64_t w : words_) {
            h ^= w;
            h *= 0x100000001b3ull;
        }
        return static_cast<std::size_t>(h);
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

// Lexicographic order on the ascending member sequences, the tie-break order
// used by the MWCS solver ({0} < {0,2} < {1}).
bool member_lex_less(const VertexSet& a, const VertexSet& b);

}  // namespace modrank
