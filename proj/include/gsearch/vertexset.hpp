#ifndef GSEARCH_VERTEXSET_HPP
#define GSEARCH_VERTEXSET_HPP

#include <cstdint>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace gsearch {

// A set of vertex ids 0..n-1 with bitset semantics.  The first 64 bits are
// stored inline so graphs within the solver cap never touch the heap; larger
// universes (generators, validators) spill into a vector of extra words.
class VertexSet {
public:
    VertexSet() : nbits_(0), w0_(0) {}

    explicit VertexSet(std::size_t universe) : nbits_(universe), w0_(0) {
        if (universe > 64) rest_.assign((universe - 1) / 64, 0);
    }

    std::size_t universe() const { return nbits_; }

    bool contains(std::size_t v) const {
        return (word(v / 64) >> (v % 64)) & 1u;
    }

    void add(std::size_t v) { word(v / 64) |= std::uint64_t(1) << (v % 64); }
    void remove(std::size_t v) { word(v / 64) &= ~(std::uint64_t(1) << (v % 64)); }

    std::size_t count() const {
        std::size_t c = popcount64(w0_);
        for (auto w : rest_) c += popcount64(w);
        return c;
    }

    bool empty() const {
        if (w0_) return false;
        for (auto w : rest_)
            if (w) return false;
        return true;
    }

    bool operator==(const VertexSet& o) const {
        return w0_ == o.w0_ && rest_ == o.rest_;
    }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    // Lexicographic order on the word representation; used for deterministic
    // tie-breaking and as a map key.
    bool operator<(const VertexSet& o) const {
        if (w0_ != o.w0_) return w0_ < o.w0_;
        return rest_ < o.rest_;
    }

    VertexSet& operator|=(const VertexSet& o) {
        w0_ |= o.w0_;
        for (std::size_t i = 0; i < rest_.size(); ++i) rest_[i] |= o.rest_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        w0_ &= o.w0_;
        for (std::size_t i = 0; i < rest_.size(); ++i) rest_[i] &= o.rest_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        w0_ &= ~o.w0_;
        for (std::size_t i = 0; i < rest_.size(); ++i) rest_[i] &= ~o.rest_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool intersects(const VertexSet& o) const {
        if (w0_ & o.w0_) return true;
        for (std::size_t i = 0; i < rest_.size(); ++i)
            if (rest_[i] & o.rest_[i]) return true;
        return false;
    }

    bool subsetOf(const VertexSet& o) const {
        if (w0_ & ~o.w0_) return false;
        for (std::size_t i = 0; i < rest_.size(); ++i)
            if (rest_[i] & ~o.rest_[i]) return false;
        return true;
    }

    // Ascending iteration over member ids.
    template <class F>
    void forEach(F&& f) const {
        iterWord(w0_, 0, f);
        for (std::size_t i = 0; i < rest_.size(); ++i)
            iterWord(rest_[i], (i + 1) * 64, f);
    }

    std::vector<std::size_t> toVector() const {
        std::vector<std::size_t> out;
        forEach([&](std::size_t v) { out.push_back(v); });
        return out;
    }

    // Least member, or universe() when empty.
    std::size_t first() const {
        if (w0_) return ctz64(w0_);
        for (std::size_t i = 0; i < rest_.size(); ++i)
            if (rest_[i]) return (i + 1) * 64 + ctz64(rest_[i]);
        return nbits_;
    }

    std::size_t hash() const {
        std::uint64_t h = mix(w0_ + 0x9e3779b97f4a7c15ull);
        for (auto w : rest_) h = mix(h ^ (w + 0x9e3779b97f4a7c15ull));
        return static_cast<std::size_t>(h);
    }

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (std::size_t v = 0; v < universe; ++v) s.add(v);
        return s;
    }

    static VertexSet of(std::size_t universe, std::initializer_list<std::size_t> vs) {
        VertexSet s(universe);
        for (auto v : vs) s.add(v);
        return s;
    }

    std::string str() const {
        std::string out = "{";
        bool fst = true;
        forEach([&](std::size_t v) {
            if (!fst) out += ",";
            out += std::to_string(v);
            fst = false;
        });
        return out + "}";
    }

private:
    std::uint64_t& word(std::size_t i) { return i == 0 ? w0_ : rest_[i - 1]; }
    std::uint64_t word(std::size_t i) const { return i == 0 ? w0_ : rest_[i - 1]; }

    template <class F>
    static void iterWord(std::uint64_t w, std::size_t base, F& f) {
        while (w) {
            std::size_t b = ctz64(w);
            f(base + b);
            w &= w - 1;
        }
    }

    static std::size_t popcount64(std::uint64_t w) { return static_cast<std::size_t>(__builtin_popcountll(w)); }
    static std::size_t ctz64(std::uint64_t w) { return static_cast<std::size_t>(__builtin_ctzll(w)); }
    static std::uint64_t mix(std::uint64_t x) {
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdull;
        x ^= x >> 33;
        x *= 0xc4ceb9fe1a85ec53ull;
        x ^= x >> 33;
        return x;
    }

    std::size_t nbits_;
    std::uint64_t w0_;
    std::vector<std::uint64_t> rest_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace gsearch

#endif  // GSEARCH_VERTEXSET_HPP
