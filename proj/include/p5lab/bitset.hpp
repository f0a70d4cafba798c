#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace p5lab {

// Fixed-width bitset sized at construction. One 64-bit word covers every graph
// the graph6 layer can touch; blow-ups may need more, so the width is dynamic.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    static Bitset from_word(int nbits, std::uint64_t w) {
        Bitset b(nbits);
        if (!b.words_.empty()) b.words_[0] = w;
        return b;
    }

    int size_bits() const { return nbits_; }

    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(int i) {
        assert(i >= 0 && i < nbits_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < nbits_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    // -1 when empty.
    int lowest() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return int(k * 64 + std::countr_zero(words_[k]));
        return -1;
    }

    // First set bit at index > i, or -1. Enables for(v = lowest(); v >= 0; v = next(v)).
    int next(int i) const {
        ++i;
        if (i >= nbits_) return -1;
        std::size_t k = std::size_t(i) >> 6;
        std::uint64_t w = words_[k] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (w) return int(k * 64 + std::countr_zero(w));
            if (++k >= words_.size()) return -1;
            w = words_[k];
        }
    }

    Bitset& operator&=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    // Set difference.
    Bitset& operator-=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    // Complement within the fixed width.
    Bitset flipped() const {
        Bitset r(*this);
        for (auto& w : r.words_) w = ~w;
        r.trim();
        return r;
    }

    bool intersects(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }
    bool subset_of(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }

    bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && words_ == o.words_; }

    // Low word view, only meaningful when size_bits() <= 64.
    std::uint64_t word0() const { return words_.empty() ? 0 : words_[0]; }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        for (int i = lowest(); i >= 0; i = next(i)) v.push_back(i);
        return v;
    }

private:
    void trim() {
        if (nbits_ & 63) words_.back() &= (~std::uint64_t{0}) >> (64 - (nbits_ & 63));
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace p5lab
