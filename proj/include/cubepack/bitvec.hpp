#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cubepack {

// Bitset over a fixed universe [0, size), 64-bit words.
class BitVec {
  public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    BitVec() = default;
    explicit BitVec(std::size_t bits, bool ones = false)
        : nbits_(bits), w_((bits + 63) / 64, ones ? ~0ull : 0ull) {
        if (ones) trim();
    }

    std::size_t size() const { return nbits_; }

    void set(std::size_t i) { w_[i >> 6] |= 1ull << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1ull; }

    void clear() { std::fill(w_.begin(), w_.end(), 0ull); }
    void fill() {
        std::fill(w_.begin(), w_.end(), ~0ull);
        trim();
    }
    void flip_all() {
        for (auto& w : w_) w = ~w;
        trim();
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    BitVec& operator&=(const BitVec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    BitVec& operator|=(const BitVec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    // this &= ~o
    BitVec& and_not(const BitVec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    bool operator==(const BitVec& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }
    bool operator!=(const BitVec& o) const { return !(*this == o); }

    bool intersects(const BitVec& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    static bool intersects3(const BitVec& a, const BitVec& b, const BitVec& c) {
        for (std::size_t i = 0; i < a.w_.size(); ++i)
            if (a.w_[i] & b.w_[i] & c.w_[i]) return true;
        return false;
    }
    bool is_subset_of(const BitVec& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    std::size_t count_and(const BitVec& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(w_[i] & o.w_[i]));
        return c;
    }

    std::size_t find_first() const { return scan(0); }
    // First set bit at position > i.
    std::size_t find_next(std::size_t i) const { return i + 1 >= nbits_ ? npos : scan(i + 1); }
    // First set bit at position >= i.
    std::size_t find_from(std::size_t i) const { return i >= nbits_ ? npos : scan(i); }

    // Number of set bits at positions >= i.
    std::size_t count_from(std::size_t i) const {
        if (i >= nbits_) return 0;
        std::size_t wi = i >> 6, c = 0;
        c += static_cast<std::size_t>(std::popcount(w_[wi] & (~0ull << (i & 63))));
        for (std::size_t j = wi + 1; j < w_.size(); ++j)
            c += static_cast<std::size_t>(std::popcount(w_[j]));
        return c;
    }

    // Position of the k-th (0-based) set bit; npos if fewer than k+1 set.
    std::size_t select(std::size_t k) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            auto pc = static_cast<std::size_t>(std::popcount(w_[wi]));
            if (k < pc) {
                std::uint64_t w = w_[wi];
                while (k--) w &= w - 1;
                return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            }
            k -= pc;
        }
        return npos;
    }

    template <typename Fn>
    void for_each_set(Fn&& fn) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                fn((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    const std::vector<std::uint64_t>& words() const { return w_; }

  private:
    std::size_t scan(std::size_t from) const {
        std::size_t wi = from >> 6;
        if (wi >= w_.size()) return npos;
        std::uint64_t w = w_[wi] & (~0ull << (from & 63));
        while (true) {
            if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == w_.size()) return npos;
            w = w_[wi];
        }
    }
    void trim() {
        if (nbits_ & 63) w_.back() &= ~0ull >> (64 - (nbits_ & 63));
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace cubepack
