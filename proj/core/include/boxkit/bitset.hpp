#ifndef BOXKIT_BITSET_HPP
#define BOXKIT_BITSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace boxkit {

// Dynamic fixed-width bitset. Word count is decided at construction; all
// binary operations assume equal width.
class Bitset {
public:
    Bitset() : nbits_(0) {}
    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0ULL) {}

    int size() const { return nbits_; }

    void set(int i) { w_[i >> 6] |= (1ULL << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1ULL; }

    void set_all() {
        for (auto& x : w_) x = ~0ULL;
        trim();
    }
    void clear() {
        for (auto& x : w_) x = 0ULL;
    }

    int count() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }
    bool any() const {
        for (auto x : w_)
            if (x) return true;
        return false;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    void and_not(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    }

    // dst = a & b, no allocation; dst must share the width of a and b.
    static void and_into(Bitset& dst, const Bitset& a, const Bitset& b) {
        for (std::size_t i = 0; i < dst.w_.size(); ++i) dst.w_[i] = a.w_[i] & b.w_[i];
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }

    template <class F>
    void for_each_set(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t x = w_[wi];
            while (x) {
                int b = std::countr_zero(x);
                f(static_cast<int>((wi << 6) + b));
                x &= x - 1;
            }
        }
    }

private:
    void trim() {
        if (w_.empty()) return;
        int r = nbits_ & 63;
        if (r) w_.back() &= (1ULL << r) - 1ULL;
    }

    int nbits_;
    std::vector<std::uint64_t> w_;
};

}  // namespace boxkit

#endif
