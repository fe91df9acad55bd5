#ifndef MORSEGRAD_BITVECTOR_HPP
#define MORSEGRAD_BITVECTOR_HPP

#include <cstdint>
#include <vector>

namespace morsegrad {

// Fixed-length vector over the two-element field, packed into 64-bit words.
// Addition is XOR; this is the carrier for chains, cycles and matrix rows.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(int size) : size_(size), words_((size + 63) / 64, 0) {}

    int size() const { return size_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(int i, bool value = true) {
        std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip(int i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    // this += other over F2; sizes must match.
    void xor_with(const BitVector& other) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }

    // Index of the lowest set bit, -1 if the vector is zero.
    int lowest_set() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return int(w) * 64 + __builtin_ctzll(words_[w]);
        return -1;
    }

    // Index of the highest set bit, -1 if the vector is zero.
    int highest_set() const {
        for (int w = int(words_.size()) - 1; w >= 0; --w)
            if (words_[w]) return w * 64 + 63 - __builtin_clzll(words_[w]);
        return -1;
    }

    std::vector<int> set_bits() const {
        std::vector<int> out;
        for (int w = 0; w < int(words_.size()); ++w) {
            std::uint64_t x = words_[w];
            while (x) {
                out.push_back(w * 64 + __builtin_ctzll(x));
                x &= x - 1;
            }
        }
        return out;
    }

    bool operator==(const BitVector& other) const = default;

private:
    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace morsegrad

#endif
