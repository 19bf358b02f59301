#ifndef SDECOMP_BITS_HPP
#define SDECOMP_BITS_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

// Word-level helpers for length-q bit arrays (bit i lives in word i/64).
namespace sdecomp::bits {

using Word = std::uint64_t;

inline std::size_t word_count(std::size_t nbits) { return (nbits + 63) / 64; }

inline bool test(std::span<const Word> w, std::uint32_t i) { return (w[i >> 6] >> (i & 63)) & 1u; }
inline void set(std::span<Word> w, std::uint32_t i) { w[i >> 6] |= Word{1} << (i & 63); }
inline void reset(std::span<Word> w, std::uint32_t i) { w[i >> 6] &= ~(Word{1} << (i & 63)); }

inline std::size_t popcount(std::span<const Word> w) {
    std::size_t c = 0;
    for (Word x : w) c += static_cast<std::size_t>(std::popcount(x));
    return c;
}

inline std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return c;
}

/// a is a subset of b.
inline bool subset_of(std::span<const Word> a, std::span<const Word> b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

inline bool any(std::span<const Word> w) {
    for (Word x : w)
        if (x) return true;
    return false;
}

template <class F>
void for_each(std::span<const Word> w, F&& f) {
    for (std::size_t k = 0; k < w.size(); ++k) {
        Word x = w[k];
        while (x) {
            const int b = std::countr_zero(x);
            f(static_cast<std::uint32_t>(k * 64 + static_cast<std::size_t>(b)));
            x &= x - 1;
        }
    }
}

/// First set bit at index >= from, or nbits when none.
inline std::uint32_t next_set(std::span<const Word> w, std::uint32_t from, std::uint32_t nbits) {
    if (from >= nbits) return nbits;
    std::size_t k = from >> 6;
    Word x = w[k] & (~Word{0} << (from & 63));
    while (true) {
        if (x) {
            const auto i = static_cast<std::uint32_t>(k * 64 + static_cast<std::size_t>(std::countr_zero(x)));
            return i < nbits ? i : nbits;
        }
        if (++k >= w.size()) return nbits;
        x = w[k];
    }
}

/// dst |= src rotated by t inside a cyclic array of nbits bits:
/// bit i of src lands on bit (i + t) mod nbits.
inline void rotate_or(std::span<Word> dst, std::span<const Word> src, std::uint32_t t, std::uint32_t nbits) {
    t %= nbits;
    const std::size_t nw = dst.size();
    // left shift by t, dropping bits >= nbits
    const std::size_t ws = t >> 6, bs = t & 63;
    for (std::size_t i = nw; i-- > ws;) {
        Word v = src[i - ws] << bs;
        if (bs && i - ws >= 1) v |= src[i - ws - 1] >> (64 - bs);
        dst[i] |= v;
    }
    // right shift by nbits - t for the wrapped part
    if (t != 0) {
        const std::uint32_t r = nbits - t;
        const std::size_t wr = r >> 6, br = r & 63;
        for (std::size_t i = 0; i + wr < nw; ++i) {
            Word v = src[i + wr] >> br;
            if (br && i + wr + 1 < nw) v |= src[i + wr + 1] << (64 - br);
            dst[i] |= v;
        }
    }
    if (nbits & 63) dst[nw - 1] &= (Word{1} << (nbits & 63)) - 1;
}

}  // namespace sdecomp::bits

#endif  // SDECOMP_BITS_HPP
