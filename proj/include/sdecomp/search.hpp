#ifndef SDECOMP_SEARCH_HPP
#define SDECOMP_SEARCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sdecomp/characters.hpp"

namespace sdecomp {

/// Outcome of a decomposition question.
enum class Status {
    Impossible,     // ruled out by a theorem
    Exists,         // witness found and verified
    Unknown,        // undecided (e.g. budget exhausted)
    NoneExhaustive, // completed search found nothing
};

std::string to_string(Status s);

struct PruneFlags {
    bool cauchy_davenport = true;  // |X+Y| >= min{p, |X|+|Y|-1}
    bool product_below_q = true;   // X+Y in S_d forces |X||Y| < q
    bool stepanov_lucas = true;    // Lucas condition forces |X||Y| <= (q-1)/d
    bool distinct_sums = true;     // (q-1)/d <= 2p/3 forces |X||Y| = (q-1)/d
};

inline constexpr std::uint64_t kBinaryExhaustiveMaxQ = 4096;
inline constexpr std::uint64_t kTernaryExhaustiveMaxQ = 64;

struct SearchTask {
    std::uint64_t q = 0;
    std::uint32_t d = 0;
    int arity = 2;
    std::uint32_t min_part_size = 2;
    std::uint64_t budget = 200'000'000;  // search-tree node limit
    PruneFlags prune;
    unsigned threads = 0;  // 0: hardware concurrency
    std::size_t max_witnesses = 100'000;
};

/// Parts as sorted index lists. The parts are the canonical representative of
/// the witness's orbit, so they double as its canonical key.
struct DecompWitness {
    std::vector<std::vector<std::uint32_t>> parts;

    bool operator==(const DecompWitness&) const = default;
    auto operator<=>(const DecompWitness&) const = default;
};

struct Verdict {
    Status status = Status::Unknown;
    /// Sorted by canonical key; one entry per symmetry orbit.
    std::vector<DecompWitness> witnesses;
    bool exhaustive = false;
    /// Witness enumeration stopped at max_witnesses.
    bool truncated = false;
    std::uint64_t nodes = 0;
    std::string reason;
};

/// Exhaustive branch-and-bound search for S_d = A + B with both parts of size
/// at least task.min_part_size, reporting every witness up to part swap,
/// translation (A+t, B-t) and dilation by elements of S_d.
/// Throws FieldTooLargeForExhaustive for q > 4096, NotADivisor, DegenerateD.
Verdict search_binary(const FieldPtr& ctx, const SearchTask& task);
Verdict search_binary(const SearchTask& task);

/// Same for S_d = A + B + C, exhaustive for q <= 64.
Verdict search_ternary(const FieldPtr& ctx, const SearchTask& task);
Verdict search_ternary(const SearchTask& task);

/// Recomputes the sumset of the parts and compares it with S_d bit for bit.
bool verify_witness(const FieldPtr& ctx, const std::vector<std::vector<std::uint32_t>>& parts, std::uint32_t d,
                    std::uint32_t min_part_size = 2);
bool verify_witness(const std::vector<FqSubset>& parts, std::uint32_t d, std::uint32_t min_part_size = 2);

/// Lexicographically least image of the parts under part permutation,
/// translations whose shifts sum to zero, and dilation by S_d.
std::vector<std::vector<std::uint32_t>> canonical_key(const FieldCtx& f, const FqSubset& sd,
                                                      const std::vector<std::vector<std::uint32_t>>& parts);

}  // namespace sdecomp

#endif  // SDECOMP_SEARCH_HPP
