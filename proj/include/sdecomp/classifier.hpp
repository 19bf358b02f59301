#ifndef SDECOMP_CLASSIFIER_HPP
#define SDECOMP_CLASSIFIER_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdecomp/field.hpp"

namespace sdecomp {

/// How a theorem's conclusion is backed.
enum class Tier {
    Proven,       // hypotheses verified, conclusion is a theorem
    Conditional,  // hypotheses verified, conclusion needs q beyond an unknown constant
    NotApplicable,
};

enum class Conclusion {
    NoAPlusA,          // S_d != A + A
    NoBinaryDecomp,    // no S_d = A + B with |A|,|B| >= 2
    DistinctSums,      // any S_d = A + B has |A||B| = |S_d|
    NoTernaryDecomp,   // no S_d = A + B + C with all parts of size >= 2
};

std::string to_string(Tier t);
std::string to_string(Conclusion c);

struct TheoremVerdict {
    std::string theorem;  // stable identifier, e.g. "good_pair_no_a_plus_a"
    bool applies;
    Tier tier;
    std::vector<Conclusion> conclusions;
    std::string citation;
    std::string detail;
};

/// Digit-based classification of a pair (d, q).
struct PairClass {
    std::uint32_t d;
    std::uint64_t q;
    std::uint32_t p;
    std::uint32_t n;
    PExpansion expansion;  // of (q-1)/d
    bool is_good;
    /// Which of the four good-pair conditions hold (index 0 = condition 1).
    std::array<bool, 4> bullets;
    /// First condition that holds (1..4), 0 if none.
    int first_bullet;
    /// Condition 3 under the floored reading e_r <= p-1-floor(ceil(sqrt p)/2);
    /// reported separately because it can differ from the rational reading.
    bool bullet3_floor_reading;
    /// Largest grid delta in {0.05, ..., 0.95} for which the pair is delta-good.
    std::optional<double> delta_good_sup;
    /// delta_good[k] for delta = (k+1)/20.
    std::array<bool, 19> delta_good;
    /// Multiplicative order of p modulo d.
    std::uint64_t order_p_mod_d;
    std::vector<TheoremVerdict> verdicts;
};

/// Integer ceil(sqrt(m)).
std::uint64_t ceil_sqrt(std::uint64_t m);

/// e_j <= floor((1 - delta)(p-1)) for all 0 <= j < (n+1)/2 with delta = k/20.
bool is_delta_good_grid(const PExpansion& e, std::uint32_t n, std::uint32_t k);

/// Throws NotADivisor, DegenerateD (d = 1 or d = q-1) or NotAPrimePower.
PairClass classify_pair(std::uint32_t d, std::uint64_t q);

std::vector<TheoremVerdict> theorem_verdicts(std::uint32_t d, std::uint64_t q);

/// True when some verdict proves the conclusion.
bool proves(const PairClass& pc, Conclusion c);

}  // namespace sdecomp

#endif  // SDECOMP_CLASSIFIER_HPP
