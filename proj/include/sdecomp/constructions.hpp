#ifndef SDECOMP_CONSTRUCTIONS_HPP
#define SDECOMP_CONSTRUCTIONS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sdecomp/characters.hpp"

namespace sdecomp {

enum class Family { APlusA, Ternary, SubfieldSd };

std::string to_string(Family f);
/// Accepts "a-plus-a", "ternary", "subfield". Throws InvalidArgument.
Family parse_family(const std::string& s);

struct ConstructionSpec {
    Family family;
    std::uint32_t p;
    std::uint32_t n;
    std::uint32_t k = 0;  // subfield degree, SubfieldSd only
};

/// Digits {0, .., (p-3)/2, (p+1)/2}, the per-coordinate set of the A+A family.
std::vector<std::uint32_t> a_plus_a_digits(std::uint32_t p);
/// Digits {0, 1, 2, r+3, r+6, .., p-3} with r = p mod 3.
std::vector<std::uint32_t> ternary_c_digits(std::uint32_t p);

struct APlusAConstruction {
    FqSubset a;
    std::uint64_t expected_size;  // ((p+1)/2)^n - 1
    bool verified;                // A+A = F_q^* and |A| = expected_size
};

/// The product set of a_plus_a_digits over the coordinates, minus zero.
/// Throws PTooSmall for p < 7.
APlusAConstruction build_A_plus_A(const FieldPtr& ctx);

struct TernaryConstruction {
    FqSubset a, b, c;
    bool verified;  // A+B+C = F_q^*, all parts of size >= 2
};

/// A = B = {0,1}^n, C = ternary_c_digits^n minus zero. Throws PTooSmall for p < 5.
TernaryConstruction build_ternary(const FieldPtr& ctx);

struct SubfieldSd {
    std::uint32_t k;
    std::uint32_t d;  // (q-1)/(p^k-1)
    SubgroupSpec sd;
    FqSubset frobenius_fixed_nonzero;  // {x != 0 : x^(p^k) = x}
    bool agrees;
};

/// S_d for d = (q-1)/(p^k-1), computed twice. Throws NotAProperDivisor unless
/// k | n and 1 <= k < n.
SubfieldSd subfield_S_d(const FieldPtr& ctx, std::uint32_t k);

struct SubfieldChain {
    SubfieldSd subfield;
    std::vector<Elem> basis;  // F_p-basis of the subfield
    FqSubset a;               // A+A construction pushed through the basis map
    bool verified;            // A+A = S_d
};

/// S_d = A+A in F_q with d = (q-1)/(p^k-1). Throws PTooSmall, NotAProperDivisor.
SubfieldChain build_subfield_chain(const FieldPtr& ctx, std::uint32_t k);

}  // namespace sdecomp

#endif  // SDECOMP_CONSTRUCTIONS_HPP
