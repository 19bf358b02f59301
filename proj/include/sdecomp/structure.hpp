#ifndef SDECOMP_STRUCTURE_HPP
#define SDECOMP_STRUCTURE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "sdecomp/subset.hpp"

namespace sdecomp {

/// h_k(a_1..a_n), the sum of all degree-k monomials, via the recurrence
/// h_k(a_1..a_i) = h_k(a_1..a_{i-1}) + a_i h_{k-1}(a_1..a_i).
Elem complete_homogeneous(const FieldCtx& f, std::uint64_t k, std::span<const Elem> values);

/// All of h_0..h_kmax in one pass.
std::vector<Elem> complete_homogeneous_all(const FieldCtx& f, std::uint64_t kmax, std::span<const Elem> values);

/// sum_i c_i a_i^{n-1+k} == h_k(a) for k = 0..2n, with c from the coefficient
/// system. Throws DuplicateElements.
bool power_sum_identity_check(const FieldCtx& f, std::span<const Elem> a);

/// Vanishing identities attached to one side of a decomposition: with
/// E = n-1+N, the values C(E, j) sum_i c_i a_i^j for j < E and the top power
/// sum sum_i c_i a_i^E. They all vanish (resp. equal 1) exactly when the
/// auxiliary polynomial of that side is identically zero.
struct IdentityReport {
    std::uint64_t exponent;
    std::uint32_t binom_residue;  // C(E, N) mod p
    std::vector<Elem> weighted_sums;  // index j in [0, E)
    std::vector<std::uint64_t> failing;  // j with weighted_sums[j] != 0
    Elem top_sum;
    bool top_is_one;
    bool all_hold() const { return failing.empty() && top_is_one; }
};

IdentityReport vanishing_identities(const FieldCtx& f, std::span<const Elem> a, std::uint64_t big_n);

struct StructureReport {
    /// 1: |A||B| = |S_d| (distinct sums); 2: |A||B| > |S_d|.
    int branch;
    std::uint64_t product;
    std::uint64_t sd_size;
    std::uint32_t binom_a;  // C(|A|-1+N, N) mod p
    std::uint32_t binom_b;  // C(|B|-1+N, N) mod p
    /// Filled for branch 2 only.
    IdentityReport identities_a;
    IdentityReport identities_b;
    /// For branch 2: each j0 in [n, n-1+N) with C(n-1+N, j0) != 0 mod p, and
    /// h_{j0-(n-1)}(A), which must vanish.
    std::vector<std::pair<std::uint64_t, Elem>> schur_values;
    bool identities_hold;
};

/// Requires A+B = S_d and |A|,|B| >= 2 (HypothesisViolated otherwise).
StructureReport structure_check(const FqSubset& a, const FqSubset& b, std::uint32_t d);

}  // namespace sdecomp

#endif  // SDECOMP_STRUCTURE_HPP
