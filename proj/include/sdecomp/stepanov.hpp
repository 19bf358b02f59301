#ifndef SDECOMP_STEPANOV_HPP
#define SDECOMP_STEPANOV_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "sdecomp/polynomial.hpp"
#include "sdecomp/subset.hpp"

namespace sdecomp {

/// Solves sum_i c_i a_i^j = 0 for 0 <= j <= n-2 and sum_i c_i a_i^{n-1} = 1
/// (a transposed Vandermonde system). The solution is checked by substitution
/// before it is returned. Throws DuplicateElements / EmptyInput.
std::vector<Elem> solve_coefficient_system(const FieldCtx& f, std::span<const Elem> a);

/// Evidence collected at one element b of B.
struct RootEvidence {
    Elem b;
    bool in_neg_a;  // b in -A, so only orders 0..n-2 are guaranteed
    /// Orders k in [0, n) for which the k-th hyper-derivative vanishes at b.
    std::vector<std::uint32_t> vanishing_orders;
    /// Length of the run of vanishing orders starting at 0.
    std::uint32_t certified_multiplicity;
};

/// Machine-checkable instance of the bound |A||B| <= (q-1)/d + |A cap (-B)|.
struct StepanovCertificate {
    FqSubset a;
    FqSubset b;
    std::uint32_t d;
    std::uint64_t r;  // |A cap (-B)|
    std::vector<Elem> a_order;
    /// B with the r elements of B cap (-A) first.
    std::vector<Elem> b_order;
    std::vector<Elem> coefficients;  // c_1..c_n for a_order
    std::uint64_t exponent;          // n - 1 + (q-1)/d
    FqPolynomial f;                  // -1 + sum c_i (x + a_i)^exponent
    std::uint32_t binom_residue;     // C(exponent, (q-1)/d) mod p
    bool binom_ok;
    std::uint64_t degree_claim;  // (q-1)/d
    std::vector<RootEvidence> evidence;
    std::uint64_t bound;    // (q-1)/d + r
    std::uint64_t product;  // |A||B|
    /// The bound is a theorem for this instance only when binom_ok.
    bool bound_asserted;
    bool bound_holds;
    bool tight;
    bool degenerate;  // |A| = 1

    std::uint64_t multiplicity_sum() const;
};

/// Builds f, differentiates it on B and checks every vanishing the argument
/// guarantees. Throws HypothesisViolated unless A+B lies in S_d together with
/// 0, and InternalProofFailure if a guaranteed vanishing or the degree claim
/// fails.
StepanovCertificate build_certificate(const FqSubset& a, const FqSubset& b, std::uint32_t d);

/// The auxiliary polynomial alone, expanded with Lucas-filtered binomials.
FqPolynomial auxiliary_polynomial(const FieldPtr& ctx, std::span<const Elem> a, std::span<const Elem> c,
                                  std::uint64_t exponent);

enum class Dichotomy { BoundCertified, PolynomialForcedZero };

struct DichotomyResult {
    Dichotomy outcome;
    std::int64_t deg_f;
    std::uint64_t product;
    bool binom_ok;
};

/// For A+B = S_d exactly: either f is nonzero and |A||B| <= deg f, or f vanishes
/// identically. Throws HypothesisViolated when A+B != S_d.
DichotomyResult zero_polynomial_dichotomy(const FqSubset& a, const FqSubset& b, std::uint32_t d);

}  // namespace sdecomp

#endif  // SDECOMP_STEPANOV_HPP
