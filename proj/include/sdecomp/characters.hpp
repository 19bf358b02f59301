#ifndef SDECOMP_CHARACTERS_HPP
#define SDECOMP_CHARACTERS_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "sdecomp/subset.hpp"

namespace sdecomp {

/// The subgroup S_d of d-th powers in F_q^*, of order (q-1)/d.
struct SubgroupSpec {
    std::uint32_t d;
    std::uint32_t order;
    FqSubset members;
};

/// S_d as the set {x : dlog(x) = 0 mod d}. Throws NotADivisor unless d | q-1.
SubgroupSpec subgroup(const FieldPtr& ctx, std::uint32_t d);

/// Multiplicative character of exact order d: chi(g^k) = exp(2 pi i k / d),
/// chi(0) = 0.
class Character {
   public:
    Character(FieldPtr ctx, std::uint32_t d);

    std::uint32_t order() const noexcept { return d_; }
    const FieldCtx& field() const noexcept { return *ctx_; }
    std::complex<double> operator()(Elem x) const noexcept;
    /// Exponent class dlog(x) mod d, or kNoLog for zero.
    std::uint32_t residue_class(Elem x) const noexcept;
    const std::vector<std::complex<double>>& roots() const noexcept { return roots_; }

   private:
    FieldPtr ctx_;
    std::uint32_t d_;
    std::vector<std::complex<double>> roots_;
};

struct DoubleCharSum {
    std::complex<double> sum;
    double bound;
    /// Every a + b lands in S_d, so the sum equals |A||B| exactly.
    bool tight_case;
    /// Exact bucket counts: class_counts[k] = #{(a,b) : dlog(a+b) = k mod d}.
    std::vector<std::uint64_t> class_counts;
    std::uint64_t zero_count;
};

/// sum_{a in A, b in B} chi(a+b) together with the classical bound
/// sqrt(q|A||B|) (1-|A|/q)^{1/2} (1-|B|/q)^{1/2}.
/// Pairs are bucketed exactly by residue class; complex arithmetic only
/// happens in the final aggregation.
DoubleCharSum double_char_sum(const Character& chi, const FqSubset& a, const FqSubset& b);

double double_char_bound(std::uint64_t q, std::uint64_t size_a, std::uint64_t size_b);

struct ProductBoundCheck {
    std::uint64_t product;  // |A||B|
    bool holds;             // product < q
};

/// If A+B lies in S_d then |A||B| < q. Throws HypothesisViolated otherwise.
ProductBoundCheck product_bound_check(const FqSubset& a, const FqSubset& b, std::uint32_t d);

}  // namespace sdecomp

#endif  // SDECOMP_CHARACTERS_HPP
