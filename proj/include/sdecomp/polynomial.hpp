#ifndef SDECOMP_POLYNOMIAL_HPP
#define SDECOMP_POLYNOMIAL_HPP

#include <cstdint>
#include <vector>

#include "sdecomp/field.hpp"

namespace sdecomp {

/// Dense univariate polynomial over F_q, coefficients low degree first with
/// no trailing zeros stored.
class FqPolynomial {
   public:
    static constexpr std::int64_t kZeroDegree = -1;

    explicit FqPolynomial(FieldPtr ctx) : ctx_(std::move(ctx)) {}
    FqPolynomial(FieldPtr ctx, std::vector<Elem> coeffs);

    const FieldCtx& field() const noexcept { return *ctx_; }
    const FieldPtr& field_ptr() const noexcept { return ctx_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// kZeroDegree for the zero polynomial.
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
    Elem coeff(std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : Elem{0}; }

    Elem operator()(Elem x) const noexcept;

    bool operator==(const FqPolynomial& other) const {
        return ctx_->same_field(*other.ctx_) && coeffs_ == other.coeffs_;
    }

   private:
    FieldPtr ctx_;
    std::vector<Elem> coeffs_;
};

/// k-th hyper-derivative (Hasse derivative): sum_j C(j, k) c_j x^{j-k},
/// with the binomials reduced mod p through Lucas' theorem.
FqPolynomial hyper_derivative(const FqPolynomial& f, std::uint64_t k, const BinomialModP& binom);
FqPolynomial hyper_derivative(const FqPolynomial& f, std::uint64_t k);

}  // namespace sdecomp

#endif  // SDECOMP_POLYNOMIAL_HPP
