#include "sdecomp/polynomial.hpp"

#include "sdecomp/linalg.hpp"

namespace sdecomp {

FqPolynomial::FqPolynomial(FieldPtr ctx, std::vector<Elem> coeffs) : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().index == 0) coeffs_.pop_back();
}

Elem FqPolynomial::operator()(Elem x) const noexcept {
    Elem acc{0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = ctx_->add(ctx_->mul(acc, x), *it);
    return acc;
}

FqPolynomial hyper_derivative(const FqPolynomial& f, std::uint64_t k, const BinomialModP& binom) {
    const FieldCtx& F = f.field();
    if (k == 0) return f;
    if (f.is_zero() || static_cast<std::uint64_t>(f.degree()) < k) return FqPolynomial(f.field_ptr());
    const auto& c = f.coeffs();
    std::vector<Elem> out(c.size() - k);
    for (std::size_t j = k; j < c.size(); ++j) {
        if (c[j].index == 0) continue;
        const std::uint32_t r = binom.residue(j, k);
        if (r != 0) out[j - k] = F.mul(F.from_int(r), c[j]);
    }
    return FqPolynomial(f.field_ptr(), std::move(out));
}

FqPolynomial hyper_derivative(const FqPolynomial& f, std::uint64_t k) {
    return hyper_derivative(f, k, BinomialModP(f.field().p()));
}

std::optional<std::vector<Elem>> solve_linear(const FieldCtx& f, FqMatrix m, std::vector<Elem> rhs) {
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].index == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        const Elem inv = f.inv(m[col][col]);
        for (std::size_t j = col; j < n; ++j) m[col][j] = f.mul(m[col][j], inv);
        rhs[col] = f.mul(rhs[col], inv);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].index == 0) continue;
            const Elem factor = m[r][col];
            for (std::size_t j = col; j < n; ++j) m[r][j] = f.sub(m[r][j], f.mul(factor, m[col][j]));
            rhs[r] = f.sub(rhs[r], f.mul(factor, rhs[col]));
        }
    }
    return rhs;
}

Elem determinant(const FieldCtx& f, FqMatrix m) {
    const std::size_t n = m.size();
    Elem det = f.one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].index == 0) ++piv;
        if (piv == n) return f.zero();
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = f.neg(det);
        }
        det = f.mul(det, m[col][col]);
        const Elem inv = f.inv(m[col][col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].index == 0) continue;
            const Elem factor = f.mul(m[r][col], inv);
            for (std::size_t j = col; j < n; ++j) m[r][j] = f.sub(m[r][j], f.mul(factor, m[col][j]));
        }
    }
    return det;
}

}  // namespace sdecomp
