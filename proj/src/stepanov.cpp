#include "sdecomp/stepanov.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "sdecomp/characters.hpp"
#include "sdecomp/linalg.hpp"

namespace sdecomp {

std::vector<Elem> solve_coefficient_system(const FieldCtx& f, std::span<const Elem> a) {
    const std::size_t n = a.size();
    if (n == 0) throw Error(ErrorKind::EmptyInput, "coefficient system needs at least one element");
    if (std::set<Elem>(a.begin(), a.end()).size() != n)
        throw Error(ErrorKind::DuplicateElements, "coefficient system needs distinct elements");

    FqMatrix m(n, std::vector<Elem>(n));
    for (std::size_t i = 0; i < n; ++i) {
        Elem pw = f.one();
        for (std::size_t j = 0; j < n; ++j) {
            m[j][i] = pw;
            pw = f.mul(pw, a[i]);
        }
    }
    std::vector<Elem> rhs(n, f.zero());
    rhs[n - 1] = f.one();
    auto sol = solve_linear(f, m, rhs);
    if (!sol) throw Error(ErrorKind::InternalProofFailure, "Vandermonde system reported singular");

    for (std::size_t j = 0; j < n; ++j) {
        Elem acc = f.zero();
        for (std::size_t i = 0; i < n; ++i) acc = f.add(acc, f.mul((*sol)[i], m[j][i]));
        if (acc != rhs[j]) throw Error(ErrorKind::InternalProofFailure, "coefficient system residual is nonzero");
    }
    return *sol;
}

FqPolynomial auxiliary_polynomial(const FieldPtr& ctx, std::span<const Elem> a, std::span<const Elem> c,
                                  std::uint64_t exponent) {
    const FieldCtx& f = *ctx;
    const BinomialModP binom(f.p());
    std::vector<Elem> coeffs(exponent + 1, f.zero());
    // Walk k downwards so that pw[i] = a_i^(exponent - k).
    std::vector<Elem> pw(a.size(), f.one());
    for (std::uint64_t k = exponent + 1; k-- > 0;) {
        const std::uint32_t r = binom.residue(exponent, k);
        if (r != 0) {
            Elem s = f.zero();
            for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(c[i], pw[i]));
            coeffs[k] = f.mul(f.from_int(r), s);
        }
        for (std::size_t i = 0; i < a.size(); ++i) pw[i] = f.mul(pw[i], a[i]);
    }
    coeffs[0] = f.sub(coeffs[0], f.one());
    return FqPolynomial(ctx, std::move(coeffs));
}

std::uint64_t StepanovCertificate::multiplicity_sum() const {
    std::uint64_t s = 0;
    for (const auto& e : evidence) s += e.certified_multiplicity;
    return s;
}

namespace {

void require_sum_in_sd_or_zero(const FqSubset& a, const FqSubset& b, const SubgroupSpec& sd) {
    auto allowed = unite(sd.members, FqSubset(a.field_ptr(), {0u}));
    if (!sumset(a, b).is_subset_of(allowed))
        throw Error(ErrorKind::HypothesisViolated,
                    "A+B is not contained in S_" + std::to_string(sd.d) + " together with 0");
}

}  // namespace

StepanovCertificate build_certificate(const FqSubset& a, const FqSubset& b, std::uint32_t d) {
    require_same_field(a, b);
    if (a.empty() || b.empty()) throw Error(ErrorKind::EmptyInput, "certificate needs nonempty A and B");
    const FieldPtr& ctx = a.field_ptr();
    const FieldCtx& f = *ctx;
    const auto sd = subgroup(ctx, d);
    require_sum_in_sd_or_zero(a, b, sd);

    const std::uint64_t big_n = (f.q() - 1) / d;
    const auto a_order = a.elements();
    const std::uint64_t n = a_order.size();
    const FqSubset neg_a = negate(a);

    std::vector<Elem> b_order;
    std::vector<Elem> outside;
    for (auto x : b.elements()) (neg_a.contains(x) ? b_order : outside).push_back(x);
    const std::uint64_t r = b_order.size();
    b_order.insert(b_order.end(), outside.begin(), outside.end());

    const auto c = solve_coefficient_system(f, a_order);
    const std::uint64_t exponent = n - 1 + big_n;
    auto poly = auxiliary_polynomial(ctx, a_order, c, exponent);
    const auto br = lucas_binom(exponent, big_n, f.p());

    StepanovCertificate cert{a, b, d, r, a_order, b_order, c, exponent, poly, br.residue, br.nonzero, big_n,
                             {}, big_n + r, n * b.size(), br.nonzero, false, false, n == 1};

    const BinomialModP binom(f.p());
    std::vector<FqPolynomial> derivs;
    derivs.reserve(n);
    for (std::uint64_t k = 0; k < n; ++k) derivs.push_back(hyper_derivative(poly, k, binom));

    for (std::size_t j = 0; j < b_order.size(); ++j) {
        RootEvidence ev{b_order[j], j < r, {}, 0};
        bool run = true;
        for (std::uint64_t k = 0; k < n; ++k) {
            const bool vanishes = derivs[k](ev.b).index == 0;
            if (vanishes) ev.vanishing_orders.push_back(static_cast<std::uint32_t>(k));
            run = run && vanishes;
            if (run) ev.certified_multiplicity = static_cast<std::uint32_t>(k + 1);
            const bool guaranteed = k + 1 < n || !ev.in_neg_a;
            if (guaranteed && !vanishes)
                throw Error(ErrorKind::InternalProofFailure, "hyper-derivative of order " + std::to_string(k) +
                                                                 " does not vanish at element " +
                                                                 std::to_string(ev.b.index));
        }
        cert.evidence.push_back(std::move(ev));
    }

    if (!poly.is_zero() && cert.multiplicity_sum() > static_cast<std::uint64_t>(poly.degree()))
        throw Error(ErrorKind::InternalProofFailure, "certified multiplicities exceed deg f");
    if (cert.binom_ok) {
        if (poly.degree() != static_cast<std::int64_t>(big_n))
            throw Error(ErrorKind::InternalProofFailure, "deg f differs from (q-1)/d although the binomial is nonzero");
        if (n * b.size() - r > big_n) throw Error(ErrorKind::InternalProofFailure, "mn - r exceeds (q-1)/d");
    }
    cert.bound_holds = cert.product <= cert.bound;
    cert.tight = cert.product == cert.bound;
    return cert;
}

DichotomyResult zero_polynomial_dichotomy(const FqSubset& a, const FqSubset& b, std::uint32_t d) {
    require_same_field(a, b);
    if (a.empty() || b.empty()) throw Error(ErrorKind::EmptyInput, "dichotomy needs nonempty A and B");
    const auto sd = subgroup(a.field_ptr(), d);
    if (!(sumset(a, b) == sd.members))
        throw Error(ErrorKind::HypothesisViolated, "A+B differs from S_" + std::to_string(d));
    const auto cert = build_certificate(a, b, d);
    DichotomyResult out{Dichotomy::BoundCertified, cert.f.degree(), cert.product, cert.binom_ok};
    if (cert.f.is_zero()) {
        out.outcome = Dichotomy::PolynomialForcedZero;
        return out;
    }
    if (cert.product > static_cast<std::uint64_t>(cert.f.degree()))
        throw Error(ErrorKind::InternalProofFailure, "nonzero f of degree below |A||B|");
    return out;
}

}  // namespace sdecomp
