#include "sdecomp/field.hpp"

#include <algorithm>
#include <string>

namespace sdecomp {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::CompositeP: return "CompositeP";
        case ErrorKind::FieldTooLarge: return "FieldTooLarge";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::ContextMismatch: return "ContextMismatch";
        case ErrorKind::ZeroDilation: return "ZeroDilation";
        case ErrorKind::NotADivisor: return "NotADivisor";
        case ErrorKind::DegenerateD: return "DegenerateD";
        case ErrorKind::TrivialCharacter: return "TrivialCharacter";
        case ErrorKind::HypothesisViolated: return "HypothesisViolated";
        case ErrorKind::DuplicateElements: return "DuplicateElements";
        case ErrorKind::InternalProofFailure: return "InternalProofFailure";
        case ErrorKind::FieldTooLargeForExhaustive: return "FieldTooLargeForExhaustive";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::PTooSmall: return "PTooSmall";
        case ErrorKind::NotAProperDivisor: return "NotAProperDivisor";
        case ErrorKind::NotAPrimePower: return "NotAPrimePower";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

std::uint64_t PExpansion::value() const noexcept {
    std::uint64_t v = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = v * base + *it;
    return v;
}

bool is_prime(std::uint64_t m) noexcept {
    if (m < 2) return false;
    if (m % 2 == 0) return m == 2;
    for (std::uint64_t f = 3; f * f <= m; f += 2)
        if (m % f == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= m; ++f) {
        if (m % f != 0) continue;
        out.push_back(f);
        while (m % f == 0) m /= f;
    }
    if (m > 1) out.push_back(m);
    return out;
}

PrimePower split_prime_power(std::uint64_t q) {
    if (q < 2) throw Error(ErrorKind::NotAPrimePower, std::to_string(q));
    auto factors = prime_factors(q);
    if (factors.size() != 1) throw Error(ErrorKind::NotAPrimePower, std::to_string(q));
    std::uint32_t n = 0;
    for (std::uint64_t m = q; m > 1; m /= factors[0]) ++n;
    return {static_cast<std::uint32_t>(factors[0]), n};
}

bool is_prime_power(std::uint64_t q) { return q >= 2 && prime_factors(q).size() == 1; }

PExpansion base_p_digits(std::uint64_t m, std::uint32_t p) {
    if (p < 2) throw Error(ErrorKind::InvalidArgument, "base must be at least 2");
    PExpansion e;
    e.base = p;
    do {
        e.digits.push_back(static_cast<std::uint32_t>(m % p));
        m /= p;
    } while (m > 0);
    return e;
}

namespace {

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

// C(a, b) mod p for a, b < p by the multiplicative formula.
std::uint32_t small_binom(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    if (b > a) return 0;
    b = std::min(b, a - b);
    std::uint64_t num = 1, den = 1;
    for (std::uint32_t i = 0; i < b; ++i) {
        num = num * (a - i) % p;
        den = den * (i + 1) % p;
    }
    return static_cast<std::uint32_t>(num * powmod(den, p - 2, p) % p);
}

}  // namespace

BinomResidue lucas_binom(std::uint64_t top, std::uint64_t bottom, std::uint32_t p) {
    if (bottom > top) return {false, 0};
    std::uint64_t acc = 1 % p;
    while (bottom > 0 || top > 0) {
        auto t = static_cast<std::uint32_t>(top % p);
        auto b = static_cast<std::uint32_t>(bottom % p);
        if (b > t) return {false, 0};
        acc = acc * small_binom(t, b, p) % p;
        top /= p;
        bottom /= p;
    }
    return {acc != 0, static_cast<std::uint32_t>(acc)};
}

BinomialModP::BinomialModP(std::uint32_t p) : p_(p), fact_(p), inv_fact_(p) {
    if (!is_prime(p)) throw Error(ErrorKind::CompositeP, std::to_string(p));
    fact_[0] = 1;
    for (std::uint32_t i = 1; i < p; ++i)
        fact_[i] = static_cast<std::uint32_t>(std::uint64_t{fact_[i - 1]} * i % p);
    inv_fact_[p - 1] = static_cast<std::uint32_t>(powmod(fact_[p - 1], p - 2, p));
    for (std::uint32_t i = p - 1; i > 0; --i)
        inv_fact_[i - 1] = static_cast<std::uint32_t>(std::uint64_t{inv_fact_[i]} * i % p);
}

std::uint32_t BinomialModP::small(std::uint32_t a, std::uint32_t b) const noexcept {
    if (b > a) return 0;
    return static_cast<std::uint32_t>(std::uint64_t{fact_[a]} * inv_fact_[b] % p_ * inv_fact_[a - b] % p_);
}

std::uint32_t BinomialModP::residue(std::uint64_t top, std::uint64_t bottom) const noexcept {
    if (bottom > top) return 0;
    std::uint64_t acc = 1 % p_;
    while (bottom > 0) {
        auto t = static_cast<std::uint32_t>(top % p_);
        auto b = static_cast<std::uint32_t>(bottom % p_);
        if (b > t) return 0;
        acc = acc * small(t, b) % p_;
        top /= p_;
        bottom /= p_;
    }
    return static_cast<std::uint32_t>(acc);
}

// ---------------------------------------------------------------------------
// Dense polynomials over F_p used while constructing a field.

namespace {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f, f monic.
Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    while (a.size() > df) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i) a[shift + i] = (a[shift + i] + (p - lead) * f[i]) % p;
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
    Poly r{1};
    base = poly_mod(std::move(base), f, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        e >>= 1;
        if (e) base = poly_mulmod(base, base, f, p);
    }
    return poly_mod(std::move(r), f, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic so poly_mod applies
        const std::uint64_t inv = powmod(b.back(), p - 2, p);
        for (auto& c : b) c = c * inv % p;
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly sub_x(Poly a, std::uint64_t p) {
    if (a.size() < 2) a.resize(2, 0);
    a[1] = (a[1] + p - 1) % p;
    trim(a);
    return a;
}

}  // namespace

bool is_irreducible_mod_p(std::span<const std::uint32_t> monic, std::uint32_t p) {
    if (monic.empty() || monic.back() != 1) return false;
    const std::size_t n = monic.size() - 1;
    if (n == 0) return false;
    if (n == 1) return true;
    const Poly f(monic.begin(), monic.end());
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t v = 0;
        for (std::size_t i = n + 1; i-- > 0;) v = (v * x + f[i]) % p;
        if (v == 0) return false;
    }
    // frob[i] = x^(p^i) mod f
    std::vector<Poly> frob{Poly{0, 1}};
    for (std::size_t i = 1; i <= n; ++i) frob.push_back(poly_powmod(frob.back(), p, f, p));
    if (sub_x(frob[n], p).size() != 0) return false;
    for (auto r : prime_factors(n)) {
        Poly g = poly_gcd(f, sub_x(frob[n / r], p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

Elem FieldCtx::from_int(std::int64_t v) const noexcept {
    const auto pp = static_cast<std::int64_t>(p_);
    return Elem{static_cast<std::uint32_t>(((v % pp) + pp) % pp)};
}

Elem FieldCtx::add(Elem a, Elem b) const noexcept {
    if (n_ == 1) {
        const std::uint32_t s = a.index + b.index;
        return Elem{s >= p_ ? s - p_ : s};
    }
    if (p_ == 2) return Elem{a.index ^ b.index};
    std::uint32_t out = 0;
    std::uint32_t x = a.index, y = b.index;
    for (std::uint32_t j = 0; j < n_; ++j) {
        std::uint32_t s = x % p_ + y % p_;
        if (s >= p_) s -= p_;
        out += s * pow_p_[j];
        x /= p_;
        y /= p_;
    }
    return Elem{out};
}

Elem FieldCtx::mul(Elem a, Elem b) const noexcept {
    if (a.index == 0 || b.index == 0) return Elem{0};
    std::uint32_t k = dlog_[a.index] + dlog_[b.index];
    if (k >= q_ - 1) k -= q_ - 1;
    return exp_[k];
}

Elem FieldCtx::inv(Elem a) const {
    if (a.index == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    const std::uint32_t k = dlog_[a.index];
    return exp_[k == 0 ? 0 : q_ - 1 - k];
}

Elem FieldCtx::pow(Elem a, std::uint64_t e) const noexcept {
    Elem r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        e >>= 1;
        if (e) a = mul(a, a);
    }
    return r;
}

std::vector<std::uint32_t> FieldCtx::coordinates(Elem x) const {
    std::vector<std::uint32_t> c(n_);
    std::uint32_t v = x.index;
    for (auto& d : c) {
        d = v % p_;
        v /= p_;
    }
    return c;
}

Elem FieldCtx::from_coordinates(std::span<const std::uint32_t> coords) const {
    if (coords.size() != n_) throw Error(ErrorKind::InvalidArgument, "coordinate count differs from n");
    std::uint32_t v = 0;
    for (std::size_t j = n_; j-- > 0;) {
        if (coords[j] >= p_) throw Error(ErrorKind::InvalidArgument, "coordinate out of range");
        v = v * p_ + coords[j];
    }
    return Elem{v};
}

FieldPtr make_field(std::uint32_t p, std::uint32_t n) {
    if (!is_prime(p)) throw Error(ErrorKind::CompositeP, std::to_string(p));
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        q *= p;
        if (q > kMaxFieldOrder) throw Error(ErrorKind::FieldTooLarge, std::to_string(p) + "^" + std::to_string(n));
    }

    std::shared_ptr<FieldCtx> ctx(new FieldCtx());
    ctx->p_ = p;
    ctx->n_ = n;
    ctx->q_ = static_cast<std::uint32_t>(q);
    ctx->pow_p_.resize(n);
    for (std::uint32_t j = 0, v = 1; j < n; ++j, v *= p) ctx->pow_p_[j] = v;

    // Lexicographic order over (c_0, ..., c_{n-1}) with c_0 most significant.
    std::vector<std::uint32_t> mod(n + 1, 0);
    mod[n] = 1;
    for (std::uint64_t m = 0; m < q; ++m) {
        std::uint64_t v = m;
        for (std::uint32_t j = n; j-- > 0;) {
            mod[j] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        if (is_irreducible_mod_p(mod, p)) break;
    }
    ctx->modulus_ = mod;

    const Poly f(mod.begin(), mod.end());
    auto to_poly = [&](std::uint32_t idx) {
        Poly a(n, 0);
        for (std::uint32_t j = 0; j < n; ++j, idx /= p) a[j] = idx % p;
        trim(a);
        return a;
    };
    auto to_index = [&](const Poly& a) {
        std::uint32_t v = 0;
        for (std::size_t j = a.size(); j-- > 0;) v = v * p + static_cast<std::uint32_t>(a[j]);
        return v;
    };

    const std::uint64_t order = q - 1;
    ctx->order_primes_ = prime_factors(order);
    std::uint32_t g = 1;
    for (; g < q; ++g) {
        const Poly gp = to_poly(g);
        bool primitive = true;
        for (auto r : ctx->order_primes_) {
            if (to_index(poly_powmod(gp, order / r, f, p)) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) break;
    }
    ctx->generator_ = Elem{g};

    ctx->exp_.resize(order);
    ctx->dlog_.assign(q, kNoLog);
    const Poly gp = to_poly(g);
    Poly cur{1};
    for (std::uint32_t k = 0; k < order; ++k) {
        const std::uint32_t idx = to_index(cur);
        ctx->exp_[k] = Elem{idx};
        ctx->dlog_[idx] = k;
        cur = poly_mulmod(cur, gp, f, p);
    }

    ctx->neg_.resize(q);
    for (std::uint32_t x = 0; x < q; ++x) {
        std::uint32_t out = 0, v = x;
        for (std::uint32_t j = 0; j < n; ++j, v /= p) out += ((p - v % p) % p) * ctx->pow_p_[j];
        ctx->neg_[x] = Elem{out};
    }
    return ctx;
}

FieldPtr make_field_of_order(std::uint64_t q) {
    if (q > kMaxFieldOrder) throw Error(ErrorKind::FieldTooLarge, std::to_string(q));
    const auto pp = split_prime_power(q);
    return make_field(pp.p, pp.n);
}

}  // namespace sdecomp
