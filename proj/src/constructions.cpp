#include "sdecomp/constructions.hpp"

namespace sdecomp {

std::string to_string(Family f) {
    switch (f) {
        case Family::APlusA: return "a-plus-a";
        case Family::Ternary: return "ternary";
        case Family::SubfieldSd: return "subfield";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    if (s == "a-plus-a") return Family::APlusA;
    if (s == "ternary") return Family::Ternary;
    if (s == "subfield") return Family::SubfieldSd;
    throw Error(ErrorKind::InvalidArgument, "unknown family '" + s + "'");
}

std::vector<std::uint32_t> a_plus_a_digits(std::uint32_t p) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t x = 0; x <= (p - 3) / 2; ++x) out.push_back(x);
    out.push_back((p + 1) / 2);
    return out;
}

std::vector<std::uint32_t> ternary_c_digits(std::uint32_t p) {
    const std::uint32_t r = p % 3;
    std::vector<std::uint32_t> out{0, 1, 2};
    for (std::uint32_t x = r + 3; x + 3 <= p; x += 3) out.push_back(x);
    return out;
}

namespace {

/// Indices of the vectors in digits^dim, mapped into F_q by `embed`.
template <class Embed>
std::vector<std::uint32_t> product_set(const std::vector<std::uint32_t>& digits, std::uint32_t dim, Embed embed) {
    std::vector<std::uint32_t> out;
    std::vector<std::size_t> pos(dim, 0);
    std::vector<std::uint32_t> coords(dim);
    while (true) {
        for (std::uint32_t i = 0; i < dim; ++i) coords[i] = digits[pos[i]];
        out.push_back(embed(coords));
        std::uint32_t i = 0;
        while (i < dim && ++pos[i] == digits.size()) pos[i++] = 0;
        if (i == dim) break;
    }
    return out;
}

FqSubset drop_zero(const FieldPtr& ctx, std::vector<std::uint32_t> idx) {
    std::erase(idx, 0u);
    return FqSubset(ctx, idx);
}

}  // namespace

APlusAConstruction build_A_plus_A(const FieldPtr& ctx) {
    const std::uint32_t p = ctx->p(), n = ctx->n();
    if (p < 7) throw Error(ErrorKind::PTooSmall, "the A+A family needs p >= 7, got p = " + std::to_string(p));
    const auto idx = product_set(a_plus_a_digits(p), n, [&](const auto& c) { return ctx->from_coordinates(c).index; });
    FqSubset a = drop_zero(ctx, idx);
    std::uint64_t expected = 1;
    for (std::uint32_t i = 0; i < n; ++i) expected *= (p + 1) / 2;
    --expected;
    const bool ok = a.size() == expected && sumset(a, a) == FqSubset::nonzero(ctx);
    return {std::move(a), expected, ok};
}

TernaryConstruction build_ternary(const FieldPtr& ctx) {
    const std::uint32_t p = ctx->p(), n = ctx->n();
    if (p < 5) throw Error(ErrorKind::PTooSmall, "the ternary family needs p >= 5, got p = " + std::to_string(p));
    auto embed = [&](const auto& c) { return ctx->from_coordinates(c).index; };
    const auto ab = product_set({0, 1}, n, embed);
    FqSubset a(ctx, ab);
    FqSubset c = drop_zero(ctx, product_set(ternary_c_digits(p), n, embed));
    const bool ok = a.size() >= 2 && c.size() >= 2 && sumset(sumset(a, a), c) == FqSubset::nonzero(ctx);
    return {a, a, std::move(c), ok};
}

SubfieldSd subfield_S_d(const FieldPtr& ctx, std::uint32_t k) {
    const std::uint32_t n = ctx->n();
    if (k == 0 || k >= n || n % k != 0)
        throw Error(ErrorKind::NotAProperDivisor,
                    "k = " + std::to_string(k) + " is not a proper divisor of n = " + std::to_string(n));
    std::uint64_t pk = 1;
    for (std::uint32_t i = 0; i < k; ++i) pk *= ctx->p();
    const auto d = static_cast<std::uint32_t>((ctx->q() - 1) / (pk - 1));
    auto sd = subgroup(ctx, d);
    std::vector<std::uint32_t> fixed;
    for (std::uint32_t x = 1; x < ctx->q(); ++x)
        if (ctx->pow(Elem{x}, pk) == Elem{x}) fixed.push_back(x);
    FqSubset fx(ctx, fixed);
    const bool agrees = fx == sd.members;
    return {k, d, std::move(sd), std::move(fx), agrees};
}

SubfieldChain build_subfield_chain(const FieldPtr& ctx, std::uint32_t k) {
    const std::uint32_t p = ctx->p();
    if (p < 7) throw Error(ErrorKind::PTooSmall, "the A+A family needs p >= 7, got p = " + std::to_string(p));
    auto sub = subfield_S_d(ctx, k);

    // greedy F_p-basis of the subfield, tracking the span explicitly
    std::vector<Elem> basis;
    std::vector<bool> in_span(ctx->q(), false);
    std::vector<std::uint32_t> span{0};
    in_span[0] = true;
    for (auto x : sub.frobenius_fixed_nonzero.elements()) {
        if (in_span[x.index]) continue;
        basis.push_back(x);
        const std::vector<std::uint32_t> old = span;
        Elem m = x;
        for (std::uint32_t c = 1; c < p; ++c, m = ctx->add(m, x))
            for (auto s : old) {
                const auto y = ctx->add(Elem{s}, m).index;
                in_span[y] = true;
                span.push_back(y);
            }
    }

    auto embed = [&](const auto& coords) {
        Elem acc = ctx->zero();
        for (std::size_t i = 0; i < coords.size(); ++i) acc = ctx->add(acc, ctx->mul(ctx->from_int(coords[i]), basis[i]));
        return acc.index;
    };
    FqSubset a = drop_zero(ctx, product_set(a_plus_a_digits(p), static_cast<std::uint32_t>(basis.size()), embed));
    const bool ok = sub.agrees && basis.size() == k && sumset(a, a) == sub.sd.members;
    return {std::move(sub), std::move(basis), std::move(a), ok};
}

}  // namespace sdecomp
