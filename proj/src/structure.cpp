#include "sdecomp/structure.hpp"

#include "sdecomp/characters.hpp"
#include "sdecomp/stepanov.hpp"

namespace sdecomp {

std::vector<Elem> complete_homogeneous_all(const FieldCtx& f, std::uint64_t kmax, std::span<const Elem> values) {
    // h[k] holds h_k of the prefix processed so far.
    std::vector<Elem> h(kmax + 1, f.zero());
    h[0] = f.one();
    for (auto a : values)
        for (std::uint64_t k = 1; k <= kmax; ++k) h[k] = f.add(h[k], f.mul(a, h[k - 1]));
    return h;
}

Elem complete_homogeneous(const FieldCtx& f, std::uint64_t k, std::span<const Elem> values) {
    return complete_homogeneous_all(f, k, values)[k];
}

bool power_sum_identity_check(const FieldCtx& f, std::span<const Elem> a) {
    const auto c = solve_coefficient_system(f, a);
    const std::uint64_t n = a.size();
    const auto h = complete_homogeneous_all(f, 2 * n, a);
    std::vector<Elem> pw(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) pw[i] = f.pow(a[i], n - 1);
    for (std::uint64_t k = 0; k <= 2 * n; ++k) {
        Elem s = f.zero();
        for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(c[i], pw[i]));
        if (s != h[k]) return false;
        for (std::size_t i = 0; i < a.size(); ++i) pw[i] = f.mul(pw[i], a[i]);
    }
    return true;
}

IdentityReport vanishing_identities(const FieldCtx& f, std::span<const Elem> a, std::uint64_t big_n) {
    const auto c = solve_coefficient_system(f, a);
    const std::uint64_t n = a.size();
    const std::uint64_t e = n - 1 + big_n;
    const BinomialModP binom(f.p());

    IdentityReport rep{e, binom.residue(e, big_n), {}, {}, f.zero(), false};
    rep.weighted_sums.reserve(e);
    std::vector<Elem> pw(a.size(), f.one());
    for (std::uint64_t j = 0; j <= e; ++j) {
        Elem s = f.zero();
        for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(c[i], pw[i]));
        if (j == e) {
            rep.top_sum = s;
        } else {
            const Elem w = f.mul(f.from_int(binom.residue(e, j)), s);
            rep.weighted_sums.push_back(w);
            if (w.index != 0) rep.failing.push_back(j);
        }
        for (std::size_t i = 0; i < a.size(); ++i) pw[i] = f.mul(pw[i], a[i]);
    }
    rep.top_is_one = rep.top_sum == f.one();
    return rep;
}

StructureReport structure_check(const FqSubset& a, const FqSubset& b, std::uint32_t d) {
    require_same_field(a, b);
    if (a.size() < 2 || b.size() < 2) throw Error(ErrorKind::HypothesisViolated, "structure check needs |A|,|B| >= 2");
    const FieldCtx& f = a.field();
    const auto sd = subgroup(a.field_ptr(), d);
    if (!(sumset(a, b) == sd.members))
        throw Error(ErrorKind::HypothesisViolated, "A+B differs from S_" + std::to_string(d));

    const std::uint64_t big_n = sd.order;
    StructureReport rep{};
    rep.product = std::uint64_t{a.size()} * b.size();
    rep.sd_size = big_n;
    rep.binom_a = lucas_binom(a.size() - 1 + big_n, big_n, f.p()).residue;
    rep.binom_b = lucas_binom(b.size() - 1 + big_n, big_n, f.p()).residue;
    rep.identities_hold = true;
    if (rep.product == big_n) {
        rep.branch = 1;
        return rep;
    }
    rep.branch = 2;
    const auto ea = a.elements();
    const auto eb = b.elements();
    rep.identities_a = vanishing_identities(f, ea, big_n);
    rep.identities_b = vanishing_identities(f, eb, big_n);
    rep.identities_hold = rep.binom_a == 0 && rep.binom_b == 0 && rep.identities_a.all_hold() &&
                          rep.identities_b.all_hold();

    const std::uint64_t n = ea.size();
    const std::uint64_t e = n - 1 + big_n;
    const auto h = complete_homogeneous_all(f, big_n, ea);
    const BinomialModP binom(f.p());
    for (std::uint64_t j0 = n; j0 < e; ++j0) {
        if (binom.residue(e, j0) == 0) continue;
        const Elem v = h[j0 - (n - 1)];
        rep.schur_values.emplace_back(j0, v);
        if (v.index != 0) rep.identities_hold = false;
    }
    return rep;
}

}  // namespace sdecomp
