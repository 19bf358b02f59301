#include "sdecomp/classifier.hpp"

#include <cmath>

namespace sdecomp {

std::string to_string(Tier t) {
    switch (t) {
        case Tier::Proven: return "PROVEN";
        case Tier::Conditional: return "CONDITIONAL";
        case Tier::NotApplicable: return "NOT_APPLICABLE";
    }
    return "?";
}

std::string to_string(Conclusion c) {
    switch (c) {
        case Conclusion::NoAPlusA: return "NO_A_PLUS_A";
        case Conclusion::NoBinaryDecomp: return "NO_BINARY_DECOMP";
        case Conclusion::DistinctSums: return "DISTINCT_SUMS";
        case Conclusion::NoTernaryDecomp: return "NO_TERNARY_DECOMP";
    }
    return "?";
}

std::uint64_t ceil_sqrt(std::uint64_t m) {
    auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(m)));
    while (s * s > m) --s;
    while (s * s < m) ++s;
    return s;
}

bool is_delta_good_grid(const PExpansion& e, std::uint32_t n, std::uint32_t k) {
    const std::uint64_t p = e.base;
    const std::uint64_t cap = (20 - k) * (p - 1) / 20;  // floor((1 - k/20)(p-1))
    for (std::uint32_t j = 0; 2 * j < n + 1; ++j)
        if (e.digit(j) > cap) return false;
    return true;
}

namespace {

void check_pair(std::uint32_t d, std::uint64_t q) {
    if (d == 0 || (q - 1) % d != 0)
        throw Error(ErrorKind::NotADivisor, std::to_string(d) + " does not divide " + std::to_string(q - 1));
    if (d == 1 || d == q - 1) throw Error(ErrorKind::DegenerateD, "d must satisfy 2 <= d < q-1");
}

std::uint64_t mult_order(std::uint64_t p, std::uint64_t d) {
    std::uint64_t x = p % d, k = 1;
    while (x != 1 % d) {
        x = x * p % d;
        ++k;
    }
    return k;
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

static std::vector<TheoremVerdict> verdicts_for(const PairClass& pc) {
    const std::uint64_t p = pc.p, n = pc.n, d = pc.d, q = pc.q;
    const std::uint64_t big_n = (q - 1) / d;
    std::vector<TheoremVerdict> out;

    {
        TheoremVerdict v{"distinct_sums", pc.bullets[0], Tier::NotApplicable, {Conclusion::DistinctSums}, "", ""};
        v.citation = "(q-1)/d <= 2p/3: every S_d = A+B has |A||B| = |S_d|; no nontrivial A+B when |S_d| is prime";
        if (v.applies) {
            v.tier = Tier::Proven;
            if (is_prime(big_n)) v.conclusions.push_back(Conclusion::NoBinaryDecomp);
            v.detail = "|S_d| = " + std::to_string(big_n) + (is_prime(big_n) ? " is prime" : " is composite");
        }
        out.push_back(std::move(v));
    }
    {
        TheoremVerdict v{"good_pair_no_a_plus_a", pc.is_good, Tier::NotApplicable, {Conclusion::NoAPlusA}, "", ""};
        v.citation = "good pair (d,q): S_d is not of the form A+A";
        if (v.applies) {
            v.tier = Tier::Proven;
            v.detail = "good via condition " + std::to_string(pc.first_bullet);
        }
        out.push_back(std::move(v));
    }
    {
        const std::uint64_t k = pc.order_p_mod_d;
        const bool c1 = (p - 1) % d == 0;
        const bool c2 = 2 * (ipow(p, k) - 1) <= d * (p - 1);
        const bool c3 = n % (2 * k) == 0 && d <= 2 * p * p;
        TheoremVerdict v{"order_criteria_no_a_plus_a", c1 || c2 || c3, Tier::NotApplicable, {Conclusion::NoAPlusA}, "", ""};
        v.citation = "k = ord_d(p): d | p-1, or (p^k-1)/d <= (p-1)/2, or (2k | n and d <= 2p^2) gives S_d != A+A";
        if (v.applies) {
            v.tier = Tier::Proven;
            v.detail = std::string("k = ") + std::to_string(k) + (c1 ? "; d | p-1" : "") +
                       (c2 ? "; (p^k-1)/d <= (p-1)/2" : "") + (c3 ? "; 2k | n, d <= 2p^2" : "");
        }
        out.push_back(std::move(v));
    }
    {
        TheoremVerdict v{"ternary_prime_field", n == 1, Tier::NotApplicable, {Conclusion::NoTernaryDecomp}, "", ""};
        v.citation = "proper subgroups of F_p larger than an ineffective constant M are not A+B+C";
        if (v.applies) v.tier = Tier::Conditional;
        out.push_back(std::move(v));
    }
    {
        // d <= q^(1/10 - eps) for some eps > 0  <=>  d^10 < q
        const bool hyp = std::pow(static_cast<double>(d), 10.0) < static_cast<double>(q);
        TheoremVerdict v{"ternary_small_index", hyp, Tier::NotApplicable, {Conclusion::NoTernaryDecomp}, "", ""};
        v.citation = "d <= q^(1/10 - eps) and q > Q(eps) gives no nontrivial A+B+C";
        if (v.applies) v.tier = Tier::Conditional;
        out.push_back(std::move(v));
    }
    {
        bool hyp = false;
        if (pc.delta_good_sup) {
            const double delta = *pc.delta_good_sup;
            hyp = std::pow(static_cast<double>(d), 4.0) < static_cast<double>(q) * std::pow(delta, 6.0);
        }
        TheoremVerdict v{"ternary_delta_good", hyp, Tier::NotApplicable, {Conclusion::NoTernaryDecomp}, "", ""};
        v.citation = "delta-good with d <= q^(1/4 - eps) delta^(3/2), q > Q(eps), p > P(eps) gives no nontrivial A+B+C";
        if (v.applies) {
            v.tier = Tier::Conditional;
            v.detail = "delta = " + std::to_string(*pc.delta_good_sup);
        }
        out.push_back(std::move(v));
    }
    {
        const bool hyp = n >= 5 && (p - 1) % d == 0;
        TheoremVerdict v{"ternary_constant_digits", hyp, Tier::NotApplicable, {Conclusion::NoTernaryDecomp}, "", ""};
        v.citation = "n >= 5, d | p-1 and p > P gives no nontrivial A+B+C";
        if (v.applies) v.tier = Tier::Conditional;
        out.push_back(std::move(v));
    }
    return out;
}

PairClass classify_pair(std::uint32_t d, std::uint64_t q) {
    const auto pp = split_prime_power(q);
    check_pair(d, q);
    const std::uint64_t p = pp.p, n = pp.n;
    const std::uint64_t big_n = (q - 1) / d;

    PairClass pc{};
    pc.d = d;
    pc.q = q;
    pc.p = pp.p;
    pc.n = pp.n;
    pc.expansion = base_p_digits(big_n, pp.p);
    const auto& e = pc.expansion;

    pc.bullets[0] = 3 * big_n <= 2 * p;
    pc.bullets[1] = true;
    for (std::uint64_t j = 0; 2 * j < n; ++j)
        if (2 * std::uint64_t{e.digit(j)} > p - 1) pc.bullets[1] = false;
    if (n % 2 == 1 && n >= 3) {
        const std::uint64_t r = (n - 1) / 2;
        const std::uint64_t cs = ceil_sqrt(p);
        const std::uint64_t er = e.digit(r);
        // e_r <= p - 1 - ceil(sqrt p)/2 over the rationals
        pc.bullets[2] = d <= 2 * p - 2 && 2 * er + cs <= 2 * (p - 1);
        pc.bullet3_floor_reading = d <= 2 * p - 2 && er + cs / 2 <= p - 1;
    }
    if (n % 2 == 0) {
        const std::uint64_t r = n / 2;
        pc.bullets[3] = d <= 2 * p * p && 2 * static_cast<std::int64_t>(e.digit(r - 1)) <= static_cast<std::int64_t>(p) - 3;
    }
    pc.first_bullet = 0;
    for (int i = 0; i < 4; ++i) {
        if (pc.bullets[static_cast<std::size_t>(i)]) {
            pc.first_bullet = i + 1;
            break;
        }
    }
    pc.is_good = pc.first_bullet != 0;

    for (std::uint32_t k = 1; k <= 19; ++k) {
        pc.delta_good[k - 1] = is_delta_good_grid(e, pp.n, k);
        if (pc.delta_good[k - 1]) pc.delta_good_sup = k / 20.0;
    }
    pc.order_p_mod_d = mult_order(p, d);
    pc.verdicts = verdicts_for(pc);
    return pc;
}

std::vector<TheoremVerdict> theorem_verdicts(std::uint32_t d, std::uint64_t q) { return classify_pair(d, q).verdicts; }

bool proves(const PairClass& pc, Conclusion c) {
    for (const auto& v : pc.verdicts) {
        if (!v.applies || v.tier != Tier::Proven) continue;
        for (auto x : v.conclusions)
            if (x == c) return true;
    }
    return false;
}

}  // namespace sdecomp
