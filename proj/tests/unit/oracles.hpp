#ifndef SDECOMP_TEST_ORACLES_HPP
#define SDECOMP_TEST_ORACLES_HPP

// Slow reference implementations used only by tests. None of them call into
// the library's arithmetic beyond element construction.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "sdecomp/characters.hpp"

namespace oracle {

using Poly = std::vector<std::uint64_t>;  // coefficients mod p, low first

inline bool is_prime(std::uint64_t m) {
    if (m < 2) return false;
    for (std::uint64_t k = 2; k * k <= m; ++k)
        if (m % k == 0) return false;
    return true;
}

/// Pascal's triangle mod p up to row t.
inline std::vector<std::vector<std::uint32_t>> pascal(std::uint32_t t, std::uint32_t p) {
    std::vector<std::vector<std::uint32_t>> rows(t + 1);
    rows[0] = {1};
    for (std::uint32_t i = 1; i <= t; ++i) {
        rows[i].assign(i + 1, 1);
        for (std::uint32_t b = 1; b < i; ++b) rows[i][b] = (rows[i - 1][b - 1] + rows[i - 1][b]) % p;
    }
    return rows;
}

/// Exact integer binomial for small arguments.
inline std::uint64_t binom(std::uint64_t t, std::uint64_t b) {
    if (b > t) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= b; ++i) r = r * (t - b + i) / i;
    return r;
}

/// Evaluates a monic polynomial (coefficients low first) at x mod p.
inline std::uint64_t eval_mod(const std::vector<std::uint32_t>& f, std::uint64_t x, std::uint64_t p) {
    std::uint64_t acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
    return acc;
}

/// Brute-force arithmetic in F_p[x]/(m) with polynomials as digit vectors.
struct SlowField {
    std::uint32_t p, n;
    std::vector<std::uint32_t> mod;  // monic, n+1 coefficients

    std::vector<std::uint32_t> digits(std::uint32_t idx) const {
        std::vector<std::uint32_t> d(n);
        for (std::uint32_t i = 0; i < n; ++i, idx /= p) d[i] = idx % p;
        return d;
    }
    std::uint32_t index(const std::vector<std::uint32_t>& d) const {
        std::uint32_t idx = 0;
        for (std::size_t i = n; i-- > 0;) idx = idx * p + d[i];
        return idx;
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        auto x = digits(a), y = digits(b);
        for (std::uint32_t i = 0; i < n; ++i) x[i] = (x[i] + y[i]) % p;
        return index(x);
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        auto x = digits(a), y = digits(b);
        std::vector<std::uint64_t> prod(2 * n, 0);
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{x[i]} * y[j]) % p;
        for (std::size_t k = 2 * n - 1; k >= n; --k) {
            const std::uint64_t c = prod[k];
            if (c == 0) continue;
            for (std::uint32_t i = 0; i <= n; ++i) prod[k - n + i] = (prod[k - n + i] + (p - c) * mod[i]) % p;
        }
        std::vector<std::uint32_t> out(n);
        for (std::uint32_t i = 0; i < n; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
        return index(out);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e--) r = mul(r, a);
        return r;
    }
    std::uint32_t q() const {
        std::uint32_t r = 1;
        for (std::uint32_t i = 0; i < n; ++i) r *= p;
        return r;
    }
    std::uint32_t neg(std::uint32_t a) const {
        auto x = digits(a);
        for (auto& v : x) v = (p - v) % p;
        return index(x);
    }
};

inline SlowField slow(const sdecomp::FieldCtx& f) { return {f.p(), f.n(), f.modulus()}; }

/// Every pair sum, collected naively.
inline std::set<std::uint32_t> naive_sumset(const SlowField& f, const std::vector<std::uint32_t>& x,
                                            const std::vector<std::uint32_t>& y) {
    std::set<std::uint32_t> out;
    for (auto a : x)
        for (auto b : y) out.insert(f.add(a, b));
    return out;
}

inline std::set<std::uint32_t> naive_subgroup(const SlowField& f, std::uint32_t d) {
    std::set<std::uint32_t> out;
    for (std::uint32_t x = 1; x < f.q(); ++x) out.insert(f.pow(x, d));
    return out;
}

/// Orbit representative of an unordered pair {A, B} under (A+t, B-t), swap and
/// dilation by S_d, minimising over every translation t in F_q.
inline std::vector<std::vector<std::uint32_t>> pair_orbit_min(const SlowField& f, const std::set<std::uint32_t>& sd,
                                                              const std::vector<std::uint32_t>& a,
                                                              const std::vector<std::uint32_t>& b) {
    std::vector<std::vector<std::uint32_t>> best;
    for (auto lam : sd)
        for (int swap = 0; swap < 2; ++swap)
            for (std::uint32_t t = 0; t < f.q(); ++t) {
                const auto& x = swap ? b : a;
                const auto& y = swap ? a : b;
                std::vector<std::uint32_t> u, v;
                for (auto e : x) u.push_back(f.add(f.mul(e, lam), t));
                for (auto e : y) v.push_back(f.add(f.mul(e, lam), f.neg(t)));
                std::sort(u.begin(), u.end());
                std::sort(v.begin(), v.end());
                std::vector<std::vector<std::uint32_t>> cand{u, v};
                if (best.empty() || cand < best) best = cand;
            }
    return best;
}

/// All orbits of S_d = A + B with |A|, |B| >= min_size, by enumerating every
/// B inside S_d (after moving 0 into A) and every A inside the largest
/// admissible set. No size rules are used.
inline std::set<std::vector<std::vector<std::uint32_t>>> brute_binary(const SlowField& f, std::uint32_t d,
                                                                      std::uint32_t min_size) {
    const auto sd = naive_subgroup(f, d);
    const std::vector<std::uint32_t> s(sd.begin(), sd.end());
    std::set<std::vector<std::vector<std::uint32_t>>> orbits;
    const std::size_t m = s.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<std::uint32_t> b;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) b.push_back(s[i]);
        if (b.size() < min_size) continue;
        std::vector<std::uint32_t> amax;
        for (std::uint32_t a = 0; a < f.q(); ++a) {
            bool ok = true;
            for (auto y : b) ok = ok && sd.count(f.add(a, y));
            if (ok) amax.push_back(a);
        }
        // 0 must be in A
        if (std::find(amax.begin(), amax.end(), 0u) == amax.end()) continue;
        std::vector<std::uint32_t> rest;
        for (auto a : amax)
            if (a != 0) rest.push_back(a);
        if (rest.size() > 24) continue;  // never reached for q <= 31
        for (std::uint64_t am = 0; am < (std::uint64_t{1} << rest.size()); ++am) {
            std::vector<std::uint32_t> a{0};
            for (std::size_t i = 0; i < rest.size(); ++i)
                if (am >> i & 1) a.push_back(rest[i]);
            if (a.size() < min_size) continue;
            if (naive_sumset(f, a, b) != sd) continue;
            orbits.insert(pair_orbit_min(f, sd, a, b));
        }
    }
    return orbits;
}

/// Leibniz-formula determinant over F_q (n <= 6).
inline std::uint32_t leibniz_det(const SlowField& f, const std::vector<std::vector<std::uint32_t>>& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t total = 0;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        std::uint32_t term = 1;
        for (std::size_t i = 0; i < n; ++i) term = f.mul(term, m[i][perm[i]]);
        total = f.add(total, inversions % 2 ? f.neg(term) : term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// h_k by enumerating exponent vectors.
inline std::uint32_t monomial_h(const SlowField& f, std::uint32_t k, const std::vector<std::uint32_t>& a) {
    std::uint32_t total = 0;
    std::vector<std::uint32_t> e(a.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
        if (i + 1 == a.size()) {
            e[i] = left;
            std::uint32_t term = 1;
            for (std::size_t j = 0; j < a.size(); ++j) term = f.mul(term, f.pow(a[j], e[j]));
            total = f.add(total, term);
            return;
        }
        for (std::uint32_t x = 0; x <= left; ++x) {
            e[i] = x;
            self(self, i + 1, left - x);
        }
    };
    if (a.empty()) return k == 0 ? 1 : 0;
    rec(rec, 0, k);
    return total;
}

}  // namespace oracle

#endif  // SDECOMP_TEST_ORACLES_HPP
