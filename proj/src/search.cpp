#include "sdecomp/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

namespace sdecomp {

std::string to_string(Status s) {
    switch (s) {
        case Status::Impossible: return "IMPOSSIBLE";
        case Status::Exists: return "EXISTS";
        case Status::Unknown: return "UNKNOWN";
        case Status::NoneExhaustive: return "NONE_EXHAUSTIVE";
    }
    return "?";
}

using Key = std::vector<std::vector<std::uint32_t>>;

Key canonical_key(const FieldCtx& f, const FqSubset& sd, const Key& parts) {
    const std::size_t k = parts.size();
    std::vector<std::size_t> perm(k);
    Key best;
    bool have = false;
    Key img(k);
    for (auto lambda : sd.elements()) {
        Key scaled(k);
        for (std::size_t i = 0; i < k; ++i)
            for (auto x : parts[i]) scaled[i].push_back(f.mul(Elem{x}, lambda).index);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            // shifts t_0..t_{k-2} move some element of each leading part to 0;
            // the last part absorbs minus their sum
            std::vector<std::size_t> choice(k - 1, 0);
            while (true) {
                Elem total{0};
                for (std::size_t i = 0; i + 1 < k; ++i) {
                    const Elem t = f.neg(Elem{scaled[perm[i]][choice[i]]});
                    total = f.add(total, t);
                    img[i].clear();
                    for (auto x : scaled[perm[i]]) img[i].push_back(f.add(Elem{x}, t).index);
                    std::sort(img[i].begin(), img[i].end());
                }
                const Elem last = f.neg(total);
                img[k - 1].clear();
                for (auto x : scaled[perm[k - 1]]) img[k - 1].push_back(f.add(Elem{x}, last).index);
                std::sort(img[k - 1].begin(), img[k - 1].end());
                if (!have || img < best) {
                    best = img;
                    have = true;
                }
                std::size_t i = 0;
                while (i + 1 < k && ++choice[i] == scaled[perm[i]].size()) choice[i++] = 0;
                if (i + 1 >= k) break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return best;
}

bool verify_witness(const std::vector<FqSubset>& parts, std::uint32_t d, std::uint32_t min_part_size) {
    if (parts.empty()) return false;
    try {
        FqSubset acc = parts.front();
        for (const auto& x : parts) {
            if (x.size() < min_part_size || x.empty()) return false;
            require_same_field(acc, x);
        }
        for (std::size_t i = 1; i < parts.size(); ++i) acc = sumset(acc, parts[i]);
        return acc == subgroup(parts.front().field_ptr(), d).members;
    } catch (const Error&) {
        return false;
    }
}

bool verify_witness(const FieldPtr& ctx, const Key& parts, std::uint32_t d, std::uint32_t min_part_size) {
    std::vector<FqSubset> sets;
    try {
        for (const auto& p : parts) {
            FqSubset s(ctx, p);
            if (s.size() != p.size()) return false;  // repeated index
            sets.push_back(std::move(s));
        }
    } catch (const Error&) {
        return false;
    }
    return verify_witness(sets, d, min_part_size);
}

namespace {

using bits::Word;
using Bits = std::vector<Word>;
constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();

struct Space {
    FieldPtr ctx;
    const FieldCtx* f;
    std::uint32_t q, p;
    std::size_t nw;
    SubgroupSpec sd;
    Bits s;
    std::uint64_t big_n;
    std::vector<Bits> s_minus;  // s_minus[x] = S - x, filled for x in S

    Space(FieldPtr c, std::uint32_t d)
        : ctx(std::move(c)), f(ctx.get()), q(f->q()), p(f->p()), nw(bits::word_count(q)), sd(subgroup(ctx, d)) {
        s.assign(sd.members.words().begin(), sd.members.words().end());
        big_n = sd.order;
        s_minus.resize(q);
        bits::for_each(s, [&](std::uint32_t x) { s_minus[x] = translated(s, f->neg(Elem{x}).index); });
    }

    Bits blank() const { return Bits(nw, 0); }

    void translate_or(Bits& dst, const Bits& src, std::uint32_t t) const {
        if (f->n() == 1) {
            bits::rotate_or(dst, src, t, q);
        } else {
            bits::for_each(src, [&](std::uint32_t i) { bits::set(dst, f->add(Elem{i}, Elem{t}).index); });
        }
    }

    Bits translated(const Bits& src, std::uint32_t t) const {
        Bits out = blank();
        translate_or(out, src, t);
        return out;
    }

    Bits sum(const Bits& x, const Bits& y) const {
        const bool xs = bits::popcount(x) <= bits::popcount(y);
        const Bits& small = xs ? x : y;
        const Bits& large = xs ? y : x;
        Bits out = blank();
        bits::for_each(small, [&](std::uint32_t a) { translate_or(out, large, a); });
        return out;
    }

    bool covers_s(const Bits& x) const { return bits::subset_of(s, x); }
};

Bits and_bits(const Bits& a, const Bits& b) {
    Bits out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
    return out;
}

Bits or_bits(const Bits& a, const Bits& b) {
    Bits out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] | b[i];
    return out;
}

/// Bits strictly above index i.
void clear_upto(Bits& a, std::uint32_t i) {
    for (std::uint32_t w = 0; w < (i >> 6); ++w) a[w] = 0;
    const std::uint32_t b = i & 63;
    a[i >> 6] &= b == 63 ? 0 : ~Word{0} << (b + 1);
}

std::vector<std::uint32_t> to_list(const Bits& b) {
    std::vector<std::uint32_t> out;
    bits::for_each(b, [&](std::uint32_t i) { out.push_back(i); });
    return out;
}

/// Size arithmetic shared by the binary and ternary searches. Here x is the
/// size of the smaller part and y the size of its partner set (A for binary,
/// A+C for ternary); the sum of the two covers S_d exactly.
struct SizeRules {
    std::uint64_t q, p, big_n;
    std::uint32_t min_size;
    PruneFlags flags;
    std::vector<bool> lucas_ok;  // C(x-1+N, N) != 0 mod p

    SizeRules(const Space& sp, const SearchTask& t)
        : q(sp.q), p(sp.p), big_n(sp.big_n), min_size(std::max<std::uint32_t>(1, t.min_part_size)), flags(t.prune) {
        const BinomialModP binom(sp.p);
        lucas_ok.resize(q + 1);
        for (std::uint64_t x = 1; x <= q; ++x) lucas_ok[x] = binom.nonzero(x - 1 + big_n, big_n);
    }

    bool pair_ok(std::uint64_t x, std::uint64_t y) const {
        if (x == 0 || y == 0 || x > q || y > q) return false;
        const std::uint64_t prod = x * y;
        if (prod < big_n) return false;
        if (flags.product_below_q && prod >= q) return false;
        if (flags.cauchy_davenport && big_n < p && x + y - 1 > big_n) return false;
        if (flags.stepanov_lucas && (lucas_ok[x] || lucas_ok[y]) && prod != big_n) return false;
        if (flags.distinct_sums && 3 * big_n <= 2 * p && prod != big_n) return false;
        return true;
    }
};

struct Shared {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> out_of_budget{false};
    std::atomic<bool> truncated{false};
    std::atomic<std::size_t> found{0};
    std::uint64_t budget;
    std::size_t max_witnesses;

    bool tick() {
        if (nodes.fetch_add(1, std::memory_order_relaxed) >= budget) out_of_budget = true;
        return !out_of_budget && !truncated;
    }
};

template <class Fn>
void run_ordered(std::size_t count, unsigned threads, Fn&& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    const unsigned nthreads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    for (unsigned t = 0; t < nthreads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) fn(i);
        });
}

unsigned resolve_threads(unsigned t) {
    if (t != 0) return t;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void check_task(const FieldPtr& ctx, const SearchTask& task, std::uint64_t cap) {
    if (task.q != 0 && task.q != ctx->q()) throw Error(ErrorKind::ContextMismatch, "task q differs from the field");
    const std::uint64_t q = ctx->q();
    if (task.d == 0 || (q - 1) % task.d != 0)
        throw Error(ErrorKind::NotADivisor, std::to_string(task.d) + " does not divide " + std::to_string(q - 1));
    if (task.d == 1 || task.d == q - 1) throw Error(ErrorKind::DegenerateD, "d must satisfy 2 <= d < q-1");
    if (q > cap)
        throw Error(ErrorKind::FieldTooLargeForExhaustive,
                    "q = " + std::to_string(q) + " exceeds the exhaustive limit " + std::to_string(cap));
}

struct Collector {
    const Space& sp;
    Shared& sh;
    std::set<Key> keys;

    void record(Key parts) {
        Key key = canonical_key(*sp.f, sp.sd.members, parts);
        if (keys.insert(std::move(key)).second) {
            if (sh.found.fetch_add(1) + 1 >= sh.max_witnesses) sh.truncated = true;
        }
    }
};

Verdict finish(const Shared& sh, std::vector<std::set<Key>>& per_branch, std::set<Key>& root) {
    std::set<Key> all = std::move(root);
    for (auto& s : per_branch) all.merge(s);
    Verdict v;
    v.nodes = sh.nodes.load();
    v.truncated = sh.truncated.load();
    for (const auto& k : all) v.witnesses.push_back(DecompWitness{k});
    if (v.truncated && v.witnesses.size() > sh.max_witnesses) v.witnesses.resize(sh.max_witnesses);
    v.exhaustive = !sh.out_of_budget && !sh.truncated;
    if (!v.witnesses.empty()) {
        v.status = Status::Exists;
        v.reason = v.exhaustive ? "exhaustive search; all orbits listed" : "witnesses found before the search stopped";
    } else if (sh.out_of_budget) {
        v.status = Status::Unknown;
        v.reason = "node budget exhausted";
    } else {
        v.status = Status::NoneExhaustive;
        v.reason = "exhaustive search found no decomposition";
    }
    return v;
}

// ---------------------------------------------------------------------------
// Binary search. Orbit representatives: |B| <= |A|, 0 in A (so B lies in S),
// and 1 in B after dilating by an element of B^{-1} (B lies in S_d).

class BinarySearch {
   public:
    BinarySearch(const Space& sp, const SearchTask& task, Shared& sh) : sp_(sp), rules_(sp, task), sh_(sh) {
        const std::uint64_t q = sp.q;
        amin_.assign(q + 2, kInf);
        amax_.assign(q + 2, 0);
        exact_.assign(q + 2, false);
        for (std::uint64_t k = rules_.min_size; k <= q; ++k) {
            if (rules_.flags.product_below_q && k * k >= q) break;
            bool only_exact = true;
            for (std::uint64_t a = k; a <= q; ++a) {
                if (!rules_.pair_ok(k, a)) continue;
                amin_[k] = std::min(amin_[k], a);
                amax_[k] = std::max(amax_[k], a);
                if (a * k != sp.big_n) only_exact = false;
            }
            if (amin_[k] != kInf) {
                kmax_ = k;
                exact_[k] = only_exact;
            }
        }
        need_.assign(q + 3, kInf);
        for (std::uint64_t j = q + 1; j-- > 1;) need_[j] = std::min(need_[j + 1], amin_[j]);
    }

    void run(unsigned threads, Verdict& out) {
        const std::uint32_t one = 1;
        std::set<Key> root_keys;
        Bits b_bits = sp_.blank();
        bits::set(b_bits, one);
        const Bits& cand_a = sp_.s_minus[one];

        Collector root{sp_, sh_, {}};
        std::vector<std::uint32_t> b_list{one};
        if (sh_.tick() && k_ok(1)) enumerate_covers(b_list, b_bits, cand_a, root);
        root_keys = std::move(root.keys);

        Bits fut = candidates(cand_a, sp_.s, one, 2);
        std::vector<std::uint32_t> branches;
        if (need_[2] != kInf && coverage_possible(cand_a, b_bits, fut)) branches = to_list(fut);
        std::vector<std::set<Key>> per(branches.size());
        run_ordered(branches.size(), threads, [&](std::size_t i) {
            Collector col{sp_, sh_, {}};
            const std::uint32_t b = branches[i];
            std::vector<std::uint32_t> bl{one, b};
            Bits bb = b_bits;
            bits::set(bb, b);
            Bits f2 = fut;
            clear_upto(f2, b);
            node(bl, bb, and_bits(cand_a, sp_.s_minus[b]), f2, col);
            per[i] = std::move(col.keys);
        });
        out = finish(sh_, per, root_keys);
    }

   private:
    bool k_ok(std::uint64_t k) const { return k < amin_.size() && amin_[k] != kInf; }

    // Future B elements above `last` whose addition keeps room for an A part.
    Bits candidates(const Bits& cand_a, const Bits& pool, std::uint32_t last, std::uint64_t next_size) const {
        Bits out = pool;
        clear_upto(out, last);
        const std::uint64_t needed = need_[next_size];
        bits::for_each(pool, [&](std::uint32_t b) {
            if (b <= last) return;
            if (needed == kInf || bits::and_popcount(cand_a, sp_.s_minus[b]) < needed) bits::reset(out, b);
        });
        return out;
    }

    bool coverage_possible(const Bits& cand_a, const Bits& b_bits, const Bits& fut) const {
        return sp_.covers_s(sp_.sum(cand_a, or_bits(b_bits, fut)));
    }

    void node(std::vector<std::uint32_t>& b_list, const Bits& b_bits, const Bits& cand_a, const Bits& pool,
              Collector& col) {
        if (!sh_.tick()) return;
        const std::uint64_t j = b_list.size();
        if (k_ok(j)) enumerate_covers(b_list, b_bits, cand_a, col);
        if (j + 1 > kmax_ || need_[j + 1] == kInf) return;
        Bits fut = candidates(cand_a, pool, b_list.back(), j + 1);
        if (!bits::any(fut) || !coverage_possible(cand_a, b_bits, fut)) return;
        for (auto b : to_list(fut)) {
            if (sh_.out_of_budget || sh_.truncated) return;
            Bits nb = b_bits;
            bits::set(nb, b);
            Bits nf = fut;
            clear_upto(nf, b);
            b_list.push_back(b);
            node(b_list, nb, and_bits(cand_a, sp_.s_minus[b]), nf, col);
            b_list.pop_back();
        }
    }

    void enumerate_covers(const std::vector<std::uint32_t>& b_list, const Bits& b_bits, const Bits& cand_a,
                          Collector& col) {
        const std::uint64_t k = b_list.size();
        const auto elems = to_list(cand_a);  // 0 comes first
        const std::uint64_t lo = amin_[k], hi = std::min<std::uint64_t>(amax_[k], elems.size());
        if (elems.size() < lo || elems.empty() || elems[0] != 0) return;
        std::vector<Bits> ab;
        ab.reserve(elems.size());
        for (auto a : elems) ab.push_back(sp_.translated(b_bits, a));
        std::vector<Bits> suffix(elems.size() + 1, sp_.blank());
        for (std::size_t i = elems.size(); i-- > 0;) suffix[i] = or_bits(suffix[i + 1], ab[i]);
        if (!sp_.covers_s(suffix[0])) return;

        const bool exact = exact_[k];
        std::vector<std::uint32_t> chosen{0};
        auto rec = [&](auto&& self, std::size_t i, const Bits& covered) -> void {
            if (!sh_.tick()) return;
            if (chosen.size() > hi) return;
            if (chosen.size() + (elems.size() - i) < lo) return;
            if (!sp_.covers_s(or_bits(covered, suffix[i]))) return;
            if (i == elems.size()) {
                if (rules_.pair_ok(k, chosen.size())) col.record({chosen, b_list});
                return;
            }
            if (!exact || bits::and_popcount(covered, ab[i]) == 0) {
                chosen.push_back(elems[i]);
                self(self, i + 1, or_bits(covered, ab[i]));
                chosen.pop_back();
            }
            self(self, i + 1, covered);
        };
        rec(rec, 1, ab[0]);
    }

    const Space& sp_;
    SizeRules rules_;
    Shared& sh_;
    std::vector<std::uint64_t> amin_, amax_;
    std::vector<bool> exact_;
    std::vector<std::uint64_t> need_;
    std::uint64_t kmax_ = 0;
};

// ---------------------------------------------------------------------------
// Ternary search. Representatives: B is a smallest part, 0 in A and 0 in C
// (so B lies in S_d), 1 in B. E = A + C must lie in Emax(B) = cap_b (S - b).

class TernarySearch {
   public:
    TernarySearch(const Space& sp, const SearchTask& task, Shared& sh) : sp_(sp), rules_(sp, task), sh_(sh) {
        const std::uint64_t q = sp.q;
        emin_.assign(q + 2, kInf);
        for (std::uint64_t k = rules_.min_size; k <= q; ++k) {
            // |E| >= max(k, min(p, 2k-1)) when Cauchy-Davenport is on
            std::uint64_t lo = k;
            if (rules_.flags.cauchy_davenport) lo = std::max(lo, std::min<std::uint64_t>(sp.p, 2 * k - 1));
            for (std::uint64_t e = lo; e <= q; ++e) {
                if (rules_.pair_ok(k, e)) {
                    emin_[k] = e;
                    kmax_ = k;
                    break;
                }
            }
        }
        need_.assign(q + 3, kInf);
        for (std::uint64_t j = q + 1; j-- > 1;) need_[j] = std::min(need_[j + 1], emin_[j]);
    }

    void run(unsigned threads, Verdict& out) {
        const std::uint32_t one = 1;
        Bits b_bits = sp_.blank();
        bits::set(b_bits, one);
        const Bits& emax = sp_.s_minus[one];

        Collector root{sp_, sh_, {}};
        std::vector<std::uint32_t> b_list{one};
        if (sh_.tick() && k_ok(1)) enumerate_a(b_list, b_bits, emax, root);
        std::set<Key> root_keys = std::move(root.keys);

        Bits fut = candidates(emax, sp_.s, one, 2);
        std::vector<std::uint32_t> branches;
        if (need_[2] != kInf && sp_.covers_s(sp_.sum(emax, or_bits(b_bits, fut)))) branches = to_list(fut);
        std::vector<std::set<Key>> per(branches.size());
        run_ordered(branches.size(), threads, [&](std::size_t i) {
            Collector col{sp_, sh_, {}};
            const std::uint32_t b = branches[i];
            std::vector<std::uint32_t> bl{one, b};
            Bits bb = b_bits;
            bits::set(bb, b);
            Bits f2 = fut;
            clear_upto(f2, b);
            b_node(bl, bb, and_bits(emax, sp_.s_minus[b]), f2, col);
            per[i] = std::move(col.keys);
        });
        out = finish(sh_, per, root_keys);
    }

   private:
    bool k_ok(std::uint64_t k) const { return k < emin_.size() && emin_[k] != kInf; }

    Bits candidates(const Bits& emax, const Bits& pool, std::uint32_t last, std::uint64_t next_size) const {
        Bits out = pool;
        clear_upto(out, last);
        const std::uint64_t needed = need_[next_size];
        bits::for_each(pool, [&](std::uint32_t b) {
            if (b <= last) return;
            if (needed == kInf || bits::and_popcount(emax, sp_.s_minus[b]) < needed) bits::reset(out, b);
        });
        return out;
    }

    void b_node(std::vector<std::uint32_t>& b_list, const Bits& b_bits, const Bits& emax, const Bits& pool,
                Collector& col) {
        if (!sh_.tick()) return;
        const std::uint64_t j = b_list.size();
        if (k_ok(j) && bits::popcount(emax) >= emin_[j]) enumerate_a(b_list, b_bits, emax, col);
        if (j + 1 > kmax_ || need_[j + 1] == kInf) return;
        Bits fut = candidates(emax, pool, b_list.back(), j + 1);
        if (!bits::any(fut) || !sp_.covers_s(sp_.sum(emax, or_bits(b_bits, fut)))) return;
        for (auto b : to_list(fut)) {
            if (sh_.out_of_budget || sh_.truncated) return;
            Bits nb = b_bits;
            bits::set(nb, b);
            Bits nf = fut;
            clear_upto(nf, b);
            b_list.push_back(b);
            b_node(b_list, nb, and_bits(emax, sp_.s_minus[b]), nf, col);
            b_list.pop_back();
        }
    }

    void enumerate_a(const std::vector<std::uint32_t>& b_list, const Bits& b_bits, const Bits& emax, Collector& col) {
        if (!bits::test(emax, 0)) return;
        const std::uint64_t k = b_list.size();
        // emax_minus[x] = Emax - x for x in Emax
        std::vector<Bits> emax_minus(sp_.q);
        bits::for_each(emax, [&](std::uint32_t x) { emax_minus[x] = sp_.translated(emax, sp_.f->neg(Elem{x}).index); });

        std::vector<std::uint32_t> a_list{0};
        Bits a_bits = sp_.blank();
        bits::set(a_bits, 0);
        Bits pool = emax;
        bits::reset(pool, 0);
        a_node(b_list, b_bits, k, emax_minus, a_list, a_bits, emax, pool, col);
    }

    void a_node(const std::vector<std::uint32_t>& b_list, const Bits& b_bits, std::uint64_t k,
                const std::vector<Bits>& emax_minus, std::vector<std::uint32_t>& a_list, const Bits& a_bits,
                const Bits& cmax, const Bits& pool, Collector& col) {
        if (!sh_.tick()) return;
        if (a_list.size() >= k) enumerate_c(b_list, a_list, sp_.sum(a_bits, b_bits), k, cmax, col);

        Bits fut = pool;
        clear_upto(fut, a_list.back());
        bits::for_each(pool, [&](std::uint32_t a) {
            if (a <= a_list.back()) return;
            if (bits::and_popcount(cmax, emax_minus[a]) < k) bits::reset(fut, a);
        });
        if (!bits::any(fut)) return;
        if (!sp_.covers_s(sp_.sum(sp_.sum(or_bits(a_bits, fut), cmax), b_bits))) return;
        for (auto a : to_list(fut)) {
            if (sh_.out_of_budget || sh_.truncated) return;
            Bits na = a_bits;
            bits::set(na, a);
            Bits nf = fut;
            clear_upto(nf, a);
            a_list.push_back(a);
            a_node(b_list, b_bits, k, emax_minus, a_list, na, and_bits(cmax, emax_minus[a]), nf, col);
            a_list.pop_back();
        }
    }

    void enumerate_c(const std::vector<std::uint32_t>& b_list, const std::vector<std::uint32_t>& a_list,
                     const Bits& ab_bits, std::uint64_t k, const Bits& cmax, Collector& col) {
        const auto elems = to_list(cmax);
        if (elems.size() < k || elems[0] != 0) return;
        std::vector<Bits> cov;
        cov.reserve(elems.size());
        for (auto c : elems) cov.push_back(sp_.translated(ab_bits, c));
        std::vector<Bits> suffix(elems.size() + 1, sp_.blank());
        for (std::size_t i = elems.size(); i-- > 0;) suffix[i] = or_bits(suffix[i + 1], cov[i]);
        if (!sp_.covers_s(suffix[0])) return;

        std::vector<std::uint32_t> chosen{0};
        auto rec = [&](auto&& self, std::size_t i, const Bits& covered) -> void {
            if (!sh_.tick()) return;
            if (chosen.size() + (elems.size() - i) < k) return;
            if (!sp_.covers_s(or_bits(covered, suffix[i]))) return;
            if (i == elems.size()) {
                col.record({a_list, b_list, chosen});
                return;
            }
            chosen.push_back(elems[i]);
            self(self, i + 1, or_bits(covered, cov[i]));
            chosen.pop_back();
            self(self, i + 1, covered);
        };
        rec(rec, 1, cov[0]);
    }

    const Space& sp_;
    SizeRules rules_;
    Shared& sh_;
    std::vector<std::uint64_t> emin_;
    std::vector<std::uint64_t> need_;
    std::uint64_t kmax_ = 0;
};

}  // namespace

Verdict search_binary(const FieldPtr& ctx, const SearchTask& task) {
    check_task(ctx, task, kBinaryExhaustiveMaxQ);
    const Space sp(ctx, task.d);
    Shared sh;
    sh.budget = task.budget;
    sh.max_witnesses = std::max<std::size_t>(1, task.max_witnesses);
    BinarySearch search(sp, task, sh);
    Verdict v;
    search.run(resolve_threads(task.threads), v);
    return v;
}

Verdict search_binary(const SearchTask& task) { return search_binary(make_field_of_order(task.q), task); }

Verdict search_ternary(const FieldPtr& ctx, const SearchTask& task) {
    check_task(ctx, task, kTernaryExhaustiveMaxQ);
    const Space sp(ctx, task.d);
    Shared sh;
    sh.budget = task.budget;
    sh.max_witnesses = std::max<std::size_t>(1, task.max_witnesses);
    TernarySearch search(sp, task, sh);
    Verdict v;
    search.run(resolve_threads(task.threads), v);
    return v;
}

Verdict search_ternary(const SearchTask& task) { return search_ternary(make_field_of_order(task.q), task); }

}  // namespace sdecomp
