#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sdecomp/search.hpp"

using namespace sdecomp;

namespace {

using Parts = std::vector<std::vector<std::uint32_t>>;

std::vector<std::pair<std::uint64_t, std::uint32_t>> pairs_upto(std::uint64_t qmax) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
    for (std::uint64_t q = 3; q <= qmax; ++q) {
        if (!is_prime_power(q)) continue;
        for (std::uint32_t d = 2; d + 1 < q; ++d)
            if ((q - 1) % d == 0) out.emplace_back(q, d);
    }
    return out;
}

SearchTask task_for(std::uint64_t q, std::uint32_t d, int arity = 2) {
    SearchTask t;
    t.q = q;
    t.d = d;
    t.arity = arity;
    t.threads = 1;
    return t;
}

// Orbit minimum of a triple under part permutation, shifts summing to zero and S_d dilation.
Parts triple_orbit_min(const oracle::SlowField& f, const std::set<std::uint32_t>& sd, const Parts& parts) {
    Parts best;
    std::vector<std::size_t> perm{0, 1, 2};
    for (auto lam : sd) do {
            for (std::uint32_t t1 = 0; t1 < f.q(); ++t1)
                for (std::uint32_t t2 = 0; t2 < f.q(); ++t2) {
                    const std::uint32_t t3 = f.neg(f.add(t1, t2));
                    const std::uint32_t ts[3] = {t1, t2, t3};
                    Parts img(3);
                    for (int i = 0; i < 3; ++i) {
                        for (auto x : parts[perm[i]]) img[i].push_back(f.add(f.mul(x, lam), ts[i]));
                        std::sort(img[i].begin(), img[i].end());
                    }
                    if (best.empty() || img < best) best = img;
                }
        } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

template <class Fn>
void subsets_of(const std::vector<std::uint32_t>& pool, Fn fn) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << pool.size()); ++m) {
        std::vector<std::uint32_t> s;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (m >> i & 1) s.push_back(pool[i]);
        fn(s);
    }
}

std::set<Parts> brute_ternary(const oracle::SlowField& f, std::uint32_t d) {
    const auto sd = oracle::naive_subgroup(f, d);
    const std::vector<std::uint32_t> s(sd.begin(), sd.end());
    std::set<Parts> out;
    auto shifted_cap = [&](const std::vector<std::uint32_t>& base, const std::vector<std::uint32_t>& by) {
        std::vector<std::uint32_t> r;
        for (std::uint32_t x = 0; x < f.q(); ++x) {
            bool ok = true;
            for (auto y : by) ok = ok && std::binary_search(base.begin(), base.end(), f.add(x, y));
            if (ok) r.push_back(x);
        }
        return r;
    };
    subsets_of(s, [&](const std::vector<std::uint32_t>& b) {
        if (b.size() < 2) return;
        const auto emax = shifted_cap(s, b);  // A + C must land here
        std::vector<std::uint32_t> e_rest;
        for (auto x : emax)
            if (x != 0) e_rest.push_back(x);
        if (e_rest.size() == emax.size()) return;
        subsets_of(e_rest, [&](std::vector<std::uint32_t> a) {
            a.insert(a.begin(), 0);
            if (a.size() < 2) return;
            const auto cmax = shifted_cap(emax, a);
            std::vector<std::uint32_t> c_rest;
            for (auto x : cmax)
                if (x != 0) c_rest.push_back(x);
            if (c_rest.size() == cmax.size()) return;
            subsets_of(c_rest, [&](std::vector<std::uint32_t> c) {
                c.insert(c.begin(), 0);
                if (c.size() < 2) return;
                const auto ab = oracle::naive_sumset(f, a, b);
                const auto abc = oracle::naive_sumset(f, std::vector<std::uint32_t>(ab.begin(), ab.end()), c);
                if (abc == sd) out.insert(triple_orbit_min(f, sd, {a, b, c}));
            });
        });
    });
    return out;
}

}  // namespace

TEST_CASE("search fixtures") {
    const auto v13 = search_binary(task_for(13, 3));
    CHECK(v13.status == Status::Exists);
    CHECK(v13.exhaustive);
    const auto f13 = make_field(13, 1);
    const auto key = canonical_key(*f13, subgroup(f13, 3).members, {{0, 7}, {1, 5}});
    REQUIRE(v13.witnesses.size() == 1);
    CHECK(v13.witnesses[0].parts == key);

    const auto v2 = search_binary(task_for(13, 2));
    CHECK(v2.status == Status::NoneExhaustive);
    CHECK(v2.witnesses.empty());
    CHECK(v2.exhaustive);

    const auto v49 = search_binary(task_for(49, 8));
    CHECK(v49.status == Status::Exists);
    CHECK_FALSE(v49.witnesses.empty());
}

TEST_CASE("verify_witness") {
    const auto f13 = make_field(13, 1);
    CHECK(verify_witness(f13, {{0, 7}, {1, 5}}, 3));
    CHECK_FALSE(verify_witness(f13, {{0, 7}, {1, 6}}, 3));
    CHECK_FALSE(verify_witness(f13, {{0, 7}, {1, 5}}, 3, 3));
    CHECK_FALSE(verify_witness(f13, {{0, 7, 7}, {1, 5}}, 3));
    CHECK_FALSE(verify_witness(f13, {{0, 70}, {1, 5}}, 3));
    CHECK_FALSE(verify_witness(f13, {}, 3));
    const auto f5 = make_field(5, 1);
    CHECK(verify_witness(f5, {{0, 1}, {0, 1}, {1, 2}}, 1));
    const auto f49 = make_field(7, 2);
    CHECK(verify_witness(f49, {{0, 1}, {0, 1}, {1, 2, 4}}, 8));
}

TEST_CASE("search preconditions") {
    CHECK_THROWS_AS(search_binary(task_for(5041, 2)), Error);
    CHECK_THROWS_AS(search_binary(task_for(13, 5)), Error);
    CHECK_THROWS_AS(search_binary(task_for(13, 12)), Error);
    CHECK_THROWS_AS(search_ternary(task_for(81, 2, 3)), Error);
    CHECK_THROWS_AS(search_binary(make_field(7, 1), task_for(13, 2)), Error);
}

TEST_CASE("binary search matches the unpruned brute-force oracle for q <= 31") {
    for (auto [q, d] : pairs_upto(31)) {
        CAPTURE(q);
        CAPTURE(d);
        const auto f = make_field_of_order(q);
        const auto slow = oracle::slow(*f);
        const auto expected = oracle::brute_binary(slow, d, 2);
        const auto v = search_binary(f, task_for(q, d));
        REQUIRE(v.exhaustive);
        REQUIRE(v.witnesses.size() == expected.size());
        const auto sd = oracle::naive_subgroup(slow, d);
        for (const auto& w : v.witnesses) REQUIRE(expected.count(oracle::pair_orbit_min(slow, sd, w.parts[0], w.parts[1])));

        SearchTask bare = task_for(q, d);
        bare.prune = PruneFlags{false, false, false, false};
        const auto vb = search_binary(f, bare);
        REQUIRE(vb.witnesses == v.witnesses);
    }
}

TEST_CASE("min part size 1 admits the trivial decompositions") {
    SearchTask t = task_for(13, 3);
    t.min_part_size = 1;
    const auto v = search_binary(t);
    bool trivial = false;
    for (const auto& w : v.witnesses) trivial = trivial || w.parts[0].size() == 1 || w.parts[1].size() == 1;
    CHECK(trivial);
}

TEST_CASE("ternary search matches a brute-force oracle for q <= 13") {
    for (auto [q, d] : pairs_upto(13)) {
        CAPTURE(q);
        CAPTURE(d);
        const auto f = make_field_of_order(q);
        const auto slow = oracle::slow(*f);
        const auto expected = brute_ternary(slow, d);
        const auto v = search_ternary(f, task_for(q, d, 3));
        REQUIRE(v.exhaustive);
        REQUIRE(v.witnesses.size() == expected.size());
        const auto sd = oracle::naive_subgroup(slow, d);
        for (const auto& w : v.witnesses) REQUIRE(expected.count(triple_orbit_min(slow, sd, w.parts)));
    }
}

TEST_CASE("soundness, distinct-sums law and symmetry closure") {
    std::mt19937 rng(55);
    for (auto [q, d] : pairs_upto(128)) {
        CAPTURE(q);
        CAPTURE(d);
        const auto f = make_field_of_order(q);
        const auto sd = subgroup(f, d);
        SearchTask t = task_for(q, d);
        t.prune.distinct_sums = false;
        t.max_witnesses = 2000;
        const auto v = search_binary(f, t);
        const auto pc_p = f->p();
        for (const auto& w : v.witnesses) {
            REQUIRE(verify_witness(f, w.parts, d));
            REQUIRE(canonical_key(*f, sd.members, w.parts) == w.parts);
            if (3 * sd.order <= 2 * pc_p) REQUIRE(w.parts[0].size() * w.parts[1].size() == sd.order);
        }
        for (int i = 0; i < 5 && !v.witnesses.empty(); ++i) {
            const auto& w = v.witnesses[rng() % v.witnesses.size()];
            const auto members = sd.members.elements();
            const Elem lam = members[rng() % members.size()];
            const Elem t0{static_cast<std::uint32_t>(rng() % q)};
            Parts img(2);
            for (auto x : w.parts[0]) img[1].push_back(f->add(f->mul(Elem{x}, lam), t0).index);
            for (auto x : w.parts[1]) img[0].push_back(f->sub(f->mul(Elem{x}, lam), t0).index);
            REQUIRE(canonical_key(*f, sd.members, img) == w.parts);
        }
    }
}

TEST_CASE("results do not depend on the thread count") {
    for (auto [q, d] : {std::pair<std::uint64_t, std::uint32_t>{49, 8}, {169, 14}, {121, 2}, {64, 9}}) {
        SearchTask a = task_for(q, d);
        SearchTask b = a;
        b.threads = 4;
        const auto va = search_binary(a);
        const auto vb = search_binary(b);
        CHECK(va.witnesses == vb.witnesses);
        CHECK(va.status == vb.status);
    }
    SearchTask a = task_for(25, 3, 3);
    SearchTask b = a;
    b.threads = 3;
    const auto ta = search_ternary(a);
    CHECK(ta.witnesses == search_ternary(b).witnesses);
    CHECK(ta.witnesses == search_ternary(a).witnesses);
    for (const auto& w : ta.witnesses) CHECK(verify_witness(make_field(5, 2), w.parts, 3));
}

TEST_CASE("budget exhaustion is reported, never hidden") {
    SearchTask t = task_for(121, 2);
    t.budget = 50;
    const auto v = search_binary(t);
    CHECK(v.status == Status::Unknown);
    CHECK_FALSE(v.exhaustive);

    SearchTask e = task_for(169, 14);
    e.budget = 20000;
    const auto ve = search_binary(e);
    CHECK_FALSE(ve.exhaustive);
    if (!ve.witnesses.empty()) CHECK(ve.status == Status::Exists);

    SearchTask m = task_for(169, 14);
    m.max_witnesses = 5;
    const auto vm = search_binary(m);
    CHECK(vm.truncated);
    CHECK(vm.witnesses.size() <= 5);
    CHECK_FALSE(vm.exhaustive);
}
