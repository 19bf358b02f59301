#include <doctest.h>

#include <algorithm>

#include "sdecomp/classifier.hpp"

using namespace sdecomp;

namespace {

const TheoremVerdict& verdict(const PairClass& pc, const std::string& id) {
    const auto it = std::find_if(pc.verdicts.begin(), pc.verdicts.end(), [&](const auto& v) { return v.theorem == id; });
    REQUIRE(it != pc.verdicts.end());
    return *it;
}

std::vector<std::uint64_t> prime_powers_upto(std::uint64_t m) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 3; q <= m; ++q)
        if (is_prime_power(q)) out.push_back(q);
    return out;
}

}  // namespace

TEST_CASE("classification examples") {
    for (std::uint64_t p : {5u, 7u, 11u, 13u, 101u, 1009u}) {
        const auto pc = classify_pair(2, p);
        CHECK(pc.is_good);
        CHECK(pc.first_bullet == 1);
    }
    const auto pc169 = classify_pair(2, 169);
    CHECK(pc169.expansion.digits == std::vector<std::uint32_t>{6, 6});
    CHECK(pc169.is_good);
    CHECK(pc169.first_bullet == 2);

    const auto pc49 = classify_pair(8, 49);
    CHECK(pc49.expansion.digits == std::vector<std::uint32_t>{6});
    CHECK_FALSE(pc49.is_good);
    for (const auto& v : pc49.verdicts) CHECK_FALSE(v.applies);
    CHECK_FALSE(proves(pc49, Conclusion::NoAPlusA));
}

TEST_CASE("theorem verdicts for F_13") {
    const auto pc2 = classify_pair(2, 13);
    CHECK(verdict(pc2, "good_pair_no_a_plus_a").tier == Tier::Proven);
    const auto& ds = verdict(pc2, "distinct_sums");
    CHECK(ds.applies);
    CHECK(ds.tier == Tier::Proven);
    CHECK(ds.conclusions == std::vector<Conclusion>{Conclusion::DistinctSums});
    CHECK_FALSE(proves(pc2, Conclusion::NoBinaryDecomp));

    const auto pc3 = classify_pair(3, 13);
    CHECK(verdict(pc3, "distinct_sums").applies);
    CHECK(proves(pc3, Conclusion::DistinctSums));

    // |S_d| prime: no nontrivial decomposition at all
    const auto pc4 = classify_pair(4, 29);
    CHECK(proves(pc4, Conclusion::NoBinaryDecomp));
    CHECK(verdict(classify_pair(2, 13), "ternary_prime_field").tier == Tier::Conditional);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(classify_pair(5, 13), Error);
    CHECK_THROWS_AS(classify_pair(1, 13), Error);
    CHECK_THROWS_AS(classify_pair(12, 13), Error);
    CHECK_THROWS_AS(classify_pair(2, 15), Error);
}

TEST_CASE("condition 3 readings") {
    // n = 3, p = 11: ceil(sqrt 11) = 4; rational reading e_1 <= 8, floor reading e_1 <= 8 as well
    CHECK(ceil_sqrt(11) == 4);
    CHECK(ceil_sqrt(16) == 4);
    CHECK(ceil_sqrt(17) == 5);
    CHECK(ceil_sqrt(0) == 0);
    // p = 7: ceil(sqrt 7) = 3, rational e_r <= 4.5, floor reading e_r <= 5
    for (std::uint32_t d = 2; d <= 12; ++d) {
        if ((343 - 1) % d != 0) continue;
        const auto pc = classify_pair(d, 343);
        if (pc.bullets[2]) CHECK(pc.bullet3_floor_reading);
        if (pc.bullets[2] != pc.bullet3_floor_reading) CHECK(pc.expansion.digit(1) == 5);
    }
    // e_1 = 5 with p = 7 separates the two readings: 2*5 + 3 > 12 but 5 + 1 <= 6
    const PExpansion e{{0, 5, 0}, 7};
    CHECK(2 * e.digit(1) + ceil_sqrt(7) > 2 * 6);
    CHECK(e.digit(1) + ceil_sqrt(7) / 2 <= 6);
}

TEST_CASE("delta-good monotonicity and half-good implies good") {
    for (auto q : prime_powers_upto(3000)) {
        for (std::uint64_t d = 2; d + 1 < q; ++d) {
            if ((q - 1) % d != 0) continue;
            const auto pc = classify_pair(static_cast<std::uint32_t>(d), q);
            for (std::size_t k = 1; k < pc.delta_good.size(); ++k)
                if (pc.delta_good[k]) REQUIRE(pc.delta_good[k - 1]);
            if (pc.delta_good[9]) REQUIRE(pc.is_good);  // delta = 1/2
            const auto again = classify_pair(static_cast<std::uint32_t>(d), q);
            REQUIRE(again.is_good == pc.is_good);
            REQUIRE(again.first_bullet == pc.first_bullet);
        }
    }
}

TEST_CASE("d | p-1 gives constant digits and the order criterion") {
    for (auto q : prime_powers_upto(3000)) {
        const auto pp = split_prime_power(q);
        for (std::uint64_t d = 2; d < pp.p - 1; ++d) {
            if ((pp.p - 1) % d != 0) continue;
            const auto pc = classify_pair(static_cast<std::uint32_t>(d), q);
            REQUIRE(pc.expansion.digits == std::vector<std::uint32_t>(pp.n, static_cast<std::uint32_t>((pp.p - 1) / d)));
            REQUIRE(pc.order_p_mod_d == 1);
            REQUIRE(verdict(pc, "order_criteria_no_a_plus_a").applies);
        }
    }
}

TEST_CASE("subfield pairs are never good") {
    for (std::uint32_t p : {7u, 11u, 13u, 17u})
        for (std::uint32_t n : {2u, 3u, 4u}) {
            std::uint64_t q = 1;
            for (std::uint32_t i = 0; i < n; ++i) q *= p;
            if (q > (1u << 20)) continue;
            const auto pc = classify_pair(static_cast<std::uint32_t>((q - 1) / (p - 1)), q);
            CHECK_FALSE(pc.is_good);
            CHECK_FALSE(proves(pc, Conclusion::NoAPlusA));
        }
}
