#include "bqg/variance.hpp"

#include "fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace bqg;
using namespace bqg::variance;
using orbits::PseudoOrbit;

namespace {

Rat rat(long long num, long long den) { return Rat(Int(num), Int(den)); }

const std::vector<Rat> kV8Variance = {
    rat(1, 1), rat(1, 1), rat(1, 2), rat(1, 2), rat(1, 2),
    rat(3, 4), rat(3, 4), rat(5, 8), rat(9, 16)};

const std::vector<Rat> kV6Variance = {
    rat(1, 1), rat(1, 1), rat(3, 4), rat(3, 4), rat(7, 8), rat(1, 2), rat(3, 8)};

}  // namespace

TEST_CASE("predict_variance reference values") {
    auto g8 = graphs::build_graph(1, 3);
    for (int n = 0; n <= 8; ++n) CHECK(predict_variance(g8, n).value == kV8Variance[n]);

    auto g6 = graphs::build_graph(3, 1);
    for (int n = 0; n <= 6; ++n) CHECK(predict_variance(g6, n).value == kV6Variance[n]);

    SECTION("breakdown at V=8, n=7") {
        auto p = predict_variance(g8, 7);
        CHECK(p.sizes.p0 == 16);
        CHECK(p.sizes.hat_by_n.at(1) == 16);
        CHECK(p.sizes.hat_by_n.at(2) == 8);
        CHECK(p.value == rat(5, 8));
    }

    SECTION("upper half by symmetry") {
        for (int n = 9; n <= 16; ++n)
            CHECK(predict_variance(g8, n).value == kV8Variance[16 - n]);
    }

    SECTION("out of range") {
        CHECK_THROWS_AS(predict_variance(g8, 17), std::invalid_argument);
        CHECK_THROWS_AS(predict_variance(g8, -1), std::invalid_argument);
    }
}

TEST_CASE("contribution") {
    auto g8 = graphs::build_graph(1, 3);
    auto g6 = graphs::build_graph(3, 1);

    SECTION("encounter-free pseudo orbit of length 5") {
        for (const auto& po : orbits::enumerate_ppo(g8, 5)) {
            if (orbits::classify_fast(po).cls != orbits::OrbitClass::NoSelfIntersections) continue;
            CHECK(contribution(po, g8) == rat(1, 32));
        }
    }

    SECTION("(00001) contributes 2^(1-5)") {
        auto orbit =
            orbits::orbit_from_vertices(g8, orbits::vertices_from_bits(g8, words::word_from_string("00001")));
        auto po = orbits::make_pseudo_orbit(g8, {orbit});
        CHECK(contribution(po, g8) == rat(1, 16));
        // cross-checked against the pairing oracle
        auto ppos = orbits::enumerate_ppo(g8, 5);
        auto breakdown = pairing_breakdown(g8, ppos, 5);
        CHECK(contribution_oracle(po, g8, breakdown) == rat(1, 16));
    }

    SECTION("(0013) contributes 1/8, confirmed by the pairing oracle") {
        auto cycle = words::word_from_string("0013");
        auto po = orbits::make_pseudo_orbit(g6, {orbits::orbit_from_vertices(g6, cycle)});
        CHECK(contribution(po, g6) == rat(1, 8));
        auto ppos = orbits::enumerate_ppo(g6, 4);
        auto breakdown = pairing_breakdown(g6, ppos, 4);
        CHECK(contribution_oracle(po, g6, breakdown) == rat(1, 8));
    }

    SECTION("(5)(254)(24) is in the zero class by both routes") {
        std::vector<orbits::PeriodicOrbit> members;
        for (const char* w : {"5", "254", "24"})
            members.push_back(orbits::orbit_from_vertices(g6, words::word_from_string(w)));
        auto po = orbits::make_pseudo_orbit(g6, std::move(members));
        CHECK(contribution(po, g6) == 0);
        auto ppos = orbits::enumerate_ppo(g6, 6);
        auto breakdown = pairing_breakdown(g6, ppos, 6);
        CHECK(contribution_oracle(po, g6, breakdown) == 0);
    }
}

TEST_CASE("variance_exact_pairing reference values") {
    auto g8 = graphs::build_graph(1, 3);
    CHECK(variance_exact_pairing(g8, 5) == rat(3, 4));
    CHECK(variance_exact_pairing(g8, 8) == rat(9, 16));

    auto g6 = graphs::build_graph(3, 1);
    CHECK(variance_exact_pairing(g6, 6) == rat(3, 8));
}

TEST_CASE("pairing oracle equals the set-size prediction") {
    for (auto [p, r] : std::vector<std::pair<int, int>>{{1, 2}, {3, 1}, {1, 3}}) {
        auto g = graphs::build_graph(p, r);
        const int n_max = std::min(g.num_bonds, 8);
        for (int n = 0; n <= n_max; ++n) {
            CAPTURE(p, r, n);
            CHECK(variance_exact_pairing(g, n) == predict_variance_direct(g, n).value);
        }
    }
}

TEST_CASE("per-orbit contributions sum to the pairing total") {
    for (auto [p, r] : std::vector<std::pair<int, int>>{{1, 2}, {3, 1}, {1, 3}}) {
        auto g = graphs::build_graph(p, r);
        for (int n = 0; n <= 8; ++n) {
            auto ppos = orbits::enumerate_ppo(g, n);
            auto breakdown = pairing_breakdown(g, ppos, n);
            Rat lemma_total = 0, oracle_total = 0;
            for (const auto& po : ppos) {
                const Rat lemma = contribution(po, g);
                const Rat oracle = contribution_oracle(po, g, breakdown);
                CHECK(lemma == oracle);
                lemma_total += lemma;
                oracle_total += oracle;
            }
            CHECK(lemma_total == breakdown.total);
            CHECK(oracle_total == breakdown.total);
        }
    }
}

TEST_CASE("zero classes really contribute zero") {
    for (auto [p, r] : std::vector<std::pair<int, int>>{{3, 1}, {1, 3}}) {
        auto g = graphs::build_graph(p, r);
        for (int n = 0; n <= (p == 1 ? 8 : 6); ++n) {
            auto ppos = orbits::enumerate_ppo(g, n);
            auto breakdown = pairing_breakdown(g, ppos, n);
            for (const auto& po : ppos) {
                if (orbits::classify_fast(po).cls != orbits::OrbitClass::ZeroContribution) continue;
                CHECK(contribution_oracle(po, g, breakdown) == 0);
            }
        }
    }
}

TEST_CASE("diagonal_contribution") {
    CHECK(diagonal_contribution(1, 6) == rat(1, 2));
    CHECK(diagonal_contribution(3, 6) == rat(5, 8));
    CHECK(diagonal_contribution(5, 10) == rat(17, 32));

    SECTION("equals half the family constant once n exceeds p") {
        for (int p : {1, 3, 5, 7})
            for (int n = p + 1; n <= p + 4; ++n)
                CHECK(diagonal_contribution(p, n) == asymptotic_variance(p));
    }
}

TEST_CASE("asymptotic_variance") {
    CHECK(asymptotic_variance(1) == rat(1, 2));
    CHECK(asymptotic_variance(3) == rat(5, 8));
    CHECK(asymptotic_variance(5) == rat(17, 32));
}

TEST_CASE("variance at half the bonds approaches the limit") {
    // p = 1: r = 2 then 3 move toward 1/2
    auto g4 = graphs::build_graph(1, 2);
    auto g8 = graphs::build_graph(1, 3);
    const Rat v4 = predict_variance(g4, 4).value;
    const Rat v8 = predict_variance(g8, 8).value;
    CHECK(v4 == rat(3, 4));
    CHECK(v8 == rat(9, 16));
    const Rat limit = asymptotic_variance(1);
    CHECK(abs(v8 - limit) < abs(v4 - limit));
}
