#pragma once

#include "bqg/orbits.hpp"
#include "bqg/quantum.hpp"
#include "bqg/rational.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace bqg::variance {

using graphs::BinaryGraph;
using orbits::PseudoOrbit;

// Exact variance of the n-th coefficient from the two set sizes that
// contribute: 2^-n (|P_0| + sum_N 2^N |P-hat_{N,0}|).
struct VariancePrediction {
    int n = 0;
    Rat value = 0;
    orbits::SetSizes sizes;
};

inline Rat value_from_sizes(const orbits::SetSizes& s, int n) {
    Int weighted = s.p0;
    for (const auto& [enc, count] : s.hat_by_n) weighted += pow2(enc) * count;
    return Rat(weighted) * pow2_rat(-n);
}

// Direct evaluation at n (no symmetry shortcut).
inline VariancePrediction predict_variance_direct(const BinaryGraph& g, int n) {
    if (n < 0 || n > g.num_bonds) throw std::invalid_argument("predict_variance: need 0 <= n <= B");
    VariancePrediction p;
    p.n = n;
    p.sizes = orbits::tabulate_sets(g, n);
    p.value = value_from_sizes(p.sizes, n);
    return p;
}

// Uses the n <-> B-n coefficient symmetry for the upper half, where the
// direct enumeration would be needlessly large.
inline VariancePrediction predict_variance(const BinaryGraph& g, int n) {
    if (n < 0 || n > g.num_bonds) throw std::invalid_argument("predict_variance: need 0 <= n <= B");
    const int m = (2 * n > g.num_bonds) ? g.num_bonds - n : n;
    VariancePrediction p = predict_variance_direct(g, m);
    p.n = n;
    return p;
}

// Per-orbit contribution: 2^-n when encounter-free, 2^(N-n) when all N
// self-intersections are 2-encounters of length zero, 0 otherwise.
inline Rat contribution(const PseudoOrbit& po, const BinaryGraph& g) {
    (void)g;
    const auto c = orbits::classify_fast(po);
    switch (c.cls) {
        case orbits::OrbitClass::NoSelfIntersections: return pow2_rat(-po.length);
        case orbits::OrbitClass::TwoEncountersLengthZero:
            return pow2_rat(c.two_encounters - po.length);
        case orbits::OrbitClass::ZeroContribution: return 0;
    }
    return 0;
}

// Independent route to the variance: with incommensurate bond lengths two
// pseudo orbits interfere exactly when they visit every bond the same number
// of times, so group by bond-visit multiset and square the signed sums.
struct PairingBreakdown {
    Rat total = 0;
    int n = 0;
    std::map<std::vector<int>, long long> class_sums;  // bond visits -> sum of (-1)^m sign
};

inline long long signed_weight(const PseudoOrbit& po, const BinaryGraph& g) {
    const auto a = quantum::pseudo_orbit_amplitude(po, g);
    return (po.m() % 2 == 0 ? 1 : -1) * a.sign;
}

inline PairingBreakdown pairing_breakdown(const BinaryGraph& g,
                                          const std::vector<PseudoOrbit>& ppos, int n) {
    PairingBreakdown b;
    b.n = n;
    for (const auto& po : ppos) b.class_sums[po.bond_visits] += signed_weight(po, g);
    Int sum_sq = 0;
    for (const auto& [key, s] : b.class_sums) sum_sq += Int(s) * s;
    b.total = Rat(sum_sq) * pow2_rat(-n);
    return b;
}

inline Rat variance_exact_pairing(const BinaryGraph& g, int n) {
    if (n < 0) throw std::invalid_argument("variance_exact_pairing: n must be >= 0");
    const auto ppos = orbits::enumerate_ppo(g, n);
    return pairing_breakdown(g, ppos, n).total;
}

// The same grouping, read off for a single pseudo orbit: its signed weight
// times its class sum, normalized.
inline Rat contribution_oracle(const PseudoOrbit& po, const BinaryGraph& g,
                               const PairingBreakdown& b) {
    const long long s = signed_weight(po, g);
    const long long class_sum = b.class_sums.at(po.bond_visits);
    return Rat(Int(s) * class_sum) * pow2_rat(-b.n);
}

// 2^-n times the number of primitive pseudo orbits of length n.
inline Rat diagonal_contribution(int p, int n) {
    if (n < 0) throw std::invalid_argument("diagonal_contribution: n must be >= 0");
    return Rat(orbits::count_ppo(p, n)) * pow2_rat(-n);
}

inline Rat asymptotic_variance(int p) { return orbits::c_constant(p) / 2; }

}  // namespace bqg::variance
