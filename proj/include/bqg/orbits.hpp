#pragma once

#include "bqg/graph.hpp"
#include "bqg/words.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace bqg::orbits {

using graphs::BinaryGraph;
using words::Word;

// Closed walk up to rotation; vertices hold the lexicographically least
// rotation and bonds the corresponding bond ids.  Primitive by construction
// everywhere below.
struct PeriodicOrbit {
    std::vector<int> vertices;
    std::vector<int> bonds;

    int length() const { return static_cast<int>(vertices.size()); }
    bool operator==(const PeriodicOrbit& o) const { return vertices == o.vertices; }
    bool operator<(const PeriodicOrbit& o) const { return vertices < o.vertices; }
};

// Set of distinct primitive periodic orbits with cached visit counts.
struct PseudoOrbit {
    std::vector<PeriodicOrbit> orbits;  // sorted descending by vertex word
    int length = 0;
    std::vector<int> bond_visits;    // per bond id
    std::vector<int> vertex_visits;  // per vertex

    int m() const { return static_cast<int>(orbits.size()); }
};

inline std::vector<int> least_rotation(const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    int best = 0;
    for (int s = 1; s < n; ++s) {
        for (int i = 0; i < n; ++i) {
            int a = w[(best + i) % n], b = w[(s + i) % n];
            if (a != b) {
                if (b < a) best = s;
                break;
            }
        }
    }
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) out[i] = w[(best + i) % n];
    return out;
}

inline bool is_primitive_cycle(const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool periodic = true;
        for (int i = 0; i < n && periodic; ++i)
            if (w[i] != w[i % d]) periodic = false;
        if (periodic) return false;
    }
    return true;
}

inline PeriodicOrbit orbit_from_vertices(const BinaryGraph& g, const std::vector<int>& cycle) {
    PeriodicOrbit o;
    o.vertices = least_rotation(cycle);
    const int n = o.length();
    o.bonds.resize(n);
    for (int i = 0; i < n; ++i) {
        int b = g.bond_id(o.vertices[i], o.vertices[(i + 1) % n]);
        if (b < 0) throw std::invalid_argument("orbit_from_vertices: not a walk on the graph");
        o.bonds[i] = b;
    }
    return o;
}

// Vertex cycle spelled by a cyclic binary word: vertex i is the r-bit window
// starting at position i.
inline std::vector<int> vertices_from_bits(const BinaryGraph& g, const Word& bits) {
    const int n = static_cast<int>(bits.size());
    std::vector<int> cycle(n);
    for (int i = 0; i < n; ++i) {
        int v = 0;
        for (int j = 0; j < g.r; ++j) v = 2 * v + bits[(i + j) % n];
        cycle[i] = v % g.num_vertices;
    }
    return cycle;
}

// Canonical word of an orbit: its bond bits (a Lyndon word) when p = 1, the
// vertex sequence otherwise.
inline Word orbit_word(const BinaryGraph& g, const PeriodicOrbit& o) {
    if (g.p == 1) {
        const int n = o.length();
        Word bits(n);
        for (int i = 0; i < n; ++i) bits[i] = o.vertices[(i + 1) % n] & 1;
        return least_rotation(bits);
    }
    return o.vertices;
}

// All primitive periodic orbits of topological length n, sorted by canonical
// vertex sequence.  When p = 1 orbits are produced directly from the Lyndon
// words of length n; otherwise by closed-walk search.
inline std::vector<PeriodicOrbit> enumerate_po(const BinaryGraph& g, int n) {
    if (n < 1) throw std::invalid_argument("enumerate_po: n must be >= 1");
    std::vector<PeriodicOrbit> out;
    if (g.p == 1) {
        for (const Word& w : words::lyndon_words(2, n))
            out.push_back(orbit_from_vertices(g, vertices_from_bits(g, w)));
    } else {
        std::set<std::vector<int>> seen;
        std::vector<int> path(n);
        for (int s = 0; s < g.num_vertices; ++s) {
            path[0] = s;
            // path[0..depth-1] is the walk so far; v is its last vertex
            auto dfs = [&](auto&& self, int v, int depth) -> void {
                if (depth == n) {
                    if (g.bond_id(v, s) < 0) return;
                    auto canon = least_rotation(path);
                    if (is_primitive_cycle(canon)) seen.insert(std::move(canon));
                    return;
                }
                for (int b : g.out_bonds[v]) {
                    int t = g.bonds[b].terminus;
                    path[depth] = t;
                    self(self, t, depth + 1);
                }
            };
            dfs(dfs, s, 1);
        }
        for (auto& canon : seen) out.push_back(orbit_from_vertices(g, canon));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline Int count_po(int p, int n) {
    if (n < 1) throw std::invalid_argument("count_po: n must be >= 1");
    return words::count_lyndon(2, n) + graphs::cycle_structure(p).beta_of(n);
}

inline std::vector<std::vector<PeriodicOrbit>> orbits_up_to(const BinaryGraph& g, int n) {
    std::vector<std::vector<PeriodicOrbit>> by_length(n + 1);
    for (int l = 1; l <= n; ++l) by_length[l] = enumerate_po(g, l);
    return by_length;
}

inline PseudoOrbit make_pseudo_orbit(const BinaryGraph& g, std::vector<PeriodicOrbit> orbits) {
    PseudoOrbit po;
    po.orbits = std::move(orbits);
    std::sort(po.orbits.begin(), po.orbits.end(),
              [](const PeriodicOrbit& a, const PeriodicOrbit& b) { return b < a; });
    po.bond_visits.assign(g.num_bonds, 0);
    po.vertex_visits.assign(g.num_vertices, 0);
    for (const auto& o : po.orbits) {
        po.length += o.length();
        for (int b : o.bonds) ++po.bond_visits[b];
        for (int v : o.vertices) ++po.vertex_visits[v];
    }
    return po;
}

namespace detail {

inline void sort_ppos(std::vector<PseudoOrbit>& list) {
    auto key = [](const PseudoOrbit& po) {
        std::vector<std::vector<int>> k;
        for (const auto& o : po.orbits) k.push_back(o.vertices);
        return k;
    };
    std::sort(list.begin(), list.end(),
              [&](const PseudoOrbit& a, const PseudoOrbit& b) { return key(a) < key(b); });
}

}  // namespace detail

// Depth-first search over the orbit list (longest first) selecting distinct
// orbits whose lengths sum to n.
inline std::vector<PseudoOrbit> enumerate_ppo_subset_search(const BinaryGraph& g, int n) {
    if (n < 0) throw std::invalid_argument("enumerate_ppo: n must be >= 0");
    std::vector<PseudoOrbit> out;
    if (n == 0) {
        out.push_back(make_pseudo_orbit(g, {}));
        return out;
    }
    auto by_length = orbits_up_to(g, n);
    std::vector<const PeriodicOrbit*> pool;
    for (int l = n; l >= 1; --l)
        for (const auto& o : by_length[l]) pool.push_back(&o);
    std::vector<const PeriodicOrbit*> chosen;
    auto dfs = [&](auto&& self, size_t idx, int remaining) -> void {
        if (remaining == 0) {
            std::vector<PeriodicOrbit> orbits;
            orbits.reserve(chosen.size());
            for (auto* o : chosen) orbits.push_back(*o);
            out.push_back(make_pseudo_orbit(g, std::move(orbits)));
            return;
        }
        for (size_t i = idx; i < pool.size(); ++i) {
            if (pool[i]->length() > remaining) continue;
            chosen.push_back(pool[i]);
            self(self, i + 1, remaining - pool[i]->length());
            chosen.pop_back();
        }
    };
    dfs(dfs, 0, n);
    detail::sort_ppos(out);
    return out;
}

// Word route for p = 1: pseudo orbits of length n are exactly the binary
// n-words whose factorization is strictly decreasing, the factors naming the
// member orbits.
inline std::vector<PseudoOrbit> enumerate_ppo_words(const BinaryGraph& g, int n) {
    if (g.p != 1) throw std::invalid_argument("enumerate_ppo_words: requires p = 1");
    if (n < 0) throw std::invalid_argument("enumerate_ppo: n must be >= 0");
    std::vector<PseudoOrbit> out;
    if (n == 0) {
        out.push_back(make_pseudo_orbit(g, {}));
        return out;
    }
    std::map<Word, PeriodicOrbit> orbit_of;
    for (int l = 1; l <= n; ++l)
        for (const Word& w : words::lyndon_words(2, l))
            orbit_of.emplace(w, orbit_from_vertices(g, vertices_from_bits(g, w)));
    Word bits(n);
    for (long long x = 0; x < (1LL << n); ++x) {
        for (int i = 0; i < n; ++i) bits[i] = (x >> (n - 1 - i)) & 1;
        auto factors = words::cfl_decompose(bits);
        bool strict = true;
        for (size_t i = 1; i < factors.size() && strict; ++i)
            if (factors[i - 1] == factors[i]) strict = false;
        if (!strict) continue;
        std::vector<PeriodicOrbit> orbits;
        orbits.reserve(factors.size());
        for (const auto& f : factors) orbits.push_back(orbit_of.at(f));
        out.push_back(make_pseudo_orbit(g, std::move(orbits)));
    }
    detail::sort_ppos(out);
    return out;
}

// Complete duplicate-free list of primitive pseudo orbits of length n.
inline std::vector<PseudoOrbit> enumerate_ppo(const BinaryGraph& g, int n) {
    return g.p == 1 && n >= 1 ? enumerate_ppo_words(g, n) : enumerate_ppo_subset_search(g, n);
}

// Family constant: product of (1 + 2^-c) over the doubling-map cycles.
inline Rat c_constant(int p) {
    Rat c = 1;
    for (const auto& [len, members] : graphs::cycle_structure(p).cycles)
        c *= (Rat(1) + pow2_rat(-len));
    return c;
}

namespace detail {

inline Int binomial(const Int& n, int k) {
    Int num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= (n - i);
        den *= (i + 1);
    }
    return num / den;
}

// Coefficients of prod (1+x^{c_j}) * prod_l (1+x^l)^{e_l} up to degree n_max.
inline std::vector<Int> ppo_series(const std::vector<int>& cycle_lengths,
                                   const std::vector<Int>& exponent_of_length, int n_max) {
    std::vector<Int> coeff(n_max + 1, 0);
    coeff[0] = 1;
    auto mul_factor = [&](int l, const Int& e) {
        // multiply by (1+x^l)^e truncated: binomial expansion
        std::vector<Int> binom;
        for (int k = 0; k * l <= n_max; ++k) binom.push_back(binomial(e, k));
        std::vector<Int> next(n_max + 1, 0);
        for (int d = 0; d <= n_max; ++d) {
            if (coeff[d] == 0) continue;
            for (int k = 0; d + k * l <= n_max; ++k) next[d + k * l] += coeff[d] * binom[k];
        }
        coeff = std::move(next);
    };
    for (int c : cycle_lengths) mul_factor(c, 1);
    for (int l = 1; l <= n_max; ++l)
        if (exponent_of_length[l] != 0) mul_factor(l, exponent_of_length[l]);
    return coeff;
}

}  // namespace detail

// Number of primitive pseudo orbits of length n: the closed form
// C_p * 2^(n-1) for n > p, a truncated generating product otherwise.
inline Int count_ppo(int p, int n) {
    if (n < 0) throw std::invalid_argument("count_ppo: n must be >= 0");
    if (n == 0) return 1;
    const auto cs = graphs::cycle_structure(p);
    if (n > p) {
        Int numerator = 1;
        for (const auto& [len, members] : cs.cycles) numerator *= (pow2(len) + 1);
        return numerator * pow2(n - p);  // C_p * 2^(n-1) with C_p = numerator / 2^(p-1)
    }
    std::vector<int> cycle_lengths;
    for (const auto& [len, members] : cs.cycles) cycle_lengths.push_back(len);
    std::vector<Int> lyndon(n + 1, 0);
    for (int l = 1; l <= n; ++l) lyndon[l] = words::count_lyndon(2, l);
    return detail::ppo_series(cycle_lengths, lyndon, n)[n];
}

// Coefficients of prod_l (1+x^l)^{PO_p(l)} must reproduce count_ppo.
inline bool generating_check(int p, int n_max) {
    if (n_max < 1) throw std::invalid_argument("generating_check: n_max must be >= 1");
    std::vector<Int> po(n_max + 1, 0);
    for (int l = 1; l <= n_max; ++l) po[l] = count_po(p, l);
    auto coeff = detail::ppo_series({}, po, n_max);
    for (int n = 0; n <= n_max; ++n)
        if (coeff[n] != count_ppo(p, n)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Encounter classification

struct Encounter {
    int repetitions = 0;            // how often the sequence is traversed
    int encounter_length = 0;       // bonds in the repeated sequence (0 = single vertex)
    std::vector<int> location;      // the repeated vertex sequence
};

struct EncounterProfile {
    std::vector<Encounter> encounters;

    int self_intersections() const { return static_cast<int>(encounters.size()); }
    bool all_two_encounters_length_zero() const {
        for (const auto& e : encounters)
            if (e.repetitions != 2 || e.encounter_length != 0) return false;
        return true;
    }
};

enum class OrbitClass {
    NoSelfIntersections,       // contributes 2^-n
    TwoEncountersLengthZero,   // N 2-encounters at single vertices, contributes 2^(N-n)
    ZeroContribution,
};

struct Classification {
    OrbitClass cls = OrbitClass::NoSelfIntersections;
    int two_encounters = 0;  // N when cls == TwoEncountersLengthZero
};

// O(n) classification valid on 2-in/2-out graphs: with no repeated bond a
// vertex can be visited at most twice, a twice-visited vertex automatically
// has distinct entries and exits (a 2-encounter of length zero), and any
// repeated bond forces an encounter that is longer or deeper.
inline Classification classify_fast(const PseudoOrbit& po) {
    for (int c : po.bond_visits)
        if (c >= 2) return {OrbitClass::ZeroContribution, 0};
    int doubled = 0;
    for (int c : po.vertex_visits) {
        if (c >= 3) return {OrbitClass::ZeroContribution, 0};
        if (c == 2) ++doubled;
    }
    if (doubled == 0) return {OrbitClass::NoSelfIntersections, 0};
    return {OrbitClass::TwoEncountersLengthZero, doubled};
}

inline void validate_primitive(const PseudoOrbit& po) {
    for (const auto& o : po.orbits)
        if (!is_primitive_cycle(o.vertices))
            throw std::invalid_argument("pseudo orbit contains a non-primitive orbit");
    for (size_t i = 1; i < po.orbits.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            if (po.orbits[i] == po.orbits[j])
                throw std::invalid_argument("pseudo orbit repeats an orbit");
}

// Full encounter profile from the definition: maximal repeated vertex
// sequences whose entry vertices are not all equal and whose exit vertices
// are not all equal.  Used as the oracle validating classify_fast.
inline EncounterProfile classify(const PseudoOrbit& po, const BinaryGraph& g) {
    (void)g;
    validate_primitive(po);
    EncounterProfile profile;
    const int total = po.length;
    if (total == 0) return profile;

    struct Occurrence {
        int orbit;
        int pos;
    };
    for (int len = 1; len <= total; ++len) {
        std::map<std::vector<int>, std::vector<Occurrence>> repeats;
        for (int j = 0; j < po.m(); ++j) {
            const auto& vs = po.orbits[j].vertices;
            const int L = static_cast<int>(vs.size());
            for (int pos = 0; pos < L; ++pos) {
                std::vector<int> sub(len);
                for (int i = 0; i < len; ++i) sub[i] = vs[(pos + i) % L];
                repeats[std::move(sub)].push_back({j, pos});
            }
        }
        bool any_repeat = false;
        for (auto& [sub, occ] : repeats) {
            if (occ.size() < 2) continue;
            any_repeat = true;
            bool preds_differ = false, succs_differ = false;
            for (size_t i = 1; i < occ.size(); ++i) {
                auto vertex_at = [&](const Occurrence& o, int offset) {
                    const auto& vs = po.orbits[o.orbit].vertices;
                    const int L = static_cast<int>(vs.size());
                    return vs[((o.pos + offset) % L + L) % L];
                };
                if (vertex_at(occ[i], -1) != vertex_at(occ[0], -1)) preds_differ = true;
                if (vertex_at(occ[i], len) != vertex_at(occ[0], len)) succs_differ = true;
            }
            if (preds_differ && succs_differ)
                profile.encounters.push_back(
                    {static_cast<int>(occ.size()), len - 1, sub});
        }
        if (!any_repeat) break;
    }
    return profile;
}

// ---------------------------------------------------------------------------
// Set sizes behind the variance formula

struct SetSizes {
    long long p0 = 0;                      // no self-intersections
    std::map<int, long long> hat_by_n;     // N -> count with N 2-encounters of length zero
    long long zero = 0;                    // everything else
    long long total = 0;
};

inline SetSizes tabulate_from(const std::vector<PseudoOrbit>& ppos) {
    SetSizes s;
    for (const auto& po : ppos) {
        auto c = classify_fast(po);
        switch (c.cls) {
            case OrbitClass::NoSelfIntersections: ++s.p0; break;
            case OrbitClass::TwoEncountersLengthZero: ++s.hat_by_n[c.two_encounters]; break;
            case OrbitClass::ZeroContribution: ++s.zero; break;
        }
    }
    s.total = static_cast<long long>(ppos.size());
    return s;
}

inline SetSizes tabulate_sets(const BinaryGraph& g, int n) {
    return tabulate_from(enumerate_ppo(g, n));
}

// ---------------------------------------------------------------------------
// Labels (for reports and fixture comparison)

inline std::string orbit_label(const BinaryGraph& g, const PeriodicOrbit& o) {
    return words::word_to_string(orbit_word(g, o));
}

// Member orbits in decreasing word order, each parenthesized.
inline std::string ppo_label(const BinaryGraph& g, const PseudoOrbit& po) {
    std::vector<Word> ws;
    for (const auto& o : po.orbits) ws.push_back(orbit_word(g, o));
    std::sort(ws.begin(), ws.end(), [](const Word& a, const Word& b) { return words::lex_less(b, a); });
    std::string s;
    for (const auto& w : ws) s += "(" + words::word_to_string(w) + ")";
    if (s.empty()) s = "()";
    return s;
}

}  // namespace bqg::orbits
