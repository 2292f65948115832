#pragma once

#include "bqg/rational.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bqg::graphs {

using IntMatrix = std::vector<std::vector<Int>>;

struct Bond {
    int origin;
    int terminus;
};

// Directed 2-in/2-out graph on V = p * 2^r vertices whose adjacency sends
// vertex i to 2i and 2i+1 (mod V).  Bonds are stored in a fixed order:
// vertex by vertex, the two outgoing bonds sorted by terminus.  That order
// pins down which scattering entry each bond pair receives.
struct BinaryGraph {
    int p = 1;
    int r = 0;
    int num_vertices = 0;
    int num_bonds = 0;
    std::vector<Bond> bonds;
    std::vector<std::array<int, 2>> out_bonds;  // per vertex, terminus-sorted
    std::vector<std::array<int, 2>> in_bonds;   // per vertex, origin-sorted

    int bond_id(int from, int to) const {
        for (int b : out_bonds[from])
            if (bonds[b].terminus == to) return b;
        return -1;
    }
    // position (0 or 1) of a bond among the outgoing bonds at its origin
    int out_index(int b) const {
        return out_bonds[bonds[b].origin][0] == b ? 0 : 1;
    }
    // position (0 or 1) of a bond among the incoming bonds at its terminus
    int in_index(int b) const {
        return in_bonds[bonds[b].terminus][0] == b ? 0 : 1;
    }
};

inline BinaryGraph build_graph(int p, int r) {
    if (p < 1 || p % 2 == 0) throw std::invalid_argument("build_graph: p must be odd and positive");
    if (r < 0) throw std::invalid_argument("build_graph: r must be non-negative");
    long long v_ll = p;
    for (int i = 0; i < r; ++i) v_ll *= 2;
    if (v_ll < 2) throw std::invalid_argument("build_graph: need at least 2 vertices");
    if (v_ll > (1 << 22)) throw std::invalid_argument("build_graph: graph too large");
    const int v_count = static_cast<int>(v_ll);

    BinaryGraph g;
    g.p = p;
    g.r = r;
    g.num_vertices = v_count;
    g.num_bonds = 2 * v_count;
    g.bonds.reserve(g.num_bonds);
    g.out_bonds.assign(v_count, {0, 0});
    for (int v = 0; v < v_count; ++v) {
        int t0 = (2 * v) % v_count;
        int t1 = (2 * v + 1) % v_count;
        if (t0 > t1) std::swap(t0, t1);
        g.out_bonds[v] = {static_cast<int>(g.bonds.size()), static_cast<int>(g.bonds.size()) + 1};
        g.bonds.push_back({v, t0});
        g.bonds.push_back({v, t1});
    }
    g.in_bonds.assign(v_count, {-1, -1});
    std::vector<std::vector<int>> incoming(v_count);
    for (int b = 0; b < g.num_bonds; ++b) incoming[g.bonds[b].terminus].push_back(b);
    for (int v = 0; v < v_count; ++v) {
        auto& in = incoming[v];
        if (in.size() != 2) throw std::logic_error("build_graph: vertex in-degree != 2");
        if (g.bonds[in[0]].origin > g.bonds[in[1]].origin) std::swap(in[0], in[1]);
        g.in_bonds[v] = {in[0], in[1]};
    }
    return g;
}

inline IntMatrix adjacency(const BinaryGraph& g) {
    IntMatrix a(g.num_vertices, std::vector<Int>(g.num_vertices, 0));
    for (const Bond& b : g.bonds) a[b.origin][b.terminus] += 1;
    return a;
}

// Binary word labels exist when p = 1: a vertex is an r-bit word and the
// bond i -> j is the (r+1)-bit word whose prefix is i and suffix is j.
inline std::string vertex_label(const BinaryGraph& g, int v) {
    if (g.p != 1) throw std::invalid_argument("vertex_label: labels require p = 1");
    std::string s(g.r, '0');
    for (int i = 0; i < g.r; ++i)
        if (v & (1 << (g.r - 1 - i))) s[i] = '1';
    return s;
}

inline std::string bond_label(const BinaryGraph& g, int b) {
    if (g.p != 1) throw std::invalid_argument("bond_label: labels require p = 1");
    const int word = 2 * g.bonds[b].origin + (g.bonds[b].terminus & 1);
    std::string s(g.r + 1, '0');
    for (int i = 0; i <= g.r; ++i)
        if (word & (1 << (g.r - i))) s[i] = '1';
    return s;
}

// The p x p core matrix holding all nonzero spectrum of the family:
// entry (i, j) counts solutions of j = 2i or j = 2i + 1 (mod p).
inline IntMatrix reduce_to_ap(int p) {
    if (p < 1 || p % 2 == 0) throw std::invalid_argument("reduce_to_ap: p must be odd and positive");
    IntMatrix a(p, std::vector<Int>(p, 0));
    for (int i = 0; i < p; ++i) {
        a[i][(2 * i) % p] += 1;
        a[i][(2 * i + 1) % p] += 1;
    }
    return a;
}

// Disjoint cycles of the doubling map j -> 2j (mod p) on {0,..,p-1}.  The
// fixed point j = 0 carries the eigenvalue 2 and is kept separate; beta
// counts the remaining cycles by length.
struct CycleStructure {
    std::vector<std::pair<int, std::vector<int>>> cycles;  // (length, members), j = 0 excluded
    std::map<int, int> beta;

    int beta_of(int c) const {
        auto it = beta.find(c);
        return it == beta.end() ? 0 : it->second;
    }
};

inline CycleStructure cycle_structure(int p) {
    if (p < 1 || p % 2 == 0) throw std::invalid_argument("cycle_structure: p must be odd and positive");
    CycleStructure cs;
    std::vector<bool> seen(p, false);
    seen[0] = true;  // the distinguished fixed point
    for (int j = 1; j < p; ++j) {
        if (seen[j]) continue;
        std::vector<int> members;
        int x = j;
        do {
            seen[x] = true;
            members.push_back(x);
            x = (2 * x) % p;
        } while (x != j);
        const int len = static_cast<int>(members.size());
        cs.cycles.emplace_back(len, std::move(members));
        ++cs.beta[len];
    }
    return cs;
}

// {2} together with a complete set of c-th roots of unity per cycle.
inline std::vector<std::complex<double>> nonzero_spectrum(int p) {
    std::vector<std::complex<double>> eig{{2.0, 0.0}};
    constexpr double two_pi = 6.283185307179586476925286766559;
    for (const auto& [len, members] : cycle_structure(p).cycles) {
        for (int k = 0; k < len; ++k) {
            double th = two_pi * k / len;
            eig.emplace_back(std::cos(th), std::sin(th));
        }
    }
    return eig;
}

// Tr(A_V^n) = 2^n + sum_{d|n} d * beta_p(d); independent of r.
inline Int trace_power(int p, int r, int n) {
    if (n < 1) throw std::invalid_argument("trace_power: n must be >= 1");
    (void)r;
    const CycleStructure cs = cycle_structure(p);
    Int total = pow2(n);
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) total += Int(d) * cs.beta_of(d);
    return total;
}

inline int spectral_gap(int p) {
    if (p < 1 || p % 2 == 0) throw std::invalid_argument("spectral_gap: p must be odd and positive");
    return p == 1 ? 2 : 1;
}

inline IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    const size_t n = a.size();
    IntMatrix c(n, std::vector<Int>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

inline Int mat_trace(const IntMatrix& a) {
    Int t = 0;
    for (size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

// Exact characteristic polynomial det(lambda I - A) by the Faddeev-LeVerrier
// recurrence; every division is exact over the integers.  Returns c_0..c_n
// with p(lambda) = sum_k c_k lambda^{n-k}, c_0 = 1.
inline std::vector<Int> charpoly_integer(const IntMatrix& a) {
    const size_t n = a.size();
    std::vector<Int> c(n + 1, 0);
    c[0] = 1;
    IntMatrix m(n, std::vector<Int>(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    for (size_t k = 1; k <= n; ++k) {
        IntMatrix am = mat_mul(a, m);
        c[k] = -mat_trace(am) / Int(k);
        m = std::move(am);
        for (size_t i = 0; i < n; ++i) m[i][i] += c[k];
    }
    return c;
}

// Algebraic multiplicity of the zero eigenvalue: trailing zero coefficients
// of the exact characteristic polynomial.
inline int zero_eigenvalue_multiplicity(const IntMatrix& a) {
    auto c = charpoly_integer(a);
    int mult = 0;
    for (auto it = c.rbegin(); it != c.rend() && *it == 0; ++it) ++mult;
    return mult;
}

}  // namespace bqg::graphs
