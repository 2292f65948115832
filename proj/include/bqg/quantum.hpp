#pragma once

#include "bqg/graph.hpp"
#include "bqg/orbits.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace bqg::quantum {

using graphs::BinaryGraph;
using orbits::PeriodicOrbit;
using orbits::PseudoOrbit;

inline constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;

// 2x2 DFT vertex matrix; rows index the outgoing bond slot, columns the
// incoming slot, with the negative entry at (second out, second in).
inline Eigen::Matrix2d vertex_scattering() {
    Eigen::Matrix2d s;
    s << kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2;
    return s;
}

// B x B bond scattering matrix: entry (b', b) couples an incoming bond b to
// an outgoing bond b' at the shared vertex.
inline Eigen::MatrixXd bond_scattering(const BinaryGraph& g) {
    Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(g.num_bonds, g.num_bonds);
    const Eigen::Matrix2d s = vertex_scattering();
    for (int v = 0; v < g.num_vertices; ++v) {
        for (int i = 0; i < 2; ++i) {
            const int in = g.in_bonds[v][i];
            for (int o = 0; o < 2; ++o) {
                const int out = g.out_bonds[v][o];
                sigma(out, in) = s(o, i);
            }
        }
    }
    return sigma;
}

// Transition-probability matrix; doubly stochastic here.
inline Eigen::MatrixXd classical_map(const BinaryGraph& g) {
    Eigen::MatrixXd t = bond_scattering(g);
    return t.cwiseProduct(t);
}

inline Eigen::MatrixXcd evolution_map(const BinaryGraph& g, const std::vector<double>& lengths,
                                      double k) {
    if (static_cast<int>(lengths.size()) != g.num_bonds)
        throw std::invalid_argument("evolution_map: need one length per bond");
    for (double l : lengths)
        if (!(l > 0)) throw std::invalid_argument("evolution_map: lengths must be positive");
    Eigen::MatrixXcd u = bond_scattering(g).cast<std::complex<double>>();
    for (int b = 0; b < g.num_bonds; ++b) {
        const std::complex<double> phase(std::cos(k * lengths[b]), std::sin(k * lengths[b]));
        u.col(b) *= phase;
    }
    return u;
}

namespace detail {

// Coefficients a_n of det(U - zeta I) = sum_n a_n zeta^(B-n) from the
// eigenvalues: repeated multiplication of (lambda_i - zeta).
inline std::vector<std::complex<double>> coeffs_from_eigenvalues(
    const Eigen::VectorXcd& lambda) {
    const int b = static_cast<int>(lambda.size());
    // poly[j] = coefficient of zeta^j
    std::vector<std::complex<double>> poly(b + 1, 0.0);
    poly[0] = 1.0;
    int degree = 0;
    for (int i = 0; i < b; ++i) {
        ++degree;
        for (int j = degree; j >= 1; --j) poly[j] = lambda[i] * poly[j] - poly[j - 1];
        poly[0] *= lambda[i];
    }
    std::vector<std::complex<double>> a(b + 1);
    for (int n = 0; n <= b; ++n) a[n] = poly[b - n];
    return a;
}

}  // namespace detail

// Eigenvalue route: well conditioned for unitary input since the spectrum
// lies on the unit circle.
inline std::vector<std::complex<double>> charpoly_coeffs(const Eigen::MatrixXcd& u) {
    if (u.rows() != u.cols()) throw std::invalid_argument("charpoly_coeffs: matrix not square");
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(u, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("charpoly_coeffs: eigenvalue solver failed");
    return detail::coeffs_from_eigenvalues(solver.eigenvalues());
}

// Determinant-interpolation route: evaluate det(U - zeta I) at the
// (B+1)-st roots of unity and invert the DFT.  Cheaper per call; used by the
// sampling loop.
inline std::vector<std::complex<double>> charpoly_coeffs_det(const Eigen::MatrixXcd& u) {
    if (u.rows() != u.cols()) throw std::invalid_argument("charpoly_coeffs_det: matrix not square");
    const int b = static_cast<int>(u.rows());
    const int m = b + 1;
    constexpr double two_pi = 6.283185307179586476925286766559;
    std::vector<std::complex<double>> values(m);
    Eigen::MatrixXcd shifted(b, b);
    for (int j = 0; j < m; ++j) {
        const std::complex<double> zeta(std::cos(two_pi * j / m), std::sin(two_pi * j / m));
        shifted = u;
        shifted.diagonal().array() -= zeta;
        values[j] = Eigen::PartialPivLU<Eigen::MatrixXcd>(shifted).determinant();
    }
    std::vector<std::complex<double>> a(m);
    for (int n = 0; n <= b; ++n) {
        const int power = b - n;  // coefficient of zeta^(B-n)
        std::complex<double> acc = 0.0;
        for (int j = 0; j < m; ++j) {
            const double th = -two_pi * j * power / m;
            acc += values[j] * std::complex<double>(std::cos(th), std::sin(th));
        }
        a[n] = acc / static_cast<double>(m);
    }
    return a;
}

// Signed power of 2^(-1/2): value = sign * 2^(-length/2).
struct Amplitude {
    int sign = 1;
    int length = 0;

    double value() const { return sign * std::pow(2.0, -0.5 * length); }
    double squared() const { return std::pow(2.0, -static_cast<double>(length)); }
};

// Product of scattering entries along the bond cycle.  Every entry has
// modulus 2^(-1/2); the sign flips once per (second-in -> second-out)
// transition.
inline Amplitude orbit_amplitude(const PeriodicOrbit& o, const BinaryGraph& g) {
    const int n = o.length();
    Amplitude a{1, n};
    for (int i = 0; i < n; ++i) {
        const int b_in = o.bonds[i];
        const int b_out = o.bonds[(i + 1) % n];
        if (g.bonds[b_in].terminus != g.bonds[b_out].origin)
            throw std::invalid_argument("orbit_amplitude: broken bond chain");
        if (g.in_index(b_in) == 1 && g.out_index(b_out) == 1) a.sign = -a.sign;
    }
    return a;
}

inline Amplitude pseudo_orbit_amplitude(const PseudoOrbit& po, const BinaryGraph& g) {
    Amplitude a{1, 0};
    for (const auto& o : po.orbits) {
        Amplitude part = orbit_amplitude(o, g);
        a.sign *= part.sign;
        a.length += part.length;
    }
    return a;
}

inline double metric_length(const PseudoOrbit& po, const std::vector<double>& lengths) {
    double total = 0.0;
    for (int b = 0; b < static_cast<int>(po.bond_visits.size()); ++b)
        total += po.bond_visits[b] * lengths[b];
    return total;
}

// Sum over primitive pseudo orbits of length n of (-1)^m A exp(i k L).
// Matches the matrix coefficients normalized so the n = 0 term is 1,
// i.e. equals a_n / a_0.
inline std::complex<double> coeff_via_pseudo_orbits(const BinaryGraph& g,
                                                    const std::vector<double>& lengths, double k,
                                                    int n) {
    std::complex<double> total = 0.0;
    for (const auto& po : orbits::enumerate_ppo(g, n)) {
        const Amplitude a = pseudo_orbit_amplitude(po, g);
        const double weight = (po.m() % 2 == 0 ? 1.0 : -1.0) * a.value();
        const double phase = k * metric_length(po, lengths);
        total += weight * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return total;
}

}  // namespace bqg::quantum
