#pragma once

#include "bqg/quantum.hpp"
#include "bqg/variance.hpp"

#include <atomic>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

namespace bqg::montecarlo {

using graphs::BinaryGraph;

// Counter-based generator: every draw is a pure function of
// (seed, stream, index), so chunking and thread count cannot change the
// sample stream.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline double counter_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    const std::uint64_t h = mix64(mix64(mix64(seed) ^ stream) ^ index);
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

inline constexpr std::uint64_t kLengthStream = 0x4c454e47u;  // bond length draws
inline constexpr std::uint64_t kSpectralStream = 0x4b564152u;  // spectral parameter draws

struct SimulationConfig {
    std::uint64_t seed = 0;
    double length_lo = 0.9;
    double length_hi = 1.1;
    double k_min = 1000.0;
    // Averaging window in units of the mean spacing 2*pi/L.  Kept well above
    // the 1e4 floor so the finite-window remainder is far below the Monte
    // Carlo error at desk-scale sample counts.
    double window_spacings = 1e5;
    std::uint64_t samples = 100000;
    std::uint64_t chunk = 8192;
    int threads = 0;  // 0 = hardware concurrency
};

inline std::vector<double> sample_lengths(const BinaryGraph& g, std::uint64_t seed,
                                          double lo = 0.9, double hi = 1.1) {
    if (!(lo > 0) || !(hi >= lo)) throw std::invalid_argument("sample_lengths: bad interval");
    std::vector<double> lengths(g.num_bonds);
    for (int b = 0; b < g.num_bonds; ++b)
        lengths[b] = lo + (hi - lo) * counter_uniform(seed, kLengthStream, b);
    return lengths;
}

struct VarianceEstimate {
    std::vector<double> mean;       // per n: mean of |a_n|^2
    std::vector<double> std_error;  // per n: sample stddev / sqrt(samples)
    std::uint64_t samples = 0;
    double mean_spacing = 0.0;      // 2*pi / total length
    double spacings_covered = 0.0;
    double k_min = 0.0;
    double k_max = 0.0;
};

// Mean of |a_n(k)|^2 over i.i.d. uniform k draws.  Deterministic for a fixed
// (seed, samples, chunk): per-chunk partial sums are merged in chunk order
// whatever the worker count.
inline VarianceEstimate estimate_variance(const BinaryGraph& g, const std::vector<double>& lengths,
                                          const SimulationConfig& cfg) {
    if (cfg.samples < 1) throw std::invalid_argument("estimate_variance: samples must be >= 1");
    if (static_cast<int>(lengths.size()) != g.num_bonds)
        throw std::invalid_argument("estimate_variance: need one length per bond");
    const int b = g.num_bonds;
    double total_length = 0.0;
    for (double l : lengths) total_length += l;
    constexpr double two_pi = 6.283185307179586476925286766559;
    const double mean_spacing = two_pi / total_length;
    const double k_min = cfg.k_min;
    const double k_max = cfg.k_min + cfg.window_spacings * mean_spacing;

    const std::uint64_t chunk = cfg.chunk > 0 ? cfg.chunk : 8192;
    const std::uint64_t num_chunks = (cfg.samples + chunk - 1) / chunk;
    std::vector<std::vector<double>> chunk_sum(num_chunks), chunk_sumsq(num_chunks);

    const Eigen::MatrixXcd sigma = quantum::bond_scattering(g).cast<std::complex<double>>();

    auto run_chunk = [&](std::uint64_t c) {
        const std::uint64_t begin = c * chunk;
        const std::uint64_t end = std::min(cfg.samples, begin + chunk);
        std::vector<double> sum(b + 1, 0.0), sumsq(b + 1, 0.0);
        Eigen::MatrixXcd u(b, b);
        for (std::uint64_t s = begin; s < end; ++s) {
            const double k = k_min + (k_max - k_min) * counter_uniform(cfg.seed, kSpectralStream, s);
            u = sigma;
            for (int col = 0; col < b; ++col) {
                const double phase = k * lengths[col];
                u.col(col) *= std::complex<double>(std::cos(phase), std::sin(phase));
            }
            const auto a = quantum::charpoly_coeffs_det(u);
            for (int n = 0; n <= b; ++n) {
                const double v = std::norm(a[n]);
                sum[n] += v;
                sumsq[n] += v * v;
            }
        }
        chunk_sum[c] = std::move(sum);
        chunk_sumsq[c] = std::move(sumsq);
    };

    unsigned workers = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                       : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<std::uint64_t>(workers, num_chunks);
    if (workers <= 1) {
        for (std::uint64_t c = 0; c < num_chunks; ++c) run_chunk(c);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                while (true) {
                    const std::uint64_t c = next.fetch_add(1);
                    if (c >= num_chunks) break;
                    run_chunk(c);
                }
            });
        for (auto& t : pool) t.join();
    }

    std::vector<double> sum(b + 1, 0.0), sumsq(b + 1, 0.0);
    for (std::uint64_t c = 0; c < num_chunks; ++c)
        for (int n = 0; n <= b; ++n) {
            sum[n] += chunk_sum[c][n];
            sumsq[n] += chunk_sumsq[c][n];
        }

    VarianceEstimate est;
    est.samples = cfg.samples;
    est.mean_spacing = mean_spacing;
    est.spacings_covered = (k_max - k_min) / mean_spacing;
    est.k_min = k_min;
    est.k_max = k_max;
    est.mean.resize(b + 1);
    est.std_error.resize(b + 1);
    const double n_samples = static_cast<double>(cfg.samples);
    for (int n = 0; n <= b; ++n) {
        const double mean = sum[n] / n_samples;
        est.mean[n] = mean;
        double var = 0.0;
        if (cfg.samples > 1) {
            var = (sumsq[n] - n_samples * mean * mean) / (n_samples - 1.0);
            if (var < 0) var = 0;  // rounding guard for constant samples
        }
        est.std_error[n] = std::sqrt(var / n_samples);
    }
    return est;
}

struct ConvergenceRow {
    int r = 0;
    int n = 0;
    bool exact = false;
    Rat exact_value = 0;    // set when exact
    double estimate = 0.0;  // set when !exact
    double std_error = 0.0;
};

// Data behind the family convergence plots: the variance at fixed ratio n/B
// for a list of r values, exact where enumeration is affordable, sampled
// otherwise.
inline std::vector<ConvergenceRow> convergence_series(int p, const std::vector<int>& r_list,
                                                      double ratio, const SimulationConfig& cfg,
                                                      const Int& exact_budget = Int(1) << 20) {
    if (r_list.empty()) throw std::invalid_argument("convergence_series: empty r list");
    std::vector<ConvergenceRow> rows;
    for (int r : r_list) {
        const BinaryGraph g = graphs::build_graph(p, r);
        const double n_real = ratio * g.num_bonds;
        const int n = static_cast<int>(std::llround(n_real));
        if (std::abs(n_real - n) > 1e-9)
            throw std::invalid_argument("convergence_series: ratio*B is not an integer");
        ConvergenceRow row;
        row.r = r;
        row.n = n;
        const int m = std::min(n, g.num_bonds - n);
        if (orbits::count_ppo(p, m) <= exact_budget) {
            row.exact = true;
            row.exact_value = variance::predict_variance(g, n).value;
        } else {
            const auto lengths = sample_lengths(g, cfg.seed, cfg.length_lo, cfg.length_hi);
            const auto est = estimate_variance(g, lengths, cfg);
            row.estimate = est.mean[n];
            row.std_error = est.std_error[n];
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace bqg::montecarlo
