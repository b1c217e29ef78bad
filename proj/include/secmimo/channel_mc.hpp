// Copyright (c) 2026 secmimo contributors
// SPDX-License-Identifier: Apache-2.0
//
// Monte-Carlo simulation of the downlink signal model: estimated channel,
// estimation error, true-channel composition, MRT beam, and the
// antenna-selection eavesdropper SNR. Estimates are reproducible: the sample
// space is split into fixed-size blocks and each block draws from an RNG
// stream derived from (master seed, block index), so results do not depend
// on thread scheduling or worker count.

#ifndef SECMIMO_CHANNEL_MC_HPP
#define SECMIMO_CHANNEL_MC_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "secmimo/analytics.hpp"
#include "secmimo/config.hpp"

namespace secmimo::mc {

using cplx = std::complex<double>;

inline constexpr std::size_t kBlockSamples = 4096;

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace detail

/// Per-block random stream. Entries are unit-variance circularly symmetric
/// complex Gaussians: (x + iy)/sqrt(2) with x, y standard normal.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t block_index) {
    std::uint64_t state = master_seed ^ (block_index * 0xD1B54A32D192ED03ULL);
    const std::uint64_t a = detail::splitmix64(state);
    const std::uint64_t b = detail::splitmix64(state);
    std::seed_seq seq{static_cast<std::uint32_t>(a),
                      static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b),
                      static_cast<std::uint32_t>(b >> 32),
                      static_cast<std::uint32_t>(block_index),
                      static_cast<std::uint32_t>(block_index >> 32)};
    engine_.seed(seq);
  }

  double normal() { return normal_(engine_); }

  cplx cscg() {
    constexpr double kInvSqrt2 = 0.7071067811865475244;
    const double re = normal();
    const double im = normal();
    return {re * kInvSqrt2, im * kInvSqrt2};
  }

  void fill_cscg(std::vector<cplx>& v) {
    for (auto& z : v) z = cscg();
  }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// One realization of the channel state: estimated channel, estimation
/// error, the composed true channel h = sqrt(rho) h_hat + sqrt(1-rho) e, and
/// the eavesdropper fading matrix (row-major n_r x n_t).
struct ChannelSample {
  std::vector<cplx> h_hat;
  std::vector<cplx> e;
  std::vector<cplx> h;
  std::vector<cplx> g;
  int n_t = 0;
  int n_r = 0;

  const cplx* g_row(int i) const { return g.data() + static_cast<std::size_t>(i) * n_t; }
};

inline ChannelSample sample_channel(const SystemConfig& cfg, RngStream& rng) {
  ChannelSample s;
  s.n_t = cfg.n_t;
  s.n_r = cfg.n_r;
  s.h_hat.resize(cfg.n_t);
  s.e.resize(cfg.n_t);
  s.h.resize(cfg.n_t);
  s.g.resize(static_cast<std::size_t>(cfg.n_r) * cfg.n_t);
  rng.fill_cscg(s.h_hat);
  rng.fill_cscg(s.e);
  rng.fill_cscg(s.g);
  const double a = std::sqrt(cfg.rho);
  const double b = std::sqrt(1.0 - cfg.rho);
  for (int i = 0; i < cfg.n_t; ++i) s.h[i] = a * s.h_hat[i] + b * s.e[i];
  return s;
}

/// MRT beam w = h_hat / ||h_hat||. The all-zero input is a probability-zero
/// event; it is rejected to guard against underflow.
inline std::vector<cplx> mrt_beam(const std::vector<cplx>& h_hat) {
  double norm_sq = 0.0;
  for (const auto& z : h_hat) norm_sq += std::norm(z);
  if (!(norm_sq > 0.0))
    throw std::domain_error("mrt_beam: channel estimate has zero norm");
  const double inv = 1.0 / std::sqrt(norm_sq);
  std::vector<cplx> w(h_hat.size());
  for (std::size_t i = 0; i < h_hat.size(); ++i) w[i] = h_hat[i] * inv;
  return w;
}

struct SnrPair {
  double gamma_s = 0.0;
  double gamma_e = 0.0;
};

/// Legitimate and eavesdropper SNRs for one realization:
/// gamma_s = P |h^H w|^2 and gamma_e = max_i P alpha^2 |g_i w|^2 (the
/// eavesdropper detects on its strongest antenna).
inline SnrPair snr_pair(const ChannelSample& s, double p_watt,
                        const SystemConfig& cfg) {
  const std::vector<cplx> w = mrt_beam(s.h_hat);
  cplx hw{0.0, 0.0};
  for (int i = 0; i < s.n_t; ++i) hw += std::conj(s.h[i]) * w[i];
  SnrPair out;
  out.gamma_s = p_watt * std::norm(hw);
  double best = 0.0;
  for (int r = 0; r < s.n_r; ++r) {
    const cplx* row = s.g_row(r);
    cplx gw{0.0, 0.0};
    for (int i = 0; i < s.n_t; ++i) gw += row[i] * w[i];
    best = std::max(best, std::norm(gw));
  }
  out.gamma_e = p_watt * cfg.alpha * cfg.alpha * best;
  return out;
}

/// A Monte-Carlo estimate together with its standard error and the inputs
/// needed to reproduce it.
struct McEstimate {
  double value = 0.0;
  double stderr_value = 0.0;
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
};

namespace detail {

inline int resolve_workers(int workers) {
  if (workers > 0) return workers;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

/// Runs fn(block_index, first_sample, count, rng) over all blocks. Blocks
/// are claimed by an atomic counter so any thread may run any block; each
/// block's stream depends only on (seed, block_index).
template <typename Fn>
void run_blocks(std::size_t n_samples, std::uint64_t seed, int workers,
                Fn&& fn) {
  if (n_samples == 0) return;
  const std::size_t n_blocks = (n_samples + kBlockSamples - 1) / kBlockSamples;
  const int n_workers =
      std::min<std::size_t>(resolve_workers(workers), n_blocks);
  auto run_block = [&](std::size_t b) {
    const std::size_t first = b * kBlockSamples;
    const std::size_t count = std::min(kBlockSamples, n_samples - first);
    RngStream rng(seed, b);
    fn(b, first, count, rng);
  };
  if (n_workers <= 1) {
    for (std::size_t b = 0; b < n_blocks; ++b) run_block(b);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(n_workers);
  for (int t = 0; t < n_workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t b = next.fetch_add(1); b < n_blocks;
           b = next.fetch_add(1)) {
        run_block(b);
      }
    });
  }
  for (auto& th : pool) th.join();
}

/// Mean of per-sample values produced by `sample_value`, reduced in block
/// order.
template <typename SampleFn>
McEstimate block_mean(const SystemConfig& cfg, std::size_t n_samples,
                      std::uint64_t seed, int workers, SampleFn&& sample_value) {
  const std::size_t n_blocks = (n_samples + kBlockSamples - 1) / kBlockSamples;
  std::vector<double> sums(n_blocks, 0.0);
  std::vector<double> sq_sums(n_blocks, 0.0);
  run_blocks(n_samples, seed, workers,
             [&](std::size_t b, std::size_t, std::size_t count,
                 RngStream& rng) {
               double acc = 0.0;
               double acc_sq = 0.0;
               for (std::size_t k = 0; k < count; ++k) {
                 const double v = sample_value(cfg, rng);
                 acc += v;
                 acc_sq += v * v;
               }
               sums[b] = acc;
               sq_sums[b] = acc_sq;
             });
  double total = 0.0;
  double total_sq = 0.0;
  for (std::size_t b = 0; b < n_blocks; ++b) {
    total += sums[b];
    total_sq += sq_sums[b];
  }
  McEstimate est;
  est.n_samples = n_samples;
  est.seed = seed;
  est.value = total / static_cast<double>(n_samples);
  const double var =
      std::max(0.0, total_sq / static_cast<double>(n_samples) -
                        est.value * est.value);
  est.stderr_value = std::sqrt(var / static_cast<double>(n_samples));
  return est;
}

}  // namespace detail

/// Draws of the eavesdropper SNR, in deterministic sample order.
inline std::vector<double> sample_eavesdropper_snr(const SystemConfig& cfg,
                                                   double p_watt,
                                                   std::size_t n_samples,
                                                   std::uint64_t seed,
                                                   int workers = 0) {
  validate(cfg);
  std::vector<double> out(n_samples);
  detail::run_blocks(n_samples, seed, workers,
                     [&](std::size_t, std::size_t first, std::size_t count,
                         RngStream& rng) {
                       for (std::size_t k = 0; k < count; ++k) {
                         const ChannelSample s = sample_channel(cfg, rng);
                         out[first + k] = snr_pair(s, p_watt, cfg).gamma_e;
                       }
                     });
  return out;
}

/// Fraction of realizations whose instantaneous secrecy rate C_s - C_e falls
/// below r_bps. C_s is the exact finite-array capacity W log2(1 + gamma_s),
/// not the large-array asymptote.
inline McEstimate empirical_outage(const SystemConfig& cfg, double r_bps,
                                   double p_watt, std::size_t n_samples,
                                   std::uint64_t seed, int workers = 0) {
  validate(cfg);
  auto est = detail::block_mean(
      cfg, n_samples, seed, workers,
      [&](const SystemConfig& c, RngStream& rng) -> double {
        const ChannelSample s = sample_channel(c, rng);
        const SnrPair snr = snr_pair(s, p_watt, c);
        const double cap_s = c.bandwidth_hz * std::log2(1.0 + snr.gamma_s);
        const double cap_e = c.bandwidth_hz * std::log2(1.0 + snr.gamma_e);
        return r_bps > cap_s - cap_e ? 1.0 : 0.0;
      });
  // Proportion standard error.
  est.stderr_value = std::sqrt(
      std::max(0.0, est.value * (1.0 - est.value)) /
      static_cast<double>(n_samples));
  return est;
}

/// Fraction of realizations where the asymptotic legitimate capacity exceeds
/// the eavesdropper capacity, the empirical counterpart of
/// positive_secrecy_probability.
inline McEstimate positive_secrecy_fraction(const SystemConfig& cfg,
                                            double p_watt,
                                            std::size_t n_samples,
                                            std::uint64_t seed,
                                            int workers = 0) {
  validate(cfg);
  const double cap_s_asym = asymptotic_legitimate_capacity(
      p_watt, cfg.rho, cfg.n_t, cfg.bandwidth_hz);
  auto est = detail::block_mean(
      cfg, n_samples, seed, workers,
      [&](const SystemConfig& c, RngStream& rng) -> double {
        const ChannelSample s = sample_channel(c, rng);
        const SnrPair snr = snr_pair(s, p_watt, c);
        const double cap_e = c.bandwidth_hz * std::log2(1.0 + snr.gamma_e);
        return cap_s_asym - cap_e > 0.0 ? 1.0 : 0.0;
      });
  est.stderr_value = std::sqrt(
      std::max(0.0, est.value * (1.0 - est.value)) /
      static_cast<double>(n_samples));
  return est;
}

/// Mean exact legitimate capacity per antenna count, with its relative error
/// against the large-array asymptote W log2(rho P N_t).
struct CapacityConvergencePoint {
  int n_t = 0;
  double mean_capacity_bps = 0.0;
  double stderr_bps = 0.0;
  double asymptote_bps = 0.0;
  double relative_error = 0.0;
};

inline std::vector<CapacityConvergencePoint> legitimate_capacity_convergence(
    const SystemConfig& cfg, const std::vector<int>& n_t_list, double p_watt,
    std::size_t samples_per_point, std::uint64_t seed, int workers = 0) {
  std::vector<CapacityConvergencePoint> out;
  out.reserve(n_t_list.size());
  for (std::size_t i = 0; i < n_t_list.size(); ++i) {
    SystemConfig c = cfg;
    c.n_t = n_t_list[i];
    validate(c);
    const McEstimate est = detail::block_mean(
        c, samples_per_point, seed + i, workers,
        [&](const SystemConfig& cc, RngStream& rng) -> double {
          const ChannelSample s = sample_channel(cc, rng);
          const SnrPair snr = snr_pair(s, p_watt, cc);
          return cc.bandwidth_hz * std::log2(1.0 + snr.gamma_s);
        });
    CapacityConvergencePoint pt;
    pt.n_t = c.n_t;
    pt.mean_capacity_bps = est.value;
    pt.stderr_bps = est.stderr_value;
    pt.asymptote_bps = asymptotic_legitimate_capacity(p_watt, c.rho, c.n_t,
                                                      c.bandwidth_hz);
    pt.relative_error =
        std::abs(pt.mean_capacity_bps - pt.asymptote_bps) /
        std::abs(pt.asymptote_bps);
    out.push_back(pt);
  }
  return out;
}

/// Kolmogorov-Smirnov distance between a sample and a reference CDF.
template <typename Cdf>
double ks_distance(std::vector<double> samples, Cdf&& cdf) {
  if (samples.empty()) throw std::invalid_argument("ks_distance: empty sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    sup = std::max(sup, std::abs(f - static_cast<double>(i) / n));
    sup = std::max(sup, std::abs(static_cast<double>(i + 1) / n - f));
  }
  return sup;
}

}  // namespace secmimo::mc

#endif  // SECMIMO_CHANNEL_MC_HPP
