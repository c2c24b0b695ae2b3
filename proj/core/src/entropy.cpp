#include "fent/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include "fent/errors.hpp"
#include "fent/point_prefix.hpp"
#include "fent/rng.hpp"

namespace fent {

double exact_entropy(const FiberMeasure& xi, const ProductMeasureSpec& spec) {
  double total_mass = 0.0;
  double h = 0.0;
  for (const auto& [f, mass] : xi) {
    if (mass < 0.0) throw std::domain_error("exact_entropy: negative mass");
    total_mass += mass;
    double per_atom = 0.0;
    for (int n : f.support()) per_atom += spec.coordinate_weight(n);
    h += mass * per_atom;
  }
  if (total_mass > 1.0 + 1e-12)
    throw std::domain_error("exact_entropy: xi mass exceeds 1");
  return h;
}

double exact_entropy_fubini(const FiberMeasure& xi, const ProductMeasureSpec& spec) {
  std::map<int, double> coordinate_mass;  // xi({f : n in N_f})
  for (const auto& [f, mass] : xi)
    for (int n : f.support()) coordinate_mass[n] += mass;
  double h = 0.0;
  for (const auto& [n, mass] : coordinate_mass)
    h += mass * spec.coordinate_weight(n);
  return h;
}

std::vector<std::pair<double, FiberMeasure>> enumerate_fiber_measures(const Scenario& s) {
  if (const auto* cycle = std::get_if<FiniteCycle>(&s.base)) {
    if (!std::holds_alternative<ConstantPerGenerator>(s.cocycle)) {
      std::vector<std::pair<double, FiberMeasure>> out;
      double w = 1.0 / cycle->m;
      for (int x = 0; x < cycle->m; ++x)
        out.emplace_back(w, pushforward_kappa(s.cocycle, s.base, s.kappa, x));
      return out;
    }
  } else if (!std::holds_alternative<ConstantPerGenerator>(s.cocycle)) {
    throw ValidationError("exact base enumeration needs a finite base or a constant cocycle");
  }
  // Constant cocycle: kappa_x does not depend on x.
  return {{1.0, pushforward_kappa(s.cocycle, s.base, s.kappa)}};
}

EntropyBreakdown skew_entropy(const Scenario& s) {
  EntropyBreakdown out;
  out.base_term = 0.0;  // both base kinds preserve their measure
  for (const auto& [mu_weight, kappa_x] : enumerate_fiber_measures(s)) {
    std::map<int, double> coordinate_mass;
    for (const auto& [f, mass] : kappa_x)
      for (int n : f.support()) coordinate_mass[n] += mass;
    for (const auto& [n, mass] : coordinate_mass) {
      double contribution = mu_weight * mass * s.nu.coordinate_weight(n);
      out.per_coordinate[n] += contribution;
      out.fiber_integral += contribution;
    }
  }
  out.total = out.base_term + out.fiber_integral;
  return out;
}

namespace {

constexpr long long kChunk = 4096;

// Deterministic chunked MC: chunk c derives its own substream from
// (seed, c); per-sample prefixes hash (chunk stream, i). Partial sums are
// reduced in chunk order, so the result does not depend on worker count.
McEstimate run_chunked_mc(long long samples, std::uint64_t seed, int workers,
                          const std::function<double(std::uint64_t)>& sample_value) {
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  long long chunks = (samples + kChunk - 1) / kChunk;
  std::vector<double> sums(chunks, 0.0), sqsums(chunks, 0.0);
  auto run_chunk = [&](long long c) {
    std::uint64_t chunk_stream = mix_streams(seed, static_cast<std::uint64_t>(c));
    long long begin = c * kChunk;
    long long end = std::min(samples, begin + kChunk);
    double s1 = 0.0, s2 = 0.0;
    for (long long i = begin; i < end; ++i) {
      double v = sample_value(mix_streams(chunk_stream, static_cast<std::uint64_t>(i)));
      s1 += v;
      s2 += v * v;
    }
    sums[c] = s1;
    sqsums[c] = s2;
  };
  if (workers == 1 || chunks == 1) {
    for (long long c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (long long c = w; c < chunks; c += workers) run_chunk(c);
      });
    for (auto& t : pool) t.join();
  }
  double s1 = 0.0, s2 = 0.0;
  for (long long c = 0; c < chunks; ++c) {
    s1 += sums[c];
    s2 += sqsums[c];
  }
  McEstimate est;
  est.samples = samples;
  est.seed = seed;
  est.mean = s1 / samples;
  if (samples > 1) {
    double var = (s2 - samples * est.mean * est.mean) / (samples - 1);
    est.stderror = std::sqrt(std::max(0.0, var) / samples);
  }
  return est;
}

}  // namespace

McEstimate mc_entropy(const Scenario& s, long long samples, std::uint64_t seed,
                      int workers) {
  if (samples < 2) throw std::invalid_argument("mc_entropy: samples must be >= 2");
  auto fibers = enumerate_fiber_measures(s);
  auto sample_value = [&](std::uint64_t sample_seed) {
    PointPrefix y(sample_seed);
    double v = 0.0;
    for (const auto& [mu_weight, kappa_x] : fibers)
      for (const auto& [f, mass] : kappa_x)
        v -= mu_weight * mass * log_rn_derivative(f, y, s.nu);
    return v;
  };
  return run_chunked_mc(samples, seed, workers, sample_value);
}

McEstimate stationarity_defect(const Scenario& s, long long samples,
                               std::uint64_t seed, int workers) {
  if (samples < 1) throw std::invalid_argument("stationarity_defect: samples must be >= 1");
  auto fibers = enumerate_fiber_measures(s);
  auto sample_value = [&](std::uint64_t sample_seed) {
    // The defect is pointwise in x, so x is sampled, not averaged.
    std::size_t xi = fibers.size() == 1
                         ? 0
                         : static_cast<std::size_t>(
                               mix_streams(sample_seed, 0x9e37ULL) % fibers.size());
    PointPrefix y(mix_streams(sample_seed, 1));
    double total = 0.0;
    for (const auto& [f, mass] : fibers[xi].second)
      total += mass * std::exp(log_rn_derivative(f, y, s.nu));
    return std::abs(total - 1.0);
  };
  return run_chunked_mc(samples, seed, workers, sample_value);
}

}  // namespace fent
