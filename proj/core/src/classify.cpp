#include "fent/classify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fent/group_element.hpp"
#include "fent/point_prefix.hpp"
#include "fent/rng.hpp"

namespace fent {

std::string KriegerType::render() const {
  switch (label) {
    case KriegerLabel::II_1:
      return "II_1";
    case KriegerLabel::III_1:
      return "III_1";
    case KriegerLabel::III_0:
      return "III_0";
    case KriegerLabel::III_lambda: {
      std::ostringstream os;
      os << "III_lambda(" << lambda << ")";
      return os.str();
    }
    case KriegerLabel::Unknown:
      return "Unknown(" + evidence + ")";
  }
  return "Unknown()";
}

KakutaniResult kakutani_square_sum(const ProductMeasureSpec& spec) {
  KakutaniResult out;
  if (std::holds_alternative<ZeroFamily>(spec.family())) {
    out.converges = true;
    out.value = 0.0;
    return out;
  }
  if (const auto* c = std::get_if<ConstantFamily>(&spec.family())) {
    if (c->eps == 0.0) {
      out.converges = true;
      out.value = 0.0;
    } else {
      out.converges = false;
      std::ostringstream os;
      os << "~ " << c->eps * c->eps << " * n";
      out.divergence_rate = os.str();
    }
    return out;
  }
  const auto& p = std::get<PowerFamily>(spec.family());
  if (p.c == 0.0) {
    out.converges = true;
    out.value = 0.0;
    return out;
  }
  if (p.a > 0.5) {
    // sum (c n^-a)^2 = c^2 zeta(2a)
    out.converges = true;
    out.value = p.c * p.c * std::riemann_zeta(2.0 * p.a);
    return out;
  }
  out.converges = false;
  std::ostringstream os;
  if (p.a == 0.5)
    os << "~ " << p.c * p.c << " * log n";
  else
    os << "~ " << p.c * p.c / (1.0 - 2.0 * p.a) << " * n^" << 1.0 - 2.0 * p.a;
  out.divergence_rate = os.str();
  return out;
}

KriegerType classify_family(const ProductMeasureSpec& spec) {
  KriegerType out;
  if (std::holds_alternative<ZeroFamily>(spec.family())) {
    out.label = KriegerLabel::II_1;
    out.evidence = "eps identically 0: Haar measure itself is invariant";
    return out;
  }
  if (const auto* c = std::get_if<ConstantFamily>(&spec.family())) {
    if (c->eps == 0.0) {
      out.label = KriegerLabel::II_1;
      out.evidence = "constant eps = 0 is the Haar family";
    } else {
      out.label = KriegerLabel::III_lambda;
      out.lambda = std::exp(-std::abs(c->eps));
      out.evidence = "constant nonzero eps: log-ratio lattice eps Z";
    }
    return out;
  }
  const auto& p = std::get<PowerFamily>(spec.family());
  if (p.c == 0.0) {
    out.label = KriegerLabel::II_1;
    out.evidence = "power family with c = 0 is the Haar family";
    return out;
  }
  if (p.a > 0.5) {
    out.label = KriegerLabel::II_1;
    out.evidence = "Kakutani: sum eps_n^2 < infinity, measure equivalent to Haar";
    return out;
  }
  if (p.a > 0.0) {
    out.label = KriegerLabel::III_1;
    out.evidence = "eps_n -> 0 with divergent square sum";
    return out;
  }
  out.label = KriegerLabel::Unknown;
  out.evidence = "power family with a <= 0: eps_n does not vanish, no rule applies";
  return out;
}

namespace {

// Euclid on reals with a noise floor; returns 0 when no usable divisor
// survives.
double real_gcd(double a, double b, double tol) {
  a = std::abs(a);
  b = std::abs(b);
  if (a < b) std::swap(a, b);
  while (b > tol) {
    double r = std::fmod(a, b);
    if (r > b - tol) r = 0.0;  // a is a near-multiple of b
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

RatioSetEstimate ratio_set_estimate(const ProductMeasureSpec& spec, int depth,
                                    long long samples, std::uint64_t seed) {
  if (depth < 1) throw std::invalid_argument("ratio_set_estimate: depth must be >= 1");
  if (samples < 1) throw std::invalid_argument("ratio_set_estimate: samples must be >= 1");

  std::vector<double> observed;
  observed.reserve(samples);
  for (long long i = 0; i < samples; ++i) {
    std::uint64_t sample_seed = mix_streams(seed, static_cast<std::uint64_t>(i));
    CounterRng rng(sample_seed);
    std::vector<int> support;
    for (int n = 1; n <= depth; ++n)
      if (rng.next_unit() < 0.5) support.push_back(n);
    GroupElement f{std::move(support)};
    PointPrefix y(mix_streams(sample_seed, 0x5eedULL));
    observed.push_back(log_rn_derivative(f, y, spec));
  }
  std::sort(observed.begin(), observed.end());

  RatioSetEstimate out;
  constexpr double kMergeTol = 1e-9;
  for (double v : observed) {
    if (!out.values.empty() && v - out.values.back().first <= kMergeTol) {
      ++out.values.back().second;
    } else {
      out.values.emplace_back(v, 1);
    }
  }

  // Lattice detection: common real divisor of the distinct nonzero values.
  double g = 0.0;
  for (const auto& [v, mult] : out.values) {
    if (std::abs(v) <= kMergeTol) continue;
    g = g == 0.0 ? std::abs(v) : real_gcd(g, v, kMergeTol);
  }
  if (g > 1e-6) {
    // Refine by averaging v / round(v/g), then check residuals.
    double acc = 0.0;
    long long count = 0;
    for (const auto& [v, mult] : out.values) {
      double k = std::round(v / g);
      if (k == 0.0) continue;
      acc += (v / k) * mult;
      count += mult;
    }
    if (count > 0) g = acc / count;
    double residual = 0.0;
    for (const auto& [v, mult] : out.values)
      residual = std::max(residual, std::abs(v - std::round(v / g) * g));
    if (residual < 1e-9) {
      out.lattice_constant = g;
      out.lattice_residual = residual;
    }
  }
  return out;
}

}  // namespace fent
