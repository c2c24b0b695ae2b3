#include <doctest.h>

#include <cmath>
#include <map>

#include "fent/group_element.hpp"
#include "fent/phi.hpp"
#include "fent/point_prefix.hpp"
#include "fent/product_measure.hpp"
#include "fent/rng.hpp"

using namespace fent;

namespace {
const double kLn2 = std::log(2.0);

GroupElement random_element(CounterRng& rng, int depth) {
  std::vector<int> support;
  for (int n = 1; n <= depth; ++n)
    if (rng.next_unit() < 0.4) support.push_back(n);
  return GroupElement{std::move(support)};
}
}  // namespace

TEST_CASE("norm") {
  CHECK(GroupElement::identity().norm() == 0);
  CHECK(GroupElement{{3, 7}}.norm() == 7);
  CHECK(GroupElement::single(1).norm() == 1);
}

TEST_CASE("group addition is symmetric difference, every element involutive") {
  GroupElement a{{1, 3, 5}};
  GroupElement b{{3, 4}};
  CHECK((a + b) == GroupElement{{1, 4, 5}});
  CHECK((a + a) == GroupElement::identity());
  CHECK(a.to_string() == "{1,3,5}");
  CHECK(GroupElement::parse("{1, 4,9}") == GroupElement{{1, 4, 9}});
  CHECK(GroupElement::parse("{}").is_identity());
}

TEST_CASE("coordinate_distribution") {
  auto sym = ProductMeasureSpec::zero();
  CHECK(sym.coordinate_distribution(5).p0 == doctest::Approx(0.5).epsilon(1e-14));

  auto spec = ProductMeasureSpec::constant(kLn2);
  auto d = spec.coordinate_distribution(1);
  CHECK(d.p0 == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(d.p1 == doctest::Approx(2.0 / 3.0).epsilon(1e-14));

  auto deformed = spec.with_deformation(4, 0.3);
  auto d4 = deformed.coordinate_distribution(4);
  CHECK(d4.p0 == doctest::Approx(0.1).epsilon(1e-13));
  CHECK(d4.p1 == doctest::Approx(0.9).epsilon(1e-13));
  // other coordinates untouched
  CHECK(deformed.coordinate_distribution(3).p0 == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("rn_derivative") {
  auto spec = ProductMeasureSpec::constant(kLn2);
  auto y = PointPrefix::from_bits({{1, 0}, {2, 1}});

  GroupElement id;
  CHECK(rn_derivative(id, y, spec) == doctest::Approx(1.0).epsilon(1e-15));

  GroupElement f1 = GroupElement::single(1);
  CHECK(rn_derivative(f1, y, spec) == doctest::Approx(2.0).epsilon(1e-13));

  GroupElement f12{{1, 2}};
  CHECK(rn_derivative(f12, y, spec) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("phi point values and symmetry") {
  CHECK(phi(0.5) == 0.0);
  CHECK(phi(1.0 / 3.0) == doctest::Approx(kLn2 / 3.0).epsilon(1e-13));
  CHECK(phi(0.2) == doctest::Approx(0.8317766166719343).epsilon(1e-13));
  CHECK(phi(0.2) == doctest::Approx(phi(0.8)).epsilon(1e-13));
  CHECK_THROWS_AS(phi(0.0), std::domain_error);
  CHECK_THROWS_AS(phi(1.0), std::domain_error);
}

TEST_CASE("phi decreasing and divergent near 0") {
  double prev = phi(0.5 - 1e-9);
  for (double t = 0.49; t > 0.001; t -= 0.005) {
    double v = phi(t);
    CHECK(v > prev);
    CHECK(v > 0.0);
    prev = v;
  }
  double last = 0.0;
  for (int k = 1; k <= 12; ++k) {
    double v = phi(std::pow(10.0, -k));
    CHECK(v > last);
    last = v;
  }
}

TEST_CASE("jeffreys_weight") {
  CHECK(jeffreys_weight(0.0) == 0.0);
  CHECK(jeffreys_weight(kLn2) == doctest::Approx(kLn2 / 3.0).epsilon(1e-13));
  CHECK(jeffreys_weight(0.1) == doctest::Approx(0.004995837495787998).epsilon(1e-10));
  // agrees with phi through the parameterization, over a wide grid
  for (double eps = 1e-6; eps <= 10.0; eps *= 1.9) {
    double p0 = 1.0 / (1.0 + std::exp(eps));
    CHECK(std::abs(jeffreys_weight(eps) - phi(p0)) < 1e-12);
  }
}

TEST_CASE("sample_prefix determinism and empirical means") {
  auto spec = ProductMeasureSpec::constant(kLn2);
  auto a = sample_prefix(spec, 20, 42);
  auto b = sample_prefix(spec, 20, 42);
  CHECK(a.bits() == b.bits());
  // lazy extension agrees with eager sampling
  auto c = sample_prefix(spec, 5, 42);
  c.reveal(17, spec);
  CHECK(c.bit(17) == a.bit(17));

  auto mean_of_first_bit = [](const ProductMeasureSpec& s) {
    double total = 0.0;
    for (int i = 0; i < 10000; ++i)
      total += sample_prefix(s, 1, mix_streams(7, i)).bit(1);
    return total / 10000.0;
  };
  CHECK(std::abs(mean_of_first_bit(ProductMeasureSpec::zero()) - 0.5) < 0.02);
  CHECK(std::abs(mean_of_first_bit(spec) - 2.0 / 3.0) < 0.02);
}

TEST_CASE("cocycle chain rule, exact coefficient identity") {
  // log rn(f+g, y) = log rn(g, y) + log rn(f, S_g y). Compared first as
  // integer flip-coefficient maps (the exact statement), then numerically.
  auto spec = ProductMeasureSpec::power(0.7, 0.5);
  CounterRng rng(99);
  auto coefficients = [&](const GroupElement& f, PointPrefix& y) {
    std::map<int, int> out;  // n -> +1 for flip from bit 0, -1 from bit 1
    for (int n : f.support()) out[n] += y.reveal(n, spec) == 0 ? 1 : -1;
    return out;
  };
  for (int trial = 0; trial < 200; ++trial) {
    GroupElement f = random_element(rng, 12);
    GroupElement g = random_element(rng, 12);
    PointPrefix y = sample_prefix(spec, 12, rng.next_u64());
    PointPrefix sgy = y.translate(g, spec);

    auto lhs = coefficients(f + g, y);
    auto rhs = coefficients(g, y);
    for (const auto& [n, c] : coefficients(f, sgy)) rhs[n] += c;
    std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
    CHECK(lhs == rhs);

    double num_lhs = log_rn_derivative(f + g, y, spec);
    double num_rhs = log_rn_derivative(g, y, spec) + log_rn_derivative(f, sgy, spec);
    CHECK(std::abs(num_lhs - num_rhs) < 1e-12);
  }
}

TEST_CASE("unit mass over enumerated assignments") {
  auto spec = ProductMeasureSpec::power(1.2, 0.3).with_deformation(2, 0.4);
  GroupElement f{{1, 2, 5}};
  const auto& support = f.support();
  double total = 0.0;
  for (int mask = 0; mask < (1 << 3); ++mask) {
    std::map<int, int> bits;
    double prob = 1.0;
    for (int i = 0; i < 3; ++i) {
      int bit = (mask >> i) & 1;
      bits[support[i]] = bit;
      auto d = spec.coordinate_distribution(support[i]);
      prob *= bit == 0 ? d.p0 : d.p1;
    }
    auto y = PointPrefix::from_bits(bits);
    total += prob * rn_derivative(f, y, spec);
  }
  CHECK(std::abs(total - 1.0) < 1e-12);
}

TEST_CASE("involution in log form") {
  auto spec = ProductMeasureSpec::constant(0.37);
  CounterRng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    GroupElement f = random_element(rng, 10);
    PointPrefix y = sample_prefix(spec, 10, rng.next_u64());
    PointPrefix sfy = y.translate(f, spec);
    // IEEE negation symmetry makes this an exact equality.
    CHECK(log_rn_derivative(f, sfy, spec) == -log_rn_derivative(f, y, spec));
  }
}
