#include "fent/point_prefix.hpp"

#include <cmath>
#include <stdexcept>

#include "fent/rng.hpp"

namespace fent {

PointPrefix PointPrefix::from_bits(std::map<int, int> bits) {
  for (const auto& [n, b] : bits) {
    if (n < 1 || (b != 0 && b != 1))
      throw std::invalid_argument("PointPrefix: bad coordinate or bit");
  }
  PointPrefix p;
  p.bits_ = std::move(bits);
  return p;
}

int PointPrefix::reveal(int n, const ProductMeasureSpec& spec) {
  if (n < 1) throw std::domain_error("coordinate indices are 1-based");
  if (auto it = bits_.find(n); it != bits_.end()) return it->second;
  if (!sampled_)
    throw std::logic_error("PointPrefix: coordinate " + std::to_string(n) +
                           " not materialized and no sampling stream attached");
  double u = to_unit_double(mix_streams(seed_, static_cast<std::uint64_t>(n)));
  int b = u < spec.coordinate_distribution(n).p1 ? 1 : 0;
  bits_[n] = b;
  return b;
}

int PointPrefix::bit(int n) const {
  auto it = bits_.find(n);
  if (it == bits_.end())
    throw std::logic_error("PointPrefix: coordinate " + std::to_string(n) +
                           " not materialized");
  return it->second;
}

PointPrefix PointPrefix::translate(const GroupElement& f,
                                   const ProductMeasureSpec& spec) const {
  PointPrefix out = *this;
  for (int n : f.support()) out.reveal(n, spec);
  for (int n : f.support()) out.bits_[n] ^= 1;
  return out;
}

PointPrefix sample_prefix(const ProductMeasureSpec& spec, int depth,
                          std::uint64_t seed) {
  if (depth < 0) throw std::domain_error("sample_prefix: depth must be >= 0");
  PointPrefix p(seed);
  for (int n = 1; n <= depth; ++n) p.reveal(n, spec);
  return p;
}

double log_rn_derivative(const GroupElement& f, PointPrefix& y,
                         const ProductMeasureSpec& spec) {
  double acc = 0.0;
  for (int n : f.support()) acc += spec.log_flip_ratio(n, y.reveal(n, spec));
  return acc;
}

double rn_derivative(const GroupElement& f, PointPrefix& y,
                     const ProductMeasureSpec& spec) {
  return std::exp(log_rn_derivative(f, y, spec));
}

}  // namespace fent
