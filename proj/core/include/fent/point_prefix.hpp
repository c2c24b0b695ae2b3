#ifndef FENT_POINT_PREFIX_HPP
#define FENT_POINT_PREFIX_HPP

#include <cstdint>
#include <map>

#include "fent/group_element.hpp"
#include "fent/product_measure.hpp"

namespace fent {

// Finite shadow of a point of the full product space: only finitely many
// coordinates are materialized. A prefix sampled with a seed reveals further
// coordinates lazily, deterministically per (seed, coordinate), so revelation
// order never matters.
class PointPrefix {
 public:
  PointPrefix() = default;
  explicit PointPrefix(std::uint64_t seed) : seed_(seed), sampled_(true) {}

  // Explicit bits, no sampling stream behind them.
  static PointPrefix from_bits(std::map<int, int> bits);

  // Reveals (and caches) coordinate n, sampling it if backed by a stream.
  int reveal(int n, const ProductMeasureSpec& spec);

  // Bit of an already-materialized coordinate; throws if absent.
  int bit(int n) const;
  bool has(int n) const { return bits_.count(n) != 0; }
  const std::map<int, int>& bits() const { return bits_; }

  // The translated point S_f y: flips every coordinate in the support of f.
  // All flipped coordinates must be (or become) revealed first.
  PointPrefix translate(const GroupElement& f, const ProductMeasureSpec& spec) const;

 private:
  std::map<int, int> bits_;
  std::uint64_t seed_ = 0;
  bool sampled_ = false;
};

// Coordinates 1..depth sampled independently from the coordinate
// distributions; identical (spec, depth, seed) gives identical prefixes.
PointPrefix sample_prefix(const ProductMeasureSpec& spec, int depth, std::uint64_t seed);

// log of d(nu o S_f)/d nu at y: sum over the support of f of the one-bit
// flip log-ratios. Carried in log space; exponentiate only at the boundary.
double log_rn_derivative(const GroupElement& f, PointPrefix& y,
                         const ProductMeasureSpec& spec);
double rn_derivative(const GroupElement& f, PointPrefix& y,
                     const ProductMeasureSpec& spec);

}  // namespace fent

#endif
