#ifndef FENT_PHI_HPP
#define FENT_PHI_HPP

#include <cmath>
#include <stdexcept>

namespace fent {

// Phi(t) = (1 - 2t) * log((1 - t) / t) on (0,1). Symmetric about 1/2,
// strictly decreasing on (0, 1/2), diverges as t -> 0+.
inline double phi(double t) {
  if (!(t > 0.0 && t < 1.0))
    throw std::domain_error("phi: argument must lie in (0,1)");
  return (1.0 - 2.0 * t) * (std::log1p(-t) - std::log(t));
}

// Per-coordinate entropy weight of the two-point distribution with
// parameter eps: (nu(1) - nu(0)) * log(nu(1)/nu(0)) = eps * tanh(eps/2).
// Agrees with phi(1/(1+e^eps)) for all eps.
inline double jeffreys_weight(double eps) {
  return eps * std::tanh(eps / 2.0);
}

}  // namespace fent

#endif
