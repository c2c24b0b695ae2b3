#include "fent/product_measure.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fent {

double ProductMeasureSpec::family_epsilon(int n) const {
  if (n < 1) throw std::domain_error("coordinate indices are 1-based");
  if (std::holds_alternative<ZeroFamily>(family_)) return 0.0;
  if (const auto* c = std::get_if<ConstantFamily>(&family_)) return c->eps;
  const auto& p = std::get<PowerFamily>(family_);
  return p.c * std::pow(static_cast<double>(n), -p.a);
}

CoordinateDistribution ProductMeasureSpec::coordinate_distribution(int n) const {
  CoordinateDistribution d;
  if (auto it = overrides_.find(n); it != overrides_.end()) {
    d = it->second;
  } else {
    double eps = family_epsilon(n);
    // nu_n(0) = 1/(1+e^eps); computed through exp(-eps) to avoid overflow.
    double e = std::exp(-std::abs(eps));
    double small = e / (1.0 + e);
    double big = 1.0 / (1.0 + e);
    d.p0 = eps >= 0.0 ? small : big;
    d.p1 = eps >= 0.0 ? big : small;
  }
  if (deformation_ && deformation_->n0 == n) {
    // theta * nu_n + (1-theta) * (point mass at 1)
    d.p0 *= deformation_->theta;
    d.p1 = 1.0 - d.p0;
  }
  return d;
}

double ProductMeasureSpec::log_flip_ratio(int n, int bit) const {
  CoordinateDistribution d = coordinate_distribution(n);
  return bit == 0 ? std::log(d.p1) - std::log(d.p0)
                  : std::log(d.p0) - std::log(d.p1);
}

double ProductMeasureSpec::coordinate_weight(int n) const {
  CoordinateDistribution d = coordinate_distribution(n);
  return (d.p1 - d.p0) * (std::log(d.p1) - std::log(d.p0));
}

ProductMeasureSpec ProductMeasureSpec::with_override(int n, double p0, double p1) const {
  if (n < 1) throw std::domain_error("coordinate indices are 1-based");
  if (!(p0 > 0.0 && p1 > 0.0) || std::abs(p0 + p1 - 1.0) > 1e-12)
    throw std::domain_error("override must be a strictly positive probability pair");
  ProductMeasureSpec out = *this;
  out.overrides_[n] = CoordinateDistribution{p0, p1};
  return out;
}

ProductMeasureSpec ProductMeasureSpec::with_deformation(int n0, double theta) const {
  if (n0 < 1) throw std::domain_error("coordinate indices are 1-based");
  if (!(theta > 0.0 && theta <= 1.0))
    throw std::domain_error("deformation requires theta in (0,1]");
  ProductMeasureSpec out = *this;
  out.deformation_ = Deformation{n0, theta};
  return out;
}

ProductMeasureSpec ProductMeasureSpec::without_deformation() const {
  ProductMeasureSpec out = *this;
  out.deformation_.reset();
  return out;
}

std::string ProductMeasureSpec::family_description() const {
  std::ostringstream os;
  if (std::holds_alternative<ZeroFamily>(family_)) {
    os << "zero";
  } else if (const auto* c = std::get_if<ConstantFamily>(&family_)) {
    os << "constant(eps=" << c->eps << ")";
  } else {
    const auto& p = std::get<PowerFamily>(family_);
    os << "power(c=" << p.c << ", a=" << p.a << ")";
  }
  if (!overrides_.empty()) os << " +" << overrides_.size() << " override(s)";
  if (deformation_)
    os << " deformed(n0=" << deformation_->n0 << ", theta=" << deformation_->theta << ")";
  return os.str();
}

}  // namespace fent
