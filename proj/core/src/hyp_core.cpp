#include "teichlab/hyp_core.hpp"

#include <cmath>
#include <sstream>

#include "teichlab/errors.hpp"

namespace teichlab {
namespace {

void require_in_disk(double x, const char* name) {
  if (!std::isfinite(x) || std::abs(x) >= 1.0 - kDiskMargin) {
    std::ostringstream os;
    os.precision(17);
    os << name << " = " << x << " is outside (-1, 1)";
    throw InputError(os.str());
  }
}

}  // namespace

Modulus::Modulus(double k) : k_(k) {
  if (!std::isfinite(k) || k <= 0.0 || k >= 1.0 - kDiskMargin) {
    std::ostringstream os;
    os.precision(17);
    os << "modulus k = " << k << " must satisfy 0 < k < 1";
    throw InputError(os.str());
  }
}

double Modulus::length() const noexcept { return std::atanh(k_); }

double mobius_diff(double a, double b) {
  require_in_disk(a, "a");
  require_in_disk(b, "b");
  return (a - b) / (1.0 - a * b);
}

double hyp_dist(double a, double b) {
  // std::atanh is accurate near 0, where chord ratios live.
  return std::atanh(std::abs(mobius_diff(a, b)));
}

Modulus modulus_from_length(double l) {
  if (!std::isfinite(l) || l <= 0.0) {
    std::ostringstream os;
    os.precision(17);
    os << "side length l = " << l << " must be positive and finite";
    throw InputError(os.str());
  }
  return Modulus(std::tanh(l));
}

double length_from_modulus(Modulus k) { return k.length(); }

double param_from_arclength(double r) {
  if (!std::isfinite(r) || r < 0.0) {
    std::ostringstream os;
    os.precision(17);
    os << "arclength r = " << r << " must be non-negative and finite";
    throw InputError(os.str());
  }
  return std::tanh(r);
}

double arclength_from_param(double t) {
  if (!std::isfinite(t) || t < 0.0 || t >= 1.0) {
    std::ostringstream os;
    os.precision(17);
    os << "parameter t = " << t << " must lie in [0, 1)";
    throw InputError(os.str());
  }
  return std::atanh(t);
}

}  // namespace teichlab
