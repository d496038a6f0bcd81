#include "teichlab/sigma.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <memory>
#include <random>
#include <sstream>
#include <utility>
#include <vector>

// Boost 1.74's pchip calls isnan unqualified.
namespace boost::math::interpolators {
using std::isnan;
}
#include <boost/math/interpolators/pchip.hpp>

#include "teichlab/errors.hpp"

namespace teichlab {
namespace {

constexpr double kBoundSlack = 1e-12;
constexpr double kEndpointSlack = 1e-14;
constexpr double kDerivativeSnap = 1e-12;
// Fraction of [0, k] examined by the strictness checks at each end.
constexpr double kStrictWindow = 1.0 / 20.0;

constexpr std::array<std::pair<SigmaFamily, std::string_view>, 5> kFamilyNames{{
    {SigmaFamily::kConstantOne, "constant-one"},
    {SigmaFamily::kPrescribedGerm, "prescribed-germ"},
    {SigmaFamily::kOscillatory, "oscillatory"},
    {SigmaFamily::kMidpointPinned, "midpoint-pinned"},
    {SigmaFamily::kCustom, "custom"},
}};

// Snaps x to +-bound when within relative kDerivativeSnap; rejects |x| beyond.
double snap_derivative(double x, double bound, const char* name) {
  if (!std::isfinite(x)) {
    throw InputError(std::string(name) + " must be finite");
  }
  if (std::abs(std::abs(x) - bound) <= kDerivativeSnap * bound) {
    return std::copysign(bound, x);
  }
  if (std::abs(x) > bound) {
    std::ostringstream os;
    os.precision(17);
    os << name << " = " << x << " exceeds the admissible bound " << bound;
    throw InputError(os.str());
  }
  return x;
}

// Uniform in [-1, 1), identical on every platform for a given engine state.
double symmetric_unit(std::mt19937_64& gen) {
  return 2.0 * static_cast<double>(gen() >> 11) * 0x1.0p-53 - 1.0;
}

struct PrescribedShape {
  double k;
  double length;  // artanh(k)
  double d0;
  double dk;
  bool extremal0;
  bool extremalk;
  double curvature;
  double t_lo;  // germ near 0 on [0, t_lo]
  double t_hi;  // germ near k on [t_hi, k]
  std::shared_ptr<boost::math::interpolators::pchip<std::vector<double>>> interior;

  double germ0(double t) const {
    if (extremal0) {
      return 1.0 + d0 * t - (1.0 - k * k) * t * t;
    }
    return 1.0 + d0 * t;
  }

  double germk(double t) const {
    const double s = t - k;
    if (extremalk) {
      return 1.0 - s / k - 2.0 * s * s / (1.0 - k * k);
    }
    return 1.0 + dk * s + curvature * s * s;
  }

  double operator()(double t) const {
    if (t <= t_lo) return germ0(t);
    if (t >= t_hi) return germk(t);
    const double u = (*interior)(std::atanh(t));
    return std::tanh(length + u) / k;
  }
};

PrescribedShape build_shape(double d0, double dk, bool extremal0, bool extremalk,
                            Modulus modulus, const GermOptions& options,
                            double germ0_fraction, double germk_fraction,
                            double amplitude) {
  PrescribedShape shape;
  shape.k = modulus.value();
  shape.length = modulus.length();
  shape.d0 = d0;
  shape.dk = dk;
  shape.extremal0 = extremal0;
  shape.extremalk = extremalk;
  shape.curvature = options.k_curvature;
  shape.t_lo = germ0_fraction * shape.k;
  shape.t_hi = shape.k - germk_fraction * shape.k;

  const double a_lo = std::atanh(shape.t_lo);
  const double a_hi = std::atanh(shape.t_hi);
  const double u_lo = std::atanh(shape.k * shape.germ0(shape.t_lo)) - shape.length;
  const double u_hi = std::atanh(shape.k * shape.germk(shape.t_hi)) - shape.length;

  const int n = std::max(options.interior_knots, 2);
  const double h = (a_hi - a_lo) / (n + 1);
  std::vector<double> xs;
  std::vector<double> us;
  xs.reserve(n + 2);
  us.reserve(n + 2);
  xs.push_back(a_lo);
  us.push_back(u_lo);
  std::mt19937_64 gen(options.seed);
  for (int j = 1; j <= n; ++j) {
    const double w = static_cast<double>(j) / (n + 1);
    double u = (1.0 - w) * u_lo + w * u_hi;
    if (options.seed != 0) {
      u += amplitude * h * symmetric_unit(gen);
    }
    xs.push_back(a_lo + j * h);
    us.push_back(u);
  }
  xs.push_back(a_hi);
  us.push_back(u_hi);
  shape.interior =
      std::make_shared<boost::math::interpolators::pchip<std::vector<double>>>(
          std::move(xs), std::move(us));
  return shape;
}

}  // namespace

std::string_view to_string(SigmaFamily family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "custom";
}

std::optional<SigmaFamily> sigma_family_from_string(std::string_view name) {
  for (const auto& [f, n] : kFamilyNames) {
    if (n == name) return f;
  }
  return std::nullopt;
}

SigmaFunction::SigmaFunction(SigmaFamily family, Modulus k,
                             std::function<double(double)> eval,
                             std::optional<double> d0, std::optional<double> dk)
    : family_(family), k_(k), eval_(std::move(eval)), d0_(d0), dk_(dk) {
  if (!eval_) {
    throw InputError("sigma needs an evaluation function");
  }
}

double SigmaFunction::operator()(double t) const {
  const double k = k_.value();
  if (!std::isfinite(t) || t < -kEndpointSlack || t > k + kEndpointSlack) {
    std::ostringstream os;
    os.precision(17);
    os << "sigma evaluated at t = " << t << " outside [0, " << k << "]";
    throw InputError(os.str());
  }
  return eval_(std::clamp(t, 0.0, k));
}

double upper_bound_near_zero(double t, Modulus k) {
  const double kk = k.value();
  return (kk + t) / (kk * (1.0 + kk * t));
}

double upper_bound_near_k(double t, Modulus k) {
  const double kk = k.value();
  const double k2 = kk * kk;
  return (2.0 * kk - (1.0 + k2) * t) / (kk * (1.0 + k2 - 2.0 * kk * t));
}

SigmaBounds sigma_bounds(double t, Modulus k) {
  const double kk = k.value();
  const double lower = std::max((kk - t) / (kk * (1.0 - kk * t)), t / kk);
  const double upper = std::min(upper_bound_near_zero(t, k), upper_bound_near_k(t, k));
  return {lower, upper};
}

double max_derivative_at_zero(Modulus k) {
  const double kk = k.value();
  return (1.0 - kk * kk) / kk;
}

double max_derivative_at_k(Modulus k) { return 1.0 / k.value(); }

SigmaValidation validate_sigma(const SigmaFunction& sigma, std::size_t samples) {
  SigmaValidation report;
  const Modulus modulus = sigma.modulus();
  const double k = modulus.value();
  const double length = modulus.length();
  samples = std::max<std::size_t>(samples, 2);

  report.endpoints_ok = std::abs(sigma(0.0) - 1.0) <= kEndpointSlack &&
                        std::abs(sigma(k) - 1.0) <= kEndpointSlack;

  if (auto d0 = sigma.d0()) {
    report.derivatives_ok &=
        std::abs(*d0) <= max_derivative_at_zero(modulus) * (1.0 + kDerivativeSnap);
  }
  if (auto dk = sigma.dk()) {
    report.derivatives_ok &=
        std::abs(*dk) <= max_derivative_at_k(modulus) * (1.0 + kDerivativeSnap);
  }

  double worst_excess = -std::numeric_limits<double>::infinity();
  double prev_a = 0.0;
  double prev_y = length;
  const double strict_lo = kStrictWindow * k;
  const double strict_hi = k - kStrictWindow * k;

  for (std::size_t j = 0; j < samples; ++j) {
    const double t = (j + 1 == samples)
                         ? k
                         : k * static_cast<double>(j) / static_cast<double>(samples - 1);
    const double s = sigma(t);
    const SigmaBounds b = sigma_bounds(t, modulus);
    const double excess = std::max(b.lower - s, s - b.upper);
    if (excess > worst_excess) {
      worst_excess = excess;
      report.worst_t = t;
    }
    if (excess > kBoundSlack || !std::isfinite(s)) {
      report.bounds_ok = false;
    }
    if (t > 0.0 && t <= strict_lo && !(upper_bound_near_zero(t, modulus) - s > 0.0)) {
      report.strict_near_zero = false;
    }
    if (t < k && t >= strict_hi && !(upper_bound_near_k(t, modulus) - s > 0.0)) {
      report.strict_near_k = false;
    }

    // Geodesic test: |dy| <= da with y = artanh(k sigma), a = artanh(t).
    const double ks = k * s;
    if (!(std::abs(ks) < 1.0)) {
      report.geodesic = false;
      continue;
    }
    const double y = std::atanh(ks);
    const double a = std::atanh(t);
    if (j > 0) {
      const double da = a - prev_a;
      const double dy = std::abs(y - prev_y);
      if (da > 0.0) {
        report.max_lipschitz_ratio = std::max(report.max_lipschitz_ratio, dy / da);
      }
      if (dy > da * (1.0 + 1e-9) + 1e-14) {
        report.geodesic = false;
      }
    }
    prev_a = a;
    prev_y = y;
  }
  report.max_bound_excess = std::max(worst_excess, 0.0);
  return report;
}

SigmaFunction sigma_constant_one(Modulus k) {
  return SigmaFunction(SigmaFamily::kConstantOne, k, [](double) { return 1.0; }, 0.0,
                       0.0);
}

SigmaFunction sigma_prescribed(double d0, double dk, Modulus k,
                               const GermOptions& options) {
  const double d0_max = max_derivative_at_zero(k);
  const double dk_max = max_derivative_at_k(k);
  d0 = snap_derivative(d0, d0_max, "sigma'(0)");
  dk = snap_derivative(dk, dk_max, "sigma'(k)");
  if (options.germ0_fraction <= 0.0 || options.germk_fraction <= 0.0 ||
      options.germ0_fraction + options.germk_fraction >= 0.9) {
    throw InputError("germ fractions must be positive with sum below 0.9");
  }
  if (!(options.amplitude >= 0.0) || !(options.k_curvature >= 0.0)) {
    throw InputError("interior amplitude and k-germ curvature must be >= 0");
  }

  const bool extremal0 = d0 == d0_max;
  const bool extremalk = dk == -dk_max;

  double f0 = options.germ0_fraction;
  double fk = options.germk_fraction;
  double amplitude = options.amplitude;
  SigmaValidation last;
  for (int attempt = 0; attempt <= options.max_shrinks; ++attempt) {
    const PrescribedShape shape =
        build_shape(d0, dk, extremal0, extremalk, k, options, f0, fk, amplitude);
    SigmaFunction sigma(SigmaFamily::kPrescribedGerm, k, shape, d0, dk);
    last = validate_sigma(sigma, options.validation_samples);
    if (last.distinct() && last.geodesic) {
      return sigma;
    }
    f0 *= 0.5;
    fk *= 0.5;
    amplitude *= 0.5;
  }
  std::ostringstream os;
  os.precision(9);
  os << "no admissible interior blend for sigma'(0) = " << d0 << ", sigma'(k) = " << dk
     << " at k = " << k.value() << " after " << options.max_shrinks
     << " germ shrinks (worst t = " << last.worst_t
     << "); retry with smaller germ fractions";
  throw ConstructionError(os.str());
}

SigmaFunction sigma_oscillatory(Modulus k) {
  const double kk = k.value();
  const double c = (1.0 - kk * kk) / (2.0 * kk);
  const double edge = kk / 4.0;
  auto eval = [c, edge](double t) {
    if (t <= 0.0) return 1.0;
    // Smoothstep cutoff: 1 on [0, edge], 0 beyond 2 edge.
    const double x = std::clamp((t - edge) / edge, 0.0, 1.0);
    const double w = 1.0 - x * x * (3.0 - 2.0 * x);
    const double s = std::sin(1.0 / t);
    return 1.0 + c * t * s * s * w;
  };
  return SigmaFunction(SigmaFamily::kOscillatory, k, eval);
}

double midpoint_param(Modulus k) {
  const double kk = k.value();
  return kk / (1.0 + std::sqrt(1.0 - kk * kk));
}

double midpoint_sigma_value(Modulus k) {
  const double kk = k.value();
  const double root = std::sqrt(1.0 - kk * kk);
  return (2.0 + root) / (1.0 + kk * kk + root);
}

SigmaFunction sigma_midpoint_pinned(Modulus k) {
  // The pin lies on both upper bounds at the hyperbolic midpoint, so the only
  // 1-Lipschitz profile through it is the tent formed by the upper bounds.
  auto eval = [k](double t) {
    return std::min(upper_bound_near_zero(t, k), upper_bound_near_k(t, k));
  };
  return SigmaFunction(SigmaFamily::kMidpointPinned, k, eval, max_derivative_at_zero(k),
                       -max_derivative_at_k(k));
}

}  // namespace teichlab
