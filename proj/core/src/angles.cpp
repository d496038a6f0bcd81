#include "teichlab/angles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "teichlab/errors.hpp"

namespace teichlab {
namespace {

constexpr double kClampFlagThreshold = 1e-9;
// Chord ratios carry rounding noise of order eps / r from the coordinates.
constexpr double kRoundingFloorFactor = 16.0;

void require_schedule(const Schedule& s, const Tolerances& tol) {
  if (!(s.r0 > 0.0) || !std::isfinite(s.r0)) {
    throw InputError("schedule r0 must be positive");
  }
  if (!(s.ratio > 0.0 && s.ratio < 1.0)) {
    throw InputError("schedule ratio must lie in (0, 1)");
  }
  if (tol.window < 2) {
    throw InputError("tolerance window must be at least 2");
  }
  if (s.steps < tol.window) {
    throw InputError("schedule needs at least `window` steps");
  }
  if (!(tol.conv > 0.0) || !(tol.osc > tol.conv)) {
    throw InputError("tolerances must satisfy 0 < conv < osc");
  }
}

std::pair<double, double> band(const std::vector<AngleSample>& xs, std::size_t first,
                               std::size_t last) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = first; i < last; ++i) {
    lo = std::min(lo, xs[i].ratio);
    hi = std::max(hi, xs[i].ratio);
  }
  return {lo, hi};
}

// Shared convergence / oscillation classification over a decreasing-r series.
Verdict classify(const std::vector<AngleSample>& xs, const Tolerances& tol,
                 std::pair<double, double>& trailing) {
  const std::size_t n = xs.size();
  const std::size_t w = static_cast<std::size_t>(tol.window);
  for (const auto& x : xs) {
    if (!std::isfinite(x.ratio)) return Verdict::kInconclusive;
  }
  trailing = band(xs, n - w, n);
  const double spread = trailing.second - trailing.first;
  if (spread <= tol.conv) {
    return Verdict::kExists;
  }
  if (n >= 2 * w) {
    const auto previous = band(xs, n - 2 * w, n - w);
    if (spread >= tol.osc && previous.second - previous.first >= tol.osc) {
      return Verdict::kDoesNotExist;
    }
  }
  return Verdict::kInconclusive;
}

double half_chord_from_angle(double theta) {
  if (!std::isfinite(theta) || theta < -1e-12 || theta > std::numbers::pi + 1e-12) {
    std::ostringstream os;
    os.precision(17);
    os << "angle " << theta << " outside [0, pi]";
    throw InputError(os.str());
  }
  return 2.0 * std::sin(std::clamp(theta, 0.0, std::numbers::pi) / 2.0);
}

}  // namespace

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kExists:
      return "exists";
    case Verdict::kDoesNotExist:
      return "does-not-exist";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

double theta_from_chord_ratio(double q) {
  return 2.0 * std::asin(std::clamp(q / 2.0, 0.0, 1.0));
}

AngleResult angle_numeric(const GeodesicSegment& a, const GeodesicSegment& b,
                          BlockPoint vertex, const Schedule& schedule,
                          const Tolerances& tolerances) {
  require_schedule(schedule, tolerances);
  const auto end_a = a.end_at(vertex);
  const auto end_b = b.end_at(vertex);
  if (!end_a || !end_b) {
    std::ostringstream os;
    os.precision(17);
    os << "vertex (" << vertex.c1 << ", " << vertex.c2
       << ") is not an endpoint of both segments";
    throw InputError(os.str());
  }
  if (!(schedule.r0 < a.total_length() && schedule.r0 < b.total_length())) {
    throw InputError("schedule r0 must be shorter than both segments");
  }
  if (!(a.modulus() == b.modulus())) {
    throw InputError("segments use different moduli");
  }
  const Modulus k = a.modulus();

  AngleResult result;
  result.diagnostics.reserve(static_cast<std::size_t>(schedule.steps));
  double r = schedule.r0;
  for (int j = 0; j < schedule.steps; ++j) {
    const BlockPoint x = a.point_at_arclength(*end_a, r);
    const BlockPoint y = b.point_at_arclength(*end_b, r);
    result.diagnostics.push_back({r, distance(x, y, k) / r});
    r *= schedule.ratio;
  }

  result.verdict = classify(result.diagnostics, tolerances, result.oscillation_band);
  result.raw_limit = result.diagnostics.back().ratio;
  if (result.verdict == Verdict::kExists) {
    const double clamped = std::clamp(result.raw_limit, 0.0, 2.0);
    const double floor = kRoundingFloorFactor * std::numeric_limits<double>::epsilon() /
                         result.diagnostics.back().r;
    result.clamp_flag =
        std::abs(clamped - result.raw_limit) > std::max(kClampFlagThreshold, floor);
    result.limit_value = clamped;
    result.theta = theta_from_chord_ratio(clamped);
  } else {
    result.limit_value = std::numeric_limits<double>::quiet_NaN();
    result.theta = std::numeric_limits<double>::quiet_NaN();
  }
  return result;
}

double angle_at_mu_closed(const SigmaFunction& sigma) {
  const auto d0 = sigma.d0();
  if (!d0) {
    throw ExistenceUnknownError(
        "sigma declares no derivative at 0; measure the angle numerically");
  }
  const double k = sigma.modulus().value();
  return theta_from_chord_ratio(1.0 + k * *d0 / (1.0 - k * k));
}

double angle_at_mu1_closed(const SigmaFunction& sigma) {
  const auto dk = sigma.dk();
  if (!dk) {
    throw ExistenceUnknownError(
        "sigma declares no derivative at k; measure the angle numerically");
  }
  const double k = sigma.modulus().value();
  return theta_from_chord_ratio(1.0 - k * *dk);
}

double angle_at_mu1_model(const SigmaFunction& sigma) {
  const auto dk = sigma.dk();
  if (!dk) {
    throw ExistenceUnknownError("sigma declares no derivative at k");
  }
  const double k = sigma.modulus().value();
  return theta_from_chord_ratio(std::max(1.0, std::abs(1.0 - k * *dk)));
}

double angle_at_mu1_between(const SigmaFunction& sigma, const SigmaFunction& sigma_tilde) {
  const auto dk = sigma.dk();
  const auto dk_tilde = sigma_tilde.dk();
  if (!dk || !dk_tilde) {
    throw ExistenceUnknownError("both sigma functions must declare sigma'(k)");
  }
  const double k = sigma.modulus().value();
  return theta_from_chord_ratio(
      std::max(std::abs(1.0 - k * *dk), std::abs(1.0 - k * *dk_tilde)));
}

double angle_base_standard(TangentBlock v, TangentBlock w, Modulus k) {
  const double mv = h_functional(v, k) / k.value();
  const double mw = h_functional(w, k) / k.value();
  if (!(mv > 0.0) || !(mw > 0.0)) {
    throw InputError("base-point angle needs non-zero directions");
  }
  const double q = std::max(std::abs(v.v1 / mv - w.v1 / mw), std::abs(v.v2 / mv - w.v2 / mw));
  return theta_from_chord_ratio(q);
}

double derivative_at_zero_for_angle(double theta, Modulus k) {
  const double kk = k.value();
  return (1.0 - kk * kk) / kk * (half_chord_from_angle(theta) - 1.0);
}

double derivative_at_k_for_angle(double theta, Modulus k) {
  return (1.0 - half_chord_from_angle(theta)) / k.value();
}

DerivativeProbe derivative_probe(const SigmaFunction& sigma, SigmaEnd end,
                                 const Schedule& schedule, const Tolerances& tolerances) {
  require_schedule(schedule, tolerances);
  const double k = sigma.modulus().value();
  double h = k * schedule.r0;
  if (!(h < k)) {
    throw InputError("derivative probe offsets must lie inside [0, k]");
  }
  DerivativeProbe probe;
  const double s0 = sigma(0.0);
  const double sk = sigma(k);
  for (int j = 0; j < schedule.steps; ++j) {
    const double q = end == SigmaEnd::kZero ? (sigma(h) - s0) / h : (sk - sigma(k - h)) / h;
    probe.quotients.push_back({h, q});
    h *= schedule.ratio;
  }
  probe.verdict = classify(probe.quotients, tolerances, probe.oscillation_band);
  probe.estimate = probe.quotients.back().ratio;
  return probe;
}

}  // namespace teichlab
