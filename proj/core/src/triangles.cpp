#include "teichlab/triangles.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "teichlab/errors.hpp"

namespace teichlab {
namespace {

constexpr double kShareTolerance = 1e-12;

void require_spec(const TriangleSpec& spec) {
  if (!std::isfinite(spec.side_length) || spec.side_length <= 0.0) {
    throw InputError("triangle side length must be positive and finite");
  }
  for (double theta : spec.theta) {
    if (!std::isfinite(theta) || theta < 0.0 || theta > std::numbers::pi + 1e-12) {
      std::ostringstream os;
      os.precision(17);
      os << "target angle " << theta << " outside [0, pi]";
      throw InputError(os.str());
    }
  }
  if (!(spec.terminal_fraction > 0.0 && spec.terminal_fraction < 0.5)) {
    throw InputError("terminal fraction must lie in (0, 0.5)");
  }
}

bool near(BlockPoint a, BlockPoint b) {
  return std::abs(a.c1 - b.c1) <= kShareTolerance && std::abs(a.c2 - b.c2) <= kShareTolerance;
}

int shared_endpoints(const GeodesicSegment& a, const GeodesicSegment& b) {
  int n = 0;
  for (BlockPoint p : {a.start(), a.end()}) {
    for (BlockPoint q : {b.start(), b.end()}) {
      n += near(p, q) ? 1 : 0;
    }
  }
  return n;
}

// Two sides leaving a common vertex differ at every probed radius.
bool separated_near(const GeodesicSegment& a, const GeodesicSegment& b, BlockPoint vertex) {
  const auto ea = a.end_at(vertex);
  const auto eb = b.end_at(vertex);
  if (!ea || !eb) return false;
  const Modulus k = a.modulus();
  double r = std::min(a.total_length(), b.total_length()) / 2.0;
  for (int j = 0; j < 16; ++j, r /= 2.0) {
    if (!(distance(a.point_at_arclength(*ea, r), b.point_at_arclength(*eb, r), k) > 0.0)) {
      return false;
    }
  }
  return true;
}

}  // namespace

TriangleReport synthesize(const TriangleSpec& spec, const TriangleOptions& options) {
  require_spec(spec);
  const Modulus k = modulus_from_length(spec.side_length);
  const double l = k.length();

  const double d0 = derivative_at_zero_for_angle(spec.theta[kVertexMu], k);
  const double dk = derivative_at_k_for_angle(spec.theta[kVertexMu1], k);
  const double d0_tilde = derivative_at_zero_for_angle(spec.theta[kVertexBase], k);

  GermOptions beta_options;
  beta_options.seed = spec.family_seed;
  SigmaFunction sigma = sigma_prescribed(d0, dk, k, beta_options);

  GermOptions gamma_options;
  double dk_tilde = 0.0;
  if (spec.terminal == TerminalMode::kMatchSlope) {
    dk_tilde = dk;
    // sigma = t / k near k would make gamma~ coincide with beta there.
    if (dk >= max_derivative_at_k(k) * (1.0 - 1e-12)) {
      gamma_options.k_curvature = 1.0;
    }
  } else {
    gamma_options.germk_fraction = spec.terminal_fraction;
  }
  SigmaFunction sigma_tilde = sigma_prescribed(d0_tilde, dk_tilde, k, gamma_options);

  TriangleReport report{
      .k = k,
      .sigma = sigma,
      .sigma_tilde = sigma_tilde,
      .sides = {standard_segment(kBasePoint, kMuPoint, k), sigma_segment(sigma),
                pulled_back_segment(sigma_tilde)},
      .vertices = {kBasePoint, kMuPoint, kMu1Point},
  };
  report.target = spec.theta;

  report.sides_ok = true;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& side = report.sides[i];
    report.side_lengths[i] = distance(side.start(), side.end(), k);
    report.sides_ok &= std::abs(report.side_lengths[i] - l) <= options.side_tolerance &&
                       std::abs(side.total_length() - l) <= options.side_tolerance &&
                       side.is_geodesic();
  }

  const auto& alpha = report.sides[kSideAlphaMu];
  const auto& beta = report.sides[kSideBeta];
  const auto& gamma = report.sides[kSideGamma];

  report.endpoints_ok = shared_endpoints(alpha, beta) == 1 &&
                        shared_endpoints(beta, gamma) == 1 &&
                        shared_endpoints(alpha, gamma) == 1;
  report.distinct_ok = separated_near(alpha, gamma, kBasePoint) &&
                       separated_near(alpha, beta, kMuPoint) &&
                       separated_near(beta, gamma, kMu1Point);

  report.predicted[kVertexBase] = angle_at_mu_closed(sigma_tilde);
  report.predicted[kVertexMu] = angle_at_mu_closed(sigma);
  report.predicted[kVertexMu1] = angle_at_mu1_between(sigma, sigma_tilde);

  report.measured[kVertexBase] =
      angle_numeric(alpha, gamma, kBasePoint, options.schedule, options.tolerances);
  report.measured[kVertexMu] =
      angle_numeric(alpha, beta, kMuPoint, options.schedule, options.tolerances);
  report.measured[kVertexMu1] =
      angle_numeric(beta, gamma, kMu1Point, options.schedule, options.tolerances);

  for (std::size_t v = 0; v < 3; ++v) {
    const AngleResult& m = report.measured[v];
    report.boundary[v] = spec.theta[v] == 0.0 || spec.theta[v] >= std::numbers::pi - 1e-12;
    report.angle_ok[v] = m.verdict == Verdict::kExists &&
                         std::abs(m.theta - spec.theta[v]) <= options.angle_tolerance;
    report.angle_sum += m.theta;
    report.predicted_sum += report.predicted[v];
  }
  return report;
}

std::vector<TriangleReport> synthesize_family(const TriangleSpec& spec, int n,
                                              const TriangleOptions& options) {
  if (n < 1) {
    throw InputError("family size must be positive");
  }
  std::vector<TriangleReport> family;
  family.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    TriangleSpec member = spec;
    member.family_seed = spec.family_seed + static_cast<std::uint64_t>(i);
    family.push_back(synthesize(member, options));
  }
  return family;
}

ProbeReport curvature_probe(Modulus k) {
  const GeodesicSegment beta = sigma_segment(sigma_midpoint_pinned(k));
  const GeodesicSegment alpha = standard_segment(kBasePoint, kMuPoint, k);

  ProbeReport report{.k = k};
  report.t0 = midpoint_param(k);
  report.sigma_t0 = midpoint_sigma_value(k);
  report.half_length = k.length() / 2.0;
  report.beta_midpoint = beta.point_at(report.t0);
  report.alpha_midpoint = alpha.point_at_arclength(End::kEnd, std::atanh(report.t0));
  report.beta_midpoint_arclength = distance(kMuPoint, report.beta_midpoint, k);
  report.alpha_midpoint_arclength = distance(kMuPoint, report.alpha_midpoint, k);
  report.midpoint_distance = distance(report.beta_midpoint, report.alpha_midpoint, k);
  report.base = distance(kMu1Point, kBasePoint, k);
  report.ratio = report.base / report.midpoint_distance;
  report.negative_curvature_violated = !(report.base > 2.0 * report.midpoint_distance);
  return report;
}

}  // namespace teichlab
