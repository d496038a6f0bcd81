#include "teichlab/geodesics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "teichlab/errors.hpp"

namespace teichlab {
namespace {

constexpr double kArclengthSlack = 1e-12;

void require_admissible(const SigmaValidation& report, const char* what) {
  if (!report.admissible()) {
    std::ostringstream os;
    os.precision(9);
    os << what << ": sigma violates the admissibility bounds near t = " << report.worst_t
       << " (excess " << report.max_bound_excess << ")";
    throw InvalidSigmaError(os.str(), report.worst_t);
  }
}

}  // namespace

std::string_view to_string(SegmentKind kind) {
  switch (kind) {
    case SegmentKind::kStandard:
      return "standard";
    case SegmentKind::kSigma:
      return "sigma";
    case SegmentKind::kPulledBack:
      return "pulled-back";
    case SegmentKind::kMapped:
      return "mapped";
  }
  return "mapped";
}

GeodesicSegment::GeodesicSegment(SegmentKind kind, Modulus k, double param_end,
                                 PointMap at_param, bool geodesic)
    : kind_(kind),
      k_(k),
      param_end_(param_end),
      at_param_(std::make_shared<const PointMap>(std::move(at_param))),
      geodesic_(geodesic) {
  if (!(param_end > 0.0 && param_end < 1.0)) {
    throw InputError("segment parameter range must be (0, 1)");
  }
}

double GeodesicSegment::total_length() const noexcept { return std::atanh(param_end_); }

BlockPoint GeodesicSegment::start() const { return point_at(0.0); }

BlockPoint GeodesicSegment::end() const { return point_at(param_end_); }

BlockPoint GeodesicSegment::endpoint(End which) const {
  return which == End::kStart ? start() : end();
}

BlockPoint GeodesicSegment::point_at(double t) const {
  if (!(t >= 0.0 && t <= param_end_)) {
    std::ostringstream os;
    os.precision(17);
    os << "segment parameter t = " << t << " outside [0, " << param_end_ << "]";
    throw InputError(os.str());
  }
  return (*at_param_)(t);
}

double GeodesicSegment::param_at_arclength(End from, double r) const {
  const double total = total_length();
  if (!(r >= 0.0) || r > total + kArclengthSlack) {
    std::ostringstream os;
    os.precision(17);
    os << "arclength r = " << r << " outside [0, " << total << "]";
    throw InputError(os.str());
  }
  const double tau = std::tanh(std::min(r, total));
  if (from == End::kStart) {
    return std::min(tau, param_end_);
  }
  // Moebius shift keeps full relative accuracy near the far endpoint.
  const double p = param_end_;
  return std::clamp((p - tau) / (1.0 - p * tau), 0.0, p);
}

BlockPoint GeodesicSegment::point_at_arclength(End from, double r) const {
  return point_at(param_at_arclength(from, r));
}

double GeodesicSegment::arclength_at_param(End from, double t) const {
  if (!(t >= 0.0 && t <= param_end_)) {
    throw InputError("segment parameter outside its range");
  }
  if (from == End::kStart) {
    return std::atanh(t);
  }
  return std::atanh((param_end_ - t) / (1.0 - param_end_ * t));
}

std::optional<End> GeodesicSegment::end_at(BlockPoint vertex, double tol) const {
  auto close = [&](BlockPoint p) {
    return std::abs(p.c1 - vertex.c1) <= tol && std::abs(p.c2 - vertex.c2) <= tol;
  };
  if (close(start())) return End::kStart;
  if (close(end())) return End::kEnd;
  return std::nullopt;
}

GeodesicSegment GeodesicSegment::mapped(
    std::function<BlockPoint(BlockPoint)> isometry) const {
  auto inner = at_param_;
  return GeodesicSegment(
      SegmentKind::kMapped, k_, param_end_,
      [inner, isometry = std::move(isometry)](double t) { return isometry((*inner)(t)); },
      geodesic_);
}

GeodesicSegment standard_segment(BlockPoint p, BlockPoint q, Modulus k) {
  require_valid(p, k, "p");
  require_valid(q, k, "q");
  if (p == q) {
    throw DegenerateSegmentError("standard segment needs distinct endpoints");
  }
  const double kk = k.value();
  const double a1 = kk * p.c1;
  const double a2 = kk * p.c2;
  // Signed Moebius displacement per block; delta is the sup over blocks.
  const double m1 = mobius_diff(kk * q.c1, a1);
  const double m2 = mobius_diff(kk * q.c2, a2);
  const double delta = std::max(std::abs(m1), std::abs(m2));
  if (!(delta > 0.0)) {
    throw DegenerateSegmentError("standard segment endpoints are numerically equal");
  }
  auto block = [delta](double a, double m, double t) {
    const double s = t * (m / delta);
    return (a + s) / (1.0 + a * s);
  };
  return GeodesicSegment(SegmentKind::kStandard, k, delta,
                         [=](double t) {
                           return BlockPoint{block(a1, m1, t) / kk, block(a2, m2, t) / kk};
                         });
}

GeodesicSegment sigma_segment(const SigmaFunction& sigma) {
  const SigmaValidation report = validate_sigma(sigma);
  require_admissible(report, "sigma segment");
  const Modulus k = sigma.modulus();
  const double kk = k.value();
  return GeodesicSegment(
      SegmentKind::kSigma, k, kk,
      [sigma, kk](double t) {
        return BlockPoint{sigma(t), (kk - t) / (kk * (1.0 - kk * t))};
      },
      report.geodesic);
}

GeodesicSegment pulled_back_segment(const SigmaFunction& sigma) {
  const SigmaValidation report = validate_sigma(sigma);
  require_admissible(report, "pulled-back segment");
  const Modulus k = sigma.modulus();
  const double kk = k.value();
  const double k2 = kk * kk;
  return GeodesicSegment(
      SegmentKind::kPulledBack, k, kk,
      [sigma, kk, k2](double t) {
        const double s = sigma(t);
        return BlockPoint{t / kk, (1.0 - s) / (1.0 - k2 * s)};
      },
      report.geodesic);
}

GeodesicSegment chart_image(const GeodesicSegment& segment) {
  const Modulus k = segment.modulus();
  return segment.mapped([k](BlockPoint p) { return allowable_chart(p, k); });
}

double max_aligned_gap(const GeodesicSegment& a, const GeodesicSegment& b, int samples) {
  const Modulus k = a.modulus();
  const double span = std::min(a.total_length(), b.total_length());
  double gap = 0.0;
  for (int j = 1; j < samples; ++j) {
    const double r = span * j / samples;
    gap = std::max(gap, distance(a.point_at_arclength(End::kStart, r),
                                 b.point_at_arclength(End::kStart, r), k));
  }
  return gap;
}

}  // namespace teichlab
