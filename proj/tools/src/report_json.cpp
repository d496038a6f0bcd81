#include "report_json.hpp"

#include <cmath>

#include "teichlab/cli.hpp"

namespace teichlab::cli {

Json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round_sig9(x);
}

Json point_json(BlockPoint p) { return Json::array({number(p.c1), number(p.c2)}); }

Json angle_json(const AngleResult& result, bool with_diagnostics) {
  Json j;
  j["verdict"] = std::string(to_string(result.verdict));
  j["theta"] = number(result.theta);
  j["limit_value"] = number(result.limit_value);
  j["raw_limit"] = number(result.raw_limit);
  j["clamp_flag"] = result.clamp_flag;
  j["oscillation_band"] =
      Json::array({number(result.oscillation_band.first), number(result.oscillation_band.second)});
  if (with_diagnostics) {
    Json rows = Json::array();
    for (const auto& s : result.diagnostics) {
      rows.push_back(Json{{"r", number(s.r)}, {"ratio", number(s.ratio)}});
    }
    j["diagnostics"] = std::move(rows);
  }
  return j;
}

Json sigma_json(const SigmaFunction& sigma) {
  Json j;
  j["family"] = std::string(to_string(sigma.family()));
  j["d0"] = sigma.d0() ? number(*sigma.d0()) : Json(nullptr);
  j["dk"] = sigma.dk() ? number(*sigma.dk()) : Json(nullptr);
  return j;
}

Json validation_json(const SigmaValidation& v) {
  Json j;
  j["endpoints_ok"] = v.endpoints_ok;
  j["bounds_ok"] = v.bounds_ok;
  j["strict_near_zero"] = v.strict_near_zero;
  j["strict_near_k"] = v.strict_near_k;
  j["derivatives_ok"] = v.derivatives_ok;
  j["geodesic"] = v.geodesic;
  j["admissible"] = v.admissible();
  j["distinct"] = v.distinct();
  j["worst_t"] = number(v.worst_t);
  j["max_bound_excess"] = number(v.max_bound_excess);
  j["max_lipschitz_ratio"] = number(v.max_lipschitz_ratio);
  return j;
}

Json segment_json(const GeodesicSegment& s) {
  Json j;
  j["kind"] = std::string(to_string(s.kind()));
  j["start"] = point_json(s.start());
  j["end"] = point_json(s.end());
  j["length"] = number(s.total_length());
  j["geodesic"] = s.is_geodesic();
  return j;
}

Json triangle_json(const TriangleReport& report) {
  Json j;
  j["k"] = number(report.k.value());
  j["sigma"] = sigma_json(report.sigma);
  j["sigma_tilde"] = sigma_json(report.sigma_tilde);
  Json vertices = Json::array();
  for (const auto& v : report.vertices) vertices.push_back(point_json(v));
  j["vertices"] = std::move(vertices);
  Json sides = Json::array();
  for (const auto& s : report.sides) sides.push_back(segment_json(s));
  j["sides"] = std::move(sides);
  Json lengths = Json::array();
  Json target = Json::array();
  Json predicted = Json::array();
  Json measured = Json::array();
  Json angle_ok = Json::array();
  Json boundary = Json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    lengths.push_back(number(report.side_lengths[i]));
    target.push_back(number(report.target[i]));
    predicted.push_back(number(report.predicted[i]));
    measured.push_back(angle_json(report.measured[i], false));
    angle_ok.push_back(report.angle_ok[i]);
    boundary.push_back(report.boundary[i]);
  }
  j["side_lengths"] = std::move(lengths);
  j["target"] = std::move(target);
  j["predicted"] = std::move(predicted);
  j["measured"] = std::move(measured);
  j["angle_ok"] = std::move(angle_ok);
  j["boundary"] = std::move(boundary);
  j["sides_ok"] = report.sides_ok;
  j["endpoints_ok"] = report.endpoints_ok;
  j["distinct_ok"] = report.distinct_ok;
  j["angle_sum"] = number(report.angle_sum);
  j["predicted_sum"] = number(report.predicted_sum);
  j["ok"] = report.ok();
  return j;
}

Json probe_json(const ProbeReport& r) {
  Json j;
  j["k"] = number(r.k.value());
  j["l"] = number(r.k.length());
  j["t0"] = number(r.t0);
  j["sigma_t0"] = number(r.sigma_t0);
  j["beta_midpoint"] = point_json(r.beta_midpoint);
  j["alpha_midpoint"] = point_json(r.alpha_midpoint);
  j["beta_midpoint_arclength"] = number(r.beta_midpoint_arclength);
  j["alpha_midpoint_arclength"] = number(r.alpha_midpoint_arclength);
  j["half_length"] = number(r.half_length);
  j["midpoint_distance"] = number(r.midpoint_distance);
  j["base"] = number(r.base);
  j["ratio"] = number(r.ratio);
  j["negative_curvature_violated"] = r.negative_curvature_violated;
  return j;
}

}  // namespace teichlab::cli
