#include "descriptors.hpp"

#include <charconv>
#include <cmath>
#include <string>

namespace teichlab::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Splits off the text before the first ':'; `rest` keeps the remainder.
std::string_view head(std::string_view text, std::string_view& rest) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    rest = {};
    return text;
  }
  rest = text.substr(colon + 1);
  return text.substr(0, colon);
}

}  // namespace

double parse_double(std::string_view text, std::string_view what) {
  const std::string_view s = trim(text);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || end != s.data() + s.size() || !std::isfinite(value)) {
    throw InputError(std::string(what) + ": cannot parse '" + std::string(text) +
                     "' as a finite number");
  }
  return value;
}

std::vector<double> parse_doubles(std::string_view text, std::string_view what) {
  std::vector<double> values;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    values.push_back(parse_double(text.substr(start, comma - start), what));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

BlockPoint parse_point(std::string_view text, std::string_view what) {
  const std::string_view s = trim(text);
  if (s == "base") return kBasePoint;
  if (s == "mu") return kMuPoint;
  if (s == "mu1") return kMu1Point;
  const auto xs = parse_doubles(s, what);
  if (xs.size() != 2) {
    throw InputError(std::string(what) + ": expected c1,c2 or base|mu|mu1, got '" +
                     std::string(text) + "'");
  }
  return {xs[0], xs[1]};
}

SigmaFunction parse_sigma(std::string_view text, Modulus k, std::uint64_t seed) {
  std::string_view args;
  const std::string_view name = head(trim(text), args);
  const auto family = sigma_family_from_string(name);
  if (!family || *family == SigmaFamily::kCustom) {
    throw InputError("unknown sigma family '" + std::string(name) +
                     "' (constant-one, prescribed-germ, oscillatory, midpoint-pinned)");
  }
  if (*family == SigmaFamily::kPrescribedGerm) {
    const auto d = parse_doubles(args, "prescribed-germ derivatives");
    if (d.size() != 2) {
      throw InputError("prescribed-germ needs sigma'(0),sigma'(k)");
    }
    GermOptions options;
    options.seed = seed;
    return sigma_prescribed(d[0], d[1], k, options);
  }
  if (!args.empty()) {
    throw InputError("sigma family '" + std::string(name) + "' takes no arguments");
  }
  switch (*family) {
    case SigmaFamily::kConstantOne:
      return sigma_constant_one(k);
    case SigmaFamily::kOscillatory:
      return sigma_oscillatory(k);
    default:
      return sigma_midpoint_pinned(k);
  }
}

GeodesicSegment parse_segment(std::string_view text, Modulus k, std::uint64_t seed) {
  std::string_view rest;
  const std::string_view kind = head(trim(text), rest);
  if (kind == "alpha-mu" && rest.empty()) return standard_segment(kBasePoint, kMuPoint, k);
  if (kind == "alpha-mu1" && rest.empty()) return standard_segment(kBasePoint, kMu1Point, k);
  if (kind == "standard") {
    std::string_view q;
    const std::string_view p = head(rest, q);
    if (p.empty() || q.empty()) {
      throw InputError("standard segment needs standard:c1,c2:c1,c2");
    }
    return standard_segment(parse_point(p, "segment start"), parse_point(q, "segment end"), k);
  }
  if (kind == "sigma") return sigma_segment(parse_sigma(rest, k, seed));
  if (kind == "pulled") return pulled_back_segment(parse_sigma(rest, k, seed));
  if (kind == "chart" && !rest.empty()) return chart_image(parse_segment(rest, k, seed));
  throw InputError("unknown segment descriptor '" + std::string(text) +
                   "' (alpha-mu, alpha-mu1, standard:P:Q, sigma:S, pulled:S, chart:SEG)");
}

}  // namespace teichlab::cli
