#include "teichlab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>
#include <memory>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "descriptors.hpp"
#include "report_json.hpp"

namespace teichlab::cli {
namespace {

using Settings = nlohmann::json;

// Every key a config file may carry; flags use the same names with '-' for '_'.
const std::vector<std::string> kKnownKeys = {
    "command", "k",        "l",         "format",  "out",     "schedule", "tol",
    "seed",    "degrees",  "p",         "q",       "a",       "b",        "vertex",
    "diagnostics_csv",     "theta",     "family",  "terminal", "at",      "theta_grid",
    "k_grid",  "sigma",    "samples"};

struct Output {
  std::string text;
};

std::string joined(const Settings& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value.get<double>());
    return buf;
  }
  if (value.is_array()) {
    std::string s;
    for (const auto& x : value) {
      if (!s.empty()) s += ',';
      s += joined(x);
    }
    return s;
  }
  throw InputError("config value " + value.dump() + " must be a string, number or array");
}

std::optional<std::string> text(const Settings& s, const std::string& key) {
  if (!s.contains(key) || s[key].is_null()) return std::nullopt;
  const Settings& v = s[key];
  if (key == "schedule" && v.is_object()) {
    return joined(Settings::array({v.value("r0", 1e-2), v.value("ratio", 0.5),
                                   v.value("steps", 20)}));
  }
  if (key == "tol" && v.is_object()) {
    return joined(Settings::array(
        {v.value("conv", 1e-5), v.value("osc", 1e-2), v.value("window", 5)}));
  }
  return joined(v);
}

std::string required(const Settings& s, const std::string& key) {
  auto v = text(s, key);
  if (!v) throw InputError("missing required option --" + key);
  return *v;
}

bool flag(const Settings& s, const std::string& key) {
  if (!s.contains(key)) return false;
  const Settings& v = s[key];
  if (v.is_boolean()) return v.get<bool>();
  throw InputError(key + " must be true or false");
}

int parse_int(const std::string& text, const std::string& what, int lo, int hi) {
  const double x = parse_double(text, what);
  if (x != std::floor(x) || x < lo || x > hi) {
    throw InputError(what + " must be an integer in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
  }
  return static_cast<int>(x);
}

std::uint64_t seed_of(const Settings& s) {
  const auto v = text(s, "seed");
  if (!v) return 0;
  std::uint64_t seed = 0;
  const auto [end, ec] = std::from_chars(v->data(), v->data() + v->size(), seed);
  if (ec != std::errc{} || end != v->data() + v->size()) {
    throw InputError("seed must be a non-negative integer, got '" + *v + "'");
  }
  return seed;
}

std::optional<Modulus> modulus_of(const Settings& s) {
  const auto k = text(s, "k");
  const auto l = text(s, "l");
  if (k && l) throw InputError("give exactly one of --k and --l");
  if (k) return Modulus(parse_double(*k, "k"));
  if (l) return modulus_from_length(parse_double(*l, "l"));
  return std::nullopt;
}

Modulus require_modulus(const Settings& s) {
  auto k = modulus_of(s);
  if (!k) throw InputError("give exactly one of --k and --l");
  return *k;
}

double angle_input(double x, bool degrees) {
  return degrees ? x * std::numbers::pi / 180.0 : x;
}

Schedule schedule_of(const Settings& s) {
  Schedule schedule;
  if (auto v = text(s, "schedule")) {
    const auto xs = parse_doubles(*v, "schedule");
    if (xs.size() != 3) throw InputError("schedule must be r0,ratio,steps");
    schedule.r0 = xs[0];
    schedule.ratio = xs[1];
    if (xs[2] != std::floor(xs[2]) || xs[2] < 2 || xs[2] > 200) {
      throw InputError("schedule steps must be an integer in [2, 200]");
    }
    schedule.steps = static_cast<int>(xs[2]);
  }
  return schedule;
}

Tolerances tolerances_of(const Settings& s) {
  Tolerances tol;
  if (auto v = text(s, "tol")) {
    const auto xs = parse_doubles(*v, "tol");
    if (xs.size() != 2 && xs.size() != 3) throw InputError("tol must be conv,osc[,window]");
    tol.conv = xs[0];
    tol.osc = xs[1];
    if (xs.size() == 3) {
      if (xs[2] != std::floor(xs[2]) || xs[2] < 2 || xs[2] > 100) {
        throw InputError("tol window must be an integer in [2, 100]");
      }
      tol.window = static_cast<int>(xs[2]);
    }
  }
  return tol;
}

TriangleOptions triangle_options_of(const Settings& s) {
  TriangleOptions options;
  options.schedule = schedule_of(s);
  options.tolerances = tolerances_of(s);
  return options;
}

std::string csv_line(std::initializer_list<std::string> cells) {
  std::string line;
  for (const auto& c : cells) {
    if (!line.empty()) line += ',';
    line += c;
  }
  return line + '\n';
}

Json header(const std::string& command, std::optional<Modulus> k) {
  Json j;
  j["command"] = command;
  if (k) {
    j["k"] = number(k->value());
    j["l"] = number(k->length());
  }
  return j;
}

std::string pretty(const Json& j) { return j.dump(2) + "\n"; }

bool csv_requested(const Settings& s) {
  const std::string format = text(s, "format").value_or("json");
  if (format != "json" && format != "csv") {
    throw InputError("format must be json or csv");
  }
  return format == "csv";
}

void reject_csv(const Settings& s, const std::string& command) {
  if (csv_requested(s)) {
    throw InputError(command + " has no diagnostic series; csv is available for angle and sweep");
  }
}

Output cmd_distance(const Settings& s) {
  reject_csv(s, "distance");
  const Modulus k = require_modulus(s);
  const BlockPoint p = parse_point(required(s, "p"), "p");
  const BlockPoint q = parse_point(required(s, "q"), "q");
  Json j = header("distance", k);
  j["p"] = point_json(p);
  j["q"] = point_json(q);
  j["tau"] = number(distance(p, q, k));
  return {pretty(j)};
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  f << body;
  if (!f) throw Error("io_error", "cannot write " + path);
}

std::string diagnostics_csv(const AngleResult& result) {
  std::string csv = csv_line({"r", "ratio"});
  for (const auto& x : result.diagnostics) {
    csv += csv_line({format_sig9(x.r), format_sig9(x.ratio)});
  }
  return csv;
}

Output cmd_angle(const Settings& s) {
  const Modulus k = require_modulus(s);
  const std::uint64_t seed = seed_of(s);
  const std::string a_text = required(s, "a");
  const std::string b_text = required(s, "b");
  const BlockPoint vertex = parse_point(required(s, "vertex"), "vertex");
  const GeodesicSegment a = parse_segment(a_text, k, seed);
  const GeodesicSegment b = parse_segment(b_text, k, seed);
  const AngleResult result = angle_numeric(a, b, vertex, schedule_of(s), tolerances_of(s));

  if (auto path = text(s, "diagnostics_csv")) write_file(*path, diagnostics_csv(result));
  if (csv_requested(s)) return {diagnostics_csv(result)};

  Json j = header("angle", k);
  j["a"] = a_text;
  j["b"] = b_text;
  j["vertex"] = point_json(vertex);
  j.update(angle_json(result, true));
  return {pretty(j)};
}

std::array<double, 3> thetas_of(const Settings& s, const std::string& key,
                                std::array<double, 3> fallback) {
  auto v = text(s, key);
  if (!v) return fallback;
  const auto xs = parse_doubles(*v, key);
  if (xs.size() != 3) throw InputError(key + " needs three angles for [0], [mu], [mu1]");
  const bool degrees = flag(s, "degrees");
  return {angle_input(xs[0], degrees), angle_input(xs[1], degrees),
          angle_input(xs[2], degrees)};
}

TerminalMode terminal_of(const Settings& s) {
  const std::string mode = text(s, "terminal").value_or("match-slope");
  if (mode == "match-slope") return TerminalMode::kMatchSlope;
  if (mode == "coincide") return TerminalMode::kCoincide;
  throw InputError("terminal must be match-slope or coincide");
}

Output cmd_triangle(const Settings& s) {
  reject_csv(s, "triangle");
  const Modulus k = require_modulus(s);
  TriangleSpec spec;
  spec.side_length = k.length();
  if (!text(s, "theta")) throw InputError("missing required option --theta");
  spec.theta = thetas_of(s, "theta", {});
  spec.family_seed = seed_of(s);
  spec.terminal = terminal_of(s);
  const int n = text(s, "family") ? parse_int(*text(s, "family"), "family", 1, 1000) : 1;
  const auto reports = synthesize_family(spec, n, triangle_options_of(s));

  Json j = header("triangle", k);
  j["spec"] = Json{{"l", number(spec.side_length)},
                   {"theta", Json::array({number(spec.theta[0]), number(spec.theta[1]),
                                          number(spec.theta[2])})},
                   {"family_seed", spec.family_seed},
                   {"terminal", spec.terminal == TerminalMode::kMatchSlope ? "match-slope"
                                                                            : "coincide"}};
  Json list = Json::array();
  for (const auto& r : reports) list.push_back(triangle_json(r));
  j["reports"] = std::move(list);
  if (n > 1) {
    // Smallest aligned gap between any two beta sides.
    double min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < reports.size(); ++i) {
      for (std::size_t m = i + 1; m < reports.size(); ++m) {
        min_gap = std::min(min_gap, max_aligned_gap(reports[i].sides[kSideBeta],
                                                     reports[m].sides[kSideBeta]));
      }
    }
    j["beta_min_pairwise_gap"] = number(min_gap);
  }
  return {pretty(j)};
}

Output cmd_probe(const Settings& s) {
  reject_csv(s, "probe");
  const Modulus k = require_modulus(s);
  Json j = header("probe", k);
  j.update(probe_json(curvature_probe(k)));
  return {pretty(j)};
}

VertexIndex vertex_of(const std::string& name) {
  if (name == "base") return kVertexBase;
  if (name == "mu") return kVertexMu;
  if (name == "mu1") return kVertexMu1;
  throw InputError("sweep vertex must be base, mu or mu1");
}

Output cmd_sweep(const Settings& s) {
  const std::string at = text(s, "at").value_or("mu");
  const VertexIndex v = vertex_of(at);
  const bool degrees = flag(s, "degrees");

  std::vector<double> ks;
  if (auto grid = text(s, "k_grid")) {
    if (modulus_of(s)) throw InputError("give either --k/--l or --k-grid");
    ks = parse_doubles(*grid, "k_grid");
  } else {
    ks = {require_modulus(s).value()};
  }
  std::vector<double> thetas;
  if (auto grid = text(s, "theta_grid")) {
    for (double x : parse_doubles(*grid, "theta_grid")) thetas.push_back(angle_input(x, degrees));
  } else {
    const double pi = std::numbers::pi;
    thetas = {0.0, pi / 4, pi / 2, 3 * pi / 4, pi};
  }
  const double third = std::numbers::pi / 3;
  const std::array<double, 3> base = thetas_of(s, "theta", {third, third, third});
  const TriangleOptions options = triangle_options_of(s);
  const std::uint64_t seed = seed_of(s);

  Json rows = Json::array();
  std::string csv = csv_line({"k", "vertex", "target", "predicted", "measured", "verdict"});
  bool monotone = true;
  for (double kv : ks) {
    const Modulus k(kv);
    double previous_target = -1.0;
    double previous_measured = -1.0;
    for (double theta : thetas) {
      TriangleSpec spec;
      spec.side_length = k.length();
      spec.theta = base;
      spec.theta[v] = theta;
      spec.family_seed = seed;
      const TriangleReport r = synthesize(spec, options);
      const AngleResult& m = r.measured[v];
      if (theta >= previous_target && !(m.theta >= previous_measured - options.angle_tolerance)) {
        monotone = false;
      }
      previous_target = theta;
      previous_measured = m.theta;
      rows.push_back(Json{{"k", number(kv)},
                          {"vertex", at},
                          {"target", number(theta)},
                          {"predicted", number(r.predicted[v])},
                          {"measured", number(m.theta)},
                          {"verdict", std::string(to_string(m.verdict))},
                          {"error", number(std::abs(m.theta - theta))},
                          {"angle_sum", number(r.angle_sum)}});
      csv += csv_line({format_sig9(kv), at, format_sig9(theta), format_sig9(r.predicted[v]),
                       format_sig9(m.theta), std::string(to_string(m.verdict))});
    }
  }
  if (csv_requested(s)) return {csv};
  Json j = header("sweep", std::nullopt);
  j["vertex"] = at;
  j["rows"] = std::move(rows);
  j["monotone"] = monotone;
  return {pretty(j)};
}

Output cmd_sigma_validate(const Settings& s) {
  reject_csv(s, "sigma-validate");
  const Modulus k = require_modulus(s);
  const std::string descriptor = required(s, "sigma");
  const SigmaFunction sigma = parse_sigma(descriptor, k, seed_of(s));
  const int samples =
      text(s, "samples") ? parse_int(*text(s, "samples"), "samples", 2, 10'000'000) : 10000;
  Json j = header("sigma-validate", k);
  j["sigma"] = descriptor;
  j.update(sigma_json(sigma));
  j["samples"] = samples;
  j.update(validation_json(validate_sigma(sigma, static_cast<std::size_t>(samples))));
  return {pretty(j)};
}

Settings load_config(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("io_error", "cannot read config " + path);
  Settings s;
  try {
    s = Settings::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("config " + path + " is not valid JSON: " + e.what());
  }
  if (!s.is_object()) throw InputError("config " + path + " must hold a JSON object");
  for (const auto& [key, value] : s.items()) {
    if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end()) {
      throw InputError("unknown config key '" + key + "'");
    }
  }
  return s;
}

std::string error_line(const std::string& code, const std::string& message) {
  return Json{{"error", code}, {"message", message}}.dump(
             -1, ' ', false, nlohmann::json::error_handler_t::replace) +
         "\n";
}

struct Option {
  std::string key;
  std::string value;
  CLI::Option* handle = nullptr;
};

}  // namespace

int exit_code_for(std::string_view code) noexcept {
  static const std::map<std::string_view, int> codes = {
      {"usage", kUsage},
      {"input_error", kUsage},
      {"invariant_violation", kInvariant},
      {"degenerate_segment", kDegenerate},
      {"invalid_sigma", kInvalidSigma},
      {"construction_failed", kConstruction},
      {"existence_unknown", kExistenceUnknown},
      {"io_error", kIo},
  };
  const auto it = codes.find(code);
  return it == codes.end() ? kInternal : it->second;
}

double round_sig9(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

std::string format_sig9(double x) {
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", round_sig9(x));
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geodesic triangles in a two-block Teichmueller slice", "teichlab"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  std::vector<std::unique_ptr<Option>> options;
  auto add = [&options](CLI::App* on, const std::string& key, const std::string& help) {
    auto opt = std::make_unique<Option>();
    opt->key = key;
    std::string name = key;
    std::replace(name.begin(), name.end(), '_', '-');
    opt->handle = on->add_option("--" + name, opt->value, help);
    options.push_back(std::move(opt));
  };

  std::string config_path;
  app.add_option("--config", config_path, "JSON file with any of the option keys");
  add(&app, "k", "modulus k in (0, 1)");
  add(&app, "l", "side length l > 0 (k = tanh l)");
  add(&app, "format", "json (default) or csv");
  add(&app, "out", "write the result to this file");
  add(&app, "schedule", "angle schedule r0,ratio,steps");
  add(&app, "tol", "angle tolerances conv,osc[,window]");
  add(&app, "seed", "seed for prescribed-germ interiors and families");
  bool degrees = false;
  app.add_flag("--degrees", degrees, "angle inputs are in degrees");

  auto* distance_cmd = app.add_subcommand("distance", "distance between two points");
  add(distance_cmd, "p", "first point c1,c2");
  add(distance_cmd, "q", "second point c1,c2");

  auto* angle_cmd = app.add_subcommand("angle", "numeric angle between two segments");
  add(angle_cmd, "a", "first segment descriptor");
  add(angle_cmd, "b", "second segment descriptor");
  add(angle_cmd, "vertex", "common endpoint: c1,c2 or base|mu|mu1");
  add(angle_cmd, "diagnostics_csv", "also write the (r, ratio) series to this CSV file");

  auto* triangle_cmd = app.add_subcommand("triangle", "synthesize a triangle with given angles");
  add(triangle_cmd, "theta", "target angles at [0],[mu],[mu1]");
  add(triangle_cmd, "family", "number of triangles sharing side alpha_mu");
  add(triangle_cmd, "terminal", "match-slope (default) or coincide");

  app.add_subcommand("probe", "midpoint curvature probe");

  auto* sweep_cmd = app.add_subcommand("sweep", "measured vs predicted angles over grids");
  add(sweep_cmd, "at", "swept vertex: base, mu (default) or mu1");
  add(sweep_cmd, "theta_grid", "target angles for the swept vertex");
  add(sweep_cmd, "k_grid", "moduli (replaces --k/--l)");
  add(sweep_cmd, "theta", "targets for the other vertices (default pi/3 each)");

  auto* validate_cmd = app.add_subcommand("sigma-validate", "check a sigma function");
  add(validate_cmd, "sigma", "sigma descriptor FAMILY[:d0,dk]");
  add(validate_cmd, "samples", "validation grid size");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << error_line("usage", e.what());
    return kUsage;
  }

  try {
    Settings s = config_path.empty() ? Settings::object() : load_config(config_path);
    // A flag for k or l overrides whichever of the two the config chose.
    for (const auto& opt : options) {
      if (opt->handle->count() > 0 && (opt->key == "k" || opt->key == "l")) {
        s.erase("k");
        s.erase("l");
      }
    }
    for (const auto& opt : options) {
      if (opt->handle->count() > 0) s[opt->key] = opt->value;
    }
    if (degrees) s["degrees"] = true;

    std::string command;
    if (auto subs = app.get_subcommands(); !subs.empty()) {
      command = subs.front()->get_name();
    } else if (auto c = text(s, "command")) {
      command = *c;
    } else {
      throw Error("usage", "no subcommand given (distance, angle, triangle, probe, sweep, "
                           "sigma-validate)");
    }

    Output result;
    if (command == "distance") {
      result = cmd_distance(s);
    } else if (command == "angle") {
      result = cmd_angle(s);
    } else if (command == "triangle") {
      result = cmd_triangle(s);
    } else if (command == "probe") {
      result = cmd_probe(s);
    } else if (command == "sweep") {
      result = cmd_sweep(s);
    } else if (command == "sigma-validate") {
      result = cmd_sigma_validate(s);
    } else {
      throw Error("usage", "unknown command '" + command + "'");
    }

    if (auto path = text(s, "out")) {
      write_file(*path, result.text);
    } else {
      out << result.text;
    }
    return kOk;
  } catch (const Error& e) {
    err << error_line(e.code(), e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << error_line("internal", e.what());
    return kInternal;
  }
}

}  // namespace teichlab::cli
