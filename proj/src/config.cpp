#include "holonomy/config.hpp"

#include "holonomy/errors.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace holonomy {

namespace {

using nlohmann::json;

// Strict section reader: consumed keys are checked off, leftovers rejected,
// so config typos fail loudly instead of silently using defaults.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string scope)
      : j_(j), scope_(std::move(scope)) {
    if (!j.is_object()) {
      throw ConfigError(scope_ + ": expected a JSON object");
    }
  }

  template <typename T>
  void get(const char* key, T& out) {
    const auto it = j_.find(key);
    if (it == j_.end()) {
      return;  // keep the default
    }
    seen_.insert(key);
    try {
      out = it->get<T>();
    } catch (const json::exception& e) {
      throw ConfigError(scope_ + "." + key + ": " + e.what());
    }
  }

  const json* section(const char* key) {
    const auto it = j_.find(key);
    if (it == j_.end()) {
      return nullptr;
    }
    seen_.insert(key);
    return &*it;
  }

  void finish() const {
    for (const auto& [k, v] : j_.items()) {
      if (!seen_.contains(k)) {
        throw ConfigError(scope_ + ": unknown key \"" + k + "\"");
      }
    }
  }

 private:
  const json& j_;
  std::string scope_;
  std::set<std::string> seen_;
};

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw ConfigError(std::string(what) + " must be finite");
  }
}

double axis_norm(const std::array<double, 3>& a) {
  return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (const unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

ScenarioConfig config_from_json(const nlohmann::json& j) {
  ScenarioConfig c;
  ObjectReader top(j, "config");

  if (const json* jm = top.section("model")) {
    ObjectReader r(*jm, "model");
    r.get("kind", c.model.kind);
    r.get("epsilon", c.model.epsilon);
    r.get("h0_axis", c.model.h0_axis);
    r.get("h0_scale", c.model.h0_scale);
    r.get("kick_axis", c.model.kick_axis);
    r.finish();
  }
  if (const json* jc = top.section("cycle")) {
    ObjectReader r(*jc, "cycle");
    r.get("lambda_start", c.cycle.lambda_start);
    r.get("lambda_end", c.cycle.lambda_end);
    r.get("samples", c.cycle.samples);
    r.finish();
  }
  if (const json* js = top.section("schedule")) {
    ObjectReader r(*js, "schedule");
    r.get("kind", c.schedule.kind);
    r.get("total_time", c.schedule.total_time);
    r.get("dt", c.schedule.dt);
    r.get("window_half_width", c.schedule.window_half_width);
    r.get("rate_multiplier", c.schedule.rate_multiplier);
    r.get("kicks", c.schedule.kicks);
    r.finish();
  }
  if (const json* jw = top.section("sweep")) {
    ObjectReader r(*jw, "sweep");
    r.get("axis", c.sweep.axis);
    r.get("values", c.sweep.values);
    r.finish();
  }
  if (const json* jo = top.section("output")) {
    ObjectReader r(*jo, "output");
    r.get("dir", c.output.dir);
    r.get("format", c.output.format);
    r.get("record_stride", c.output.record_stride);
    r.finish();
  }
  top.get("initial_branch", c.initial_branch);
  top.get("seed", c.seed);
  top.finish();
  return c;
}

nlohmann::json config_to_json(const ScenarioConfig& c) {
  return nlohmann::json{
      {"model",
       {{"kind", c.model.kind},
        {"epsilon", c.model.epsilon},
        {"h0_axis", c.model.h0_axis},
        {"h0_scale", c.model.h0_scale},
        {"kick_axis", c.model.kick_axis}}},
      {"cycle",
       {{"lambda_start", c.cycle.lambda_start},
        {"lambda_end", c.cycle.lambda_end},
        {"samples", c.cycle.samples}}},
      {"schedule",
       {{"kind", c.schedule.kind},
        {"total_time", c.schedule.total_time},
        {"dt", c.schedule.dt},
        {"window_half_width", c.schedule.window_half_width},
        {"rate_multiplier", c.schedule.rate_multiplier},
        {"kicks", c.schedule.kicks}}},
      {"sweep", {{"axis", c.sweep.axis}, {"values", c.sweep.values}}},
      {"initial_branch", c.initial_branch},
      {"output",
       {{"dir", c.output.dir},
        {"format", c.output.format},
        {"record_stride", c.output.record_stride}}},
      {"seed", c.seed}};
}

ScenarioConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file: " + path);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config parse error in " + path + ": " + e.what());
  }
  return config_from_json(j);
}

void validate(const ScenarioConfig& c) {
  if (c.model.kind != "crossing" && c.model.kind != "perturbed" &&
      c.model.kind != "floquet_map") {
    throw ConfigError("model.kind must be crossing, perturbed or floquet_map");
  }
  require_finite(c.model.epsilon, "model.epsilon");
  if (c.model.kind == "perturbed" && c.model.epsilon <= 0.0) {
    throw ConfigError("model.epsilon must be > 0 for the perturbed model");
  }
  for (const double v : c.model.h0_axis) require_finite(v, "model.h0_axis");
  for (const double v : c.model.kick_axis) {
    require_finite(v, "model.kick_axis");
  }
  require_finite(c.model.h0_scale, "model.h0_scale");
  if (axis_norm(c.model.h0_axis) < 1e-9 ||
      axis_norm(c.model.kick_axis) < 1e-9) {
    throw ConfigError("model axes must be nonzero vectors");
  }

  require_finite(c.cycle.lambda_start, "cycle.lambda_start");
  require_finite(c.cycle.lambda_end, "cycle.lambda_end");
  if (c.cycle.samples < 2) {
    throw ConfigError("cycle.samples must be >= 2");
  }

  if (c.schedule.kind != "uniform" && c.schedule.kind != "diabatic_window") {
    throw ConfigError("schedule.kind must be uniform or diabatic_window");
  }
  require_finite(c.schedule.total_time, "schedule.total_time");
  require_finite(c.schedule.dt, "schedule.dt");
  require_finite(c.schedule.window_half_width, "schedule.window_half_width");
  require_finite(c.schedule.rate_multiplier, "schedule.rate_multiplier");
  if (c.schedule.total_time <= 0.0 || c.schedule.dt <= 0.0) {
    throw ConfigError("schedule.total_time and schedule.dt must be > 0");
  }
  if (c.schedule.kind == "diabatic_window") {
    if (c.schedule.window_half_width <= 0.0 ||
        c.schedule.window_half_width >= std::numbers::pi) {
      throw ConfigError("schedule.window_half_width must lie in (0, pi)");
    }
    if (c.schedule.rate_multiplier <= 0.0) {
      throw ConfigError("schedule.rate_multiplier must be > 0");
    }
  }
  if (c.schedule.kicks < 1) {
    throw ConfigError("schedule.kicks must be >= 1");
  }

  if (c.sweep.axis != "epsilon" && c.sweep.axis != "rate" &&
      c.sweep.axis != "samples") {
    throw ConfigError("sweep.axis must be epsilon, rate or samples");
  }
  for (const double v : c.sweep.values) require_finite(v, "sweep.values");

  if (c.initial_branch != "upper" && c.initial_branch != "lower") {
    throw ConfigError("initial_branch must be upper or lower");
  }

  if (c.output.dir.empty()) {
    throw ConfigError("output.dir must not be empty");
  }
  if (c.output.format != "csv" && c.output.format != "json") {
    throw ConfigError("output.format must be csv or json");
  }
  if (c.output.record_stride < 0) {
    throw ConfigError("output.record_stride must be >= 0");
  }
}

std::uint64_t config_hash(const ScenarioConfig& c) {
  return fnv1a(config_to_json(c).dump());
}

std::vector<double> default_sweep_values(const std::string& axis) {
  if (axis == "epsilon") {
    return {0.02, 0.05, 0.1, 0.2, 0.35, 0.5};
  }
  if (axis == "rate") {
    return {0.002, 0.01, 0.2, 1.0};
  }
  if (axis == "samples") {
    return {101.0, 201.0, 401.0, 801.0};
  }
  throw ConfigError("unknown sweep axis: " + axis);
}

}  // namespace holonomy
