#include "fksmc/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "fksmc/errors.hpp"

namespace fksmc {

using nlohmann::json;

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::single_run: return "single-run";
    case ExperimentKind::compare: return "compare";
    case ExperimentKind::rank_correlation: return "rank-correlation";
    case ExperimentKind::timing_sweep: return "timing-sweep";
    case ExperimentKind::nfe_scaling: return "nfe-scaling";
    case ExperimentKind::funnel_sweep: return "funnel-sweep";
    case ExperimentKind::convergence: return "convergence";
  }
  return "single-run";
}

ExperimentKind experiment_from_string(const std::string& name) {
  if (name == "single-run") return ExperimentKind::single_run;
  if (name == "compare") return ExperimentKind::compare;
  if (name == "rank-correlation") return ExperimentKind::rank_correlation;
  if (name == "timing-sweep") return ExperimentKind::timing_sweep;
  if (name == "nfe-scaling") return ExperimentKind::nfe_scaling;
  if (name == "funnel-sweep") return ExperimentKind::funnel_sweep;
  if (name == "convergence") return ExperimentKind::convergence;
  throw ConfigError("unknown experiment kind: " + name);
}

void RunConfig::validate() const {
  if (strategies.empty()) throw ConfigError("config: at least one strategy required");
  if (seeds == 0) throw ConfigError("config: seeds must be at least 1");
  if (workers == 0) throw ConfigError("config: workers must be at least 1");
  if (lambda < 0.0) throw ConfigError("config: lambda must be non-negative");
  if (temperature != "constant" && temperature != "linear-adaptive") {
    throw ConfigError("config: temperature must be constant or linear-adaptive");
  }
  if (potential != "diff" && potential != "max") {
    throw ConfigError("config: potential must be diff or max");
  }
  if (resampler != "systematic" && resampler != "multinomial") {
    throw ConfigError("config: resampler must be systematic or multinomial");
  }
  if (sigma_rule != "beta" && sigma_rule != "posterior") {
    throw ConfigError("config: sigma_rule must be beta or posterior");
  }
  for (const auto& name : strategies) make_strategy(name, *this);
  make_toy_suite(suite);
}

json to_json(const RunConfig& c) {
  return json{{"experiment", to_string(c.experiment)},
              {"suite", c.suite},
              {"strategies", c.strategies},
              {"total_steps", c.total_steps},
              {"resample_steps", c.resample_steps},
              {"uniform_count", c.uniform_count},
              {"funnel_counts", c.funnel_counts},
              {"lambda", c.lambda},
              {"temperature", c.temperature},
              {"potential", c.potential},
              {"resampler", c.resampler},
              {"sigma_rule", c.sigma_rule},
              {"guidance_scale", c.guidance_scale},
              {"bfs_k", c.bfs_k},
              {"svdd_k", c.svdd_k},
              {"group_size", c.group_size},
              {"seed", c.seed},
              {"seeds", c.seeds},
              {"out", c.out},
              {"workers", c.workers},
              {"grid", {{"lo", c.grid.lo}, {"hi", c.grid.hi}, {"resolution", c.grid.resolution}}},
              {"compare_resolution", c.compare_resolution},
              {"batch", c.batch},
              {"conditions", c.conditions},
              {"budgets", c.budgets},
              {"particle_counts", c.particle_counts},
              {"samples_per_count", c.samples_per_count},
              {"bootstrap_resamples", c.bootstrap_resamples},
              {"timing_seeds", c.timing_seeds}};
}

namespace {

template <typename T>
void read_field(const json& j, const char* key, T& out) {
  if (j.contains(key)) j.at(key).get_to(out);
}

}  // namespace

RunConfig config_from_json(const json& j) {
  static const std::set<std::string> known = {
      "experiment",     "suite",           "strategies",        "strategy",
      "total_steps",    "resample_steps",  "uniform_count",     "funnel_counts",
      "schedule",       "lambda",          "temperature",       "potential",
      "resampler",      "sigma_rule",      "guidance_scale",    "bfs_k",
      "svdd_k",         "group_size",      "seed",              "seeds",
      "out",            "workers",         "grid",              "compare_resolution",
      "batch",          "conditions",      "budgets",           "particle_counts",
      "samples_per_count", "bootstrap_resamples", "timing_seeds"};
  if (!j.is_object()) throw ConfigError("config root must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!known.count(key)) throw ConfigError("unknown config key: " + key);
  }
  RunConfig c;
  if (j.contains("experiment")) c.experiment = experiment_from_string(j.at("experiment"));
  read_field(j, "suite", c.suite);
  if (j.contains("strategy")) c.strategies = {j.at("strategy").get<std::string>()};
  read_field(j, "strategies", c.strategies);
  read_field(j, "total_steps", c.total_steps);
  read_field(j, "resample_steps", c.resample_steps);
  read_field(j, "uniform_count", c.uniform_count);
  read_field(j, "funnel_counts", c.funnel_counts);
  read_field(j, "lambda", c.lambda);
  read_field(j, "temperature", c.temperature);
  read_field(j, "potential", c.potential);
  read_field(j, "resampler", c.resampler);
  read_field(j, "sigma_rule", c.sigma_rule);
  read_field(j, "guidance_scale", c.guidance_scale);
  read_field(j, "bfs_k", c.bfs_k);
  read_field(j, "svdd_k", c.svdd_k);
  read_field(j, "group_size", c.group_size);
  read_field(j, "seed", c.seed);
  read_field(j, "seeds", c.seeds);
  read_field(j, "out", c.out);
  read_field(j, "workers", c.workers);
  if (j.contains("grid")) {
    const auto& g = j.at("grid");
    for (const auto& [key, value] : g.items()) {
      (void)value;
      if (key != "lo" && key != "hi" && key != "resolution") {
        throw ConfigError("unknown config key: grid." + key);
      }
    }
    read_field(g, "lo", c.grid.lo);
    read_field(g, "hi", c.grid.hi);
    read_field(g, "resolution", c.grid.resolution);
  }
  read_field(j, "compare_resolution", c.compare_resolution);
  read_field(j, "batch", c.batch);
  read_field(j, "conditions", c.conditions);
  read_field(j, "budgets", c.budgets);
  read_field(j, "particle_counts", c.particle_counts);
  read_field(j, "samples_per_count", c.samples_per_count);
  read_field(j, "bootstrap_resamples", c.bootstrap_resamples);
  read_field(j, "timing_seeds", c.timing_seeds);
  if (j.contains("schedule")) apply_schedule_setting(c, j.at("schedule"));
  c.validate();
  return c;
}

RunConfig parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return config_from_json(j);
}

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

void apply_schedule_setting(RunConfig& config, const json& value) {
  if (value.is_string()) {
    const std::string name = value.get<std::string>();
    if (name.rfind("uniform", 0) == 0) {
      const std::string n = name.substr(7);
      try {
        config.uniform_count = std::stoul(n);
      } catch (...) {
        throw ConfigError("schedule: bad uniform preset " + name);
      }
      return;
    }
    if (name.rfind("schedule", 0) == 0) {
      const auto presets = funnel_sweep_schedules();
      std::size_t idx = 0;
      try {
        idx = std::stoul(name.substr(8));
      } catch (...) {
        throw ConfigError("schedule: bad preset " + name);
      }
      if (idx < 1 || idx > presets.size()) {
        throw ConfigError("schedule: preset index outside 1.." +
                          std::to_string(presets.size()));
      }
      config.funnel_counts = presets[idx - 1].counts;
      config.total_steps = presets[idx - 1].total_steps;
      config.resample_steps = presets[idx - 1].resample_steps;
      return;
    }
    throw ConfigError("schedule: unknown preset " + name);
  }
  if (!value.is_object()) throw ConfigError("schedule: expected preset name or object");
  for (const auto& [key, v] : value.items()) {
    (void)v;
    if (key != "counts" && key != "resample_steps" && key != "T") {
      throw ConfigError("unknown config key: schedule." + key);
    }
  }
  ParticleSchedule s;
  s.total_steps = value.value("T", config.total_steps);
  s.resample_steps = value.value("resample_steps", config.resample_steps);
  if (value.contains("counts")) value.at("counts").get_to(s.counts);
  s.validate();
  config.total_steps = s.total_steps;
  config.resample_steps = s.resample_steps;
  bool uniform = true;
  for (auto c : s.counts) uniform = uniform && c == s.counts.front();
  if (uniform) {
    config.uniform_count = s.counts.front();
  } else {
    config.funnel_counts = s.counts;
  }
}

namespace {

bool has_suffix_marker(const std::string& name, char marker) {
  const auto pos = name.find('(');
  return pos != std::string::npos && pos + 1 < name.size() && name[pos + 1] == marker;
}

}  // namespace

StrategySpec make_strategy(const std::string& name, const RunConfig& config) {
  StrategySpec spec;
  spec.name = name;
  spec.guidance_scale = config.guidance_scale;
  spec.group_size = config.group_size;
  spec.temperature.lambda0 = config.lambda;
  spec.selection.resampler =
      config.resampler == "systematic" ? Resampler::systematic : Resampler::multinomial;

  const bool funnel = name.rfind("f-", 0) == 0;
  const std::string body = funnel ? name.substr(2) : name;
  const bool adaptive_name = body.rfind("smc-a", 0) == 0;

  const auto uniform_schedule = [&](std::vector<std::size_t> steps) {
    return ParticleSchedule::uniform(config.uniform_count, config.total_steps, std::move(steps));
  };

  if (body == "best_of_n" || body == "best-of-n") {
    if (funnel) throw ConfigError("strategy " + name + ": best-of-n has no funnel variant");
    spec.method = SearchMethod::best_of_n;
    spec.selection.kind = SelectionKind::identity;
    spec.schedule = uniform_schedule({});
    return spec;
  }
  if (body == "bfs") {
    if (funnel) throw ConfigError("strategy " + name + ": bfs has no funnel variant");
    spec.method = SearchMethod::bfs;
    spec.selection.kind = SelectionKind::top_k;
    spec.selection.k = config.bfs_k;
    spec.schedule = uniform_schedule(config.resample_steps);
    return spec;
  }
  if (body == "svdd") {
    if (funnel) throw ConfigError("strategy " + name + ": svdd has no funnel variant");
    spec.method = SearchMethod::svdd;
    spec.selection.kind = SelectionKind::svdd_group_top_k;
    spec.selection.k = config.svdd_k;
    spec.schedule = uniform_schedule(config.resample_steps);
    return spec;
  }
  static const std::set<std::string> smc_bodies = {"smc",      "smc(d)",   "smc(m)",
                                                   "smc-a",    "smc-a(d)", "smc-a(m)"};
  if (!smc_bodies.count(body)) throw ConfigError("unknown strategy: " + name);

  spec.method = SearchMethod::smc;
  spec.selection.kind = SelectionKind::weighted_resample;
  if (has_suffix_marker(body, 'm')) {
    spec.potential = PotentialKind::max;
  } else if (has_suffix_marker(body, 'd')) {
    spec.potential = PotentialKind::diff;
  } else {
    spec.potential = config.potential == "max" ? PotentialKind::max : PotentialKind::diff;
  }
  if (adaptive_name) {
    spec.temperature.kind = TemperatureKind::linear_adaptive;
  } else {
    const bool plain = body == "smc";
    spec.temperature.kind = (plain && config.temperature == "linear-adaptive")
                                ? TemperatureKind::linear_adaptive
                                : TemperatureKind::constant;
  }
  spec.schedule = funnel ? ParticleSchedule::funnel(config.funnel_counts, config.total_steps,
                                                    config.resample_steps)
                         : uniform_schedule(config.resample_steps);
  return spec;
}

NoiseSchedule make_noise_schedule(const RunConfig& config) {
  return NoiseSchedule::linear(config.total_steps, config.sigma_rule == "beta"
                                                       ? SigmaRule::beta
                                                       : SigmaRule::posterior);
}

}  // namespace fksmc
