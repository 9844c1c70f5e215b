#include "aniso/experiments/scenario.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <toml.hpp>

#include "aniso/norms.hpp"
#include "aniso/operators.hpp"

namespace aniso {

namespace {

// Reads one table and rejects any key that was never asked for.
class Section {
 public:
  Section(const toml::table* table, std::string prefix) : table_(table), prefix_(std::move(prefix)) {}

  bool present() const { return table_ != nullptr; }

  const toml::node* node(const std::string& key) {
    seen_.insert(key);
    return table_ == nullptr ? nullptr : table_->get(key);
  }

  std::string path(const std::string& key) const { return prefix_.empty() ? key : prefix_ + "." + key; }

  double number(const std::string& key, double fallback) {
    const toml::node* n = node(key);
    if (n == nullptr) return fallback;
    if (auto v = n->value<double>(); v && (n->is_floating_point() || n->is_integer())) return *v;
    throw ConfigError(fmt::format("key '{}' must be a number", path(key)));
  }

  std::int64_t integer(const std::string& key, std::int64_t fallback) {
    const toml::node* n = node(key);
    if (n == nullptr) return fallback;
    if (n->is_integer()) return *n->value<std::int64_t>();
    throw ConfigError(fmt::format("key '{}' must be an integer", path(key)));
  }

  bool boolean(const std::string& key, bool fallback) {
    const toml::node* n = node(key);
    if (n == nullptr) return fallback;
    if (n->is_boolean()) return *n->value<bool>();
    throw ConfigError(fmt::format("key '{}' must be a boolean", path(key)));
  }

  std::string string(const std::string& key, const std::string& fallback) {
    const toml::node* n = node(key);
    if (n == nullptr) return fallback;
    if (n->is_string()) return *n->value<std::string>();
    throw ConfigError(fmt::format("key '{}' must be a string", path(key)));
  }

  void finish() const {
    if (table_ == nullptr) return;
    for (auto&& [k, v] : *table_) {
      const std::string key(k.str());
      if (!seen_.contains(key)) throw ConfigError(fmt::format("unknown key '{}'", path(key)));
    }
  }

 private:
  const toml::table* table_;
  std::string prefix_;
  std::set<std::string> seen_;
};

const toml::table* subtable(const toml::table& root, const std::string& name) {
  const toml::node* n = root.get(name);
  if (n == nullptr) return nullptr;
  if (!n->is_table()) throw ConfigError(fmt::format("key '{}' must be a table", name));
  return n->as_table();
}

void apply_override(toml::table& root, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError(fmt::format("override '{}' is not of the form key=value", assignment));
  }
  const std::string key = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);

  toml::table* target = &root;
  std::string leaf = key;
  std::size_t start = 0;
  for (std::size_t dot = key.find('.'); dot != std::string::npos; dot = key.find('.', start)) {
    const std::string part = key.substr(start, dot - start);
    start = dot + 1;
    toml::node* n = target->get(part);
    if (n == nullptr) {
      target->insert(part, toml::table{});
      n = target->get(part);
    }
    if (!n->is_table()) throw ConfigError(fmt::format("override '{}': '{}' is not a table", key, part));
    target = n->as_table();
  }
  leaf = key.substr(start);

  toml::table parsed;
  try {
    parsed = toml::parse("v = " + text);
  } catch (const toml::parse_error&) {
    parsed = toml::table{{"v", text}};
  }
  target->insert_or_assign(leaf, *parsed.get("v"));
}

RegularityRecipe read_recipe(Section&& sec, RegularityRecipe r) {
  r.s = sec.number("s", r.s);
  r.amplitude = sec.number("amplitude", r.amplitude);
  r.decay_margin = sec.number("decay_margin", r.decay_margin);
  const std::int64_t seed = sec.integer("seed", static_cast<std::int64_t>(r.seed));
  if (seed < 0) throw ConfigError(fmt::format("key '{}' must be >= 0", sec.path("seed")));
  r.seed = static_cast<std::uint64_t>(seed);
  sec.finish();
  return r;
}

Scenario from_table(const toml::table& root) {
  Scenario s;
  Section top(&root, "");
  s.name = top.string("name", s.name);
  s.preset = top.string("preset", "");
  const std::int64_t m = top.integer("m", s.m);
  s.m = static_cast<int>(m);

  if (!s.preset.empty()) {
    try {
      s.dissipation = dissipation_preset(s.preset);
    } catch (const std::exception& e) {
      throw ConfigError(fmt::format("key 'preset': {}", e.what()));
    }
  }
  {
    Section d(subtable(root, "dissipation"), "dissipation");
    top.node("dissipation");
    DissipationConfig& c = s.dissipation;
    c.nu1 = d.number("nu1", c.nu1);
    c.nu2 = d.number("nu2", c.nu2);
    c.mu1 = d.number("mu1", c.mu1);
    c.mu2 = d.number("mu2", c.mu2);
    c.delta1 = d.number("delta1", c.delta1);
    c.delta2 = d.number("delta2", c.delta2);
    c.lambda1 = d.number("lambda1", c.lambda1);
    c.lambda2 = d.number("lambda2", c.lambda2);
    d.finish();
  }
  {
    Section g(subtable(root, "grid"), "grid");
    top.node("grid");
    s.n = static_cast<int>(g.integer("N", s.n));
    s.length = g.number("L", s.length);
    g.finish();
  }
  {
    Section in(subtable(root, "integrator"), "integrator");
    top.node("integrator");
    IntegratorConfig& ic = s.integrator;
    const std::string method = in.string("method", to_string(ic.method));
    if (method == "if_rk4") {
      ic.method = Method::if_rk4;
    } else if (method == "erk4") {
      ic.method = Method::erk4;
    } else {
      throw ConfigError(fmt::format("key 'integrator.method': unknown method '{}'", method));
    }
    if (const toml::node* dt = in.node("dt")) {
      if (dt->is_string()) {
        if (*dt->value<std::string>() != "auto") throw ConfigError("key 'integrator.dt' must be a number or \"auto\"");
        ic.auto_dt = true;
      } else if (dt->is_number()) {
        ic.dt = *dt->value<double>();
        ic.auto_dt = false;
      } else {
        throw ConfigError("key 'integrator.dt' must be a number or \"auto\"");
      }
    }
    ic.cfl = in.number("cfl", ic.cfl);
    ic.dt_max = in.number("dt_max", ic.dt_max);
    ic.t_end = in.number("t_end", ic.t_end);
    const std::string rhs = in.string("rhs", "full");
    const double trunc = in.number("truncation_n", 0.0);
    const double eps = in.number("mollifier_eps", 0.0);
    if (rhs == "full") {
      ic.variant = RhsVariant::full();
    } else if (rhs == "truncated") {
      ic.variant = RhsVariant::truncated(trunc);
    } else if (rhs == "mollified") {
      ic.variant = RhsVariant::mollified(eps);
    } else {
      throw ConfigError(fmt::format("key 'integrator.rhs': unknown right-hand side '{}'", rhs));
    }
    ic.with_transport = !in.boolean("linear_only", false);
    in.finish();
  }
  top.node("velocity");
  s.velocity = read_recipe(Section(subtable(root, "velocity"), "velocity"), s.velocity);
  top.node("theta");
  s.theta = read_recipe(Section(subtable(root, "theta"), "theta"), s.theta);
  {
    Section i(subtable(root, "initial"), "initial");
    top.node("initial");
    s.eps0 = i.number("eps0", s.eps0);
    s.strip_stationary = i.boolean("strip_stationary", s.strip_stationary);
    i.finish();
  }
  {
    Section d(subtable(root, "diagnostics"), "diagnostics");
    top.node("diagnostics");
    const std::int64_t cadence = d.integer("cadence", static_cast<std::int64_t>(s.cadence));
    const std::int64_t snaps = d.integer("snapshot_every", static_cast<std::int64_t>(s.snapshot_every));
    if (cadence < 1) throw ConfigError("key 'diagnostics.cadence' must be >= 1");
    if (snaps < 0) throw ConfigError("key 'diagnostics.snapshot_every' must be >= 0");
    s.cadence = static_cast<std::size_t>(cadence);
    s.snapshot_every = static_cast<std::size_t>(snaps);
    s.horizon = d.number("horizon", s.horizon);
    s.threshold = d.number("threshold", s.threshold);
    d.finish();
  }
  {
    Section o(subtable(root, "output"), "output");
    top.node("output");
    s.output_dir = o.string("dir", s.output_dir);
    o.finish();
  }
  top.finish();
  s.validate();
  return s;
}

}  // namespace

std::string to_string(Method method) { return method == Method::if_rk4 ? "if_rk4" : "erk4"; }

std::string to_string(RhsVariant::Kind kind) {
  switch (kind) {
    case RhsVariant::Kind::full:
      return "full";
    case RhsVariant::Kind::truncated:
      return "truncated";
    case RhsVariant::Kind::mollified:
      return "mollified";
  }
  return "unknown";
}

void Scenario::validate() const {
  const auto wrap = [](const char* key, auto&& check) {
    try {
      check();
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw ConfigError(fmt::format("key '{}': {}", key, e.what()));
    }
  };
  if (name.empty() || name.find_first_of("/\\") != std::string::npos) {
    throw ConfigError("key 'name' must be a nonempty plain file name");
  }
  if (m < 0) throw ConfigError("key 'm' must be >= 0");
  wrap("grid", [&] { Grid2D(n, length); });
  wrap("dissipation", [&] { dissipation.validate(); });
  wrap("integrator", [&] { integrator.validate(); });
  wrap("velocity", [&] { velocity.validate(); });
  wrap("theta", [&] { theta.validate(); });
  if (requires_positive_lambda(preset) && !(dissipation.lambda1 > 0.0 && dissipation.lambda2 > 0.0)) {
    throw ConfigError(fmt::format("key 'dissipation.lambda1': preset '{}' requires lambda1, lambda2 > 0", preset));
  }
  if (!(eps0 >= 0.0) || !std::isfinite(eps0)) throw ConfigError("key 'initial.eps0' must be finite and >= 0");
  if (!(horizon > 0.0)) throw ConfigError("key 'diagnostics.horizon' must be positive");
  if (!(threshold > 0.0)) throw ConfigError("key 'diagnostics.threshold' must be positive");
  if (output_dir.empty()) throw ConfigError("key 'output.dir' must be nonempty");
}

Scenario parse_scenario(std::string_view toml_text, std::span<const std::string> overrides) {
  toml::table root;
  try {
    root = toml::parse(toml_text);
  } catch (const toml::parse_error& e) {
    std::ostringstream msg;
    msg << "malformed TOML at line " << e.source().begin.line << ": " << e.description();
    throw ConfigError(msg.str());
  }
  for (const std::string& o : overrides) apply_override(root, o);
  return from_table(root);
}

Scenario load_scenario(const std::filesystem::path& path, std::span<const std::string> overrides) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read scenario file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_scenario(text.str(), overrides);
}

SpectralField strip_stationary_modes(SpectralField theta) {
  for (int i2 = 0; i2 < theta.grid().n(); ++i2) theta(0, i2) = Complex{};
  return theta;
}

SimulationState normalize_hm(SimulationState state, int m, double eps0) {
  const double e = sobolev_norm_squared(state.v.u1, m) + sobolev_norm_squared(state.v.u2, m) +
                   sobolev_norm_squared(state.theta, m);
  if (e == 0.0) return state;
  const double c = eps0 / std::sqrt(e);
  state.v.u1 *= c;
  state.v.u2 *= c;
  state.theta *= c;
  return state;
}

SimulationState initial_state(const Scenario& s) {
  const Grid2D grid(s.n, s.length);
  VectorField2 v = synthesize_divfree_velocity(grid, s.velocity);
  SpectralField theta = synthesize_field(grid, s.theta);
  if (s.strip_stationary) theta = strip_stationary_modes(std::move(theta));
  SimulationState state(0.0, std::move(v), std::move(theta));
  if (s.eps0 > 0.0) state = normalize_hm(std::move(state), s.m, s.eps0);
  return state;
}

std::string canonical_config(const Scenario& s) {
  const auto recipe = [](const RegularityRecipe& r) {
    return nlohmann::json{{"s", r.s}, {"amplitude", r.amplitude}, {"decay_margin", r.decay_margin}, {"seed", r.seed}};
  };
  const DissipationConfig& d = s.dissipation;
  const IntegratorConfig& ic = s.integrator;
  nlohmann::json j = {
      {"name", s.name},
      {"preset", s.preset},
      {"m", s.m},
      {"dissipation",
       {{"nu1", d.nu1}, {"nu2", d.nu2}, {"mu1", d.mu1}, {"mu2", d.mu2}, {"delta1", d.delta1}, {"delta2", d.delta2},
        {"lambda1", d.lambda1}, {"lambda2", d.lambda2}}},
      {"grid", {{"N", s.n}, {"L", s.length}}},
      {"integrator",
       {{"method", to_string(ic.method)},
        {"dt", ic.auto_dt ? nlohmann::json("auto") : nlohmann::json(ic.dt)},
        {"cfl", ic.cfl},
        {"dt_max", ic.dt_max},
        {"t_end", ic.t_end},
        {"rhs", to_string(ic.variant.kind)},
        {"rhs_parameter", ic.variant.parameter},
        {"linear_only", !ic.with_transport}}},
      {"velocity", recipe(s.velocity)},
      {"theta", recipe(s.theta)},
      {"initial", {{"eps0", s.eps0}, {"strip_stationary", s.strip_stationary}}},
      {"diagnostics",
       {{"cadence", s.cadence}, {"snapshot_every", s.snapshot_every}, {"horizon", s.horizon}, {"threshold", s.threshold}}},
  };
  return j.dump();
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return fmt::format("{:016x}", h);
}

std::string config_hash(const Scenario& s) { return fnv1a_hex(canonical_config(s)); }

}  // namespace aniso
