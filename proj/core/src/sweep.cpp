#include "aniso/experiments/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include <fmt/format.h>
#include <toml.hpp>

#include "aniso/experiments/experiment.hpp"

namespace aniso {

namespace {

template <typename T>
std::vector<T> read_array(const toml::table& t, const std::string& key) {
  std::vector<T> out;
  const toml::node* n = t.get(key);
  if (n == nullptr) return out;
  const toml::array* arr = n->as_array();
  if (arr == nullptr) throw ConfigError(fmt::format("key 'matrix.{}' must be an array", key));
  for (const toml::node& e : *arr) {
    std::optional<T> v;
    if constexpr (std::is_same_v<T, std::string>) {
      if (e.is_string()) v = e.value<std::string>();
    } else if constexpr (std::is_integral_v<T>) {
      if (e.is_integer()) v = e.value<T>();
    } else {
      if (e.is_number()) v = e.value<T>();
    }
    if (!v) throw ConfigError(fmt::format("key 'matrix.{}' has an element of the wrong type", key));
    out.push_back(*v);
  }
  return out;
}

std::string override_text(const toml::node& n) {
  std::ostringstream s;
  if (n.is_string()) {
    s << *n.value<std::string>();
  } else if (n.is_boolean()) {
    s << (*n.value<bool>() ? "true" : "false");
  } else if (n.is_integer()) {
    s << *n.value<std::int64_t>();
  } else if (n.is_floating_point()) {
    s << fmt::format("{:.17g}", *n.value<double>());
  } else {
    throw ConfigError("override values in [set] must be scalars");
  }
  return s.str();
}

std::string opt(const std::optional<double>& v) { return v ? fmt::format("{:.17g}", *v) : ""; }
std::string opt(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

}  // namespace

SweepMatrix parse_sweep_matrix(std::string_view toml_text, const std::filesystem::path& relative_to) {
  toml::table root;
  try {
    root = toml::parse(toml_text);
  } catch (const toml::parse_error& e) {
    throw ConfigError(fmt::format("malformed TOML at line {}: {}", e.source().begin.line, e.description()));
  }
  for (auto&& [k, v] : root) {
    if (k.str() != "matrix" && k.str() != "set") throw ConfigError(fmt::format("unknown key '{}'", k.str()));
  }
  const toml::table* m = root["matrix"].as_table();
  if (m == nullptr) throw ConfigError("missing table 'matrix'");
  static const std::vector<std::string> known = {"name", "base", "cases", "amplitudes", "N", "dt", "lambda", "workers"};
  for (auto&& [k, v] : *m) {
    if (std::find(known.begin(), known.end(), std::string(k.str())) == known.end()) {
      throw ConfigError(fmt::format("unknown key 'matrix.{}'", k.str()));
    }
  }

  std::vector<std::string> overrides;
  if (const toml::table* set = root["set"].as_table()) {
    for (auto&& [k, v] : *set) overrides.push_back(std::string(k.str()) + "=" + override_text(v));
  }

  SweepMatrix mx;
  mx.name = m->get("name") ? m->get("name")->value_or(std::string("sweep")) : "sweep";
  if (const toml::node* base = m->get("base")) {
    if (!base->is_string()) throw ConfigError("key 'matrix.base' must be a string");
    mx.base = load_scenario(relative_to / *base->value<std::string>(), overrides);
  } else {
    mx.base = parse_scenario("", overrides);
  }
  mx.cases = read_array<std::string>(*m, "cases");
  mx.amplitudes = read_array<double>(*m, "amplitudes");
  mx.resolutions = read_array<int>(*m, "N");
  mx.steps = read_array<double>(*m, "dt");
  mx.lambdas = read_array<double>(*m, "lambda");
  if (const toml::node* w = m->get("workers")) {
    if (!w->is_integer() || *w->value<std::int64_t>() < 1) throw ConfigError("key 'matrix.workers' must be >= 1");
    mx.workers = static_cast<unsigned>(*w->value<std::int64_t>());
  }
  return mx;
}

SweepMatrix load_sweep_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read matrix file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_sweep_matrix(text.str(), path.parent_path());
}

std::vector<SweepCell> expand_cells(const SweepMatrix& mx) {
  const auto axis = [](const auto& values) {
    using T = typename std::decay_t<decltype(values)>::value_type;
    std::vector<std::optional<T>> out;
    if (values.empty()) {
      out.emplace_back();
    } else {
      for (const T& v : values) out.emplace_back(v);
    }
    return out;
  };
  std::vector<SweepCell> cells;
  for (const std::string& c : mx.cases) {
    for (const auto& a : axis(mx.amplitudes)) {
      for (const auto& n : axis(mx.resolutions)) {
        for (const auto& dt : axis(mx.steps)) {
          for (const auto& l : axis(mx.lambdas)) cells.push_back({cells.size(), c, a, n, dt, l});
        }
      }
    }
  }
  return cells;
}

Scenario cell_scenario(const SweepMatrix& mx, const SweepCell& cell) {
  Scenario s = mx.base;
  s.preset = cell.case_name;
  try {
    s.dissipation = dissipation_preset(cell.case_name);
  } catch (const std::exception& e) {
    throw ConfigError(fmt::format("case '{}': {}", cell.case_name, e.what()));
  }
  if (cell.amplitude) s.eps0 = *cell.amplitude;
  if (cell.n) s.n = *cell.n;
  if (cell.dt) {
    s.integrator.dt = *cell.dt;
    s.integrator.auto_dt = false;
  }
  if (cell.lambda) {
    s.dissipation.lambda1 = *cell.lambda;
    s.dissipation.lambda2 = *cell.lambda;
  }
  s.name = fmt::format("cell_{:04d}_{}", cell.index, cell.case_name);
  s.validate();
  return s;
}

std::vector<SweepRow> run_sweep(const SweepMatrix& mx, const std::filesystem::path& directory) {
  const std::vector<SweepCell> cells = expand_cells(mx);
  std::vector<SweepRow> rows(cells.size());
  std::filesystem::create_directories(directory);

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      SweepRow& row = rows[i];
      row.cell = cells[i];
      try {
        const Scenario s = cell_scenario(mx, cells[i]);
        row.label = verdict_label(s);
        row.config_hash = config_hash(s);
        const RunResult r = run_scenario(s, directory / s.name);
        row.eps0 = r.bootstrap.eps0;
        row.max_budget_residual = r.run.max_abs_budget_residual;
        row.decay_ratio = std::max(r.decay.v_ratio, r.decay.theta_ratio);
        if (r.run.outcome.blew_up) {
          row.status = "blow-up";
        } else {
          row.status = r.bootstrap.held ? "held" : "violated";
        }
      } catch (const std::exception& e) {
        row.status = "error";
        row.error = e.what();
        if (row.label.empty()) row.label = is_open_case(cells[i].case_name) ? "observation" : "verdict";
      }
    }
  };
  const unsigned count = std::max(1u, std::min<unsigned>(mx.workers, static_cast<unsigned>(cells.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  std::ofstream out(directory / "matrix_report.csv", std::ios::binary | std::ios::trunc);
  out << matrix_report_csv(rows);
  return rows;
}

std::string matrix_report_csv(const std::vector<SweepRow>& rows) {
  std::string out = std::string(kMatrixCsvHeader) + "\n";
  for (const SweepRow& r : rows) {
    out += fmt::format("{},{},{},{},{},{},{},{:.17g},{:.17g},{:.17g},{},{}\n", csv_escape(r.cell.case_name),
                       opt(r.cell.amplitude), opt(r.cell.n), opt(r.cell.dt), opt(r.cell.lambda), r.status, r.label,
                       r.max_budget_residual, r.decay_ratio, r.eps0, r.config_hash, csv_escape(r.error));
  }
  return out;
}

}  // namespace aniso
