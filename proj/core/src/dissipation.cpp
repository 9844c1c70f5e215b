#include "aniso/dissipation.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace aniso {

namespace {

struct Pattern {
  bool nu1, nu2, mu1, mu2, delta1, delta2;
  double lambda1, lambda2;
};

DissipationConfig from_pattern(const Pattern& p) {
  DissipationConfig c;
  c.nu1 = p.nu1 ? 1.0 : 0.0;
  c.nu2 = p.nu2 ? 1.0 : 0.0;
  c.mu1 = p.mu1 ? 1.0 : 0.0;
  c.mu2 = p.mu2 ? 1.0 : 0.0;
  c.delta1 = p.delta1 ? 1.0 : 0.0;
  c.delta2 = p.delta2 ? 1.0 : 0.0;
  c.lambda1 = p.lambda1;
  c.lambda2 = p.lambda2;
  return c;
}

const std::map<std::string, Pattern, std::less<>>& table() {
  //                                      nu1    nu2    mu1    mu2    d1     d2     l1   l2
  static const std::map<std::string, Pattern, std::less<>> presets = {
      {"thm1",          {false, true,  true,  false, false, false, 1.0, 0.0}},
      {"gwp-case3",     {false, true,  true,  false, false, false, 1.0, 0.0}},
      {"thm2-d2",       {false, true,  true,  false, false, true,  1.0, 1.0}},
      {"thm2-d1",       {false, true,  true,  false, true,  false, 1.0, 1.0}},
      {"stability-1",   {false, true,  true,  false, true,  false, 1.0, 1.0}},
      {"stability-2",   {false, true,  true,  false, false, true,  1.0, 1.0}},
      {"stability-3",   {false, true,  false, true,  true,  false, 1.0, 1.0}},
      {"stability-4",   {true,  false, true,  false, false, true,  1.0, 1.0}},
      {"stability-5",   {true,  false, true,  false, true,  false, 1.0, 1.0}},
      {"open-A",        {true,  true,  false, false, false, true,  1.0, 1.0}},
      {"open-B",        {false, false, true,  true,  true,  false, 1.0, 1.0}},
      {"open-C",        {false, true,  false, true,  false, true,  1.0, 1.0}},
      {"open-D",        {true,  false, false, true,  true,  false, 1.0, 1.0}},
      {"open-E",        {true,  false, false, true,  false, true,  1.0, 1.0}},
      {"open-F",        {true,  true,  true,  false, false, false, 1.0, 1.0}},
      {"open-G",        {true,  true,  false, true,  false, false, 1.0, 1.0}},
      {"open-H",        {true,  false, true,  true,  false, false, 1.0, 1.0}},
      {"open-I",        {false, true,  true,  true,  false, false, 1.0, 1.0}},
      {"inviscid",      {false, false, false, false, false, false, 1.0, 1.0}},
  };
  return presets;
}

}  // namespace

void DissipationConfig::validate() const {
  const double all[] = {nu1, nu2, mu1, mu2, delta1, delta2, lambda1, lambda2};
  for (double v : all) {
    if (!std::isfinite(v)) throw std::invalid_argument("DissipationConfig: non-finite coefficient");
  }
  const double nonneg[] = {nu1, nu2, mu1, mu2, delta1, delta2};
  for (double v : nonneg) {
    if (v < 0.0) throw std::invalid_argument("DissipationConfig: viscosity/diffusivity must be nonnegative");
  }
}

bool DissipationConfig::inviscid() const {
  return nu1 == 0.0 && nu2 == 0.0 && mu1 == 0.0 && mu2 == 0.0 && delta1 == 0.0 && delta2 == 0.0;
}

DissipationConfig dissipation_preset(std::string_view name) {
  const auto& t = table();
  auto it = t.find(name);
  if (it == t.end()) throw std::invalid_argument("unknown dissipation preset '" + std::string(name) + "'");
  return from_pattern(it->second);
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : table()) names.push_back(k);
  return names;
}

bool is_open_case(std::string_view preset) { return preset.starts_with("open-"); }

bool requires_positive_lambda(std::string_view preset) { return preset.starts_with("thm2-"); }

}  // namespace aniso
