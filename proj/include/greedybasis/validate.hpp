#pragma once
// Numerical spot checks of the norm axioms and of semi-normalization.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "json.hpp"

#include "core.hpp"
#include "search.hpp"
#include "space.hpp"

namespace greedybasis {

struct ValidationCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  std::vector<double> basis_norms;      // ||e_n||
  double measured_c1 = 0.0, measured_c2 = 0.0;
  double declared_c1 = 0.0, declared_c2 = 0.0;
  std::vector<double> dual_norms;       // exact when analytic, else lower bounds
  bool dual_analytic = false;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail {

inline bool close_rel(double a, double b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace detail

inline ValidationReport validate_space(const Space& space, const SearchConfig& cfg) {
  const std::size_t n = space.dim();
  ValidationReport rep;

  // Sample vectors with entries in {0} u {+-j/L}.
  const int levels = std::max(1, cfg.levels);
  const std::uint64_t count = std::max<std::uint64_t>(64, std::min<std::uint64_t>(cfg.samples, 4000));
  std::vector<std::vector<double>> samples;
  for (std::uint64_t s = 0; s < count; ++s) {
    auto rng = sample_rng(cfg.seed, s);
    std::vector<double> v(n);
    for (double& x : v) {
      const auto r = static_cast<int>(rng() % static_cast<std::uint64_t>(2 * levels + 1)) - levels;
      x = static_cast<double>(r) / levels;
    }
    samples.push_back(std::move(v));
  }

  ValidationCheck zero{"norm(0) = 0", true, ""};
  const double z = space.norm(std::vector<double>(n, 0.0));
  if (z != 0.0) {
    zero.pass = false;
    zero.detail = "norm(0) = " + std::to_string(z);
  }
  rep.checks.push_back(zero);

  ValidationCheck positivity{"positivity", true, ""};
  ValidationCheck homogeneity{"homogeneity", true, ""};
  ValidationCheck triangle{"triangle inequality", true, ""};
  const double scalars[] = {-2.0, 0.5, 3.0};
  std::vector<double> tmp(n);
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const auto& v = samples[s];
    const double nv = space.norm(v);
    const bool nonzero = std::any_of(v.begin(), v.end(), [](double x) { return x != 0.0; });
    if (positivity.pass && nonzero && !(nv > 0.0)) {
      positivity.pass = false;
      positivity.detail = "non-positive norm on sample " + std::to_string(s);
    }
    for (double t : scalars) {
      for (std::size_t i = 0; i < n; ++i) tmp[i] = t * v[i];
      if (homogeneity.pass && !detail::close_rel(space.norm(tmp), std::abs(t) * nv)) {
        homogeneity.pass = false;
        homogeneity.detail = "sample " + std::to_string(s) + ", t = " + std::to_string(t);
      }
    }
    const auto& w = samples[(s * 7 + 3) % samples.size()];
    for (std::size_t i = 0; i < n; ++i) tmp[i] = v[i] + w[i];
    const double lhs = space.norm(tmp), rhs = nv + space.norm(w);
    if (triangle.pass && lhs > rhs + 1e-9 * std::max(1.0, rhs)) {
      triangle.pass = false;
      triangle.detail = "samples " + std::to_string(s) + ", " + std::to_string((s * 7 + 3) % samples.size());
    }
  }
  rep.checks.push_back(positivity);
  rep.checks.push_back(homogeneity);
  rep.checks.push_back(triangle);

  // ||e_n|| against declared c1, c2.
  rep.declared_c1 = space.metadata().c1;
  rep.declared_c2 = space.metadata().c2;
  rep.measured_c1 = HUGE_VAL;
  rep.measured_c2 = 0.0;
  std::vector<double> e(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    e[i] = 1.0;
    const double len = space.norm(e);
    e[i] = 0.0;
    rep.basis_norms.push_back(len);
    rep.measured_c1 = std::min(rep.measured_c1, len);
    rep.measured_c2 = std::max(rep.measured_c2, len);
  }
  ValidationCheck semi{"semi-normalization", true, ""};
  if (!(rep.measured_c1 > 0.0)) {
    semi.pass = false;
    semi.detail = "some basis vector has non-positive norm";
  } else if (rep.measured_c1 < rep.declared_c1 - 1e-9 || rep.measured_c2 > rep.declared_c2 + 1e-9) {
    semi.pass = false;
    semi.detail = "measured ||e_n|| range leaves the declared [c1, c2]";
  }
  rep.checks.push_back(semi);

  // ||e_n^*|| = sup |v_n| / ||v||: exact from metadata, else a sampled lower bound.
  if (space.metadata().dual_norms) {
    rep.dual_norms = *space.metadata().dual_norms;
    rep.dual_analytic = true;
  } else {
    rep.dual_norms.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) rep.dual_norms[i] = 1.0 / rep.basis_norms[i];
    for (const auto& v : samples) {
      const double nv = space.norm(v);
      if (!(nv > 0.0)) continue;
      for (std::size_t i = 0; i < n; ++i) rep.dual_norms[i] = std::max(rep.dual_norms[i], std::abs(v[i]) / nv);
    }
  }
  return rep;
}

inline nlohmann::json to_json(const ValidationReport& r) {
  nlohmann::json j;
  auto checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = std::move(checks);
  j["basis_norms"] = r.basis_norms;
  j["measured"] = {{"c1", r.measured_c1}, {"c2", r.measured_c2}};
  j["declared"] = {{"c1", r.declared_c1}, {"c2", r.declared_c2}};
  j["dual_norms"] = r.dual_norms;
  j["dual_norms_exactness"] = r.dual_analytic ? "analytic-exact" : "grid-lower-bound";
  j["pass"] = r.ok();
  return j;
}

}  // namespace greedybasis
