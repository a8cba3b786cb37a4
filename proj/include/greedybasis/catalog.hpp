#pragma once
// Built-in desk-scale spaces: l_p, weighted l_1 / l_p, the truncated
// Lindenstrauss basis of l_1, max-combined direct sums, and weights read from
// a text file.

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "core.hpp"
#include "space.hpp"

namespace greedybasis {

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

enum class SpaceKind { lp, weighted_l1, weighted_lp, lindenstrauss_l1, direct_sum, custom_weights_file };

enum class Interleave { round_robin, blocks, explicit_indices };

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct SpaceSpec {
  SpaceKind kind = SpaceKind::lp;
  std::size_t dim = 0;
  double p = 1.0;                // lp, weighted_lp, custom_weights_file
  std::vector<double> weights;   // weighted_l1, weighted_lp; filled from `path` for custom files
  std::string path;              // custom_weights_file
  std::vector<SpaceSpec> summands;
  Interleave interleave = Interleave::round_robin;
  std::vector<std::size_t> indices;  // 1-based placement when this spec is an explicit summand

  friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;
};

inline std::string_view kind_name(SpaceKind k) {
  switch (k) {
    case SpaceKind::lp: return "lp";
    case SpaceKind::weighted_l1: return "weighted_l1";
    case SpaceKind::weighted_lp: return "weighted_lp";
    case SpaceKind::lindenstrauss_l1: return "lindenstrauss_l1";
    case SpaceKind::direct_sum: return "direct_sum";
    case SpaceKind::custom_weights_file: return "custom_weights_file";
  }
  return "?";
}

/// Accepts the JSON names and their hyphenated CLI spellings.
inline std::optional<SpaceKind> space_kind_from_name(std::string name) {
  std::replace(name.begin(), name.end(), '-', '_');
  if (name == "lp") return SpaceKind::lp;
  if (name == "weighted_l1") return SpaceKind::weighted_l1;
  if (name == "weighted_lp") return SpaceKind::weighted_lp;
  if (name == "lindenstrauss_l1" || name == "lindenstrauss") return SpaceKind::lindenstrauss_l1;
  if (name == "direct_sum") return SpaceKind::direct_sum;
  if (name == "custom_weights_file" || name == "custom_weights") return SpaceKind::custom_weights_file;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Text ingestion

/// Parses a full decimal token; rejects trailing garbage and non-finite values.
inline std::optional<double> parse_decimal(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double x = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(x)) return std::nullopt;
  return x;
}

/// "3,2,1" -> {3,2,1}
inline std::vector<double> parse_decimal_list(std::string_view s) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    const auto tok = s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    auto x = parse_decimal(tok);
    if (!x) throw InvalidSpec("not a decimal number: '" + std::string(tok) + "'");
    out.push_back(*x);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

/// One decimal per line; a single trailing newline is allowed.
inline std::vector<double> read_decimal_lines(std::istream& in) {
  std::vector<double> out;
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  if (!lines.empty() && lines.front().rfind("\xEF\xBB\xBF", 0) == 0) lines.front().erase(0, 3);
  while (!lines.empty() && lines.back().find_first_not_of(" \t\r") == std::string::npos) lines.pop_back();
  std::size_t lineno = 0;
  for (const auto& l : lines) {
    ++lineno;
    auto x = parse_decimal(l);
    if (!x) throw InvalidSpec("line " + std::to_string(lineno) + ": not a decimal number");
    out.push_back(*x);
  }
  return out;
}

inline std::vector<double> read_decimal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidSpec("cannot open file: " + path);
  return read_decimal_lines(in);
}

/// Custom weights file: one strictly positive decimal per line.
inline std::vector<double> read_weights_file(const std::string& path) {
  auto w = read_decimal_file(path);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!(w[i] > 0.0)) throw InvalidSpec("weights file line " + std::to_string(i + 1) + ": weight must be positive");
  return w;
}

// ---------------------------------------------------------------------------
// Norms

/// ||sum_n a_n x_n||_1 with x_n = e_n - (e_{2n} + e_{2n+1})/2 (1-based), children
/// beyond N dropped.
inline double lindenstrauss_norm(std::span<const double> a) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    // 1-based k+1 has parent floor((k+1)/2); 0-based parent index (k+1)/2 - 1.
    double c = a[k];
    if (k >= 1) c -= 0.5 * a[(k + 1) / 2 - 1];
    s += std::abs(c);
  }
  return s;
}

inline double lindenstrauss_norm(const CoeffVector& a) { return lindenstrauss_norm(a.values()); }

namespace detail {

inline double lp_norm(std::span<const double> v, double p) {
  if (p == 1.0) {
    double s = 0.0;
    for (double x : v) s += std::abs(x);
    return s;
  }
  if (std::isinf(p)) return coeff_sup(v);
  if (p == 2.0) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
  }
  double s = 0.0;
  for (double x : v) s += std::pow(std::abs(x), p);
  return std::pow(s, 1.0 / p);
}

inline double weighted_lp_norm(std::span<const double> v, std::span<const double> w, double p) {
  double s = 0.0;
  if (p == 1.0) {
    for (std::size_t i = 0; i < v.size(); ++i) s += w[i] * std::abs(v[i]);
    return s;
  }
  for (std::size_t i = 0; i < v.size(); ++i) s += w[i] * std::pow(std::abs(v[i]), p);
  return std::pow(s, 1.0 / p);
}

inline void set_all(SpaceMetadata& meta, double value) {
  for (const auto& n : kKindNames) meta.analytic[n.kind] = value;
}

/// 0-based coordinate classes of the summands of a direct sum.
inline std::vector<std::vector<std::size_t>> summand_classes(const SpaceSpec& spec) {
  const std::size_t k = spec.summands.size();
  std::vector<std::vector<std::size_t>> classes(k);
  switch (spec.interleave) {
    case Interleave::round_robin:
      for (std::size_t n = 0; n < spec.dim; ++n) classes[n % k].push_back(n);
      break;
    case Interleave::blocks: {
      std::size_t next = 0;
      for (std::size_t s = 0; s < k; ++s)
        for (std::size_t j = 0; j < spec.summands[s].dim; ++j) classes[s].push_back(next++);
      break;
    }
    case Interleave::explicit_indices:
      for (std::size_t s = 0; s < k; ++s)
        for (std::size_t i : spec.summands[s].indices) {
          if (i == 0) throw InvalidSpec("direct_sum: indices are 1-based");
          classes[s].push_back(i - 1);
        }
      break;
  }
  std::vector<int> hit(spec.dim, 0);
  for (std::size_t s = 0; s < k; ++s) {
    if (classes[s].size() != spec.summands[s].dim)
      throw InvalidSpec("direct_sum: summand " + std::to_string(s + 1) + " has dim " +
                        std::to_string(spec.summands[s].dim) + " but receives " + std::to_string(classes[s].size()) +
                        " indices");
    for (std::size_t i : classes[s]) {
      if (i >= spec.dim || hit[i]++) throw InvalidSpec("direct_sum: summand indices must partition 1..dim");
    }
  }
  return classes;
}

}  // namespace detail

nlohmann::json to_json(const SpaceSpec& spec);

/// Checks the space spec invariants (positive weights, p >= 1, partition) and
/// throws InvalidSpec on violation.
inline void check_spec(const SpaceSpec& spec) {
  if (spec.dim == 0) throw InvalidSpec("dim must be positive");
  auto check_p = [&] {
    if (!(spec.p >= 1.0)) throw InvalidSpec("p must be >= 1");
  };
  auto check_weights = [&] {
    if (spec.weights.size() != spec.dim)
      throw InvalidSpec("expected " + std::to_string(spec.dim) + " weights, got " + std::to_string(spec.weights.size()));
    for (double w : spec.weights)
      if (!(w > 0.0) || !std::isfinite(w)) throw InvalidSpec("weights must be positive and finite");
  };
  switch (spec.kind) {
    case SpaceKind::lp: check_p(); break;
    case SpaceKind::weighted_l1: check_weights(); break;
    case SpaceKind::weighted_lp:
    case SpaceKind::custom_weights_file:
      check_p();
      if (std::isinf(spec.p)) throw InvalidSpec("weighted spaces need finite p");
      check_weights();
      break;
    case SpaceKind::lindenstrauss_l1: break;
    case SpaceKind::direct_sum:
      if (spec.summands.empty()) throw InvalidSpec("direct_sum needs at least one summand");
      for (const auto& s : spec.summands) check_spec(s);
      detail::summand_classes(spec);
      break;
  }
}

namespace detail {

struct Built {
  NormFunction norm;
  SpaceMetadata meta;
};

inline Built build(const SpaceSpec& spec) {
  const std::size_t n = spec.dim;
  Built b;
  switch (spec.kind) {
    case SpaceKind::lp: {
      const double p = spec.p;
      b.norm = [p](std::span<const double> v) { return lp_norm(v, p); };
      b.meta.one_unconditional = true;
      // Symmetric and 1-unconditional: every greedy-type constant is 1.
      set_all(b.meta, 1.0);
      if (n == 1) {
        b.meta.analytic[ConstantKind::conservative] = 0.0;
        b.meta.analytic[ConstantKind::super_conservative] = 0.0;
      }
      b.meta.c1 = b.meta.c2 = 1.0;
      b.meta.dual_norms = std::vector<double>(n, 1.0);
      break;
    }
    case SpaceKind::weighted_l1:
    case SpaceKind::weighted_lp:
    case SpaceKind::custom_weights_file: {
      const double p = spec.kind == SpaceKind::weighted_l1 ? 1.0 : spec.p;
      const std::vector<double> w = spec.weights;
      b.norm = [w, p](std::span<const double> v) { return weighted_lp_norm(v, w, p); };
      b.meta.one_unconditional = true;
      b.meta.analytic[ConstantKind::quasi_greedy] = 1.0;
      b.meta.analytic[ConstantKind::unconditional] = 1.0;
      const auto [lo, hi] = std::minmax_element(w.begin(), w.end());
      const double spread = std::pow(*hi / *lo, 1.0 / p);
      b.meta.analytic[ConstantKind::democracy] = spread;
      b.meta.analytic[ConstantKind::super_democracy] = spread;
      if (std::is_sorted(w.begin(), w.end())) {
        // A < B, |A| <= |B| on nondecreasing weights: the worst pair is two
        // adjacent singletons. With one coordinate only A = {} is left.
        double dc = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i) dc = std::max(dc, std::pow(w[i] / w[i + 1], 1.0 / p));
        b.meta.analytic[ConstantKind::conservative] = dc;
        b.meta.analytic[ConstantKind::super_conservative] = dc;
      }
      b.meta.c1 = std::pow(*lo, 1.0 / p);
      b.meta.c2 = std::pow(*hi, 1.0 / p);
      std::vector<double> dual(n);
      for (std::size_t i = 0; i < n; ++i) dual[i] = std::pow(w[i], -1.0 / p);
      b.meta.dual_norms = std::move(dual);
      break;
    }
    case SpaceKind::lindenstrauss_l1: {
      b.norm = [](std::span<const double> v) { return lindenstrauss_norm(v); };
      double lo = HUGE_VAL, hi = 0.0;
      for (std::size_t k = 1; k <= n; ++k) {
        const double len = 1.0 + 0.5 * static_cast<double>((2 * k <= n) + (2 * k + 1 <= n));
        lo = std::min(lo, len);
        hi = std::max(hi, len);
      }
      b.meta.c1 = lo;
      b.meta.c2 = hi;
      break;
    }
    case SpaceKind::direct_sum: {
      const auto classes = summand_classes(spec);
      std::vector<Built> parts;
      for (const auto& s : spec.summands) parts.push_back(build(s));
      std::vector<NormFunction> norms;
      bool uncond = true;
      b.meta.c1 = HUGE_VAL;
      b.meta.c2 = 0.0;
      std::vector<double> dual(n, 0.0);
      bool dual_known = true;
      for (std::size_t s = 0; s < parts.size(); ++s) {
        norms.push_back(parts[s].norm);
        uncond = uncond && parts[s].meta.one_unconditional;
        b.meta.c1 = std::min(b.meta.c1, parts[s].meta.c1);
        b.meta.c2 = std::max(b.meta.c2, parts[s].meta.c2);
        if (parts[s].meta.dual_norms)
          for (std::size_t j = 0; j < classes[s].size(); ++j) dual[classes[s][j]] = (*parts[s].meta.dual_norms)[j];
        else
          dual_known = false;
      }
      if (dual_known) b.meta.dual_norms = std::move(dual);
      b.meta.one_unconditional = uncond;
      if (uncond) {
        b.meta.analytic[ConstantKind::quasi_greedy] = 1.0;
        b.meta.analytic[ConstantKind::unconditional] = 1.0;
      }
      b.norm = [classes, norms](std::span<const double> v) {
        double best = 0.0;
        std::array<double, 64> local{};
        std::vector<double> heap;
        for (std::size_t s = 0; s < norms.size(); ++s) {
          const std::size_t len = classes[s].size();
          double* buf = local.data();
          if (len > local.size()) {
            heap.resize(len);
            buf = heap.data();
          }
          for (std::size_t j = 0; j < len; ++j) buf[j] = v[classes[s][j]];
          best = std::max(best, norms[s](std::span<const double>(buf, len)));
        }
        return best;
      };
      break;
    }
  }
  return b;
}

}  // namespace detail

/// Loads weights for custom_weights_file specs (dim taken from the file when
/// unset). Other kinds pass through.
inline SpaceSpec resolve(SpaceSpec spec) {
  if (spec.kind == SpaceKind::custom_weights_file) {
    spec.weights = read_weights_file(spec.path);
    if (spec.dim == 0) spec.dim = spec.weights.size();
    if (spec.weights.size() != spec.dim)
      throw InvalidSpec("weights file has " + std::to_string(spec.weights.size()) + " lines, expected dim " +
                        std::to_string(spec.dim));
  }
  for (auto& s : spec.summands) s = resolve(std::move(s));
  return spec;
}

/// Builds the space without checking spec invariants, so that broken specs
/// can be fed to validate_space.
inline Space make_space_unchecked(SpaceSpec spec) {
  spec = resolve(std::move(spec));
  auto built = detail::build(spec);
  return Space(spec.dim, std::move(built.norm), std::move(built.meta), to_json(spec));
}

inline Space make_space(SpaceSpec spec) {
  spec = resolve(std::move(spec));
  check_spec(spec);
  return make_space_unchecked(std::move(spec));
}

// ---------------------------------------------------------------------------
// Convenience constructors

inline SpaceSpec lp_spec(std::size_t dim, double p) {
  SpaceSpec s;
  s.kind = SpaceKind::lp;
  s.dim = dim;
  s.p = p;
  return s;
}

inline SpaceSpec weighted_l1_spec(std::vector<double> w) {
  SpaceSpec s;
  s.kind = SpaceKind::weighted_l1;
  s.dim = w.size();
  s.weights = std::move(w);
  return s;
}

inline SpaceSpec weighted_lp_spec(std::vector<double> w, double p) {
  SpaceSpec s = weighted_l1_spec(std::move(w));
  s.kind = SpaceKind::weighted_lp;
  s.p = p;
  return s;
}

inline SpaceSpec lindenstrauss_spec(std::size_t dim) {
  SpaceSpec s;
  s.kind = SpaceKind::lindenstrauss_l1;
  s.dim = dim;
  return s;
}

/// l_1 on odd coordinates, l_2 on even ones, max-combined.
inline SpaceSpec l1_l2_sum_spec(std::size_t dim) {
  SpaceSpec s;
  s.kind = SpaceKind::direct_sum;
  s.dim = dim;
  s.interleave = Interleave::round_robin;
  s.summands = {lp_spec((dim + 1) / 2, 1.0), lp_spec(dim / 2, 2.0)};
  if (dim == 1) s.summands.pop_back();
  return s;
}

inline std::vector<double> linear_weights(std::size_t dim) {
  std::vector<double> w(dim);
  std::iota(w.begin(), w.end(), 1.0);
  return w;
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::json p_to_json(double p) {
  if (std::isinf(p)) return "inf";
  return p;
}

inline double p_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "infinity") return kInfinity;
    auto x = parse_decimal(s);
    if (!x) throw InvalidSpec("p: not a number: " + s);
    return *x;
  }
  if (!j.is_number()) throw InvalidSpec("p must be a number or \"inf\"");
  return j.get<double>();
}

inline nlohmann::json to_json(const SpaceSpec& spec) {
  nlohmann::json j;
  j["kind"] = kind_name(spec.kind);
  j["dim"] = spec.dim;
  switch (spec.kind) {
    case SpaceKind::lp: j["p"] = p_to_json(spec.p); break;
    case SpaceKind::weighted_l1: j["weights"] = spec.weights; break;
    case SpaceKind::weighted_lp:
      j["p"] = p_to_json(spec.p);
      j["weights"] = spec.weights;
      break;
    case SpaceKind::custom_weights_file:
      j["p"] = p_to_json(spec.p);
      j["path"] = spec.path;
      break;
    case SpaceKind::lindenstrauss_l1: break;
    case SpaceKind::direct_sum: {
      j["interleave"] = spec.interleave == Interleave::round_robin ? "round_robin"
                        : spec.interleave == Interleave::blocks    ? "blocks"
                                                                   : "explicit";
      auto arr = nlohmann::json::array();
      for (const auto& s : spec.summands) {
        auto sj = to_json(s);
        if (spec.interleave == Interleave::explicit_indices) sj["indices"] = s.indices;
        arr.push_back(std::move(sj));
      }
      j["summands"] = std::move(arr);
      break;
    }
  }
  return j;
}

inline SpaceSpec spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidSpec("space spec must be a JSON object");
  SpaceSpec s;
  try {
    auto kind = space_kind_from_name(j.at("kind").get<std::string>());
    if (!kind) throw InvalidSpec("unknown space kind: " + j.at("kind").get<std::string>());
    s.kind = *kind;
    if (j.contains("p")) s.p = p_from_json(j.at("p"));
    if (j.contains("weights")) s.weights = j.at("weights").get<std::vector<double>>();
    if (j.contains("path")) s.path = j.at("path").get<std::string>();
    if (j.contains("dim"))
      s.dim = j.at("dim").get<std::size_t>();
    else if (!s.weights.empty())
      s.dim = s.weights.size();
    if (j.contains("indices")) s.indices = j.at("indices").get<std::vector<std::size_t>>();
    if (j.contains("interleave")) {
      const auto mode = j.at("interleave").get<std::string>();
      if (mode == "round_robin")
        s.interleave = Interleave::round_robin;
      else if (mode == "blocks")
        s.interleave = Interleave::blocks;
      else if (mode == "explicit")
        s.interleave = Interleave::explicit_indices;
      else
        throw InvalidSpec("unknown interleave mode: " + mode);
    }
    if (j.contains("summands"))
      for (const auto& sj : j.at("summands")) s.summands.push_back(spec_from_json(sj));
    if (s.kind == SpaceKind::direct_sum && s.dim == 0)
      for (const auto& sub : s.summands) s.dim += sub.dim;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidSpec(std::string("malformed space spec: ") + e.what());
  }
  return s;
}

struct CatalogEntry {
  std::string_view kind;
  std::string_view parameters;
};

inline constexpr std::array<CatalogEntry, 6> kCatalog{{
    {"lp", "dim: int >= 1; p: number >= 1 or \"inf\""},
    {"weighted_l1", "dim: int >= 1; weights: [positive numbers] (length dim)"},
    {"weighted_lp", "dim: int >= 1; p: number >= 1 (finite); weights: [positive numbers] (length dim)"},
    {"lindenstrauss_l1", "dim: int >= 1"},
    {"direct_sum",
     "dim: int >= 1; interleave: round_robin | blocks | explicit; summands: [space specs], each with indices: "
     "[1-based ints] when explicit"},
    {"custom_weights_file", "path: file with one positive decimal per line; p: number >= 1 (finite, default 1); dim: "
                            "optional, must equal the line count"},
}};

}  // namespace greedybasis
