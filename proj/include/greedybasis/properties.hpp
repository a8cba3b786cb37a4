#pragma once
// Worst-case ratio estimators for the greedy-type constants.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstring>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "core.hpp"
#include "greedy.hpp"
#include "instances.hpp"
#include "kinds.hpp"
#include "search.hpp"
#include "space.hpp"

namespace greedybasis {

class NormAxiomFailure : public Error {
 public:
  using Error::Error;
};

/// The extremal instance of a search, with both sides of the inequality
/// stored explicitly so that the ratio can be recomputed.
struct Witness {
  std::map<std::string, CoeffVector> vectors;  // always has "numerator" and "denominator"
  std::map<std::string, IndexSet> sets;
  std::map<std::string, SignPattern> signs;
  std::map<std::string, double> scalars;
};

inline nlohmann::json to_json(const Witness& w) {
  nlohmann::json j;
  j["vectors"] = nlohmann::json::object();
  for (const auto& [k, v] : w.vectors) j["vectors"][k] = v.data();
  j["sets"] = nlohmann::json::object();
  for (const auto& [k, s] : w.sets) {
    auto arr = nlohmann::json::array();
    for (std::size_t i : s) arr.push_back(i + 1);
    j["sets"][k] = std::move(arr);
  }
  j["signs"] = nlohmann::json::object();
  for (const auto& [k, s] : w.signs) j["signs"][k] = s.signs();
  j["scalars"] = nlohmann::json::object();
  for (const auto& [k, x] : w.scalars) j["scalars"][k] = x;
  return j;
}

/// ||numerator|| / ||denominator|| of a witness in the given space.
inline double witness_ratio(const Space& space, const Witness& w) {
  return space.norm(w.vectors.at("numerator")) / space.norm(w.vectors.at("denominator"));
}

// ---------------------------------------------------------------------------
// Search engine

/// Result of maximizing a ratio over an instance stream.
struct SearchResult {
  double value = 0.0;
  std::optional<Witness> witness;
  std::uint64_t instances = 0;
};

namespace detail {

struct Best {
  double value = -1.0;
  std::uint64_t unit = 0, local = 0;
  std::optional<Witness> witness;

  bool beats(double v, std::uint64_t u, std::uint64_t l) const {
    if (v != value) return v > value;
    return u < unit || (u == unit && l < local);
  }
};

/// Norm evaluation that skips recomputation when the vector is unchanged.
class MemoNorm {
 public:
  explicit MemoNorm(std::size_t dim) : last_(dim, std::nan("")) {}
  double operator()(const Space& space, const std::vector<double>& v) {
    if (valid_ && std::memcmp(v.data(), last_.data(), v.size() * sizeof(double)) == 0) return value_;
    last_ = v;
    value_ = space.norm(std::span<const double>(v));
    valid_ = true;
    return value_;
  }

 private:
  std::vector<double> last_;
  double value_ = 0.0;
  bool valid_ = false;
};

}  // namespace detail

/// Maximizes num/den over every instance of `gen`.
///
/// make_eval() builds one evaluator per worker. An evaluator provides
///   bool eval(const Instance&, double& num, double& den)  (false skips)
///   Witness capture(const Instance&)                      (after eval)
/// The maximum is unique; among equal ratios the instance that comes first in
/// enumeration order is kept, so the result is independent of worker count.
template <class MakeEval>
SearchResult run_search(const InstanceGenerator& gen, MakeEval make_eval) {
  const std::uint64_t units = gen.unit_count();
  const unsigned workers = std::max(1u, std::min<unsigned>(gen.config().workers,
                                                            static_cast<unsigned>(std::max<std::uint64_t>(1, units))));
  const std::uint64_t cap = gen.config().cap;
  std::atomic<std::uint64_t> next{0}, total{0};
  std::atomic<bool> stop{false};
  std::vector<detail::Best> bests(workers);
  std::vector<std::exception_ptr> errors(workers);

  auto work = [&](unsigned w) {
    try {
      auto ev = make_eval();
      auto& best = bests[w];
      double num = 0.0, den = 0.0;
      while (!stop.load(std::memory_order_relaxed)) {
        const std::uint64_t u = next.fetch_add(1);
        if (u >= units) break;
        const std::uint64_t n = gen.run_unit(u, [&](const Instance& inst) {
          if (!ev.eval(inst, num, den)) return;
          if (den == 0.0) {
            if (num == 0.0) return;
            throw NormAxiomFailure("zero norm on a nonzero vector during the search");
          }
          const double r = num / den;
          if (best.beats(r, inst.unit, inst.local)) {
            best.value = r;
            best.unit = inst.unit;
            best.local = inst.local;
            best.witness = ev.capture(inst);
          }
        });
        if (total.fetch_add(n) + n > cap) {
          stop = true;
          throw CapExceeded(cap);
        }
      }
    } catch (...) {
      errors[w] = std::current_exception();
      stop = true;
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  // A cap overflow is reported in preference to errors in other workers.
  for (auto& e : errors) {
    if (!e) continue;
    try {
      std::rethrow_exception(e);
    } catch (const CapExceeded&) {
      throw;
    } catch (...) {
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  detail::Best out;
  for (auto& b : bests)
    if (b.witness && out.beats(b.value, b.unit, b.local)) out = std::move(b);
  SearchResult res;
  res.instances = total.load();
  if (out.witness) {
    res.value = out.value;
    res.witness = std::move(out.witness);
  }
  return res;
}

// ---------------------------------------------------------------------------
// Per-kind evaluators

namespace detail {

enum class Part : std::uint8_t { zero, value, eps, eta };
struct RoleParts {
  Part num = Part::zero, den = Part::zero;
};

/// How each role contributes to the two sides of the kind's inequality.
inline std::array<RoleParts, 10> role_parts(ConstantKind k) {
  std::array<RoleParts, 10> t{};
  auto set = [&](Role r, Part n, Part d) { t[static_cast<std::size_t>(r)] = {n, d}; };
  // K compares P_A f with f, so f off A only enters the denominator.
  set(Role::f, k == ConstantKind::unconditional ? Part::zero : Part::value, Part::value);
  set(Role::f_on_a, Part::value, k == ConstantKind::c2 ? Part::zero : Part::value);
  set(Role::g, Part::zero, Part::value);
  set(Role::z, Part::value, Part::zero);
  set(Role::y, Part::zero, Part::value);
  set(Role::a, Part::value, Part::zero);
  set(Role::b, Part::zero, Part::value);
  set(Role::ab, Part::eps, Part::eta);
  return t;
}

inline double part_value(Part p, double v) {
  switch (p) {
    case Part::zero: return 0.0;
    case Part::value: return v;
    case Part::eps: return (static_cast<int>(v) & 1) ? -1.0 : 1.0;
    case Part::eta: return (static_cast<int>(v) & 2) ? -1.0 : 1.0;
  }
  return 0.0;
}

inline bool greedy_kind(ConstantKind k) {
  return k == ConstantKind::quasi_greedy || k == ConstantKind::greedy || k == ConstantKind::almost_greedy ||
         k == ConstantKind::partially_greedy;
}

/// Objects of an instance recorded in a witness.
inline void record_objects(Witness& w, ConstantKind k, const Instance& inst) {
  const auto o = decode(inst.roles, inst.values);
  const Schema& s = kind_info(k).schema;
  auto has = [&](Role r) {
    return std::any_of(s.slots.begin(), s.slots.end(), [&](const RoleSlot& x) { return x.role == r; });
  };
  if (has(Role::f)) w.vectors["f"] = o.f;
  if (has(Role::g)) w.vectors["g"] = o.g;
  if (has(Role::z)) w.vectors["z"] = o.z;
  if (has(Role::y)) w.vectors["y"] = o.y;
  if (has(Role::a) || has(Role::ab) || has(Role::f_on_a)) w.sets["A"] = o.a;
  if (has(Role::b) || has(Role::ab)) w.sets["B"] = o.b;
  const bool signed_a = std::any_of(s.slots.begin(), s.slots.end(), [](const RoleSlot& x) {
    return (x.role == Role::a || x.role == Role::ab) &&
           (x.alphabet == Alphabet::sign || x.alphabet == Alphabet::sign_pair);
  });
  if (signed_a) {
    w.signs["eps"] = o.eps;
    w.signs["eta"] = o.eta;
  }
}

/// Evaluator for the set-and-vector kinds (everything except the greedy ones).
class LinearEvaluator {
 public:
  LinearEvaluator(const Space& space, ConstantKind kind)
      : space_(space), kind_(kind), parts_(role_parts(kind)), num_(space.dim()), den_(space.dim()),
        num_memo_(space.dim()), den_memo_(space.dim()) {}

  bool eval(const Instance& inst, double& num, double& den) {
    for (std::size_t i = 0; i < num_.size(); ++i) {
      const auto& p = parts_[static_cast<std::size_t>(inst.roles[i])];
      num_[i] = part_value(p.num, inst.values[i]);
      den_[i] = part_value(p.den, inst.values[i]);
    }
    num = num_memo_(space_, num_);
    den = den_memo_(space_, den_);
    return true;
  }

  Witness capture(const Instance& inst) const {
    Witness w;
    record_objects(w, kind_, inst);
    w.vectors["numerator"] = CoeffVector(num_);
    w.vectors["denominator"] = CoeffVector(den_);
    return w;
  }

 private:
  Space space_;
  ConstantKind kind_;
  std::array<RoleParts, 10> parts_;
  std::vector<double> num_, den_;
  MemoNorm num_memo_, den_memo_;
};

/// Evaluator for C_q, C_g, C_al and C_p: numerator f - G_m f over every
/// greedy set; the denominator depends only on (f, m) and is cached per group.
class GreedyEvaluator {
 public:
  GreedyEvaluator(const Space& space, ConstantKind kind)
      : space_(space), kind_(kind), num_(space.dim()), num_memo_(space.dim()) {}

  bool eval(const Instance& inst, double& num, double& den) {
    if (!cached_ || inst.unit != unit_ || inst.group != group_) {
      unit_ = inst.unit;
      group_ = inst.group;
      cached_ = true;
      compute_denominator(inst);
    }
    std::copy(inst.values.begin(), inst.values.end(), num_.begin());
    for (std::size_t i : inst.greedy_set) num_[i] = 0.0;
    num = num_memo_(space_, num_);
    den = den_norm_;
    return true;
  }

  Witness capture(const Instance& inst) const {
    Witness w;
    w.vectors["f"] = CoeffVector(inst.values);
    w.sets["greedy_set"] = IndexSet(std::vector<std::size_t>(inst.greedy_set.begin(), inst.greedy_set.end()));
    w.scalars["m"] = static_cast<double>(inst.m);
    if (kind_ == ConstantKind::almost_greedy || kind_ == ConstantKind::greedy) w.sets["B"] = inf_set_;
    if (kind_ == ConstantKind::partially_greedy) w.scalars["k"] = static_cast<double>(inf_k_);
    w.vectors["numerator"] = CoeffVector(num_);
    w.vectors["denominator"] = CoeffVector(den_);
    return w;
  }

 private:
  void compute_denominator(const Instance& inst) {
    const std::span<const double> f = inst.values;
    den_.assign(f.begin(), f.end());
    f_sup_ = coeff_sup(f);
    switch (kind_) {
      case ConstantKind::quasi_greedy:
        den_norm_ = space_.norm(f);
        return;
      case ConstantKind::partially_greedy: {
        std::vector<double> r(f.begin(), f.end());
        den_norm_ = space_.norm(std::span<const double>(r));
        inf_k_ = 0;
        for (std::size_t k = 1; k <= inst.m; ++k) {
          r[k - 1] = 0.0;
          const double v = space_.norm(std::span<const double>(r));
          if (v < den_norm_) {
            den_norm_ = v;
            den_ = r;
            inf_k_ = k;
          }
        }
        return;
      }
      case ConstantKind::almost_greedy:
      case ConstantKind::greedy:
        best_projection(f, inst.m);
        if (kind_ == ConstantKind::greedy && !space_.metadata().one_unconditional) refine_free_coefficients();
        return;
      default: throw Error("greedy evaluator used for a non-greedy kind");
    }
  }

  /// min over B subset of supp f, |B| <= m, of ||f - P_B f||.
  void best_projection(std::span<const double> f, std::size_t m) {
    std::vector<std::size_t> supp;
    for (std::size_t i = 0; i < f.size(); ++i)
      if (f[i] != 0.0) supp.push_back(i);
    std::vector<double> r(f.begin(), f.end());
    den_norm_ = space_.norm(f);
    inf_set_ = IndexSet();
    for (std::size_t k = 1; k <= std::min(m, supp.size()); ++k) {
      for_each_combination(supp, k, [&](std::span<const std::size_t> b) {
        for (std::size_t i : b) r[i] = 0.0;
        const double v = space_.norm(std::span<const double>(r));
        if (v < den_norm_) {
          den_norm_ = v;
          den_ = r;
          inf_set_ = IndexSet(std::vector<std::size_t>(b.begin(), b.end()));
        }
        for (std::size_t i : b) r[i] = f[i];
      });
    }
  }

  /// Compass search over the coefficients on inf_set_. Any point found only
  /// lowers the denominator toward the true infimum.
  void refine_free_coefficients() {
    if (inf_set_.empty()) return;
    double step = std::max(f_sup_, 1.0);
    const double stop = 1e-7 * step;
    std::vector<double> x = den_;
    double best = den_norm_;
    while (step > stop) {
      bool improved = false;
      for (std::size_t i : inf_set_) {
        for (double dir : {1.0, -1.0}) {
          const double keep = x[i];
          x[i] = keep + dir * step;
          const double v = space_.norm(std::span<const double>(x));
          if (v < best) {
            best = v;
            improved = true;
          } else {
            x[i] = keep;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
    den_ = x;
    den_norm_ = best;
  }

  Space space_;
  ConstantKind kind_;
  std::vector<double> num_, den_;
  MemoNorm num_memo_;
  double den_norm_ = 0.0, f_sup_ = 0.0;
  IndexSet inf_set_;
  std::size_t inf_k_ = 0;
  bool cached_ = false;
  std::uint64_t unit_ = 0, group_ = 0;
};

}  // namespace detail

// ---------------------------------------------------------------------------

struct ConstantEstimate {
  ConstantKind kind{};
  double value = 0.0;
  /// The space metadata supplies the constant and the search attains it.
  bool analytic_exact = false;
  std::optional<double> analytic;
  std::optional<Witness> witness;
  SearchConfig search;
  std::uint64_t instances = 0;
};

inline std::string_view exactness_name(const ConstantEstimate& e) {
  return e.analytic_exact ? "analytic-exact" : "grid-lower-bound";
}

inline ConstantEstimate estimate_constant(const Space& space, ConstantKind kind, const SearchConfig& cfg) {
  InstanceGenerator gen(kind_info(kind).schema, space.dim(), cfg);
  SearchResult res;
  if (detail::greedy_kind(kind))
    res = run_search(gen, [&] { return detail::GreedyEvaluator(space, kind); });
  else
    res = run_search(gen, [&] { return detail::LinearEvaluator(space, kind); });
  ConstantEstimate e;
  e.kind = kind;
  e.value = res.value;
  e.witness = std::move(res.witness);
  e.search = cfg;
  e.instances = res.instances;
  e.analytic = space.metadata().constant(kind);
  e.analytic_exact = e.analytic && e.witness && std::abs(e.value - *e.analytic) <= 1e-9;
  return e;
}

inline nlohmann::json to_json(const ConstantEstimate& e) {
  nlohmann::json j;
  j["kind"] = token(e.kind);
  j["symbol"] = symbol(e.kind);
  j["inequality"] = kind_info(e.kind).inequality;
  j["value"] = e.value;
  j["exactness"] = exactness_name(e);
  j["analytic"] = e.analytic ? nlohmann::json(*e.analytic) : nlohmann::json(nullptr);
  j["witness"] = e.witness ? to_json(*e.witness) : nlohmann::json(nullptr);
  j["search"] = to_json(e.search);
  j["instances"] = e.instances;
  return j;
}

}  // namespace greedybasis
