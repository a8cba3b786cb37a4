#pragma once
// Thresholding Greedy Algorithm: greedy sets, greedy sums, residual traces and
// the truncation operator.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"
#include "space.hpp"

namespace greedybasis {

namespace detail {

/// Coordinates ordered by decreasing modulus, ties by increasing index.
inline std::vector<std::size_t> greedy_order(std::span<const double> v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return std::abs(v[a]) > std::abs(v[b]); });
  return order;
}

/// Calls emit(std::span<const std::size_t>) for every k-subset of pool, in
/// lexicographic order of the pool positions.
template <class Emit>
void for_each_combination(const std::vector<std::size_t>& pool, std::size_t k, Emit&& emit) {
  if (k > pool.size()) return;
  std::vector<std::size_t> pos(k);
  std::iota(pos.begin(), pos.end(), std::size_t{0});
  std::vector<std::size_t> pick(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) pick[i] = pool[pos[i]];
    emit(std::span<const std::size_t>(pick));
    std::size_t i = k;
    while (i > 0 && pos[i - 1] == pool.size() - k + (i - 1)) --i;
    if (i == 0) return;
    ++pos[i - 1];
    for (std::size_t j = i; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
}

/// Visits every greedy set of order m of v (all tie resolutions). Each set is
/// passed sorted ascending; sets are produced in lexicographic order.
template <class Emit>
void for_each_greedy_set(std::span<const double> v, std::size_t m, Emit&& emit) {
  const std::size_t n = v.size();
  if (m == 0) {
    emit(std::span<const std::size_t>{});
    return;
  }
  const auto order = greedy_order(v);
  const double t = std::abs(v[order[m - 1]]);
  std::vector<std::size_t> forced, tied;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = std::abs(v[i]);
    if (a > t)
      forced.push_back(i);
    else if (a == t)
      tied.push_back(i);
  }
  std::vector<std::size_t> set;
  set.reserve(m);
  for_each_combination(tied, m - forced.size(), [&](std::span<const std::size_t> pick) {
    set.clear();
    std::merge(forced.begin(), forced.end(), pick.begin(), pick.end(), std::back_inserter(set));
    emit(std::span<const std::size_t>(set));
  });
}

}  // namespace detail

/// All greedy sets of order m, sorted lexicographically. Never empty.
inline std::vector<IndexSet> greedy_sets(const CoeffVector& v, std::size_t m) {
  if (m > v.dim()) throw IndexOutOfRange("greedy order exceeds dimension");
  std::vector<IndexSet> out;
  detail::for_each_greedy_set(v.values(), m, [&](std::span<const std::size_t> s) {
    out.emplace_back(std::vector<std::size_t>(s.begin(), s.end()));
  });
  std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return out;
}

/// min_{n in A}|v_n| >= max_{n not in A}|v_n|.
inline bool is_greedy_set(const CoeffVector& v, const IndexSet& a) {
  if (!a.fits(v.dim())) return false;
  double inside = HUGE_VAL, outside = 0.0;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (a.contains(i))
      inside = std::min(inside, std::abs(v[i]));
    else
      outside = std::max(outside, std::abs(v[i]));
  }
  return inside >= outside;
}

/// G_m(v) for the greedy set A; throws if A is not a greedy set of v.
inline CoeffVector greedy_sum(const CoeffVector& v, const IndexSet& a) {
  if (!is_greedy_set(v, a)) throw Error("greedy_sum: index set is not a greedy set of the vector");
  return project(v, a);
}

struct GreedyStep {
  std::size_t m = 0;
  IndexSet set;
  std::optional<double> threshold;  // min over the set; none for m = 0
  double residual_norm = 0.0;
};

struct GreedyTrace {
  CoeffVector input;
  std::vector<GreedyStep> steps;
};

/// Runs the TGA for m = 0..steps, breaking ties by smallest index.
inline GreedyTrace tga_run(const Space& space, const CoeffVector& v, std::size_t steps) {
  if (v.dim() != space.dim()) throw DimensionMismatch(space.dim(), v.dim());
  if (steps > v.dim()) throw IndexOutOfRange("trace length exceeds dimension");
  const auto order = detail::greedy_order(v.values());
  GreedyTrace trace{v, {}};
  std::vector<double> residual = v.data();
  std::vector<std::size_t> chosen;
  for (std::size_t m = 0; m <= steps; ++m) {
    GreedyStep step;
    step.m = m;
    if (m > 0) {
      const std::size_t i = order[m - 1];
      chosen.push_back(i);
      residual[i] = 0.0;
      step.threshold = std::abs(v[i]);
    }
    step.set = IndexSet(chosen);
    step.residual_norm = space.norm(std::span<const double>(residual));
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

/// Positive truncation level alpha.
class TruncationLevel {
 public:
  explicit TruncationLevel(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw Error("truncation level must be positive and finite");
  }
  double value() const { return alpha_; }

 private:
  double alpha_;
};

/// T_alpha: coordinates with |v_n| > alpha become alpha sign(v_n).
inline void truncate_into(std::span<const double> v, double alpha, std::span<double> out) {
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::abs(v[i]) > alpha ? std::copysign(alpha, v[i]) : v[i];
}

inline CoeffVector truncate(const CoeffVector& v, TruncationLevel alpha) {
  std::vector<double> out(v.dim());
  truncate_into(v.values(), alpha.value(), out);
  return CoeffVector(std::move(out));
}

/// Shortest decimal that round-trips to the same double.
inline std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

// ---------------------------------------------------------------------------
// Trace serialization

inline nlohmann::json to_json(const GreedyTrace& t) {
  nlohmann::json j;
  j["input"] = t.input.data();
  auto steps = nlohmann::json::array();
  for (const auto& s : t.steps) {
    auto set = nlohmann::json::array();
    for (std::size_t i : s.set) set.push_back(i + 1);
    steps.push_back({{"m", s.m},
                     {"set", std::move(set)},
                     {"threshold", s.threshold ? nlohmann::json(*s.threshold) : nlohmann::json(nullptr)},
                     {"residual_norm", s.residual_norm}});
  }
  j["steps"] = std::move(steps);
  return j;
}

inline std::string trace_csv(const GreedyTrace& t) {
  std::string out = "m,residual_norm\n";
  for (const auto& s : t.steps) out += std::to_string(s.m) + "," + format_double(s.residual_norm) + "\n";
  return out;
}

}  // namespace greedybasis
