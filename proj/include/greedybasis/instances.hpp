#pragma once
// Table-driven instance generation for the greedy-type constants.
//
// Every constant is a worst-case ratio ||left|| / ||right|| over a family of
// admissible instances. An instance assigns each coordinate a role (belongs
// to f, to g, to A, ...) and a value drawn from the role's alphabet; the
// side conditions of each definition are encoded in a Schema. Roles are
// disjoint per coordinate, which is exactly the disjointness required by the
// definitions (f.g = 0, supp(f+g) n (A u B) = 0, ...). Democracy-type kinds
// allow A and B to overlap through the `ab` role.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "core.hpp"
#include "greedy.hpp"
#include "kinds.hpp"
#include "search.hpp"

namespace greedybasis {

enum class Role : std::uint8_t {
  none,
  f,       // coordinate of f
  f_on_a,  // coordinate of f that also lies in A (K, C_2)
  g,
  z,
  y,
  a,
  b,
  ab,      // in A and in B (democracy only)
  j,       // convexity lemma coordinate with free coefficient a_j
};

enum class Alphabet : std::uint8_t {
  small_signed,   // +-j/L, j = 1..L
  large_signed,   // small magnitudes and the configured large ones, both signs
  coupled,        // large_signed restricted to magnitude >= ||f||_inf
  unit,           // +1
  sign,           // +-1
  sign_pair,      // 0..3: bit 0 flips the A sign, bit 1 the B sign
  pair_plus,      // 0: both signs +1
  convex_unit,    // j/L, j = 0..L
  convex_signed,  // j/L, j = -L..L
};

enum class Cardinality : std::uint8_t { any, a_le_b, a_eq_b, a_nonempty };

enum class Order : std::uint8_t {
  none,
  a_before_b,    // A < B
  a_before_f_b,  // A < supp(f) u B
  a_before_g_b,  // A < supp(g) u B
  z_before_f_y,  // supp(z) < supp(f + y)
};

/// |D| >= |.| where D = {n in supp(y) : |y_n| = 1}.
enum class Dominance : std::uint8_t { none, ones_cover_z, ones_cover_a };

/// Extra enumeration inside each coordinate assignment.
enum class Sub : std::uint8_t {
  none,
  greedy,      // every order m <= |supp f| and every greedy set of that order
  truncation,  // alpha in {|f_n|} and midpoints of consecutive values
};

struct RoleSlot {
  Role role;
  Alphabet alphabet;
};

struct Schema {
  std::vector<RoleSlot> slots;
  Cardinality cardinality = Cardinality::any;
  bool b_nonempty = false;
  Order order = Order::none;
  Dominance dominance = Dominance::none;
  Sub sub = Sub::none;
  /// Quantifier description for reports.
  std::string_view quantifiers;
};

struct KindInfo {
  ConstantKind kind;
  std::string_view inequality;
  Schema schema;
};

namespace detail {

inline std::vector<KindInfo> make_kind_table() {
  using R = Role;
  using A = Alphabet;
  std::vector<KindInfo> t;
  const RoleSlot f{R::f, A::small_signed};
  t.push_back({ConstantKind::quasi_greedy, "||f - G_m f|| <= C ||f||",
               {{f}, Cardinality::any, false, Order::none, Dominance::none, Sub::greedy,
                "f on the grid; all m <= |supp f|; all greedy sets"}});
  t.push_back({ConstantKind::unconditional, "||P_A f|| <= C ||f||",
               {{f, {R::f_on_a, A::small_signed}}, Cardinality::any, false, Order::none, Dominance::none, Sub::none,
                "f on the grid; all A subset of supp f"}});
  t.push_back({ConstantKind::greedy, "||f - G_m f|| <= C inf{||f - sum_B a_n e_n|| : |B| <= m}",
               {{f}, Cardinality::any, false, Order::none, Dominance::none, Sub::greedy,
                "f on the grid; all m; all greedy sets; inf over |B| <= m with free coefficients"}});
  t.push_back({ConstantKind::almost_greedy, "||f - G_m f|| <= C inf{||f - P_B f|| : |B| <= m}",
               {{f}, Cardinality::any, false, Order::none, Dominance::none, Sub::greedy,
                "f on the grid; all m; all greedy sets; exact inf over |B| <= m"}});
  t.push_back({ConstantKind::partially_greedy, "||f - G_m f|| <= C inf_{k<=m} ||f - S_k f||",
               {{f}, Cardinality::any, false, Order::none, Dominance::none, Sub::greedy,
                "f on the grid; all m; all greedy sets; exact inf over k <= m"}});

  const RoleSlot au{R::a, A::unit}, bu{R::b, A::unit}, as{R::a, A::sign}, bs{R::b, A::sign};
  t.push_back({ConstantKind::democracy, "||1_A|| <= C ||1_B||, |A| <= |B|",
               {{au, bu, {R::ab, A::pair_plus}}, Cardinality::a_le_b, true, Order::none, Dominance::none, Sub::none,
                "all A, B with |A| <= |B|"}});
  t.push_back({ConstantKind::conservative, "||1_A|| <= C ||1_B||, |A| <= |B|, A < B",
               {{au, bu}, Cardinality::a_le_b, true, Order::a_before_b, Dominance::none, Sub::none,
                "all A < B with |A| <= |B|"}});
  t.push_back({ConstantKind::super_democracy, "||1_{eps A}|| <= C ||1_{eta B}||, |A| <= |B|",
               {{as, bs, {R::ab, A::sign_pair}}, Cardinality::a_le_b, true, Order::none, Dominance::none, Sub::none,
                "all A, B with |A| <= |B|; all signs"}});
  t.push_back({ConstantKind::super_conservative, "||1_{eps A}|| <= C ||1_{eta B}||, |A| <= |B|, A < B",
               {{as, bs}, Cardinality::a_le_b, true, Order::a_before_b, Dominance::none, Sub::none,
                "all A < B with |A| <= |B|; all signs"}});
  t.push_back({ConstantKind::slc, "||f + 1_{eps A}|| <= C ||f + 1_{eps' B}||",
               {{f, as, bs}, Cardinality::a_le_b, false, Order::none, Dominance::none, Sub::none,
                "disjoint f, A, B; |A| <= |B|; ||f||_inf <= 1; all signs"}});
  t.push_back({ConstantKind::partial_slc, "||f + 1_{eps A}|| <= C ||f + 1_{eps' B}||, A < supp(f) u B",
               {{f, as, bs}, Cardinality::a_le_b, false, Order::a_before_f_b, Dominance::none, Sub::none,
                "as Delta with A < supp(f) u B"}});

  const RoleSlot gc{R::g, A::coupled};
  t.push_back({ConstantKind::property_f, "||f + 1_A|| <= C ||f + g + 1_B||",
               {{f, gc, au, bu}, Cardinality::a_le_b, false, Order::none, Dominance::none, Sub::none,
                "disjoint f, g, A, B; |A| <= |B|; ||f||_inf <= min(1, inf |g|)"}});
  t.push_back({ConstantKind::property_fp, "||f + 1_A|| <= C ||f + g + 1_B||, A < supp(g) u B",
               {{f, gc, au, bu}, Cardinality::a_le_b, false, Order::a_before_g_b, Dominance::none, Sub::none,
                "as F with A < supp(g) u B"}});
  const RoleSlot z{R::z, A::small_signed}, yc{R::y, A::coupled};
  t.push_back({ConstantKind::property_fstar, "||f + z|| <= C ||f + y||",
               {{f, z, yc}, Cardinality::any, false, Order::none, Dominance::ones_cover_z, Sub::none,
                "disjoint f, z, y; ||f||_inf, ||z||_inf <= 1; |{|y_n| = 1}| >= |supp z|; inf |y| >= ||f||_inf"}});
  t.push_back({ConstantKind::property_fpstar, "||f + z|| <= C ||f + y||, supp(z) < supp(f + y)",
               {{f, z, yc}, Cardinality::any, false, Order::z_before_f_y, Dominance::ones_cover_z, Sub::none,
                "as F* with supp(z) < supp(f + y)"}});
  t.push_back({ConstantKind::property_q, "||f + 1_A|| <= C ||f + g + 1_B||, |A| = |B|",
               {{f, {R::g, A::large_signed}, au, bu}, Cardinality::a_eq_b, false, Order::none, Dominance::none,
                Sub::none, "disjoint f, g, A, B; |A| = |B|; ||f||_inf <= 1"}});
  t.push_back({ConstantKind::c1, "||f + 1_{eps A}|| <= C ||f + g + 1_{eta B}||",
               {{f, gc, as, bs}, Cardinality::a_le_b, false, Order::none, Dominance::none, Sub::none,
                "as F with all signs on A and B"}});
  t.push_back({ConstantKind::c2, "||f|| <= C ||f - P_A f + y||",
               {{f, {R::f_on_a, A::small_signed}, yc}, Cardinality::any, false, Order::none, Dominance::ones_cover_a,
                Sub::none, "f.y = 0; A subset of supp f; ||f||_inf <= min(1, inf |y|); |{|y_n| = 1}| >= |A|"}});
  return t;
}

}  // namespace detail

inline const KindInfo& kind_info(ConstantKind k) {
  static const std::vector<KindInfo> table = detail::make_kind_table();
  return table[static_cast<std::size_t>(k)];
}

/// Auxiliary instance families for the pointwise lemma checks.
enum class LemmaProbe { convex_unit, convex_signed, sign_flip, sign_invariance, truncation };

inline Schema lemma_schema(LemmaProbe p) {
  using R = Role;
  using A = Alphabet;
  switch (p) {
    case LemmaProbe::convex_unit:
      return {{{R::g, A::large_signed}, {R::j, A::convex_unit}}, Cardinality::any, false, Order::none,
              Dominance::none, Sub::none, "g on the grid; J disjoint from supp g; a_j in [0,1] grid"};
    case LemmaProbe::convex_signed:
      return {{{R::g, A::large_signed}, {R::j, A::convex_signed}}, Cardinality::any, false, Order::none,
              Dominance::none, Sub::none, "g on the grid; J disjoint from supp g; a_j in [-1,1] grid"};
    case LemmaProbe::sign_flip:
      return {{{R::f, A::large_signed}, {R::a, A::unit}}, Cardinality::a_nonempty, false, Order::none,
              Dominance::none, Sub::none, "f on the grid; A disjoint from supp f"};
    case LemmaProbe::sign_invariance:
      return {{{R::a, A::sign_pair}}, Cardinality::a_nonempty, false, Order::none, Dominance::none, Sub::none,
              "all nonempty A; all sign pairs eps, eta"};
    case LemmaProbe::truncation:
      return {{{R::f, A::small_signed}}, Cardinality::any, false, Order::none, Dominance::none, Sub::truncation,
              "f on the grid; alpha at |f_n| and midpoints"};
  }
  return {};
}

// ---------------------------------------------------------------------------

/// One enumerated instance. Spans point into enumerator-owned buffers and are
/// valid only during the visit.
struct Instance {
  std::span<const Role> roles;
  std::span<const double> values;
  std::size_t m = 0;
  std::span<const std::size_t> greedy_set;
  double alpha = 0.0;
  /// Distinguishes (coordinate assignment, m) pairs within a unit.
  std::uint64_t group = 0;
  std::uint64_t unit = 0;
  std::uint64_t local = 0;
};

namespace detail {

inline bool in_a(Role r) { return r == Role::a || r == Role::ab || r == Role::f_on_a; }
inline bool in_b(Role r) { return r == Role::b || r == Role::ab; }
inline bool in_f(Role r) { return r == Role::f || r == Role::f_on_a; }

/// Object membership bits used for per-object support caps.
enum : unsigned { kObjF = 1, kObjG = 2, kObjZ = 4, kObjY = 8, kObjA = 16, kObjB = 32, kObjJ = 64 };

inline unsigned objects_of(Role r) {
  switch (r) {
    case Role::none: return 0;
    case Role::f: return kObjF;
    case Role::f_on_a: return kObjF | kObjA;
    case Role::g: return kObjG;
    case Role::z: return kObjZ;
    case Role::y: return kObjY;
    case Role::a: return kObjA;
    case Role::b: return kObjB;
    case Role::ab: return kObjA | kObjB;
    case Role::j: return kObjJ;
  }
  return 0;
}

/// max over coordinates satisfying pred; -1 if none.
template <class Pred>
long max_index(std::span<const Role> roles, Pred pred) {
  for (std::size_t i = roles.size(); i-- > 0;)
    if (pred(roles[i])) return static_cast<long>(i);
  return -1;
}
template <class Pred>
long min_index(std::span<const Role> roles, Pred pred) {
  for (std::size_t i = 0; i < roles.size(); ++i)
    if (pred(roles[i])) return static_cast<long>(i);
  return -1;
}
/// X < Y with the empty-set convention.
template <class P, class Q>
bool before(std::span<const Role> roles, P left, Q right) {
  const long l = max_index(roles, left), r = min_index(roles, right);
  return l < 0 || r < 0 || l < r;
}

inline bool structural_ok(const Schema& s, std::span<const Role> roles) {
  std::size_t na = 0, nb = 0, nz = 0, ny = 0, nfa = 0;
  for (Role r : roles) {
    na += in_a(r);
    nb += in_b(r);
    nz += r == Role::z;
    ny += r == Role::y;
    nfa += r == Role::f_on_a;
  }
  switch (s.cardinality) {
    case Cardinality::any: break;
    case Cardinality::a_le_b:
      if (na > nb) return false;
      break;
    case Cardinality::a_eq_b:
      if (na != nb) return false;
      break;
    case Cardinality::a_nonempty:
      if (na == 0) return false;
      break;
  }
  if (s.b_nonempty && nb == 0) return false;
  // |D| <= |supp y| is necessary for the dominance condition.
  if (s.dominance == Dominance::ones_cover_z && ny < nz) return false;
  if (s.dominance == Dominance::ones_cover_a && ny < nfa) return false;
  switch (s.order) {
    case Order::none: return true;
    case Order::a_before_b: return before(roles, in_a, in_b);
    case Order::a_before_f_b:
      return before(roles, in_a, [](Role r) { return in_f(r) || in_b(r); });
    case Order::a_before_g_b:
      return before(roles, in_a, [](Role r) { return r == Role::g || in_b(r); });
    case Order::z_before_f_y:
      return before(roles, [](Role r) { return r == Role::z; }, [](Role r) { return in_f(r) || r == Role::y; });
  }
  return true;
}

inline bool values_ok(const Schema& s, std::span<const Role> roles, std::span<const double> values) {
  if (s.dominance == Dominance::none) return true;
  std::size_t ones = 0, need = 0;
  for (std::size_t i = 0; i < roles.size(); ++i) {
    if (roles[i] == Role::y && std::abs(values[i]) == 1.0) ++ones;
    if (s.dominance == Dominance::ones_cover_z ? roles[i] == Role::z : roles[i] == Role::f_on_a) ++need;
  }
  return ones >= need;
}

/// Fill order: f-type coordinates first (they fix the coupling threshold),
/// coupled ones after them, free convex coefficients last so that they vary
/// fastest.
inline int phase(const RoleSlot& s) {
  if (s.alphabet == Alphabet::coupled) return 2;
  if (s.role == Role::j) return 3;
  if (in_f(s.role)) return 0;
  return 1;
}

}  // namespace detail

/// The grid alphabets for one search configuration.
struct Grid {
  std::vector<double> small_mags;  // ascending
  std::vector<double> large_mags;  // ascending, includes small_mags

  explicit Grid(const SearchConfig& cfg) {
    for (int j = 1; j <= cfg.levels; ++j) small_mags.push_back(static_cast<double>(j) / cfg.levels);
    large_mags = small_mags;
    for (double m : cfg.large_magnitudes) large_mags.push_back(m);
    std::sort(large_mags.begin(), large_mags.end());
    large_mags.erase(std::unique(large_mags.begin(), large_mags.end()), large_mags.end());
    levels = cfg.levels;
  }

  static std::vector<double> signed_values(const std::vector<double>& mags, double floor = 0.0) {
    std::vector<double> out;
    for (double m : mags)
      if (m >= floor) {
        out.push_back(m);
        out.push_back(-m);
      }
    return out;
  }

  std::vector<double> values(Alphabet a) const {
    switch (a) {
      case Alphabet::small_signed: return signed_values(small_mags);
      case Alphabet::large_signed:
      case Alphabet::coupled: return signed_values(large_mags);
      case Alphabet::unit: return {1.0};
      case Alphabet::sign: return {1.0, -1.0};
      case Alphabet::sign_pair: return {0.0, 1.0, 2.0, 3.0};
      case Alphabet::pair_plus: return {0.0};
      case Alphabet::convex_unit: {
        std::vector<double> out;
        for (int j = 0; j <= levels; ++j) out.push_back(static_cast<double>(j) / levels);
        return out;
      }
      case Alphabet::convex_signed: {
        std::vector<double> out;
        for (int j = -levels; j <= levels; ++j) out.push_back(static_cast<double>(j) / levels);
        return out;
      }
    }
    return {};
  }

  int levels = 1;
};

/// Enumerates (or samples) the admissible instances of a schema in a fixed
/// dimension. Work is split into units; a unit is a coordinate-role
/// assignment in exhaustive mode and one sample in sampled mode. Visit order
/// inside a unit is deterministic.
class InstanceGenerator {
 public:
  InstanceGenerator(Schema schema, std::size_t dim, SearchConfig cfg)
      : schema_(std::move(schema)), dim_(dim), cfg_(std::move(cfg)), grid_(cfg_) {
    cfg_.check();
    build_units();
  }

  std::size_t dim() const { return dim_; }
  const Schema& schema() const { return schema_; }
  const SearchConfig& config() const { return cfg_; }

  std::uint64_t unit_count() const {
    return cfg_.mode == SearchMode::exhaustive ? units_.size() : (units_.empty() ? 0 : cfg_.samples);
  }

  /// Calls visit(const Instance&) for every instance of unit u; returns the
  /// number of instances visited.
  template <class Visit>
  std::uint64_t run_unit(std::uint64_t u, Visit&& visit) const {
    UnitState st;
    st.unit = u;
    st.values.assign(dim_, 0.0);
    if (cfg_.mode == SearchMode::exhaustive) {
      st.roles = units_[u];
      prepare(st);
      fill(st, 0, visit);
    } else {
      auto rng = sample_rng(cfg_.seed, u);
      st.roles = units_[rng() % units_.size()];
      prepare(st);
      for (int attempt = 0; attempt < 64; ++attempt) {
        double threshold = 0.0;
        for (std::size_t k = 0; k < st.order.size(); ++k) {
          const std::size_t pos = st.order[k];
          if (k == st.first_coupled) threshold = f_sup(st);
          const auto& alph = st.alphabets[k].empty() ? coupled_alphabet(threshold) : st.alphabets[k];
          st.values[pos] = alph[rng() % alph.size()];
        }
        if (detail::values_ok(schema_, st.roles, st.values)) {
          emit(st, visit);
          break;
        }
      }
    }
    return st.local;
  }

  /// Serial walk over every instance.
  template <class Visit>
  std::uint64_t for_each(Visit&& visit) const {
    std::uint64_t total = 0;
    for (std::uint64_t u = 0; u < unit_count(); ++u) total += run_unit(u, visit);
    return total;
  }

 private:
  struct UnitState {
    std::vector<Role> roles;
    std::vector<double> values;
    std::vector<std::size_t> order;              // coordinates with a role, in fill order
    std::vector<std::vector<double>> alphabets;  // per order slot; empty for coupled slots
    std::size_t first_coupled = SIZE_MAX;
    std::uint64_t unit = 0, local = 0, group = 0;
  };

  void build_units() {
    std::vector<Role> roles(dim_, Role::none);
    std::array<std::size_t, 7> counts{};
    build_units_rec(roles, counts, 0);
  }

  void build_units_rec(std::vector<Role>& roles, std::array<std::size_t, 7>& counts, std::size_t i) {
    if (i == dim_) {
      if (detail::structural_ok(schema_, roles)) units_.push_back(roles);
      return;
    }
    roles[i] = Role::none;
    build_units_rec(roles, counts, i + 1);
    for (const auto& slot : schema_.slots) {
      const unsigned obj = detail::objects_of(slot.role);
      bool fits = true;
      for (unsigned bit = 0; bit < 7; ++bit)
        if ((obj >> bit) & 1u) fits = fits && counts[bit] < cfg_.max_support;
      if (!fits) continue;
      for (unsigned bit = 0; bit < 7; ++bit) counts[bit] += (obj >> bit) & 1u;
      roles[i] = slot.role;
      build_units_rec(roles, counts, i + 1);
      for (unsigned bit = 0; bit < 7; ++bit) counts[bit] -= (obj >> bit) & 1u;
    }
    roles[i] = Role::none;
  }

  const RoleSlot& slot_of(Role r) const {
    for (const auto& s : schema_.slots)
      if (s.role == r) return s;
    throw Error("role not in schema");
  }

  void prepare(UnitState& st) const {
    std::vector<std::pair<int, std::size_t>> keyed;
    for (std::size_t i = 0; i < dim_; ++i)
      if (st.roles[i] != Role::none) keyed.emplace_back(detail::phase(slot_of(st.roles[i])), i);
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [ph, i] : keyed) {
      const auto& slot = slot_of(st.roles[i]);
      if (slot.alphabet == Alphabet::coupled && st.first_coupled == SIZE_MAX) st.first_coupled = st.order.size();
      st.order.push_back(i);
      st.alphabets.push_back(slot.alphabet == Alphabet::coupled ? std::vector<double>{} : grid_.values(slot.alphabet));
    }
  }

  double f_sup(const UnitState& st) const {
    double s = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
      if (detail::in_f(st.roles[i])) s = std::max(s, std::abs(st.values[i]));
    return s;
  }

  std::vector<double> coupled_alphabet(double threshold) const { return Grid::signed_values(grid_.large_mags, threshold); }

  template <class Visit>
  void fill(UnitState& st, std::size_t k, Visit& visit) const {
    if (k == st.order.size()) {
      if (detail::values_ok(schema_, st.roles, st.values)) emit(st, visit);
      return;
    }
    const std::size_t pos = st.order[k];
    if (st.alphabets[k].empty()) {
      // First coupled slot fixes the alphabet for all later coupled slots.
      const auto alph = coupled_alphabet(f_sup(st));
      fill_coupled(st, k, alph, visit);
      return;
    }
    for (double x : st.alphabets[k]) {
      st.values[pos] = x;
      fill(st, k + 1, visit);
    }
    st.values[pos] = 0.0;
  }

  template <class Visit>
  void fill_coupled(UnitState& st, std::size_t k, const std::vector<double>& alph, Visit& visit) const {
    if (k == st.order.size() || !st.alphabets[k].empty()) {
      fill(st, k, visit);
      return;
    }
    const std::size_t pos = st.order[k];
    for (double x : alph) {
      st.values[pos] = x;
      fill_coupled(st, k + 1, alph, visit);
    }
    st.values[pos] = 0.0;
  }

  template <class Visit>
  void emit(UnitState& st, Visit& visit) const {
    Instance inst;
    inst.roles = st.roles;
    inst.values = st.values;
    inst.unit = st.unit;
    switch (schema_.sub) {
      case Sub::none:
        inst.group = st.group++;
        inst.local = st.local++;
        visit(static_cast<const Instance&>(inst));
        break;
      case Sub::greedy: {
        std::size_t support = 0;
        for (double x : st.values) support += x != 0.0;
        for (std::size_t m = 0; m <= support; ++m) {
          inst.m = m;
          inst.group = st.group++;
          detail::for_each_greedy_set(st.values, m, [&](std::span<const std::size_t> set) {
            inst.greedy_set = set;
            inst.local = st.local++;
            visit(static_cast<const Instance&>(inst));
          });
        }
        break;
      }
      case Sub::truncation: {
        std::vector<double> mags;
        for (double x : st.values)
          if (x != 0.0) mags.push_back(std::abs(x));
        std::sort(mags.begin(), mags.end());
        mags.erase(std::unique(mags.begin(), mags.end()), mags.end());
        std::vector<double> alphas;
        for (std::size_t i = 0; i < mags.size(); ++i) {
          if (i > 0) alphas.push_back(0.5 * (mags[i - 1] + mags[i]));
          alphas.push_back(mags[i]);
        }
        inst.group = st.group++;
        for (double a : alphas) {
          inst.alpha = a;
          inst.local = st.local++;
          visit(static_cast<const Instance&>(inst));
        }
        break;
      }
    }
  }

  Schema schema_;
  std::size_t dim_;
  SearchConfig cfg_;
  Grid grid_;
  std::vector<std::vector<Role>> units_;
};

// ---------------------------------------------------------------------------
// Named objects of an instance

struct InstanceObjects {
  CoeffVector f, g, z, y;
  IndexSet a, b, j;
  SignPattern eps, eta;
  std::vector<double> j_coeffs;  // a_j on J, in index order
};

/// Decodes the coordinate roles and values of an instance into the objects
/// appearing in the definitions.
inline InstanceObjects decode(std::span<const Role> roles, std::span<const double> values) {
  const std::size_t n = roles.size();
  std::vector<double> f(n, 0.0), g(n, 0.0), z(n, 0.0), y(n, 0.0);
  std::vector<std::size_t> a, b, j;
  std::vector<int> eps, eta;
  std::vector<double> jc;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = values[i];
    switch (roles[i]) {
      case Role::none: break;
      case Role::f: f[i] = v; break;
      case Role::f_on_a:
        f[i] = v;
        a.push_back(i);
        eps.push_back(1);
        break;
      case Role::g: g[i] = v; break;
      case Role::z: z[i] = v; break;
      case Role::y: y[i] = v; break;
      case Role::a:
        a.push_back(i);
        eps.push_back(v < 0 ? -1 : 1);
        break;
      case Role::b:
        b.push_back(i);
        eta.push_back(v < 0 ? -1 : 1);
        break;
      case Role::ab: {
        const int code = static_cast<int>(v);
        a.push_back(i);
        b.push_back(i);
        eps.push_back(code & 1 ? -1 : 1);
        eta.push_back(code & 2 ? -1 : 1);
        break;
      }
      case Role::j:
        j.push_back(i);
        jc.push_back(v);
        break;
    }
  }
  InstanceObjects o;
  o.f = CoeffVector(std::move(f));
  o.g = CoeffVector(std::move(g));
  o.z = CoeffVector(std::move(z));
  o.y = CoeffVector(std::move(y));
  o.a = IndexSet(a);
  o.b = IndexSet(b);
  o.j = IndexSet(j);
  o.eps = SignPattern(o.a, std::move(eps));
  o.eta = SignPattern(o.b, std::move(eta));
  o.j_coeffs = std::move(jc);
  return o;
}

/// Visits every admissible instance of `kind` in dimension dim.
template <class Visit>
std::uint64_t enumerate_instances(ConstantKind kind, std::size_t dim, const SearchConfig& cfg, Visit&& visit) {
  InstanceGenerator gen(kind_info(kind).schema, dim, cfg);
  return gen.for_each(visit);
}

// ---------------------------------------------------------------------------
// Admissibility predicates, checked independently of the generator.

/// Side conditions of Property (F) (and (F_p) when partial).
inline bool valid_F_instance(const CoeffVector& f, const CoeffVector& g, const IndexSet& a, const IndexSet& b,
                             bool partial) {
  if (f.dim() != g.dim()) throw DimensionMismatch(f.dim(), g.dim());
  if (!a.fits(f.dim()) || !b.fits(f.dim())) return false;
  if (a.size() > b.size()) return false;
  if (!disjoint(a, b)) return false;
  if (!disjoint_supports(f, g)) return false;
  const IndexSet fg = set_union(f.support(), g.support());
  if (!disjoint(fg, set_union(a, b))) return false;
  const double sup_f = coeff_sup(f);
  if (sup_f > 1.0) return false;
  if (sup_f > coeff_inf_on_support(g)) return false;
  if (partial && !precedes(a, set_union(g.support(), b))) return false;
  return true;
}

/// Side conditions i)-iv) of Property (F*) (and (F_p*) when partial).
inline bool valid_Fstar_instance(const CoeffVector& f, const CoeffVector& z, const CoeffVector& y, bool partial) {
  if (f.dim() != z.dim()) throw DimensionMismatch(f.dim(), z.dim());
  if (f.dim() != y.dim()) throw DimensionMismatch(f.dim(), y.dim());
  if (!disjoint_supports(f, z) || !disjoint_supports(f, y) || !disjoint_supports(z, y)) return false;
  if (std::max(coeff_sup(f), coeff_sup(z)) > 1.0) return false;
  std::size_t ones = 0;
  for (double v : y.values()) ones += std::abs(v) == 1.0;
  if (ones < z.support().size()) return false;
  if (coeff_inf_on_support(y) < coeff_sup(f)) return false;
  if (partial && !precedes(z.support(), (f + y).support())) return false;
  return true;
}

}  // namespace greedybasis
