#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "greedybasis/catalog.hpp"
#include "greedybasis/greedy.hpp"
#include "greedybasis/properties.hpp"

using namespace greedybasis;
using CK = ConstantKind;

namespace {

SearchConfig small_cfg(int levels = 2, std::size_t support = 3) {
  SearchConfig cfg;
  cfg.levels = levels;
  cfg.max_support = support;
  return cfg;
}

std::vector<Space> test_spaces(std::size_t n) {
  return {make_space(lp_spec(n, 1.0)), make_space(lp_spec(n, 2.0)), make_space(weighted_l1_spec(linear_weights(n))),
          make_space(lindenstrauss_spec(n)), make_space(l1_l2_sum_spec(n))};
}

const std::vector<CK> kAllKinds = {CK::quasi_greedy,     CK::unconditional,      CK::greedy,
                                   CK::almost_greedy,    CK::partially_greedy,   CK::democracy,
                                   CK::conservative,     CK::super_democracy,    CK::super_conservative,
                                   CK::slc,              CK::partial_slc,        CK::property_f,
                                   CK::property_fp,      CK::property_fstar,     CK::property_fpstar,
                                   CK::property_q,       CK::c1,                 CK::c2};

std::string label(const Space& sp) { return sp.descriptor().dump(); }

}  // namespace

// ===== ADMISSIBILITY PREDICATES =====

TEST(ValidF, Examples) {
  const CoeffVector f{0.5, 0, 0, 0}, g{0, 2, 0, 0};
  EXPECT_TRUE(valid_F_instance(f, g, IndexSet{2}, IndexSet{3}, false));
  EXPECT_FALSE(valid_F_instance(CoeffVector{1.5, 0, 0, 0}, g, IndexSet{2}, IndexSet{3}, false));
  EXPECT_FALSE(valid_F_instance(CoeffVector{0.5, 0, 0, 0}, CoeffVector{0, 2, 0, 0}, IndexSet{3}, IndexSet{2}, true));
  EXPECT_FALSE(valid_F_instance(CoeffVector{0.5, 0, 0, 0}, CoeffVector{0, 0, 2, 0}, IndexSet{3}, IndexSet{1}, true));
}

TEST(ValidF, SideConditions) {
  const CoeffVector f{0.5, 0, 0, 0}, g{0, 2, 0, 0};
  EXPECT_FALSE(valid_F_instance(f, g, IndexSet{2, 3}, IndexSet{3}, false));      // |A| > |B|
  EXPECT_FALSE(valid_F_instance(f, g, IndexSet{3}, IndexSet{3}, false));         // A meets B
  EXPECT_FALSE(valid_F_instance(f, g, IndexSet{1}, IndexSet{3}, false));         // A meets supp g
  EXPECT_FALSE(valid_F_instance(f, CoeffVector{0, 0.25, 0, 0}, IndexSet{2}, IndexSet{3}, false));
  EXPECT_TRUE(valid_F_instance(f, g, IndexSet{}, IndexSet{}, false));
  EXPECT_THROW(valid_F_instance(f, CoeffVector{0, 1}, IndexSet{}, IndexSet{}, false), DimensionMismatch);
}

TEST(ValidFstar, Examples) {
  const CoeffVector f{0.5, 0, 0, 0}, z{0, 1, 0, 0};
  EXPECT_TRUE(valid_Fstar_instance(f, z, CoeffVector{0, 0, 1, 2}, false));
  EXPECT_FALSE(valid_Fstar_instance(f, z, CoeffVector{0, 0, 0.9, 2}, false));
  EXPECT_TRUE(valid_Fstar_instance(f, CoeffVector(4), CoeffVector{0, 0, 0.5, 2}, false));
  EXPECT_TRUE(valid_Fstar_instance(f, CoeffVector(4), CoeffVector{0, 0, 0.5, 2}, true));
}

TEST(ValidFstar, PartialOrdering) {
  EXPECT_TRUE(valid_Fstar_instance(CoeffVector{0, 0, 0.5}, CoeffVector{1, 0, 0}, CoeffVector{0, 1, 0}, true));
  EXPECT_FALSE(valid_Fstar_instance(CoeffVector{0.5, 0, 0}, CoeffVector{0, 1, 0}, CoeffVector{0, 0, 1}, true));
  EXPECT_FALSE(valid_Fstar_instance(CoeffVector{0.5, 0, 0}, CoeffVector{0.5, 1, 0}, CoeffVector{0, 0, 1}, false));
}

// ===== ENUMERATION =====

TEST(Enumerate, EveryFInstanceIsValid) {
  for (auto [kind, partial] : {std::pair{CK::property_f, false}, std::pair{CK::property_fp, true},
                               std::pair{CK::c1, false}}) {
    std::uint64_t seen = 0;
    enumerate_instances(kind, 4, small_cfg(2, 4), [&](const Instance& inst) {
      const auto o = decode(inst.roles, inst.values);
      EXPECT_TRUE(valid_F_instance(o.f, o.g, o.a, o.b, partial));
      ++seen;
    });
    EXPECT_GT(seen, 0u);
  }
}

TEST(Enumerate, EveryFstarInstanceIsValid) {
  for (auto [kind, partial] : {std::pair{CK::property_fstar, false}, std::pair{CK::property_fpstar, true}}) {
    std::uint64_t seen = 0;
    for (std::size_t dim : {2u, 4u}) {
      SearchConfig cfg = small_cfg(dim == 2 ? 1 : 2, 4);
      enumerate_instances(kind, dim, cfg, [&](const Instance& inst) {
        const auto o = decode(inst.roles, inst.values);
        EXPECT_TRUE(valid_Fstar_instance(o.f, o.z, o.y, partial));
        ++seen;
      });
    }
    EXPECT_GT(seen, 0u);
  }
}

// Brute force over every assignment (f, z, y) on the grid: the generator must
// produce each admissible triple exactly once.
TEST(Enumerate, FstarMatchesBruteForceStream) {
  const std::size_t n = 3;
  SearchConfig cfg = small_cfg(1, 3);
  std::multiset<std::vector<double>> generated;
  enumerate_instances(CK::property_fstar, n, cfg, [&](const Instance& inst) {
    const auto o = decode(inst.roles, inst.values);
    std::vector<double> key = o.f.data();
    key.insert(key.end(), o.z.values().begin(), o.z.values().end());
    key.insert(key.end(), o.y.values().begin(), o.y.values().end());
    generated.insert(key);
  });
  // Per coordinate: 0, f = +-1, z = +-1, y = +-1, +-2.
  const std::vector<std::pair<int, double>> choices = {{0, 0}, {1, 1}, {1, -1}, {2, 1}, {2, -1},
                                                      {3, 1}, {3, -1}, {3, 2}, {3, -2}};
  std::multiset<std::vector<double>> expected;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    std::vector<double> f(n, 0), z(n, 0), y(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      auto [who, v] = choices[pick[i]];
      if (who == 1) f[i] = v;
      if (who == 2) z[i] = v;
      if (who == 3) y[i] = v;
    }
    if (valid_Fstar_instance(CoeffVector(f), CoeffVector(z), CoeffVector(y), false)) {
      std::vector<double> key = f;
      key.insert(key.end(), z.begin(), z.end());
      key.insert(key.end(), y.begin(), y.end());
      expected.insert(key);
    }
    std::size_t i = 0;
    while (i < n && ++pick[i] == choices.size()) pick[i++] = 0;
    if (i == n) break;
  }
  EXPECT_EQ(generated, expected);
}

TEST(Enumerate, DemocracyPairCountAtDimThree) {
  // Oracle: ordered pairs (A, B) of subsets with B nonempty and |A| <= |B|.
  std::uint64_t oracle = 0;
  for (unsigned a = 0; a < 8; ++a)
    for (unsigned b = 1; b < 8; ++b)
      if (std::popcount(a) <= std::popcount(b)) ++oracle;
  EXPECT_EQ(oracle, 41u);
  std::set<std::pair<IndexSet, IndexSet>> pairs;
  const auto count = enumerate_instances(CK::democracy, 3, small_cfg(1, 3), [&](const Instance& inst) {
    const auto o = decode(inst.roles, inst.values);
    EXPECT_LE(o.a.size(), o.b.size());
    EXPECT_FALSE(o.b.empty());
    pairs.emplace(o.a, o.b);
  });
  EXPECT_EQ(count, oracle);
  EXPECT_EQ(pairs.size(), oracle);
}

TEST(Enumerate, ConservativePairsAreOrdered) {
  enumerate_instances(CK::conservative, 5, small_cfg(1, 5), [&](const Instance& inst) {
    const auto o = decode(inst.roles, inst.values);
    EXPECT_TRUE(precedes(o.a, o.b));
    EXPECT_LE(o.a.size(), o.b.size());
    EXPECT_FALSE(o.b.empty());
  });
}

TEST(Enumerate, GreedyKindsVisitEveryGreedySet) {
  std::map<std::vector<double>, std::set<IndexSet>> seen;
  enumerate_instances(CK::quasi_greedy, 3, small_cfg(1, 3), [&](const Instance& inst) {
    std::vector<double> f(inst.values.begin(), inst.values.end());
    IndexSet g(std::vector<std::size_t>(inst.greedy_set.begin(), inst.greedy_set.end()));
    EXPECT_TRUE(is_greedy_set(CoeffVector(f), g));
    seen[f].insert(g);
  });
  for (const auto& [f, sets] : seen) {
    std::set<IndexSet> expect;
    const CoeffVector v(f);
    for (std::size_t m = 0; m <= v.support().size(); ++m)
      for (const auto& a : greedy_sets(v, m)) expect.insert(a);
    EXPECT_EQ(sets, expect);
  }
}

TEST(Enumerate, SupportCapIsRespected) {
  enumerate_instances(CK::property_f, 6, small_cfg(1, 2), [&](const Instance& inst) {
    const auto o = decode(inst.roles, inst.values);
    EXPECT_LE(o.f.support().size(), 2u);
    EXPECT_LE(o.g.support().size(), 2u);
    EXPECT_LE(o.a.size(), 2u);
    EXPECT_LE(o.b.size(), 2u);
  });
}

TEST(Enumerate, SampledStreamIsSeedDeterministic) {
  auto stream = [](std::uint64_t seed) {
    SearchConfig cfg = small_cfg(3, 4);
    cfg.mode = SearchMode::sampled;
    cfg.samples = 300;
    cfg.seed = seed;
    std::vector<std::vector<double>> out;
    enumerate_instances(CK::quasi_greedy, 6, cfg, [&](const Instance& inst) {
      std::vector<double> key(inst.values.begin(), inst.values.end());
      key.push_back(static_cast<double>(inst.m));
      for (std::size_t i : inst.greedy_set) key.push_back(static_cast<double>(i));
      out.push_back(std::move(key));
    });
    return out;
  };
  const auto a = stream(17);
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, stream(17));
  EXPECT_NE(a, stream(18));
}

TEST(Enumerate, CapExceededThrows) {
  SearchConfig cfg = small_cfg(3, 4);
  cfg.cap = 100;
  EXPECT_THROW(estimate_constant(make_space(lp_spec(5, 2.0)), CK::property_f, cfg), CapExceeded);
}

TEST(Enumerate, NormAxiomFailureIsReported) {
  // Seminorm that ignores the second coordinate.
  Space bad(2, [](std::span<const double> v) { return std::abs(v[0]); }, SpaceMetadata{}, nlohmann::json::object());
  EXPECT_THROW(estimate_constant(bad, CK::democracy, small_cfg(1, 2)), NormAxiomFailure);
}

// ===== ESTIMATE EXAMPLES =====

TEST(Estimate, L2Democracy) {
  const auto e = estimate_constant(make_space(lp_spec(4, 2.0)), CK::democracy, small_cfg(1, 4));
  EXPECT_NEAR(e.value, 1.0, 1e-12);
  EXPECT_TRUE(e.analytic_exact);
  ASSERT_TRUE(e.witness.has_value());
  EXPECT_EQ(e.witness->sets.at("A").size(), e.witness->sets.at("B").size());
}

TEST(Estimate, WeightedDemocracyWitness) {
  const auto e = estimate_constant(make_space(weighted_l1_spec({1, 2, 3, 4})), CK::democracy, small_cfg(1, 4));
  EXPECT_EQ(e.value, 4.0);
  EXPECT_TRUE(e.analytic_exact);
  EXPECT_EQ(e.witness->sets.at("A"), IndexSet{3});
  EXPECT_EQ(e.witness->sets.at("B"), IndexSet{0});
}

TEST(Estimate, WeightedConservativeMatchesBruteForce) {
  // Oracle: max over A < B, |A| <= |B|, B nonempty.
  const auto sp = make_space(weighted_l1_spec({1, 2, 3, 4}));
  double oracle = 0.0;
  for (unsigned a = 0; a < 16; ++a)
    for (unsigned b = 1; b < 16; ++b) {
      if (std::popcount(a) > std::popcount(b)) continue;
      if (a != 0 && (std::bit_width(a) - 1) >= std::countr_zero(b)) continue;
      double na = 0, nb = 0;
      for (unsigned i = 0; i < 4; ++i) {
        na += (a >> i & 1) * (i + 1.0);
        nb += (b >> i & 1) * (i + 1.0);
      }
      oracle = std::max(oracle, na / nb);
    }
  const auto e = estimate_constant(sp, CK::conservative, small_cfg(1, 4));
  EXPECT_NEAR(e.value, oracle, 1e-12);
  EXPECT_NEAR(e.value, 0.75, 1e-12);
  EXPECT_TRUE(e.analytic_exact);
}

TEST(Estimate, L1QuasiGreedy) {
  const auto e = estimate_constant(make_space(lp_spec(4, 1.0)), CK::quasi_greedy, small_cfg(4, 4));
  EXPECT_NEAR(e.value, 1.0, 1e-12);
  EXPECT_TRUE(e.analytic_exact);
}

// a = e_2 + (e_4 + e_5)/2 (1-based) has norm 1 while P_{2} a = e_2 has norm 2.
TEST(Estimate, LindenstraussUnconditionalExceedsOne) {
  const auto sp = make_space(lindenstrauss_spec(7));
  const auto e = estimate_constant(sp, CK::unconditional, small_cfg(2, 3));
  EXPECT_NEAR(e.value, 2.0, 1e-12);
  ASSERT_TRUE(e.witness.has_value());
  EXPECT_NEAR(witness_ratio(sp, *e.witness), 2.0, 1e-12);
  EXPECT_NEAR(norm(sp, CoeffVector{0, 1, 0, 0.5, 0.5, 0, 0}), 1.0, 1e-12);
  EXPECT_NEAR(norm(sp, CoeffVector{0, 1, 0, 0, 0, 0, 0}), 2.0, 1e-12);
}

TEST(Estimate, VacuousSearchReportsZero) {
  // One coordinate cannot hold A < B with B nonempty and A nonempty; only A = {} remains.
  const auto e = estimate_constant(make_space(lp_spec(1, 2.0)), CK::conservative, small_cfg(1, 1));
  EXPECT_EQ(e.value, 0.0);
}

TEST(Estimate, JsonShape) {
  const auto e = estimate_constant(make_space(weighted_l1_spec({1, 2, 3, 4})), CK::democracy, small_cfg(1, 4));
  const auto j = to_json(e);
  EXPECT_EQ(j["kind"], "dd");
  EXPECT_EQ(j["value"], 4.0);
  EXPECT_EQ(j["exactness"], "analytic-exact");
  EXPECT_EQ(j["witness"]["sets"]["A"], nlohmann::json::array({4}));
  EXPECT_EQ(j["witness"]["sets"]["B"], nlohmann::json::array({1}));
  for (const char* k : {"levels", "max_support", "mode", "seed"}) EXPECT_TRUE(j["search"].contains(k)) << k;
}

// ===== INVARIANTS =====

TEST(Invariants, WitnessRecomputesValue) {
  for (const auto& sp : test_spaces(4)) {
    for (CK k : kAllKinds) {
      const auto e = estimate_constant(sp, k, small_cfg(2, 3));
      if (e.value == 0.0) continue;
      ASSERT_TRUE(e.witness.has_value()) << label(sp) << " " << token(k);
      EXPECT_NEAR(witness_ratio(sp, *e.witness), e.value, 1e-12) << label(sp) << " " << token(k);
    }
  }
}

TEST(Invariants, IdentityInstanceGivesAtLeastOne) {
  for (const auto& sp : test_spaces(4)) {
    for (CK k : kAllKinds) {
      if (k == CK::conservative || k == CK::super_conservative) continue;
      EXPECT_GE(estimate_constant(sp, k, small_cfg(2, 3)).value, 1.0 - 1e-12) << label(sp) << " " << token(k);
    }
  }
}

TEST(Invariants, KindDominations) {
  const std::vector<std::pair<CK, CK>> dominations = {
      {CK::democracy, CK::super_democracy},       {CK::conservative, CK::super_conservative},
      {CK::conservative, CK::democracy},          {CK::super_conservative, CK::super_democracy},
      {CK::partial_slc, CK::slc},                 {CK::property_fp, CK::property_f},
      {CK::property_fpstar, CK::property_fstar},  {CK::partially_greedy, CK::almost_greedy}};
  for (const auto& sp : test_spaces(4)) {
    const auto cfg = small_cfg(2, 3);
    for (auto [lo, hi] : dominations)
      EXPECT_LE(estimate_constant(sp, lo, cfg).value, estimate_constant(sp, hi, cfg).value + 1e-12)
          << label(sp) << " " << token(lo) << " <= " << token(hi);
  }
}

TEST(Invariants, MonotoneInGridAndSupport) {
  const std::vector<CK> kinds = {CK::quasi_greedy, CK::unconditional, CK::almost_greedy, CK::partially_greedy,
                                 CK::slc,          CK::property_f,    CK::property_fstar, CK::c2};
  for (const auto& sp : {make_space(lindenstrauss_spec(4)), make_space(l1_l2_sum_spec(4))}) {
    for (CK k : kinds) {
      const double base = estimate_constant(sp, k, small_cfg(1, 2)).value;
      const double finer = estimate_constant(sp, k, small_cfg(2, 2)).value;
      const double wider = estimate_constant(sp, k, small_cfg(1, 3)).value;
      EXPECT_GE(finer, base - 1e-12) << label(sp) << " " << token(k);
      EXPECT_GE(wider, base - 1e-12) << label(sp) << " " << token(k);
    }
  }
}

TEST(Invariants, ScalingLeavesEstimatesUnchanged) {
  for (const auto& sp : test_spaces(4)) {
    const auto scaled = sp.scaled(3.5);
    for (CK k : {CK::quasi_greedy, CK::democracy, CK::conservative, CK::slc, CK::property_f, CK::property_fstar,
                 CK::almost_greedy, CK::c1}) {
      const auto cfg = small_cfg(2, 3);
      EXPECT_NEAR(estimate_constant(scaled, k, cfg).value, estimate_constant(sp, k, cfg).value, 1e-12)
          << label(sp) << " " << token(k);
    }
  }
}

TEST(Invariants, WorkerCountDoesNotChangeResults) {
  const auto sp = make_space(lindenstrauss_spec(5));
  for (CK k : {CK::quasi_greedy, CK::greedy, CK::democracy, CK::property_f, CK::property_fstar, CK::c2}) {
    SearchConfig one = small_cfg(2, 3), many = small_cfg(2, 3);
    many.workers = 5;
    EXPECT_EQ(to_json(estimate_constant(sp, k, one)).dump(), to_json(estimate_constant(sp, k, many)).dump())
        << token(k);
  }
}

TEST(Invariants, TruncationContractsOnUnconditionalSpaces) {
  std::mt19937_64 rng(31);
  for (const auto& sp : test_spaces(5)) {
    if (!sp.metadata().one_unconditional) continue;
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<double> v(5);
      for (double& x : v) x = static_cast<double>(static_cast<int>(rng() % 9) - 4) / 2;
      const CoeffVector cv(v);
      const TruncationLevel a(0.25 * static_cast<double>(1 + rng() % 8));
      EXPECT_LE(norm(sp, truncate(cv, a)), norm(sp, cv) + 1e-12);
    }
  }
}

TEST(Invariants, GreedySumSplitsExactly) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<double> v(6);
    for (double& x : v) x = static_cast<double>(static_cast<int>(rng() % 7) - 3) / 3;
    const CoeffVector cv(v);
    const std::size_t m = rng() % 7;
    for (const auto& a : greedy_sets(cv, m)) {
      const auto g = greedy_sum(cv, a);
      EXPECT_EQ(g + (cv - g), cv);
    }
  }
}

TEST(Invariants, ResidualVanishesAtFullLength) {
  std::mt19937_64 rng(41);
  for (const auto& sp : test_spaces(6)) {
    std::vector<double> v(6);
    for (double& x : v) x = static_cast<double>(static_cast<int>(rng() % 7) - 3);
    EXPECT_EQ(tga_run(sp, CoeffVector(v), 6).steps.back().residual_norm, 0.0);
  }
}
