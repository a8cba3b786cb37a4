#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "greedybasis/catalog.hpp"
#include "greedybasis/greedy.hpp"

using namespace greedybasis;

namespace {

// Oracle: every m-subset whose smallest modulus dominates everything outside.
std::vector<IndexSet> brute_greedy_sets(const CoeffVector& v, std::size_t m) {
  const std::size_t n = v.dim();
  std::vector<IndexSet> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != m) continue;
    double in = HUGE_VAL, outside = 0.0;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        s.push_back(i);
        in = std::min(in, std::abs(v[i]));
      } else {
        outside = std::max(outside, std::abs(v[i]));
      }
    }
    if (m == 0 || in >= outside) out.emplace_back(s);
  }
  std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return out;
}

CoeffVector random_vector(std::mt19937_64& rng, std::size_t n, int levels) {
  std::uniform_int_distribution<int> d(-levels, levels);
  std::vector<double> v(n);
  for (double& x : v) x = static_cast<double>(d(rng)) / levels;
  return CoeffVector(v);
}

}  // namespace

TEST(GreedySets, StrictLargest) {
  EXPECT_EQ(greedy_sets(CoeffVector{3, -1, 2, 1}, 2), (std::vector<IndexSet>{{0, 2}}));
}

TEST(GreedySets, TieEnumeratesBoth) {
  EXPECT_EQ(greedy_sets(CoeffVector{1, 1, 0}, 1), (std::vector<IndexSet>{{0}, {1}}));
}

TEST(GreedySets, ZeroVectorEverySetIsGreedy) {
  EXPECT_EQ(greedy_sets(CoeffVector(2), 1), (std::vector<IndexSet>{{0}, {1}}));
}

TEST(GreedySets, OrderZeroIsEmptySet) {
  EXPECT_EQ(greedy_sets(CoeffVector{1, 2}, 0), (std::vector<IndexSet>{IndexSet{}}));
  EXPECT_THROW(greedy_sets(CoeffVector{1, 2}, 3), IndexOutOfRange);
}

TEST(GreedySets, MatchesBruteForceOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    const auto v = random_vector(rng, n, 2);
    for (std::size_t m = 0; m <= n; ++m) {
      const auto got = greedy_sets(v, m);
      EXPECT_EQ(got, brute_greedy_sets(v, m));
      for (const auto& a : got) {
        EXPECT_EQ(a.size(), m);
        EXPECT_TRUE(is_greedy_set(v, a));
      }
    }
  }
}

TEST(GreedySum, Examples) {
  EXPECT_EQ(greedy_sum(CoeffVector{3, -1, 2}, IndexSet{0}), (CoeffVector{3, 0, 0}));
  EXPECT_EQ(greedy_sum(CoeffVector{3, -1, 2}, IndexSet{}), CoeffVector(3));
  EXPECT_EQ(greedy_sum(CoeffVector{1, 1}, IndexSet{1}), (CoeffVector{0, 1}));
}

TEST(GreedySum, RejectsNonGreedySet) {
  EXPECT_THROW(greedy_sum(CoeffVector{3, -1, 2}, IndexSet{1}), Error);
}

TEST(TgaRun, EuclideanResiduals) {
  const auto t = tga_run(make_space(lp_spec(3, 2.0)), CoeffVector{3, 2, 1}, 3);
  ASSERT_EQ(t.steps.size(), 4u);
  EXPECT_DOUBLE_EQ(t.steps[0].residual_norm, std::sqrt(14.0));
  EXPECT_DOUBLE_EQ(t.steps[1].residual_norm, std::sqrt(5.0));
  EXPECT_DOUBLE_EQ(t.steps[2].residual_norm, 1.0);
  EXPECT_DOUBLE_EQ(t.steps[3].residual_norm, 0.0);
  EXPECT_FALSE(t.steps[0].threshold.has_value());
  EXPECT_EQ(*t.steps[1].threshold, 3.0);
}

TEST(TgaRun, ZeroVectorResidualsVanish) {
  const auto t = tga_run(make_space(l1_l2_sum_spec(4)), CoeffVector(4), 4);
  for (const auto& s : t.steps) EXPECT_EQ(s.residual_norm, 0.0);
}

TEST(TgaRun, TieBreakPicksSmallestIndex) {
  const auto t = tga_run(make_space(weighted_l1_spec({1, 2, 3})), CoeffVector{1, 1, 1}, 1);
  EXPECT_EQ(t.steps[1].set, IndexSet{0});
  EXPECT_DOUBLE_EQ(t.steps[1].residual_norm, 5.0);
}

TEST(TgaRun, DimensionZero) {
  const auto t = tga_run(make_space_unchecked(lp_spec(0, 2.0)), CoeffVector(0), 0);
  ASSERT_EQ(t.steps.size(), 1u);
  EXPECT_EQ(t.steps[0].residual_norm, 0.0);
}

TEST(TgaRun, StepsAreGreedySetsAndNested) {
  std::mt19937_64 rng(9);
  const auto sp = make_space(lp_spec(6, 1.5));
  for (int trial = 0; trial < 100; ++trial) {
    const auto v = random_vector(rng, 6, 3);
    const auto t = tga_run(sp, v, 6);
    for (std::size_t m = 0; m <= 6; ++m) {
      EXPECT_TRUE(is_greedy_set(v, t.steps[m].set));
      EXPECT_EQ(t.steps[m].set.size(), m);
      if (m > 0) EXPECT_TRUE(set_difference(t.steps[m - 1].set, t.steps[m].set).empty());
      EXPECT_NEAR(t.steps[m].residual_norm, norm(sp, v - project(v, t.steps[m].set)), 1e-12);
    }
  }
}

TEST(TgaRun, RejectsTooManySteps) {
  EXPECT_THROW(tga_run(make_space(lp_spec(2, 2.0)), CoeffVector{1, 2}, 3), IndexOutOfRange);
}

TEST(TraceSerialization, CsvAndJson) {
  const auto t = tga_run(make_space(lp_spec(3, 2.0)), CoeffVector{3, 2, 1}, 3);
  EXPECT_EQ(trace_csv(t), "m,residual_norm\n0,3.7416573867739413\n1,2.23606797749979\n2,1\n3,0\n");
  const auto j = to_json(t);
  EXPECT_EQ(j["steps"][1]["set"], nlohmann::json::array({1}));
  EXPECT_TRUE(j["steps"][0]["threshold"].is_null());
}

TEST(Truncate, Examples) {
  EXPECT_EQ(truncate(CoeffVector{2, -3, 0.5}, TruncationLevel(1)), (CoeffVector{1, -1, 0.5}));
  const CoeffVector v{2, -3, 0.5};
  EXPECT_EQ(truncate(v, TruncationLevel(3)), v);
  EXPECT_EQ(truncate(v, TruncationLevel(7)), v);
  EXPECT_EQ(truncate(CoeffVector{1, -1}, TruncationLevel(0.5)), (CoeffVector{0.5, -0.5}));
}

TEST(Truncate, RejectsNonPositiveLevel) {
  EXPECT_THROW(TruncationLevel{0.0}, Error);
  EXPECT_THROW(TruncationLevel{-1.0}, Error);
  EXPECT_THROW(TruncationLevel{INFINITY}, Error);
}

TEST(TruncateProperties, CommutesWithSignFlipsAndBoundsSup) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    const auto v = random_vector(rng, n, 4);
    std::vector<std::size_t> f;
    for (std::size_t i = 0; i < n; ++i)
      if (rng() & 1) f.push_back(i);
    const IndexSet flip(f);
    const TruncationLevel a(0.25 * static_cast<double>(1 + rng() % 6));
    EXPECT_EQ(truncate(flip_signs(v, flip), a), flip_signs(truncate(v, a), flip));
    EXPECT_LE(coeff_sup(truncate(v, a)), a.value());
    EXPECT_EQ(truncate(v, a).support(), v.support());
  }
}
