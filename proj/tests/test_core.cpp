#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "greedybasis/catalog.hpp"
#include "greedybasis/core.hpp"
#include "greedybasis/validate.hpp"

using namespace greedybasis;

namespace {

std::vector<double> random_grid_vector(std::mt19937_64& rng, std::size_t n, int levels = 4) {
  std::uniform_int_distribution<int> d(-levels, levels);
  std::vector<double> v(n);
  for (double& x : v) x = static_cast<double>(d(rng)) / levels;
  return v;
}

IndexSet random_set(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < n; ++i)
    if (rng() & 1) s.push_back(i);
  return IndexSet(s);
}

}  // namespace

TEST(Norm, EuclideanExample) {
  auto sp = make_space(lp_spec(3, 2.0));
  EXPECT_DOUBLE_EQ(norm(sp, CoeffVector{3, 2, 1}), std::sqrt(14.0));
}

TEST(Norm, ZeroVectorInEveryCatalogKind) {
  for (const auto& spec : {lp_spec(4, 1.0), lp_spec(4, kInfinity), weighted_l1_spec({1, 2, 3, 4}),
                           weighted_lp_spec({1, 2, 3, 4}, 3.0), lindenstrauss_spec(4), l1_l2_sum_spec(4)}) {
    EXPECT_EQ(norm(make_space(spec), CoeffVector(4)), 0.0);
  }
}

TEST(Norm, WeightedL1Example) {
  auto sp = make_space(weighted_l1_spec({1, 2, 3, 4}));
  EXPECT_DOUBLE_EQ(norm(sp, CoeffVector{1, 0, 0, 1}), 5.0);
}

TEST(Norm, DimensionMismatchThrows) {
  auto sp = make_space(lp_spec(3, 2.0));
  EXPECT_THROW(norm(sp, CoeffVector{1, 2}), DimensionMismatch);
}

TEST(CoeffSup, Examples) {
  EXPECT_EQ(coeff_sup(CoeffVector{2, -3, 0.5}), 3.0);
  EXPECT_EQ(coeff_sup(CoeffVector(5)), 0.0);
  EXPECT_EQ(coeff_sup(CoeffVector{-1, -1}), 1.0);
}

TEST(CoeffVector, RejectsNonFinite) {
  EXPECT_THROW(CoeffVector({1.0, NAN}), Error);
  EXPECT_THROW(CoeffVector({INFINITY}), Error);
  CoeffVector v(2);
  EXPECT_THROW(v.set(0, NAN), Error);
  EXPECT_THROW(v.set(2, 1.0), IndexOutOfRange);
}

TEST(CoeffVector, Support) {
  EXPECT_EQ(CoeffVector({0, 2, 0, -1}).support(), IndexSet({1, 3}));
  EXPECT_TRUE(CoeffVector(3).support().empty());
}

TEST(IndexSet, SortedAndDeduplicated) {
  IndexSet s({3, 1, 3, 0});
  EXPECT_EQ(s.indices(), (std::vector<std::size_t>{0, 1, 3}));
  EXPECT_TRUE(s.fits(4));
  EXPECT_FALSE(s.fits(3));
}

TEST(IndexSet, PrecedesConventions) {
  EXPECT_TRUE(precedes(IndexSet{0, 1}, IndexSet{2, 5}));
  EXPECT_FALSE(precedes(IndexSet{0, 2}, IndexSet{2, 5}));
  EXPECT_TRUE(precedes(IndexSet{}, IndexSet{0}));
  EXPECT_TRUE(precedes(IndexSet{4}, IndexSet{}));
}

TEST(Project, Examples) {
  CoeffVector v{3, 2, 1};
  EXPECT_EQ(project(v, IndexSet{0, 2}), (CoeffVector{3, 0, 1}));
  EXPECT_EQ(project(v, IndexSet{}), CoeffVector(3));
  EXPECT_EQ(project(v, IndexSet::range(0, 3)), v);
  EXPECT_THROW(project(v, IndexSet{3}), IndexOutOfRange);
}

TEST(PartialSum, Examples) {
  CoeffVector v{3, 2, 1};
  EXPECT_EQ(partial_sum(v, 2), (CoeffVector{3, 2, 0}));
  EXPECT_EQ(partial_sum(v, 0), CoeffVector(3));
  EXPECT_EQ(partial_sum(v, 3), v);
  EXPECT_THROW(partial_sum(v, 4), IndexOutOfRange);
}

TEST(Indicator, Examples) {
  IndexSet a{0, 2};
  EXPECT_EQ(indicator(a, SignPattern(a, {1, -1}), 3), (CoeffVector{1, 0, -1}));
  EXPECT_EQ(indicator(IndexSet{}, 3), CoeffVector(3));
  EXPECT_EQ(indicator(IndexSet{1}, SignPattern(IndexSet{1}, {1}), 2), (CoeffVector{0, 1}));
}

TEST(Indicator, DomainMismatchThrows) {
  EXPECT_THROW(indicator(IndexSet{0, 1}, SignPattern(IndexSet{0, 2}, {1, 1}), 3), Error);
}

TEST(SignPattern, RejectsBadSigns) {
  EXPECT_THROW(SignPattern(IndexSet{0}, {0}), Error);
  EXPECT_THROW(SignPattern(IndexSet{0, 1}, {1}), Error);
}

TEST(ProjectProperties, AdditivityAndIdempotence) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    CoeffVector v(random_grid_vector(rng, n));
    const IndexSet a = random_set(rng, n);
    const IndexSet b = set_difference(random_set(rng, n), a);
    EXPECT_EQ(project(v, set_union(a, b)), project(v, a) + project(v, b));
    EXPECT_EQ(project(project(v, a), a), project(v, a));
    const std::size_t k = rng() % (n + 1);
    EXPECT_EQ(partial_sum(v, k), project(v, IndexSet::range(0, k)));
  }
}

TEST(IndicatorProperties, SupAndSupport) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const IndexSet a = random_set(rng, n);
    std::vector<int> s;
    for (std::size_t i = 0; i < a.size(); ++i) s.push_back(rng() & 1 ? 1 : -1);
    const auto v = indicator(a, SignPattern(a, s), n);
    EXPECT_LE(coeff_sup(v), 1.0);
    EXPECT_EQ(v.support(), a);
  }
}

TEST(NormProperties, HomogeneityAndTriangleOnCatalogSpaces) {
  std::mt19937_64 rng(3);
  for (const auto& spec : {lp_spec(5, 1.0), lp_spec(5, 2.0), lp_spec(5, kInfinity), lp_spec(5, 1.5),
                           weighted_l1_spec({1, 2, 3, 4, 5}), weighted_lp_spec({2, 1, 3, 1, 2}, 2.0),
                           lindenstrauss_spec(5), l1_l2_sum_spec(5)}) {
    const auto sp = make_space(spec);
    for (int trial = 0; trial < 200; ++trial) {
      CoeffVector u(random_grid_vector(rng, 5)), w(random_grid_vector(rng, 5));
      const double t = static_cast<double>(static_cast<int>(rng() % 9) - 4) / 2;
      const double nu = norm(sp, u);
      EXPECT_NEAR(norm(sp, t * u), std::abs(t) * nu, 1e-9 * std::max(1.0, nu));
      EXPECT_LE(norm(sp, u + w), nu + norm(sp, w) + 1e-9);
    }
  }
}

TEST(Scaled, MultipliesNormAndKeepsConstants) {
  const auto sp = make_space(weighted_l1_spec({1, 2, 3}));
  const auto s2 = sp.scaled(2.5);
  EXPECT_DOUBLE_EQ(norm(s2, CoeffVector{1, 1, 1}), 2.5 * 6);
  EXPECT_EQ(s2.metadata().constant(ConstantKind::democracy), sp.metadata().constant(ConstantKind::democracy));
  EXPECT_DOUBLE_EQ(s2.metadata().c2, 7.5);
  EXPECT_THROW(sp.scaled(0.0), Error);
}

TEST(ValidateSpace, L2PassesWithUnitBasis) {
  const auto rep = validate_space(make_space(lp_spec(4, 2.0)), SearchConfig{});
  EXPECT_TRUE(rep.ok());
  for (double len : rep.basis_norms) EXPECT_DOUBLE_EQ(len, 1.0);
}

TEST(ValidateSpace, WeightedL1ReportsWeights) {
  const auto rep = validate_space(make_space(weighted_l1_spec({1, 2, 3, 4})), SearchConfig{});
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.basis_norms, (std::vector<double>{1, 2, 3, 4}));
  EXPECT_EQ(rep.measured_c1, 1.0);
  EXPECT_EQ(rep.measured_c2, 4.0);
  EXPECT_EQ(rep.declared_c1, 1.0);
  EXPECT_EQ(rep.declared_c2, 4.0);
  EXPECT_TRUE(rep.dual_analytic);
}

TEST(ValidateSpace, NegativeWeightIsReported) {
  const auto rep = validate_space(make_space_unchecked(weighted_l1_spec({1, -2, 3})), SearchConfig{});
  EXPECT_FALSE(rep.ok());
  bool flagged = false;
  for (const auto& c : rep.checks)
    if ((c.name == "positivity" || c.name == "triangle inequality") && !c.pass) flagged = true;
  EXPECT_TRUE(flagged);
}

TEST(ValidateSpace, EveryCatalogSpacePasses) {
  for (const auto& spec : {lp_spec(6, 1.0), lp_spec(6, 2.0), lp_spec(6, kInfinity), weighted_l1_spec({1, 2, 3, 4, 5, 6}),
                           weighted_lp_spec({3, 1, 2, 5, 4, 6}, 1.5), lindenstrauss_spec(7), l1_l2_sum_spec(6)}) {
    const auto rep = validate_space(make_space(spec), SearchConfig{});
    EXPECT_TRUE(rep.ok()) << to_json(rep).dump();
  }
}
