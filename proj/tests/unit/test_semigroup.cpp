#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "liken/error.hpp"
#include "liken/families.hpp"
#include "liken/semigroup.hpp"
#include "oracles.hpp"

using namespace liken;

namespace {

std::vector<std::uint64_t> random_gens(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(2, 4);
  std::uniform_int_distribution<std::uint64_t> value(2, 30);
  std::vector<std::uint64_t> gens;
  const int n = count(rng);
  while (static_cast<int>(gens.size()) < n) gens.push_back(value(rng));
  return gens;
}

std::uint64_t gcd_all(const std::vector<std::uint64_t>& g) {
  std::uint64_t d = 0;
  for (auto x : g) d = std::gcd(d, x);
  return d;
}

}  // namespace

TEST(Semigroup, WorkedExamples) {
  const NumericalSemigroup s345({3, 4, 5});
  EXPECT_EQ(frobenius(s345), 2u);
  EXPECT_EQ(genus_and_gaps(s345).gaps, (std::vector<std::uint64_t>{1, 2}));

  const NumericalSemigroup mc({6, 9, 20});
  EXPECT_EQ(frobenius(mc), 43u);
  EXPECT_EQ(genus_and_gaps(mc).genus, 22u);

  const auto summary = semigroup_summary(mc, {6});
  EXPECT_EQ(summary["frobenius"], 43);
  EXPECT_EQ(summary["apery"]["6"], (std::vector<std::uint64_t>{0, 9, 20, 29, 40, 49}));
}

TEST(Semigroup, MinimalizationDropsRedundantGenerators) {
  const NumericalSemigroup s({6, 9, 12, 20, 15});
  EXPECT_EQ(s.minimal_gens(), (std::vector<std::uint64_t>{6, 9, 20}));
  EXPECT_EQ(s.info().removed.size(), 2u);
  for (const auto& r : s.info().removed) {
    std::uint64_t sum = 0;
    for (auto [k, m] : r.decomposition.entries()) sum += m * s.minimal_gens()[k - 1];
    EXPECT_EQ(sum, r.generator);
  }
}

TEST(Semigroup, AgreesWithMembershipTable) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 60; ++t) {
    const auto gens = random_gens(rng);
    const NumericalSemigroup s(gens);
    const auto table = oracle::membership_table(gens, 1000);
    for (std::uint64_t n = 0; n <= 1000; ++n) ASSERT_EQ(s.contains(n), table[n]) << n;
    if (gcd_all(gens) != 1) {
      EXPECT_FALSE(s.cofinite());
      EXPECT_THROW(frobenius(s), Error);
      continue;
    }
    if (*std::min_element(gens.begin(), gens.end()) == 1) continue;
    const std::uint64_t f = frobenius(s);
    ASSERT_LT(f, 1000u);
    EXPECT_FALSE(table[f]);
    for (std::uint64_t n = f + 1; n <= 1000; ++n) ASSERT_TRUE(table[n]);
    std::uint64_t genus = 0;
    for (std::uint64_t n = 0; n <= f; ++n) genus += table[n] ? 0 : 1;
    EXPECT_EQ(genus_and_gaps(s).genus, genus);
  }
}

TEST(Semigroup, AperySetHasOneElementPerResidue) {
  std::mt19937_64 rng(8);
  int done = 0;
  while (done < 30) {
    const auto gens = random_gens(rng);
    if (gcd_all(gens) != 1) continue;
    const NumericalSemigroup s(gens);
    const auto table = oracle::membership_table(gens, 2000);
    std::uniform_int_distribution<std::uint64_t> pick(1, 60);
    std::uint64_t m = pick(rng);
    while (!table[m]) ++m;
    const auto ap = apery_set(s, m);
    ASSERT_EQ(ap.size(), m);
    std::set<std::uint64_t> residues;
    for (std::uint64_t r = 0; r < m; ++r) {
      ASSERT_TRUE(table[ap[r]]);
      ASSERT_EQ(ap[r] % m, r);
      ASSERT_FALSE(ap[r] >= m && table[ap[r] - m]) << "not the least in its class";
      residues.insert(ap[r] % m);
    }
    EXPECT_EQ(residues.size(), m);
    ++done;
  }
}

TEST(Semigroup, Errors) {
  const NumericalSemigroup even({4, 6});
  try {
    (void)apery_set(even, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCofinite);
  }
  const NumericalSemigroup s({3, 5});
  try {
    (void)apery_set(s, 7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAMember);
  }
  try {
    (void)frobenius(NumericalSemigroup({1, 5}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoGaps);
  }
  EXPECT_THROW(NumericalSemigroup({}), Error);
  EXPECT_THROW(NumericalSemigroup({0, 3}), Error);
}

TEST(Semigroup, NumericalSpecEnumeratesTheSemigroup) {
  const std::vector<std::uint64_t> gens = {5, 7, 11};
  const auto table = oracle::membership_table(gens, 200);
  const Prefix p = enumerate(family_numerical(gens), Limit::value_bound(Value::rational(200)));
  std::vector<std::uint64_t> members;
  for (std::uint64_t n = 0; n <= 200; ++n) {
    if (table[n]) members.push_back(n);
  }
  ASSERT_EQ(p.size(), members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    EXPECT_EQ(p[i].value, Value::rational(static_cast<long>(members[i])));
  }
}
