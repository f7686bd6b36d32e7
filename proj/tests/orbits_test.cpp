#include "cyclic_actions/verification/orbits.hpp"

#include <gtest/gtest.h>

#include "cyclic_actions/verification/canonical.hpp"
#include "cyclic_actions/verification/compare.hpp"

namespace cyclic_actions {
namespace {

struct Expected {
  std::uint64_t p;
  Tuple5 v;
  std::uint64_t orbits;
  std::uint64_t valid;
};

// Frozen from tests/oracles/orbit_oracle.py, an independent flood fill over
// the full move alphabet.
const Expected kOracle[] = {
    {3, {0, 1, 0, 0, 0}, 3, 54},   {3, {0, 0, 1, 0, 0}, 3, 6},    {3, {1, 0, 0, 0, 0}, 3, 6},
    {3, {0, 0, 0, 1, 0}, 2, 12},   {3, {0, 1, 1, 0, 0}, 9, 324},  {3, {0, 0, 0, 2, 0}, 5, 288},
    {3, {1, 0, 0, 1, 0}, 3, 144},  {3, {0, 1, 0, 1, 0}, 9, 972},  {3, {0, 2, 0, 0, 0}, 6, 2916},
    {3, {1, 1, 0, 0, 0}, 3, 486},  {3, {2, 0, 0, 0, 0}, 1, 72},   {3, {0, 0, 0, 1, 1}, 2, 24},
    {3, {0, 0, 2, 0, 0}, 6, 36},   {3, {1, 0, 0, 0, 1}, 1, 12},   {5, {0, 0, 0, 2, 0}, 52, 9600},
    {5, {0, 1, 0, 0, 0}, 10, 500}, {5, {0, 0, 0, 1, 0}, 8, 80},   {5, {1, 0, 0, 0, 0}, 10, 20},
    {5, {0, 0, 0, 1, 1}, 16, 320},
};

TEST(OrbitCountTest, MatchesIndependentOracle) {
  for (const auto& e : kOracle) {
    for (OrbitMethod method : {OrbitMethod::kBfs, OrbitMethod::kUnionFind}) {
      OrbitOptions opts;
      opts.method = method;
      const OrbitResult res = orbit_count(OddPrime(e.p), e.v, opts);
      EXPECT_EQ(res.orbit_count, big(e.orbits)) << "p=" << e.p << ' ' << e.v << ' ' << method_name(method);
      EXPECT_EQ(res.valid_states, e.valid) << "p=" << e.p << ' ' << e.v;
      EXPECT_EQ(res.representatives.size(), e.orbits);
    }
  }
}

TEST(OrbitCountTest, ReportsStatistics) {
  const OrbitResult res = orbit_count(OddPrime(3), {0, 1, 0, 0, 0});
  EXPECT_EQ(res.state_space_size, 54u);
  EXPECT_EQ(res.valid_states, 54u);
  // Each orbit is a spin pair {b, -b} with c free: 2 * 9 states.
  EXPECT_EQ(res.largest_orbit, 18u);
  EXPECT_EQ(res.method, OrbitMethod::kBfs);
  std::vector<std::vector<std::uint32_t>> reps;
  for (const auto& s : res.representatives) reps.push_back(s.coords());
  EXPECT_EQ(reps, (std::vector<std::vector<std::uint32_t>>{{1, 0}, {2, 0}, {4, 0}}));
}

TEST(OrbitCountTest, BudgetExceeded) {
  try {
    orbit_count(OddPrime(5), {0, 0, 0, 2, 0}, OrbitOptions{.budget = 10});
    FAIL() << "expected ResourceError";
  } catch (const ResourceError& e) {
    EXPECT_EQ(e.required(), 10'000u);
  }
}

TEST(OrbitCountTest, IndependentOfWorkersAndMethod) {
  const OddPrime p(3);
  for (const Tuple5 v : {Tuple5{1, 1, 0, 1, 0}, Tuple5{2, 0, 0, 1, 1}, Tuple5{0, 1, 1, 1, 0}}) {
    OrbitOptions bfs;
    bfs.method = OrbitMethod::kBfs;
    const OrbitPartition reference = orbit_partition(p, v, bfs);
    for (unsigned workers : {1u, 2u, 3u, 8u}) {
      OrbitOptions uf;
      uf.method = OrbitMethod::kUnionFind;
      uf.workers = workers;
      const OrbitPartition part = orbit_partition(p, v, uf);
      EXPECT_EQ(part.label, reference.label) << v << " workers=" << workers;
      EXPECT_EQ(part.orbits, reference.orbits);
      EXPECT_EQ(part.largest_orbit, reference.largest_orbit);
    }
  }
}

TEST(OrbitCountTest, SlidesAreWhatCollapseHandleClasses) {
  // Without slides, (2,0,0,0,0) splits by the pair of spin classes; with
  // them every surjective pair is equivalent.
  MoveAlphabet no_slides;
  no_slides.name = "no-slides";
  no_slides.slide = false;
  OrbitOptions opts;
  opts.alphabet = no_slides;
  EXPECT_GT(orbit_count(OddPrime(3), {2, 0, 0, 0, 0}, opts).orbit_count, 1);
  EXPECT_EQ(orbit_count(OddPrime(3), {2, 0, 0, 0, 0}).orbit_count, 1);
}

TEST(OrbitCountTest, EveryOrbitTouchesACanonicalState) {
  const OddPrime p(3);
  for (const Tuple5 v : {Tuple5{0, 0, 0, 2, 0}, Tuple5{1, 0, 0, 1, 0}, Tuple5{1, 1, 0, 1, 1}, Tuple5{2, 0, 1, 0, 0}}) {
    const OrbitPartition part = orbit_partition(p, v);
    const DenseIndexer ix(p, v, 1'000'000);
    std::vector<std::uint8_t> touched(ix.size(), 0);
    for (const auto& s : enumerate_canonical(p, v)) {
      const std::uint64_t idx = ix.encode(s.coords());
      ASSERT_NE(idx, DenseIndexer::kAbsent);
      ASSERT_NE(part.label[idx], OrbitPartition::kInvalid);
      touched[part.label[idx]] = 1;
    }
    for (std::uint64_t i = 0; i < ix.size(); ++i)
      if (part.label[i] == i) EXPECT_TRUE(touched[i]) << v << " orbit " << i;
  }
}

TEST(CompareTest, Examples) {
  const ComparisonReport a = compare(OddPrime(3), {0, 1, 0, 0, 0});
  EXPECT_EQ(a.theorem_count, 3);
  EXPECT_EQ(a.canonical_count, BigCount(3));
  EXPECT_EQ(a.orbit_count, BigCount(3));
  EXPECT_TRUE(a.all_agree());
  EXPECT_TRUE(a.complete);

  const ComparisonReport b = compare(OddPrime(3), {1, 0, 0, 1, 0});
  EXPECT_EQ(b.theorem_count, 5);
  EXPECT_EQ(b.canonical_count, BigCount(5));
  EXPECT_EQ(b.orbit_count, BigCount(3));
  EXPECT_EQ(b.theorem_matches_orbits(), false);
  EXPECT_EQ(b.state_space_size, 162u);
  EXPECT_FALSE(b.all_agree());

  const ComparisonReport c = compare(OddPrime(5), {0, 0, 0, 2, 0});
  EXPECT_EQ(c.theorem_count, 80);
  EXPECT_EQ(c.canonical_count, BigCount(80));
  EXPECT_EQ(c.orbit_count, BigCount(52));
  EXPECT_EQ(c.state_space_size, 10'000u);
}

TEST(CompareTest, BudgetMarksReportIncomplete) {
  const ComparisonReport rep = compare(OddPrime(5), {0, 0, 0, 2, 0}, OrbitOptions{.budget = 10});
  EXPECT_FALSE(rep.complete);
  EXPECT_FALSE(rep.canonical_count.has_value());
  EXPECT_FALSE(rep.orbit_count.has_value());
  EXPECT_EQ(rep.theorem_count, 80);
  EXPECT_FALSE(rep.incomplete_reason.empty());
}

}  // namespace
}  // namespace cyclic_actions
