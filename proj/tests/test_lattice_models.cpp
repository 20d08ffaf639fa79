#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "affine_cores/abacus.hpp"

using namespace affine_cores;

namespace {

// Independent reading of an abacus: list its beads above the solid region,
// then for each bead count the gaps below it directly.
Partition partition_by_bead_counting(const AbacusC& a) {
  const long N = a.modulus();
  const long floor = a.smallest_gap();
  std::vector<long> beads;
  for (long v = floor; v <= a.largest_bead(); ++v)
    if (v % N != 0 && a.is_bead(v)) beads.push_back(v);
  std::vector<int> parts;
  for (auto it = beads.rbegin(); it != beads.rend(); ++it) {
    int gaps = 0;
    for (long v = floor; v < *it; ++v)
      if (v % N != 0 && !a.is_bead(v)) ++gaps;
    if (gaps > 0) parts.push_back(gaps);
  }
  return Partition(parts);
}

std::vector<AbacusC> box(int n, int b) { return abaci_in_box(n, b); }

}  // namespace

TEST(AbacusC, FullVectorIsBalanced) {
  const AbacusC a(3, {2, 1, -1});
  EXPECT_EQ(a.full_levels(), (std::vector<int>{2, 1, -1, 1, -1, -2}));
  EXPECT_EQ(AbacusC::from_full(std::vector<int>{2, 1, -1, 1, -1, -2}), a);
  EXPECT_THROW(AbacusC::from_full(std::vector<int>{1, 0, 0, 0}), invalid_abacus);
  EXPECT_THROW(AbacusC(2, {1}), invalid_abacus);
}

TEST(AbacusC, LargestRunnerPrefersRightmost) {
  const AbacusC a(3, {1, 2, -2});  // full (1,2,-2,2,-2,-1)
  EXPECT_EQ(a.largest_runner(), 4);
  EXPECT_EQ(a.largest_bead(), 2 * 7 + 4);
}

TEST(CoreFromAbacus, Examples) {
  EXPECT_EQ(core_from_abacus(AbacusC::identity(3)).partition(), Partition());
  EXPECT_EQ(core_from_abacus(AbacusC(2, {1, 0})).partition(), Partition({1}));
  EXPECT_EQ(core_from_abacus(AbacusC(3, {2, 1, -1})).partition().first_part(), 7);
}

TEST(CoreFromAbacus, AgreesWithBeadCounting) {
  for (int n = 1; n <= 3; ++n)
    for (const AbacusC& a : box(n, 2))
      ASSERT_EQ(partition_from_abacus(a), partition_by_bead_counting(a))
          << a.to_string();
}

TEST(CoreFromAbacus, OutputsSymmetricCores) {
  for (int n = 2; n <= 3; ++n)
    for (const AbacusC& a : box(n, 2)) {
      const Partition p = partition_from_abacus(a);
      EXPECT_TRUE(is_symmetric(p)) << a.to_string();
      EXPECT_TRUE(is_core(p, 2 * n)) << a.to_string();
    }
}

TEST(AbacusFromCore, Examples) {
  EXPECT_EQ(abacus_from_core(Partition(), 2), AbacusC::identity(2));
  EXPECT_EQ(abacus_from_core(Partition({1}), 2), AbacusC(2, {1, 0}));
  EXPECT_THROW(abacus_from_core(Partition({2}), 2), not_a_symmetric_core);
  EXPECT_THROW(abacus_from_core(Partition({3, 3, 3}), 2), not_a_symmetric_core);
}

TEST(AbacusFromCore, RoundTrips) {
  for (int n = 2; n <= 3; ++n)
    for (const AbacusC& a : box(n, 2))
      ASSERT_EQ(abacus_from_core(core_from_abacus(a)), a) << a.to_string();
}

TEST(AbacusFromCore, HitsEverySymmetricCoreBySize) {
  // Every symmetric 4-core with at most 20 boxes comes from the box [-3,3]^2.
  std::set<Partition> from_abaci;
  for (const AbacusC& a : box(2, 3)) from_abaci.insert(partition_from_abacus(a));
  for (const Partition& p : partitions_up_to(20)) {
    if (is_symmetric(p) && is_core(p, 4)) {
      EXPECT_TRUE(from_abaci.count(p)) << p.to_string();
    }
  }
}

TEST(Coroot, Examples) {
  EXPECT_EQ(coroot_from_abacus(AbacusC::identity(3)).coords,
            (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(coroot_from_abacus(AbacusC(3, {1, 2, -2})).coords,
            (std::vector<int>{1, 2, -2}));
  EXPECT_EQ(abacus_from_coroot({{1, 2, -2}}).full_levels(),
            (std::vector<int>{1, 2, -2, 2, -2, -1}));
}

TEST(Coroot, RoundTripsOnBox) {
  for (const AbacusC& a : box(3, 3)) {
    const CorootPoint v = coroot_from_abacus(a);
    ASSERT_EQ(abacus_from_coroot(v), a);
    ASSERT_EQ(coroot_from_abacus(abacus_from_coroot(v)), v);
  }
}

TEST(Window, Examples) {
  EXPECT_EQ(window_from_abacus(AbacusC::identity(3)).values,
            (std::vector<long>{1, 2, 3, 4, 5, 6}));
  const Window w{3, {-11, -1, 2, 5, 8, 18}};
  EXPECT_EQ(abacus_from_window(w), AbacusC(3, {1, 0, -2}));
  EXPECT_EQ(window_from_abacus(AbacusC(3, {1, 0, -2})), w);
}

TEST(Window, ValuesFollowRunnerArithmetic) {
  // -11 = -2*7 + 3, -1 = -1*7 + 6, 2 = 0*7 + 2, 5 = 0*7 + 5, 8 = 7 + 1,
  // 18 = 2*7 + 4: runner levels (1, 0, -2, 2, 0, -1).
  const AbacusC a = abacus_from_window({3, {-11, -1, 2, 5, 8, 18}});
  EXPECT_EQ(a.full_levels(), (std::vector<int>{1, 0, -2, 2, 0, -1}));
}

TEST(Window, RejectsInvalid) {
  EXPECT_THROW(abacus_from_window({2, {1, 2, 3}}), invalid_window);
  EXPECT_THROW(abacus_from_window({2, {0, 2, 3, 5}}), invalid_window);
  EXPECT_THROW(abacus_from_window({2, {1, 6, 3, 4}}), invalid_window);
  EXPECT_THROW(abacus_from_window({2, {1, 2, 4, 3}}), invalid_window);
}

TEST(Window, RoundTripsAndSatisfiesInvariants) {
  for (const AbacusC& a : box(3, 2)) {
    const Window w = window_from_abacus(a);
    EXPECT_NO_THROW(validate_window(w)) << a.to_string();
    EXPECT_TRUE(std::is_sorted(w.values.begin(), w.values.end()));
    EXPECT_EQ(abacus_from_window(w), a);
  }
}

TEST(FirstPart, Examples) {
  EXPECT_EQ(first_part(AbacusC::identity(3)), 0);
  EXPECT_EQ(first_part(AbacusC(3, {2, 1, -1})), 7);
  EXPECT_EQ(first_part(AbacusC(3, {1, 2, -2})), 10);
}

TEST(FirstPart, MatchesCore) {
  for (int n = 1; n <= 3; ++n)
    for (const AbacusC& a : box(n, 2))
      ASSERT_EQ(first_part(a), partition_from_abacus(a).first_part())
          << a.to_string();
}

TEST(SymmetricCore, ValidatesOnConstruction) {
  EXPECT_NO_THROW(SymmetricCore(Partition({2, 1}), 2));
  EXPECT_THROW(SymmetricCore(Partition({2}), 2), not_a_symmetric_core);
  EXPECT_THROW(SymmetricCore(Partition({3, 3, 3}), 2), not_a_symmetric_core);
  EXPECT_THROW(CorePartition(Partition({2, 1}), 3), not_a_core);
}
