#include <gtest/gtest.h>

#include <map>
#include <queue>

#include "affine_cores/coxeter.hpp"

using namespace affine_cores;

namespace {

// Breadth-first distances from the identity in the graph whose edges are the
// generator actions on abaci. Since a generator changes the length of a
// minimal coset representative by at most one, the distance is the length.
std::map<AbacusC, int> bfs_lengths(int n, int radius) {
  std::map<AbacusC, int> dist{{AbacusC::identity(n), 0}};
  std::queue<AbacusC> todo;
  todo.push(AbacusC::identity(n));
  while (!todo.empty()) {
    const AbacusC a = todo.front();
    todo.pop();
    if (dist[a] == radius) continue;
    for (int i = 0; i <= n; ++i) {
      const AbacusC b = apply_generator_abacus(i, a);
      if (dist.emplace(b, dist[a] + 1).second) todo.push(b);
    }
  }
  return dist;
}

AbacusC full(std::vector<int> v) { return AbacusC::from_full(v); }

}  // namespace

TEST(GeneratorAbacus, Examples) {
  EXPECT_EQ(apply_generator_abacus(0, AbacusC(3, {2, 1, -1})),
            full({-1, 1, -1, 1, -1, 1}));
  EXPECT_EQ(apply_generator_abacus(3, full({1, -1, -1, 1, 1, -1})),
            full({1, -1, 1, -1, 1, -1}));
  EXPECT_EQ(apply_generator_abacus(0, AbacusC::identity(3)),
            full({1, 0, 0, 0, 0, -1}));
}

TEST(GeneratorAbacus, RejectsUnknownGenerator) {
  EXPECT_THROW(apply_generator_abacus(4, AbacusC::identity(3)),
               generator_out_of_range);
  EXPECT_THROW(apply_generator_abacus(-1, AbacusC::identity(3)),
               generator_out_of_range);
  EXPECT_THROW(evaluate_word(Word{2, {0, 3}}), generator_out_of_range);
}

TEST(GeneratorAbacus, ChainStepByStep) {
  const std::vector<std::vector<int>> chain{
      {2, 1, -1, 1, -1, -2}, {-1, 1, -1, 1, -1, 1}, {1, -1, -1, 1, 1, -1},
      {1, -1, 1, -1, 1, -1}};
  const int letters[] = {0, 1, 3};
  for (int s = 0; s < 3; ++s)
    EXPECT_EQ(apply_generator_abacus(letters[s], full(chain[s])), full(chain[s + 1]));
}

TEST(GeneratorAbacus, Involutions) {
  for (int n = 1; n <= 3; ++n)
    for (const AbacusC& a : abaci_in_box(n, 2))
      for (int i = 0; i <= n; ++i)
        ASSERT_EQ(apply_generator_abacus(i, apply_generator_abacus(i, a)), a);
}

TEST(GeneratorAbacus, BraidRelationsRankTwo) {
  auto power_is_identity = [](int i, int j, int m, const AbacusC& a) {
    AbacusC b = a;
    for (int r = 0; r < m; ++r)
      b = apply_generator_abacus(i, apply_generator_abacus(j, b));
    return b == a;
  };
  for (const AbacusC& a : abaci_in_box(2, 2)) {
    EXPECT_TRUE(power_is_identity(0, 1, 4, a));
    EXPECT_TRUE(power_is_identity(1, 2, 4, a));
    EXPECT_TRUE(power_is_identity(0, 2, 2, a));
  }
}

TEST(GeneratorCore, Examples) {
  EXPECT_EQ(apply_generator_core(0, SymmetricCore::empty(2)).partition(),
            Partition({1}));
  EXPECT_EQ(apply_generator_core(1, SymmetricCore(Partition({1}), 2)).partition(),
            Partition({2, 1}));
  EXPECT_EQ(apply_generator_core(2, SymmetricCore::empty(2)).partition(), Partition());
}

TEST(GeneratorCore, CommutesWithAbacusAction) {
  for (int n = 2; n <= 3; ++n)
    for (const AbacusC& a : abaci_in_box(n, 2))
      for (int i = 0; i <= n; ++i)
        ASSERT_EQ(apply_generator_core(i, core_from_abacus(a)),
                  core_from_abacus(apply_generator_abacus(i, a)))
            << a.to_string() << " s" << i;
}

TEST(EvaluateWord, Examples) {
  EXPECT_EQ(evaluate_word(Word{3, {}}), AbacusC::identity(3));
  EXPECT_EQ(evaluate_word(Word{3, {0, 1, 3, 2, 3, 0, 1, 2, 0, 1, 0}}),
            AbacusC(3, {2, 1, -1}));
  EXPECT_EQ(evaluate_word(Word{2, {2, 0, 1, 0}}), AbacusC(2, {1, -1}));
}

TEST(CanonicalWord, Examples) {
  EXPECT_TRUE(canonical_reduced_word(AbacusC::identity(3)).empty());
  const Word w = canonical_reduced_word(AbacusC(3, {2, 1, -1}));
  EXPECT_EQ(w.size(), 11u);
  EXPECT_EQ(evaluate_word(w), AbacusC(3, {2, 1, -1}));
  EXPECT_EQ(canonical_reduced_word(AbacusC(2, {1, 0})), (Word{2, {0}}));
}

TEST(Length, Examples) {
  EXPECT_EQ(length(AbacusC::identity(2)), 0);
  EXPECT_EQ(length(AbacusC(3, {2, 1, -1})), 11);
  EXPECT_EQ(length(AbacusC(2, {1, -1})), 4);
}

TEST(CanonicalWord, EvaluatesBackAndMatchesBreadthFirstLength) {
  for (int n = 2; n <= 3; ++n) {
    const auto dist = bfs_lengths(n, 14);
    for (const AbacusC& a : abaci_in_box(n, 2)) {
      const Word w = canonical_reduced_word(a);
      ASSERT_EQ(evaluate_word(w), a) << a.to_string();
      const auto it = dist.find(a);
      if (it != dist.end()) {
        EXPECT_EQ(static_cast<int>(w.size()), it->second) << a.to_string();
      } else {
        EXPECT_GT(static_cast<int>(w.size()), 14) << a.to_string();
      }
    }
  }
}

TEST(CanonicalWord, NoMixedResidueOnEnumeratedCores) {
  for (int n = 2; n <= 3; ++n)
    for (const AbacusC& a : abaci_in_box(n, 3))
      for (int i = 0; i <= n; ++i)
        EXPECT_NO_THROW(apply_generator_core(i, core_from_abacus(a)));
}
