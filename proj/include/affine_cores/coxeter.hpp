#pragma once

// Generators s_0, ..., s_n of the affine type-C group acting on the left of
// the quotient, realized on abaci and on symmetric cores; word evaluation,
// canonical reduced words and length.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "affine_cores/abacus.hpp"
#include "affine_cores/error.hpp"
#include "affine_cores/partition.hpp"

namespace affine_cores {

struct Word {
  int n = 0;
  std::vector<int> letters;

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }

  std::string to_string() const {
    if (letters.empty()) return "1";
    std::string s;
    for (int i : letters) s += "s" + std::to_string(i);
    return s;
  }

  friend bool operator==(const Word&, const Word&) = default;
};

inline void check_generator(int i, int n) {
  if (i < 0 || i > n)
    throw generator_out_of_range("generator s" + std::to_string(i) +
                                 " does not exist in rank " +
                                 std::to_string(n));
}

inline void validate_word(const Word& w) {
  if (w.n < 1) throw generator_out_of_range("word rank must be at least 1");
  for (int i : w.letters) check_generator(i, w.n);
}

// Generator action on the full level vector, in place.
inline void apply_generator_full(int i, std::vector<int>& full) {
  const int n = static_cast<int>(full.size() / 2);
  check_generator(i, n);
  if (i == 0) {
    const int first = full.front();
    const int last = full.back();
    full.front() = last + 1;
    full.back() = first - 1;
  } else if (i == n) {
    std::swap(full[n - 1], full[n]);
  } else {
    std::swap(full[i - 1], full[i]);
    std::swap(full[2 * n - i - 1], full[2 * n - i]);
  }
}

inline AbacusC apply_generator_abacus(int i, const AbacusC& a) {
  auto full = a.full_levels();
  apply_generator_full(i, full);
  return AbacusC::from_full(full);
}

namespace detail {

// Adds every addable box of residue i or removes every removable one.
inline Partition act_on_partition(int i, const Partition& p, int n) {
  std::vector<Box> add, remove;
  for (const Box& b : addable_boxes(p))
    if (residue(b.row, b.column, n) == i) add.push_back(b);
  for (const Box& b : removable_boxes(p))
    if (residue(b.row, b.column, n) == i) remove.push_back(b);
  if (!add.empty() && !remove.empty())
    throw mixed_residue_action("partition " + p.to_string() +
                               " has both addable and removable boxes of "
                               "residue " + std::to_string(i));
  std::vector<int> parts = p.parts();
  for (const Box& b : add) {
    if (b.row > static_cast<int>(parts.size())) parts.push_back(0);
    ++parts[b.row - 1];
  }
  for (const Box& b : remove) --parts[b.row - 1];
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

inline bool has_removable_residue(const Partition& p, int i, int n) {
  for (const Box& b : removable_boxes(p))
    if (residue(b.row, b.column, n) == i) return true;
  return false;
}

}  // namespace detail

inline SymmetricCore apply_generator_core(int i, const SymmetricCore& c) {
  check_generator(i, c.rank());
  return SymmetricCore(detail::act_on_partition(i, c.partition(), c.rank()),
                       c.rank());
}

// Applies the letters right to left to the identity abacus.
inline AbacusC evaluate_word(const Word& w) {
  validate_word(w);
  std::vector<int> full(2 * w.n, 0);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    apply_generator_full(*it, full);
  return AbacusC::from_full(full);
}

// Peels the core down to the empty partition, always removing the boxes of
// the smallest residue that has a removable box. Letters are listed in the
// order they were peeled, which is also the word that evaluates to a.
inline Word canonical_reduced_word(const AbacusC& a) {
  const int n = a.rank();
  Word w{n, {}};
  Partition p = partition_from_abacus(a);
  while (!p.empty()) {
    int i = 0;
    while (!detail::has_removable_residue(p, i, n)) ++i;
    p = detail::act_on_partition(i, p, n);
    w.letters.push_back(i);
  }
  return w;
}

inline int length(const AbacusC& a) {
  return static_cast<int>(canonical_reduced_word(a).size());
}

}  // namespace affine_cores
