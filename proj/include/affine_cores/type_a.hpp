#pragma once

// The affine type-A counterpart: n-cores, n-runner abaci whose levels sum to
// zero, and the projection from n-cores to (n-1)-cores.

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "affine_cores/abacus.hpp"
#include "affine_cores/error.hpp"
#include "affine_cores/partition.hpp"

namespace affine_cores {

// Flush abacus on runners 1..n; runner j holds m*n + j for every level m, and
// is filled up to its highest bead at level levels[j-1].
class AbacusA {
 public:
  AbacusA(int n, std::vector<int> levels) : n_(n), levels_(std::move(levels)) {
    if (n_ < 1) throw invalid_abacus("abacus needs at least one runner");
    if (static_cast<int>(levels_.size()) != n_)
      throw invalid_abacus("abacus with " + std::to_string(n_) +
                           " runners needs " + std::to_string(n_) + " levels");
    if (std::accumulate(levels_.begin(), levels_.end(), 0L) != 0)
      throw invalid_abacus("type-A abacus levels must sum to 0");
  }

  static AbacusA identity(int n) { return AbacusA(n, std::vector<int>(n, 0)); }

  int runners() const noexcept { return n_; }
  const std::vector<int>& levels() const noexcept { return levels_; }
  int level(int j) const noexcept { return levels_[j - 1]; }

  bool is_identity() const noexcept {
    return std::all_of(levels_.begin(), levels_.end(),
                       [](int v) { return v == 0; });
  }

  long top_bead(int j) const noexcept {
    return static_cast<long>(level(j)) * n_ + j;
  }

  bool is_bead(long value) const noexcept {
    const int j = static_cast<int>(detail::mod_one_based(value, n_));
    return value <= top_bead(j);
  }

  // Right-most runner carrying the largest level.
  int largest_runner() const noexcept {
    int best = 1;
    for (int j = 2; j <= n_; ++j)
      if (level(j) >= level(best)) best = j;
    return best;
  }

  std::string to_string() const {
    std::string s = "(";
    for (int j = 1; j <= n_; ++j) {
      if (j > 1) s += ",";
      s += std::to_string(level(j));
    }
    return s + ")";
  }

  friend bool operator==(const AbacusA&, const AbacusA&) = default;
  friend auto operator<=>(const AbacusA&, const AbacusA&) = default;

 private:
  int n_;
  std::vector<int> levels_;
};

inline Partition partition_from_abacus_a(const AbacusA& a) {
  const int n = a.runners();
  int L = 0;
  for (int v : a.levels()) L = std::max(L, std::abs(v));
  const long lo = -static_cast<long>(L + 1) * n;
  const long hi = static_cast<long>(L + 1) * n;
  std::vector<int> rows;
  int gaps = 0;
  for (long v = lo; v <= hi; ++v) {
    if (a.is_bead(v)) {
      if (gaps > 0) rows.push_back(gaps);
    } else {
      ++gaps;
    }
  }
  std::reverse(rows.begin(), rows.end());
  return Partition(std::move(rows));
}

inline CorePartition core_from_abacus_a(const AbacusA& a) {
  return CorePartition(partition_from_abacus_a(a), a.runners());
}

inline AbacusA abacus_a_from_core(const Partition& p, int n) {
  if (n < 1) throw not_a_core("core modulus must be positive");
  if (!is_core(p, n))
    throw not_a_core(p.to_string() + " is not a " + std::to_string(n) + "-core");
  auto levels = detail::runner_levels_of(p, n, 0);
  if (levels.empty())
    throw not_a_core(p.to_string() + " gives a non-flush abacus");
  long sum = std::accumulate(levels.begin(), levels.end(), 0L);
  levels = detail::runner_levels_of(p, n, -sum);
  AbacusA a(n, levels);
  if (partition_from_abacus_a(a) != p)
    throw not_a_core(p.to_string() + " does not round-trip");
  return a;
}

inline AbacusA abacus_a_from_core(const CorePartition& c) {
  return abacus_a_from_core(c.partition(), c.modulus());
}

// n(l - 1) + i for the largest bead at level l on runner i; 0 for the
// identity.
inline int first_part_a(const AbacusA& a) {
  const int i = a.largest_runner();
  return a.runners() * (a.level(i) - 1) + i;
}

// Deletes every row whose first-column hook agrees with the corner hook mod n.
inline CorePartition phi_a_core(const CorePartition& c) {
  const int n = c.modulus();
  if (n < 2) throw precondition_violation("projection needs at least 2 runners");
  const Partition& p = c.partition();
  if (p.empty()) return CorePartition(Partition(), n - 1);
  const int corner = hook_length(p, 1, 1) % n;
  std::vector<int> parts;
  for (int i = 1; i <= p.rows(); ++i)
    if (hook_length(p, i, 1) % n != corner) parts.push_back(p.row(i));
  return CorePartition(Partition(std::move(parts)), n - 1);
}

// Deletes the runner carrying the largest bead, then slides every bead down
// by the same amount so the remaining levels sum to zero again.
inline AbacusA phi_a_abacus(const AbacusA& a) {
  const int n = a.runners();
  if (n < 2) throw precondition_violation("projection needs at least 2 runners");
  if (a.is_identity())
    throw identity_abacus("the identity abacus has no largest runner");
  const int p = a.largest_runner();
  const int m = n - 1;
  std::vector<int> kept;
  for (int j = 1; j <= n; ++j)
    if (j != p) kept.push_back(a.level(j));
  const long shift = std::accumulate(kept.begin(), kept.end(), 0L);
  std::vector<int> levels(m);
  for (int r = 1; r <= m; ++r) {
    const long top = static_cast<long>(kept[r - 1]) * m + r - shift;
    const long runner = detail::mod_one_based(top, m);
    levels[runner - 1] = static_cast<int>((top - runner) / m);
  }
  return AbacusA(m, levels);
}

// Hyperplane <v, e_axis> = level carrying the n-cores with first part k.
struct HyperplaneA {
  int n = 0;
  int k = 0;
  int axis = 0;
  int level = 0;

  bool contains(const std::vector<int>& v) const {
    return static_cast<int>(v.size()) == n && v[axis - 1] == level &&
           std::accumulate(v.begin(), v.end(), 0L) == 0;
  }
};

inline HyperplaneA hyperplane_a(int n, int k) {
  if (n < 1 || k < 0)
    throw precondition_violation("hyperplane needs n >= 1 and k >= 0");
  return {n, k, static_cast<int>(detail::mod_one_based(k, n)),
          static_cast<int>(detail::ceil_div(k, n))};
}

// All n-cores with first part k, as abaci in lexicographic level order.
inline std::vector<AbacusA> enumerate_cores_a(int n, int k) {
  if (n < 1 || k < 0)
    throw precondition_violation("enumeration needs n >= 1 and k >= 0");
  if (k == 0) return {AbacusA::identity(n)};
  if (n == 1) return {};
  const int top = static_cast<int>(detail::ceil_div(k, n));
  const int bottom = -(n - 1) * top;
  std::vector<AbacusA> out;
  std::vector<int> levels(n, bottom);
  while (true) {
    if (std::accumulate(levels.begin(), levels.end(), 0L) == 0) {
      AbacusA a(n, levels);
      if (first_part_a(a) == k) out.push_back(a);
    }
    int pos = n - 1;
    while (pos >= 0 && levels[pos] == top) levels[pos--] = bottom;
    if (pos < 0) break;
    ++levels[pos];
  }
  return out;
}

}  // namespace affine_cores
