#pragma once

// Balanced flush abaci for the type-C quotient and the models in bijection
// with them: symmetric (2n)-cores, coroot lattice points, and windows of
// mirrored Z-permutations.
//
// Runner j (1 <= j <= 2n) holds the entries m*N + j, N = 2n + 1, for every
// level m. A flush runner is determined by the level of its lowest bead, and
// balance forces runner N - j to sit at the negated level of runner j, so an
// abacus is stored as the n levels of runners 1..n. Every stored value is a
// valid balanced flush abacus.

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "affine_cores/error.hpp"
#include "affine_cores/partition.hpp"

namespace affine_cores {

class AbacusC {
 public:
  AbacusC(int n, std::vector<int> levels) : n_(n), levels_(std::move(levels)) {
    if (n_ < 1) throw invalid_abacus("abacus rank must be at least 1");
    if (static_cast<int>(levels_.size()) != n_)
      throw invalid_abacus("abacus of rank " + std::to_string(n_) + " needs " +
                           std::to_string(n_) + " levels");
  }

  static AbacusC identity(int n) { return AbacusC(n, std::vector<int>(n, 0)); }

  // Builds from the 2n-entry level vector; rejects vectors that are not
  // mirror-balanced.
  static AbacusC from_full(std::span<const int> full) {
    if (full.empty() || full.size() % 2 != 0)
      throw invalid_abacus("full level vector must have even positive length");
    const int n = static_cast<int>(full.size() / 2);
    for (int j = 0; j < n; ++j)
      if (full[j] + full[full.size() - 1 - j] != 0)
        throw invalid_abacus("runners " + std::to_string(j + 1) + " and " +
                             std::to_string(2 * n - j) +
                             " are not balanced (levels must sum to 0)");
    return AbacusC(n, std::vector<int>(full.begin(), full.begin() + n));
  }

  int rank() const noexcept { return n_; }
  int runners() const noexcept { return 2 * n_; }
  // N = 2n + 1.
  int modulus() const noexcept { return 2 * n_ + 1; }
  const std::vector<int>& levels() const noexcept { return levels_; }

  // Level of the lowest bead on runner j, 1 <= j <= 2n.
  int level(int j) const noexcept {
    return j <= n_ ? levels_[j - 1] : -levels_[2 * n_ - j];
  }

  std::vector<int> full_levels() const {
    std::vector<int> out(2 * n_);
    for (int j = 1; j <= 2 * n_; ++j) out[j - 1] = level(j);
    return out;
  }

  bool is_identity() const noexcept {
    return std::all_of(levels_.begin(), levels_.end(),
                       [](int v) { return v == 0; });
  }

  // Value m*N + j of the lowest bead on runner j.
  long lowest_bead(int j) const noexcept {
    return static_cast<long>(level(j)) * modulus() + j;
  }

  bool is_bead(long value) const noexcept {
    const long j = value - detail::floor_div(value, modulus()) * modulus();
    if (j == 0) return false;
    return value <= lowest_bead(static_cast<int>(j));
  }

  // Right-most runner carrying the largest level.
  int largest_runner() const noexcept {
    int best = 1;
    for (int j = 2; j <= 2 * n_; ++j)
      if (level(j) >= level(best)) best = j;
    return best;
  }

  long largest_bead() const noexcept { return lowest_bead(largest_runner()); }

  long smallest_gap() const noexcept {
    long best = lowest_bead(1) + modulus();
    for (int j = 2; j <= 2 * n_; ++j)
      best = std::min(best, lowest_bead(j) + modulus());
    return best;
  }

  std::string to_string() const {
    std::string s = "(";
    for (int j = 1; j <= 2 * n_; ++j) {
      if (j > 1) s += ",";
      s += std::to_string(level(j));
    }
    return s + ")";
  }

  friend bool operator==(const AbacusC&, const AbacusC&) = default;
  friend auto operator<=>(const AbacusC&, const AbacusC&) = default;

 private:
  int n_;
  std::vector<int> levels_;
};

struct CorootPoint {
  std::vector<int> coords;
  int rank() const noexcept { return static_cast<int>(coords.size()); }
  friend bool operator==(const CorootPoint&, const CorootPoint&) = default;
  friend auto operator<=>(const CorootPoint&, const CorootPoint&) = default;
};

// Partition known to be an m-core.
class CorePartition {
 public:
  CorePartition(Partition p, int modulus)
      : partition_(std::move(p)), modulus_(modulus) {
    if (!is_core(partition_, modulus_))
      throw not_a_core(partition_.to_string() + " is not a " +
                       std::to_string(modulus_) + "-core");
  }
  const Partition& partition() const noexcept { return partition_; }
  int modulus() const noexcept { return modulus_; }
  friend bool operator==(const CorePartition&, const CorePartition&) = default;
  friend auto operator<=>(const CorePartition&, const CorePartition&) = default;

 private:
  Partition partition_;
  int modulus_;
};

// Self-conjugate (2n)-core for the rank-n quotient.
class SymmetricCore {
 public:
  SymmetricCore(Partition p, int n) : partition_(std::move(p)), n_(n) {
    if (n_ < 1) throw not_a_symmetric_core("rank must be at least 1");
    if (!is_symmetric(partition_))
      throw not_a_symmetric_core(partition_.to_string() + " is not symmetric");
    if (!is_core(partition_, 2 * n_))
      throw not_a_symmetric_core(partition_.to_string() + " is not a " +
                                 std::to_string(2 * n_) + "-core");
  }
  static SymmetricCore empty(int n) { return SymmetricCore(Partition(), n); }
  const Partition& partition() const noexcept { return partition_; }
  int rank() const noexcept { return n_; }
  friend bool operator==(const SymmetricCore&, const SymmetricCore&) = default;
  friend auto operator<=>(const SymmetricCore&, const SymmetricCore&) = default;

 private:
  Partition partition_;
  int n_;
};

// Window [w(1), ..., w(2n)] of a mirrored Z-permutation, N = 2n + 1.
struct Window {
  int n = 0;
  std::vector<long> values;
  friend bool operator==(const Window&, const Window&) = default;
};

// ---------------------------------------------------------------------------
// Abacus <-> core (F_S and its inverse)

// Row lengths read off the abacus: row i counts the gaps preceding the i-th
// largest active bead. Entries are materialized on [-(L+1)N, (L+1)N] with
// L the largest |level|; below that range everything is a bead, above it
// everything is a gap.
inline Partition partition_from_abacus(const AbacusC& a) {
  const int N = a.modulus();
  int L = 0;
  for (int v : a.levels()) L = std::max(L, std::abs(v));
  const long lo = -static_cast<long>(L + 1) * N;
  const long hi = static_cast<long>(L + 1) * N;
  std::vector<int> gaps_before_active;
  int gaps = 0;
  for (long v = lo; v <= hi; ++v) {
    if (v % N == 0) continue;
    if (a.is_bead(v)) {
      if (gaps > 0) gaps_before_active.push_back(gaps);
    } else {
      ++gaps;
    }
  }
  std::reverse(gaps_before_active.begin(), gaps_before_active.end());
  return Partition(std::move(gaps_before_active));
}

inline SymmetricCore core_from_abacus(const AbacusC& a) {
  return SymmetricCore(partition_from_abacus(a), a.rank());
}

namespace detail {

// Lowest-bead level per runner for the Maya diagram of p, with beads at
// compressed positions p_i - i + shift. Compressed position q lies on runner
// (q mod R) + 1 at level floor(q / R), R the runner count. Returns empty if
// some runner is not flush.
inline std::vector<int> runner_levels_of(const Partition& p, int runners,
                                         long shift) {
  const int rows = p.rows();
  auto is_bead = [&](long q) {
    long u = q - shift;
    if (u <= -rows - 1) return true;
    for (int i = 1; i <= rows; ++i)
      if (p.row(i) - i == u) return true;
    return false;
  };
  std::vector<int> levels(runners);
  const long top = p.first_part() + shift;
  const long floor_q = -rows - 1 + shift;
  for (int r = 0; r < runners; ++r) {
    long q = top - (((top - r) % runners) + runners) % runners;
    while (!is_bead(q)) q -= runners;
    levels[r] = static_cast<int>(floor_div(q, runners));
    for (long below = q - runners; below > floor_q - runners; below -= runners)
      if (!is_bead(below)) return {};
  }
  return levels;
}

}  // namespace detail

// Inverse of core_from_abacus for rank n.
inline AbacusC abacus_from_core(const Partition& p, int n) {
  if (n < 1) throw not_a_symmetric_core("rank must be at least 1");
  if (!is_symmetric(p) || !is_core(p, 2 * n))
    throw not_a_symmetric_core(p.to_string() + " is not a symmetric " +
                               std::to_string(2 * n) + "-core");
  const int R = 2 * n;
  auto levels = detail::runner_levels_of(p, R, 0);
  if (levels.empty())
    throw not_a_symmetric_core(p.to_string() + " gives a non-flush abacus");
  long sum = 0;
  for (int v : levels) sum += v;
  levels = detail::runner_levels_of(p, R, -sum);
  AbacusC a = AbacusC::from_full(levels);
  if (partition_from_abacus(a) != p)
    throw not_a_symmetric_core(p.to_string() + " does not round-trip");
  return a;
}

inline AbacusC abacus_from_core(const SymmetricCore& c) {
  return abacus_from_core(c.partition(), c.rank());
}

// ---------------------------------------------------------------------------
// Abacus <-> coroot lattice point (F_R)

inline CorootPoint coroot_from_abacus(const AbacusC& a) { return {a.levels()}; }

inline AbacusC abacus_from_coroot(const CorootPoint& v) {
  return AbacusC(v.rank(), v.coords);
}

// ---------------------------------------------------------------------------
// Abacus <-> window

// Window of the minimal-length coset representative: the lowest beads of the
// 2n runners in increasing order.
inline Window window_from_abacus(const AbacusC& a) {
  Window w{a.rank(), {}};
  for (int j = 1; j <= a.runners(); ++j) w.values.push_back(a.lowest_bead(j));
  std::sort(w.values.begin(), w.values.end());
  return w;
}

inline void validate_window(const Window& w) {
  if (w.n < 1) throw invalid_window("window rank must be at least 1");
  const long N = 2L * w.n + 1;
  if (static_cast<long>(w.values.size()) != 2L * w.n)
    throw invalid_window("window must list 2n values");
  std::vector<bool> seen(N, false);
  for (long v : w.values) {
    long r = v - detail::floor_div(v, N) * N;
    if (r == 0)
      throw invalid_window("window value " + std::to_string(v) +
                           " is divisible by N");
    if (seen[r])
      throw invalid_window("window repeats residue " + std::to_string(r) +
                           " mod N");
    seen[r] = true;
  }
  for (long i = 0; i < 2L * w.n; ++i)
    if (w.values[i] + w.values[2 * w.n - 1 - i] != N)
      throw invalid_window("window is not mirrored: w(i) + w(2n+1-i) != N");
}

inline AbacusC abacus_from_window(const Window& w) {
  validate_window(w);
  const long N = 2L * w.n + 1;
  std::vector<int> full(2 * w.n);
  for (long v : w.values) {
    long r = v - detail::floor_div(v, N) * N;
    full[r - 1] = static_cast<int>(detail::floor_div(v - r, N));
  }
  return AbacusC::from_full(full);
}

// ---------------------------------------------------------------------------

// First part of the core, read from the position of the largest bead:
// 2n(l - 1) + i for the largest bead at level l on runner i.
inline int first_part(const AbacusC& a) {
  const int i = a.largest_runner();
  return 2 * a.rank() * (a.level(i) - 1) + i;
}

// Every abacus of rank n with levels in [-bound, bound], lexicographic.
inline std::vector<AbacusC> abaci_in_box(int n, int bound) {
  std::vector<AbacusC> out;
  std::vector<int> levels(n, -bound);
  while (true) {
    out.emplace_back(n, levels);
    int pos = n - 1;
    while (pos >= 0 && levels[pos] == bound) levels[pos--] = -bound;
    if (pos < 0) break;
    ++levels[pos];
  }
  return out;
}

}  // namespace affine_cores
