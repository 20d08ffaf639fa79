#pragma once

// The projection from rank n to rank n - 1 on cores, abaci, coroot points and
// reduced words, together with the hyperplane that carries the cores of a
// fixed first part.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "affine_cores/abacus.hpp"
#include "affine_cores/coxeter.hpp"
#include "affine_cores/error.hpp"
#include "affine_cores/partition.hpp"

namespace affine_cores {

// Cores of rank n with first part k have coroot points on the hyperplane
// <v, e_axis> = level.
struct DomainParams {
  int n = 0;
  int k = 0;
  int l1 = 0;  // k mod n in 1..n
  int l2 = 0;  // k mod 2n in 1..2n
  int axis = 0;
  int level = 0;

  int c() const noexcept { return level < 0 ? -level : level; }
  bool positive_branch() const noexcept { return l2 <= n; }
  friend bool operator==(const DomainParams&, const DomainParams&) = default;
};

inline DomainParams domain_params(int n, int k) {
  if (n < 2) throw precondition_violation("projection needs rank n >= 2");
  if (k < 1)
    throw precondition_violation(
        "first part k must be positive; the empty core maps to itself");
  DomainParams d;
  d.n = n;
  d.k = k;
  d.l1 = static_cast<int>(detail::mod_one_based(k, n));
  d.l2 = static_cast<int>(detail::mod_one_based(k, 2 * n));
  const int c = static_cast<int>(detail::ceil_div(k, 2 * n));
  if (d.l2 <= n) {
    d.axis = d.l1;
    d.level = c;
  } else {
    d.axis = n - d.l1 + 1;
    d.level = -c;
  }
  return d;
}

// Coroot points of the symmetric (2n)-cores with first part k.
inline bool in_domain(const CorootPoint& v, int k) {
  const int n = v.rank();
  if (n < 2 || k < 1) return false;
  const DomainParams d = domain_params(n, k);
  const int c = d.c();
  for (int i = 1; i <= n; ++i) {
    const int x = v.coords[i - 1];
    if (i == d.axis) {
      if (x != d.level) return false;
      continue;
    }
    bool ok;
    if (d.positive_branch())
      ok = i < d.l1 ? (-c < x && x <= c) : (-c < x && x < c);
    else
      ok = i < d.axis ? (-c < x && x <= c) : (-c <= x && x <= c);
    if (!ok) return false;
  }
  return true;
}

namespace detail {

inline CorootPoint insert_axis(const CorootPoint& u, const DomainParams& d) {
  std::vector<int> coords = u.coords;
  coords.insert(coords.begin() + (d.axis - 1), d.level);
  return {coords};
}

inline std::vector<CorootPoint> points_in_box(int rank, int bound) {
  std::vector<CorootPoint> out;
  if (rank == 0) return {CorootPoint{}};
  for (const AbacusC& a : abaci_in_box(rank, bound))
    out.push_back({a.levels()});
  return out;
}

}  // namespace detail

// Rank n - 1 points hit by the projection of the domain for (n, k).
inline bool in_codomain(const CorootPoint& u, int n, int k) {
  if (u.rank() != n - 1) return false;
  return in_domain(detail::insert_axis(u, domain_params(n, k)), k);
}

inline std::vector<CorootPoint> enumerate_domain(int n, int k) {
  const DomainParams d = domain_params(n, k);
  std::vector<CorootPoint> out;
  for (const CorootPoint& v : detail::points_in_box(n, d.c()))
    if (in_domain(v, k)) out.push_back(v);
  return out;
}

inline std::vector<CorootPoint> enumerate_codomain(int n, int k) {
  const DomainParams d = domain_params(n, k);
  std::vector<CorootPoint> out;
  for (const CorootPoint& u : detail::points_in_box(n - 1, d.c()))
    if (in_codomain(u, n, k)) out.push_back(u);
  return out;
}

inline CorootPoint phi_coroot(const CorootPoint& v, int k) {
  if (!in_domain(v, k))
    throw not_in_domain("coroot point is not on the hyperplane region for k = " +
                        std::to_string(k));
  const DomainParams d = domain_params(v.rank(), k);
  std::vector<int> coords = v.coords;
  coords.erase(coords.begin() + (d.axis - 1));
  return {coords};
}

inline CorootPoint phi_coroot_inverse(const CorootPoint& u, int n, int k) {
  if (!in_codomain(u, n, k))
    throw not_in_domain("coroot point is outside the image for n = " +
                        std::to_string(n) + ", k = " + std::to_string(k));
  return detail::insert_axis(u, domain_params(n, k));
}

namespace detail {

// Deletes the right-most largest runner and its mirror. The identity maps to
// the identity one rank down.
inline AbacusC drop_largest_runner(const AbacusC& a) {
  const int p = a.largest_runner();
  const int q = a.modulus() - p;
  std::vector<int> full;
  for (int j = 1; j <= a.runners(); ++j)
    if (j != p && j != q) full.push_back(a.level(j));
  return AbacusC::from_full(full);
}

}  // namespace detail

inline AbacusC phi_abacus(const AbacusC& a) {
  if (a.rank() < 2) throw precondition_violation("projection needs rank n >= 2");
  if (a.is_identity())
    throw identity_abacus("the identity abacus has no largest runner");
  return detail::drop_largest_runner(a);
}

// Deletes the rows (columns) whose last box carries the same diagonal label
// as the last box of the first row (column).
inline SymmetricCore phi_core(const SymmetricCore& c) {
  const int n = c.rank();
  if (n < 2) throw precondition_violation("projection needs rank n >= 2");
  const Partition& p = c.partition();
  if (p.empty()) return SymmetricCore::empty(n - 1);
  const Partition conj = p.conjugate();
  const int row_label = diag_label(1, p.row(1), n);
  const int col_label = diag_label(conj.row(1), 1, n);
  std::vector<bool> keep_col(p.first_part() + 1, false);
  for (int j = 1; j <= p.first_part(); ++j)
    keep_col[j] = diag_label(conj.row(j), j, n) != col_label;
  std::vector<int> parts;
  for (int i = 1; i <= p.rows(); ++i) {
    if (diag_label(i, p.row(i), n) == row_label) continue;
    int len = 0;
    for (int j = 1; j <= p.row(i); ++j)
      if (keep_col[j]) ++len;
    if (len > 0) parts.push_back(len);
  }
  return SymmetricCore(Partition(std::move(parts)), n - 1);
}

// ---------------------------------------------------------------------------
// Reduced words

struct ProjectionStep {
  int letter;
  std::optional<int> emitted;
  std::vector<int> abacus_after;  // full level vector
};

struct ProjectedWord {
  Word word;
  std::vector<ProjectionStep> trace;
};

namespace detail {

inline bool touches_runner(int i, int n, int runner) {
  if (i == 0) return runner == 1 || runner == 2 * n;
  if (i == n) return runner == n || runner == n + 1;
  return runner == i || runner == i + 1 || runner == 2 * n - i ||
         runner == 2 * n - i + 1;
}

inline void require_reduced_word_for(const Word& w, const AbacusC& a) {
  if (w.n != a.rank())
    throw rank_mismatch("word has rank " + std::to_string(w.n) +
                        " but abacus has rank " + std::to_string(a.rank()));
  if (evaluate_word(w) != a)
    throw precondition_violation("word " + w.to_string() +
                                 " does not evaluate to " + a.to_string());
  if (static_cast<int>(w.size()) != length(a))
    throw not_reduced("word " + w.to_string() + " has " +
                      std::to_string(w.size()) + " letters but the length is " +
                      std::to_string(length(a)));
}

}  // namespace detail

// Reads w left to right as it walks a back to the identity. Letters that move
// the largest runner are dropped; every other letter s_i becomes s_i or
// s_{i-1} one rank down, depending on whether the deleted runner sits left
// of the swapped pair.
inline ProjectedWord phi_word_traced(const Word& w, const AbacusC& a) {
  const int n = a.rank();
  if (n < 2) throw precondition_violation("projection needs rank n >= 2");
  if (a.is_identity())
    throw identity_abacus("the identity abacus has first part 0");
  detail::require_reduced_word_for(w, a);

  ProjectedWord out{{n - 1, {}}, {}};
  AbacusC cur = a;
  for (int i : w.letters) {
    const int p = cur.largest_runner();
    const int p_low = std::min(p, cur.modulus() - p);
    const AbacusC next = apply_generator_abacus(i, cur);
    const AbacusC image = detail::drop_largest_runner(cur);
    const AbacusC next_image = detail::drop_largest_runner(next);
    std::optional<int> emitted;
    if (detail::touches_runner(i, n, p)) {
      if (next_image != image)
        throw invariant_violation("letter s" + std::to_string(i) +
                                  " moves the largest runner of " +
                                  cur.to_string() + " but changes the image");
    } else {
      const int j = (i == 0) ? 0 : i - (p_low < i ? 1 : 0);
      if (apply_generator_abacus(j, image) != next_image)
        throw invariant_violation("s" + std::to_string(j) +
                                  " does not close the square for s" +
                                  std::to_string(i) + " at " + cur.to_string());
      emitted = j;
      out.word.letters.push_back(j);
    }
    out.trace.push_back({i, emitted, next.full_levels()});
    cur = next;
  }
  return out;
}

inline Word phi_word(const Word& w, const AbacusC& a) {
  return phi_word_traced(w, a).word;
}

namespace detail {

// Rank-n generator swapping full positions x and x + 1 (with the mirror).
inline int generator_for_swap(int x, int n) {
  if (x < n) return x;
  if (x == n) return n;
  return 2 * n - x;
}

}  // namespace detail

// Builds a reduced word for a from a reduced word of its image: each image
// letter is lifted to one letter, plus the moves that carry the largest
// runner out of the way, and the word is completed by a canonical word of
// whatever remains once the image reaches the identity.
inline Word lift_word(const Word& reduced, const AbacusC& a) {
  const int n = a.rank();
  if (n < 2) throw precondition_violation("lifting needs rank n >= 2");
  if (reduced.n != n - 1)
    throw rank_mismatch("image word must have rank " + std::to_string(n - 1));
  if (a.is_identity())
    throw identity_abacus("the identity abacus has first part 0");
  const AbacusC target = detail::drop_largest_runner(a);
  detail::require_reduced_word_for(reduced, target);

  Word out{n, {}};
  AbacusC cur = a;
  auto apply = [&](int g) {
    cur = apply_generator_abacus(g, cur);
    out.letters.push_back(g);
  };

  for (int j : reduced.letters) {
    const AbacusC image = detail::drop_largest_runner(cur);
    const AbacusC wanted = apply_generator_abacus(j, image);
    int p = cur.largest_runner();
    int q = cur.modulus() - p;
    // Full position of the x-th reduced position.
    auto full_pos = [&](int x) {
      int seen = 0;
      for (int r = 1; r <= 2 * n; ++r) {
        if (r == p || r == q) continue;
        if (++seen == x) return r;
      }
      return 0;
    };
    if (j == 0) {
      if (full_pos(1) == 1) {
        apply(0);
      } else if (p == 1) {
        apply(0);
        apply(1);
        apply(0);
      } else {
        apply(1);
        apply(0);
      }
    } else {
      int u = full_pos(j);
      int v = full_pos(j + 1);
      while (v != u + 1) {
        // Slide the largest runner one step left and its mirror one step
        // right; the reduced positions keep their order.
        apply(detail::generator_for_swap(p - 1, n));
        if (u == p - 1) u = p;
        if (v == p - 1) v = p;
        if (u == q + 1) u = q;
        if (v == q + 1) v = q;
        --p;
        ++q;
      }
      apply(detail::generator_for_swap(u, n));
    }
    if (detail::drop_largest_runner(cur) != wanted)
      throw invariant_violation("lifting s" + std::to_string(j) +
                                " did not close the square at " +
                                cur.to_string());
  }
  for (int g : canonical_reduced_word(cur).letters) apply(g);

  const int expected = static_cast<int>(reduced.size()) + first_part(a);
  if (static_cast<int>(out.size()) != expected)
    throw invariant_violation("lifted word " + out.to_string() + " has " +
                              std::to_string(out.size()) + " letters, expected " +
                              std::to_string(expected));
  return out;
}

}  // namespace affine_cores
