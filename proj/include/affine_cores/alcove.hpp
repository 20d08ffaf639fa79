#pragma once

// Alcoves of the affine type-C arrangement in exact rational arithmetic.
//
// An alcove is identified by its signature: for each positive root a, the
// integer k with k < (x, a) < k + 1 for every interior point x. The centroid
// of the fundamental alcove is carried along as the interior witness.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "affine_cores/abacus.hpp"
#include "affine_cores/coxeter.hpp"
#include "affine_cores/error.hpp"
#include "affine_cores/projection.hpp"

namespace affine_cores {

using Rational = boost::rational<std::int64_t>;
using Point = std::vector<Rational>;
using Root = std::vector<int>;

// Positive roots in a fixed order: 2e_1, ..., 2e_n, then e_i - e_j and
// e_i + e_j for i < j.
inline std::vector<Root> positive_roots(int n) {
  std::vector<Root> out;
  for (int i = 0; i < n; ++i) {
    Root r(n, 0);
    r[i] = 2;
    out.push_back(r);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Root minus(n, 0), plus(n, 0);
      minus[i] = 1;
      minus[j] = -1;
      plus[i] = 1;
      plus[j] = 1;
      out.push_back(minus);
      out.push_back(plus);
    }
  return out;
}

inline std::vector<Root> simple_roots(int n) {
  std::vector<Root> out;
  for (int i = 0; i + 1 < n; ++i) {
    Root r(n, 0);
    r[i] = 1;
    r[i + 1] = -1;
    out.push_back(r);
  }
  Root last(n, 0);
  last[n - 1] = 2;
  out.push_back(last);
  return out;
}

inline Root highest_root(int n) {
  Root r(n, 0);
  r[0] = 2;
  return r;
}

inline Rational pair(const Point& x, const Root& a) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s += x[i] * a[i];
  return s;
}

inline std::int64_t floor_of(const Rational& r) {
  return detail::floor_div(r.numerator(), r.denominator());
}

// H_{a,m} = {x : (x, a) = m}, root always positive.
struct AffineHyperplane {
  Root root;
  long offset = 0;

  std::string to_string() const {
    std::string s = "H(";
    for (std::size_t i = 0; i < root.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(root[i]);
    }
    return s + ";" + std::to_string(offset) + ")";
  }
  friend bool operator==(const AffineHyperplane&,
                         const AffineHyperplane&) = default;
};

// Reflection in H_{a,m}: x - ((x, a) - m) a^vee.
inline Point reflect(const Point& x, const AffineHyperplane& h) {
  const bool is_long = std::any_of(h.root.begin(), h.root.end(),
                                   [](int c) { return c == 2 || c == -2; });
  const Rational t = pair(x, h.root) - Rational(h.offset);
  Point out = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const int coroot = is_long ? h.root[i] / 2 : h.root[i];
    if (coroot != 0) out[i] -= t * coroot;
  }
  return out;
}

// The hyperplane fixed by generator s_i.
inline AffineHyperplane generator_hyperplane(int i, int n) {
  check_generator(i, n);
  if (i == 0) return {highest_root(n), 1};
  return {simple_roots(n)[i - 1], 0};
}

// Average of the vertices of the fundamental alcove
// 1/2 > x_1 > ... > x_n > 0.
inline Point fundamental_centroid(int n) {
  Point c(n);
  for (int i = 1; i <= n; ++i) c[i - 1] = Rational(n - i + 1, 2 * (n + 1));
  return c;
}

inline std::vector<Point> fundamental_vertices(int n) {
  std::vector<Point> out;
  for (int j = 0; j <= n; ++j) {
    Point v(n, Rational(0));
    for (int i = 0; i < j; ++i) v[i] = Rational(1, 2);
    out.push_back(v);
  }
  return out;
}

inline std::vector<long> signature_of(const Point& x) {
  std::vector<long> sig;
  for (const Root& a : positive_roots(static_cast<int>(x.size())))
    sig.push_back(floor_of(pair(x, a)));
  return sig;
}

// Strict interior test against every hyperplane.
inline bool is_interior(const Point& x) {
  for (const Root& a : positive_roots(static_cast<int>(x.size())))
    if (pair(x, a).denominator() == 1) return false;
  return true;
}

struct Alcove {
  Word word;
  Point centroid;
  std::vector<long> signature;

  int rank() const noexcept { return static_cast<int>(centroid.size()); }
  friend bool operator==(const Alcove& a, const Alcove& b) {
    return a.signature == b.signature;
  }
};

// Applies the letters right to left to the fundamental centroid.
inline Point apply_word(const Word& w, Point x) {
  validate_word(w);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    x = reflect(x, generator_hyperplane(*it, w.n));
  return x;
}

inline Alcove alcove_from_word(const Word& w) {
  Point c = apply_word(w, fundamental_centroid(w.n));
  std::vector<long> sig = signature_of(c);
  return {w, std::move(c), std::move(sig)};
}

inline Alcove fundamental_alcove(int n) { return alcove_from_word(Word{n, {}}); }

// Number of hyperplanes separating the alcove from the fundamental one.
inline int geometric_length(const Alcove& a) {
  long total = 0;
  for (long k : a.signature) total += k >= 0 ? k : -k;
  return static_cast<int>(total);
}

// A reduced word for the alcove containing x, found by repeatedly reflecting
// across a fundamental wall that separates x from the fundamental alcove.
inline Word reduced_word_at(const Point& x) {
  const int n = static_cast<int>(x.size());
  const Point c0 = fundamental_centroid(n);
  Word w{n, {}};
  Point cur = x;
  while (true) {
    int found = -1;
    for (int i = 0; i <= n && found < 0; ++i) {
      const AffineHyperplane h = generator_hyperplane(i, n);
      const Rational side = pair(cur, h.root) - Rational(h.offset);
      const Rational home = pair(c0, h.root) - Rational(h.offset);
      if ((side > 0) != (home > 0)) found = i;
    }
    if (found < 0) break;
    cur = reflect(cur, generator_hyperplane(found, n));
    w.letters.push_back(found);
  }
  return w;
}

// Alcove containing the interior point x.
inline Alcove alcove_at(const Point& x) {
  if (!is_interior(x))
    throw precondition_violation("point lies on a hyperplane");
  return {reduced_word_at(x), x, signature_of(x)};
}

// ---------------------------------------------------------------------------
// Walks

struct AlcoveWalk {
  std::vector<Alcove> alcoves;
  std::vector<AffineHyperplane> crossings;

  std::size_t length() const noexcept { return crossings.size(); }
  const Alcove& back() const { return alcoves.back(); }
};

// The hyperplane separating two adjacent alcoves.
inline AffineHyperplane shared_wall(const Alcove& a, const Alcove& b) {
  if (a.rank() != b.rank())
    throw rank_mismatch("alcoves of different rank are never adjacent");
  const auto roots = positive_roots(a.rank());
  std::optional<AffineHyperplane> wall;
  for (std::size_t r = 0; r < roots.size(); ++r) {
    const long ka = a.signature[r];
    const long kb = b.signature[r];
    if (ka == kb) continue;
    if (wall || (ka - kb != 1 && kb - ka != 1))
      throw precondition_violation("alcoves are not adjacent");
    wall = AffineHyperplane{roots[r], std::max(ka, kb)};
  }
  if (!wall) throw precondition_violation("alcoves coincide");
  return *wall;
}

// Walk through the alcoves of the prefixes s_{i1}, s_{i1}s_{i2}, ...
inline AlcoveWalk walk_from_word(const Word& w) {
  AlcoveWalk walk;
  Word prefix{w.n, {}};
  walk.alcoves.push_back(alcove_from_word(prefix));
  for (int i : w.letters) {
    prefix.letters.push_back(i);
    walk.alcoves.push_back(alcove_from_word(prefix));
    walk.crossings.push_back(
        shared_wall(walk.alcoves[walk.alcoves.size() - 2], walk.alcoves.back()));
  }
  return walk;
}

// ---------------------------------------------------------------------------
// Cosets of the finite group

// Coroot point of the coset: the lattice point nearest the centroid.
inline CorootPoint coroot_of(const Alcove& a) {
  CorootPoint v;
  for (const Rational& x : a.centroid)
    v.coords.push_back(static_cast<int>(floor_of(x + Rational(1, 2))));
  return v;
}

// The 2^n n! alcoves v + t(A) for signed permutations t, in a fixed order.
inline std::vector<Alcove> coset_alcoves(const CorootPoint& v) {
  const int n = v.rank();
  const Point c0 = fundamental_centroid(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Alcove> out;
  do {
    for (int signs = 0; signs < (1 << n); ++signs) {
      Point x(n);
      for (int i = 0; i < n; ++i) {
        const Rational coord = c0[perm[i]];
        x[i] = Rational(v.coords[i]) + (((signs >> i) & 1) ? -coord : coord);
      }
      out.push_back(alcove_at(x));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// The minimal-length alcove of the coset of v.
inline Alcove distinguished_alcove(const CorootPoint& v) {
  const auto coset = coset_alcoves(v);
  return *std::min_element(coset.begin(), coset.end(),
                           [](const Alcove& a, const Alcove& b) {
                             return geometric_length(a) < geometric_length(b);
                           });
}

inline bool is_distinguished(const Alcove& a) {
  const auto coset = coset_alcoves(coroot_of(a));
  const int len = geometric_length(a);
  return std::all_of(coset.begin(), coset.end(), [&](const Alcove& b) {
    return len <= geometric_length(b);
  });
}

// ---------------------------------------------------------------------------
// Projection onto the hyperplane

enum class StepKind { perpendicular, parallel };

inline StepKind classify_step(const AffineHyperplane& h, const DomainParams& d) {
  return h.root[d.axis - 1] != 0 ? StepKind::perpendicular : StepKind::parallel;
}

// Forgets the axis coordinate, identifying the hyperplane with rank n - 1.
inline Point project_point(const Point& x, const DomainParams& d) {
  Point out;
  for (int i = 0; i < static_cast<int>(x.size()); ++i)
    if (i != d.axis - 1) out.push_back(x[i]);
  return out;
}

inline Alcove project_alcove(const Alcove& a, const DomainParams& d) {
  if (a.rank() != d.n)
    throw rank_mismatch("alcove rank does not match the projection");
  return alcove_at(project_point(a.centroid, d));
}

// Distinguished alcove over the hyperplane that projects onto the
// fundamental alcove one rank down.
inline Alcove base_alcove(const DomainParams& d) {
  return distinguished_alcove(
      phi_coroot_inverse(CorootPoint{std::vector<int>(d.n - 1, 0)}, d.n, d.k));
}

// The translate of the hyperplane half a unit toward the origin, written as
// (x, 2e_axis) = offset.
inline AffineHyperplane shifted_hyperplane(const DomainParams& d) {
  Root r(d.n, 0);
  r[d.axis - 1] = 2;
  return {r, 2L * d.level - (d.level > 0 ? 1 : -1)};
}

// True iff the alcove lies over the domain and has a facet on the shifted
// hyperplane.
inline bool is_good_alcove(const Alcove& a, const DomainParams& d) {
  if (a.rank() != d.n || !in_domain(coroot_of(a), d.k)) return false;
  const AffineHyperplane t = shifted_hyperplane(d);
  const long k = a.signature[d.axis - 1];
  if (k != t.offset && k != t.offset - 1) return false;
  const Alcove mirror = alcove_at(reflect(a.centroid, t));
  int differing = 0;
  for (std::size_t r = 0; r < a.signature.size(); ++r)
    if (a.signature[r] != mirror.signature[r]) ++differing;
  return differing == 1;
}

// Projects every alcove of the walk and deletes consecutive repeats.
inline AlcoveWalk project_walk(const AlcoveWalk& walk, const DomainParams& d) {
  if (!in_domain(coroot_of(walk.back()), d.k))
    throw not_in_domain("walk does not end over the domain for k = " +
                        std::to_string(d.k));
  AlcoveWalk out;
  for (const Alcove& a : walk.alcoves) {
    Alcove image = project_alcove(a, d);
    if (!out.alcoves.empty() && out.alcoves.back() == image) continue;
    if (!out.alcoves.empty())
      out.crossings.push_back(shared_wall(out.alcoves.back(), image));
    out.alcoves.push_back(std::move(image));
  }
  return out;
}

inline int count_perpendicular(const AlcoveWalk& walk, const DomainParams& d) {
  int count = 0;
  for (const AffineHyperplane& h : walk.crossings)
    if (classify_step(h, d) == StepKind::perpendicular) ++count;
  return count;
}

}  // namespace affine_cores
