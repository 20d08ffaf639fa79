#pragma once

// Strong Bruhat order on the quotient, three ways: bead-by-bead comparison of
// abaci, containment of cores, and the subword property of reduced words.

#include <set>
#include <string>
#include <vector>

#include "affine_cores/abacus.hpp"
#include "affine_cores/coxeter.hpp"
#include "affine_cores/error.hpp"
#include "affine_cores/partition.hpp"
#include "affine_cores/projection.hpp"

namespace affine_cores {

// The first `count` beads of a, largest first.
inline std::vector<long> bead_sequence(const AbacusC& a, int count) {
  std::vector<long> out;
  for (long v = a.largest_bead(); static_cast<int>(out.size()) < count; --v)
    if (a.is_bead(v)) out.push_back(v);
  return out;
}

// y <= x: the j-th highest bead of x is at least the j-th highest bead of y
// for every j. Below the smaller of the two smallest gaps both abaci are
// solid, and balance forces equally many beads above that point, so the
// sequences agree after that many terms; 2n further terms are compared as a
// check.
inline bool bruhat_leq_beads(const AbacusC& x, const AbacusC& y) {
  if (x.rank() != y.rank())
    throw rank_mismatch("Bruhat comparison needs equal ranks");
  const long floor = std::min(x.smallest_gap(), y.smallest_gap());
  auto beads_from = [floor](const AbacusC& a) {
    int c = 0;
    for (long v = floor; v <= a.largest_bead(); ++v)
      if (a.is_bead(v)) ++c;
    return c;
  };
  const int cx = beads_from(x);
  const int cy = beads_from(y);
  if (cx != cy)
    throw invariant_violation("abaci " + x.to_string() + " and " +
                              y.to_string() +
                              " have different bead counts above the floor");
  const int prefix = cx + x.runners();
  const auto bx = bead_sequence(x, prefix);
  const auto by = bead_sequence(y, prefix);
  for (int j = cx; j < prefix; ++j)
    if (bx[j] != by[j])
      throw invariant_violation("bead sequences of " + x.to_string() + " and " +
                                y.to_string() + " differ past the prefix");
  for (int j = 0; j < cx; ++j)
    if (bx[j] < by[j]) return false;
  return true;
}

// y <= x by the subword property: y is below x iff it is the coset of the
// product of some subword of a reduced word of x.
inline bool bruhat_oracle_subword(const AbacusC& x, const AbacusC& y,
                                  int bound = 8) {
  if (x.rank() != y.rank())
    throw rank_mismatch("Bruhat comparison needs equal ranks");
  const Word wx = canonical_reduced_word(x);
  const int ly = length(y);
  if (static_cast<int>(wx.size()) > bound || ly > bound)
    throw bound_exceeded("subword oracle is limited to length " +
                         std::to_string(bound) + "; got lengths " +
                         std::to_string(wx.size()) + " and " +
                         std::to_string(ly));
  if (ly > static_cast<int>(wx.size())) return false;
  std::set<AbacusC> products{AbacusC::identity(x.rank())};
  for (auto it = wx.letters.rbegin(); it != wx.letters.rend(); ++it) {
    std::set<AbacusC> next = products;
    for (const AbacusC& a : products)
      next.insert(apply_generator_abacus(*it, a));
    products = std::move(next);
  }
  return products.count(y) > 0;
}

struct BruhatViolation {
  std::string kind;
  AbacusC x;
  AbacusC y;
};

struct PreservationReport {
  int n = 0;
  int k = 0;
  long pairs = 0;
  long oracle_pairs = 0;
  std::vector<BruhatViolation> violations;
};

// Checks over all ordered pairs of the domain for (n, k) that the projection
// preserves and reflects the bead order. The bead order is also compared with
// core containment on every pair, and with the subword oracle on pairs whose
// lengths are within `oracle_bound` (0 disables the oracle).
inline PreservationReport check_preservation(int n, int k, int oracle_bound = 8) {
  PreservationReport report;
  report.n = n;
  report.k = k;
  std::vector<AbacusC> abaci;
  std::vector<AbacusC> images;
  std::vector<Partition> cores;
  std::vector<int> lengths;
  for (const CorootPoint& v : enumerate_domain(n, k)) {
    abaci.push_back(abacus_from_coroot(v));
    images.push_back(phi_abacus(abaci.back()));
    cores.push_back(partition_from_abacus(abaci.back()));
    lengths.push_back(length(abaci.back()));
  }
  for (std::size_t a = 0; a < abaci.size(); ++a)
    for (std::size_t b = 0; b < abaci.size(); ++b) {
      ++report.pairs;
      const AbacusC& x = abaci[a];
      const AbacusC& y = abaci[b];
      const bool below = bruhat_leq_beads(x, y);
      if (below != bruhat_leq_beads(images[a], images[b]))
        report.violations.push_back({"projection", x, y});
      if (below != core_contains(cores[a], cores[b]))
        report.violations.push_back({"containment", x, y});
      if (lengths[a] <= oracle_bound && lengths[b] <= oracle_bound) {
        ++report.oracle_pairs;
        if (below != bruhat_oracle_subword(x, y, oracle_bound))
          report.violations.push_back({"subword", x, y});
      }
    }
  return report;
}

}  // namespace affine_cores
