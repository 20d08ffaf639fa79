// Runs the acceptance checks and prints one line per check. All comparisons are
// exact; each check also has a wall-clock limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "affine_cores.hpp"

using namespace affine_cores;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int ceil_div(int a, int b) { return (a + b - 1) / b; }

Outcome worked_example() {
  Outcome o;
  const AbacusC a = AbacusC::from_full(std::vector<int>{2, 1, -1, 1, -1, -2});
  const Word canonical = canonical_reduced_word(a);
  if (canonical.size() != 11) o.fail("canonical word has length " + std::to_string(canonical.size()));
  if (phi_abacus(a) != AbacusC::from_full(std::vector<int>{1, -1, 1, -1}))
    o.fail("image abacus is " + phi_abacus(a).to_string());
  const Word w{3, {0, 1, 3, 2, 3, 0, 1, 2, 0, 1, 0}};
  const Word image = phi_word(w, a);
  if (image != Word{2, {2, 0, 1, 0}}) o.fail("image word is " + image.to_string());
  o.detail = o.ok ? "length 11, image (1,-1,1,-1), word " + image.to_string() : o.detail;
  return o;
}

Outcome bijection() {
  Outcome o;
  long total = 0;
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= 8; ++k) {
      const auto dom = enumerate_domain(n, k);
      const auto cod = enumerate_codomain(n, k);
      std::set<CorootPoint> image;
      for (const CorootPoint& v : dom) {
        const CorootPoint u = phi_coroot(v, k);
        if (phi_coroot_inverse(u, n, k) != v) o.fail("inverse fails at n=" + std::to_string(n));
        image.insert(u);
      }
      if (image != std::set<CorootPoint>(cod.begin(), cod.end()) ||
          dom.size() != cod.size())
        o.fail("image differs from codomain at n=" + std::to_string(n) +
               " k=" + std::to_string(k));
      std::set<CorootPoint> brute;
      for (const AbacusC& a : abaci_in_box(n, ceil_div(k, 2 * n)))
        if (partition_from_abacus(a).first_part() == k) brute.insert(coroot_from_abacus(a));
      if (brute != std::set<CorootPoint>(dom.begin(), dom.end()))
        o.fail("brute-force cores differ at n=" + std::to_string(n) +
               " k=" + std::to_string(k));
      total += static_cast<long>(dom.size());
    }
  if (o.ok) o.detail = std::to_string(total) + " domain elements";
  return o;
}

Outcome length_drop() {
  Outcome o;
  long total = 0;
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= 6; ++k)
      for (const CorootPoint& v : enumerate_domain(n, k)) {
        const AbacusC a = abacus_from_coroot(v);
        const AbacusC b = phi_abacus(a);
        const Word w = canonical_reduced_word(a);
        const Word image = phi_word(w, a);
        const int la = length(a), lb = length(b);
        const int ga = geometric_length(alcove_from_word(w));
        const int gb = geometric_length(alcove_from_word(canonical_reduced_word(b)));
        if (la != ga || lb != gb) o.fail("length methods disagree at " + a.to_string());
        if (lb != la - k) o.fail("length does not drop by k at " + a.to_string());
        if (static_cast<int>(image.size()) != la - k || evaluate_word(image) != b)
          o.fail("projected word is wrong at " + a.to_string());
        ++total;
      }
  if (o.ok) o.detail = std::to_string(total) + " elements";
  return o;
}

Outcome walk_projection() {
  Outcome o;
  long total = 0;
  for (int k = 1; k <= 6; ++k) {
    const DomainParams d = domain_params(2, k);
    for (const CorootPoint& v : enumerate_domain(2, k)) {
      const AbacusC a = abacus_from_coroot(v);
      const AlcoveWalk walk = walk_from_word(canonical_reduced_word(a));
      const AlcoveWalk projected = project_walk(walk, d);
      const int la = length(a);
      if (static_cast<int>(projected.length()) != la - k)
        o.fail("projected walk has wrong length at " + a.to_string());
      if (projected.back() != distinguished_alcove(phi_coroot(v, k)))
        o.fail("projected walk ends elsewhere at " + a.to_string());
      if (static_cast<int>(walk.length() - projected.length()) != k ||
          count_perpendicular(walk, d) != k)
        o.fail("removed steps differ from k at " + a.to_string());
      ++total;
    }
  }
  if (o.ok) o.detail = std::to_string(total) + " walks";
  return o;
}

Outcome base_alcoves() {
  Outcome o;
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= 10; ++k)
      if (geometric_length(base_alcove(domain_params(n, k))) != k)
        o.fail("n=" + std::to_string(n) + " k=" + std::to_string(k));
  if (o.ok) o.detail = "20 hyperplanes";
  return o;
}

Outcome walk_lifting() {
  Outcome o;
  long good = 0;
  for (int k = 1; k <= 5; ++k) {
    const DomainParams d = domain_params(2, k);
    for (const CorootPoint& v : enumerate_domain(2, k))
      for (const Alcove& a : coset_alcoves(v)) {
        if (!is_good_alcove(a, d)) continue;
        ++good;
        if (geometric_length(a) != k + geometric_length(project_alcove(a, d)))
          o.fail("good alcove " + a.word.to_string() + " at k=" + std::to_string(k));
      }
  }
  if (good == 0) o.fail("no good alcoves found");
  if (o.ok) o.detail = std::to_string(good) + " good alcoves";
  return o;
}

Outcome bruhat() {
  Outcome o;
  long pairs = 0, oracle = 0;
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= 6; ++k) {
      const PreservationReport r = check_preservation(n, k, 8);
      pairs += r.pairs;
      oracle += r.oracle_pairs;
      if (!r.violations.empty())
        o.fail(std::to_string(r.violations.size()) + " " + r.violations.front().kind +
               " violations at n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  if (oracle == 0) o.fail("subword oracle never ran");
  if (o.ok)
    o.detail = std::to_string(pairs) + " pairs, " + std::to_string(oracle) +
               " checked by subwords";
  return o;
}

Outcome two_words() {
  Outcome o;
  const Word a{2, {2, 1, 2, 0, 1, 0}};
  const Word b{2, {1, 2, 0, 1, 0, 1, 0, 1, 2, 1, 0, 1}};
  const Alcove x = alcove_from_word(a), y = alcove_from_word(b);
  if (x != y) o.fail("words reach different alcoves");
  if (geometric_length(x) != 6 || geometric_length(y) != 6) o.fail("alcove length is not 6");
  if (walk_from_word(a).length() != 6 || walk_from_word(b).length() != 12)
    o.fail("walk lengths are not 6 and 12");
  if (o.ok) o.detail = "same alcove, lengths 6/6, walks 6/12";
  return o;
}

Outcome type_a() {
  Outcome o;
  const int cap = max_cells_from_env();
  long total = 0;
  auto searched = [cap](int n, int k) {
    std::set<Partition> out;
    for_each_partition_with_first_part(k, cap, [&](const Partition& p) {
      if (is_core(p, n)) out.insert(p);
    });
    return out;
  };
  for (int n = 3; n <= 4; ++n)
    for (int k = 1; k <= 5; ++k) {
      const std::string at = " at n=" + std::to_string(n) + " k=" + std::to_string(k);
      const auto cores = enumerate_cores_a(n, k);
      std::set<Partition> listed;
      for (const AbacusA& a : cores) listed.insert(partition_from_abacus_a(a));
      if (listed != searched(n, k)) o.fail("core enumeration incomplete" + at);
      const HyperplaneA h = hyperplane_a(n, k);
      std::set<Partition> image;
      for (const AbacusA& a : cores) {
        if (!h.contains(a.levels())) o.fail(a.to_string() + " is off the hyperplane" + at);
        const Partition p = partition_from_abacus_a(phi_a_abacus(a));
        if (p != phi_a_core(core_from_abacus_a(a)).partition())
          o.fail("abacus and core maps disagree" + at);
        image.insert(p);
      }
      std::set<Partition> target;
      for (int j = 0; j <= k; ++j) {
        const auto s = searched(n - 1, j);
        target.insert(s.begin(), s.end());
      }
      if (image.size() != cores.size() || image != target)
        o.fail("not a bijection onto smaller cores" + at);
      total += static_cast<long>(cores.size());
    }
  if (o.ok) o.detail = std::to_string(total) + " cores";
  return o;
}

Outcome coherence() {
  Outcome o;
  long total = 0;
  for (int n = 2; n <= 3; ++n)
    for (const AbacusC& a : abaci_in_box(n, 2)) {
      const SymmetricCore c = core_from_abacus(a);
      if (abacus_from_core(c) != a) o.fail("core round trip " + a.to_string());
      if (abacus_from_coroot(coroot_from_abacus(a)) != a) o.fail("coroot round trip " + a.to_string());
      const Window w = window_from_abacus(a);
      if (abacus_from_window(w) != a) o.fail("window round trip " + a.to_string());
      if (evaluate_word(canonical_reduced_word(a)) != a) o.fail("word round trip " + a.to_string());
      for (int i = 0; i <= n; ++i) {
        const AbacusC b = apply_generator_abacus(i, a);
        if (apply_generator_core(i, c) != core_from_abacus(b))
          o.fail("core action differs for s" + std::to_string(i) + " at " + a.to_string());
      }
      ++total;
    }
  if (o.ok) o.detail = std::to_string(total) + " abaci";
  return o;
}

}  // namespace

int main() {
  struct Check {
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const Check checks[] = {
      {"worked example", 1, worked_example},
      {"bijection onto codomain", 30, bijection},
      {"length drops by k", 60, length_drop},
      {"walk projection", 60, walk_projection},
      {"base alcove crosses k walls", 5, base_alcoves},
      {"walk lifting on good alcoves", 60, walk_lifting},
      {"Bruhat order preserved", 300, bruhat},
      {"two words, one alcove", 1, two_words},
      {"type A bijection", 30, type_a},
      {"model round trips", 30, coherence},
  };
  int failures = 0;
  int index = 0;
  for (const Check& c : checks) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.limit_seconds) o.fail("too slow");
    if (!o.ok) ++failures;
    std::printf("[%s] %2d %-30s %8.3fs (limit %gs)  %s\n", o.ok ? "PASS" : "FAIL",
                index, c.name, secs, c.limit_seconds, o.detail.c_str());
  }
  std::printf("%d/%d passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
