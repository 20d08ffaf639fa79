#pragma once

// Exhaustive property sweeps over the domains for k = 1..kmax. Each suite
// returns a JSON report whose "violations" array is empty when every property
// held.

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "affine_cores/abacus.hpp"
#include "affine_cores/alcove.hpp"
#include "affine_cores/bruhat.hpp"
#include "affine_cores/coxeter.hpp"
#include "affine_cores/json_io.hpp"
#include "affine_cores/projection.hpp"

namespace affine_cores {

// Largest partition size used by partition-based enumeration, from
// AFFINE_CORES_MAX_CELLS when set.
inline int max_cells_from_env(int fallback = 60) {
  if (const char* env = std::getenv("AFFINE_CORES_MAX_CELLS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0 && v <= 200)
      return static_cast<int>(v);
    throw std::invalid_argument(
        "AFFINE_CORES_MAX_CELLS must be an integer in [0, 200]");
  }
  return fallback;
}

namespace detail {

class SuiteRun {
 public:
  SuiteRun(std::string name, int n, int kmax)
      : report_{{"suite", std::move(name)}, {"n", n}, {"kmax", kmax}} {
    report_["violations"] = json::array();
  }

  void check(bool ok, int k, const std::string& what, const json& element) {
    ++checked_;
    if (!ok)
      report_["violations"].push_back(
          {{"k", k}, {"check", what}, {"element", element}});
  }

  // Runs body, recording any exception as a violation.
  void guarded(int k, const std::string& what, const json& element,
               const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      ++checked_;
      report_["violations"].push_back({{"k", k},
                                       {"check", what},
                                       {"element", element},
                                       {"error", e.what()}});
    }
  }

  json& report() { return report_; }

  json finish() {
    report_["checked"] = checked_;
    return report_;
  }

 private:
  json report_;
  long checked_ = 0;
};

}  // namespace detail

// The projection is a bijection from the domain onto the codomain, agrees
// across the core, abacus and coroot models, and the domain agrees with a
// brute-force search for symmetric cores with first part k.
inline json verify_bijection(int n, int kmax) {
  detail::SuiteRun run("bijection", n, kmax);
  const int max_cells = max_cells_from_env();
  bool partition_oracle_complete = true;
  for (int k = 1; k <= kmax; ++k) {
    const DomainParams d = domain_params(n, k);
    const auto domain = enumerate_domain(n, k);
    const auto codomain = enumerate_codomain(n, k);
    run.check(domain.size() == codomain.size(), k, "cardinality",
              json{{"domain", domain.size()}, {"codomain", codomain.size()}});

    std::set<CorootPoint> brute;
    for (const AbacusC& a : abaci_in_box(n, d.c()))
      if (!a.is_identity() && first_part(a) == k) brute.insert(coroot_from_abacus(a));
    run.check(brute == std::set<CorootPoint>(domain.begin(), domain.end()), k,
              "domain matches abacus search", json{{"found", brute.size()}});

    std::set<Partition> domain_cores;
    for (const CorootPoint& v : domain)
      domain_cores.insert(partition_from_abacus(abacus_from_coroot(v)));
    std::set<Partition> searched;
    for_each_partition_with_first_part(k, max_cells, [&](const Partition& p) {
      if (is_symmetric(p) && is_core(p, 2 * n)) searched.insert(p);
    });
    std::set<Partition> domain_small;
    for (const Partition& p : domain_cores) {
      if (p.size() <= max_cells)
        domain_small.insert(p);
      else
        partition_oracle_complete = false;
    }
    run.check(searched == domain_small, k, "domain matches partition search",
              json{{"found", searched.size()}, {"max_cells", max_cells}});

    std::set<CorootPoint> image;
    for (const CorootPoint& v : domain) {
      const json element = to_json(v);
      run.guarded(k, "projection", element, [&] {
        const AbacusC a = abacus_from_coroot(v);
        const CorootPoint u = phi_coroot(v, k);
        image.insert(u);
        run.check(in_codomain(u, n, k), k, "image in codomain", element);
        run.check(phi_coroot_inverse(u, n, k) == v, k, "inverse after forward",
                  element);
        const AbacusC b = phi_abacus(a);
        run.check(coroot_from_abacus(b) == u, k, "abacus and coroot agree",
                  element);
        run.check(phi_core(core_from_abacus(a)) == core_from_abacus(b), k,
                  "core and abacus agree", element);
        run.check(first_part(b) <= k - static_cast<int>(detail::ceil_div(k, n)),
                  k, "image first part bound", element);
        run.check(a.largest_runner() == d.l2 && a.level(d.l2) == d.c(), k,
                  "largest bead position", element);
      });
    }
    run.check(image.size() == domain.size(), k, "injective",
              json{{"images", image.size()}});
    for (const CorootPoint& u : codomain)
      run.guarded(k, "inverse", to_json(u), [&] {
        run.check(phi_coroot(phi_coroot_inverse(u, n, k), k) == u, k,
                  "forward after inverse", to_json(u));
      });
  }
  run.report()["partition_search_complete"] = partition_oracle_complete;
  return run.finish();
}

// Length drops by exactly k, measured by peeling and by counting separating
// hyperplanes; the word algorithms reproduce the drop.
inline json verify_length_drop(int n, int kmax) {
  detail::SuiteRun run("length-drop", n, kmax);
  for (int k = 1; k <= kmax; ++k)
    for (const CorootPoint& v : enumerate_domain(n, k)) {
      const json element = to_json(v);
      run.guarded(k, "length", element, [&] {
        const AbacusC a = abacus_from_coroot(v);
        const AbacusC b = phi_abacus(a);
        const Word w = canonical_reduced_word(a);
        const Word wb = canonical_reduced_word(b);
        const int la = static_cast<int>(w.size());
        const int lb = static_cast<int>(wb.size());
        run.check(lb == la - k, k, "peeling length drop", element);
        const int ga = geometric_length(alcove_from_word(w));
        const int gb = geometric_length(alcove_from_word(wb));
        run.check(ga == la && gb == lb, k, "peeling matches geometry", element);
        run.check(gb == ga - k, k, "geometric length drop", element);
        run.check(geometric_length(distinguished_alcove(v)) == ga, k,
                  "distinguished alcove length", element);
        const Word projected = phi_word(w, a);
        run.check(static_cast<int>(projected.size()) == la - k &&
                      evaluate_word(projected) == b,
                  k, "projected word", element);
        const Word lifted = lift_word(wb, a);
        run.check(static_cast<int>(lifted.size()) == la &&
                      evaluate_word(lifted) == a,
                  k, "lifted word", element);
      });
    }
  return run.finish();
}

// Bruhat order is preserved and reflected by the projection.
inline json verify_bruhat(int n, int kmax, int oracle_bound = 8) {
  detail::SuiteRun run("bruhat", n, kmax);
  json per_k = json::array();
  for (int k = 1; k <= kmax; ++k) {
    run.guarded(k, "preservation", json{{"n", n}, {"k", k}}, [&] {
      const PreservationReport r = check_preservation(n, k, oracle_bound);
      per_k.push_back({{"k", k},
                       {"pairs", r.pairs},
                       {"oracle_pairs", r.oracle_pairs}});
      run.check(r.violations.empty(), k, "preservation", to_json(r));
    });
  }
  run.report()["per_k"] = per_k;
  return run.finish();
}

// Walk projection: the minimal walk of each domain element compresses to a
// minimal walk of its image after exactly k repeats are removed; good
// alcoves lose exactly k in length under projection.
inline json verify_walks(int n, int kmax) {
  detail::SuiteRun run("walks", n, kmax);
  for (int k = 1; k <= kmax; ++k) {
    const DomainParams d = domain_params(n, k);
    run.guarded(k, "base alcove", json{{"n", n}, {"k", k}}, [&] {
      const Alcove base = base_alcove(d);
      run.check(geometric_length(base) == k, k, "base alcove length",
                json{{"n", n}, {"k", k}});
      run.check(project_alcove(base, d) == fundamental_alcove(n - 1), k,
                "base alcove projects to fundamental", json{{"n", n}, {"k", k}});
    });
    for (const CorootPoint& v : enumerate_domain(n, k)) {
      const json element = to_json(v);
      run.guarded(k, "walk", element, [&] {
        const AbacusC a = abacus_from_coroot(v);
        const Word w = canonical_reduced_word(a);
        const AlcoveWalk walk = walk_from_word(w);
        const AlcoveWalk projected = project_walk(walk, d);
        const int removed =
            static_cast<int>(walk.length()) - static_cast<int>(projected.length());
        run.check(static_cast<int>(projected.length()) ==
                      static_cast<int>(w.size()) - k,
                  k, "compressed length", element);
        run.check(removed == k, k, "removed repeats", element);
        run.check(count_perpendicular(walk, d) == k, k, "perpendicular steps",
                  element);
        const Alcove target =
            alcove_from_word(canonical_reduced_word(phi_abacus(a)));
        run.check(projected.back() == target, k, "projected endpoint", element);
        run.check(is_distinguished(projected.back()), k,
                  "projected endpoint distinguished", element);
        run.check(is_good_alcove(walk.back(), d), k, "distinguished is good",
                  element);
        for (const Alcove& al : coset_alcoves(v))
          if (is_good_alcove(al, d))
            run.check(geometric_length(al) ==
                          k + geometric_length(project_alcove(al, d)),
                      k, "good alcove length", element);
      });
    }
  }
  return run.finish();
}

inline json verify_suite(const std::string& suite, int n, int kmax) {
  if (suite == "bijection") return verify_bijection(n, kmax);
  if (suite == "length-drop") return verify_length_drop(n, kmax);
  if (suite == "bruhat") return verify_bruhat(n, kmax);
  if (suite == "walks") return verify_walks(n, kmax);
  if (suite == "all") {
    json suites = json::array();
    json violations = json::array();
    for (const char* name : {"bijection", "length-drop", "bruhat", "walks"}) {
      json r = verify_suite(name, n, kmax);
      for (const json& v : r["violations"]) {
        json tagged = v;
        tagged["suite"] = name;
        violations.push_back(tagged);
      }
      suites.push_back(std::move(r));
    }
    return json{{"suite", "all"},
                {"n", n},
                {"kmax", kmax},
                {"suites", suites},
                {"violations", violations}};
  }
  throw std::invalid_argument("unknown suite \"" + suite + "\"");
}

}  // namespace affine_cores
