#pragma once

// JSON forms of the models:
//   partition {"parts": [...]}          abacus {"n": 3, "levels": [...]}
//   coroot    {"coords": [...]}         window {"n": 3, "values": [...]}
//   word      {"n": 3, "letters": [...]}
// Type-A values carry "type": "A".

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "affine_cores/abacus.hpp"
#include "affine_cores/bruhat.hpp"
#include "affine_cores/coxeter.hpp"
#include "affine_cores/partition.hpp"
#include "affine_cores/projection.hpp"
#include "affine_cores/type_a.hpp"

namespace affine_cores {

using json = nlohmann::ordered_json;

struct json_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw json_error(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

template <class T>
std::vector<T> int_array(const json& j, const char* name) {
  const json& a = field(j, name);
  if (!a.is_array())
    throw json_error(std::string("field \"") + name + "\" must be an array");
  std::vector<T> out;
  for (const json& v : a) {
    if (!v.is_number_integer())
      throw json_error(std::string("field \"") + name +
                       "\" must hold integers");
    out.push_back(v.get<T>());
  }
  return out;
}

inline int int_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer())
    throw json_error(std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

}  // namespace detail

inline bool is_type_a(const json& j) {
  return j.is_object() && j.contains("type") && j.at("type") == "A";
}

inline json to_json(const Partition& p) { return json{{"parts", p.parts()}}; }

inline json to_json(const AbacusC& a) {
  return json{{"n", a.rank()}, {"levels", a.levels()}};
}

inline json to_json(const CorootPoint& v) { return json{{"coords", v.coords}}; }

inline json to_json(const Window& w) {
  return json{{"n", w.n}, {"values", w.values}};
}

inline json to_json(const Word& w) {
  return json{{"n", w.n}, {"letters", w.letters}};
}

inline json to_json(const AbacusA& a) {
  return json{{"type", "A"}, {"n", a.runners()}, {"levels", a.levels()}};
}

inline json to_json(const ProjectionStep& s) {
  json j{{"letter", s.letter}};
  j["emitted"] = s.emitted ? json(*s.emitted) : json(nullptr);
  j["abacus_after"] = s.abacus_after;
  return j;
}

inline json to_json(const PreservationReport& r) {
  json violations = json::array();
  for (const BruhatViolation& v : r.violations)
    violations.push_back(
        {{"kind", v.kind}, {"x", to_json(v.x)}, {"y", to_json(v.y)}});
  return json{{"pairs", r.pairs},
              {"violations", violations},
              {"n", r.n},
              {"k", r.k},
              {"oracle_pairs", r.oracle_pairs}};
}

inline Partition partition_from_json(const json& j) {
  return Partition(detail::int_array<int>(j, "parts"));
}

// Accepts either the n levels of runners 1..n or the full 2n-entry vector.
inline AbacusC abacus_from_json(const json& j) {
  const int n = detail::int_field(j, "n");
  const auto levels = detail::int_array<int>(j, "levels");
  if (static_cast<int>(levels.size()) == 2 * n) return AbacusC::from_full(levels);
  return AbacusC(n, levels);
}

inline CorootPoint coroot_from_json(const json& j) {
  return {detail::int_array<int>(j, "coords")};
}

inline Window window_from_json(const json& j) {
  return {detail::int_field(j, "n"), detail::int_array<long>(j, "values")};
}

inline Word word_from_json(const json& j, std::optional<int> rank = {}) {
  Word w;
  if (j.is_object() && j.contains("n"))
    w.n = detail::int_field(j, "n");
  else if (rank)
    w.n = *rank;
  else
    throw json_error("word needs a rank: give \"n\" or --n");
  w.letters = detail::int_array<int>(j, "letters");
  validate_word(w);
  return w;
}

inline AbacusA abacus_a_from_json(const json& j) {
  return AbacusA(detail::int_field(j, "n"), detail::int_array<int>(j, "levels"));
}

}  // namespace affine_cores
