#pragma once

#include <stdexcept>
#include <string>

namespace affine_cores {

// Every failure names the invariant or precondition that did not hold.

struct box_out_of_range : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct generator_out_of_range : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct invalid_partition : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct not_a_core : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct not_a_symmetric_core : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct invalid_abacus : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct invalid_window : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct rank_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct not_in_domain : std::domain_error {
  using std::domain_error::domain_error;
};

struct identity_abacus : std::domain_error {
  using std::domain_error::domain_error;
};

struct not_reduced : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct precondition_violation : std::logic_error {
  using std::logic_error::logic_error;
};

// An internal consistency check failed; indicates a bug, not bad input.
struct invariant_violation : std::logic_error {
  using std::logic_error::logic_error;
};

// Raised if a residue has both addable and removable boxes on a symmetric
// core. Never observed; kept as a hard failure rather than a guess.
struct mixed_residue_action : std::logic_error {
  using std::logic_error::logic_error;
};

struct bound_exceeded : std::length_error {
  using std::length_error::length_error;
};

namespace detail {

// Floor division for a positive divisor.
constexpr long floor_div(long a, long b) noexcept {
  long q = a / b;
  return (a % b != 0 && a < 0) ? q - 1 : q;
}

constexpr long ceil_div(long a, long b) noexcept { return -floor_div(-a, b); }

// Representative of a mod b in {1, ..., b}.
constexpr long mod_one_based(long a, long b) noexcept {
  long r = a - floor_div(a, b) * b;
  return r == 0 ? b : r;
}

}  // namespace detail

}  // namespace affine_cores
