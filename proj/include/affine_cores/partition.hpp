#pragma once

// Integer partitions, Young diagram statistics, and core predicates.
//
// Rows and columns are 1-based throughout, matching the (i, j) box
// convention: box (i, j) sits in row i, column j.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "affine_cores/error.hpp"

namespace affine_cores {

class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1)
        throw invalid_partition("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw invalid_partition("partition parts must be weakly decreasing");
    }
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  bool empty() const noexcept { return parts_.empty(); }
  int rows() const noexcept { return static_cast<int>(parts_.size()); }

  // Length of row i, 0 past the last row.
  int row(int i) const noexcept {
    return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0;
  }

  // Length of column j, i.e. the j-th part of the conjugate.
  int column(int j) const noexcept {
    if (j < 1) return 0;
    int count = 0;
    for (int p : parts_) {
      if (p < j) break;
      ++count;
    }
    return count;
  }

  int first_part() const noexcept { return row(1); }

  int size() const noexcept {
    int total = 0;
    for (int p : parts_) total += p;
    return total;
  }

  bool contains_box(int i, int j) const noexcept {
    return i >= 1 && j >= 1 && j <= row(i);
  }

  Partition conjugate() const {
    std::vector<int> out;
    for (int j = 1; j <= first_part(); ++j) out.push_back(column(j));
    return Partition(std::move(out));
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

struct Box {
  int row;
  int column;
  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;
};

inline int hook_length(const Partition& p, int i, int j) {
  if (!p.contains_box(i, j))
    throw box_out_of_range("box (" + std::to_string(i) + "," +
                           std::to_string(j) + ") is not in " + p.to_string());
  return (p.row(i) - j) + (p.column(j) - i) + 1;
}

// True iff no hook length of p is divisible by m. The only 1-core is empty.
inline bool is_core(const Partition& p, int m) {
  if (m < 1) throw std::invalid_argument("core modulus must be positive");
  for (int i = 1; i <= p.rows(); ++i)
    for (int j = 1; j <= p.row(i); ++j)
      if (hook_length(p, i, j) % m == 0) return false;
  return true;
}

inline bool is_symmetric(const Partition& p) { return p == p.conjugate(); }

// (j - i) mod 2n, the diagonal label of box (i, j).
inline int diag_label(int i, int j, int n) {
  return ((j - i) % (2 * n) + 2 * n) % (2 * n);
}

// Type-C residue: the diagonal label folded onto {0, ..., n}.
inline int residue(int i, int j, int n) {
  int d = diag_label(i, j, n);
  return d <= n ? d : 2 * n - d;
}

inline std::vector<Box> addable_boxes(const Partition& p) {
  std::vector<Box> out;
  for (int i = 1; i <= p.rows() + 1; ++i)
    if (i == 1 || p.row(i - 1) > p.row(i)) out.push_back({i, p.row(i) + 1});
  return out;
}

inline std::vector<Box> removable_boxes(const Partition& p) {
  std::vector<Box> out;
  for (int i = 1; i <= p.rows(); ++i)
    if (p.row(i) > p.row(i + 1)) out.push_back({i, p.row(i)});
  return out;
}

// Yes iff every row of `inner` fits inside the matching row of `outer`.
inline bool core_contains(const Partition& outer, const Partition& inner) {
  if (inner.rows() > outer.rows()) return false;
  for (int i = 1; i <= inner.rows(); ++i)
    if (inner.row(i) > outer.row(i)) return false;
  return true;
}

// Calls f on every partition of `total`, parts in decreasing lexicographic
// order.
inline void for_each_partition_of(int total,
                                  const std::function<void(const Partition&)>& f) {
  if (total < 0) return;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      f(Partition(parts));
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      parts.push_back(part);
      rec(remaining - part, part);
      parts.pop_back();
    }
  };
  rec(total, total);
}

// Calls f on every partition whose first part is exactly `first` and which
// has at most `max_cells` boxes.
inline void for_each_partition_with_first_part(
    int first, int max_cells, const std::function<void(const Partition&)>& f) {
  if (first == 0) {
    f(Partition());
    return;
  }
  if (first < 0 || first > max_cells) return;
  std::vector<int> parts{first};
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    f(Partition(parts));
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      parts.push_back(part);
      rec(remaining - part, part);
      parts.pop_back();
    }
  };
  rec(max_cells - first, first);
}

// All partitions with at most `max_cells` boxes, ordered by size.
inline std::vector<Partition> partitions_up_to(int max_cells) {
  std::vector<Partition> out;
  for (int m = 0; m <= max_cells; ++m)
    for_each_partition_of(m, [&](const Partition& p) { out.push_back(p); });
  return out;
}

}  // namespace affine_cores
