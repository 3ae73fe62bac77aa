#pragma once
// Exact subsets of Z^2 stored as x-slabs: maximal x-intervals carrying a
// constant column of y values.  Closed under Boolean operations and
// translation; both coordinate projections are exact ZSets, which is what
// the grid smallness test needs.

#include <string>
#include <utility>
#include <vector>

#include "minicube/zset.hpp"

namespace minicube {

struct GridSlab {
  ZInterval xs;  // inclusive x range, sentinel ends allowed
  ZSet col;      // nonempty y column shared by every x in the range
  bool operator==(const GridSlab&) const = default;
};

struct GridSet {
  // Canonical: sorted by xs.lo, disjoint, columns nonempty, touching slabs
  // with equal columns merged.
  std::vector<GridSlab> slabs;

  static GridSet empty();
  static GridSet all();
  static GridSet point(long long x, long long y);
  static GridSet product(const ZSet& xs, const ZSet& ys);  // xs x ys
  static GridSet x_ge(long long c);
  static GridSet x_le(long long c);
  static GridSet y_ge(long long c);
  static GridSet y_le(long long c);

  bool contains(long long x, long long y) const;
  bool is_empty() const { return slabs.empty(); }
  bool is_finite() const;
  long long size_finite() const;
  std::vector<std::pair<long long, long long>> elements_finite() const;

  GridSet complement() const;
  GridSet unite(const GridSet& o) const;
  GridSet intersect(const GridSet& o) const;
  GridSet minus(const GridSet& o) const;
  GridSet sym_diff(const GridSet& o) const;
  GridSet translate(long long dx, long long dy) const;

  ZSet proj_x() const;  // x values hit
  ZSet proj_y() const;  // y values hit

  bool operator==(const GridSet&) const = default;
  std::string to_string() const;
};

}  // namespace minicube
