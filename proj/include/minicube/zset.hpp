#pragma once
// Exact subsets of Z with finitely many boundary points, stored as sorted,
// disjoint, non-adjacent intervals [lo,hi].  Rays use NEG_INF / POS_INF
// sentinels.  Every almost invariant subset of Z (and every Boolean
// combination of such) lives in this class, so all corner computations on the
// halfline and dihedral backends are exact.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace minicube {

inline constexpr long long Z_NEG_INF = -(1LL << 56);
inline constexpr long long Z_POS_INF = (1LL << 56);

struct ZInterval {
  long long lo, hi;  // inclusive; lo <= hi
  bool operator==(const ZInterval&) const = default;
};

struct ZSet {
  std::vector<ZInterval> parts;  // canonical: sorted, disjoint, gaps >= 2

  static ZSet empty();
  static ZSet all();
  static ZSet point(long long x);
  static ZSet ray_le(long long a);  // {n <= a}
  static ZSet ray_ge(long long a);  // {n >= a}
  static ZSet interval(long long lo, long long hi);
  static ZSet of_points(std::vector<long long> pts);

  bool contains(long long x) const;
  bool is_empty() const { return parts.empty(); }
  bool is_all() const;
  bool is_finite() const;  // no infinite end
  // Number of elements; only valid when finite.
  long long size_finite() const;
  std::vector<long long> elements_finite() const;

  bool unbounded_below() const;
  bool unbounded_above() const;

  ZSet complement() const;
  ZSet unite(const ZSet& o) const;
  ZSet intersect(const ZSet& o) const;
  ZSet minus(const ZSet& o) const;
  ZSet sym_diff(const ZSet& o) const;
  ZSet translate(long long t) const;
  ZSet reflect(long long c) const;  // x -> c - x

  // All finite interval endpoints (boundary breakpoints).
  std::vector<long long> breakpoints() const;

  bool operator==(const ZSet&) const = default;
  std::string to_string() const;
};

}  // namespace minicube
