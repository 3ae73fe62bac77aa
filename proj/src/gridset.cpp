#include "minicube/gridset.hpp"

#include <algorithm>
#include <cassert>

#include "minicube/common.hpp"

namespace minicube {

namespace {

// Drop empty columns, then merge touching slabs with equal columns.  Input
// slabs must already be sorted and disjoint.
std::vector<GridSlab> merged(std::vector<GridSlab> in) {
  std::vector<GridSlab> out;
  for (auto& s : in) {
    if (s.col.is_empty()) continue;
    if (!out.empty() && out.back().xs.hi + 1 == s.xs.lo && out.back().col == s.col)
      out.back().xs.hi = s.xs.hi;
    else
      out.push_back(std::move(s));
  }
  return out;
}

const ZSet kEmptyCol = ZSet::empty();

// Column of the slab covering x, or the empty set.
const ZSet& column_at(const std::vector<GridSlab>& slabs, long long x) {
  for (const auto& s : slabs)
    if (s.xs.lo <= x && x <= s.xs.hi) return s.col;
  return kEmptyCol;
}

template <typename Op>
GridSet binary(const GridSet& a, const GridSet& b, Op op) {
  // Common refinement of the two slab partitions (gaps count as empty
  // columns), one column operation per refined piece.
  std::vector<long long> starts{Z_NEG_INF};
  for (const auto* g : {&a, &b})
    for (const auto& s : g->slabs) {
      starts.push_back(s.xs.lo);
      starts.push_back(s.xs.hi + 1);
    }
  std::sort(starts.begin(), starts.end());
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
  while (!starts.empty() && starts.back() > Z_POS_INF) starts.pop_back();

  GridSet out;
  for (size_t i = 0; i < starts.size(); ++i) {
    long long lo = starts[i];
    long long hi = i + 1 < starts.size() ? starts[i + 1] - 1 : Z_POS_INF;
    ZSet col = op(column_at(a.slabs, lo), column_at(b.slabs, lo));
    out.slabs.push_back({{lo, hi}, std::move(col)});
  }
  out.slabs = merged(std::move(out.slabs));
  return out;
}

}  // namespace

GridSet GridSet::empty() { return {}; }

GridSet GridSet::all() { return {{{{Z_NEG_INF, Z_POS_INF}, ZSet::all()}}}; }

GridSet GridSet::point(long long x, long long y) {
  return {{{{x, x}, ZSet::point(y)}}};
}

GridSet GridSet::product(const ZSet& xs, const ZSet& ys) {
  GridSet out;
  if (ys.is_empty()) return out;
  for (const auto& iv : xs.parts) out.slabs.push_back({iv, ys});
  out.slabs = merged(std::move(out.slabs));
  return out;
}

GridSet GridSet::x_ge(long long c) { return product(ZSet::ray_ge(c), ZSet::all()); }
GridSet GridSet::x_le(long long c) { return product(ZSet::ray_le(c), ZSet::all()); }
GridSet GridSet::y_ge(long long c) { return product(ZSet::all(), ZSet::ray_ge(c)); }
GridSet GridSet::y_le(long long c) { return product(ZSet::all(), ZSet::ray_le(c)); }

bool GridSet::contains(long long x, long long y) const {
  return column_at(slabs, x).contains(y);
}

bool GridSet::is_finite() const {
  for (const auto& s : slabs)
    if (s.xs.lo == Z_NEG_INF || s.xs.hi == Z_POS_INF || !s.col.is_finite()) return false;
  return true;
}

long long GridSet::size_finite() const {
  if (!is_finite()) throw StructuralError("size_finite on an infinite set");
  long long n = 0;
  for (const auto& s : slabs) n += (s.xs.hi - s.xs.lo + 1) * s.col.size_finite();
  return n;
}

std::vector<std::pair<long long, long long>> GridSet::elements_finite() const {
  if (!is_finite()) throw StructuralError("elements_finite on an infinite set");
  std::vector<std::pair<long long, long long>> out;
  for (const auto& s : slabs)
    for (long long x = s.xs.lo; x <= s.xs.hi; ++x)
      for (long long y : s.col.elements_finite()) out.emplace_back(x, y);
  return out;
}

GridSet GridSet::complement() const {
  return binary(all(), *this, [](const ZSet& a, const ZSet& b) { return a.minus(b); });
}

GridSet GridSet::unite(const GridSet& o) const {
  return binary(*this, o, [](const ZSet& a, const ZSet& b) { return a.unite(b); });
}

GridSet GridSet::intersect(const GridSet& o) const {
  return binary(*this, o, [](const ZSet& a, const ZSet& b) { return a.intersect(b); });
}

GridSet GridSet::minus(const GridSet& o) const {
  return binary(*this, o, [](const ZSet& a, const ZSet& b) { return a.minus(b); });
}

GridSet GridSet::sym_diff(const GridSet& o) const {
  return binary(*this, o, [](const ZSet& a, const ZSet& b) { return a.sym_diff(b); });
}

GridSet GridSet::translate(long long dx, long long dy) const {
  GridSet out;
  for (const auto& s : slabs) {
    long long lo = s.xs.lo == Z_NEG_INF ? Z_NEG_INF : s.xs.lo + dx;
    long long hi = s.xs.hi == Z_POS_INF ? Z_POS_INF : s.xs.hi + dx;
    out.slabs.push_back({{lo, hi}, s.col.translate(dy)});
  }
  return out;
}

ZSet GridSet::proj_x() const {
  ZSet out = ZSet::empty();
  for (const auto& s : slabs) {
    ZSet iv;
    iv.parts = {s.xs};
    out = out.unite(iv);
  }
  return out;
}

ZSet GridSet::proj_y() const {
  ZSet out = ZSet::empty();
  for (const auto& s : slabs) out = out.unite(s.col);
  return out;
}

namespace {
std::string coord_str(long long v) {
  if (v <= Z_NEG_INF) return "-inf";
  if (v >= Z_POS_INF) return "+inf";
  return std::to_string(v);
}
}  // namespace

std::string GridSet::to_string() const {
  if (slabs.empty()) return "{}";
  std::string out;
  for (const auto& s : slabs) {
    if (!out.empty()) out += "; ";
    out += "x[" + coord_str(s.xs.lo) + "," + coord_str(s.xs.hi) + "]:y" + s.col.to_string();
  }
  return out;
}

}  // namespace minicube
