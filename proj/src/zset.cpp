#include "minicube/zset.hpp"

#include <algorithm>

#include "minicube/common.hpp"

namespace minicube {

namespace {

void normalize(std::vector<ZInterval>& v) {
  std::sort(v.begin(), v.end(),
            [](const ZInterval& a, const ZInterval& b) { return a.lo < b.lo; });
  std::vector<ZInterval> out;
  for (const auto& iv : v) {
    if (iv.lo > iv.hi) continue;
    if (!out.empty() && iv.lo <= out.back().hi + 1)
      out.back().hi = std::max(out.back().hi, iv.hi);
    else
      out.push_back(iv);
  }
  v = std::move(out);
}

}  // namespace

ZSet ZSet::empty() { return {}; }
ZSet ZSet::all() { return {{{Z_NEG_INF, Z_POS_INF}}}; }
ZSet ZSet::point(long long x) { return {{{x, x}}}; }
ZSet ZSet::ray_le(long long a) { return {{{Z_NEG_INF, a}}}; }
ZSet ZSet::ray_ge(long long a) { return {{{a, Z_POS_INF}}}; }
ZSet ZSet::interval(long long lo, long long hi) {
  if (lo > hi) return empty();
  return {{{lo, hi}}};
}
ZSet ZSet::of_points(std::vector<long long> pts) {
  ZSet s;
  for (long long p : pts) s.parts.push_back({p, p});
  normalize(s.parts);
  return s;
}

bool ZSet::contains(long long x) const {
  for (const auto& iv : parts)
    if (iv.lo <= x && x <= iv.hi) return true;
  return false;
}

bool ZSet::is_all() const {
  return parts.size() == 1 && parts[0].lo == Z_NEG_INF && parts[0].hi == Z_POS_INF;
}

bool ZSet::is_finite() const {
  for (const auto& iv : parts)
    if (iv.lo == Z_NEG_INF || iv.hi == Z_POS_INF) return false;
  return true;
}

long long ZSet::size_finite() const {
  long long n = 0;
  for (const auto& iv : parts) n += iv.hi - iv.lo + 1;
  return n;
}

std::vector<long long> ZSet::elements_finite() const {
  std::vector<long long> out;
  for (const auto& iv : parts)
    for (long long x = iv.lo; x <= iv.hi; ++x) out.push_back(x);
  return out;
}

bool ZSet::unbounded_below() const {
  return !parts.empty() && parts.front().lo == Z_NEG_INF;
}
bool ZSet::unbounded_above() const {
  return !parts.empty() && parts.back().hi == Z_POS_INF;
}

ZSet ZSet::complement() const {
  ZSet out;
  long long cur = Z_NEG_INF;
  for (const auto& iv : parts) {
    if (iv.lo > cur) out.parts.push_back({cur, iv.lo - 1});
    cur = iv.hi + 1;
  }
  if (cur <= Z_POS_INF) out.parts.push_back({cur, Z_POS_INF});
  // An interval reaching a sentinel swallows the stub beyond it.
  std::vector<ZInterval> keep;
  for (auto& iv : out.parts)
    if (iv.lo <= iv.hi && !(iv.lo > Z_POS_INF) && !(iv.hi < Z_NEG_INF)) keep.push_back(iv);
  out.parts = keep;
  normalize(out.parts);
  return out;
}

ZSet ZSet::intersect(const ZSet& o) const {
  ZSet out;
  size_t i = 0, j = 0;
  while (i < parts.size() && j < o.parts.size()) {
    long long lo = std::max(parts[i].lo, o.parts[j].lo);
    long long hi = std::min(parts[i].hi, o.parts[j].hi);
    if (lo <= hi) out.parts.push_back({lo, hi});
    if (parts[i].hi < o.parts[j].hi)
      ++i;
    else
      ++j;
  }
  return out;
}

ZSet ZSet::unite(const ZSet& o) const {
  ZSet out;
  out.parts = parts;
  out.parts.insert(out.parts.end(), o.parts.begin(), o.parts.end());
  normalize(out.parts);
  return out;
}

ZSet ZSet::minus(const ZSet& o) const { return intersect(o.complement()); }

ZSet ZSet::sym_diff(const ZSet& o) const {
  return minus(o).unite(o.minus(*this));
}

ZSet ZSet::translate(long long t) const {
  ZSet out;
  for (const auto& iv : parts) {
    long long lo = iv.lo == Z_NEG_INF ? Z_NEG_INF : iv.lo + t;
    long long hi = iv.hi == Z_POS_INF ? Z_POS_INF : iv.hi + t;
    out.parts.push_back({lo, hi});
  }
  normalize(out.parts);
  return out;
}

ZSet ZSet::reflect(long long c) const {
  ZSet out;
  for (const auto& iv : parts) {
    long long lo = iv.hi == Z_POS_INF ? Z_NEG_INF : c - iv.hi;
    long long hi = iv.lo == Z_NEG_INF ? Z_POS_INF : c - iv.lo;
    out.parts.push_back({lo, hi});
  }
  normalize(out.parts);
  return out;
}

std::vector<long long> ZSet::breakpoints() const {
  std::vector<long long> out;
  for (const auto& iv : parts) {
    if (iv.lo != Z_NEG_INF) out.push_back(iv.lo);
    if (iv.hi != Z_POS_INF) out.push_back(iv.hi);
  }
  return out;
}

std::string ZSet::to_string() const {
  if (parts.empty()) return "{}";
  std::string s;
  for (const auto& iv : parts) {
    if (!s.empty()) s += ",";
    std::string lo = iv.lo == Z_NEG_INF ? "-inf" : std::to_string(iv.lo);
    std::string hi = iv.hi == Z_POS_INF ? "+inf" : std::to_string(iv.hi);
    if (iv.lo == iv.hi)
      s += lo;
    else
      s += "[" + lo + "," + hi + "]";
  }
  return "{" + s + "}";
}

}  // namespace minicube
