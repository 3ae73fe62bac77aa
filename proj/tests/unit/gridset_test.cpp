#include "doctest.h"

#include <algorithm>
#include <vector>

#include "minicube/common.hpp"
#include "minicube/gridset.hpp"

using namespace minicube;

namespace {

constexpr long long W = 12;  // oracle window [-W, W]^2

bool agrees_pointwise(const GridSet& s, auto pred) {
  for (long long x = -W; x <= W; ++x)
    for (long long y = -W; y <= W; ++y)
      if (s.contains(x, y) != pred(x, y)) return false;
  return true;
}

void check_canonical(const GridSet& s) {
  for (size_t i = 0; i < s.slabs.size(); ++i) {
    CHECK(s.slabs[i].xs.lo <= s.slabs[i].xs.hi);
    CHECK_FALSE(s.slabs[i].col.is_empty());
    if (i) {
      CHECK(s.slabs[i].xs.lo > s.slabs[i - 1].xs.hi);
      if (s.slabs[i].xs.lo == s.slabs[i - 1].xs.hi + 1)
        CHECK_FALSE(s.slabs[i].col == s.slabs[i - 1].col);
    }
  }
}

struct Gen {
  std::uint64_t s = 0xDEADBEEFCAFE1234ull;
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  long long coord() { return (long long)(next() % 13) - 6; }
  GridSet atom() {
    switch (next() % 6) {
      case 0: return GridSet::point(coord(), coord());
      case 1: return GridSet::x_ge(coord());
      case 2: return GridSet::x_le(coord());
      case 3: return GridSet::y_ge(coord());
      case 4: return GridSet::y_le(coord());
      default: {
        long long a = coord(), b = coord(), c = coord(), d = coord();
        return GridSet::product(ZSet::interval(std::min(a, b), std::max(a, b)),
                                ZSet::interval(std::min(c, d), std::max(c, d)));
      }
    }
  }
};

}  // namespace

TEST_CASE("gridset constructors match their definitions") {
  CHECK(GridSet::empty().is_empty());
  CHECK(GridSet::all().contains(100, -100));
  CHECK(GridSet::point(2, -3).contains(2, -3));
  CHECK_FALSE(GridSet::point(2, -3).contains(2, -2));
  CHECK(agrees_pointwise(GridSet::x_ge(1), [](long long x, long long) { return x >= 1; }));
  CHECK(agrees_pointwise(GridSet::y_le(-2), [](long long, long long y) { return y <= -2; }));
  GridSet box = GridSet::product(ZSet::interval(0, 2), ZSet::interval(1, 1));
  CHECK(box.size_finite() == 3);
  CHECK(box.elements_finite() ==
        std::vector<std::pair<long long, long long>>{{0, 1}, {1, 1}, {2, 1}});
}

TEST_CASE("gridset boolean operations agree with pointwise evaluation") {
  Gen g;
  std::vector<GridSet> pool;
  for (int i = 0; i < 10; ++i) pool.push_back(g.atom());
  for (int round = 0; round < 120; ++round) {
    const GridSet& a = pool[g.next() % pool.size()];
    const GridSet& b = pool[g.next() % pool.size()];
    GridSet u = a.unite(b), n = a.intersect(b), m = a.minus(b), x = a.sym_diff(b);
    GridSet c = a.complement();
    check_canonical(u);
    check_canonical(n);
    check_canonical(m);
    check_canonical(x);
    check_canonical(c);
    for (long long px = -W; px <= W; ++px)
      for (long long py = -W; py <= W; ++py) {
        bool ia = a.contains(px, py), ib = b.contains(px, py);
        CHECK(u.contains(px, py) == (ia || ib));
        CHECK(n.contains(px, py) == (ia && ib));
        CHECK(m.contains(px, py) == (ia && !ib));
        CHECK(x.contains(px, py) == (ia != ib));
        CHECK(c.contains(px, py) == !ia);
      }
    pool.push_back(round % 2 ? u : x);
    if (pool.size() > 20) pool.erase(pool.begin());
  }
}

TEST_CASE("gridset equality is structural") {
  GridSet a = GridSet::x_ge(0).intersect(GridSet::y_ge(0));
  GridSet b = GridSet::y_ge(0).intersect(GridSet::x_ge(0));
  CHECK(a == b);
  CHECK(GridSet::x_ge(0).complement() == GridSet::x_le(-1));
  CHECK(GridSet::all().minus(GridSet::empty()) == GridSet::all());
  // Two half-planes reuniting must merge back into one slab.
  CHECK(GridSet::x_ge(0).unite(GridSet::x_le(-1)) == GridSet::all());
}

TEST_CASE("gridset translate") {
  Gen g;
  for (int round = 0; round < 60; ++round) {
    GridSet a = g.atom().unite(g.atom());
    long long dx = g.coord(), dy = g.coord();
    GridSet t = a.translate(dx, dy);
    check_canonical(t);
    for (long long px = -8; px <= 8; ++px)
      for (long long py = -8; py <= 8; ++py)
        CHECK(t.contains(px, py) == a.contains(px - dx, py - dy));
  }
  CHECK(GridSet::x_ge(0).translate(2, 5) == GridSet::x_ge(2));
  CHECK(GridSet::y_ge(0).translate(2, 5) == GridSet::y_ge(5));
}

TEST_CASE("gridset projections") {
  CHECK(GridSet::y_ge(1).proj_y() == ZSet::ray_ge(1));
  CHECK(GridSet::y_ge(1).proj_x() == ZSet::all());
  CHECK(GridSet::x_ge(1).proj_x() == ZSet::ray_ge(1));
  GridSet s = GridSet::point(0, 4).unite(GridSet::point(7, 4));
  CHECK(s.proj_x() == ZSet::of_points({0, 7}));
  CHECK(s.proj_y() == ZSet::point(4));
  // A horizontal strip has finite y projection however wide it is.
  GridSet strip = GridSet::product(ZSet::all(), ZSet::interval(-1, 1));
  CHECK(strip.proj_y().is_finite());
  CHECK_FALSE(strip.proj_x().is_finite());
  CHECK(GridSet::empty().proj_x().is_empty());
}

TEST_CASE("gridset finiteness") {
  CHECK(GridSet::point(1, 1).is_finite());
  CHECK_FALSE(GridSet::x_ge(0).is_finite());
  CHECK_FALSE(GridSet::product(ZSet::interval(0, 1), ZSet::ray_ge(0)).is_finite());
  CHECK_THROWS_AS(GridSet::x_ge(0).size_finite(), StructuralError);
}

TEST_CASE("gridset to_string is stable") {
  CHECK(GridSet::empty().to_string() == "{}");
  CHECK(GridSet::x_ge(1).to_string() == "x[1,+inf]:y{[-inf,+inf]}");
  CHECK(GridSet::point(0, 2).to_string() == "x[0,0]:y{2}");
  GridSet two = GridSet::point(0, 0).unite(GridSet::point(2, 1));
  CHECK(two.to_string() == "x[0,0]:y{0}; x[2,2]:y{1}");
}
