#include "minicube/backends.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

#include "minicube/common.hpp"

namespace minicube {

std::string backend_name(Backend b) {
  switch (b) {
    case Backend::halfline: return "halfline";
    case Backend::dihedral: return "dihedral";
    case Backend::grid: return "grid";
    case Backend::free_group: return "free";
  }
  return "?";
}

Backend backend_from_name(const std::string& s) {
  if (s == "halfline") return Backend::halfline;
  if (s == "dihedral") return Backend::dihedral;
  if (s == "grid") return Backend::grid;
  if (s == "free") return Backend::free_group;
  throw FormatError("unknown backend \"" + s + "\"");
}

std::string GroupElement::to_string() const {
  switch (backend) {
    case Backend::halfline: return std::to_string(a);
    case Backend::dihedral:
      return "(" + std::to_string(a) + (b > 0 ? ",+)" : ",-)");
    case Backend::grid:
      return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Backend::free_group: return w.empty() ? "e" : w;
  }
  return "?";
}

GroupElement identity(Backend b) {
  GroupElement g;
  g.backend = b;
  if (b == Backend::dihedral) g.b = 1;
  return g;
}

GroupElement g_mul(const GroupElement& x, const GroupElement& y) {
  if (x.backend != y.backend) throw BackendMismatch("multiplying across backends");
  GroupElement r;
  r.backend = x.backend;
  switch (x.backend) {
    case Backend::halfline:
      r.a = x.a + y.a;
      break;
    case Backend::dihedral:
      r.a = x.a + x.b * y.a;
      r.b = x.b * y.b;
      break;
    case Backend::grid:
      r.a = x.a + y.a;
      r.b = x.b + y.b;
      break;
    case Backend::free_group:
      r.w = f2::mul(x.w, y.w);
      break;
  }
  return r;
}

GroupElement g_inv(const GroupElement& x) {
  GroupElement r;
  r.backend = x.backend;
  switch (x.backend) {
    case Backend::halfline:
      r.a = -x.a;
      break;
    case Backend::dihedral:
      r.a = -x.b * x.a;
      r.b = x.b;
      break;
    case Backend::grid:
      r.a = -x.a;
      r.b = -x.b;
      break;
    case Backend::free_group:
      r.w = f2::inv(x.w);
      break;
  }
  return r;
}

namespace {
// The dihedral Cayley graph on the two reflections is a path; this is the
// position of (s, eps) on it.  Right multiplication by either generator
// moves the position by exactly one.
long long dihedral_pos(const GroupElement& g) { return 2 * g.a - (g.b < 0 ? 1 : 0); }

GroupElement dihedral_from_pos(long long p) {
  GroupElement g;
  g.backend = Backend::dihedral;
  if (p % 2 == 0) {
    g.a = p / 2;
    g.b = 1;
  } else {
    g.a = (p + 1) / 2;
    g.b = -1;
  }
  return g;
}
}  // namespace

int g_length(const GroupElement& x) {
  switch (x.backend) {
    case Backend::halfline: return static_cast<int>(std::llabs(x.a));
    case Backend::dihedral: return static_cast<int>(std::llabs(dihedral_pos(x)));
    case Backend::grid: return static_cast<int>(std::llabs(x.a) + std::llabs(x.b));
    case Backend::free_group: return static_cast<int>(x.w.size());
  }
  return 0;
}

std::vector<GroupElement> generators(Backend b) {
  std::vector<GroupElement> out;
  auto mk = [&](long long a, long long bb, const std::string& w) {
    GroupElement g;
    g.backend = b;
    g.a = a;
    g.b = bb;
    g.w = w;
    out.push_back(g);
  };
  switch (b) {
    case Backend::halfline:
      mk(1, 0, "");
      mk(-1, 0, "");
      break;
    case Backend::dihedral:
      mk(0, -1, "");
      mk(1, -1, "");
      break;
    case Backend::grid:
      mk(1, 0, "");
      mk(-1, 0, "");
      mk(0, 1, "");
      mk(0, -1, "");
      break;
    case Backend::free_group:
      mk(0, 0, "a");
      mk(0, 0, "b");
      mk(0, 0, "A");
      mk(0, 0, "B");
      break;
  }
  return out;
}

std::vector<GroupElement> ball(Backend b, int radius, std::size_t cap_elements) {
  if (radius < 0) throw FormatError("negative ball radius");
  std::vector<GroupElement> out;
  auto push = [&](GroupElement g) {
    if (out.size() >= cap_elements)
      throw SizeError("ball of radius " + std::to_string(radius) + " exceeds element cap " +
                      std::to_string(cap_elements));
    out.push_back(std::move(g));
  };
  switch (b) {
    case Backend::halfline:
      for (long long n = -radius; n <= radius; ++n) {
        GroupElement g;
        g.backend = b;
        g.a = n;
        push(g);
      }
      break;
    case Backend::dihedral:
      for (long long p = -radius; p <= radius; ++p) push(dihedral_from_pos(p));
      break;
    case Backend::grid:
      for (long long x = -radius; x <= radius; ++x)
        for (long long y = -(radius - std::llabs(x)); y <= radius - std::llabs(x); ++y) {
          GroupElement g;
          g.backend = b;
          g.a = x;
          g.b = y;
          push(g);
        }
      break;
    case Backend::free_group:
      for (auto& w : f2::ball(radius)) {
        GroupElement g;
        g.backend = b;
        g.w = std::move(w);
        push(g);
      }
      break;
  }
  return out;
}

std::string StabilizerSpec::to_string() const {
  switch (kind) {
    case Kind::trivial: return "trivial";
    case Kind::cyclic_x: return "cyclic-x";
    case Kind::cyclic_y: return "cyclic-y";
  }
  return "?";
}

ExactSet ExactSet::of_z(Backend b, ZSet v) {
  if (b != Backend::halfline && b != Backend::dihedral)
    throw BackendMismatch("integer set on a non-integer backend");
  ExactSet s;
  s.backend = b;
  s.z = std::move(v);
  return s;
}

ExactSet ExactSet::of_grid(GridSet g) {
  ExactSet s;
  s.backend = Backend::grid;
  s.grid = std::move(g);
  return s;
}

ExactSet ExactSet::of_tree(TreeSet t) {
  ExactSet s;
  s.backend = Backend::free_group;
  s.tree = std::move(t);
  return s;
}

bool ExactSet::contains(const GroupElement& g) const {
  if (g.backend != backend) throw BackendMismatch("membership across backends");
  switch (backend) {
    case Backend::halfline:
    case Backend::dihedral: return z.contains(g.a);
    case Backend::grid: return grid.contains(g.a, g.b);
    case Backend::free_group: return tree.contains(g.w);
  }
  return false;
}

bool ExactSet::is_empty() const {
  switch (backend) {
    case Backend::halfline:
    case Backend::dihedral: return z.is_empty();
    case Backend::grid: return grid.is_empty();
    case Backend::free_group: return tree.is_empty();
  }
  return true;
}

namespace {
template <typename F, typename G, typename H>
ExactSet lift(const ExactSet& a, F fz, G fg, H ft) {
  ExactSet s;
  s.backend = a.backend;
  switch (a.backend) {
    case Backend::halfline:
    case Backend::dihedral: s.z = fz(a.z); break;
    case Backend::grid: s.grid = fg(a.grid); break;
    case Backend::free_group: s.tree = ft(a.tree); break;
  }
  return s;
}

template <typename F, typename G, typename H>
ExactSet lift2(const ExactSet& a, const ExactSet& b, F fz, G fg, H ft) {
  if (a.backend != b.backend) throw BackendMismatch("set algebra across backends");
  ExactSet s;
  s.backend = a.backend;
  switch (a.backend) {
    case Backend::halfline:
    case Backend::dihedral: s.z = fz(a.z, b.z); break;
    case Backend::grid: s.grid = fg(a.grid, b.grid); break;
    case Backend::free_group: s.tree = ft(a.tree, b.tree); break;
  }
  return s;
}
}  // namespace

ExactSet ExactSet::complement() const {
  return lift(
      *this, [](const ZSet& v) { return v.complement(); },
      [](const GridSet& g) { return g.complement(); },
      [](const TreeSet& t) { return t.complement(); });
}

ExactSet ExactSet::unite(const ExactSet& o) const {
  return lift2(
      *this, o, [](const ZSet& a, const ZSet& b) { return a.unite(b); },
      [](const GridSet& a, const GridSet& b) { return a.unite(b); },
      [](const TreeSet& a, const TreeSet& b) { return a.unite(b); });
}

ExactSet ExactSet::intersect(const ExactSet& o) const {
  return lift2(
      *this, o, [](const ZSet& a, const ZSet& b) { return a.intersect(b); },
      [](const GridSet& a, const GridSet& b) { return a.intersect(b); },
      [](const TreeSet& a, const TreeSet& b) { return a.intersect(b); });
}

ExactSet ExactSet::minus(const ExactSet& o) const {
  return lift2(
      *this, o, [](const ZSet& a, const ZSet& b) { return a.minus(b); },
      [](const GridSet& a, const GridSet& b) { return a.minus(b); },
      [](const TreeSet& a, const TreeSet& b) { return a.minus(b); });
}

ExactSet ExactSet::sym_diff(const ExactSet& o) const {
  return lift2(
      *this, o, [](const ZSet& a, const ZSet& b) { return a.sym_diff(b); },
      [](const GridSet& a, const GridSet& b) { return a.sym_diff(b); },
      [](const TreeSet& a, const TreeSet& b) { return a.sym_diff(b); });
}

std::string ExactSet::raw_string() const {
  switch (backend) {
    case Backend::halfline: return z.to_string();
    case Backend::dihedral: return z.to_string();
    case Backend::grid: return grid.to_string();
    case Backend::free_group:
      return (tree.root_in ? "1|" : "0|") + [&] {
        std::string s;
        for (const auto& c : tree.cuts) s += c + ";";
        return s;
      }();
  }
  return "?";
}

ExactSet act(const GroupElement& g, const ExactSet& A) {
  if (g.backend != A.backend) throw BackendMismatch("acting across backends");
  ExactSet s;
  s.backend = A.backend;
  switch (A.backend) {
    case Backend::halfline:
      s.z = A.z.translate(g.a);
      break;
    case Backend::dihedral:
      // On value sets the left action is affine: v -> eps*v + s.
      s.z = g.b > 0 ? A.z.translate(g.a) : A.z.reflect(g.a);
      break;
    case Backend::grid:
      s.grid = A.grid.translate(g.a, g.b);
      break;
    case Backend::free_group:
      s.tree = A.tree.translate(g.w);
      break;
  }
  return s;
}

StabilizerSpec conjugate(const GroupElement&, const StabilizerSpec& h) { return h; }

ExactSet corner(const ExactSet& A, const ExactSet& B, bool a_plus, bool b_plus) {
  const ExactSet& left = a_plus ? A : A.complement();
  return left.intersect(b_plus ? B : B.complement());
}

bool is_small(const ExactSet& s, const StabilizerSpec& h) {
  switch (h.kind) {
    case StabilizerSpec::Kind::trivial:
      switch (s.backend) {
        case Backend::halfline:
        case Backend::dihedral: return s.z.is_finite();
        case Backend::grid: return s.grid.is_finite();
        case Backend::free_group: return s.tree.is_finite();
      }
      return false;
    case StabilizerSpec::Kind::cyclic_x:
      if (s.backend != Backend::grid)
        throw BackendMismatch("axis stabilizer outside the grid backend");
      // Cosets of the x-axis subgroup are the horizontal lines.
      return s.grid.proj_y().is_finite();
    case StabilizerSpec::Kind::cyclic_y:
      if (s.backend != Backend::grid)
        throw BackendMismatch("axis stabilizer outside the grid backend");
      return s.grid.proj_x().is_finite();
  }
  return false;
}

bool nontrivial(const ExactSet& s, const StabilizerSpec& h) {
  return !is_small(s, h) && !is_small(s.complement(), h);
}

bool equivalent(const ExactSet& a, const StabilizerSpec& a_stab, const ExactSet& b) {
  return is_small(a.sym_diff(b), a_stab);
}

bool coboundary_meets_ball(const ExactSet& a, const GroupElement& center, int radius) {
  auto gens = generators(a.backend);
  for (const auto& u : ball(a.backend, radius)) {
    GroupElement v = g_mul(center, u);
    bool in = a.contains(v);
    for (const auto& s : gens)
      if (a.contains(g_mul(v, s)) != in) return true;
  }
  return false;
}

std::optional<RayForm> ray_form(const ZSet& v) {
  bool below = v.unbounded_below(), above = v.unbounded_above();
  if (below == above) return std::nullopt;  // empty, finite, cofinite or two-ended
  RayForm f;
  f.side = below ? 'L' : 'R';
  auto bps = v.breakpoints();
  long long lo = bps.front() - 2, hi = bps.back() + 2;
  // Minimize the exception count; ties go to the least threshold on the left
  // side and the greatest on the right (the two rules are mirror images).
  long long best_count = -1;
  std::vector<long long> optima;
  for (long long t = lo; t <= hi; ++t) {
    ZSet tmpl = f.side == 'L' ? ZSet::ray_le(t) : ZSet::ray_ge(t);
    long long c = v.sym_diff(tmpl).size_finite();
    if (best_count < 0 || c < best_count) {
      best_count = c;
      optima.assign(1, t);
    } else if (c == best_count) {
      optima.push_back(t);
    }
  }
  f.threshold = f.side == 'L' ? optima.front() : optima.back();
  ZSet tmpl = f.side == 'L' ? ZSet::ray_le(f.threshold) : ZSet::ray_ge(f.threshold);
  f.exceptions = v.sym_diff(tmpl).elements_finite();
  return f;
}

ZSet zset_of_ray_form(const RayForm& f) {
  ZSet s = f.side == 'L' ? ZSet::ray_le(f.threshold) : ZSet::ray_ge(f.threshold);
  return s.sym_diff(ZSet::of_points(f.exceptions));
}

namespace {
GridSet grid_template(char axis, char side, long long t) {
  if (axis == 'x') return side == 'L' ? GridSet::x_le(t) : GridSet::x_ge(t);
  return side == 'L' ? GridSet::y_le(t) : GridSet::y_ge(t);
}
}  // namespace

std::optional<GridForm> grid_form(const GridSet& g) {
  // Two half-planes on the same axis and side differ by an infinite strip,
  // so at most one (axis, side, threshold) leaves a finite toggle set.
  for (char axis : {'x', 'y'})
    for (char side : {'L', 'R'}) {
      std::vector<long long> cand;
      for (const auto& s : g.slabs) {
        if (axis == 'x') {
          if (s.xs.lo > Z_NEG_INF) cand.push_back(s.xs.lo);
          if (s.xs.hi < Z_POS_INF) cand.push_back(s.xs.hi);
        } else {
          for (long long b : s.col.breakpoints()) cand.push_back(b);
        }
      }
      if (cand.empty()) continue;
      long long lo = *std::min_element(cand.begin(), cand.end()) - 2;
      long long hi = *std::max_element(cand.begin(), cand.end()) + 2;
      for (long long t = lo; t <= hi; ++t) {
        GridSet d = g.sym_diff(grid_template(axis, side, t));
        if (!d.is_finite()) continue;
        GridForm f;
        f.axis = axis;
        f.side = side;
        f.threshold = t;
        f.exceptions = d.elements_finite();
        return f;
      }
    }
  return std::nullopt;
}

GridSet gridset_of_grid_form(const GridForm& f) {
  GridSet s = grid_template(f.axis, f.side, f.threshold);
  for (const auto& [x, y] : f.exceptions) s = s.sym_diff(GridSet::point(x, y));
  return s;
}

FreeForm free_form(const TreeSet& t) {
  FreeForm f;
  t.canonical_presentation(f.cones, f.exceptions);
  return f;
}

TreeSet treeset_of_free_form(const FreeForm& f) {
  return TreeSet::of_cones_and_exceptions(f.cones, f.exceptions);
}

namespace {
std::string int_list(const std::vector<long long>& xs) {
  std::string s = "{";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(xs[i]);
  }
  return s + "}";
}
}  // namespace

std::string canonical_name(const ExactSet& s) {
  switch (s.backend) {
    case Backend::halfline:
    case Backend::dihedral: {
      auto f = ray_form(s.z);
      if (!f) return s.z.to_string();
      std::string out = std::string(1, f->side) + std::to_string(f->threshold);
      if (!f->exceptions.empty()) out += "~" + int_list(f->exceptions);
      return out;
    }
    case Backend::grid: {
      auto f = grid_form(s.grid);
      if (!f) return s.grid.to_string();
      std::string out = std::string(1, f->axis) + (f->side == 'L' ? "<=" : ">=") +
                        std::to_string(f->threshold);
      if (!f->exceptions.empty()) {
        out += "~{";
        for (size_t i = 0; i < f->exceptions.size(); ++i) {
          if (i) out += ",";
          out += "(" + std::to_string(f->exceptions[i].first) + "," +
                 std::to_string(f->exceptions[i].second) + ")";
        }
        out += "}";
      }
      return out;
    }
    case Backend::free_group: return s.tree.to_string();
  }
  return "?";
}

}  // namespace minicube
