#include "minicube/cubecomplex.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace minicube {

namespace {

Bits flip_bit(const Bits& b, int k) {
  Bits r = b;
  r.flip(k);
  return r;
}

Bits majority(const Bits& a, const Bits& b, const Bits& c) {
  Bits r(a.n);
  for (size_t i = 0; i < r.w.size(); ++i)
    r.w[i] = (a.w[i] & b.w[i]) | (a.w[i] & c.w[i]) | (b.w[i] & c.w[i]);
  return r;
}

struct Enumerator {
  const Pocset& p;
  std::size_t cap_vertices;
  std::vector<signed char> state;  // -1 unassigned, else chosen bit
  std::vector<int> trail;
  std::vector<Bits> out;

  Enumerator(const Pocset& pp, std::size_t cap) : p(pp), cap_vertices(cap) {
    state.assign(p.m, -1);
  }

  // Selects element 2k+v and every element above it.  The order matrix is
  // transitively closed, so one sweep of the up-row settles all consequences.
  bool assign(int k, int v) {
    if (state[k] >= 0) return state[k] == v;
    state[k] = static_cast<signed char>(v);
    trail.push_back(k);
    int e = 2 * k + v;
    const Bits& up = p.up(e);
    for (size_t word = 0; word < up.w.size(); ++word) {
      std::uint64_t bits = up.w[word];
      while (bits) {
        int f = static_cast<int>(word) * 64 + __builtin_ctzll(bits);
        bits &= bits - 1;
        int pf = f >> 1, vf = f & 1;
        if (state[pf] < 0) {
          state[pf] = static_cast<signed char>(vf);
          trail.push_back(pf);
        } else if (state[pf] != vf) {
          return false;
        }
      }
    }
    return true;
  }

  void undo_to(size_t mark) {
    while (trail.size() > mark) {
      state[trail.back()] = -1;
      trail.pop_back();
    }
  }

  void emit() {
    if (out.size() >= cap_vertices)
      throw SizeError("ultrafilter count exceeds vertex cap " + std::to_string(cap_vertices));
    Bits b(p.m);
    for (int k = 0; k < p.m; ++k)
      if (state[k]) b.set(k);
    out.push_back(std::move(b));
  }

  void search(int from) {
    int k = from;
    while (k < p.m && state[k] >= 0) ++k;
    if (k == p.m) {
      emit();
      return;
    }
    for (int v : {0, 1}) {
      size_t mark = trail.size();
      if (assign(k, v)) search(k + 1);
      undo_to(mark);
    }
  }
};

}  // namespace

std::vector<Bits> enumerate_ultrafilters(const Pocset& p, int cap_pairs,
                                         std::size_t cap_vertices) {
  if (p.m > cap_pairs)
    throw SizeError("pocset has " + std::to_string(p.m) + " pairs, cap is " +
                    std::to_string(cap_pairs) + " (up to 2^" + std::to_string(p.m) +
                    " ultrafilters)");
  Enumerator en(p, cap_vertices);
  en.search(0);
  std::sort(en.out.begin(), en.out.end(),
            [](const Bits& a, const Bits& b) { return a.lex_less(b); });
  return en.out;
}

int CubeComplex::vertex_index(const Bits& choice) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), choice,
                             [](const Bits& a, const Bits& b) { return a.lex_less(b); });
  if (it == vertices.end() || !(*it == choice)) return -1;
  return static_cast<int>(it - vertices.begin());
}

namespace {

void compute_components(CubeComplex& c) {
  c.component.assign(c.n_vertices, -1);
  c.n_components = 0;
  for (int s = 0; s < c.n_vertices; ++s) {
    if (c.component[s] >= 0) continue;
    int id = c.n_components++;
    std::deque<int> q{s};
    c.component[s] = id;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (auto [v, e] : c.adj[u])
        if (c.component[v] < 0) {
          c.component[v] = id;
          q.push_back(v);
        }
    }
  }
}

// All increasing label sets S (|S| >= 2) whose full corner sets exist,
// recorded once from the corner where every S-bit is 0.
void collect_cubes(CubeComplex& c) {
  for (int v = 0; v < c.n_vertices; ++v) {
    std::vector<int> cand;
    for (auto [nb, e] : c.adj[v]) {
      int k = c.edges[e].label;
      if (!c.vertices[v].get(k)) cand.push_back(k);
    }
    std::sort(cand.begin(), cand.end());

    std::vector<int> labels;
    std::vector<int> corners{v};
    auto extend = [&](auto&& self, size_t from) -> void {
      for (size_t i = from; i < cand.size(); ++i) {
        int k = cand[i];
        std::vector<int> next_corners = corners;
        bool full = true;
        for (int idx : corners) {
          int w = c.vertex_index(flip_bit(c.vertices[idx], k));
          if (w < 0) {
            full = false;
            break;
          }
          next_corners.push_back(w);
        }
        if (!full) continue;
        labels.push_back(k);
        std::swap(corners, next_corners);
        if (labels.size() >= 2) c.cubes.push_back({v, labels});
        self(self, i + 1);
        std::swap(corners, next_corners);
        labels.pop_back();
      }
    };
    extend(extend, 0);
  }
}

}  // namespace

CubeComplex build_complex(const Pocset& p, int cap_pairs, std::size_t cap_vertices) {
  CubeComplex c;
  c.m = p.m;
  c.vertices = enumerate_ultrafilters(p, cap_pairs, cap_vertices);
  c.n_vertices = static_cast<int>(c.vertices.size());
  c.adj.assign(c.n_vertices, {});
  for (int u = 0; u < c.n_vertices; ++u)
    for (int k = 0; k < c.m; ++k) {
      if (c.vertices[u].get(k)) continue;  // count each edge from its low end
      int v = c.vertex_index(flip_bit(c.vertices[u], k));
      if (v < 0) continue;
      int e = static_cast<int>(c.edges.size());
      c.edges.push_back({std::min(u, v), std::max(u, v), k});
      c.adj[u].emplace_back(v, e);
      c.adj[v].emplace_back(u, e);
    }
  compute_components(c);
  collect_cubes(c);
  return c;
}

CubeComplex raw_complex(int n_vertices, const std::vector<std::pair<int, int>>& edge_list) {
  CubeComplex c;
  c.raw = true;
  c.n_vertices = n_vertices;
  c.adj.assign(n_vertices, {});
  for (auto [u, v] : edge_list) {
    if (u < 0 || v < 0 || u >= n_vertices || v >= n_vertices || u == v)
      throw FormatError("bad raw edge");
    int e = static_cast<int>(c.edges.size());
    c.edges.push_back({std::min(u, v), std::max(u, v), -1});
    c.adj[u].emplace_back(v, e);
    c.adj[v].emplace_back(u, e);
  }
  compute_components(c);
  return c;
}

int CubeComplex::dim_in_component(int comp) const {
  long long best = 0;
  for (const auto& e : edges)
    if (component[e.u] == comp) best = std::max(best, 1LL);
  for (const auto& cu : cubes)
    if (component[cu.base] == comp) best = std::max(best, (long long)cu.labels.size());
  return static_cast<int>(best);
}

std::vector<long long> CubeComplex::cube_counts(int comp) const {
  std::vector<long long> counts(2, 0);
  for (int v = 0; v < n_vertices; ++v)
    if (component[v] == comp) ++counts[0];
  for (const auto& e : edges)
    if (component[e.u] == comp) ++counts[1];
  for (const auto& cu : cubes)
    if (component[cu.base] == comp) {
      size_t d = cu.labels.size();
      if (counts.size() <= d) counts.resize(d + 1, 0);
      ++counts[d];
    }
  return counts;
}

std::vector<Hyperplane> hyperplanes(const CubeComplex& c, int comp) {
  // Union-find over edges; opposite sides of every square are glued.
  std::vector<int> parent(c.edges.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  std::unordered_map<long long, int> edge_at;
  auto ekey = [&](int u, int v) {
    return (long long)std::min(u, v) * c.n_vertices + std::max(u, v);
  };
  for (size_t e = 0; e < c.edges.size(); ++e) edge_at[ekey(c.edges[e].u, c.edges[e].v)] = (int)e;

  auto corner = [&](int base, const std::vector<int>& flips) {
    Bits b = c.vertices[base];
    for (int k : flips) b.flip(k);
    return c.vertex_index(b);
  };
  for (const auto& cu : c.cubes) {
    if (cu.labels.size() != 2) continue;
    int k = cu.labels[0], l = cu.labels[1];
    int b00 = cu.base, b10 = corner(cu.base, {k}), b01 = corner(cu.base, {l});
    int b11 = corner(cu.base, {k, l});
    unite(edge_at.at(ekey(b00, b10)), edge_at.at(ekey(b01, b11)));
    unite(edge_at.at(ekey(b00, b01)), edge_at.at(ekey(b10, b11)));
  }

  std::vector<int> class_of(c.edges.size(), -1);
  std::vector<Hyperplane> out;
  for (size_t e = 0; e < c.edges.size(); ++e) {
    if (c.component[c.edges[e].u] != comp) continue;
    int root = find(static_cast<int>(e));
    if (class_of[root] < 0) {
      class_of[root] = static_cast<int>(out.size());
      out.push_back({});
      out.back().label = c.edges[e].label;
    }
    Hyperplane& h = out[class_of[root]];
    h.edges.push_back(static_cast<int>(e));
    if (c.edges[e].label != h.label)
      throw StructuralError("hyperplane class mixes pair labels");
  }

  for (auto& h : out) {
    std::vector<char> cut(c.edges.size(), 0);
    for (int e : h.edges) cut[e] = 1;
    std::vector<int> side(c.n_vertices, -1);
    int parts = 0;
    for (int s = 0; s < c.n_vertices; ++s) {
      if (c.component[s] != comp || side[s] >= 0) continue;
      if (parts >= 2)
        throw StructuralError("hyperplane leaves more than two components");
      std::deque<int> q{s};
      side[s] = parts;
      while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (auto [v, e] : c.adj[u]) {
          if (cut[e] || side[v] >= 0) continue;
          side[v] = parts;
          q.push_back(v);
        }
      }
      ++parts;
    }
    if (parts != 2) throw StructuralError("hyperplane fails to separate its component");
    for (int v = 0; v < c.n_vertices; ++v) {
      if (c.component[v] != comp) continue;
      (side[v] == 0 ? h.side0 : h.side1).push_back(v);
    }
  }

  // One dual cube per cube: a cube's directions must lie in distinct classes.
  for (const auto& cu : c.cubes) {
    if (c.component[cu.base] != comp) continue;
    std::vector<int> dirs;
    for (int k : cu.labels) {
      int w = corner(cu.base, {k});
      dirs.push_back(find(edge_at.at(ekey(cu.base, w))));
    }
    std::sort(dirs.begin(), dirs.end());
    if (std::adjacent_find(dirs.begin(), dirs.end()) != dirs.end())
      throw StructuralError("one hyperplane meets a cube in two directions");
  }
  return out;
}

std::vector<int> bfs_distances(const CubeComplex& c, int from) {
  std::vector<int> d(c.n_vertices, -1);
  std::deque<int> q{from};
  d[from] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (auto [v, e] : c.adj[u])
      if (d[v] < 0) {
        d[v] = d[u] + 1;
        q.push_back(v);
      }
  }
  return d;
}

int distance(const CubeComplex& c, int u, int v) { return bfs_distances(c, u)[v]; }

namespace {

std::vector<int> component_vertices(const CubeComplex& c, int comp) {
  std::vector<int> out;
  for (int v = 0; v < c.n_vertices; ++v)
    if (c.component[v] == comp) out.push_back(v);
  return out;
}

// Count of vertices lying on geodesics of all three pairs.
int median_count(const std::vector<int>& verts, const std::vector<std::vector<int>>& d,
                 int i, int j, int k, int* the_median) {
  int count = 0;
  for (size_t x = 0; x < verts.size(); ++x) {
    if (d[i][x] + d[x][j] == d[i][j] && d[j][x] + d[x][k] == d[j][k] &&
        d[i][x] + d[x][k] == d[i][k]) {
      ++count;
      *the_median = static_cast<int>(x);
    }
  }
  return count;
}

// Every pairwise-squared set of flips at v must span full cubes.
bool link_is_flag(const CubeComplex& c, int v, std::string* why) {
  std::vector<int> flips;
  for (auto [nb, e] : c.adj[v]) flips.push_back(c.edges[e].label);
  std::sort(flips.begin(), flips.end());
  auto joined = [&](int k, int l) {
    Bits b = c.vertices[v];
    b.flip(k);
    b.flip(l);
    return c.vertex_index(b) >= 0;
  };
  std::vector<int> clique;
  auto extend = [&](auto&& self, size_t from) -> bool {
    for (size_t i = from; i < flips.size(); ++i) {
      int k = flips[i];
      bool pairwise = true;
      for (int l : clique) pairwise = pairwise && joined(l, k);
      if (!pairwise) continue;
      clique.push_back(k);
      if (clique.size() >= 3) {
        // All corners of the clique must exist, not just the pairwise ones.
        int total = 1 << clique.size();
        for (int mask = 0; mask < total; ++mask) {
          Bits b = c.vertices[v];
          for (size_t t = 0; t < clique.size(); ++t)
            if (mask & (1 << t)) b.flip(clique[t]);
          if (c.vertex_index(b) < 0) {
            std::ostringstream os;
            os << "link of vertex " << v << " is not flag on pairs {";
            for (size_t t = 0; t < clique.size(); ++t) os << (t ? "," : "") << clique[t];
            os << "}";
            *why = os.str();
            return false;
          }
        }
      }
      if (!self(self, i + 1)) return false;
      clique.pop_back();
    }
    return true;
  };
  return extend(extend, 0);
}

}  // namespace

MedianReport check_median(const CubeComplex& c, int comp) {
  MedianReport rep;
  std::vector<int> verts = component_vertices(c, comp);
  int n = static_cast<int>(verts.size());

  bool small = n <= 150;
  if (c.raw && n > 600) throw SizeError("raw complex too large for exhaustive median check");
  rep.mode = (c.raw || small) ? "exhaustive" : "certified";

  std::vector<int> pos(c.n_vertices, -1);
  for (int i = 0; i < n; ++i) pos[verts[i]] = i;

  if (rep.mode == "exhaustive") {
    std::vector<std::vector<int>> d(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
      auto di = bfs_distances(c, verts[i]);
      for (int j = 0; j < n; ++j) d[i][j] = di[verts[j]];
    }
    rep.pairs_checked = (long long)n * (n - 1) / 2;
    for (int i = 0; i < n && rep.ok; ++i)
      for (int j = i; j < n && rep.ok; ++j)
        for (int k = j; k < n; ++k) {
          int med = -1;
          int cnt = median_count(verts, d, i, j, k, &med);
          ++rep.triples_checked;
          if (cnt != 1) {
            rep.ok = false;
            std::ostringstream os;
            os << "triple (" << verts[i] << "," << verts[j] << "," << verts[k] << ") has "
               << cnt << " medians";
            rep.counterexample = os.str();
            break;
          }
        }
    if (!c.raw && rep.ok) {
      for (int v : verts) {
        std::string why;
        if (!link_is_flag(c, v, &why)) {
          rep.ok = false;
          rep.counterexample = why;
          break;
        }
        ++rep.links_checked;
      }
    }
    return rep;
  }

  // Certified mode.  Exhaustive distance = hamming pins any median of any
  // triple to the coordinatewise majority vector, so median existence and
  // uniqueness reduce to majority membership.
  for (int i = 0; i < n && rep.ok; ++i) {
    auto di = bfs_distances(c, verts[i]);
    for (int j = i + 1; j < n; ++j) {
      ++rep.pairs_checked;
      if (di[verts[j]] != c.vertices[verts[i]].hamming(c.vertices[verts[j]])) {
        rep.ok = false;
        std::ostringstream os;
        os << "distance(" << verts[i] << "," << verts[j] << ") = " << di[verts[j]]
           << " differs from choice-vector distance "
           << c.vertices[verts[i]].hamming(c.vertices[verts[j]]);
        rep.counterexample = os.str();
        break;
      }
    }
  }
  for (int idx = 0; idx < n && rep.ok; ++idx) {
    std::string why;
    if (!link_is_flag(c, verts[idx], &why)) {
      rep.ok = false;
      rep.counterexample = why;
      break;
    }
    ++rep.links_checked;
  }

  std::uint64_t seed = 0x2545F4914F6CDD1DULL;
  auto next = [&seed] {
    seed ^= seed << 13;
    seed ^= seed >> 7;
    seed ^= seed << 17;
    return seed;
  };
  long long want = std::min<long long>(50'000, (long long)n * n);
  rep.triples_exhaustive = false;
  std::vector<std::vector<int>> dsub;
  for (long long t = 0; t < want && rep.ok; ++t) {
    int i = static_cast<int>(next() % n), j = static_cast<int>(next() % n),
        k = static_cast<int>(next() % n);
    Bits maj = majority(c.vertices[verts[i]], c.vertices[verts[j]], c.vertices[verts[k]]);
    int mv = c.vertex_index(maj);
    if (mv < 0 || c.component[mv] != comp) {
      rep.ok = false;
      std::ostringstream os;
      os << "majority of (" << verts[i] << "," << verts[j] << "," << verts[k]
         << ") is not a vertex of the component";
      rep.counterexample = os.str();
      break;
    }
    ++rep.triples_checked;
    if (t < 500) {
      // Independent cross-check: full scan must find exactly this median.
      int med = -1, cnt = 0;
      for (int x = 0; x < n; ++x) {
        int dix = c.vertices[verts[i]].hamming(c.vertices[verts[x]]);
        int djx = c.vertices[verts[j]].hamming(c.vertices[verts[x]]);
        int dkx = c.vertices[verts[k]].hamming(c.vertices[verts[x]]);
        if (dix + djx == c.vertices[verts[i]].hamming(c.vertices[verts[j]]) &&
            djx + dkx == c.vertices[verts[j]].hamming(c.vertices[verts[k]]) &&
            dix + dkx == c.vertices[verts[i]].hamming(c.vertices[verts[k]])) {
          ++cnt;
          med = x;
        }
      }
      if (cnt != 1 || verts[med] != mv) {
        rep.ok = false;
        rep.counterexample = "median scan disagrees with majority vector";
        break;
      }
    }
  }
  return rep;
}

namespace {
const char* kPalette[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e",
                          "#e6ab02", "#a6761d", "#666666"};
}

std::string export_dot(const CubeComplex& c, const DotOptions& opt) {
  std::ostringstream out;
  out << "graph cubing {\n";
  out << "  node [shape=box, fontsize=10];\n";
  std::vector<char> in_overlay(c.n_vertices, 0);
  for (int v : opt.overlay)
    if (v >= 0 && v < c.n_vertices) in_overlay[v] = 1;

  std::vector<int> hclass(c.edges.size(), -1);
  if (opt.hyperplane_colors && !c.raw) {
    // Edges of one hyperplane share a label, so the label is the color key.
    for (size_t e = 0; e < c.edges.size(); ++e) hclass[e] = c.edges[e].label;
  }

  for (int v = 0; v < c.n_vertices; ++v) {
    if (opt.comp >= 0 && c.component[v] != opt.comp) continue;
    out << "  v" << v << " [label=\"";
    if (!c.raw && c.m <= 32) {
      for (int k = 0; k < c.m; ++k) out << (c.vertices[v].get(k) ? '1' : '0');
    } else {
      out << v;
    }
    out << "\"";
    if (in_overlay[v]) out << ", style=filled, fillcolor=\"#fee8c8\"";
    out << "];\n";
  }
  for (size_t e = 0; e < c.edges.size(); ++e) {
    if (opt.comp >= 0 && c.component[c.edges[e].u] != opt.comp) continue;
    out << "  v" << c.edges[e].u << " -- v" << c.edges[e].v;
    out << " [label=\"" << (c.edges[e].label >= 0 ? "p" + std::to_string(c.edges[e].label) : "")
        << "\"";
    if (hclass[e] >= 0) out << ", color=\"" << kPalette[hclass[e] % 8] << "\"";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace minicube
