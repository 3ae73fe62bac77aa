#pragma once
// Ultrafilter enumeration and the cubed complex over a pocset: vertices are
// the upward-closed transversals, edges flip one pair, n-cubes are stored
// implicitly as a base vertex plus a label set.  Also hosts hyperplanes,
// components, the edge metric, median verification, a raw vertex/edge
// loader for negative tests, and deterministic DOT export.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "minicube/common.hpp"
#include "minicube/pocset.hpp"

namespace minicube {

struct Edge {
  int u, v;   // u < v
  int label;  // flipped pair, -1 in raw complexes
};

struct Cube {
  int base;                 // corner whose bits vanish on all labels
  std::vector<int> labels;  // ascending, size = dimension >= 2
};

struct CubeComplex {
  int m = 0;
  bool raw = false;
  std::vector<Bits> vertices;  // lex-sorted choice vectors; empty when raw
  int n_vertices = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<std::pair<int, int>>> adj;  // per vertex: (neighbor, edge index)
  std::vector<Cube> cubes;
  std::vector<int> component;
  int n_components = 0;

  int vertex_index(const Bits& choice) const;  // -1 when absent
  int dim_in_component(int comp) const;
  // [0] vertices, [1] edges, [d>=2] d-cubes within the component.
  std::vector<long long> cube_counts(int comp) const;
};

// All ultrafilters in lexicographic choice-vector order.  Backtracking with
// up-set propagation; SizeError beyond cap_pairs (bound 2^m) or cap_vertices.
std::vector<Bits> enumerate_ultrafilters(const Pocset& p, int cap_pairs = 28,
                                         std::size_t cap_vertices = 1'000'000);

CubeComplex build_complex(const Pocset& p, int cap_pairs = 28,
                          std::size_t cap_vertices = 1'000'000);

// Vertices 0..n-1 and explicit edges, no pocset behind them.  Exists to feed
// synthetic graphs to check_median.
CubeComplex raw_complex(int n_vertices, const std::vector<std::pair<int, int>>& edge_list);

struct Hyperplane {
  int label;               // shared pair label of the class
  std::vector<int> edges;  // edge indices, ascending
  std::vector<int> side0, side1;  // half-space vertex sets; side0 holds the lowest vertex
};

// Edge classes under the opposite-sides-of-a-square relation, with their two
// half-spaces.  Throws StructuralError if a class fails to split its
// component in exactly two, or if one class meets a cube in two directions.
std::vector<Hyperplane> hyperplanes(const CubeComplex& c, int comp);

struct MedianReport {
  std::string mode;  // "exhaustive" or "certified"
  bool ok = true;
  std::string counterexample;
  long long pairs_checked = 0;    // distance = hamming distance
  long long links_checked = 0;    // vertices whose link passed the flag test
  long long triples_checked = 0;  // triples with a verified unique median
  bool triples_exhaustive = true;
};

// Exhaustive on small components: every triple has exactly one median and
// links are flag.  Certified on large ones: distance equals hamming distance
// on every pair (which pins every median to the coordinatewise majority),
// links are flag everywhere, majority membership on a deterministic triple
// sample, plus a full median scan on a smaller subsample.
MedianReport check_median(const CubeComplex& c, int comp);

std::vector<int> bfs_distances(const CubeComplex& c, int from);
int distance(const CubeComplex& c, int u, int v);  // -1 when unreachable

struct DotOptions {
  std::vector<int> overlay;        // vertices drawn filled (the L inside C)
  bool hyperplane_colors = false;  // color edges by hyperplane class
  int comp = -1;                   // restrict to one component, -1 = all
};
std::string export_dot(const CubeComplex& c, const DotOptions& opt = {});

}  // namespace minicube
