#pragma once
// Concrete group backends and their exact almost invariant subsets.
//
// Four backends share one interface: the integers (halfline sets), the
// infinite dihedral group acting on Z (sets keyed by the value g*0), the
// grid Z^2 (axis half-planes over an infinite cyclic stabilizer), and the
// free group F2 (unions of cones).  Set algebra is exact in every backend,
// so emptiness, finiteness and H-finiteness are decided, never sampled.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minicube/gridset.hpp"
#include "minicube/treeset.hpp"
#include "minicube/zset.hpp"

namespace minicube {

enum class Backend { halfline, dihedral, grid, free_group };

std::string backend_name(Backend b);
Backend backend_from_name(const std::string& s);

// Tagged element.  halfline: shift a.  dihedral: (shift a, flip b in {+1,-1})
// acting on Z by n -> b*n + a.  grid: (a, b) in Z^2.  free: reduced word w.
struct GroupElement {
  Backend backend = Backend::halfline;
  long long a = 0;
  long long b = 0;
  std::string w;

  bool operator==(const GroupElement&) const = default;
  std::string to_string() const;
};

GroupElement identity(Backend b);
GroupElement g_mul(const GroupElement& x, const GroupElement& y);
GroupElement g_inv(const GroupElement& x);
int g_length(const GroupElement& x);  // word length in the fixed generators

// Fixed generating sets (normative for balls and coboundaries):
// halfline +1/-1; dihedral the reflections (0,-1) and (1,-1); grid the four
// unit vectors; free a, b, a^-1, b^-1.
std::vector<GroupElement> generators(Backend b);

// All elements of word length <= radius, deterministic order.
std::vector<GroupElement> ball(Backend b, int radius, std::size_t cap_elements = 2'000'000);

struct StabilizerSpec {
  enum class Kind { trivial, cyclic_x, cyclic_y };
  Kind kind = Kind::trivial;
  bool operator==(const StabilizerSpec&) const = default;
  std::string to_string() const;
};

// Exact subset of a backend group.  halfline uses z directly; dihedral keys
// elements by their value g*0, so z holds the set of values (each value
// names the two group elements mapping 0 there).
struct ExactSet {
  Backend backend = Backend::halfline;
  ZSet z;
  GridSet grid;
  TreeSet tree;

  static ExactSet of_z(Backend b, ZSet v);
  static ExactSet of_grid(GridSet g);
  static ExactSet of_tree(TreeSet t);

  bool contains(const GroupElement& g) const;
  bool is_empty() const;
  ExactSet complement() const;
  ExactSet unite(const ExactSet& o) const;
  ExactSet intersect(const ExactSet& o) const;
  ExactSet minus(const ExactSet& o) const;
  ExactSet sym_diff(const ExactSet& o) const;

  bool operator==(const ExactSet&) const = default;
  std::string raw_string() const;  // canonical kernel form, usable as a map key
};

// Left translation gA.  A group action: act(g, act(h, A)) = act(gh, A).
ExactSet act(const GroupElement& g, const ExactSet& A);

// Stabilizer of gA when H stabilizes A.  Trivial and axis subgroups are
// their own conjugates in these backends, so this is the identity map; it
// exists to keep the transport explicit at call sites.
StabilizerSpec conjugate(const GroupElement& g, const StabilizerSpec& h);

// A^(s1) n B^(s2); true selects the set, false its complement.
ExactSet corner(const ExactSet& A, const ExactSet& B, bool a_plus, bool b_plus);

// H-finiteness.  Trivial H: plain finiteness.  Cyclic axis H on the grid:
// finiteness of the projection to the orthogonal axis.
bool is_small(const ExactSet& s, const StabilizerSpec& h);

// Both the set and its complement are H-infinite.
bool nontrivial(const ExactSet& s, const StabilizerSpec& h);

// Symmetric difference small w.r.t. the left operand's stabilizer.
bool equivalent(const ExactSet& a, const StabilizerSpec& a_stab, const ExactSet& b);

// True iff some Cayley edge with an endpoint in N_radius(center) has exactly
// one endpoint in A.
bool coboundary_meets_ball(const ExactSet& a, const GroupElement& center, int radius);

// Canonical template-plus-exceptions descriptor forms.  ray_form/grid_form
// return nullopt when the set is not a single ray or half-plane modulo a
// finite toggle set; free_form always exists (maximal full cones plus the
// leftover member points, which never overlap the cones).
struct RayForm {
  char side = 'L';  // 'L' = {n <= t}, 'R' = {n >= t}
  long long threshold = 0;
  std::vector<long long> exceptions;
  bool operator==(const RayForm&) const = default;
};
std::optional<RayForm> ray_form(const ZSet& v);
ZSet zset_of_ray_form(const RayForm& f);

struct GridForm {
  char axis = 'x';
  char side = 'L';
  long long threshold = 0;
  std::vector<std::pair<long long, long long>> exceptions;
  bool operator==(const GridForm&) const = default;
};
std::optional<GridForm> grid_form(const GridSet& g);
GridSet gridset_of_grid_form(const GridForm& f);

struct FreeForm {
  std::vector<std::string> cones;
  std::vector<std::string> exceptions;
  bool operator==(const FreeForm&) const = default;
};
FreeForm free_form(const TreeSet& t);
TreeSet treeset_of_free_form(const FreeForm& f);

// Short display name: "L0~{2}", "R1", "x>=1", "cone(a)+cone(b)~{B}".  Falls
// back to the raw kernel form when no descriptor template fits.
std::string canonical_name(const ExactSet& s);

}  // namespace minicube
