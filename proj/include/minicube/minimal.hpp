#pragma once
// The two complexes a window carries: the full one over plain inclusion and
// the minimal one over almost inclusion, with the embedding check between
// them.  Also: recovering a set from a vertex and a hyperplane, repairing a
// descriptor into good position by bounded search, the very-good-position
// transform, order-isomorphism verification between translate families, and
// the crossing/non-nested witness scan.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minicube/cubecomplex.hpp"
#include "minicube/relations.hpp"
#include "minicube/window.hpp"

namespace minicube {

// One complex over a window plus the basic vertices that pick out its
// principal component (membership vertices for inclusion, completed basic
// vertices for almost inclusion).
struct Cubing {
  CubeComplex complex;
  int principal = 0;
  std::vector<BasicVertex> basics;
};

struct Cubings {
  Cubing inclusion;
  // Engaged only when the window carries the almost order; a window out of
  // good position keeps this empty while the inclusion complex still builds.
  std::optional<Cubing> minimal;
};

// Builds both complexes.  Fills bound_r on the window if the almost order
// is present and the bound is not yet computed (the completion procedure
// needs it).  Throws StructuralError if some basic vertex is missing from
// its complex or the basic vertices split across components.
Cubings build_cubings(Window& w, ChoicePolicy policy = ChoicePolicy::lex,
                      int branch_cap = 64, int cap_pairs = 28,
                      std::size_t cap_vertices = 1'000'000);

// Inner-vertex indices resolved in the ambient complex, ascending; feeds
// the DOT overlay option.
std::vector<int> embedded_overlay(const Cubing& ambient, const Cubing& inner);

struct DistanceTriple {
  int u = 0, v = 0;  // inner vertex indices
  int d_inner = 0;
  int d_ambient = 0;
};

struct EmbeddingReport {
  bool vertices_embed = true;  // every inner vertex is an ambient vertex
  bool edges_embed = true;     // inner edges are ambient edges
  bool distances_match = true; // the two metrics agree on inner pairs
  std::string counterexample;  // first vertex/edge failure
  std::string mode;            // "exhaustive" or "sampled"
  long long pairs_checked = 0;
  std::vector<DistanceTriple> mismatches;  // capped at 64
  int dim_inner = 0;           // max cube dimension, principal components
  int dim_ambient = 0;
  int vertices_inner = 0;      // full vertex counts
  int vertices_ambient = 0;

  bool ok() const { return vertices_embed && edges_embed && distances_match; }
};

// Checks the inner complex sits inside the ambient one vertex-for-vertex
// and edge-for-edge (choice vectors must be over the same pair list), and
// that distances agree on inner-vertex pairs: exhaustively within the inner
// principal component up to exhaustive_cutoff vertices, otherwise on a
// deterministic sample of sources.
EmbeddingReport verify_embedding(const Cubing& ambient, const Cubing& inner,
                                 int exhaustive_cutoff = 2000);

// The ball subset recovered from a vertex and an element's hyperplane: g is
// a member when the relabeled vertex g*v lies on the side of the basic
// vertex at the identity.  Relabeling reads the g*v side of element A off
// the v side of g^-1 A, so g is undefined when g^-1 A leaves the window.
struct RecoveredSet {
  std::vector<GroupElement> members;
  std::vector<GroupElement> undefined;

  bool partial() const { return !undefined.empty(); }
};

RecoveredSet recover_set(const Window& w, const Cubing& cub, int element,
                         const Bits& v, int ball_radius);

struct RepairOutcome {
  ExactSet repaired;
  bool changed = false;
  int examined = 0;
};

// First equivalent descriptor passing the good-position scan at
// scan_radius.  Candidates come from the canonical form of x: threshold
// shifts and exception subsets, ordered by exception count, then threshold
// drift, then name, so the cleanest equivalent representative wins.  The
// input is returned unchanged only when it is itself the first passing
// candidate.  SizeError when the budget runs out or nothing passes.
RepairOutcome repair_good_position(const ExactSet& x, const StabilizerSpec& stab,
                                   int scan_radius, int budget = 512);

struct TransformResult {
  std::vector<GroupElement> members;    // Z = {g in ball : g*w selects Y}
  std::vector<GroupElement> undefined;  // g with g^-1 Y outside the window
  std::optional<ExactSet> fitted;       // descriptor matching Z where defined
  bool dichotomy = true;                // fitted translate pairs all equal/nested/crossing
  std::string dichotomy_witness;
  // Ball elements a with aY <= Y, and whether aZ was contained in Z.
  std::vector<std::pair<GroupElement, bool>> monotone_witnesses;
  bool monotone = true;
};

// Reads the subset Z off the vertex w_choice by relabeling, fits a
// descriptor (translates of the window's own family first, then plain
// template forms with thresholds inside the ball span), then verifies the
// two very-good-position properties: no fitted translate pair is
// semi-nested or double-small, and aY <= Y forces aZ inside Z.  Without a
// fitted descriptor the containment check falls back to the raw ball set on
// its defined part.  FormatError when y itself fails the good-position scan.
TransformResult very_good_position_transform(const ExactSet& y, const StabilizerSpec& stab,
                                             const Window& w, const Bits& w_choice);

struct OrderIsoReport {
  // "isomorphic", "isomorphic-after-shift", "obstructed"; empty when a
  // precondition gate fired (witness says which).
  std::string verdict;
  std::vector<GroupElement> shifts;  // per family slot; identity when untouched
  std::string witness;
  std::vector<ParallelOrbitPair> parallel;

  bool ok() const { return verdict == "isomorphic" || verdict == "isomorphic-after-shift"; }
};

// Attempts the slotwise correspondence g Y_i -> g Z_i on ball translates:
// collisions on the Y side (equalities and complement-equalities, which
// cover ball stabilizers and inverters) must be mirrored on the Z side, and
// every classified pair must carry identical order entries.  On failure
// each slot is retried with shifted representatives h Z_i, h over the ball
// by word length; families with parallel orbits gate the verdict.
OrderIsoReport verify_order_isomorphism(const std::vector<AISet>& yfam,
                                        const std::vector<AISet>& zfam, int ball_radius);

struct StWitness {
  GroupElement g;
  int i = 0, j = 0;  // g * family[i] against family[j]
  RelationKind kind = RelationKind::crossing;
  bool commensurates = true;  // conjugation by g fixes the slot's stabilizer spec
};

struct StReport {
  int radius = 0;
  std::vector<StWitness> s;  // crossing pairs
  std::vector<StWitness> t;  // crossing, semi-nested or double-small pairs
};

// Ball scan for the two generating-set witnesses: s collects the crossing
// translate pairs, t everything not nested and not equal; s is a sublist of
// t by construction.
StReport st_generators(const std::vector<AISet>& family, int ball_radius);

}  // namespace minicube
