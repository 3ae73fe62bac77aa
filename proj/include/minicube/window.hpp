#pragma once
// A finite window of the translate family: every gX_i with g in the
// (radius + margin) ball whose coboundary meets that ball, deduplicated into
// complementary pairs.  The window carries two orders on its elements, plain
// inclusion and almost inclusion, and the machinery for basic vertices: the
// membership vertex V_g is kept away from the coboundary cut around g,
// closed upward, and completed pair by pair into an ultrafilter W_g.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minicube/instance.hpp"
#include "minicube/pocset.hpp"
#include "minicube/relations.hpp"

namespace minicube {

struct WindowWitness {
  GroupElement g;
  int orbit = 0;
  bool complement = false;  // this translate is the pair's complement element
};

// Element 2k of the window is `set`, element 2k+1 its complement.
struct WindowPair {
  ExactSet set;
  StabilizerSpec stab;
  std::vector<WindowWitness> witnesses;  // first entry created the pair
};

struct WindowViolation {
  int pair_i = 0;
  int pair_j = 0;
  PairRelation rel;  // kind == double_small_violation
};

struct Window {
  Instance instance;
  int radius = 0;
  int margin = 0;
  std::vector<WindowPair> pairs;
  Pocset incl_order;
  std::optional<Pocset> almost_order;  // engaged only in good position
  std::vector<WindowViolation> violations;
  // Element pairs (i, j) with i <= j witnessed by a lone small corner.
  std::vector<std::pair<int, int>> semi_pairs;
  int bound_r = -1;  // set by compute_bound_r
  int bound_d = -1;

  int n_pairs() const { return static_cast<int>(pairs.size()); }
  int n_elements() const { return 2 * n_pairs(); }
  ExactSet element(int e) const;
  std::string element_name(int e) const;
};

Window build_window(const Instance& inst, int radius, int margin,
                    std::size_t ball_cap = 2'000'000);

// Least r in [1, radius] such that whenever A <= B and the whole r-ball
// around g lies inside A, g lands in B.  Also fills bound_d: the furthest
// any lone small corner A n B* sits from A*, over the recorded semi-nested
// element pairs.  A window whose own radius certifies no such r throws
// SizeError (too small to certify anything).
int compute_bound_r(Window& w);

// Every group element of a finite set, certified complete by subtracting
// the collected points and checking nothing is left.  Scans balls from
// start_radius, growing until cap_radius; SizeError past the cap.
std::vector<GroupElement> finite_members(const ExactSet& s, int start_radius, int cap_radius);

// Length of the shortest u with p*u in target; SizeError past the cap.
int distance_to_set(const GroupElement& p, const ExactSet& target, int cap_radius);

enum class ChoicePolicy { lex, all };

struct ChoiceStep {
  int chosen = 0;      // element adjoined
  int candidates = 0;  // minimal undecided elements that round
};

struct BasicVertex {
  GroupElement g;
  Bits choice;  // bit k set selects element 2k+1, clear selects 2k
  std::vector<ChoiceStep> log;
};

struct CompletionResult {
  std::vector<BasicVertex> branches;
  bool truncated = false;
};

// The basic vertex W_g.  Under lex, membership V_g is returned unchanged
// whenever it already satisfies the ultrafilter conditions; otherwise (and
// always under all) membership is kept only on pairs whose coboundary misses
// the bound_r ball around g, closed upward, and the remainder is decided by
// repeatedly adjoining a minimal undecided element with its up-set.  lex
// takes the least canonical descriptor at every free choice; all explores
// every branch, deduplicated, up to branch_cap.
CompletionResult complete_basic_vertex(const Window& w, const GroupElement& g,
                                       ChoicePolicy policy, int branch_cap = 64);

// W_g for every g in the radius ball, in ball order.
CompletionResult basic_vertices(const Window& w, ChoicePolicy policy, int branch_cap = 64);

}  // namespace minicube
