#pragma once
// Pair classification for almost invariant sets.  A pair (A, B) is sorted by
// the emptiness/smallness pattern of its four corners into equal, nested,
// semi_nested, crossing, or a good-position violation (two small corners,
// neither empty).  On top of the classification sit the almost-inclusion
// order, family-wide good-position scans, order-axiom verification, and
// ball-bounded symmetry analyses.  Smallness is always decided against the
// left operand's stabilizer; agreement with the right one is a theorem the
// test suite checks rather than an assumption baked in here.

#include <array>
#include <string>
#include <vector>

#include "minicube/backends.hpp"
#include "minicube/common.hpp"
#include "minicube/instance.hpp"

namespace minicube {

enum class RelationKind { equal, nested, semi_nested, crossing, double_small_violation };

std::string relation_kind_name(RelationKind k);

// Which containment witnesses a nesting: A <= B, B <= A, A <= B*, A* <= B.
enum class NestDirection { none, a_below_b, b_below_a, a_below_comp_b, comp_a_below_b };

std::string nest_direction_name(NestDirection d);

// One corner A^(s) n B^(t); plus selects the set, minus its complement.
struct CornerStatus {
  bool a_plus = true;
  bool b_plus = true;
  bool empty = false;
  bool small = false;  // empty corners count as small
};

struct PairRelation {
  RelationKind kind = RelationKind::crossing;
  NestDirection direction = NestDirection::none;  // nested / semi_nested only
  std::array<CornerStatus, 4> corners{};          // order (+,+), (+,-), (-,+), (-,-)

  int small_count() const;
  std::vector<CornerStatus> small_corners() const;

  // Almost inclusion in each direction, read off this one classification:
  // the corner A n B* (resp. B n A*) is empty, or is small and is the only
  // small corner of the pair.
  bool leq_ab() const;
  bool leq_ba() const;

  // Plain inclusion (empty corner) in each direction.
  bool incl_ab() const;
  bool incl_ba() const;

  bool star_violation() const { return kind == RelationKind::double_small_violation; }
};

// "empty" / "small" / "large" per corner, in the corners[] order.
std::array<std::string, 4> corner_pattern(const PairRelation& r);

// Order tests between the signed elements of one classified pair, reading
// A^(a_sign) <= B^(b_sign) off the corners; sign 0 is the set, 1 its
// complement.
bool leq_entry(const PairRelation& r, int a_sign, int b_sign);
bool incl_entry(const PairRelation& r, int a_sign, int b_sign);

// Computes the four corners of (A, B) and classifies.  Priority: equal when
// both mixed corners vanish; nested on any empty corner; then by the number
// of small corners (>=2 violation, 1 semi-nested, 0 crossing).
PairRelation classify_pair(const ExactSet& A, const StabilizerSpec& a_stab,
                           const ExactSet& B, const StabilizerSpec& b_stab);

struct LeqResult {
  bool value = false;
  bool star_violation = false;
};

// Almost inclusion A <= B.  On a pair violating good position the value is
// false and the flag is set.
LeqResult leq(const ExactSet& A, const StabilizerSpec& a_stab, const ExactSet& B,
              const StabilizerSpec& b_stab);

// A distinct translate g * family[orbit], first witness kept, enumerated in
// ball-then-family order.
struct Translate {
  ExactSet set;
  StabilizerSpec stab;
  GroupElement g;
  int orbit = 0;
};

std::vector<Translate> distinct_translates(const std::vector<AISet>& family, int ball_radius);

struct StarViolation {
  Translate a, b;
  PairRelation rel;  // kind == double_small_violation
};

struct StarReport {
  int radius = 0;
  int translates = 0;
  std::vector<StarViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Scans all pairs of distinct ball translates of the family; an empty
// violation list means the family is in good position at this radius.
StarReport check_condition_star(const std::vector<AISet>& family, int ball_radius);

struct OrderViolation {
  std::string axiom;  // "antisymmetry" or "transitivity"
  int i = 0, j = 0, k = 0;  // antisymmetry repeats i in k
};

struct OrderReport {
  int n = 0;
  std::vector<OrderViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks antisymmetry and transitivity of a relation matrix (row i bit j set
// iff element i <= element j).  Any hit names its witnessing triple; a clean
// report is expected whenever the matrix came from a good-position window.
OrderReport verify_partial_order(const std::vector<Bits>& leq_matrix);

// Ball elements sorted by how their translate of A relates to A, each bucket
// in ball order.  The buckets are disjoint: exact equalities take precedence
// over the equivalence buckets.
struct SymmetryReport {
  int radius = 0;
  std::vector<GroupElement> stabilizer;  // gA = A
  std::vector<GroupElement> inverters;   // gA = A*
  std::vector<GroupElement> k0;          // gA ~ A, gA != A
  std::vector<GroupElement> k_minus_k0;  // gA ~ A*, gA != A*
  std::vector<GroupElement> others;
};

SymmetryReport analyze_symmetries(const ExactSet& A, const StabilizerSpec& stab, int ball_radius);

// Some ball translate of family[i] is equivalent to family[j] (or to its
// complement, when to_complement is set); first witness g kept, i < j.
struct ParallelOrbitPair {
  int i = 0, j = 0;
  GroupElement g;
  bool to_complement = false;
};

struct FamilySymmetryReport {
  int radius = 0;
  std::vector<SymmetryReport> per_set;
  std::vector<ParallelOrbitPair> parallel;
};

FamilySymmetryReport analyze_family_symmetries(const std::vector<AISet>& family, int ball_radius);

}  // namespace minicube
