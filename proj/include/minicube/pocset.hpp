#pragma once
// Finite posets with a free order-reversing involution.  Elements are
// indices 0..2m-1; the complement of i is i^1.  The order matrix is stored
// reflexive and transitively closed, so queries are single bit lookups.

#include <string>
#include <utility>
#include <vector>

#include "minicube/common.hpp"

namespace minicube {

struct Pocset {
  int m = 0;                        // number of complementary pairs
  std::vector<Bits> leq;            // leq[i].get(j) iff element i <= element j
  std::vector<std::string> labels;  // size 2m when present

  int n_elements() const { return 2 * m; }
  static int comp(int i) { return i ^ 1; }
  bool le(int i, int j) const { return leq[i].get(j); }
  bool lt(int i, int j) const { return i != j && leq[i].get(j); }
  const Bits& up(int i) const { return leq[i]; }
  std::string label(int i) const;
};

// Builds from strict or reflexive relation entries (i <= j), closes
// transitively, then enforces every axiom; violations throw StructuralError.
// Relation entries must already include the involution-reversed statements.
Pocset make_pocset(int m, const std::vector<std::pair<int, int>>& relations,
                   std::vector<std::string> labels = {});

// Unvalidated input: an explicit pairing plus relation entries, as loaded
// from text or constructed by tests.
struct RawPocset {
  int n_elements = 0;
  std::vector<int> pair_of;
  std::vector<std::pair<int, int>> rel;
};

struct PocsetReport {
  std::vector<std::string> format_errors;   // malformed data
  std::vector<std::string> axiom_violations;  // well-formed but not a pocset
  bool ok() const { return format_errors.empty() && axiom_violations.empty(); }
};

// Checks the relation exactly as given (no closure): involution axioms,
// reflexivity gaps are ignored, antisymmetry, transitivity, order reversal
// under the involution, and comparability of an element with its complement.
PocsetReport validate_pocset(const RawPocset& raw);

// Validates, relabels an arbitrary valid pairing onto the i^1 layout, and
// builds.  Throws FormatError / StructuralError mirroring the report split.
Pocset pocset_from_raw(const RawPocset& raw, std::vector<std::string> labels = {});

// How the four elements {A, A*, B, B*} compare.  `comparabilities` lists
// every x <= y statement that holds, as (x, y) index pairs.
struct AbstractRelation {
  bool equal = false;
  bool transverse = false;
  std::vector<std::pair<int, int>> comparabilities;
};
AbstractRelation classify_abstract_pair(const Pocset& p, int a, int b);

std::vector<int> minimal_elements(const Pocset& p, const std::vector<int>& subset);

// Choice of one element per pair (bit k set selects 2k+1), closed upward.
bool is_ultrafilter(const Pocset& p, const Bits& choice);

// Text form: "pairs m" then one "i j" line per strict relation, sorted.
// Pairing in this format is implicit (i paired with i^1).
std::string pocset_to_text(const Pocset& p);
RawPocset pocset_from_text(const std::string& text);

}  // namespace minicube
