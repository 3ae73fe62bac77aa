#pragma once
// Exact subsets of the free group F2 = <a,b> with finite coboundary in the
// Cayley tree.  Words are reduced strings over a,b,A,B (A = a^-1, B = b^-1).
//
// Representation: membership of the identity plus the finite set of tree
// edges where membership flips.  Every non-root vertex names its parent edge,
// so a cut set is a sorted vector of child words.  This form is canonical:
// two descriptors denote the same subset iff root bit and cut set coincide.
// Finite unions of cones modulo finite exception sets are exactly the sets
// expressible here, and the class is closed under all Boolean operations and
// the left G-action.

#include <string>
#include <vector>

namespace minicube {

namespace f2 {
bool is_letter(char c);
char inverse_letter(char c);
bool is_reduced(const std::string& w);
std::string reduce(const std::string& w);
std::string mul(const std::string& u, const std::string& v);
std::string inv(const std::string& u);
// Deterministic order: by length, then lexicographic with a < b < A < B.
bool word_less(const std::string& u, const std::string& v);
std::vector<std::string> ball(int radius);  // reduced words of length <= radius
std::vector<std::string> neighbors(const std::string& u);
int dist(const std::string& u, const std::string& v);
}  // namespace f2

struct TreeSet {
  bool root_in = false;
  std::vector<std::string> cuts;  // sorted (word_less), nonempty reduced words

  static TreeSet empty();
  static TreeSet all();
  static TreeSet cone(const std::string& w);  // reduced words with prefix w
  static TreeSet point(const std::string& w);
  // Union of cones symmetric-differenced with exception points.
  static TreeSet of_cones_and_exceptions(const std::vector<std::string>& cones,
                                         const std::vector<std::string>& exceptions);

  bool contains(const std::string& w) const;
  bool is_empty() const { return !root_in && cuts.empty(); }
  bool is_all() const { return root_in && cuts.empty(); }
  bool is_finite() const;
  long long size_finite() const;
  std::vector<std::string> elements_finite() const;

  TreeSet complement() const;
  TreeSet unite(const TreeSet& o) const;
  TreeSet intersect(const TreeSet& o) const;
  TreeSet minus(const TreeSet& o) const;
  TreeSet sym_diff(const TreeSet& o) const;
  TreeSet translate(const std::string& g) const;  // g . S

  // Canonical (cones, exceptions) presentation: cones are the maximal words w
  // with cone(w) wholly inside the set; exceptions are the leftover points.
  void canonical_presentation(std::vector<std::string>& cones,
                              std::vector<std::string>& exceptions) const;

  bool operator==(const TreeSet&) const = default;
  std::string to_string() const;
};

}  // namespace minicube
