#include "minicube/treeset.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "minicube/common.hpp"

namespace minicube {
namespace f2 {

namespace {
constexpr const char* kLetters = "abAB";

int rank(char c) {
  switch (c) {
    case 'a': return 0;
    case 'b': return 1;
    case 'A': return 2;
    case 'B': return 3;
  }
  return -1;
}
}  // namespace

bool is_letter(char c) { return rank(c) >= 0; }

char inverse_letter(char c) {
  switch (c) {
    case 'a': return 'A';
    case 'b': return 'B';
    case 'A': return 'a';
    case 'B': return 'b';
  }
  throw FormatError(std::string("bad letter '") + c + "'");
}

bool is_reduced(const std::string& w) {
  for (char c : w)
    if (!is_letter(c)) return false;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i + 1] == inverse_letter(w[i])) return false;
  return true;
}

std::string reduce(const std::string& w) {
  std::string out;
  for (char c : w) {
    if (!is_letter(c)) throw FormatError(std::string("bad letter '") + c + "'");
    if (!out.empty() && out.back() == inverse_letter(c))
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

std::string mul(const std::string& u, const std::string& v) {
  std::string out = u;
  for (char c : v) {
    if (!out.empty() && out.back() == inverse_letter(c))
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

std::string inv(const std::string& u) {
  std::string out;
  out.reserve(u.size());
  for (auto it = u.rbegin(); it != u.rend(); ++it) out.push_back(inverse_letter(*it));
  return out;
}

bool word_less(const std::string& u, const std::string& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  for (size_t i = 0; i < u.size(); ++i)
    if (u[i] != v[i]) return rank(u[i]) < rank(v[i]);
  return false;
}

std::vector<std::string> ball(int radius) {
  std::vector<std::string> out{""};
  std::vector<std::string> level{""};
  for (int k = 0; k < radius; ++k) {
    std::vector<std::string> next;
    for (const auto& w : level)
      for (int j = 0; j < 4; ++j) {
        char x = kLetters[j];
        if (!w.empty() && w.back() == inverse_letter(x)) continue;
        next.push_back(w + x);
      }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

std::vector<std::string> neighbors(const std::string& u) {
  std::vector<std::string> out;
  for (int j = 0; j < 4; ++j) out.push_back(mul(u, std::string(1, kLetters[j])));
  return out;
}

int dist(const std::string& u, const std::string& v) {
  return static_cast<int>(mul(inv(u), v).size());
}

}  // namespace f2

namespace {

std::string parent_word(const std::string& c) { return c.substr(0, c.size() - 1); }

// Reduced one-letter extensions of w, in generator order.
std::vector<std::string> child_words(const std::string& w) {
  std::vector<std::string> out;
  for (char x : {'a', 'b', 'A', 'B'}) {
    if (!w.empty() && w.back() == f2::inverse_letter(x)) continue;
    out.push_back(w + x);
  }
  return out;
}

bool is_prefix(const std::string& p, const std::string& w) {
  return p.size() <= w.size() && w.compare(0, p.size(), p) == 0;
}

void sort_words(std::vector<std::string>& v) { std::sort(v.begin(), v.end(), f2::word_less); }

}  // namespace

TreeSet TreeSet::empty() { return TreeSet{}; }

TreeSet TreeSet::all() { return TreeSet{true, {}}; }

TreeSet TreeSet::cone(const std::string& w) {
  if (!f2::is_reduced(w)) throw FormatError("cone apex not reduced: " + w);
  if (w.empty()) return all();
  return TreeSet{false, {w}};
}

TreeSet TreeSet::point(const std::string& w) {
  if (!f2::is_reduced(w)) throw FormatError("point not reduced: " + w);
  TreeSet s;
  s.root_in = w.empty();
  if (!w.empty()) s.cuts.push_back(w);
  for (const auto& c : child_words(w)) s.cuts.push_back(c);
  sort_words(s.cuts);
  return s;
}

TreeSet TreeSet::of_cones_and_exceptions(const std::vector<std::string>& cones,
                                         const std::vector<std::string>& exceptions) {
  TreeSet s = empty();
  for (const auto& c : cones) s = s.unite(cone(c));
  for (const auto& e : exceptions) s = s.sym_diff(point(e));
  return s;
}

bool TreeSet::contains(const std::string& w) const {
  assert(f2::is_reduced(w));
  bool in = root_in;
  for (const auto& c : cuts)
    if (is_prefix(c, w)) in = !in;
  return in;
}

TreeSet TreeSet::complement() const { return TreeSet{!root_in, cuts}; }

TreeSet TreeSet::sym_diff(const TreeSet& o) const {
  TreeSet s;
  s.root_in = root_in != o.root_in;
  std::set<std::string, bool (*)(const std::string&, const std::string&)> xor_cuts(f2::word_less);
  for (const auto& c : cuts) xor_cuts.insert(c);
  for (const auto& c : o.cuts) {
    auto [it, inserted] = xor_cuts.insert(c);
    if (!inserted) xor_cuts.erase(it);
  }
  s.cuts.assign(xor_cuts.begin(), xor_cuts.end());
  return s;
}

TreeSet TreeSet::intersect(const TreeSet& o) const {
  // Membership can only flip across an edge where one operand flips.
  std::vector<std::string> cand = cuts;
  cand.insert(cand.end(), o.cuts.begin(), o.cuts.end());
  sort_words(cand);
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  TreeSet s;
  s.root_in = root_in && o.root_in;
  for (const auto& c : cand) {
    std::string p = parent_word(c);
    bool at_c = contains(c) && o.contains(c);
    bool at_p = contains(p) && o.contains(p);
    if (at_c != at_p) s.cuts.push_back(c);
  }
  return s;
}

TreeSet TreeSet::unite(const TreeSet& o) const {
  return complement().intersect(o.complement()).complement();
}

TreeSet TreeSet::minus(const TreeSet& o) const { return intersect(o.complement()); }

TreeSet TreeSet::translate(const std::string& g) const {
  if (!f2::is_reduced(g)) throw FormatError("translate word not reduced: " + g);
  TreeSet s;
  s.root_in = contains(f2::inv(g));
  for (const auto& c : cuts) {
    std::string gp = f2::mul(g, parent_word(c));
    std::string gc = f2::mul(g, c);
    s.cuts.push_back(gc.size() > gp.size() ? gc : gp);
  }
  sort_words(s.cuts);
  return s;
}

namespace {

// Core vertices: every prefix of every cut word.  Outside the core each cone
// has constant membership, so finiteness and enumeration reduce to the core
// and its frontier children.
std::vector<std::string> core_vertices(const std::vector<std::string>& cuts) {
  std::set<std::string, bool (*)(const std::string&, const std::string&)> core(f2::word_less);
  core.insert("");
  for (const auto& c : cuts)
    for (size_t k = 1; k <= c.size(); ++k) core.insert(c.substr(0, k));
  return {core.begin(), core.end()};
}

}  // namespace

bool TreeSet::is_finite() const {
  auto core = core_vertices(cuts);
  std::set<std::string> core_set(core.begin(), core.end());
  for (const auto& v : core)
    for (const auto& w : child_words(v))
      if (!core_set.count(w) && contains(w)) return false;
  return true;
}

std::vector<std::string> TreeSet::elements_finite() const {
  if (!is_finite()) throw StructuralError("elements_finite on an infinite set");
  std::vector<std::string> out;
  for (const auto& v : core_vertices(cuts))
    if (contains(v)) out.push_back(v);
  return out;
}

long long TreeSet::size_finite() const {
  return static_cast<long long>(elements_finite().size());
}

namespace {

struct ConeScan {
  const TreeSet& s;
  std::vector<std::string> cones;
  std::vector<std::string> exceptions;

  // True iff some cut lies strictly inside cone(w).
  bool inner(const std::string& w) const {
    for (const auto& c : s.cuts)
      if (c.size() > w.size() && is_prefix(w, c)) return true;
    return false;
  }

  bool full(const std::string& w) const {
    if (!s.contains(w)) return false;
    if (!inner(w)) return true;
    for (const auto& c : child_words(w))
      if (!full(c)) return false;
    return true;
  }

  void walk(const std::string& w) {
    if (full(w)) {
      cones.push_back(w);
      return;
    }
    if (!inner(w)) return;  // constant cone, necessarily out
    if (s.contains(w)) exceptions.push_back(w);
    for (const auto& c : child_words(w)) walk(c);
  }
};

}  // namespace

void TreeSet::canonical_presentation(std::vector<std::string>& cones,
                                     std::vector<std::string>& exceptions) const {
  ConeScan scan{*this, {}, {}};
  scan.walk("");
  sort_words(scan.cones);
  sort_words(scan.exceptions);
  cones = std::move(scan.cones);
  exceptions = std::move(scan.exceptions);
}

std::string TreeSet::to_string() const {
  std::vector<std::string> cones, exc;
  canonical_presentation(cones, exc);
  if (cones.empty() && exc.empty()) return "{}";
  std::string out;
  for (const auto& c : cones) {
    if (!out.empty()) out += "+";
    out += c.empty() ? "all" : "cone(" + c + ")";
  }
  if (!exc.empty()) {
    out += cones.empty() ? "{" : "~{";
    for (size_t i = 0; i < exc.size(); ++i) {
      if (i) out += ",";
      out += exc[i].empty() ? "e" : exc[i];
    }
    out += "}";
  }
  return out;
}

}  // namespace minicube
