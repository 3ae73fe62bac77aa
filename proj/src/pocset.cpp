#include "minicube/pocset.hpp"

#include <algorithm>
#include <sstream>

namespace minicube {

std::string Pocset::label(int i) const {
  if (i >= 0 && i < static_cast<int>(labels.size()) && !labels[i].empty()) return labels[i];
  return "#" + std::to_string(i);
}

namespace {

// Warshall closure over the bit rows: pivot k outermost.
void close_transitively(std::vector<Bits>& leq) {
  int n = static_cast<int>(leq.size());
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (i != k && leq[i].get(k)) leq[i].or_with(leq[k]);
}

std::string axiom_scan(const std::vector<Bits>& leq, int n, bool assume_closed) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j && leq[i].get(j) && leq[j].get(i))
        return "antisymmetry broken between " + std::to_string(i) + " and " + std::to_string(j);
      if (leq[i].get(j) && !leq[j ^ 1].get(i ^ 1))
        return "order not reversed: " + std::to_string(i) + " <= " + std::to_string(j) +
               " without " + std::to_string(j ^ 1) + " <= " + std::to_string(i ^ 1);
    }
  for (int i = 0; i < n; ++i)
    if (leq[i].get(i ^ 1))
      return "element " + std::to_string(i) + " comparable with its complement";
  if (!assume_closed)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (leq[i].get(j))
          for (int k = 0; k < n; ++k)
            if (leq[j].get(k) && !leq[i].get(k))
              return "transitivity broken: " + std::to_string(i) + " <= " + std::to_string(j) +
                     " <= " + std::to_string(k);
  return {};
}

}  // namespace

Pocset make_pocset(int m, const std::vector<std::pair<int, int>>& relations,
                   std::vector<std::string> labels) {
  if (m < 0) throw FormatError("negative pair count");
  Pocset p;
  p.m = m;
  int n = 2 * m;
  p.leq.assign(n, Bits(n));
  for (int i = 0; i < n; ++i) p.leq[i].set(i);
  for (auto [i, j] : relations) {
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw FormatError("relation element " + std::to_string(std::max(i, j)) + " out of range");
    p.leq[i].set(j);
  }
  close_transitively(p.leq);
  std::string bad = axiom_scan(p.leq, n, true);
  if (!bad.empty()) throw StructuralError("not a pocset: " + bad);
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw FormatError("label count does not match element count");
  p.labels = std::move(labels);
  return p;
}

PocsetReport validate_pocset(const RawPocset& raw) {
  PocsetReport r;
  int n = raw.n_elements;
  if (n < 0 || n % 2 != 0) {
    r.format_errors.push_back("element count must be even, got " + std::to_string(n));
    return r;
  }
  if (static_cast<int>(raw.pair_of.size()) != n) {
    r.format_errors.push_back("pairing size " + std::to_string(raw.pair_of.size()) +
                              " does not match element count " + std::to_string(n));
    return r;
  }
  for (int i = 0; i < n; ++i)
    if (raw.pair_of[i] < 0 || raw.pair_of[i] >= n) {
      r.format_errors.push_back("pairing of " + std::to_string(i) + " out of range");
      return r;
    }
  for (auto [i, j] : raw.rel)
    if (i < 0 || j < 0 || i >= n || j >= n) {
      r.format_errors.push_back("relation entry (" + std::to_string(i) + "," +
                                std::to_string(j) + ") out of range");
      return r;
    }

  for (int i = 0; i < n; ++i) {
    if (raw.pair_of[i] == i)
      r.axiom_violations.push_back("involution has fixed point at " + std::to_string(i));
    else if (raw.pair_of[raw.pair_of[i]] != i)
      r.axiom_violations.push_back("pairing is not an involution at " + std::to_string(i));
  }
  if (!r.axiom_violations.empty()) return r;

  std::vector<Bits> leq(n, Bits(n));
  for (int i = 0; i < n; ++i) leq[i].set(i);
  for (auto [i, j] : raw.rel) leq[i].set(j);
  auto star = [&](int i) { return raw.pair_of[i]; };

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!leq[i].get(j)) continue;
      if (i != j && leq[j].get(i))
        r.axiom_violations.push_back("antisymmetry broken between " + std::to_string(i) +
                                     " and " + std::to_string(j));
      if (!leq[star(j)].get(star(i)))
        r.axiom_violations.push_back("order not reversed for " + std::to_string(i) +
                                     " <= " + std::to_string(j));
      for (int k = 0; k < n; ++k)
        if (leq[j].get(k) && !leq[i].get(k))
          r.axiom_violations.push_back("transitivity broken at " + std::to_string(i) + " <= " +
                                       std::to_string(j) + " <= " + std::to_string(k));
    }
  for (int i = 0; i < n; ++i)
    if (leq[i].get(star(i)))
      r.axiom_violations.push_back("element " + std::to_string(i) +
                                   " comparable with its complement");
  return r;
}

Pocset pocset_from_raw(const RawPocset& raw, std::vector<std::string> labels) {
  PocsetReport rep = validate_pocset(raw);
  if (!rep.format_errors.empty()) throw FormatError("pocset: " + rep.format_errors.front());
  if (!rep.axiom_violations.empty())
    throw StructuralError("pocset: " + rep.axiom_violations.front());

  // Relabel an arbitrary pairing onto the xor layout, first appearance first.
  int n = raw.n_elements;
  std::vector<int> to_new(n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i)
    if (to_new[i] < 0) {
      to_new[i] = next++;
      to_new[raw.pair_of[i]] = next++;
    }
  std::vector<std::pair<int, int>> rel;
  rel.reserve(raw.rel.size());
  for (auto [i, j] : raw.rel) rel.emplace_back(to_new[i], to_new[j]);
  std::vector<std::string> new_labels;
  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != n)
      throw FormatError("label count does not match element count");
    new_labels.assign(n, {});
    for (int i = 0; i < n; ++i) new_labels[to_new[i]] = labels[i];
  }
  return make_pocset(n / 2, rel, std::move(new_labels));
}

AbstractRelation classify_abstract_pair(const Pocset& p, int a, int b) {
  int n = p.n_elements();
  if (a < 0 || b < 0 || a >= n || b >= n) throw FormatError("element index out of range");
  AbstractRelation r;
  if (a == b) {
    r.equal = true;
    return r;
  }
  for (int x : {a, a ^ 1})
    for (int y : {b, b ^ 1}) {
      if (p.le(x, y)) r.comparabilities.emplace_back(x, y);
      if (p.le(y, x)) r.comparabilities.emplace_back(y, x);
    }
  r.transverse = r.comparabilities.empty();
  return r;
}

std::vector<int> minimal_elements(const Pocset& p, const std::vector<int>& subset) {
  std::vector<int> out;
  for (int i : subset) {
    bool minimal = true;
    for (int j : subset)
      if (j != i && p.le(j, i)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(i);
  }
  return out;
}

bool is_ultrafilter(const Pocset& p, const Bits& choice) {
  auto selected = [&](int e) { return choice.get(e >> 1) == ((e & 1) != 0); };
  int n = p.n_elements();
  for (int k = 0; k < p.m; ++k) {
    int e = 2 * k + (choice.get(k) ? 1 : 0);
    const Bits& above = p.up(e);
    for (int f = 0; f < n; ++f)
      if (above.get(f) && !selected(f)) return false;
  }
  return true;
}

std::string pocset_to_text(const Pocset& p) {
  std::ostringstream out;
  out << "pairs " << p.m << "\n";
  int n = p.n_elements();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && p.le(i, j)) out << i << " " << j << "\n";
  return out.str();
}

RawPocset pocset_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string word;
  if (!(in >> word) || word != "pairs") throw FormatError("pocset text must start with 'pairs m'");
  int m = -1;
  if (!(in >> m) || m < 0) throw FormatError("bad pair count in pocset text");
  RawPocset raw;
  raw.n_elements = 2 * m;
  raw.pair_of.resize(2 * m);
  for (int i = 0; i < 2 * m; ++i) raw.pair_of[i] = i ^ 1;
  long long i, j;
  while (in >> i) {
    if (!(in >> j)) throw FormatError("dangling relation entry in pocset text");
    if (i < 0 || j < 0 || i >= 2 * m || j >= 2 * m)
      throw FormatError("relation entry out of range in pocset text");
    if (i != j) raw.rel.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  if (!in.eof()) throw FormatError("unparsable token in pocset text");
  return raw;
}

}  // namespace minicube
