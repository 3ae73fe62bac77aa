#include "minicube/window.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "minicube/common.hpp"

namespace minicube {

ExactSet Window::element(int e) const {
  const ExactSet& s = pairs[e >> 1].set;
  return (e & 1) ? s.complement() : s;
}

std::string Window::element_name(int e) const { return canonical_name(element(e)); }


Window build_window(const Instance& inst, int radius, int margin, std::size_t ball_cap) {
  if (radius < 0 || margin < 0) throw FormatError("window radius and margin must be nonnegative");
  for (const auto& s : inst.sets)
    if (!nontrivial(s.set, s.stab))
      throw FormatError("window construction needs a nontrivial family");

  Window w;
  w.instance = inst;
  w.radius = radius;
  w.margin = margin;

  int reach = radius + margin;
  GroupElement e = identity(inst.backend);
  // key -> (pair index, key is the complement side); rejected sets cached so
  // the coboundary test runs once per distinct translate
  std::unordered_map<std::string, std::pair<int, bool>> index;
  std::unordered_set<std::string> rejected;
  for (const auto& g : ball(inst.backend, reach, ball_cap)) {
    for (std::size_t i = 0; i < inst.sets.size(); ++i) {
      ExactSet s = act(g, inst.sets[i].set);
      std::string key = s.raw_string();
      auto hit = index.find(key);
      if (hit != index.end()) {
        w.pairs[hit->second.first].witnesses.push_back(
            {g, static_cast<int>(i), hit->second.second});
        continue;
      }
      if (rejected.count(key)) continue;
      if (!coboundary_meets_ball(s, e, reach)) {
        rejected.insert(key);
        continue;
      }
      int k = w.n_pairs();
      index.emplace(key, std::make_pair(k, false));
      index.emplace(s.complement().raw_string(), std::make_pair(k, true));
      WindowPair p;
      p.set = std::move(s);
      p.stab = inst.sets[i].stab;
      p.witnesses.push_back({g, static_cast<int>(i), false});
      w.pairs.push_back(std::move(p));
    }
  }

  int m = w.n_pairs();
  int n = 2 * m;
  std::vector<Bits> incl(n, Bits(n)), almost(n, Bits(n));
  bool star_ok = true;
  for (int k = 0; k < m; ++k) {
    for (int l = k; l < m; ++l) {
      PairRelation rel = classify_pair(w.pairs[k].set, w.pairs[k].stab, w.pairs[l].set,
                                       w.pairs[l].stab);
      if (rel.star_violation()) {
        star_ok = false;
        w.violations.push_back({k, l, rel});
      }
      if (rel.kind == RelationKind::semi_nested) {
        for (const CornerStatus& c : rel.corners)
          if (c.small && !c.empty) {
            int i = 2 * k + (c.a_plus ? 0 : 1);
            int j = 2 * l + (c.b_plus ? 1 : 0);
            w.semi_pairs.emplace_back(i, j);
            w.semi_pairs.emplace_back(j ^ 1, i ^ 1);
          }
      }
      for (int u = 0; u < 2; ++u) {
        for (int v = 0; v < 2; ++v) {
          if (leq_entry(rel, u, v)) almost[2 * k + u].set(2 * l + v);  // 2k+u <= 2l+v
          if (incl_entry(rel, u, v)) incl[2 * k + u].set(2 * l + v);
          if (k == l) continue;
          // the same classification read backwards: 2l+v <= 2k+u flips both signs
          // relative to the corner of the forward entry
          const CornerStatus& rev = rel.corners[(u ? 0 : 2) + (v ? 1 : 0)];
          if (rev.empty || (rev.small && rel.small_count() == 1))
            almost[2 * l + v].set(2 * k + u);
          if (rev.empty) incl[2 * l + v].set(2 * k + u);
        }
      }
    }
  }

  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = w.element_name(i);

  auto to_relations = [n](const std::vector<Bits>& mat) {
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && mat[i].get(j)) rel.emplace_back(i, j);
    return rel;
  };

  if (!verify_partial_order(incl).ok())
    throw StructuralError("window inclusion order fails the order axioms");
  w.incl_order = make_pocset(m, to_relations(incl), labels);

  if (star_ok) {
    if (!verify_partial_order(almost).ok())
      throw StructuralError("window almost-inclusion order fails the order axioms in good position");
    w.almost_order = make_pocset(m, to_relations(almost), labels);
  }
  return w;
}

// every group element of a finite set, certified complete by subtracting the
// collected points and checking nothing is left
std::vector<GroupElement> finite_members(const ExactSet& s, int start_radius, int cap_radius) {
  Backend be = s.backend;
  for (int r = start_radius; r <= cap_radius; r += 4) {
    std::vector<GroupElement> out;
    ExactSet left = s;
    std::unordered_set<long long> seen_values;  // dihedral: one value, two elements
    for (const auto& g : ball(be, r)) {
      if (!left.contains(g)) continue;
      if (be == Backend::dihedral) {
        if (!seen_values.insert(g.a).second) continue;
        out.push_back({be, g.a, 1, ""});
        out.push_back({be, g.a, -1, ""});
        left = left.minus(ExactSet::of_z(be, ZSet::point(g.a)));
        continue;
      }
      out.push_back(g);
      switch (be) {
        case Backend::halfline:
          left = left.minus(ExactSet::of_z(be, ZSet::point(g.a)));
          break;
        case Backend::grid:
          left = left.minus(ExactSet::of_grid(GridSet::point(g.a, g.b)));
          break;
        case Backend::free_group:
          left = left.minus(ExactSet::of_tree(TreeSet::point(g.w)));
          break;
        default:
          break;
      }
    }
    if (left.is_empty()) return out;
  }
  throw SizeError("finite corner enumeration exceeded the radius cap");
}

int distance_to_set(const GroupElement& p, const ExactSet& target, int cap_radius) {
  for (int r = 0; r <= cap_radius; ++r)
    for (const auto& u : ball(p.backend, r))
      if (target.contains(g_mul(p, u))) return r;
  throw SizeError("distance search exceeded the radius cap");
}

int compute_bound_r(Window& w) {
  if (!w.almost_order)
    throw StructuralError("containment bounds need the almost-inclusion order");
  const Pocset& p = *w.almost_order;
  int n = p.n_elements();
  Backend be = w.instance.backend;
  int reach = w.radius + w.margin;

  std::vector<ExactSet> elems;
  elems.reserve(n);
  for (int i = 0; i < n; ++i) elems.push_back(w.element(i));

  auto window_ball = ball(be, reach);
  int found = -1;
  for (int r = 1; r <= w.radius && found < 0; ++r) {
    auto probe = ball(be, r);
    bool ok = true;
    for (const auto& g : window_ball) {
      Bits in_at_g(n);
      for (int i = 0; i < n; ++i)
        if (elems[i].contains(g)) in_at_g.set(i);
      for (int i = 0; i < n && ok; ++i) {
        if (!in_at_g.get(i)) continue;
        bool deep = true;
        for (const auto& u : probe)
          if (!elems[i].contains(g_mul(g, u))) {
            deep = false;
            break;
          }
        if (!deep) continue;
        // the whole r-ball around g sits inside element i: everything above
        // i must contain g itself
        const Bits& above = p.up(i);
        for (std::size_t k = 0; k < above.w.size(); ++k)
          if (above.w[k] & ~in_at_g.w[k]) {
            ok = false;
            break;
          }
      }
      if (!ok) break;
    }
    if (ok) found = r;
  }
  if (found < 0)
    throw SizeError("window too small: no containment radius up to its own radius works");
  w.bound_r = found;

  int d = 0;
  int cap = 4 * (reach + 2) + 16;
  for (const auto& [i, j] : w.semi_pairs) {
    ExactSet corner = elems[i].minus(elems[j]);
    ExactSet target = elems[i].complement();
    for (const auto& pt : finite_members(corner, reach + 4, cap))
      d = std::max(d, distance_to_set(pt, target, cap));
  }
  w.bound_d = d;
  return found;
}

namespace {

struct Completion {
  const Window& w;
  const Pocset& p;
  std::vector<char> er;    // pair's coboundary meets the bound_r ball at g
  Bits membership;         // V_g over pairs
  GroupElement g;
  ChoicePolicy policy;
  int branch_cap;

  CompletionResult result;
  std::set<std::vector<std::uint64_t>> seen;
  int leaves = 0;

  int m() const { return w.n_pairs(); }

  bool selected(const std::vector<signed char>& pick, int e) const {
    return pick[e >> 1] == (e & 1);
  }

  void adjoin(std::vector<signed char>& pick, int e) {
    const Bits& above = p.up(e);
    for (int f = 0; f < p.n_elements(); ++f) {
      if (!above.get(f)) continue;
      int k = f >> 1;
      signed char side = static_cast<signed char>(f & 1);
      if (pick[k] < 0)
        pick[k] = side;
      else if (pick[k] != side)
        throw StructuralError("basic vertex completion hit an inconsistent up-set");
    }
  }

  void finish(const std::vector<signed char>& pick, std::vector<ChoiceStep> log) {
    Bits choice(m());
    for (int k = 0; k < m(); ++k) {
      if (pick[k] < 0) throw StructuralError("basic vertex completion left a pair undecided");
      if (pick[k]) choice.set(k);
      if (!er[k] && pick[k] != (membership.get(k) ? 1 : 0))
        throw StructuralError("basic vertex differs from membership away from the cut");
    }
    if (!is_ultrafilter(p, choice))
      throw StructuralError("basic vertex completion failed the ultrafilter conditions");
    ++leaves;
    if (seen.insert(choice.w).second) result.branches.push_back({g, choice, std::move(log)});
  }

  void explore(std::vector<signed char> pick, std::vector<ChoiceStep> log) {
    std::vector<int> open;
    for (int k = 0; k < m(); ++k)
      if (pick[k] < 0) {
        open.push_back(2 * k);
        open.push_back(2 * k + 1);
      }
    if (open.empty()) {
      finish(pick, std::move(log));
      return;
    }
    std::vector<int> cands = minimal_elements(p, open);
    std::sort(cands.begin(), cands.end(), [&](int a, int b) {
      return w.element_name(a) < w.element_name(b);
    });
    if (policy == ChoicePolicy::lex) {
      log.push_back({cands.front(), static_cast<int>(cands.size())});
      adjoin(pick, cands.front());
      explore(std::move(pick), std::move(log));
      return;
    }
    for (int c : cands) {
      if (leaves >= branch_cap) {
        result.truncated = true;
        return;
      }
      auto next_pick = pick;
      auto next_log = log;
      next_log.push_back({c, static_cast<int>(cands.size())});
      adjoin(next_pick, c);
      explore(std::move(next_pick), std::move(next_log));
    }
  }

  void run() {
    Bits v = membership;
    if (policy == ChoicePolicy::lex && is_ultrafilter(p, v)) {
      result.branches.push_back({g, v, {}});
      return;
    }
    std::vector<signed char> pick(m(), -1);
    for (int k = 0; k < m(); ++k)
      if (!er[k]) pick[k] = v.get(k) ? 1 : 0;
    Bits up_or(p.n_elements());
    for (int k = 0; k < m(); ++k)
      if (!er[k]) up_or.or_with(p.up(2 * k + pick[k]));
    for (int f = 0; f < p.n_elements(); ++f) {
      if (!up_or.get(f)) continue;
      int k = f >> 1;
      signed char side = static_cast<signed char>(f & 1);
      if (pick[k] < 0)
        pick[k] = side;
      else if (pick[k] != side)
        throw StructuralError("upward closure of the kept membership is inconsistent");
    }
    explore(std::move(pick), {});
  }
};

}  // namespace

CompletionResult complete_basic_vertex(const Window& w, const GroupElement& g,
                                       ChoicePolicy policy, int branch_cap) {
  if (!w.almost_order)
    throw FormatError("window is not in good position: no almost-inclusion order");
  if (w.bound_r < 1) throw FormatError("window needs compute_bound_r before basic vertices");
  if (g_length(g) > w.radius) throw FormatError("basic vertex center outside the window radius");
  if (branch_cap < 1) throw FormatError("branch cap must be positive");

  Completion c{w, *w.almost_order, {}, Bits(w.n_pairs()), g, policy, branch_cap, {}, {}, 0};
  c.er.resize(w.n_pairs());
  for (int k = 0; k < w.n_pairs(); ++k) {
    c.er[k] = coboundary_meets_ball(w.pairs[k].set, g, w.bound_r) ? 1 : 0;
    if (!w.pairs[k].set.contains(g)) c.membership.set(k);
  }
  c.run();
  return std::move(c.result);
}

CompletionResult basic_vertices(const Window& w, ChoicePolicy policy, int branch_cap) {
  CompletionResult all;
  for (const auto& g : ball(w.instance.backend, w.radius)) {
    CompletionResult one = complete_basic_vertex(w, g, policy, branch_cap);
    all.truncated = all.truncated || one.truncated;
    for (auto& b : one.branches) all.branches.push_back(std::move(b));
  }
  return all;
}

}  // namespace minicube
