#include "minicube/relations.hpp"

#include <unordered_set>

namespace minicube {

std::string relation_kind_name(RelationKind k) {
  switch (k) {
    case RelationKind::equal: return "equal";
    case RelationKind::nested: return "nested";
    case RelationKind::semi_nested: return "semi_nested";
    case RelationKind::crossing: return "crossing";
    case RelationKind::double_small_violation: return "double_small_violation";
  }
  return "?";
}

std::string nest_direction_name(NestDirection d) {
  switch (d) {
    case NestDirection::none: return "";
    case NestDirection::a_below_b: return "A<=B";
    case NestDirection::b_below_a: return "B<=A";
    case NestDirection::a_below_comp_b: return "A<=B*";
    case NestDirection::comp_a_below_b: return "A*<=B";
  }
  return "";
}

int PairRelation::small_count() const {
  int n = 0;
  for (const auto& c : corners) n += c.small ? 1 : 0;
  return n;
}

std::vector<CornerStatus> PairRelation::small_corners() const {
  std::vector<CornerStatus> out;
  for (const auto& c : corners)
    if (c.small) out.push_back(c);
  return out;
}

bool PairRelation::leq_ab() const {
  const CornerStatus& c = corners[1];  // A n B*
  return c.empty || (c.small && small_count() == 1);
}

bool PairRelation::leq_ba() const {
  const CornerStatus& c = corners[2];  // B n A*, same corner set read backwards
  return c.empty || (c.small && small_count() == 1);
}

bool PairRelation::incl_ab() const { return corners[1].empty; }
bool PairRelation::incl_ba() const { return corners[2].empty; }

std::array<std::string, 4> corner_pattern(const PairRelation& r) {
  std::array<std::string, 4> out;
  for (int c = 0; c < 4; ++c)
    out[c] = r.corners[c].empty ? "empty" : (r.corners[c].small ? "small" : "large");
  return out;
}

// A^a <= B^b exactly when the corner A^a ∩ (B^b)* vanishes; for almost
// inclusion the corner may instead be the unique small one.
static int entry_corner(int a_sign, int b_sign) {
  return (a_sign ? 2 : 0) + (b_sign ? 0 : 1);
}

bool leq_entry(const PairRelation& r, int a_sign, int b_sign) {
  const CornerStatus& c = r.corners[entry_corner(a_sign, b_sign)];
  return c.empty || (c.small && r.small_count() == 1);
}

bool incl_entry(const PairRelation& r, int a_sign, int b_sign) {
  return r.corners[entry_corner(a_sign, b_sign)].empty;
}

PairRelation classify_pair(const ExactSet& A, const StabilizerSpec& a_stab, const ExactSet& B,
                           const StabilizerSpec& b_stab) {
  if (A.backend != B.backend) throw BackendMismatch("classifying a pair across backends");
  if (!nontrivial(A, a_stab)) throw FormatError("classify_pair: left descriptor is trivial");
  if (!nontrivial(B, b_stab)) throw FormatError("classify_pair: right descriptor is trivial");

  PairRelation r;
  static constexpr bool kSigns[4][2] = {{true, true}, {true, false}, {false, true}, {false, false}};
  for (int c = 0; c < 4; ++c) {
    ExactSet cc = corner(A, B, kSigns[c][0], kSigns[c][1]);
    CornerStatus s;
    s.a_plus = kSigns[c][0];
    s.b_plus = kSigns[c][1];
    s.empty = cc.is_empty();
    s.small = is_small(cc, a_stab);
    r.corners[c] = s;
  }

  // Direction by corner index: the empty or uniquely small corner A n B*
  // means A <= B, and so on around the square.
  static constexpr NestDirection kDir[4] = {NestDirection::a_below_comp_b,
                                            NestDirection::a_below_b, NestDirection::b_below_a,
                                            NestDirection::comp_a_below_b};
  static constexpr int kScan[4] = {1, 2, 0, 3};  // mixed corners first

  if (r.corners[1].empty && r.corners[2].empty) {
    r.kind = RelationKind::equal;
    return r;
  }
  for (int idx : kScan)
    if (r.corners[idx].empty) {
      r.kind = RelationKind::nested;
      r.direction = kDir[idx];
      return r;
    }
  int small_n = r.small_count();
  if (small_n >= 2) {
    r.kind = RelationKind::double_small_violation;
  } else if (small_n == 1) {
    r.kind = RelationKind::semi_nested;
    for (int idx : kScan)
      if (r.corners[idx].small) r.direction = kDir[idx];
  } else {
    r.kind = RelationKind::crossing;
  }
  return r;
}

LeqResult leq(const ExactSet& A, const StabilizerSpec& a_stab, const ExactSet& B,
              const StabilizerSpec& b_stab) {
  PairRelation r = classify_pair(A, a_stab, B, b_stab);
  return LeqResult{r.leq_ab(), r.star_violation()};
}

std::vector<Translate> distinct_translates(const std::vector<AISet>& family, int ball_radius) {
  std::vector<Translate> out;
  if (family.empty()) return out;
  std::unordered_set<std::string> seen;
  for (const auto& g : ball(family.front().set.backend, ball_radius)) {
    for (std::size_t i = 0; i < family.size(); ++i) {
      Translate t;
      t.set = act(g, family[i].set);
      if (!seen.insert(t.set.raw_string()).second) continue;
      t.stab = conjugate(g, family[i].stab);
      t.g = g;
      t.orbit = static_cast<int>(i);
      out.push_back(std::move(t));
    }
  }
  return out;
}

StarReport check_condition_star(const std::vector<AISet>& family, int ball_radius) {
  StarReport rep;
  rep.radius = ball_radius;
  std::vector<Translate> ts = distinct_translates(family, ball_radius);
  rep.translates = static_cast<int>(ts.size());
  for (std::size_t u = 0; u < ts.size(); ++u)
    for (std::size_t v = u + 1; v < ts.size(); ++v) {
      PairRelation r = classify_pair(ts[u].set, ts[u].stab, ts[v].set, ts[v].stab);
      if (r.star_violation()) rep.violations.push_back(StarViolation{ts[u], ts[v], r});
    }
  return rep;
}

OrderReport verify_partial_order(const std::vector<Bits>& leq_matrix) {
  OrderReport rep;
  rep.n = static_cast<int>(leq_matrix.size());
  for (const auto& row : leq_matrix)
    if (row.n != rep.n) throw FormatError("order matrix is not square");
  for (int i = 0; i < rep.n; ++i)
    for (int j = i + 1; j < rep.n; ++j)
      if (leq_matrix[i].get(j) && leq_matrix[j].get(i))
        rep.violations.push_back(OrderViolation{"antisymmetry", i, j, i});
  for (int i = 0; i < rep.n; ++i)
    for (int j = 0; j < rep.n; ++j) {
      if (i == j || !leq_matrix[i].get(j)) continue;
      for (int k = 0; k < rep.n; ++k)
        if (leq_matrix[j].get(k) && !leq_matrix[i].get(k))
          rep.violations.push_back(OrderViolation{"transitivity", i, j, k});
    }
  return rep;
}

SymmetryReport analyze_symmetries(const ExactSet& A, const StabilizerSpec& stab,
                                  int ball_radius) {
  SymmetryReport rep;
  rep.radius = ball_radius;
  ExactSet comp = A.complement();
  for (const auto& g : ball(A.backend, ball_radius)) {
    ExactSet gA = act(g, A);
    if (gA == A)
      rep.stabilizer.push_back(g);
    else if (gA == comp)
      rep.inverters.push_back(g);
    else if (equivalent(gA, conjugate(g, stab), A))
      rep.k0.push_back(g);
    else if (equivalent(gA, conjugate(g, stab), comp))
      rep.k_minus_k0.push_back(g);
    else
      rep.others.push_back(g);
  }
  return rep;
}

FamilySymmetryReport analyze_family_symmetries(const std::vector<AISet>& family,
                                               int ball_radius) {
  FamilySymmetryReport rep;
  rep.radius = ball_radius;
  for (const auto& s : family) rep.per_set.push_back(analyze_symmetries(s.set, s.stab, ball_radius));
  if (family.empty()) return rep;
  auto elements = ball(family.front().set.backend, ball_radius);
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      bool found_plain = false, found_comp = false;
      ExactSet comp_j = family[j].set.complement();
      for (const auto& g : elements) {
        if (found_plain && found_comp) break;
        ExactSet gi = act(g, family[i].set);
        StabilizerSpec gs = conjugate(g, family[i].stab);
        if (!found_plain && equivalent(gi, gs, family[j].set)) {
          rep.parallel.push_back(
              ParallelOrbitPair{static_cast<int>(i), static_cast<int>(j), g, false});
          found_plain = true;
        }
        if (!found_comp && equivalent(gi, gs, comp_j)) {
          rep.parallel.push_back(
              ParallelOrbitPair{static_cast<int>(i), static_cast<int>(j), g, true});
          found_comp = true;
        }
      }
    }
  return rep;
}

}  // namespace minicube
