#include "minicube/relations.hpp"

#include <cstdint>

#include "doctest.h"

using namespace minicube;

namespace {

ExactSet hl(ZSet z) { return ExactSet::of_z(Backend::halfline, std::move(z)); }

ExactSet ray(long long a) { return hl(ZSet::ray_le(a)); }

GroupElement shift(long long a) {
  GroupElement g;
  g.backend = Backend::halfline;
  g.a = a;
  return g;
}

const StabilizerSpec kTrivial{};
const StabilizerSpec kCycX{StabilizerSpec::Kind::cyclic_x};
const StabilizerSpec kCycY{StabilizerSpec::Kind::cyclic_y};

AISet ai(ExactSet s, StabilizerSpec st = {}) {
  AISet a;
  a.set = std::move(s);
  a.stab = st;
  return a;
}

struct Gen {
  std::uint64_t s = 0x2545F4914F6CDD1Dull;
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  long long pick(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

}  // namespace

TEST_CASE("nested rays and their direction") {
  PairRelation r = classify_pair(ray(0), kTrivial, ray(3), kTrivial);
  CHECK(r.kind == RelationKind::nested);
  CHECK(r.direction == NestDirection::a_below_b);
  CHECK(corner_pattern(r) == std::array<std::string, 4>{"large", "empty", "small", "large"});
  CHECK(r.small_count() == 2);  // the empty corner counts as small
  CHECK(r.leq_ab());
  CHECK(!r.leq_ba());
  CHECK(r.incl_ab());
  CHECK(!r.incl_ba());

  PairRelation back = classify_pair(ray(3), kTrivial, ray(0), kTrivial);
  CHECK(back.kind == RelationKind::nested);
  CHECK(back.direction == NestDirection::b_below_a);
  CHECK(!back.leq_ab());
  CHECK(back.leq_ba());
}

TEST_CASE("equal and complementary pairs") {
  PairRelation eq = classify_pair(ray(0), kTrivial, ray(0), kTrivial);
  CHECK(eq.kind == RelationKind::equal);
  CHECK(eq.direction == NestDirection::none);
  CHECK(eq.leq_ab());
  CHECK(eq.leq_ba());

  // L_0 against R_1 = (L_0)*: the pair is nested through the complement.
  PairRelation comp = classify_pair(ray(0), kTrivial, hl(ZSet::ray_ge(1)), kTrivial);
  CHECK(comp.kind == RelationKind::nested);
  CHECK(comp.direction == NestDirection::a_below_comp_b);
  CHECK(!comp.leq_ab());
  CHECK(!comp.leq_ba());
  CHECK(corner_pattern(comp) == std::array<std::string, 4>{"empty", "large", "large", "empty"});
}

TEST_CASE("grid quadrant pair crosses") {
  ExactSet A = ExactSet::of_grid(GridSet::y_ge(1));
  ExactSet B = ExactSet::of_grid(GridSet::x_ge(1));

  // Each corner is a quadrant; both projections of every quadrant are rays,
  // so no corner is small for either axis stabilizer.
  for (bool ap : {true, false})
    for (bool bp : {true, false}) {
      GridSet q = corner(A, B, ap, bp).grid;
      CHECK(!q.proj_x().is_finite());
      CHECK(!q.proj_y().is_finite());
    }

  PairRelation r = classify_pair(A, kCycX, B, kCycY);
  CHECK(r.kind == RelationKind::crossing);
  CHECK(corner_pattern(r) == std::array<std::string, 4>{"large", "large", "large", "large"});
  PairRelation back = classify_pair(B, kCycY, A, kCycX);
  CHECK(back.kind == RelationKind::crossing);
}

TEST_CASE("bad representative violates good position against its own shift") {
  ExactSet Y = hl(ZSet::ray_le(0).sym_diff(ZSet::point(2)));
  ExactSet Y1 = act(shift(1), Y);

  PairRelation r = classify_pair(Y, kTrivial, Y1, kTrivial);
  CHECK(r.kind == RelationKind::double_small_violation);
  CHECK(r.star_violation());
  CHECK(corner_pattern(r) == std::array<std::string, 4>{"large", "small", "small", "large"});
  CHECK(corner(Y, Y1, true, false).z == ZSet::point(2));
  CHECK(corner(Y, Y1, false, true).z == ZSet::of_points({1, 3}));

  LeqResult lr = leq(Y, kTrivial, Y1, kTrivial);
  CHECK(!lr.value);
  CHECK(lr.star_violation);

  // Shifting by two or more swallows the exception and the pair nests.
  PairRelation far = classify_pair(Y, kTrivial, act(shift(2), Y), kTrivial);
  CHECK(far.kind == RelationKind::nested);
  CHECK(far.direction == NestDirection::a_below_b);
}

TEST_CASE("almost inclusion is strictly coarser than inclusion") {
  ExactSet A = ExactSet::of_tree(TreeSet::cone("a").unite(TreeSet::point("B")));
  ExactSet B = ExactSet::of_tree(TreeSet::cone("a").unite(TreeSet::cone("b")));

  CHECK(!A.minus(B).is_empty());  // plain inclusion fails on the point b^-1
  PairRelation r = classify_pair(A, kTrivial, B, kTrivial);
  CHECK(r.kind == RelationKind::semi_nested);
  CHECK(r.direction == NestDirection::a_below_b);
  CHECK(corner(A, B, true, false).tree == TreeSet::point("B"));
  CHECK(r.leq_ab());
  CHECK(!r.leq_ba());
  CHECK(leq(A, kTrivial, B, kTrivial).value);
}

TEST_CASE("almost inclusion of rays is antisymmetric") {
  CHECK(leq(ray(0), kTrivial, ray(3), kTrivial).value);
  CHECK(!leq(ray(3), kTrivial, ray(0), kTrivial).value);

  // leq both ways forces canonical equality, over a small descriptor pool.
  std::vector<ExactSet> pool;
  for (long long t : {-2, 0, 1})
    for (long long e : {-4, 2, 3}) {
      pool.push_back(hl(ZSet::ray_le(t)));
      pool.push_back(hl(ZSet::ray_le(t).sym_diff(ZSet::point(e))));
    }
  for (const auto& a : pool)
    for (const auto& b : pool) {
      if (leq(a, kTrivial, b, kTrivial).value && leq(b, kTrivial, a, kTrivial).value)
        CHECK(a == b);
    }
}

TEST_CASE("classification rejects trivial descriptors") {
  CHECK_THROWS_AS(classify_pair(hl(ZSet::point(5)), kTrivial, ray(0), kTrivial), FormatError);
  CHECK_THROWS_AS(classify_pair(ray(0), kTrivial, hl(ZSet::all()), kTrivial), FormatError);
  CHECK_THROWS_AS(
      classify_pair(ray(0), kTrivial, ExactSet::of_grid(GridSet::x_ge(0)), kCycY),
      BackendMismatch);
}

TEST_CASE("equivalence of representatives") {
  CHECK(equivalent(ray(0), kTrivial, hl(ZSet::ray_le(0).sym_diff(ZSet::point(2)))));
  CHECK(!equivalent(ray(0), kTrivial, hl(ZSet::ray_ge(1))));
  CHECK(equivalent(ExactSet::of_grid(GridSet::y_ge(0)), kCycX,
                   ExactSet::of_grid(GridSet::y_ge(5))));
  CHECK(!equivalent(ExactSet::of_grid(GridSet::y_ge(0)), kCycY,
                    ExactSet::of_grid(GridSet::y_ge(5))));
}

TEST_CASE("good position scan over ray translates") {
  StarReport rep = check_condition_star({ai(ray(0))}, 4);
  CHECK(rep.ok());
  CHECK(rep.radius == 4);
  CHECK(rep.translates == 9);
}

TEST_CASE("good position scan flags every adjacent shift of the bad representative") {
  ExactSet Y = hl(ZSet::ray_le(0).sym_diff(ZSet::point(2)));
  StarReport rep = check_condition_star({ai(Y)}, 4);
  CHECK(!rep.ok());
  CHECK(rep.translates == 9);

  // Exactly the adjacent pairs (Y+a, Y+a+1) violate; wider shifts nest.
  CHECK(rep.violations.size() == 8);
  for (const auto& v : rep.violations) {
    CHECK(v.rel.kind == RelationKind::double_small_violation);
    CHECK(v.b.g.a - v.a.g.a == 1);
  }
  bool base_pair = false;
  for (const auto& v : rep.violations)
    base_pair |= v.a.set == Y && v.b.set == act(shift(1), Y);
  CHECK(base_pair);
}

TEST_CASE("translated cones stay in good position") {
  StarReport rep = check_condition_star({ai(ExactSet::of_tree(TreeSet::cone("a")))}, 3);
  CHECK(rep.ok());
  CHECK(rep.translates > 1);
}

TEST_CASE("order verification accepts the ray window and the free window") {
  std::vector<AISet> rays = {ai(ray(0))};
  std::vector<Translate> ts = distinct_translates(rays, 4);
  REQUIRE(ts.size() == 9);
  std::vector<Bits> m(ts.size(), Bits(static_cast<int>(ts.size())));
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = 0; j < ts.size(); ++j)
      if (leq(ts[i].set, ts[i].stab, ts[j].set, ts[j].stab).value) m[i].set(static_cast<int>(j));
  OrderReport rep = verify_partial_order(m);
  CHECK(rep.ok());
  CHECK(rep.n == 9);

  std::vector<AISet> fam = {ai(ExactSet::of_tree(TreeSet::cone("a").unite(TreeSet::point("B")))),
                            ai(ExactSet::of_tree(TreeSet::cone("a").unite(TreeSet::cone("b"))))};
  CHECK(check_condition_star(fam, 2).ok());
  std::vector<Translate> fts = distinct_translates(fam, 2);
  std::vector<Bits> fm(fts.size(), Bits(static_cast<int>(fts.size())));
  for (std::size_t i = 0; i < fts.size(); ++i)
    for (std::size_t j = 0; j < fts.size(); ++j)
      if (leq(fts[i].set, fts[i].stab, fts[j].set, fts[j].stab).value)
        fm[i].set(static_cast<int>(j));
  CHECK(verify_partial_order(fm).ok());
}

TEST_CASE("order verification names the witnessing triples") {
  // 0 <= 1 <= 2 without 0 <= 2.
  std::vector<Bits> gap(3, Bits(3));
  gap[0].set(0);
  gap[0].set(1);
  gap[1].set(1);
  gap[1].set(2);
  gap[2].set(2);
  OrderReport rep = verify_partial_order(gap);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].axiom == "transitivity");
  CHECK(rep.violations[0].i == 0);
  CHECK(rep.violations[0].j == 1);
  CHECK(rep.violations[0].k == 2);

  std::vector<Bits> cyc(2, Bits(2));
  cyc[0].set(0);
  cyc[0].set(1);
  cyc[1].set(0);
  cyc[1].set(1);
  OrderReport rep2 = verify_partial_order(cyc);
  REQUIRE(!rep2.ok());
  CHECK(rep2.violations[0].axiom == "antisymmetry");
  CHECK(rep2.violations[0].i == 0);
  CHECK(rep2.violations[0].j == 1);

  CHECK_THROWS_AS(verify_partial_order(std::vector<Bits>{Bits(2)}), FormatError);
}

TEST_CASE("classification is symmetric across the operand swap") {
  auto mirrored = [](const PairRelation& r, const PairRelation& s) {
    if (r.kind != s.kind) return false;
    // corner (x, y) of (A, B) is corner (y, x) of (B, A)
    const int swap[4] = {0, 2, 1, 3};
    for (int c = 0; c < 4; ++c) {
      if (r.corners[c].empty != s.corners[swap[c]].empty) return false;
      if (r.corners[c].small != s.corners[swap[c]].small) return false;
    }
    return true;
  };

  std::vector<std::vector<AISet>> families = {
      {ai(ExactSet::of_grid(GridSet::y_ge(1)), kCycX),
       ai(ExactSet::of_grid(GridSet::x_ge(1)), kCycY)},
      {ai(ExactSet::of_tree(TreeSet::cone("a").unite(TreeSet::point("B")))),
       ai(ExactSet::of_tree(TreeSet::cone("a").unite(TreeSet::cone("b"))))},
      {ai(hl(ZSet::ray_le(0).sym_diff(ZSet::point(2))))},
  };
  for (const auto& fam : families) {
    std::vector<Translate> ts = distinct_translates(fam, 1);
    for (const auto& u : ts)
      for (const auto& v : ts) {
        PairRelation fwd = classify_pair(u.set, u.stab, v.set, v.stab);
        PairRelation rev = classify_pair(v.set, v.stab, u.set, u.stab);
        CHECK(mirrored(fwd, rev));
        CHECK(fwd.leq_ab() == rev.leq_ba());
      }
  }
}

TEST_CASE("inclusion implies almost inclusion") {
  Gen gen;
  auto check_pair = [](const ExactSet& A, const StabilizerSpec& st, const ExactSet& B) {
    REQUIRE(A.minus(B).is_empty());
    for (const auto& u : ball(A.backend, 6))
      if (A.contains(u)) CHECK(B.contains(u));
    CHECK(leq(A, st, B, st).value);
  };

  for (int round = 0; round < 30; ++round) {
    ZSet za = ZSet::ray_le(gen.pick(-4, 4));
    if (gen.pick(0, 1)) za = za.sym_diff(ZSet::point(gen.pick(-6, 6)));
    ZSet extra = ZSet::point(gen.pick(-6, 6)).unite(ZSet::point(gen.pick(-6, 6)));
    if (gen.pick(0, 2) == 0) extra = extra.unite(ZSet::ray_le(gen.pick(-4, 6)));
    ZSet zb = za.unite(extra);
    if (!nontrivial(hl(za), kTrivial) || !nontrivial(hl(zb), kTrivial)) continue;
    check_pair(hl(za), kTrivial, hl(zb));
  }

  const char* words[] = {"a", "b", "aa", "ab", "aB", "ba", "bA", "Ab", "BB"};
  for (int round = 0; round < 30; ++round) {
    TreeSet ta = TreeSet::cone(words[gen.pick(0, 8)]);
    TreeSet tb = ta.unite(TreeSet::cone(words[gen.pick(0, 8)]))
                     .unite(TreeSet::point(words[gen.pick(0, 8)]));
    check_pair(ExactSet::of_tree(ta), kTrivial, ExactSet::of_tree(tb));
  }

  for (int round = 0; round < 30; ++round) {
    GridSet ga = GridSet::x_ge(gen.pick(-3, 3));
    GridSet gb = ga.unite(GridSet::x_ge(gen.pick(-3, 3)))
                     .unite(GridSet::point(gen.pick(-5, 5), gen.pick(-5, 5)));
    check_pair(ExactSet::of_grid(ga), kCycY, ExactSet::of_grid(gb));
  }
}

TEST_CASE("ray symmetries over the integers") {
  SymmetryReport rep = analyze_symmetries(ray(0), kTrivial, 3);
  CHECK(rep.radius == 3);
  REQUIRE(rep.stabilizer.size() == 1);
  CHECK(rep.stabilizer[0] == identity(Backend::halfline));
  CHECK(rep.k0.size() == 6);  // every nonzero shift moves L_0 a finite amount
  CHECK(rep.inverters.empty());
  CHECK(rep.k_minus_k0.empty());
  CHECK(rep.others.empty());
}

TEST_CASE("dihedral reflections invert the ray") {
  ExactSet L0 = ExactSet::of_z(Backend::dihedral, ZSet::ray_le(0));
  SymmetryReport rep = analyze_symmetries(L0, kTrivial, 3);

  REQUIRE(rep.inverters.size() == 1);
  CHECK(rep.inverters[0].a == 1);  // n -> 1 - n
  CHECK(rep.inverters[0].b == -1);
  REQUIRE(rep.stabilizer.size() == 1);
  CHECK(rep.stabilizer[0] == identity(Backend::dihedral));
  CHECK(rep.k0.size() == 2);          // the two ball translations
  CHECK(rep.k_minus_k0.size() == 3);  // the remaining reflections
  CHECK(rep.others.empty());
}

TEST_CASE("parallel orbits in a free family") {
  std::vector<AISet> fam = {ai(ExactSet::of_tree(TreeSet::cone("a"))),
                            ai(ExactSet::of_tree(TreeSet::cone("a").unite(TreeSet::point("B"))))};
  FamilySymmetryReport rep = analyze_family_symmetries(fam, 1);
  CHECK(rep.radius == 1);
  CHECK(rep.per_set.size() == 2);
  REQUIRE(rep.parallel.size() == 1);
  CHECK(rep.parallel[0].i == 0);
  CHECK(rep.parallel[0].j == 1);
  CHECK(rep.parallel[0].g == identity(Backend::free_group));
  CHECK(!rep.parallel[0].to_complement);

  // Orbits of nested disjoint cones are not parallel.
  std::vector<AISet> apart = {ai(ExactSet::of_tree(TreeSet::cone("a"))),
                              ai(ExactSet::of_tree(TreeSet::cone("a").unite(TreeSet::cone("b"))))};
  CHECK(analyze_family_symmetries(apart, 2).parallel.empty());
}

TEST_CASE("equivalent rays in good position share their ball stabilizer") {
  auto wit = [](const ExactSet& s) { return analyze_symmetries(s, kTrivial, 4).stabilizer; };
  ExactSet Y = ray(0), Z = ray(2);
  REQUIRE(equivalent(Y, kTrivial, Z));
  REQUIRE(check_condition_star({ai(Y)}, 4).ok());
  REQUIRE(check_condition_star({ai(Z)}, 4).ok());
  REQUIRE(analyze_symmetries(Y, kTrivial, 4).inverters.empty());
  CHECK(wit(Y) == wit(Z));
}

TEST_CASE("relation names") {
  CHECK(relation_kind_name(RelationKind::semi_nested) == "semi_nested");
  CHECK(relation_kind_name(RelationKind::double_small_violation) == "double_small_violation");
  CHECK(nest_direction_name(NestDirection::a_below_b) == "A<=B");
  CHECK(nest_direction_name(NestDirection::comp_a_below_b) == "A*<=B");
  CHECK(nest_direction_name(NestDirection::none).empty());
}
