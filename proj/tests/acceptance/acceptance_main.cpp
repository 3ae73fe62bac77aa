// Acceptance gate: nine end-to-end checks over the shipped instances, each
// with a wall-clock budget pinned below.  Prints one PASS/FAIL line per
// check and exits nonzero if any fails.  Run from the repository root so the
// instance files resolve.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "minicube/backends.hpp"
#include "minicube/cubecomplex.hpp"
#include "minicube/instance.hpp"
#include "minicube/minimal.hpp"
#include "minicube/pocset.hpp"
#include "minicube/relations.hpp"
#include "minicube/window.hpp"

using namespace minicube;

namespace {

// ---- pinned tolerances and scan sizes --------------------------------------

constexpr double kBudget[9] = {60, 120, 120, 30, 60, 60, 30, 30, 60};  // seconds

constexpr int kWindowRadius = 3;
constexpr int kWindowMargin = 2;
constexpr int kCapPairs = 1200;        // the free windows carry 970 pairs
constexpr std::size_t kCapVertices = 20000;
constexpr int kEmbeddingCutoff = 4000;  // exhaustive distance check everywhere

constexpr int kThresholdSpan = 5;   // half-line thresholds -5..5
constexpr int kExceptionSpan = 8;   // exception points -8..8
constexpr int kMaxExceptions = 3;
constexpr int kStarRadius = 6;      // good-position scan for the search space

constexpr int kRandomPocsets = 200;
constexpr int kRandomMaxPairs = 6;
constexpr std::uint64_t kRandomSeed = 0x2545F4914F6CDD1Dull;
constexpr int kLiteralPairCap = 400;   // full separating-count below this size
constexpr int kSeparatingSample = 2000;  // sampled pairs above it

constexpr int kRepairScan = kWindowRadius + kWindowMargin;
constexpr int kRepairBudget = 512;
constexpr int kWitnessRadius = 4;   // s/t scans and stabilizer witnesses
constexpr int kCornerRadius = 2;    // smallness symmetry on grid translates

const char* kInstancePaths[6] = {
    "instances/z_halfline.json",      "instances/z_bad_rep.json",
    "instances/dihedral_halfline.json", "instances/grid_cross.json",
    "instances/free_semi_nested.json",  "instances/free_crossing_pair.json"};
const int kGoodPosition[5] = {0, 2, 3, 4, 5};  // all but z_bad_rep
constexpr int kBadRep = 1;
constexpr int kGridCross = 3;
constexpr int kFreeSemi = 4;

// ---- shared lazily-built state ----------------------------------------------

struct Lab {
  std::vector<Instance> inst;
  std::vector<std::optional<Window>> win;
  std::vector<std::optional<Cubings>> cub;

  // produced by check 4 / check 5, reused by 5 and 8
  std::optional<ExactSet> repaired_ray;
  std::optional<Window> repaired_win;
  std::optional<Cubings> repaired_cub;
  std::vector<AISet> transformed;  // fitted very-good outputs: ray, then the free pair

  Lab() {
    for (const char* p : kInstancePaths) inst.push_back(load_instance(p));
    win.resize(inst.size());
    cub.resize(inst.size());
  }

  Window& window(int i) {
    if (!win[i]) win[i] = build_window(inst[i], kWindowRadius, kWindowMargin);
    return *win[i];
  }

  Cubings& cubings(int i) {
    Window& w = window(i);
    if (!cub[i]) cub[i] = build_cubings(w, ChoicePolicy::lex, 64, kCapPairs, kCapVertices);
    return *cub[i];
  }
};

struct Problems {
  std::vector<std::string> list;
  void require(bool ok, const std::string& what) {
    if (!ok) list.push_back(what);
  }
  bool ok() const { return list.empty(); }
};

const Bits& basic_choice_at(const Cubing& c, const GroupElement& g) {
  for (const auto& b : c.basics)
    if (b.g == g) return b.choice;
  throw StructuralError("no basic vertex at " + g.to_string());
}

// ---- check 1: half-line good-position characterization ----------------------

std::string check_halfline_characterization(Lab&, Problems& pr) {
  std::vector<long long> points;
  for (long long p = -kExceptionSpan; p <= kExceptionSpan; ++p) points.push_back(p);
  std::vector<std::vector<long long>> exception_sets;
  exception_sets.push_back({});
  for (std::size_t i = 0; i < points.size(); ++i) {
    exception_sets.push_back({points[i]});
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      exception_sets.push_back({points[i], points[j]});
      for (std::size_t k = j + 1; k < points.size(); ++k)
        exception_sets.push_back({points[i], points[j], points[k]});
    }
  }
  static_assert(kMaxExceptions == 3, "exception subsets are enumerated to size 3");

  long long scanned = 0, pure_pass = 0, decorated_fail = 0;
  for (char side : {'L', 'R'}) {
    for (long long t = -kThresholdSpan; t <= kThresholdSpan; ++t) {
      for (const auto& exc : exception_sets) {
        RayForm f{side, t, exc};
        ZSet zs = zset_of_ray_form(f);
        auto canon = ray_form(zs);
        if (!canon || !(*canon == f)) continue;  // same set under a cleaner descriptor
        ++scanned;
        std::vector<AISet> fam{{ExactSet::of_z(Backend::halfline, zs), StabilizerSpec{}, false, "X"}};
        bool star = check_condition_star(fam, kStarRadius).ok();
        if (star != exc.empty()) {
          pr.require(false, canonical_name(fam[0].set) + ": star " + (star ? "holds" : "fails") +
                                " but the exception list is " + (exc.empty() ? "empty" : "not empty"));
          continue;
        }
        if (exc.empty()) ++pure_pass; else ++decorated_fail;
      }
    }
  }
  pr.require(pure_pass == 2 * (2 * kThresholdSpan + 1),
             "expected every pure ray to pass, got " + std::to_string(pure_pass));
  pr.require(decorated_fail == scanned - pure_pass, "decorated descriptor accounting is off");
  return std::to_string(scanned) + " canonical descriptors: the " + std::to_string(pure_pass) +
         " exception-free rays pass, all " + std::to_string(decorated_fail) + " decorated ones fail";
}

// ---- check 2: pocset and cubing engine --------------------------------------

struct Rng {
  std::uint64_t s;
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

void check_one_complex(const std::string& tag, const Pocset& p, Problems& pr,
                       long long& pairs_checked, long long& components_checked) {
  CubeComplex c = build_complex(p, kCapPairs, kCapVertices);
  std::vector<std::vector<int>> comp_vertices(c.n_components);
  for (int v = 0; v < c.n_vertices; ++v) comp_vertices[c.component[v]].push_back(v);

  for (int comp = 0; comp < c.n_components; ++comp) {
    const auto& vids = comp_vertices[comp];
    ++components_checked;

    MedianReport mr = check_median(c, comp);
    pr.require(mr.ok, tag + " component " + std::to_string(comp) + ": median check failed: " +
                          mr.counterexample);

    auto hps = hyperplanes(c, comp);
    std::set<int> hp_labels;
    for (const auto& h : hps) {
      pr.require(!h.side0.empty() && !h.side1.empty(),
                 tag + ": hyperplane " + std::to_string(h.label) + " has an empty side");
      pr.require(h.side0.size() + h.side1.size() == vids.size(),
                 tag + ": hyperplane " + std::to_string(h.label) + " sides do not cover the component");
      pr.require(hp_labels.insert(h.label).second,
                 tag + ": two hyperplanes share label " + std::to_string(h.label));
      bool bit0 = c.vertices[h.side0.front()].get(h.label);
      for (int v : h.side0)
        pr.require(c.vertices[v].get(h.label) == bit0, tag + ": side0 mixes choices");
      for (int v : h.side1)
        pr.require(c.vertices[v].get(h.label) != bit0, tag + ": side1 mixes choices");
    }
    // a label owns a hyperplane here exactly when its bit varies over the component
    std::set<int> varying;
    for (int k = 0; k < c.m; ++k) {
      bool first = c.vertices[vids.front()].get(k);
      for (int v : vids)
        if (c.vertices[v].get(k) != first) {
          varying.insert(k);
          break;
        }
    }
    pr.require(varying == hp_labels, tag + ": hyperplane labels differ from the varying pairs");
    if (!pr.ok()) return;

    // distance = differing-pair count, every pair in the component; given the
    // side checks above, each differing pair contributes exactly one
    // separating hyperplane, so the third count agrees symbolically.  Small
    // components recount it literally off the side lists; large ones recount
    // a deterministic sample.
    std::vector<std::vector<char>> in0;
    bool literal_all = vids.size() <= kLiteralPairCap;
    in0.assign(hps.size(), std::vector<char>(c.n_vertices, 0));
    for (std::size_t h = 0; h < hps.size(); ++h)
      for (int v : hps[h].side0) in0[h][v] = 1;
    auto separating = [&](int u, int v) {
      long long n = 0;
      for (std::size_t h = 0; h < hps.size(); ++h)
        if (in0[h][u] != in0[h][v]) ++n;
      return n;
    };
    for (std::size_t a = 0; a < vids.size(); ++a) {
      std::vector<int> dist = bfs_distances(c, vids[a]);
      for (std::size_t b = a + 1; b < vids.size(); ++b) {
        int u = vids[a], v = vids[b];
        int ham = c.vertices[u].hamming(c.vertices[v]);
        ++pairs_checked;
        if (dist[v] != ham) {
          pr.require(false, tag + ": distance " + std::to_string(dist[v]) + " != differing pairs " +
                                std::to_string(ham));
          return;
        }
        if (literal_all && separating(u, v) != ham) {
          pr.require(false, tag + ": separating hyperplanes disagree with differing pairs");
          return;
        }
      }
    }
    if (!literal_all) {
      Rng sample{kRandomSeed ^ 0xABCDEFull};
      for (int t = 0; t < kSeparatingSample; ++t) {
        int u = vids[sample.below(static_cast<int>(vids.size()))];
        int v = vids[sample.below(static_cast<int>(vids.size()))];
        if (u == v) continue;
        pr.require(separating(u, v) == c.vertices[u].hamming(c.vertices[v]),
                   tag + ": sampled separating count disagrees");
      }
    }
  }
}

std::string check_pocset_engine(Lab& lab, Problems& pr) {
  std::vector<std::pair<std::string, const Pocset*>> pocs;
  for (int i = 0; i < 6; ++i) {
    Window& w = lab.window(i);
    pocs.push_back({std::string(kInstancePaths[i]) + " inclusion", &w.incl_order});
    if (w.almost_order) pocs.push_back({std::string(kInstancePaths[i]) + " almost", &*w.almost_order});
  }

  std::vector<Pocset> randoms;
  Rng rng{kRandomSeed};
  int attempts = 0;
  while (static_cast<int>(randoms.size()) < kRandomPocsets && attempts < 10000) {
    ++attempts;
    int m = 1 + rng.below(kRandomMaxPairs);
    int n_rel = rng.below(2 * m + 1);
    std::vector<std::pair<int, int>> rels;
    for (int r = 0; r < n_rel; ++r) {
      int i = rng.below(2 * m), j = rng.below(2 * m);
      if (j == i || j == (i ^ 1)) continue;
      rels.push_back({i, j});
      rels.push_back({j ^ 1, i ^ 1});
    }
    try {
      randoms.push_back(make_pocset(m, rels));
    } catch (const StructuralError&) {
    }
  }
  pr.require(static_cast<int>(randoms.size()) == kRandomPocsets,
             "random pocset generation fell short at " + std::to_string(randoms.size()));
  for (std::size_t i = 0; i < randoms.size(); ++i)
    pocs.push_back({"random pocset " + std::to_string(i), &randoms[i]});

  long long pairs_checked = 0, components_checked = 0;
  for (const auto& [tag, p] : pocs) {
    check_one_complex(tag, *p, pr, pairs_checked, components_checked);
    if (!pr.ok()) break;
  }
  return std::to_string(pocs.size()) + " pocsets (" + std::to_string(pocs.size() - randoms.size()) +
         " window orders + " + std::to_string(randoms.size()) + " random), " +
         std::to_string(components_checked) + " components, " + std::to_string(pairs_checked) +
         " vertex pairs with distance = differing pairs = separating hyperplanes";
}

// ---- check 3: the minimal cubing embeds -------------------------------------

std::string check_embedding(Lab& lab, Problems& pr) {
  long long uf_checked = 0, pairs_checked = 0;
  int semi_L = 0, semi_C = 0;
  for (int i : kGoodPosition) {
    Window& w = lab.window(i);
    Cubings& cb = lab.cubings(i);
    pr.require(cb.minimal.has_value(), std::string(kInstancePaths[i]) + ": no minimal cubing");
    if (!cb.minimal) continue;

    for (const Bits& choice : cb.minimal->complex.vertices) {
      ++uf_checked;
      if (!is_ultrafilter(w.incl_order, choice)) {
        pr.require(false, std::string(kInstancePaths[i]) +
                              ": an almost-inclusion ultrafilter fails plain inclusion");
        break;
      }
    }
    auto overlay = embedded_overlay(cb.inclusion, *cb.minimal);
    pr.require(static_cast<int>(overlay.size()) == cb.minimal->complex.n_vertices,
               std::string(kInstancePaths[i]) + ": some minimal vertex is missing from the full complex");

    EmbeddingReport er = verify_embedding(cb.inclusion, *cb.minimal, kEmbeddingCutoff);
    pr.require(er.mode == "exhaustive", std::string(kInstancePaths[i]) + ": embedding check not exhaustive");
    pr.require(er.ok(), std::string(kInstancePaths[i]) + ": embedding failed: " + er.counterexample);
    pairs_checked += er.pairs_checked;
    if (i == kFreeSemi) {
      semi_L = er.vertices_inner;
      semi_C = er.vertices_ambient;
      pr.require(semi_L < semi_C,
                 "the two-orbit free instance should embed strictly, got equal vertex counts");
    }
  }
  return std::to_string(uf_checked) + " minimal ultrafilters all pass plain inclusion; distances agree on " +
         std::to_string(pairs_checked) + " pairs; strict on the semi-nested free family (" +
         std::to_string(semi_L) + " < " + std::to_string(semi_C) + ")";
}

// ---- check 4: the complex depends on the representative ----------------------

std::string check_representative_dependence(Lab& lab, Problems& pr) {
  Cubings& bad = lab.cubings(kBadRep);
  pr.require(!bad.minimal.has_value(), "the bad ray should not carry an almost order");
  auto counts = bad.inclusion.complex.cube_counts(bad.inclusion.principal);
  long long squares = counts.size() > 2 ? counts[2] : 0;
  pr.require(squares >= 1, "the bad ray's complex should hold a square");
  int dim_bad = bad.inclusion.complex.dim_in_component(bad.inclusion.principal);

  const AISet& s = lab.inst[kBadRep].sets.front();
  RepairOutcome ro = repair_good_position(s.set, s.stab, kRepairScan, kRepairBudget);
  pr.require(ro.changed, "repair left the bad representative unchanged");

  Instance fixed = lab.inst[kBadRep];
  fixed.sets.front().set = ro.repaired;
  lab.repaired_win = build_window(fixed, kWindowRadius, kWindowMargin);
  pr.require(lab.repaired_win->almost_order.has_value(), "the repaired ray is still out of good position");
  lab.repaired_cub = build_cubings(*lab.repaired_win, ChoicePolicy::lex, 64, kCapPairs, kCapVertices);
  pr.require(lab.repaired_cub->minimal.has_value(), "no minimal cubing after repair");
  if (!pr.ok()) return "";
  lab.repaired_ray = ro.repaired;

  int dim_min = lab.repaired_cub->minimal->complex.dim_in_component(lab.repaired_cub->minimal->principal);
  int dim_incl = lab.repaired_cub->inclusion.complex.dim_in_component(lab.repaired_cub->inclusion.principal);
  pr.require(dim_min == 1, "repaired minimal cubing has dimension " + std::to_string(dim_min));
  pr.require(dim_incl == 1, "repaired full complex has dimension " + std::to_string(dim_incl));
  pr.require(lab.repaired_cub->minimal->complex.n_vertices == lab.repaired_cub->inclusion.complex.n_vertices,
             "the repaired ray's two complexes should coincide");
  return "bad descriptor " + canonical_name(s.set) + ": " + std::to_string(squares) +
         " squares, dimension " + std::to_string(dim_bad) + "; repaired " + canonical_name(ro.repaired) +
         ": a path, dimension 1";
}

// ---- check 5: the transform reaches very good position ----------------------

std::string check_very_good_position(Lab& lab, Problems& pr) {
  pr.require(lab.repaired_ray.has_value(), "repair results missing (check 4 did not complete)");
  if (!lab.repaired_ray) return "";

  // the repaired ray, straightened at its identity basic vertex
  const Bits& zc = basic_choice_at(*lab.repaired_cub->minimal, identity(Backend::halfline));
  TransformResult tz =
      very_good_position_transform(*lab.repaired_ray, StabilizerSpec{}, *lab.repaired_win, zc);
  pr.require(tz.fitted.has_value(), "no descriptor fitted on the ray");
  pr.require(tz.dichotomy && tz.monotone, "the ray transform failed its own verification");
  if (tz.fitted) {
    auto rf = ray_form(tz.fitted->z);
    pr.require(rf.has_value() && rf->exceptions.empty(),
               "the fitted ray descriptor is not a pure half-line: " + canonical_name(*tz.fitted));
    Instance zi{Backend::halfline, {{*tz.fitted, StabilizerSpec{}, false, "Z"}}, kWindowRadius, kWindowMargin};
    Window zo = build_window(zi, kWindowRadius, kWindowMargin);
    pr.require(zo.violations.empty() && zo.semi_pairs.empty(),
               "the straightened ray window still holds non-nested non-crossing pairs");
  }

  // both orbits of the semi-nested free family at their common basic vertex
  Window& wf = lab.window(kFreeSemi);
  Cubings& cf = lab.cubings(kFreeSemi);
  const Bits& fc = basic_choice_at(*cf.minimal, identity(Backend::free_group));
  std::vector<TransformResult> ts;
  for (const AISet& s : lab.inst[kFreeSemi].sets) {
    TransformResult t = very_good_position_transform(s.set, s.stab, wf, fc);
    pr.require(t.fitted.has_value(), s.name + ": no descriptor fitted");
    pr.require(t.dichotomy && t.monotone, s.name + ": transform failed its own verification");
    ts.push_back(std::move(t));
  }
  if (pr.ok()) {
    Instance fi{Backend::free_group,
                {{*ts[0].fitted, StabilizerSpec{}, false, "Z1"}, {*ts[1].fitted, StabilizerSpec{}, false, "Z2"}},
                kWindowRadius,
                kWindowMargin};
    Window fo = build_window(fi, kWindowRadius, kWindowMargin);
    pr.require(fo.violations.empty(), "transformed free family still violates good position");
    pr.require(fo.semi_pairs.empty(), "transformed free family still holds semi-nested pairs (" +
                                          std::to_string(fo.semi_pairs.size()) + ")");
    lab.transformed.push_back({*tz.fitted, StabilizerSpec{}, false, "Z"});
    lab.transformed.push_back({*ts[0].fitted, StabilizerSpec{}, false, "Z1"});
    lab.transformed.push_back({*ts[1].fitted, StabilizerSpec{}, false, "Z2"});
    return "ray output " + canonical_name(*tz.fitted) + " is a pure half-line; free outputs " +
           std::to_string(free_form(ts[0].fitted->tree).cones.size()) + " and " +
           std::to_string(free_form(ts[1].fitted->tree).cones.size()) +
           " cones: both windows carry nested and crossing pairs only";
  }
  return "";
}

// ---- check 6: basic vertices ------------------------------------------------

bool coboundary_meets_ball_by_edges(const ExactSet& s, const GroupElement& g, int r) {
  for (const auto& u : ball(s.backend, r)) {
    GroupElement x = g_mul(g, u);
    bool inside = s.contains(x);
    for (const auto& gen : generators(s.backend))
      if (s.contains(g_mul(x, gen)) != inside) return true;
  }
  return false;
}

std::string check_basic_vertices(Lab& lab, Problems& pr) {
  long long branches = 0, centers = 0, kept_bits = 0;
  for (int i = 0; i < 6; ++i) {
    Window& w = lab.window(i);
    Cubings& cb = lab.cubings(i);  // fills bound_r when the almost order is present
    std::string tag = kInstancePaths[i];

    if (!w.almost_order) {
      // no almost order: the basics are the membership vertices themselves
      for (const auto& b : cb.inclusion.basics) {
        ++branches;
        pr.require(is_ultrafilter(w.incl_order, b.choice), tag + ": membership vertex not an ultrafilter");
        int vi = cb.inclusion.complex.vertex_index(b.choice);
        pr.require(vi >= 0 && cb.inclusion.complex.component[vi] == cb.inclusion.principal,
                   tag + ": membership vertex outside the principal component");
      }
      centers += static_cast<long long>(cb.inclusion.basics.size());
      continue;
    }

    CompletionResult cr = basic_vertices(w, ChoicePolicy::all, 64);
    pr.require(!cr.truncated, tag + ": branch exploration truncated");

    // one cut-region row per center, verified against a direct edge scan
    std::map<std::string, std::vector<char>> cut;
    for (const auto& b : cr.branches) {
      auto [it, fresh] = cut.try_emplace(b.g.to_string());
      if (fresh) {
        ++centers;
        it->second.resize(w.n_pairs());
        for (int k = 0; k < w.n_pairs(); ++k) {
          bool lib = coboundary_meets_ball(w.pairs[k].set, b.g, w.bound_r);
          bool scan = coboundary_meets_ball_by_edges(w.pairs[k].set, b.g, w.bound_r);
          pr.require(lib == scan, tag + ": coboundary test disagrees with the edge scan at " +
                                      b.g.to_string() + " pair " + std::to_string(k));
          it->second[k] = lib ? 1 : 0;
        }
      }
      if (!pr.ok()) break;

      ++branches;
      pr.require(is_ultrafilter(*w.almost_order, b.choice),
                 tag + ": branch at " + b.g.to_string() + " fails the almost-inclusion conditions");
      pr.require(is_ultrafilter(w.incl_order, b.choice),
                 tag + ": branch at " + b.g.to_string() + " fails the inclusion conditions");
      for (int k = 0; k < w.n_pairs(); ++k) {
        if (it->second[k]) continue;
        ++kept_bits;
        bool member = w.pairs[k].set.contains(b.g);
        pr.require(b.choice.get(k) == !member,
                   tag + ": branch at " + b.g.to_string() + " flips kept membership on pair " +
                       std::to_string(k));
      }
      int vi = cb.minimal->complex.vertex_index(b.choice);
      pr.require(vi >= 0 && cb.minimal->complex.component[vi] == cb.minimal->principal,
                 tag + ": branch at " + b.g.to_string() + " lands outside the principal component");
    }
    if (!pr.ok()) break;
  }
  return std::to_string(branches) + " branches over " + std::to_string(centers) +
         " centers: ultrafilter both ways, " + std::to_string(kept_bits) +
         " membership bits kept off the cut, all in the principal component";
}

// ---- check 7: crossing over a cyclic stabilizer ------------------------------

std::string check_crossing(Lab& lab, Problems& pr) {
  const AISet& A = lab.inst[kGridCross].sets[0];
  const AISet& B = lab.inst[kGridCross].sets[1];
  PairRelation rel = classify_pair(A.set, A.stab, B.set, B.stab);
  pr.require(rel.kind == RelationKind::crossing,
             "the half-plane pair classifies as " + relation_kind_name(rel.kind));

  Cubings& cb = lab.cubings(kGridCross);
  pr.require(cb.minimal.has_value(), "no minimal cubing over the grid");
  if (!cb.minimal) return "";
  pr.require(cb.minimal->complex.n_vertices == cb.inclusion.complex.n_vertices,
             "the two grid complexes differ");
  auto counts = cb.minimal->complex.cube_counts(cb.minimal->principal);
  long long squares = counts.size() > 2 ? counts[2] : 0;
  pr.require(squares >= 1, "the crossing complex holds no square");

  long long corners = 0;
  auto translates = distinct_translates(lab.inst[kGridCross].sets, kCornerRadius);
  for (std::size_t a = 0; a < translates.size(); ++a)
    for (std::size_t b = a + 1; b < translates.size(); ++b)
      for (bool ap : {true, false})
        for (bool bp : {true, false}) {
          ExactSet c = corner(translates[a].set, translates[b].set, ap, bp);
          ++corners;
          if (is_small(c, translates[a].stab) != is_small(c, translates[b].stab)) {
            pr.require(false, "smallness differs between the two stabilizers on a corner of " +
                                  canonical_name(translates[a].set) + " vs " +
                                  canonical_name(translates[b].set));
            return "";
          }
        }
  return "half-planes cross; one complex, " + std::to_string(squares) + " squares; smallness agrees on " +
         std::to_string(corners) + " corners across " + std::to_string(translates.size()) + " translates";
}

// ---- check 8: the two witness scans -----------------------------------------

bool witness_in(const StWitness& x, const std::vector<StWitness>& ys) {
  for (const auto& y : ys)
    if (x.g == y.g && x.i == y.i && x.j == y.j) return true;
  return false;
}

std::string check_witness_scans(Lab& lab, Problems& pr) {
  long long s_total = 0, t_total = 0;
  for (int i = 0; i < 6; ++i) {
    StReport r = st_generators(lab.inst[i].sets, kWitnessRadius);
    s_total += static_cast<long long>(r.s.size());
    t_total += static_cast<long long>(r.t.size());
    for (const auto& wtn : r.s)
      pr.require(witness_in(wtn, r.t), std::string(kInstancePaths[i]) +
                                           ": a crossing witness is missing from the wider scan");
  }

  pr.require(lab.transformed.size() == 3, "very-good outputs missing (check 5 did not complete)");
  long long vg_witnesses = 0;
  if (lab.transformed.size() == 3) {
    std::vector<std::vector<AISet>> families{{lab.transformed[0]},
                                             {lab.transformed[1], lab.transformed[2]}};
    for (const auto& fam : families) {
      StReport r = st_generators(fam, kWitnessRadius);
      pr.require(r.s.size() == r.t.size(),
                 "a transformed family separates the two scans: " + std::to_string(r.s.size()) + " vs " +
                     std::to_string(r.t.size()));
      for (const auto& wtn : r.s)
        pr.require(witness_in(wtn, r.t), "scan mismatch on a transformed family");
      vg_witnesses += static_cast<long long>(r.t.size());
    }
  }
  return "containment on all six instances (" + std::to_string(s_total) + " of " +
         std::to_string(t_total) + " witnesses); the scans coincide on both transformed families (" +
         std::to_string(vg_witnesses) + " witnesses)";
}

// ---- check 9: equivalent rays share their ball stabilizers -------------------

std::string check_ball_stabilizers(Lab&, Problems& pr) {
  std::vector<ExactSet> rays;
  for (char side : {'L', 'R'})
    for (long long t = -kThresholdSpan; t <= kThresholdSpan; ++t)
      rays.push_back(ExactSet::of_z(Backend::halfline, zset_of_ray_form({side, t, {}})));

  long long equivalent_pairs = 0;
  for (std::size_t a = 0; a < rays.size(); ++a)
    for (std::size_t b = a + 1; b < rays.size(); ++b) {
      if (!equivalent(rays[a], StabilizerSpec{}, rays[b])) continue;
      ++equivalent_pairs;
      auto sa = analyze_symmetries(rays[a], StabilizerSpec{}, kWitnessRadius).stabilizer;
      auto sb = analyze_symmetries(rays[b], StabilizerSpec{}, kWitnessRadius).stabilizer;
      if (!(sa == sb)) {
        pr.require(false, "stabilizer witnesses differ between " + canonical_name(rays[a]) + " and " +
                              canonical_name(rays[b]));
        return "";
      }
    }
  long long span = 2 * kThresholdSpan + 1;
  pr.require(equivalent_pairs == span * (span - 1),  // both sides, all threshold pairs
             "expected every same-side ray pair to be equivalent, found " +
                 std::to_string(equivalent_pairs));
  return std::to_string(equivalent_pairs) + " equivalent ray pairs share identical radius-" +
         std::to_string(kWitnessRadius) + " stabilizer witnesses";
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    std::function<std::string(Lab&, Problems&)> run;
  };
  const Entry entries[9] = {
      {"half-line good-position characterization", check_halfline_characterization},
      {"pocset and cubing engine", check_pocset_engine},
      {"minimal cubing embeds in the full complex", check_embedding},
      {"the complex depends on the representative", check_representative_dependence},
      {"transform reaches very good position", check_very_good_position},
      {"basic vertices", check_basic_vertices},
      {"crossing over a cyclic stabilizer", check_crossing},
      {"crossing scan inside the wider scan", check_witness_scans},
      {"equivalent rays share ball stabilizers", check_ball_stabilizers},
  };

  std::optional<Lab> lab;
  try {
    lab.emplace();
  } catch (const std::exception& e) {
    std::printf("acceptance: cannot load the shipped instances: %s\n", e.what());
    return 1;
  }
  int passed = 0;
  double total = 0;
  for (int i = 0; i < 9; ++i) {
    Problems pr;
    std::string evidence;
    auto t0 = std::chrono::steady_clock::now();
    try {
      evidence = entries[i].run(*lab, pr);
    } catch (const std::exception& e) {
      pr.require(false, std::string("exception: ") + e.what());
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    total += elapsed;
    if (elapsed >= kBudget[i])
      pr.require(false, "took " + std::to_string(elapsed) + "s, budget " +
                            std::to_string(kBudget[i]) + "s");
    if (pr.ok()) {
      ++passed;
      std::printf("[%d] PASS %s: %s (%.1fs)\n", i + 1, entries[i].name, evidence.c_str(), elapsed);
    } else {
      std::printf("[%d] FAIL %s: %s (%.1fs)\n", i + 1, entries[i].name, pr.list.front().c_str(),
                  elapsed);
      for (std::size_t j = 1; j < pr.list.size() && j < 4; ++j)
        std::printf("        %s\n", pr.list[j].c_str());
    }
    std::fflush(stdout);
  }
  std::printf("acceptance: %d of 9 passed (%.1fs)\n", passed, total);
  return passed == 9 ? 0 : 1;
}
