#include "minicube/minimal.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace minicube {

namespace {

bool selects(const Bits& choice, int element) {
  return choice.get(element >> 1) == ((element & 1) != 0);
}

// raw kernel form of every window element -> element index
std::unordered_map<std::string, int> element_index(const Window& w) {
  std::unordered_map<std::string, int> out;
  out.reserve(static_cast<std::size_t>(w.n_elements()));
  for (int i = 0; i < w.n_elements(); ++i) out.emplace(w.element(i).raw_string(), i);
  return out;
}

int locate_principal(const Cubing& cub, const char* which) {
  int comp = -1;
  for (const auto& b : cub.basics) {
    int idx = cub.complex.vertex_index(b.choice);
    if (idx < 0)
      throw StructuralError(std::string("a basic vertex is missing from the ") + which +
                            " complex");
    int c = cub.complex.component[idx];
    if (comp < 0) comp = c;
    if (c != comp)
      throw StructuralError(std::string("basic vertices split across components of the ") +
                            which + " complex");
  }
  return comp < 0 ? 0 : comp;
}

}  // namespace

Cubings build_cubings(Window& w, ChoicePolicy policy, int branch_cap, int cap_pairs,
                      std::size_t cap_vertices) {
  Cubings out{{build_complex(w.incl_order, cap_pairs, cap_vertices), 0, {}}, std::nullopt};

  int m = w.n_pairs();
  for (const auto& g : ball(w.instance.backend, w.radius)) {
    Bits choice(m);
    for (int k = 0; k < m; ++k)
      if (!w.pairs[k].set.contains(g)) choice.set(k);
    out.inclusion.basics.push_back({g, choice, {}});
  }
  out.inclusion.principal = locate_principal(out.inclusion, "inclusion");

  if (!w.almost_order) return out;

  if (w.bound_r < 1) compute_bound_r(w);
  Cubing min{build_complex(*w.almost_order, cap_pairs, cap_vertices), 0, {}};
  min.basics = basic_vertices(w, policy, branch_cap).branches;
  min.principal = locate_principal(min, "minimal");
  out.minimal = std::move(min);
  return out;
}

std::vector<int> embedded_overlay(const Cubing& ambient, const Cubing& inner) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(inner.complex.n_vertices));
  for (const auto& v : inner.complex.vertices) {
    int idx = ambient.complex.vertex_index(v);
    if (idx >= 0) out.push_back(idx);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EmbeddingReport verify_embedding(const Cubing& ambient, const Cubing& inner,
                                 int exhaustive_cutoff) {
  const CubeComplex& A = ambient.complex;
  const CubeComplex& I = inner.complex;
  if (A.raw || I.raw) throw FormatError("embedding checks need pocset-built complexes");
  if (A.m != I.m) throw FormatError("embedding checks need complexes over one window");

  EmbeddingReport rep;
  rep.vertices_inner = I.n_vertices;
  rep.vertices_ambient = A.n_vertices;
  rep.dim_inner = I.dim_in_component(inner.principal);
  rep.dim_ambient = A.dim_in_component(ambient.principal);

  std::vector<int> to_ambient(I.n_vertices, -1);
  for (int i = 0; i < I.n_vertices; ++i) {
    to_ambient[i] = A.vertex_index(I.vertices[i]);
    if (to_ambient[i] < 0) {
      rep.vertices_embed = false;
      rep.counterexample = "inner vertex " + std::to_string(i) + " is not an ambient vertex";
      return rep;
    }
  }

  for (const Edge& e : I.edges) {
    int au = to_ambient[e.u], av = to_ambient[e.v];
    bool found = false;
    for (const auto& [nb, ei] : A.adj[au])
      if (nb == av) {
        found = true;
        break;
      }
    if (!found) {
      rep.edges_embed = false;
      rep.counterexample = "inner edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                           ") is not an ambient edge";
      return rep;
    }
  }

  std::vector<int> comp;
  for (int i = 0; i < I.n_vertices; ++i)
    if (I.component[i] == inner.principal) comp.push_back(i);

  auto compare_from = [&](int u) {
    std::vector<int> di = bfs_distances(I, u);
    std::vector<int> da = bfs_distances(A, to_ambient[u]);
    for (int v : comp) {
      if (v <= u) continue;
      ++rep.pairs_checked;
      if (di[v] != da[to_ambient[v]]) {
        rep.distances_match = false;
        if (rep.mismatches.size() < 64)
          rep.mismatches.push_back({u, v, di[v], da[to_ambient[v]]});
      }
    }
  };

  if (static_cast<int>(comp.size()) <= exhaustive_cutoff) {
    rep.mode = "exhaustive";
    for (int u : comp) compare_from(u);
  } else {
    rep.mode = "sampled";
    std::uint64_t seed = 0x2545F4914F6CDD1DULL;
    auto next = [&seed] {
      seed ^= seed << 13;
      seed ^= seed >> 7;
      seed ^= seed << 17;
      return seed;
    };
    std::vector<int> sources;
    std::unordered_set<int> taken;
    while (sources.size() < 64 && sources.size() < comp.size()) {
      int u = comp[next() % comp.size()];
      if (taken.insert(u).second) sources.push_back(u);
    }
    for (int u : sources) {
      // scan the full target list here: v <= u would bias a sampled source
      std::vector<int> di = bfs_distances(I, u);
      std::vector<int> da = bfs_distances(A, to_ambient[u]);
      for (int v : comp) {
        if (v == u) continue;
        ++rep.pairs_checked;
        if (di[v] != da[to_ambient[v]]) {
          rep.distances_match = false;
          if (rep.mismatches.size() < 64)
            rep.mismatches.push_back({u, v, di[v], da[to_ambient[v]]});
        }
      }
    }
  }
  return rep;
}

RecoveredSet recover_set(const Window& w, const Cubing& cub, int element, const Bits& v,
                         int ball_radius) {
  if (element < 0 || element >= w.n_elements())
    throw FormatError("recover_set: element index out of range");
  if (v.n != w.n_pairs()) throw FormatError("recover_set: vertex is over a different pair list");

  int vi = cub.complex.vertex_index(v);
  if (vi < 0 || cub.complex.component[vi] != cub.principal)
    throw FormatError("recover_set: the vertex is not in the principal component");

  // relabeling action: g.v selects A exactly when v selects g^-1.A, so the
  // positive side of A pulls back to the positive side of the translate
  auto index = element_index(w);
  ExactSet X = w.element(element);
  RecoveredSet out;
  for (const auto& g : ball(w.instance.backend, ball_radius)) {
    auto it = index.find(act(g_inv(g), X).raw_string());
    if (it == index.end()) {
      out.undefined.push_back(g);
      continue;
    }
    if (selects(v, it->second)) out.members.push_back(g);
  }
  return out;
}

namespace {

struct RepairCandidate {
  ExactSet set;
  int exceptions = 0;
  long long drift = 0;
  std::string name;
};

void push_candidate(std::vector<RepairCandidate>& out, ExactSet s, int exceptions,
                    long long drift) {
  out.push_back({std::move(s), exceptions, drift, ""});
}

// all subsets of the canonical form's exception list, capped to keep the
// search affordable
template <typename T, typename Make>
void for_exception_subsets(const std::vector<T>& exceptions, Make&& make) {
  if (exceptions.size() > 16) throw SizeError("repair: too many exceptions to search");
  for (std::uint32_t mask = 0; mask < (1u << exceptions.size()); ++mask) {
    std::vector<T> subset;
    for (std::size_t i = 0; i < exceptions.size(); ++i)
      if (mask & (1u << i)) subset.push_back(exceptions[i]);
    make(std::move(subset));
  }
}

std::vector<RepairCandidate> repair_candidates(const ExactSet& x) {
  std::vector<RepairCandidate> out;
  switch (x.backend) {
    case Backend::halfline:
    case Backend::dihedral: {
      auto f = ray_form(x.z);
      if (!f) throw FormatError("repair: the set is not a ray with finitely many exceptions");
      long long span = static_cast<long long>(f->exceptions.size()) + 2;
      for (long long t = f->threshold - span; t <= f->threshold + span; ++t)
        for_exception_subsets(f->exceptions, [&](std::vector<long long> subset) {
          int n_exc = static_cast<int>(subset.size());
          RayForm c{f->side, t, std::move(subset)};
          push_candidate(out, ExactSet::of_z(x.backend, zset_of_ray_form(c)), n_exc,
                         std::llabs(t - f->threshold));
        });
      break;
    }
    case Backend::grid: {
      auto f = grid_form(x.grid);
      if (!f)
        throw FormatError("repair: the set is not a half-plane with finitely many exceptions");
      long long span = static_cast<long long>(f->exceptions.size()) + 2;
      for (long long t = f->threshold - span; t <= f->threshold + span; ++t)
        for_exception_subsets(f->exceptions, [&](std::vector<std::pair<long long, long long>> subset) {
          int n_exc = static_cast<int>(subset.size());
          GridForm c{f->axis, f->side, t, std::move(subset)};
          push_candidate(out, ExactSet::of_grid(gridset_of_grid_form(c)), n_exc,
                         std::llabs(t - f->threshold));
        });
      break;
    }
    case Backend::free_group: {
      FreeForm f = free_form(x.tree);
      for_exception_subsets(f.exceptions, [&](std::vector<std::string> subset) {
        int n_exc = static_cast<int>(subset.size());
        FreeForm c{f.cones, std::move(subset)};
        push_candidate(out, ExactSet::of_tree(treeset_of_free_form(c)), n_exc, 0);
      });
      break;
    }
  }
  return out;
}

}  // namespace

RepairOutcome repair_good_position(const ExactSet& x, const StabilizerSpec& stab,
                                   int scan_radius, int budget) {
  if (!nontrivial(x, stab)) throw FormatError("repair needs a nontrivial descriptor");
  if (scan_radius < 1) throw FormatError("repair needs a positive scan radius");
  if (budget < 1) throw FormatError("repair needs a positive budget");

  std::vector<RepairCandidate> cands = repair_candidates(x);
  std::unordered_set<std::string> seen;
  std::vector<RepairCandidate> kept;
  for (auto& c : cands) {
    if (!nontrivial(c.set, stab)) continue;
    if (!seen.insert(c.set.raw_string()).second) continue;
    c.name = canonical_name(c.set);
    kept.push_back(std::move(c));
  }
  std::sort(kept.begin(), kept.end(), [](const RepairCandidate& a, const RepairCandidate& b) {
    if (a.exceptions != b.exceptions) return a.exceptions < b.exceptions;
    if (a.drift != b.drift) return a.drift < b.drift;
    return a.name < b.name;
  });

  RepairOutcome out{x, false, 0};
  for (const auto& c : kept) {
    if (out.examined >= budget)
      throw SizeError("repair budget exhausted without a good-position representative");
    ++out.examined;
    if (check_condition_star({{c.set, stab, false, "X"}}, scan_radius).ok()) {
      out.repaired = c.set;
      out.changed = !(c.set == x);
      return out;
    }
  }
  throw SizeError("no good-position representative among the candidate edits");
}

TransformResult very_good_position_transform(const ExactSet& y, const StabilizerSpec& stab,
                                             const Window& w, const Bits& w_choice) {
  if (y.backend != w.instance.backend)
    throw BackendMismatch("transform: representative and window disagree on the backend");
  if (w_choice.n != w.n_pairs())
    throw FormatError("transform: vertex is over a different pair list");
  int reach = w.radius + w.margin;
  if (!check_condition_star({{y, stab, false, "Y"}}, reach).ok())
    throw FormatError("transform needs a good-position representative; repair it first");

  auto index = element_index(w);
  auto window_ball = ball(w.instance.backend, reach);
  TransformResult out;
  std::unordered_map<std::string, int> status;  // g -> 1 member, 0 not, -1 undefined
  for (const auto& g : window_ball) {
    auto it = index.find(act(g_inv(g), y).raw_string());
    if (it == index.end()) {
      out.undefined.push_back(g);
      status.emplace(g.to_string(), -1);
      continue;
    }
    bool member = selects(w_choice, it->second);
    if (member) out.members.push_back(g);
    status.emplace(g.to_string(), member ? 1 : 0);
  }

  // candidate descriptors: the window's own family over the ball, then
  // plain template forms with thresholds inside the ball span
  std::vector<ExactSet> fits;
  std::unordered_set<std::string> seen;
  auto offer = [&](ExactSet s) {
    if (seen.insert(s.raw_string()).second) fits.push_back(std::move(s));
  };
  for (const auto& s : w.instance.sets)
    for (const auto& h : window_ball) {
      ExactSet t = act(h, s.set);
      offer(t.complement());
      offer(std::move(t));
    }
  switch (w.instance.backend) {
    case Backend::halfline:
    case Backend::dihedral:
      for (long long t = -(reach + 1); t <= reach + 1; ++t) {
        offer(ExactSet::of_z(w.instance.backend, zset_of_ray_form({'L', t, {}})));
        offer(ExactSet::of_z(w.instance.backend, zset_of_ray_form({'R', t, {}})));
      }
      break;
    case Backend::grid:
      for (long long t = -(reach + 1); t <= reach + 1; ++t)
        for (char axis : {'x', 'y'})
          for (char side : {'L', 'R'})
            offer(ExactSet::of_grid(gridset_of_grid_form({axis, side, t, {}})));
      break;
    case Backend::free_group:
      for (const auto& h : window_ball) {
        if (h.w.empty()) continue;
        ExactSet c = ExactSet::of_tree(TreeSet::cone(h.w));
        offer(c.complement());
        offer(std::move(c));
      }
      // cone unions read off the ball: a word whose whole defined subtree
      // sits in Z certifies a cone; maximal certified words become cones,
      // interior leftovers exceptions.  Boundary words certify nothing.
      for (int side = 0; side < 2; ++side) {
        auto in_target = [&](const GroupElement& g) {
          return (status.at(g.to_string()) == 1) == (side == 0);
        };
        auto certified = [&](const std::string& u) {
          bool witness = false;
          for (const auto& g : window_ball) {
            if (g.w.size() < u.size() || g.w.compare(0, u.size(), u) != 0) continue;
            if (status.at(g.to_string()) < 0) continue;
            if (!in_target(g)) return false;
            witness = true;
          }
          return witness;
        };
        std::vector<std::string> cones;
        for (const auto& h : window_ball) {
          if (h.w.empty() || static_cast<int>(h.w.size()) > reach - 1) continue;
          if (!certified(h.w)) continue;
          if (h.w.size() > 1 && certified(h.w.substr(0, h.w.size() - 1))) continue;
          cones.push_back(h.w);
        }
        if (cones.empty() || cones.size() > 64) continue;
        std::sort(cones.begin(), cones.end());
        ExactSet base = ExactSet::of_tree(TreeSet::of_cones_and_exceptions(cones, {}));
        std::vector<std::string> exceptions;
        bool interior = true;
        for (const auto& g : window_ball) {
          if (status.at(g.to_string()) < 0) continue;
          if (base.contains(g) == in_target(g)) continue;
          if (static_cast<int>(g.w.size()) > reach - 1 || exceptions.size() >= 16) {
            interior = false;
            break;
          }
          exceptions.push_back(g.w);
        }
        if (!interior) continue;
        std::sort(exceptions.begin(), exceptions.end());
        ExactSet cand = ExactSet::of_tree(TreeSet::of_cones_and_exceptions(cones, exceptions));
        offer(side == 0 ? std::move(cand) : cand.complement());
      }
      break;
  }
  for (const auto& cand : fits) {
    bool match = true;
    for (const auto& g : window_ball) {
      int st = status.at(g.to_string());
      if (st < 0) continue;
      if (cand.contains(g) != (st == 1)) {
        match = false;
        break;
      }
    }
    if (match) {
      out.fitted = cand;
      break;
    }
  }

  if (out.fitted) {
    auto translates = distinct_translates({{*out.fitted, stab, false, "Z"}}, reach);
    for (std::size_t i = 0; i < translates.size() && out.dichotomy; ++i)
      for (std::size_t j = i + 1; j < translates.size(); ++j) {
        auto rel = classify_pair(translates[i].set, translates[i].stab, translates[j].set,
                                 translates[j].stab);
        if (rel.kind == RelationKind::semi_nested ||
            rel.kind == RelationKind::double_small_violation) {
          out.dichotomy = false;
          out.dichotomy_witness = "translates " + translates[i].g.to_string() + "*Z and " +
                                  translates[j].g.to_string() + "*Z classify as " +
                                  relation_kind_name(rel.kind);
          break;
        }
      }
  }

  for (const auto& a : window_ball) {
    auto lq = leq(act(a, y), conjugate(a, stab), y, stab);
    if (!lq.value) continue;
    bool holds = true;
    if (out.fitted) {
      holds = act(a, *out.fitted).minus(*out.fitted).is_empty();
    } else {
      for (const auto& g : out.members) {
        GroupElement ag = g_mul(a, g);
        if (g_length(ag) > reach) continue;
        auto it = status.find(ag.to_string());
        if (it == status.end() || it->second < 0) continue;
        if (it->second != 1) {
          holds = false;
          break;
        }
      }
    }
    out.monotone_witnesses.push_back({a, holds});
    if (!holds) out.monotone = false;
  }
  return out;
}

namespace {

// The slotwise correspondence g Y_i -> g Z_i over the ball, checked for
// well-definedness on Y-side collisions and for identical order entries on
// every classified pair.  why receives the first obstruction.
bool correspondence_is_isomorphism(const std::vector<AISet>& yfam,
                                   const std::vector<ExactSet>& zsel, int ball_radius,
                                   std::string& why) {
  struct Slot {
    ExactSet y, z;
    StabilizerSpec stab;
    GroupElement g;
    int orbit;
  };
  std::vector<Slot> uni;
  std::unordered_map<std::string, std::pair<int, int>> seen;  // raw -> (slot, sign)
  for (const auto& g : ball(yfam[0].set.backend, ball_radius)) {
    for (std::size_t i = 0; i < yfam.size(); ++i) {
      ExactSet ty = act(g, yfam[i].set);
      ExactSet tz = act(g, zsel[i]);
      auto key = ty.raw_string();
      if (auto it = seen.find(key); it != seen.end()) {
        auto [slot, sign] = it->second;
        ExactSet expected = sign ? uni[slot].z.complement() : uni[slot].z;
        if (!(tz == expected)) {
          why = "the correspondence is not well defined: " + g.to_string() + "*Y" +
                std::to_string(i + 1) + " equals " + uni[slot].g.to_string() + "*Y" +
                std::to_string(uni[slot].orbit + 1) + (sign ? "^c" : "") +
                " but the right sides differ";
          return false;
        }
        continue;
      }
      int slot = static_cast<int>(uni.size());
      seen.emplace(std::move(key), std::make_pair(slot, 0));
      seen.emplace(ty.complement().raw_string(), std::make_pair(slot, 1));
      uni.push_back({std::move(ty), std::move(tz), yfam[i].stab, g, static_cast<int>(i)});
    }
  }
  for (std::size_t a = 0; a < uni.size(); ++a)
    for (std::size_t b = 0; b < uni.size(); ++b) {
      if (a == b) continue;
      auto rel_y = classify_pair(uni[a].y, uni[a].stab, uni[b].y, uni[b].stab);
      auto rel_z = classify_pair(uni[a].z, uni[a].stab, uni[b].z, uni[b].stab);
      for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v)
          if (leq_entry(rel_y, u, v) != leq_entry(rel_z, u, v)) {
            why = "order entries differ at the pair (" + uni[a].g.to_string() + "*Y" +
                  std::to_string(uni[a].orbit + 1) + ", " + uni[b].g.to_string() + "*Y" +
                  std::to_string(uni[b].orbit + 1) + ")";
            return false;
          }
    }
  return true;
}

std::vector<AISet> with_sets(const std::vector<AISet>& fam, const std::vector<ExactSet>& sets) {
  std::vector<AISet> out = fam;
  for (std::size_t i = 0; i < out.size(); ++i) out[i].set = sets[i];
  return out;
}

}  // namespace

OrderIsoReport verify_order_isomorphism(const std::vector<AISet>& yfam,
                                        const std::vector<AISet>& zfam, int ball_radius) {
  if (yfam.empty() || yfam.size() != zfam.size())
    throw FormatError("order isomorphism needs two families of equal nonzero size");
  OrderIsoReport rep;
  GroupElement e = identity(yfam[0].set.backend);
  rep.shifts.assign(yfam.size(), e);

  for (std::size_t i = 0; i < yfam.size(); ++i)
    if (!equivalent(yfam[i].set, yfam[i].stab, zfam[i].set)) {
      rep.witness = "slot " + std::to_string(i + 1) + ": the representatives are not equivalent";
      return rep;
    }
  if (!check_condition_star(yfam, ball_radius).ok()) {
    rep.witness = "the left family fails the good-position scan";
    return rep;
  }
  if (!check_condition_star(zfam, ball_radius).ok()) {
    rep.witness = "the right family fails the good-position scan";
    return rep;
  }

  rep.parallel = analyze_family_symmetries(yfam, ball_radius).parallel;
  auto pz = analyze_family_symmetries(zfam, ball_radius).parallel;
  rep.parallel.insert(rep.parallel.end(), pz.begin(), pz.end());
  if (!rep.parallel.empty()) {
    rep.witness = "parallel orbits present; the uniqueness hypothesis fails, no verdict";
    return rep;
  }

  std::vector<ExactSet> base;
  base.reserve(zfam.size());
  for (const auto& s : zfam) base.push_back(s.set);

  std::string why;
  if (correspondence_is_isomorphism(yfam, base, ball_radius, why)) {
    rep.verdict = "isomorphic";
    return rep;
  }
  rep.witness = why;

  // shifted retries: the same correspondence against h-translated
  // representatives, h over the ball by word length, uniformly first and
  // then one slot at a time
  auto shifts = ball(yfam[0].set.backend, ball_radius);
  std::stable_sort(shifts.begin(), shifts.end(),
                   [](const GroupElement& a, const GroupElement& b) {
                     return g_length(a) < g_length(b);
                   });
  auto attempt = [&](const std::vector<ExactSet>& zs,
                     const std::vector<GroupElement>& applied) {
    if (!check_condition_star(with_sets(zfam, zs), ball_radius).ok()) return false;
    std::string ignored;
    if (!correspondence_is_isomorphism(yfam, zs, ball_radius, ignored)) return false;
    rep.verdict = "isomorphic-after-shift";
    rep.shifts = applied;
    return true;
  };
  for (const auto& h : shifts) {
    if (h == e) continue;
    std::vector<ExactSet> zs;
    zs.reserve(base.size());
    for (const auto& s : base) zs.push_back(act(h, s));
    if (attempt(zs, std::vector<GroupElement>(base.size(), h))) return rep;
  }
  if (yfam.size() > 1)
    for (std::size_t slot = 0; slot < base.size(); ++slot)
      for (const auto& h : shifts) {
        if (h == e) continue;
        std::vector<ExactSet> zs = base;
        zs[slot] = act(h, base[slot]);
        std::vector<GroupElement> applied(base.size(), e);
        applied[slot] = h;
        if (attempt(zs, applied)) return rep;
      }

  rep.verdict = "obstructed";
  return rep;
}

StReport st_generators(const std::vector<AISet>& family, int ball_radius) {
  if (family.empty()) throw FormatError("the witness scan needs a nonempty family");
  StReport rep;
  rep.radius = ball_radius;
  int n = static_cast<int>(family.size());
  for (const auto& g : ball(family[0].set.backend, ball_radius))
    for (int i = 0; i < n; ++i) {
      StabilizerSpec moved = conjugate(g, family[i].stab);
      ExactSet gx = act(g, family[i].set);
      for (int j = 0; j < n; ++j) {
        auto rel = classify_pair(gx, moved, family[j].set, family[j].stab);
        if (rel.kind == RelationKind::equal || rel.kind == RelationKind::nested) continue;
        StWitness wit{g, i, j, rel.kind, moved == family[i].stab};
        rep.t.push_back(wit);
        if (rel.kind == RelationKind::crossing) rep.s.push_back(wit);
      }
    }
  return rep;
}

}  // namespace minicube
