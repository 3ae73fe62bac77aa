#include "minicube/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "minicube/cubecomplex.hpp"
#include "minicube/instance.hpp"
#include "minicube/minimal.hpp"
#include "minicube/window.hpp"

namespace minicube {

namespace {

using nlohmann::ordered_json;

constexpr std::size_t kBallCap = 2500;
constexpr std::size_t kVertexCap = 5000;

std::string stab_text(const StabilizerSpec& s) {
  switch (s.kind) {
    case StabilizerSpec::Kind::trivial: return "trivial";
    case StabilizerSpec::Kind::cyclic_x: return "cyclic x";
    case StabilizerSpec::Kind::cyclic_y: return "cyclic y";
  }
  return "?";
}

ordered_json window_json(int radius, int margin) {
  ordered_json j;
  j["radius"] = radius;
  j["margin"] = margin;
  return j;
}

struct Census {
  long long equal = 0, nested = 0, semi = 0, crossing = 0, double_small = 0;
  long long pairs = 0;
};

Census pair_census(const Window& w) {
  Census c;
  int n = w.n_pairs();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      PairRelation r = classify_pair(w.pairs[i].set, w.pairs[i].stab, w.pairs[j].set,
                                     w.pairs[j].stab);
      ++c.pairs;
      switch (r.kind) {
        case RelationKind::equal: ++c.equal; break;
        case RelationKind::nested: ++c.nested; break;
        case RelationKind::semi_nested: ++c.semi; break;
        case RelationKind::crossing: ++c.crossing; break;
        case RelationKind::double_small_violation: ++c.double_small; break;
      }
    }
  return c;
}

int usage_error(std::ostream& err, const std::string& what) {
  err << "error: " << what << "\n";
  return 2;
}

// Pulls every representative into good position, recording the edits; the
// instance is modified in place.
std::vector<std::pair<std::string, std::string>> repair_family(Instance& inst, int reach,
                                                               int budget) {
  std::vector<std::pair<std::string, std::string>> edits;
  for (auto& s : inst.sets) {
    RepairOutcome r = repair_good_position(s.set, s.stab, reach, budget);
    if (r.changed) edits.emplace_back(s.name, canonical_name(r.repaired));
    s.set = r.repaired;
  }
  return edits;
}

int run_validate(const RunConfig& cfg, const Instance& inst, int radius, int margin,
                 std::ostream& out, std::ostream& err) {
  if (cfg.format == "dot") return usage_error(err, "validate has no dot output");
  if (cfg.format == "json") {
    out << emit_instance(inst);
    return 0;
  }
  out << "backend: " << backend_name(inst.backend) << "\n";
  out << "window: radius " << radius << ", margin " << margin << "\n";
  for (const auto& s : inst.sets)
    out << s.name << " = " << canonical_name(s.set) << " (stabilizer " << stab_text(s.stab)
        << ")\n";
  out << "valid\n";
  return 0;
}

int run_relations(const RunConfig& cfg, const Instance& inst, int radius, int margin,
                  std::ostream& out, std::ostream& err) {
  if (cfg.format == "dot") return usage_error(err, "relations has no dot output");
  Window w = build_window(inst, radius, margin, kBallCap);
  Census c = pair_census(w);
  bool good = w.violations.empty();

  if (cfg.format == "json") {
    ordered_json j;
    j["check"] = "pair-census";
    j["window"] = window_json(radius, margin);
    j["pairs"] = w.n_pairs();
    ordered_json census;
    census["equal"] = c.equal;
    census["nested"] = c.nested;
    census["semi_nested"] = c.semi;
    census["crossing"] = c.crossing;
    census["double_small"] = c.double_small;
    j["census"] = census;
    j["good_position"] = good;
    j["witnesses"] = ordered_json::array();
    for (const auto& v : w.violations)
      j["witnesses"].push_back(w.element_name(2 * v.pair_i) + " vs " +
                               w.element_name(2 * v.pair_j));
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "window: radius " << radius << ", margin " << margin << ", " << w.n_pairs()
      << " pairs\n";
  out << "census over " << c.pairs << " unordered pairs: equal " << c.equal << ", nested "
      << c.nested << ", semi-nested " << c.semi << ", crossing " << c.crossing
      << ", double-small " << c.double_small << "\n";
  out << "good position: " << (good ? "yes" : "no") << "\n";
  for (const auto& v : w.violations)
    out << "  double-small: " << w.element_name(2 * v.pair_i) << " vs "
        << w.element_name(2 * v.pair_j) << "\n";
  return 0;
}

int run_repair(const RunConfig& cfg, Instance inst, int radius, int margin, std::ostream& out,
               std::ostream& err) {
  if (cfg.format == "dot") return usage_error(err, "repair has no dot output");
  int reach = radius + margin;

  struct SetOutcome {
    std::string name, before, after;
    bool changed;
    int examined;
  };
  std::vector<SetOutcome> outcomes;
  for (auto& s : inst.sets) {
    std::string before = canonical_name(s.set);
    RepairOutcome r = repair_good_position(s.set, s.stab, reach, cfg.budget);
    outcomes.push_back({s.name, before, canonical_name(r.repaired), r.changed, r.examined});
    s.set = r.repaired;
  }

  struct VgOutcome {
    std::string name, descriptor;
    bool fitted, dichotomy, monotone;
    std::size_t members;
  };
  std::vector<VgOutcome> vg;
  bool verdict = true;
  if (cfg.very_good) {
    Window w = build_window(inst, radius, margin, kBallCap);
    if (!w.almost_order) return usage_error(err, "Condition (*) fails even after repair");
    Cubings cb = build_cubings(w, cfg.policy == "all" ? ChoicePolicy::all : ChoicePolicy::lex,
                               64, cfg.cap_pairs, kVertexCap);
    GroupElement e = identity(inst.backend);
    const BasicVertex* we = nullptr;
    for (const auto& b : cb.minimal->basics)
      if (b.g == e) we = &b;
    if (!we) return usage_error(err, "no basic vertex at the identity");
    for (const auto& s : inst.sets) {
      TransformResult t = very_good_position_transform(s.set, s.stab, w, we->choice);
      vg.push_back({s.name, t.fitted ? canonical_name(*t.fitted) : "", t.fitted.has_value(),
                    t.dichotomy, t.monotone, t.members.size()});
      verdict = verdict && t.dichotomy && t.monotone;
    }
  }

  if (cfg.format == "json") {
    ordered_json j;
    j["check"] = cfg.very_good ? "very-good-position" : "good-position";
    j["window"] = window_json(radius, margin);
    j["sets"] = ordered_json::array();
    for (const auto& o : outcomes) {
      ordered_json s;
      s["name"] = o.name;
      s["before"] = o.before;
      s["after"] = o.after;
      s["changed"] = o.changed;
      s["examined"] = o.examined;
      j["sets"].push_back(std::move(s));
    }
    if (cfg.very_good) {
      j["transforms"] = ordered_json::array();
      for (const auto& o : vg) {
        ordered_json s;
        s["name"] = o.name;
        if (o.fitted)
          s["descriptor"] = o.descriptor;
        else
          s["members"] = o.members;
        s["dichotomy"] = o.dichotomy;
        s["monotone"] = o.monotone;
        j["transforms"].push_back(std::move(s));
      }
    }
    j["verdict"] = verdict ? "pass" : "fail";
    out << j.dump(2) << "\n";
    return verdict ? 0 : 1;
  }
  for (const auto& o : outcomes)
    out << o.name << ": " << o.before << " -> " << o.after << " ("
        << (o.changed ? "changed" : "unchanged") << ", examined " << o.examined << ")\n";
  for (const auto& o : vg) {
    out << o.name << " at the identity vertex: ";
    if (o.fitted)
      out << "Z = " << o.descriptor;
    else
      out << "Z = ball list, " << o.members << " members";
    out << " (dichotomy " << (o.dichotomy ? "pass" : "fail") << ", monotone "
        << (o.monotone ? "pass" : "fail") << ")\n";
  }
  return verdict ? 0 : 1;
}

int run_cubing(const RunConfig& cfg, Instance inst, int radius, int margin, std::ostream& out,
               std::ostream& err) {
  bool almost = cfg.order == "almost";
  Window w = build_window(inst, radius, margin, kBallCap);

  std::vector<std::pair<std::string, std::string>> edits;
  if (almost && !w.almost_order) {
    if (!cfg.repair) {
      err << "Condition (*) fails; run repair\n";
      return 2;
    }
    edits = repair_family(inst, radius + margin, cfg.budget);
    w = build_window(inst, radius, margin, kBallCap);
    if (!w.almost_order) return usage_error(err, "Condition (*) fails even after repair");
  }

  Cubings cb = build_cubings(w, cfg.policy == "all" ? ChoicePolicy::all : ChoicePolicy::lex, 64,
                             cfg.cap_pairs, kVertexCap);
  const Cubing& cub = almost ? *cb.minimal : cb.inclusion;
  const CubeComplex& cx = cub.complex;
  MedianReport med = check_median(cx, cub.principal);
  auto counts = cx.cube_counts(cub.principal);
  long long squares = counts.size() > 2 ? counts[2] : 0;
  int dim = cx.dim_in_component(cub.principal);

  if (cfg.format == "dot") {
    DotOptions opt;
    opt.hyperplane_colors = true;
    opt.comp = cub.principal;
    out << export_dot(cx, opt);
    return med.ok ? 0 : 1;
  }
  if (cfg.format == "json") {
    ordered_json j;
    j["check"] = "cubing";
    j["order"] = cfg.order;
    j["window"] = window_json(radius, margin);
    j["pairs"] = w.n_pairs();
    if (almost) j["containment_radius"] = w.bound_r;
    if (!edits.empty()) {
      j["repaired"] = ordered_json::array();
      for (const auto& [name, to] : edits) {
        ordered_json s;
        s["name"] = name;
        s["to"] = to;
        j["repaired"].push_back(std::move(s));
      }
    }
    j["vertices"] = cx.n_vertices;
    j["edges"] = cx.edges.size();
    j["squares"] = squares;
    j["dimension"] = dim;
    j["components"] = cx.n_components;
    j["basic_vertices"] = cub.basics.size();
    j["median"] = med.ok ? "pass" : "fail";
    j["verdict"] = med.ok ? "pass" : "fail";
    out << j.dump(2) << "\n";
    return med.ok ? 0 : 1;
  }
  out << "order: " << cfg.order << "\n";
  out << "window: radius " << radius << ", margin " << margin << ", " << w.n_pairs()
      << " pairs\n";
  for (const auto& [name, to] : edits) out << "repaired: " << name << " -> " << to << "\n";
  if (almost) out << "containment radius: " << w.bound_r << "\n";
  out << "vertices " << cx.n_vertices << ", edges " << cx.edges.size() << ", squares "
      << squares << ", dimension " << dim << ", components " << cx.n_components << "\n";
  out << "basic vertices: " << cub.basics.size() << "\n";
  out << "median: " << (med.ok ? "pass" : "fail") << "\n";
  return med.ok ? 0 : 1;
}

int run_compare(const RunConfig& cfg, Instance inst, int radius, int margin, std::ostream& out,
                std::ostream& err) {
  Window w = build_window(inst, radius, margin, kBallCap);
  std::vector<std::pair<std::string, std::string>> edits;
  if (!w.almost_order) {
    if (!cfg.repair) {
      err << "Condition (*) fails; run repair\n";
      return 2;
    }
    edits = repair_family(inst, radius + margin, cfg.budget);
    w = build_window(inst, radius, margin, kBallCap);
    if (!w.almost_order) return usage_error(err, "Condition (*) fails even after repair");
  }

  Cubings cb = build_cubings(w, cfg.policy == "all" ? ChoicePolicy::all : ChoicePolicy::lex, 64,
                             cfg.cap_pairs, kVertexCap);
  const CubeComplex& C = cb.inclusion.complex;
  const CubeComplex& L = cb.minimal->complex;
  EmbeddingReport er = verify_embedding(cb.inclusion, *cb.minimal);
  bool identical = C.vertices == L.vertices;

  std::string summary;
  if (!er.ok())
    summary = "embedding failed: " +
              (er.counterexample.empty() ? "distances diverge" : er.counterexample);
  else if (identical)
    summary = "L = C, isometric";
  else
    summary = "L embeds isometrically into C (" + std::to_string(L.n_vertices) + " of " +
              std::to_string(C.n_vertices) + " vertices)";

  if (cfg.format == "dot") {
    DotOptions opt;
    opt.overlay = embedded_overlay(cb.inclusion, *cb.minimal);
    out << export_dot(C, opt);
    return er.ok() ? 0 : 1;
  }
  if (cfg.format == "json") {
    ordered_json j;
    j["check"] = "embedding";
    j["window"] = window_json(radius, margin);
    j["pairs"] = w.n_pairs();
    if (!edits.empty()) {
      j["repaired"] = ordered_json::array();
      for (const auto& [name, to] : edits) {
        ordered_json s;
        s["name"] = name;
        s["to"] = to;
        j["repaired"].push_back(std::move(s));
      }
    }
    ordered_json amb;
    amb["vertices"] = C.n_vertices;
    amb["edges"] = C.edges.size();
    j["ambient"] = amb;
    ordered_json inn;
    inn["vertices"] = L.n_vertices;
    inn["edges"] = L.edges.size();
    j["inner"] = inn;
    j["identical"] = identical;
    j["mode"] = er.mode;
    j["pairs_checked"] = er.pairs_checked;
    j["summary"] = summary;
    j["verdict"] = er.ok() ? "pass" : "fail";
    j["witnesses"] = ordered_json::array();
    for (const auto& m : er.mismatches)
      j["witnesses"].push_back("d_L(" + std::to_string(m.u) + "," + std::to_string(m.v) +
                               ")=" + std::to_string(m.d_inner) + " but d_C=" +
                               std::to_string(m.d_ambient));
    out << j.dump(2) << "\n";
    return er.ok() ? 0 : 1;
  }
  out << "window: radius " << radius << ", margin " << margin << ", " << w.n_pairs()
      << " pairs\n";
  for (const auto& [name, to] : edits) out << "repaired: " << name << " -> " << to << "\n";
  out << "C: " << C.n_vertices << " vertices, " << C.edges.size() << " edges; L: "
      << L.n_vertices << " vertices, " << L.edges.size() << " edges\n";
  out << "distance check: " << er.mode << ", " << er.pairs_checked << " pairs\n";
  out << summary << "\n";
  return er.ok() ? 0 : 1;
}

int run_analyze(const RunConfig& cfg, const Instance& inst, int radius, int margin,
                std::ostream& out, std::ostream& err) {
  if (cfg.format == "dot") return usage_error(err, "analyze has no dot output");
  int reach = radius + margin;
  constexpr int kScanRadius = 4;

  StarReport star = check_condition_star(inst.sets, reach);
  FamilySymmetryReport fam = analyze_family_symmetries(inst.sets, kScanRadius);
  StReport st = st_generators(inst.sets, kScanRadius);
  bool s_subset_t = true;
  for (const auto& sw : st.s) {
    bool found = false;
    for (const auto& tw : st.t)
      found = found || (sw.g == tw.g && sw.i == tw.i && sw.j == tw.j);
    s_subset_t = s_subset_t && found;
  }
  bool s_equals_t = st.s.size() == st.t.size() && s_subset_t;

  struct OrderRow {
    std::string name, verdict, shift, witness;
  };
  std::vector<OrderRow> census;
  long long obstructed = 0;
  if (cfg.orders) {
    if (inst.backend != Backend::dihedral)
      return usage_error(err, "the order census needs the dihedral backend");
    auto base = ray_form(inst.sets[0].set.z);
    if (!base) return usage_error(err, "the order census needs a ray descriptor");
    // a translation by d has length 2|d|, so the shift search must reach
    // twice the census span to cover every candidate
    constexpr int kOrderSpan = 3;
    for (char side : {'L', 'R'})
      for (long long t = base->threshold - kOrderSpan; t <= base->threshold + kOrderSpan; ++t) {
        if (side == base->side && t == base->threshold) continue;
        RayForm f{side, t, {}};
        AISet z;
        z.set = ExactSet::of_z(Backend::dihedral, zset_of_ray_form(f));
        z.name = "Z";
        OrderIsoReport r = verify_order_isomorphism({inst.sets[0]}, {z}, 2 * kOrderSpan);
        OrderRow row;
        row.name = canonical_name(z.set);
        if (r.verdict.empty()) {
          row.verdict = "gated";
          row.witness = r.witness;
        } else {
          row.verdict = r.verdict;
          if (r.verdict == "isomorphic-after-shift") row.shift = r.shifts[0].to_string();
          if (r.verdict == "obstructed") ++obstructed;
        }
        census.push_back(std::move(row));
      }
  }

  if (cfg.format == "json") {
    ordered_json j;
    j["check"] = "symmetry-and-witness-scan";
    j["window"] = window_json(radius, margin);
    j["good_position"] = star.ok();
    j["scan_radius"] = kScanRadius;
    j["sets"] = ordered_json::array();
    for (std::size_t i = 0; i < inst.sets.size(); ++i) {
      const SymmetryReport& sr = fam.per_set[i];
      ordered_json s;
      s["name"] = inst.sets[i].name;
      s["descriptor"] = canonical_name(inst.sets[i].set);
      s["stabilizer"] = sr.stabilizer.size();
      s["inverters"] = sr.inverters.size();
      s["equivalent_translates"] = sr.k0.size();
      s["complement_translates"] = sr.k_minus_k0.size();
      j["sets"].push_back(std::move(s));
    }
    j["parallel_orbit_pairs"] = fam.parallel.size();
    j["s_witnesses"] = st.s.size();
    j["t_witnesses"] = st.t.size();
    j["s_subset_t"] = s_subset_t;
    j["s_equals_t"] = s_equals_t;
    if (cfg.orders) {
      j["order_census"] = ordered_json::array();
      for (const auto& row : census) {
        ordered_json r;
        r["candidate"] = row.name;
        r["verdict"] = row.verdict;
        if (!row.shift.empty()) r["shift"] = row.shift;
        if (!row.witness.empty()) r["witness"] = row.witness;
        j["order_census"].push_back(std::move(r));
      }
      j["obstructed"] = obstructed;
    }
    j["verdict"] = s_subset_t ? "pass" : "fail";
    out << j.dump(2) << "\n";
    return s_subset_t ? 0 : 1;
  }
  out << "good position at radius " << reach << ": " << (star.ok() ? "yes" : "no") << "\n";
  for (std::size_t i = 0; i < inst.sets.size(); ++i) {
    const SymmetryReport& sr = fam.per_set[i];
    out << inst.sets[i].name << " = " << canonical_name(inst.sets[i].set) << ": stabilizer "
        << sr.stabilizer.size() << ", inverters " << sr.inverters.size()
        << ", equivalent translates " << sr.k0.size() << ", complement translates "
        << sr.k_minus_k0.size() << "\n";
  }
  out << "parallel orbit pairs: " << fam.parallel.size() << "\n";
  out << "S witnesses " << st.s.size() << ", T witnesses " << st.t.size() << " at radius "
      << kScanRadius << "; S " << (s_equals_t ? "=" : (s_subset_t ? "<" : "!<")) << " T\n";
  if (cfg.orders) {
    out << "order census against shifted rays:\n";
    for (const auto& row : census) {
      out << "  " << row.name << ": " << row.verdict;
      if (!row.shift.empty()) out << " (shift " << row.shift << ")";
      if (!row.witness.empty()) out << " (" << row.witness << ")";
      out << "\n";
    }
    out << "obstructed: " << obstructed << " of " << census.size() << "\n";
  }
  return s_subset_t ? 0 : 1;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    Instance inst = load_instance(cfg.instance_path);
    int radius = cfg.radius > 0 ? cfg.radius : inst.radius;
    int margin = cfg.margin >= 0 ? cfg.margin : inst.margin;

    if (cfg.subcommand == "validate")
      return run_validate(cfg, inst, radius, margin, out, err);
    if (cfg.subcommand == "relations")
      return run_relations(cfg, inst, radius, margin, out, err);
    if (cfg.subcommand == "repair")
      return run_repair(cfg, std::move(inst), radius, margin, out, err);
    if (cfg.subcommand == "cubing")
      return run_cubing(cfg, std::move(inst), radius, margin, out, err);
    if (cfg.subcommand == "compare")
      return run_compare(cfg, std::move(inst), radius, margin, out, err);
    if (cfg.subcommand == "analyze")
      return run_analyze(cfg, inst, radius, margin, out, err);
    return usage_error(err, "unknown subcommand " + cfg.subcommand);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (const char* cap = std::getenv("MINICUBE_CAP_PAIRS")) {
    int v = std::atoi(cap);
    if (v > 0) cfg.cap_pairs = v;
  }

  CLI::App app{"cubings from families of almost invariant sets over finite windows"};
  app.require_subcommand(1);

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("instance", cfg.instance_path, "instance file")->required();
    sub->add_option("-R,--radius", cfg.radius, "window radius (default: from the instance)");
    sub->add_option("-D,--margin", cfg.margin, "window margin (default: from the instance)");
    sub->add_option("-f,--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json", "dot"}));
  };

  add_common(app.add_subcommand("validate", "check the file and echo the canonical form"));
  add_common(app.add_subcommand("relations", "classify all window pairs"));

  CLI::App* rep = app.add_subcommand("repair", "move representatives into good position");
  add_common(rep);
  rep->add_option("--budget", cfg.budget, "candidate budget per set");
  rep->add_flag("--very-good", cfg.very_good, "also transform at the identity vertex");
  rep->add_option("--policy", cfg.policy, "completion branch policy")
      ->check(CLI::IsMember({"lex", "all"}));

  CLI::App* cub = app.add_subcommand("cubing", "build the cube complex of one order");
  add_common(cub);
  cub->add_option("--order", cfg.order, "partial order to cube")
      ->check(CLI::IsMember({"inclusion", "almost"}));
  cub->add_flag("--repair", cfg.repair, "repair representatives first");
  cub->add_option("--budget", cfg.budget, "repair candidate budget");
  cub->add_option("--policy", cfg.policy, "completion branch policy")
      ->check(CLI::IsMember({"lex", "all"}));

  CLI::App* cmp = app.add_subcommand("compare", "build both cubings and verify the embedding");
  add_common(cmp);
  cmp->add_flag("--repair", cfg.repair, "repair representatives first");
  cmp->add_option("--budget", cfg.budget, "repair candidate budget");
  cmp->add_option("--policy", cfg.policy, "completion branch policy")
      ->check(CLI::IsMember({"lex", "all"}));

  CLI::App* ana = app.add_subcommand("analyze", "symmetries and witness scans");
  add_common(ana);
  ana->add_flag("--orders", cfg.orders, "census of order-isomorphism verdicts (dihedral)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  return run(cfg, out, err);
}

}  // namespace minicube
