#include "minicube/instance.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "minicube/common.hpp"

namespace minicube {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw FormatError(where + ": " + what);
}

long long get_int(const json& j, const std::string& where, const std::string& key) {
  if (!j.contains(key)) fail(where, "missing \"" + key + "\"");
  if (!j[key].is_number_integer()) fail(where, "\"" + key + "\" must be an integer");
  return j[key].get<long long>();
}

std::string get_str(const json& j, const std::string& where, const std::string& key) {
  if (!j.contains(key)) fail(where, "missing \"" + key + "\"");
  if (!j[key].is_string()) fail(where, "\"" + key + "\" must be a string");
  return j[key].get<std::string>();
}

void check_keys(const json& j, const std::string& where,
                const std::vector<std::string>& allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const auto& k : allowed) ok = ok || it.key() == k;
    if (!ok) fail(where, "unknown key \"" + it.key() + "\"");
  }
}

ExactSet parse_set(Backend backend, const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "set entry must be an object");
  switch (backend) {
    case Backend::halfline:
    case Backend::dihedral: {
      check_keys(j, where, {"side", "threshold", "exceptions", "trivial_ok", "name"});
      std::string side = get_str(j, where, "side");
      if (side != "L" && side != "R") fail(where, "\"side\" must be \"L\" or \"R\"");
      RayForm f;
      f.side = side[0];
      f.threshold = get_int(j, where, "threshold");
      if (j.contains("exceptions")) {
        if (!j["exceptions"].is_array()) fail(where, "\"exceptions\" must be an array");
        for (const auto& e : j["exceptions"]) {
          if (!e.is_number_integer()) fail(where, "exceptions must be integers");
          f.exceptions.push_back(e.get<long long>());
        }
      }
      return ExactSet::of_z(backend, zset_of_ray_form(f));
    }
    case Backend::grid: {
      check_keys(j, where, {"axis", "side", "threshold", "exceptions", "trivial_ok", "name"});
      std::string axis = get_str(j, where, "axis");
      if (axis != "x" && axis != "y") fail(where, "\"axis\" must be \"x\" or \"y\"");
      std::string side = get_str(j, where, "side");
      if (side != "L" && side != "R") fail(where, "\"side\" must be \"L\" or \"R\"");
      GridForm f;
      f.axis = axis[0];
      f.side = side[0];
      f.threshold = get_int(j, where, "threshold");
      if (j.contains("exceptions")) {
        if (!j["exceptions"].is_array()) fail(where, "\"exceptions\" must be an array");
        for (const auto& e : j["exceptions"]) {
          if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
              !e[1].is_number_integer())
            fail(where, "grid exceptions must be [x,y] integer pairs");
          f.exceptions.emplace_back(e[0].get<long long>(), e[1].get<long long>());
        }
      }
      return ExactSet::of_grid(gridset_of_grid_form(f));
    }
    case Backend::free_group: {
      check_keys(j, where, {"cones", "exceptions", "trivial_ok", "name"});
      FreeForm f;
      if (j.contains("cones")) {
        if (!j["cones"].is_array()) fail(where, "\"cones\" must be an array");
        for (const auto& c : j["cones"]) {
          if (!c.is_string()) fail(where, "cones must be words");
          f.cones.push_back(c.get<std::string>());
        }
      }
      if (j.contains("exceptions")) {
        if (!j["exceptions"].is_array()) fail(where, "\"exceptions\" must be an array");
        for (const auto& e : j["exceptions"]) {
          if (!e.is_string()) fail(where, "exceptions must be words");
          f.exceptions.push_back(e.get<std::string>());
        }
      }
      for (const auto& w : f.cones)
        if (!f2::is_reduced(w)) fail(where, "cone \"" + w + "\" is not a reduced word");
      for (const auto& w : f.exceptions)
        if (!f2::is_reduced(w)) fail(where, "exception \"" + w + "\" is not a reduced word");
      for (size_t i = 0; i < f.cones.size(); ++i)
        for (size_t k = 0; k < f.cones.size(); ++k)
          if (i != k && f.cones[k].size() <= f.cones[i].size() &&
              f.cones[i].compare(0, f.cones[k].size(), f.cones[k]) == 0)
            fail(where, "cones are not prefix-free (\"" + f.cones[k] + "\" prefixes \"" +
                            f.cones[i] + "\")");
      return ExactSet::of_tree(treeset_of_free_form(f));
    }
  }
  fail(where, "unreachable");
}

StabilizerSpec parse_stab(const json& j, const std::string& where) {
  StabilizerSpec s;
  if (j.is_string()) {
    if (j.get<std::string>() == "trivial") return s;
    fail(where, "stabilizer string must be \"trivial\"");
  }
  if (!j.is_object()) fail(where, "stabilizer must be \"trivial\" or an object");
  check_keys(j, where, {"type", "axis"});
  std::string type = get_str(j, where, "type");
  if (type == "trivial") return s;
  if (type != "cyclic") fail(where, "stabilizer type must be \"trivial\" or \"cyclic\"");
  std::string axis = get_str(j, where, "axis");
  if (axis == "x")
    s.kind = StabilizerSpec::Kind::cyclic_x;
  else if (axis == "y")
    s.kind = StabilizerSpec::Kind::cyclic_y;
  else
    fail(where, "\"axis\" must be \"x\" or \"y\"");
  return s;
}

}  // namespace

Instance parse_instance_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("JSON parse error: ") + e.what());
  }
  if (!j.is_object()) throw FormatError("instance: top level must be an object");
  check_keys(j, "instance", {"backend", "sets", "stabilizers", "window"});

  Instance inst;
  inst.backend = backend_from_name(get_str(j, "instance", "backend"));

  if (!j.contains("sets") || !j["sets"].is_array() || j["sets"].empty())
    throw FormatError("instance: \"sets\" must be a nonempty array");
  size_t n = j["sets"].size();

  std::vector<StabilizerSpec> stabs(n);
  if (j.contains("stabilizers")) {
    if (!j["stabilizers"].is_array() || j["stabilizers"].size() != n)
      throw FormatError("instance: \"stabilizers\" must match \"sets\" in length");
    for (size_t i = 0; i < n; ++i)
      stabs[i] = parse_stab(j["stabilizers"][i], "stabilizers[" + std::to_string(i) + "]");
  }

  for (size_t i = 0; i < n; ++i) {
    std::string where = "sets[" + std::to_string(i) + "]";
    const json& sj = j["sets"][i];
    AISet s;
    s.set = parse_set(inst.backend, sj, where);
    s.stab = stabs[i];
    if (sj.contains("trivial_ok")) {
      if (!sj["trivial_ok"].is_boolean()) fail(where, "\"trivial_ok\" must be a boolean");
      s.trivial_ok = sj["trivial_ok"].get<bool>();
    }
    s.name = sj.contains("name") ? get_str(sj, where, "name") : "X" + std::to_string(i + 1);

    if (inst.backend == Backend::grid) {
      auto f = grid_form(s.set.grid);
      if (s.stab.kind == StabilizerSpec::Kind::trivial)
        fail(where, "grid sets need a cyclic stabilizer");
      if (f) {
        char stab_axis = s.stab.kind == StabilizerSpec::Kind::cyclic_x ? 'x' : 'y';
        if (stab_axis == f->axis)
          fail(where, "stabilizer axis must be orthogonal to the set's axis");
      }
    } else if (s.stab.kind != StabilizerSpec::Kind::trivial) {
      fail(where, "only grid sets carry a cyclic stabilizer");
    }

    if (!s.trivial_ok && !nontrivial(s.set, s.stab))
      fail(where, "set " + s.name +
                      " or its complement is small; mark \"trivial_ok\" only in negative tests");
    inst.sets.push_back(std::move(s));
  }

  if (j.contains("window")) {
    const json& w = j["window"];
    if (!w.is_object()) throw FormatError("instance: \"window\" must be an object");
    check_keys(w, "window", {"radius", "margin"});
    if (w.contains("radius")) inst.radius = static_cast<int>(get_int(w, "window", "radius"));
    if (w.contains("margin")) inst.margin = static_cast<int>(get_int(w, "window", "margin"));
  }
  if (inst.radius < 1) throw FormatError("instance: radius must be at least 1");
  if (inst.margin < 0) throw FormatError("instance: margin must be nonnegative");
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw FormatError("cannot read instance file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  try {
    return parse_instance_text(ss.str());
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

std::string emit_instance(const Instance& inst) {
  ordered_json j;
  j["backend"] = backend_name(inst.backend);
  j["sets"] = ordered_json::array();
  j["stabilizers"] = ordered_json::array();
  for (const auto& s : inst.sets) {
    ordered_json sj;
    switch (inst.backend) {
      case Backend::halfline:
      case Backend::dihedral: {
        auto f = ray_form(s.set.z);
        if (!f) throw StructuralError("set " + s.name + " has no descriptor form");
        sj["side"] = std::string(1, f->side);
        sj["threshold"] = f->threshold;
        sj["exceptions"] = f->exceptions;
        break;
      }
      case Backend::grid: {
        auto f = grid_form(s.set.grid);
        if (!f) throw StructuralError("set " + s.name + " has no descriptor form");
        sj["axis"] = std::string(1, f->axis);
        sj["side"] = std::string(1, f->side);
        sj["threshold"] = f->threshold;
        sj["exceptions"] = ordered_json::array();
        for (const auto& [x, y] : f->exceptions)
          sj["exceptions"].push_back(ordered_json::array({x, y}));
        break;
      }
      case Backend::free_group: {
        FreeForm f = free_form(s.set.tree);
        sj["cones"] = f.cones;
        sj["exceptions"] = f.exceptions;
        break;
      }
    }
    if (s.trivial_ok) sj["trivial_ok"] = true;
    sj["name"] = s.name;
    j["sets"].push_back(std::move(sj));

    if (s.stab.kind == StabilizerSpec::Kind::trivial) {
      j["stabilizers"].push_back("trivial");
    } else {
      ordered_json st;
      st["type"] = "cyclic";
      st["axis"] = s.stab.kind == StabilizerSpec::Kind::cyclic_x ? "x" : "y";
      j["stabilizers"].push_back(std::move(st));
    }
  }
  j["window"] = ordered_json{{"radius", inst.radius}, {"margin", inst.margin}};
  return j.dump(2) + "\n";
}

}  // namespace minicube
