#pragma once
// Instance files: a backend, a family of almost invariant sets with their
// stabilizers, and window parameters.  Parsing validates the schema, the
// descriptor invariants (reduced words, prefix-free cones, stabilizer/axis
// compatibility) and nontriviality; emission writes canonical descriptor
// forms with stable key order, so parse(emit(i)) reproduces i exactly.

#include <string>
#include <vector>

#include "minicube/backends.hpp"

namespace minicube {

struct AISet {
  ExactSet set;
  StabilizerSpec stab;
  bool trivial_ok = false;
  std::string name;  // defaults to X1, X2, ...
};

struct Instance {
  Backend backend = Backend::halfline;
  std::vector<AISet> sets;
  int radius = 3;
  int margin = 2;
};

Instance parse_instance_text(const std::string& text);
Instance load_instance(const std::string& path);
std::string emit_instance(const Instance& inst);

}  // namespace minicube
