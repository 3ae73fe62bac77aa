#pragma once
// Command line front end: loads an instance file, runs one stage of the
// pipeline (validate, relations, repair, cubing, compare, analyze) and
// writes a deterministic report in text, JSON or DOT form.
//
// Exit codes: 0 = success or verdict passed, 1 = a mathematical verdict
// failed, 2 = usage, format or size errors.

#include <iosfwd>
#include <string>

namespace minicube {

struct RunConfig {
  std::string subcommand;
  std::string instance_path;
  std::string order = "inclusion";  // cubing: which partial order to cube
  int radius = -1;                  // -1: keep the instance's window
  int margin = -1;
  std::string policy = "lex";  // completion branch policy: lex | all
  int budget = 512;            // repair candidate budget
  std::string format = "text";  // text | json | dot
  bool repair = false;          // cubing: repair representatives first
  bool very_good = false;       // repair: also transform at the identity vertex
  bool orders = false;          // analyze: census of shifted-order verdicts
  int cap_pairs = 28;           // vertex enumeration guard, MINICUBE_CAP_PAIRS
};

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace minicube
