#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "chargenus/motivic.hpp"

namespace chargenus::cli {

enum ExitCode : int { kSuccess = 0, kComputationError = 1, kUsageError = 2 };

struct GenusOptions {
  std::string expr;
  std::string series = "chi_y";
  std::optional<std::string> y_value;
  bool json = false;
};

struct ClassOptions {
  std::string expr;
  std::string variant = "normalized";
  bool json = false;
};

struct MeasureOptions {
  std::string expr;
  std::string kind = "E";
  bool json = false;
};

struct StringyOptions {
  std::string path;
  std::optional<std::string> compare;
  bool json = false;
};

/// Each command writes its result to `out` and returns an exit code. Errors
/// propagate as exceptions; run() maps them to exit codes.
int cmd_genus(const GenusOptions& o, std::ostream& out, AtomRegistry& registry);
int cmd_class(const ClassOptions& o, std::ostream& out, AtomRegistry& registry);
int cmd_measure(const MeasureOptions& o, std::ostream& out, AtomRegistry& registry);
int cmd_stringy(const StringyOptions& o, std::ostream& out);

/// Suites: ghrr, comp-twist, blowup, milnor, stringy-a1, all. Prints a JSON
/// report; returns 1 when any check fails.
int cmd_verify(const std::string& suite, std::ostream& out);
const std::vector<std::string>& verify_suites();

/// Full command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        AtomRegistry& registry = AtomRegistry::global());

/// Loads the TOML file named by CHARGENUS_ATOMS, if set.
void load_atoms_from_environment(AtomRegistry& registry);

}  // namespace chargenus::cli
