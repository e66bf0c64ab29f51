#include <iostream>

#include "chargenus/error.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  try {
    chargenus::cli::load_atoms_from_environment(chargenus::AtomRegistry::global());
  } catch (const chargenus::Error& e) {
    std::cerr << "error: CHARGENUS_ATOMS: " << e.what() << "\n";
    return chargenus::cli::kUsageError;
  }
  return chargenus::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
