#include <iostream>

#include "zinbiel/acceptance.hpp"

// Runs every acceptance criterion against the built-in catalog and prints one
// line per criterion. Exit status 0 only when all of them pass.
int main(int argc, char** argv) {
  const bool quiet = argc > 1 && std::string(argv[1]) == "--quiet";
  const zinbiel::AcceptanceSummary summary = zinbiel::verify_paper(zinbiel::Catalog());
  std::cout << zinbiel::describe(summary, !quiet);
  return summary.passed() ? 0 : 1;
}
