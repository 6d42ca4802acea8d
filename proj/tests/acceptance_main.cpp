// Prints one PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include <cstdlib>
#include <iostream>

#include "kshadow/acceptance.hpp"

int main(int argc, char** argv) {
  kshadow::AcceptanceOptions opts;
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--skip-a3") opts.include_a3 = false;
  const auto results = kshadow::run_acceptance(opts);
  bool ok = true;
  for (const auto& r : results) {
    std::cout << kshadow::format_line(r) << "\n";
    ok &= r.passed;
  }
  std::cout << (ok ? "ALL PASS" : "SOME FAILED") << "\n";
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
