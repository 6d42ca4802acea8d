#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kshadow/rootdata.hpp"

namespace kshadow::cli {

struct RunConfig {
  char family = 'A';
  int rank = 2;
  LatticeMode mode = LatticeMode::kSimplyConnected;
  int radius = 2;                      // lambda window for dtable / conv
  int samples = 6;                     // random classes per relation in verify
  std::optional<std::string> format;   // json | tsv; tables default to tsv, the rest are json only
  std::optional<std::string> lambda;   // "1,1"
  std::optional<std::string> mu;
  std::optional<std::string> gl;       // GL_n coordinates for hess
  std::optional<std::string> parabolic;  // "1,2" (1-based simple reflections) for kmod
  std::optional<std::string> cache_dir;
  bool use_cache = true;
  bool skip_a3 = false;                // verify-all without the rank-3 run
  std::uint64_t seed = 20240611;

  /// Throws std::invalid_argument with a usage message when a bound or field is malformed.
  void validate() const;
};

inline const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = {"roots", "dtable", "conv", "hess", "weights", "kmod", "verify", "verify-all"};
  return names;
}

/// Runs one subcommand, writing the document to out and diagnostics to err.
/// Returns the process exit code: 0 on success, 1 on a failed verification, 2 on usage errors.
int run_subcommand(const std::string& name, const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace kshadow::cli
