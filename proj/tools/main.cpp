#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  using kshadow::cli::RunConfig;
  RunConfig cfg;
  std::string type = "A";
  std::string lattice = "sc";

  CLI::App app{"kshadow: K-theoretic and combinatorial shadows of slope-one affine Springer fibers"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--type", type, "Cartan type letter (A-G)");
  app.add_option("--rank", cfg.rank, "rank of the root system");
  app.add_option("--lattice", lattice, "coweight lattice: sc (coroot lattice) or adjoint")
      ->check(CLI::IsMember({"sc", "adjoint"}));
  app.add_option("--radius", cfg.radius, "coordinate window radius for dtable and conv");
  app.add_option("--lambda", cfg.lambda, "coweight, comma separated lattice coordinates");
  app.add_option("--gl", cfg.gl, "GL_n coordinates for hess in type A");
  app.add_option("--mu", cfg.mu, "dominant highest weight, comma separated");
  app.add_option("--parabolic", cfg.parabolic, "simple reflections (1-based) generating W_P for kmod");
  app.add_option("--samples", cfg.samples, "random classes per relation in verify");
  app.add_option("--seed", cfg.seed, "seed for randomized checks");
  app.add_option("--format", cfg.format, "json or tsv");
  app.add_option("--cache-dir", cfg.cache_dir, "cache directory (default: $KSHADOW_CACHE_DIR)");
  app.add_flag("--no-cache", [&](std::int64_t) { cfg.use_cache = false; }, "do not read or write the cache");
  app.add_flag("--skip-a3", cfg.skip_a3, "verify-all: leave out the rank-3 bimodule run");

  const char* help[] = {"root datum as JSON",
                        "TSV of d_lambda over a window",
                        "TSV of standard convolutions over a window",
                        "Hessenberg fixed-point component as JSON",
                        "weight multiplicities and microstalks as JSON",
                        "freeness and parabolic invariants of the K-model",
                        "bimodule verification report",
                        "full acceptance suite"};
  for (std::size_t i = 0; i < kshadow::cli::subcommands().size(); ++i)
    app.add_subcommand(kshadow::cli::subcommands()[i], help[i]);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  if (type.size() != 1) {
    std::cerr << "error: --type takes a single letter\n";
    return 2;
  }
  cfg.family = static_cast<char>(std::toupper(static_cast<unsigned char>(type[0])));
  cfg.mode = kshadow::parse_lattice_mode(lattice);
  return kshadow::cli::run_subcommand(app.get_subcommands().front()->get_name(), cfg, std::cout, std::cerr);
}
