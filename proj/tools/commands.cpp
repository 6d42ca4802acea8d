#include "commands.hpp"

#include <algorithm>
#include <iostream>
#include <memory>
#include <stdexcept>

#include "kshadow/acceptance.hpp"
#include "kshadow/cache.hpp"

namespace kshadow::cli {

namespace {

constexpr int kUsageError = 2;

LatticeVector parse_weight(const RootDatum& rd, const std::string& s, const char* what) {
  const auto v = parse_int_list(s);
  if (static_cast<int>(v.size()) != rd.rank())
    throw std::invalid_argument(std::string(what) + " needs " + std::to_string(rd.rank()) + " coordinates");
  LatticeVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<int>(v[i]);
  return out;
}

std::string tsv_vector(const LatticeVector& v) { return v.to_string(); }

class Context {
 public:
  explicit Context(const RunConfig& c) : rd(c.family, c.rank, c.mode) {
    if (c.use_cache) cache = std::make_unique<Cache>(c.cache_dir ? std::filesystem::path(*c.cache_dir) : Cache::default_dir());
  }
  WeylGroup weyl() { return cache ? cache->weyl_group(rd) : WeylGroup(rd); }
  LaurentPoly character(const WeylGroup& w, const LatticeVector& mu) {
    return cache ? cache->character(w, mu) : weyl_character(w, mu);
  }

  RootDatum rd;
  std::unique_ptr<Cache> cache;
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_roots(const RunConfig& c, std::ostream& out) {
  Context ctx(c);
  const auto w = ctx.weyl();
  auto j = root_datum_json(w);
  j["seed"] = c.seed;
  emit(out, j);
  return 0;
}

bool table_as_json(const RunConfig& c) { return c.format && *c.format == "json"; }

int cmd_dtable(const RunConfig& c, std::ostream& out) {
  const RootDatum rd(c.family, c.rank, c.mode);
  if (table_as_json(c)) {
    Json rows = Json::array();
    for (const auto& lam : lattice_window(rd, c.radius)) rows.push_back({{"lambda", to_json(lam)}, {"d", d_lambda(rd, lam)}});
    emit(out, {{"schema_version", kSchemaVersion}, {"root_datum", rd.fingerprint()}, {"rows", rows}});
    return 0;
  }
  out << "lambda\td\n";
  for (const auto& lam : lattice_window(rd, c.radius)) out << tsv_vector(lam) << "\t" << d_lambda(rd, lam) << "\n";
  return 0;
}

int cmd_conv(const RunConfig& c, std::ostream& out) {
  const RootDatum rd(c.family, c.rank, c.mode);
  const auto win = lattice_window(rd, c.radius);
  if (table_as_json(c)) {
    Json rows = Json::array();
    for (const auto& lam : win)
      for (const auto& mu : win) {
        const auto r = standard_convolution(rd, lam, mu);
        rows.push_back({{"lambda", to_json(lam)}, {"mu", to_json(mu)}, {"sum", to_json(r.support)}, {"fiber_dim", r.fiber_dim}});
      }
    emit(out, {{"schema_version", kSchemaVersion}, {"root_datum", rd.fingerprint()}, {"rows", rows}});
    return 0;
  }
  out << "lambda\tmu\tsum\tfiber_dim\n";
  for (const auto& lam : win)
    for (const auto& mu : win) {
      const auto r = standard_convolution(rd, lam, mu);
      out << tsv_vector(lam) << "\t" << tsv_vector(mu) << "\t" << tsv_vector(r.support) << "\t" << r.fiber_dim << "\n";
    }
  return 0;
}

int cmd_hess(const RunConfig& c, std::ostream& out) {
  Context ctx(c);
  const auto w = ctx.weyl();
  Json j;
  if (c.gl) {
    const auto gl = parse_int_list(*c.gl);
    j = hessenberg_json(ctx.rd, hessenberg_datum(w, gl_root_pairings(ctx.rd, gl)), Json{{"gl", gl}});
  } else {
    const auto lam = parse_weight(ctx.rd, c.lambda.value_or(std::string()), "--lambda");
    j = hessenberg_json(ctx.rd, hessenberg_datum(w, lam), to_json(lam));
  }
  j["seed"] = c.seed;
  emit(out, j);
  return 0;
}

int cmd_weights(const RunConfig& c, std::ostream& out) {
  Context ctx(c);
  const auto w = ctx.weyl();
  const auto mu = parse_weight(ctx.rd, c.mu.value_or(std::string()), "--mu");
  if (!ctx.rd.is_dominant(mu)) throw std::invalid_argument("--mu must be dominant");
  auto j = weights_json(w, mu, ctx.character(w, mu));
  j["seed"] = c.seed;
  emit(out, j);
  return 0;
}

int cmd_kmod(const RunConfig& c, std::ostream& out) {
  Context ctx(c);
  if (ctx.rd.rank() > 3) throw std::invalid_argument("kmod supports rank <= 3");
  const auto w = ctx.weyl();
  const GkmModel model(w);
  const auto fr = freeness_check(model);
  Json par = Json::array();
  std::vector<std::vector<int>> sets;
  if (c.parabolic) {
    std::vector<int> gens;
    for (auto g : parse_int_list(*c.parabolic)) {
      if (g < 1 || g > ctx.rd.rank()) throw std::invalid_argument("--parabolic entries must lie in 1..rank");
      gens.push_back(static_cast<int>(g - 1));
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    sets.push_back(gens);
  } else {
    for (int mask = 0; mask < (1 << ctx.rd.rank()); ++mask) {
      std::vector<int> gens;
      for (int i = 0; i < ctx.rd.rank(); ++i)
        if ((mask >> i) & 1) gens.push_back(i);
      sets.push_back(gens);
    }
  }
  bool ok = fr.certificate;
  for (const auto& gens : sets) {
    std::vector<int> one_based;
    for (int g : gens) one_based.push_back(g + 1);
    const int got = parabolic_invariants_rank(model, gens);
    const int expected = w.order() / static_cast<int>(w.parabolic(gens).size());
    ok = ok && got == expected;
    par.push_back({{"generators", one_based}, {"rank", got}, {"expected", expected}});
  }
  emit(out, {{"schema_version", kSchemaVersion},
             {"root_datum", ctx.rd.fingerprint()},
             {"weyl_order", w.order()},
             {"freeness", {{"rank", fr.rank}, {"certificate", fr.certificate}, {"determinant", fr.factored()}}},
             {"parabolic", par},
             {"seed", c.seed}});
  return ok ? 0 : 1;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const RootDatum rd(c.family, c.rank, c.mode);
  if (rd.rank() > 3) throw std::invalid_argument("verify supports rank <= 3");
  VerifyOptions opts;
  opts.seed = c.seed;
  opts.samples = c.samples;
  const auto rep = verify_cc_bimodule(rd, opts);
  emit(out, report_json(rep));
  return rep.iso_found && rep.all_relations_pass() ? 0 : 1;
}

int cmd_verify_all(const RunConfig& c, std::ostream& out, std::ostream& err) {
  AcceptanceOptions opts;
  opts.seed = c.seed;
  opts.include_a3 = !c.skip_a3;
  const auto results = run_acceptance(opts);
  for (const auto& r : results) err << format_line(r) << "\n";
  const auto j = acceptance_json(results, c.seed);
  emit(out, j);
  return j.at("passed").get<bool>() ? 0 : 1;
}

}  // namespace

void RunConfig::validate() const {
  if (!RootDatum::valid_type(family, rank))
    throw std::invalid_argument("unsupported Cartan type " + std::string(1, family) + std::to_string(rank));
  if (radius < 1) throw std::invalid_argument("--radius must be positive");
  if (samples <= 0) throw std::invalid_argument("--samples must be positive");
  if (format && *format != "json" && *format != "tsv") throw std::invalid_argument("--format must be json or tsv");
}

int run_subcommand(const std::string& name, const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (std::find(subcommands().begin(), subcommands().end(), name) == subcommands().end()) {
    err << "error: unknown subcommand '" << name << "'\n";
    return kUsageError;
  }
  try {
    config.validate();
    if (config.format == "tsv" && name != "dtable" && name != "conv")
      throw std::invalid_argument(name + " only emits json");
    if (name == "roots") return cmd_roots(config, out);
    if (name == "dtable") return cmd_dtable(config, out);
    if (name == "conv") return cmd_conv(config, out);
    if (name == "hess") return cmd_hess(config, out);
    if (name == "weights") return cmd_weights(config, out);
    if (name == "kmod") return cmd_kmod(config, out);
    if (name == "verify") return cmd_verify(config, out);
    return cmd_verify_all(config, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace kshadow::cli
