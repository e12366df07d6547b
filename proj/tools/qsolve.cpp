// qsolve: classify and compute the GF(p^n)-rational roots of
// X^(q+1) + X + a with q = p^k. One subcommand per invocation, one JSON
// document on stdout; timings go to stderr so payloads stay byte-stable.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsolve/aseq.hpp"
#include "qsolve/error.hpp"
#include "qsolve/field.hpp"
#include "qsolve/oracle.hpp"
#include "qsolve/solver.hpp"

using json = nlohmann::ordered_json;

namespace {

struct FieldArgs {
  std::uint64_t p = 0;
  unsigned n = 0;
  unsigned k = 0;
  std::string modulus_csv;
};

void add_field_options(CLI::App* cmd, FieldArgs* args) {
  cmd->add_option("--p", args->p, "characteristic (prime)")->required();
  cmd->add_option("--n", args->n, "extension degree of GF(p^n)")->required();
  cmd->add_option("--k", args->k, "Frobenius exponent defining q = p^k")->required();
  cmd->add_option("--modulus", args->modulus_csv,
                  "override modulus, coefficients c0,c1,...,cn (validated for irreducibility)");
}

std::uint64_t max_q_from_env() {
  const char* env = std::getenv("QSOLVE_MAX_Q");
  if (!env || !*env) return qsolve::kDefaultMaxQ;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v < 2) {
    throw CLI::ValidationError("QSOLVE_MAX_Q", "must be an unsigned integer >= 2");
  }
  return v;
}

std::vector<std::uint32_t> parse_csv_u32(const std::string& csv, const char* what) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    } catch (const std::exception&) {
      qsolve::fail(qsolve::Errc::BadElement, std::string(what) + ": bad coefficient '" + item + "'");
    }
  }
  if (out.empty()) qsolve::fail(qsolve::Errc::BadElement, std::string(what) + ": empty list");
  return out;
}

qsolve::Field make_field(const FieldArgs& args) {
  const auto spec = qsolve::FieldSpec::make(args.p, args.n, args.k);
  const std::uint64_t max_q = max_q_from_env();
  if (args.modulus_csv.empty()) return qsolve::Field::create(spec, max_q);
  return qsolve::Field::with_modulus(spec, parse_csv_u32(args.modulus_csv, "--modulus"), max_q);
}

json field_json(const qsolve::Field& f) {
  json j;
  j["p"] = f.p();
  j["n"] = f.n();
  j["k"] = f.k();
  j["d"] = f.d();
  j["m"] = f.m();
  j["modulus"] = f.modulus();
  return j;
}

std::string elt_str(const qsolve::Field& f, const qsolve::Elt& x) {
  return std::to_string(f.enc(x));
}

json roots_json(const qsolve::Field& f, const std::vector<qsolve::Elt>& roots) {
  json arr = json::array();
  for (const auto& r : roots) arr.push_back(elt_str(f, r));
  return arr;
}

/// Element argument: either a decimal encoding (--a/--u) or a coefficient
/// list (--coeffs c0,c1,...). Exactly one form must be given.
qsolve::Elt parse_element(const qsolve::Field& f, const std::optional<std::uint64_t>& enc,
                          const std::string& coeffs_csv) {
  if (enc.has_value()) return f.from_enc(*enc);
  return f.from_coeffs(parse_csv_u32(coeffs_csv, "--coeffs"));
}

void emit(const json& doc) { std::cout << doc.dump() << "\n"; }

int run_solve(const FieldArgs& fargs, const std::optional<std::uint64_t>& a_enc,
              const std::string& coeffs, bool zeta_path) {
  const auto f = make_field(fargs);
  const auto a = parse_element(f, a_enc, coeffs);
  const auto res = qsolve::solve(f, a, {.zeta_path = zeta_path});

  json doc;
  doc["field"] = field_json(f);
  doc["a"] = elt_str(f, a);
  doc["class"] = qsolve::to_string(res.cls);
  doc["roots"] = roots_json(f, res.roots);
  doc["F"] = elt_str(f, res.F);
  doc["G"] = elt_str(f, res.G);
  if (res.E) doc["E"] = elt_str(f, *res.E);
  if (res.H) doc["H"] = elt_str(f, *res.H);
  if (res.witness_u) doc["witness_u"] = elt_str(f, *res.witness_u);
  emit(doc);
  return 0;
}

int run_census(const FieldArgs& fargs, const std::string& mode_name) {
  const auto f = make_field(fargs);
  const auto mode =
      mode_name == "oracle" ? qsolve::CensusMode::OracleScan : qsolve::CensusMode::Formula;
  const auto rep = qsolve::census(f, mode);

  json doc;
  doc["field"] = field_json(f);
  doc["mode"] = qsolve::to_string(rep.mode);
  doc["M0"] = rep.counts.m0;
  doc["M1"] = rep.counts.m1;
  doc["M2"] = rep.counts.m2;
  doc["Mfull"] = rep.counts.m_full;
  emit(doc);
  std::cerr << "census elapsed: " << rep.elapsed_seconds << "s\n";
  return 0;
}

int run_param(const FieldArgs& fargs, const std::optional<std::uint64_t>& u_enc,
              const std::string& coeffs) {
  const auto f = make_field(fargs);
  const auto u = parse_element(f, u_enc, coeffs);
  const auto a = qsolve::psi(f, u);
  const auto roots = qsolve::psi_roots(f, u);

  json doc;
  doc["field"] = field_json(f);
  doc["u"] = elt_str(f, u);
  doc["a"] = elt_str(f, a);
  doc["roots"] = roots_json(f, roots);
  emit(doc);
  return 0;
}

int run_invert(const FieldArgs& fargs, const std::optional<std::uint64_t>& a_enc,
               const std::string& coeffs) {
  const auto f = make_field(fargs);
  const auto a = parse_element(f, a_enc, coeffs);
  const auto u = qsolve::invert_psi(f, a);

  json doc;
  doc["field"] = field_json(f);
  doc["a"] = elt_str(f, a);
  doc["u"] = elt_str(f, u);
  emit(doc);
  return 0;
}

int run_identities(const FieldArgs& fargs, unsigned samples, unsigned rmax,
                   std::uint64_t seed) {
  const auto f = make_field(fargs);
  std::mt19937_64 rng(seed);

  std::uint64_t failures = 0;
  json breakdown;
  breakdown["norm_chain"] = 0;
  breakdown["g_reflection"] = 0;
  breakdown["disc_in_base"] = 0;
  breakdown["g_decomposition"] = 0;
  breakdown["recurrence_equivalence"] = 0;
  breakdown["trace_identities"] = 0;
  auto bump = [&](const char* key) {
    breakdown[key] = breakdown[key].get<std::uint64_t>() + 1;
    ++failures;
  };

  for (unsigned i = 0; i < samples; ++i) {
    const auto a = f.from_enc(1 + rng() % (f.order() - 1));
    const auto rep = qsolve::identity_suite(f, a, rmax);
    if (!rep.norm_chain) bump("norm_chain");
    if (!rep.g_reflection) bump("g_reflection");
    if (!rep.disc_in_base) bump("disc_in_base");
    if (!rep.g_decomposition) bump("g_decomposition");
    if (qsolve::a_eval(f, a, rmax) != qsolve::a_eval_defining(f, a, rmax)) {
      bump("recurrence_equivalence");
    }
    if (f.p() == 2) {
      try {
        if (!qsolve::trace_identities(f, a).all_passed()) bump("trace_identities");
      } catch (const qsolve::Error& e) {
        if (e.code() != qsolve::Errc::ZeroG) throw;
      }
    }
  }

  json doc;
  doc["field"] = field_json(f);
  doc["seed"] = seed;
  doc["samples"] = samples;
  doc["rmax"] = rmax;
  doc["failures"] = failures;
  doc["failures_by_identity"] = breakdown;
  doc["all_passed"] = failures == 0;
  emit(doc);
  return 0;
}

int run_oracle_check(const FieldArgs& fargs) {
  const auto f = make_field(fargs);
  for (std::uint64_t aenc = 1; aenc < f.order(); ++aenc) {
    const auto a = f.from_enc(aenc);
    const auto got = qsolve::solve(f, a).roots;
    const auto want = qsolve::brute_roots(f, a);
    if (got != want) {
      json doc;
      doc["field"] = field_json(f);
      doc["status"] = "mismatch";
      doc["a"] = elt_str(f, a);
      doc["solver_roots"] = roots_json(f, got);
      doc["oracle_roots"] = roots_json(f, want);
      emit(doc);
      return 1;
    }
  }
  json doc;
  doc["field"] = field_json(f);
  doc["status"] = "ok";
  doc["checked"] = f.order() - 1;
  emit(doc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"roots of X^(q+1) + X + a over GF(p^n), q = p^k"};
  app.require_subcommand(1);

  FieldArgs fargs;
  std::optional<std::uint64_t> a_enc;
  std::optional<std::uint64_t> u_enc;
  std::string coeffs;
  bool zeta_path = false;
  std::string mode = "formula";
  unsigned samples = 1000;
  unsigned rmax = 12;
  std::uint64_t seed = 1;

  auto* solve_cmd = app.add_subcommand("solve", "classify and list all roots for one a");
  add_field_options(solve_cmd, &fargs);
  auto* a_opt = solve_cmd->add_option("--a", a_enc, "a as a decimal encoding");
  auto* coeffs_opt =
      solve_cmd->add_option("--coeffs", coeffs, "a as coefficients c0,c1,... instead of --a");
  a_opt->excludes(coeffs_opt);
  solve_cmd->add_flag("--zeta-path", zeta_path, "use the mu_{Q+1} form of the two-root case (p = 2)");

  auto* census_cmd = app.add_subcommand("census", "count the 0/1/2/p^d+1 classes over all a");
  add_field_options(census_cmd, &fargs);
  census_cmd->add_option("--mode", mode, "formula | oracle")
      ->check(CLI::IsMember({"formula", "oracle"}));

  auto* param_cmd = app.add_subcommand("param", "apply the full-split parametrization to u");
  add_field_options(param_cmd, &fargs);
  auto* u_opt = param_cmd->add_option("--u", u_enc, "u as a decimal encoding");
  auto* u_coeffs_opt =
      param_cmd->add_option("--coeffs", coeffs, "u as coefficients c0,c1,... instead of --u");
  u_opt->excludes(u_coeffs_opt);

  auto* invert_cmd = app.add_subcommand("invert", "find the smallest witness u with psi(u) = a");
  add_field_options(invert_cmd, &fargs);
  auto* ia_opt = invert_cmd->add_option("--a", a_enc, "a as a decimal encoding");
  auto* ia_coeffs_opt =
      invert_cmd->add_option("--coeffs", coeffs, "a as coefficients c0,c1,... instead of --a");
  ia_opt->excludes(ia_coeffs_opt);

  auto* ident_cmd = app.add_subcommand("identities", "run the identity checks on sampled a");
  add_field_options(ident_cmd, &fargs);
  ident_cmd->add_option("--samples", samples, "number of pseudorandom a to draw");
  ident_cmd->add_option("--rmax", rmax, "depth of the sequence identity chain");
  ident_cmd->add_option("--seed", seed, "PRNG seed (results are deterministic per seed)");

  auto* check_cmd = app.add_subcommand("oracle-check", "compare solve against the exhaustive scan for every a");
  add_field_options(check_cmd, &fargs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (solve_cmd->parsed()) {
      if (!a_enc && coeffs.empty()) qsolve::fail(qsolve::Errc::BadElement, "missing --a or --coeffs");
      return run_solve(fargs, a_enc, coeffs, zeta_path);
    }
    if (census_cmd->parsed()) return run_census(fargs, mode);
    if (param_cmd->parsed()) {
      if (!u_enc && coeffs.empty()) qsolve::fail(qsolve::Errc::BadElement, "missing --u or --coeffs");
      return run_param(fargs, u_enc, coeffs);
    }
    if (invert_cmd->parsed()) {
      if (!a_enc && coeffs.empty()) qsolve::fail(qsolve::Errc::BadElement, "missing --a or --coeffs");
      return run_invert(fargs, a_enc, coeffs);
    }
    if (ident_cmd->parsed()) return run_identities(fargs, samples, rmax, seed);
    if (check_cmd->parsed()) return run_oracle_check(fargs);
  } catch (const qsolve::Error& e) {
    json doc;
    doc["error"] = qsolve::to_string(e.code());
    doc["detail"] = e.what();
    emit(doc);
    return 1;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
