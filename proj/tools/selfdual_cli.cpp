#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "selfdual/catalog.hpp"
#include "selfdual/claims.hpp"
#include "selfdual/codes.hpp"
#include "selfdual/cyclo.hpp"
#include "selfdual/errors.hpp"
#include "selfdual/gf.hpp"

namespace {

using namespace selfdual;
using u64 = std::uint64_t;
using ordered_json = nlohmann::ordered_json;

// per-factor annotation: "self" or "mirror:<partner index>"
std::vector<std::string> pairing_annotations(const Factorization& fx) {
  std::vector<std::string> ann(fx.factors.size());
  for (std::size_t i : fx.self_paired) ann[i] = "self";
  for (auto [i, j] : fx.mirror_pairs) {
    ann[i] = "mirror:" + std::to_string(j);
    ann[j] = "mirror:" + std::to_string(i);
  }
  return ann;
}

int run_factor(u64 p, u64 s, u64 n, int constant, bool json_mode) {
  auto field = make_field(p, s);
  Factorization fx = factor_xn_minus_a(field, n, constant);
  std::vector<std::string> ann = pairing_annotations(fx);
  if (json_mode) {
    ordered_json factors = ordered_json::array();
    for (std::size_t i = 0; i < fx.factors.size(); ++i)
      factors.push_back(ordered_json{{"poly", fx.factors[i].poly.str()},
                                     {"mult", fx.factors[i].multiplicity},
                                     {"pairing", ann[i]}});
    ordered_json j{
        {"field", ordered_json{{"p", p}, {"s", s}, {"modulus", field->modulus()}}},
        {"target", fx.target.str()},
        {"factors", factors},
    };
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "field: F_" << field->order() << " (p=" << p << " s=" << s << ")\n"
              << "target: " << fx.target.str() << '\n';
    for (std::size_t i = 0; i < fx.factors.size(); ++i)
      std::cout << "factor " << i << ": (" << fx.factors[i].poly.str() << ")^"
                << fx.factors[i].multiplicity << "  " << ann[i] << '\n';
    std::cout << "pairing: s=" << fx.self_paired.size() << " t=" << fx.mirror_pairs.size()
              << '\n';
  }
  return 0;
}

int run_exists(u64 p, u64 s, u64 n, int constant, bool enumerate_flag, bool json_mode,
               const std::string& catalog_flag, bool verify) {
  auto field = make_field(p, s);
  bool disagreed = false;
  CatalogRecord rec = classify_instance(field, n, constant, verify, &disagreed);

  if (json_mode) {
    std::cout << record_identity(rec) << '\n';
  } else {
    std::cout << "exists: " << (rec.exists ? "true" : "false") << '\n'
              << "count: " << rec.count << '\n'
              << "pairing: s=" << rec.pairing_self << " t=" << rec.pairing_mirror << '\n';
    if (verify)
      std::cout << "oracle: "
                << (rec.oracle_checked ? (disagreed ? "MISMATCH" : "confirmed") : "skipped")
                << '\n';
    if (enumerate_flag) {
      if (!rec.generators_complete) std::cout << "generators: omitted (census too large)\n";
      for (const std::string& g : rec.generators) std::cout << "generator: " << g << '\n';
    }
  }

  const std::string path = !catalog_flag.empty() ? catalog_flag : default_catalog_path("");
  if (!path.empty()) {
    Catalog cat = Catalog::load(path);
    const bool appended = cat.upsert(rec);
    if (appended) cat.save(path);
    if (!json_mode)
      std::cout << "catalog: " << (appended ? "appended to " : "already in ") << path << '\n';
  }
  return disagreed ? 4 : 0;
}

int run_claims(u64 max_n, bool json_mode, const std::string& out_path) {
  ClaimsConfig cfg;
  cfg.max_oracle_n = max_n;
  std::vector<ClaimVerdict> rows = run_claims_report(cfg);

  std::string body;
  if (json_mode) {
    for (const ClaimVerdict& v : rows) {
      ordered_json j{
          {"claim_id", v.claim_id},
          {"statement", v.statement},
          {"instance", v.instance},
          {"claimed", v.claimed},
          {"engine", v.engine},
          {"oracle", v.oracle},
          {"status", v.status},
          {"authoritative", v.authoritative},
          {"engine_oracle_mismatch", v.engine_oracle_mismatch},
      };
      body += j.dump();
      body += '\n';
    }
  } else {
    body = claims_table(rows);
  }

  if (out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out.is_open()) fail(Errc::invalid_input, "cannot write output file: " + out_path);
    out << body;
    if (!out.good()) fail(Errc::invalid_input, "write failed: " + out_path);
  }

  for (const ClaimVerdict& v : rows)
    if (v.engine_oracle_mismatch) return 4;
  return 0;
}

int run_sweep(const std::vector<u64>& p_list, u64 s_max, u64 n_max,
              const std::string& catalog_flag, bool verify) {
  const std::string path = !catalog_flag.empty() ? catalog_flag : default_catalog_path("");
  if (path.empty())
    fail(Errc::invalid_input, "no catalog path: pass --catalog or set SELFDUAL_CATALOG");
  if (p_list.empty()) fail(Errc::invalid_input, "--p-list must name at least one prime");
  if (s_max < 1 || n_max < 1) fail(Errc::invalid_input, "--s-max and --n-max must be >= 1");
  for (u64 p : p_list)
    if (!is_prime_u64(p)) fail(Errc::invalid_input, "not prime: " + std::to_string(p));

  Catalog cat = Catalog::load(path);
  u64 keys = 0, appended = 0;
  bool disagreed = false;
  for (u64 p : p_list) {
    for (u64 s = 1; s <= s_max; ++s) {
      auto field = make_field(p, s);
      for (u64 n = 1; n <= n_max; ++n) {
        for (int a : {1, -1}) {
          if (a == -1 && p == 2) continue;  // negacyclic = cyclic there
          ++keys;
          if (cat.contains(CatalogKey{p, s, n, a})) continue;
          bool d = false;
          CatalogRecord rec = classify_instance(field, n, a, verify, &d);
          disagreed = disagreed || d;
          cat.upsert(std::move(rec));
          ++appended;
        }
      }
    }
  }
  cat.save(path);
  std::cout << "sweep: " << keys << " keys, " << appended << " appended, " << path << '\n';
  return disagreed ? 4 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact classification of self-dual cyclic and negacyclic codes over F_{p^s}"};
  app.require_subcommand(1);

  u64 p = 0, s = 1, n = 0, max_n = 40, s_max = 1, n_max = 1;
  int constant = -1;
  bool json_mode = false, enumerate_flag = false, verify = false;
  std::string catalog_path, out_path;
  std::vector<u64> p_list;

  CLI::App* factor_cmd =
      app.add_subcommand("factor", "factor x^n - a into irreducibles with reciprocal pairing");
  factor_cmd->add_option("--p", p, "field characteristic (prime)")->required();
  factor_cmd->add_option("--s", s, "extension degree")->capture_default_str();
  factor_cmd->add_option("--n", n, "length")->required();
  factor_cmd->add_option("--constant", constant, "shift constant a (+1 cyclic, -1 negacyclic)")
      ->required();
  factor_cmd->add_flag("--json", json_mode, "emit one canonical JSON object");

  CLI::App* exists_cmd = app.add_subcommand(
      "exists", "decide/count/enumerate self-dual constacyclic codes of length n");
  exists_cmd->add_option("--p", p, "field characteristic (prime)")->required();
  exists_cmd->add_option("--s", s, "extension degree")->capture_default_str();
  exists_cmd->add_option("--n", n, "length")->required();
  exists_cmd->add_option("--constant", constant, "shift constant a (default -1, negacyclic)")
      ->capture_default_str();
  exists_cmd->add_flag("--enumerate", enumerate_flag, "print the full generator list");
  exists_cmd->add_flag("--json", json_mode, "emit one canonical JSON object (no provenance)");
  exists_cmd->add_option("--catalog", catalog_path,
                         "record the result in this JSON-lines catalog "
                         "(default: $SELFDUAL_CATALOG when set)");
  exists_cmd->add_flag("--verify", verify, "cross-check against the brute-force oracle");

  CLI::App* claims_cmd =
      app.add_subcommand("claims", "adjudicate the recorded classification claims");
  claims_cmd->add_option("--max-n", max_n, "oracle length cap for cross-checks")
      ->capture_default_str();
  claims_cmd->add_flag("--json", json_mode, "one JSON verdict per line");
  claims_cmd->add_option("--out", out_path, "write the report to this file");

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "classify every (p, s, n, a) in range into the catalog");
  sweep_cmd->add_option("--p-list", p_list, "characteristics to sweep (comma separated)")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--s-max", s_max, "max extension degree")->capture_default_str();
  sweep_cmd->add_option("--n-max", n_max, "max length")->capture_default_str();
  sweep_cmd->add_option("--catalog", catalog_path,
                        "JSON-lines catalog path (default: $SELFDUAL_CATALOG when set)");
  sweep_cmd->add_flag("--verify", verify, "oracle-check every record in range");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*factor_cmd) return run_factor(p, s, n, constant, json_mode);
    if (*exists_cmd)
      return run_exists(p, s, n, constant, enumerate_flag, json_mode, catalog_path, verify);
    if (*claims_cmd) return run_claims(max_n, json_mode, out_path);
    if (*sweep_cmd) return run_sweep(p_list, s_max, n_max, catalog_path, verify);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (e.code() == Errc::catalog_corrupt) return 5;
    if (exists_cmd->parsed() && e.code() == Errc::negacyclic_trivial_in_char_two) return 3;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
