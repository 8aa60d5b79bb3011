#include "selfdual/catalog.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>

#include "json.hpp"
#include "selfdual/claims.hpp"
#include "selfdual/codes.hpp"
#include "selfdual/cyclo.hpp"
#include "selfdual/errors.hpp"
#include "selfdual/oracle.hpp"

namespace selfdual {

namespace {

using u64 = std::uint64_t;
using ordered_json = nlohmann::ordered_json;

constexpr u64 kMaxLength = 65'536;
constexpr u64 kMaxCatalogGenerators = 1'024;
constexpr u64 kOracleFieldCap = 16;
constexpr u64 kOracleLengthCap = 512;

ordered_json key_json(const CatalogKey& k) {
  return ordered_json{{"p", k.p}, {"s", k.s}, {"n", k.n}, {"a", k.a}};
}

ordered_json result_json(const CatalogRecord& r) {
  return ordered_json{
      {"exists", r.exists},
      {"count", r.count},
      {"pairing", ordered_json{{"self", r.pairing_self}, {"mirror", r.pairing_mirror}}},
      {"generators_complete", r.generators_complete},
      {"generators", r.generators},
  };
}

u64 coprime_part(u64 n, u64 p) {
  while (n % p == 0) n /= p;
  return n;
}

}  // namespace

std::string record_identity(const CatalogRecord& rec) {
  ordered_json j{{"key", key_json(rec.key)}, {"result", result_json(rec)}};
  return j.dump();
}

std::string record_to_json_line(const CatalogRecord& rec) {
  ordered_json j{
      {"key", key_json(rec.key)},
      {"result", result_json(rec)},
      {"provenance", ordered_json{{"engine_version", rec.engine_version},
                                  {"timestamp", rec.timestamp},
                                  {"oracle_checked", rec.oracle_checked}}},
  };
  return j.dump();
}

CatalogRecord record_from_json_line(const std::string& line, std::size_t line_number) {
  auto bad = [line_number](const std::string& why) -> void {
    fail(Errc::catalog_corrupt, "line " + std::to_string(line_number) + ": " + why);
  };
  try {
    ordered_json j = ordered_json::parse(line);
    CatalogRecord r;
    const auto& k = j.at("key");
    r.key.p = k.at("p").get<u64>();
    r.key.s = k.at("s").get<u64>();
    r.key.n = k.at("n").get<u64>();
    r.key.a = k.at("a").get<int>();
    if (r.key.a != 1 && r.key.a != -1) bad("key.a must be +1 or -1");
    const auto& res = j.at("result");
    r.exists = res.at("exists").get<bool>();
    r.count = res.at("count").get<u64>();
    r.pairing_self = res.at("pairing").at("self").get<u64>();
    r.pairing_mirror = res.at("pairing").at("mirror").get<u64>();
    r.generators_complete = res.at("generators_complete").get<bool>();
    for (const auto& g : res.at("generators")) r.generators.push_back(g.get<std::string>());
    const auto& prov = j.at("provenance");
    r.engine_version = prov.at("engine_version").get<std::string>();
    r.timestamp = prov.at("timestamp").get<std::string>();
    r.oracle_checked = prov.at("oracle_checked").get<bool>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    bad(e.what());
  }
  return {};  // unreachable: bad() always throws
}

CatalogRecord classify_instance(const FieldPtr& field, u64 n, int a, bool verify,
                                bool* oracle_disagreed) {
  if (a != 1 && a != -1) fail(Errc::invalid_input, "shift constant must be +1 or -1");
  if (n < 1) fail(Errc::invalid_input, "length must be >= 1");
  if (n > kMaxLength) fail(Errc::range_exceeded, "length too large");

  CatalogRecord rec;
  rec.key = {field->characteristic(), field->extension_degree(), n, a};
  rec.engine_version = kEngineVersion;
  rec.timestamp = utc_timestamp();

  std::vector<Poly> gens;
  bool enumerated = false;
  if (a == -1) {
    PairingEvidence ev;
    rec.exists = negacyclic_selfdual_exists(field, n, &ev);
    rec.pairing_self = ev.self_reciprocal;
    rec.pairing_mirror = ev.mirror_pairs;
    rec.count = count_selfdual_negacyclic(field, n);
  } else {
    std::vector<Coset> cs =
        cosets(field->order(), coprime_part(n, field->characteristic()), CosetScope::all_residues);
    CosetPairing pairing = coset_pairing(cs);
    rec.pairing_self = pairing.self_paired.size();
    rec.pairing_mirror = pairing.mirror_pairs.size();
    if (field->characteristic() == 2) {
      rec.count = count_selfdual_cyclic_char2(field, n);
      rec.exists = rec.count > 0;
    } else {
      // x - 1 is a self-reciprocal factor of odd multiplicity: never self-dual
      rec.exists = false;
      rec.count = 0;
    }
  }

  if (rec.count <= kMaxCatalogGenerators) {
    try {
      if (rec.count > 0)
        gens = a == -1 ? enumerate_selfdual_negacyclic(field, n)
                       : enumerate_selfdual_cyclic_char2(field, n);
      enumerated = true;
    } catch (const Error& e) {
      if (e.code() != Errc::range_exceeded) throw;  // memory guard: list omitted
    }
  }
  if (enumerated) {
    rec.generators_complete = true;
    rec.generators.reserve(gens.size());
    for (const Poly& g : gens) rec.generators.push_back(g.str());
    if (rec.generators.size() != rec.count)
      fail(Errc::invalid_input, "internal: enumeration size disagrees with count");
  }

  if (verify && field->order() <= kOracleFieldCap && n <= kOracleLengthCap) {
    try {
      std::vector<Poly> found = oracle_selfdual_search(field, n, a);
      bool agree = (found.empty() ? !rec.exists : rec.exists) && found.size() == rec.count;
      if (agree && rec.generators_complete) {
        agree = found.size() == rec.generators.size();
        for (std::size_t i = 0; agree && i < found.size(); ++i)
          agree = found[i].str() == rec.generators[i];
      }
      rec.oracle_checked = true;
      if (!agree && oracle_disagreed) *oracle_disagreed = true;
    } catch (const Error& e) {
      if (e.code() != Errc::range_exceeded) throw;  // out of range: not checked
    }
  }
  return rec;
}

Catalog Catalog::load(const std::string& path) {
  Catalog cat;
  std::ifstream in(path, std::ios::binary);
  if (!in.is_open()) return cat;  // absent file: start empty
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    CatalogRecord rec = record_from_json_line(line, line_number);
    if (cat.contains(rec.key))
      fail(Errc::catalog_corrupt,
           "line " + std::to_string(line_number) + ": duplicate key");
    cat.index_[rec.key] = cat.records_.size();
    cat.records_.push_back(std::move(rec));
  }
  return cat;
}

bool Catalog::contains(const CatalogKey& key) const { return index_.count(key) != 0; }

bool Catalog::upsert(CatalogRecord rec) {
  if (contains(rec.key)) return false;
  index_[rec.key] = records_.size();
  records_.push_back(std::move(rec));
  return true;
}

void Catalog::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out.is_open()) fail(Errc::invalid_input, "cannot write catalog file: " + path);
  for (const CatalogRecord& rec : records_) out << record_to_json_line(rec) << '\n';
  if (!out.good()) fail(Errc::invalid_input, "write failed: " + path);
}

std::string default_catalog_path(const std::string& fallback) {
  const char* env = std::getenv("SELFDUAL_CATALOG");
  if (env && *env) return env;
  return fallback;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace selfdual
