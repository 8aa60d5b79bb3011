#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "selfdual/catalog.hpp"
#include "selfdual/codes.hpp"
#include "selfdual/errors.hpp"
#include "selfdual/poly.hpp"

using namespace selfdual;

namespace {

bool fails_with_msg(Errc want, const std::string& fragment, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == want && std::string(e.what()).find(fragment) != std::string::npos;
  }
  return false;
}

Poly P(const FieldPtr& f, std::initializer_list<std::int64_t> cs) {
  return Poly::from_ints(f, std::vector<std::int64_t>(cs));
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.is_open());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CatalogRecord sample_record() {
  CatalogRecord r;
  r.key = {5, 1, 10, -1};
  r.exists = true;
  r.count = 6;
  r.generators_complete = false;
  r.pairing_self = 0;
  r.pairing_mirror = 1;
  r.engine_version = "0.1.0";
  r.timestamp = "2026-01-01T00:00:00Z";
  r.oracle_checked = true;
  return r;
}

}  // namespace

TEST_CASE("catalog records serialize to canonical JSON lines") {
  CatalogRecord r = sample_record();
  CHECK(record_to_json_line(r) ==
        R"({"key":{"p":5,"s":1,"n":10,"a":-1},)"
        R"("result":{"exists":true,"count":6,"pairing":{"self":0,"mirror":1},)"
        R"("generators_complete":false,"generators":[]},)"
        R"("provenance":{"engine_version":"0.1.0","timestamp":"2026-01-01T00:00:00Z",)"
        R"("oracle_checked":true}})");

  CatalogRecord back = record_from_json_line(record_to_json_line(r), 1);
  CHECK(back.key == r.key);
  CHECK(back.exists == r.exists);
  CHECK(back.count == r.count);
  CHECK(back.generators == r.generators);
  CHECK(back.generators_complete == r.generators_complete);
  CHECK(back.pairing_self == r.pairing_self);
  CHECK(back.pairing_mirror == r.pairing_mirror);
  CHECK(back.engine_version == r.engine_version);
  CHECK(back.timestamp == r.timestamp);
  CHECK(back.oracle_checked == r.oracle_checked);
  CHECK(record_to_json_line(back) == record_to_json_line(r));  // byte round-trip

  // identity ignores provenance
  CatalogRecord later = r;
  later.timestamp = "2027-12-31T23:59:59Z";
  CHECK(record_identity(later) == record_identity(r));
  CHECK(record_to_json_line(later) != record_to_json_line(r));
}

TEST_CASE("defective catalog lines report their line number") {
  CHECK(fails_with_msg(Errc::catalog_corrupt, "line 7",
                       [] { (void)record_from_json_line("not json at all", 7); }));
  CHECK(fails_with_msg(Errc::catalog_corrupt, "line 3",
                       [] { (void)record_from_json_line(R"({"key":{}})", 3); }));
  std::string bad_a = record_to_json_line(sample_record());
  std::size_t pos = bad_a.find("\"a\":-1");
  REQUIRE(pos != std::string::npos);
  bad_a.replace(pos, 6, "\"a\":2");
  CHECK(fails_with_msg(Errc::catalog_corrupt, "line 9",
                       [&] { (void)record_from_json_line(bad_a, 9); }));
}

TEST_CASE("classify_instance agrees with the engine and the oracle") {
  auto f5 = make_field(5, 1);
  bool disagreed = false;
  CatalogRecord r = classify_instance(f5, 10, -1, true, &disagreed);
  CHECK((r.key == CatalogKey{5, 1, 10, -1}));
  CHECK(r.exists);
  CHECK(r.count == 6);
  CHECK(r.pairing_self == 0);
  CHECK(r.pairing_mirror == 1);
  CHECK(r.generators_complete);
  REQUIRE(r.generators.size() == 6);
  CHECK(r.generators.front() == P(f5, {2, 0, 0, 0, 0, 1}).str());  // (x+2)^5
  CHECK(r.generators.back() == P(f5, {3, 0, 0, 0, 0, 1}).str());   // (x-2)^5
  CHECK(r.oracle_checked);
  CHECK_FALSE(disagreed);
  CHECK(r.engine_version == kEngineVersion);

  auto f3 = make_field(3, 1);
  r = classify_instance(f3, 6, -1, true, &disagreed);
  CHECK_FALSE(r.exists);
  CHECK(r.count == 0);
  CHECK(r.pairing_self == 1);
  CHECK(r.pairing_mirror == 0);
  CHECK(r.generators_complete);
  CHECK(r.generators.empty());
  CHECK(r.oracle_checked);
  CHECK_FALSE(disagreed);

  auto f2 = make_field(2, 1);
  r = classify_instance(f2, 14, 1, true, &disagreed);
  CHECK(r.exists);
  CHECK(r.count == 3);
  CHECK(r.generators_complete);
  CHECK(r.generators.size() == 3);
  CHECK(r.oracle_checked);
  CHECK_FALSE(disagreed);

  // cyclic over odd characteristic: never self-dual
  r = classify_instance(f5, 10, 1, true, &disagreed);
  CHECK_FALSE(r.exists);
  CHECK(r.count == 0);
  CHECK(r.pairing_self == 2);
  CHECK(r.pairing_mirror == 0);
  CHECK(r.generators_complete);
  CHECK(r.oracle_checked);
  CHECK_FALSE(disagreed);

  // out of oracle range: classified but not checked
  auto f25 = make_field(5, 2);
  r = classify_instance(f25, 170, -1, true, &disagreed);
  CHECK(r.exists);
  CHECK(r.count == 216);
  CHECK_FALSE(r.oracle_checked);
  CHECK_FALSE(disagreed);

  // count above the generator cap: list omitted, count kept
  auto f9 = make_field(3, 2);
  r = classify_instance(f9, 126, -1, false, &disagreed);
  CHECK(r.exists);
  CHECK(r.count == 1000);
  CHECK(r.generators_complete);
  CHECK(r.generators.size() == 1000);
  r = classify_instance(f5, 130, -1, false, &disagreed);
  CHECK(r.count == 1296);
  CHECK_FALSE(r.generators_complete);
  CHECK(r.generators.empty());

  CHECK(fails_with_msg(Errc::invalid_input, "length",
                       [&] { (void)classify_instance(f5, 0, -1, false); }));
  CHECK(fails_with_msg(Errc::invalid_input, "shift",
                       [&] { (void)classify_instance(f5, 10, 3, false); }));
  CHECK(fails_with_msg(Errc::negacyclic_trivial_in_char_two, "",
                       [&] { (void)classify_instance(f2, 6, -1, false); }));
}

TEST_CASE("catalog dedupes on key and survives disk round-trips") {
  const std::string path = "test_catalog_tmp.jsonl";
  const std::string path2 = "test_catalog_tmp2.jsonl";
  std::remove(path.c_str());
  std::remove(path2.c_str());

  auto f5 = make_field(5, 1);
  auto f3 = make_field(3, 1);
  CatalogRecord r1 = classify_instance(f5, 10, -1, false);
  CatalogRecord r2 = classify_instance(f3, 6, -1, false);

  Catalog cat;
  CHECK(cat.upsert(r1));
  CHECK(cat.upsert(r2));
  CHECK_FALSE(cat.upsert(r1));  // duplicate key is kept, not replaced
  CHECK(cat.records().size() == 2);
  CHECK(cat.contains(r1.key));
  CHECK(cat.contains(CatalogKey{3, 1, 6, -1}));
  CHECK_FALSE(cat.contains(CatalogKey{3, 1, 8, -1}));
  cat.save(path);

  Catalog loaded = Catalog::load(path);
  REQUIRE(loaded.records().size() == 2);
  CHECK(record_identity(loaded.records()[0]) == record_identity(r1));
  CHECK(record_identity(loaded.records()[1]) == record_identity(r2));
  loaded.save(path2);
  CHECK(slurp(path) == slurp(path2));  // byte-identical rewrite

  // a re-run upserting the same keys leaves the file untouched
  Catalog rerun = Catalog::load(path);
  CHECK_FALSE(rerun.upsert(classify_instance(f5, 10, -1, false)));
  CHECK_FALSE(rerun.upsert(classify_instance(f3, 6, -1, false)));
  rerun.save(path);
  CHECK(slurp(path) == slurp(path2));

  // deleting one line regenerates only that record (appended at the end)
  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << record_to_json_line(r2) << '\n';
  }
  Catalog pruned = Catalog::load(path);
  REQUIRE(pruned.records().size() == 1);
  CHECK(pruned.upsert(classify_instance(f5, 10, -1, false)));
  CHECK(record_identity(pruned.records()[1]) == record_identity(r1));

  CHECK(Catalog::load("no_such_catalog_file.jsonl").records().empty());

  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << record_to_json_line(r1) << '\n' << "garbage\n";
  }
  CHECK(fails_with_msg(Errc::catalog_corrupt, "line 2", [&] { (void)Catalog::load(path); }));
  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << record_to_json_line(r1) << '\n' << record_to_json_line(r1) << '\n';
  }
  CHECK(fails_with_msg(Errc::catalog_corrupt, "line 2: duplicate key",
                       [&] { (void)Catalog::load(path); }));

  std::remove(path.c_str());
  std::remove(path2.c_str());
}

TEST_CASE("default catalog path honors the environment") {
  unsetenv("SELFDUAL_CATALOG");
  CHECK(default_catalog_path("fallback.jsonl") == "fallback.jsonl");
  setenv("SELFDUAL_CATALOG", "/tmp/env_catalog.jsonl", 1);
  CHECK(default_catalog_path("fallback.jsonl") == "/tmp/env_catalog.jsonl");
  setenv("SELFDUAL_CATALOG", "", 1);
  CHECK(default_catalog_path("fallback.jsonl") == "fallback.jsonl");
  unsetenv("SELFDUAL_CATALOG");

  std::string ts = utc_timestamp();
  REQUIRE(ts.size() == 20);
  CHECK(ts[4] == '-');
  CHECK(ts[7] == '-');
  CHECK(ts[10] == 'T');
  CHECK(ts[13] == ':');
  CHECK(ts[16] == ':');
  CHECK(ts.back() == 'Z');
}
