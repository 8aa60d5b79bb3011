#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "selfdual/gf.hpp"

namespace selfdual {

inline constexpr const char* kEngineVersion = "0.1.0";

struct CatalogKey {
  std::uint64_t p = 0;
  std::uint64_t s = 0;
  std::uint64_t n = 0;
  int a = 1;

  friend bool operator==(const CatalogKey&, const CatalogKey&) = default;
  friend auto operator<=>(const CatalogKey&, const CatalogKey&) = default;
};

// One classification result. The timestamp is provenance only: two runs over
// the same key must agree on every other field, byte for byte.
struct CatalogRecord {
  CatalogKey key;
  bool exists = false;
  std::uint64_t count = 0;
  bool generators_complete = false;      // generators lists all `count` codes
  std::vector<std::string> generators;   // textual polynomial format
  std::uint64_t pairing_self = 0;        // self-reciprocal factor classes
  std::uint64_t pairing_mirror = 0;      // mirror pairs
  bool oracle_checked = false;
  std::string engine_version;
  std::string timestamp;                 // ISO-8601 UTC; excluded from identity
};

// Canonical JSON of key + result (no provenance): the comparison unit for
// idempotence checks.
std::string record_identity(const CatalogRecord& rec);

// Single-line canonical JSON: {"key":…,"result":…,"provenance":…}.
std::string record_to_json_line(const CatalogRecord& rec);

// Parses one catalog line; any defect reports `line_number` in the error.
CatalogRecord record_from_json_line(const std::string& line, std::size_t line_number);

// Classifies one instance: existence, count, pairing shape, and — when the
// census is small enough to materialize — the full generator list. With
// `verify`, cross-checks against the brute-force oracle when in range and
// reports a contradiction through `oracle_disagreed`.
CatalogRecord classify_instance(const FieldPtr& field, std::uint64_t n, int a,
                                bool verify, bool* oracle_disagreed = nullptr);

// JSON-lines store deduplicated on key; loaded records win over re-runs, so
// repeating a sweep leaves the file byte-identical.
class Catalog {
 public:
  Catalog() = default;

  // Missing file loads as an empty catalog; defective lines throw with their
  // 1-based line number.
  static Catalog load(const std::string& path);

  bool contains(const CatalogKey& key) const;

  // Appends when the key is new; returns false (keeping the stored record
  // untouched) when it is already present.
  bool upsert(CatalogRecord rec);

  // Rewrites the file: UTF-8, LF line endings, one record per line.
  void save(const std::string& path) const;

  const std::vector<CatalogRecord>& records() const { return records_; }

 private:
  std::vector<CatalogRecord> records_;
  std::map<CatalogKey, std::size_t> index_;
};

// $SELFDUAL_CATALOG when set and nonempty, else `fallback`.
std::string default_catalog_path(const std::string& fallback);

std::string utc_timestamp();  // e.g. "2026-01-05T12:00:00Z"

}  // namespace selfdual
