#pragma once

// Text formats and the JSON classification catalog.
//
// Matrix block:           HzCode file:            Code list:
//   p n k                   ring n                  <matrix block>
//   <k rows of digits>      <binary block>          <blank line>
//   <blank line or EOF>     <ternary block>         <matrix block> ...
//
// Lines starting with '#' are ignored everywhere.

#include "hz/classify.hpp"
#include "hz/code.hpp"
#include "hz/gf.hpp"

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hz {

inline constexpr std::string_view kToolVersion = "0.1.0";

std::string format_matrix(const LinearCode& code);
/// Throws Error(ParseError).
LinearCode parse_matrix(std::string_view text);
std::vector<LinearCode> parse_code_list(std::string_view text);
std::string format_code_list(std::span<const LinearCode> codes);

std::string format_hz_code(const HzCode& code);
/// Throws Error(ParseError), Error(OddLength) or Error(LengthMismatch).
HzCode parse_hz_code(std::string_view text);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

/// Digest of a component list, taken over its canonical text form.
std::string list_digest(std::span<const LinearCode> codes);

struct CatalogMeta {
  RingId ring = RingId::H23;
  std::size_t n = 0;
  Target target = Target::SO;
  std::string tool_version{kToolVersion};
  std::string binary_digest;
  std::string ternary_digest;
  std::string generated_at;  // optional, excluded from body_digest
};

struct CatalogRecord {
  ClassificationRecord record;
  LinearCode ca;  // list entries before permutation
  LinearCode cb;
  LinearCode permuted; // sigma applied to the moved component (cb over H23, ca over H32)
};

struct CatalogSummary {
  std::size_t total = 0;
  std::map<std::string, std::size_t> flag_counts;  // keys SO SD QSD nice LCD
  std::vector<PairSummary> pairs;

  friend bool operator==(const CatalogSummary&, const CatalogSummary&) = default;
};

struct Catalog {
  CatalogMeta meta;
  std::vector<CatalogRecord> records;
  CatalogSummary summary;
};

Catalog make_catalog(RingId ring, std::size_t n, Target target,
                     std::span<const LinearCode> binary, std::span<const LinearCode> ternary,
                     const Classification& result);

CatalogSummary tally(std::span<const CatalogRecord> records, std::vector<PairSummary> pairs);

/// Serialized catalog; identical inputs give identical bytes.
std::string to_json(const Catalog& catalog);
/// Throws Error(ParseError).
Catalog catalog_from_json(std::string_view text);

/// Recomputes summary tallies and, when lists are given, their digests.
/// Returns a list of problems, empty when consistent.
std::vector<std::string> validate_catalog(const Catalog& catalog,
                                          std::span<const LinearCode> binary = {},
                                          std::span<const LinearCode> ternary = {});

/// Writes to a sibling temporary file and renames it over path.
void write_file_atomic(const std::string& path, std::string_view contents);
std::string read_file(const std::string& path);

}  // namespace hz
