#pragma once

#include "pseudoknot/bracket.hpp"
#include "pseudoknot/wereset.hpp"

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace pk {

struct CensusEntry {
  std::string id;      // "3_1.2"
  std::string source;  // "3_1"
  int crossing_number = 0;
  std::string symbol;  // concise Conway symbol
  WeReSet were;        // signed
  WeReSet were_unsigned;
};

/// What makes two substitutions the same census entry.
enum class DedupeKey {
  Unsigned,          // unsigned WeRe-sets agree
  SignedUpToMirror,  // signed sets agree, or one agrees with the mirror of the other
};

struct CensusOptions {
  int jobs = 0;
  DedupeKey dedupe = DedupeKey::Unsigned;
  /// Required for max_n >= 7.
  bool allow_large = false;
  /// Called with each source knot name as it starts.
  std::function<void(const std::string&)> progress;
};

/// Pseudoknots from every nonempty precrossing substitution into the table's
/// diagrams of knots with crossing number <= max_n, deduplicated per opts.dedupe.
/// Within a source knot, symbols with more precrossings in earlier twists come first.
std::vector<CensusEntry> census(int max_n, const KnotTable& table = KnotTable::bundled(), const CensusOptions& opts = {});

enum class EmitFormat { Paper, Json };
EmitFormat parse_format(const std::string& name);

std::string emit(const std::vector<CensusEntry>& entries, EmitFormat format);
nlohmann::json entry_json(const CensusEntry& e);

/// Writes census_n{N}.json for each crossing number and index.json into dir.
void persist(const std::string& dir, const std::vector<CensusEntry>& entries, int max_n);

struct StoreMatch {
  std::string id;
  std::string symbol;
  bool mirrored = false;  // matched the mirror image of the query
};

/// Entries whose WeRe-set equals w (signed: up to mirror). Throws DomainError if dir holds no store.
std::vector<StoreMatch> lookup_by_were(const std::string& dir, const WeReSet& w);
/// Largest crossing number covered by the store.
int store_max_n(const std::string& dir);

} // namespace pk
