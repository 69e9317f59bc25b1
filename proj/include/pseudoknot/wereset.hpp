#pragma once

#include "pseudoknot/bracket.hpp"
#include "pseudoknot/diagram.hpp"

#include <cstdint>
#include <map>
#include <string>

#include "json.hpp"

namespace pk {

/// Weighted resolution set: each knot with the number of the 2^k resolutions
/// that produce it. Probabilities are count / 2^k.
struct WeReSet {
  int k = 0;
  bool is_signed = true;
  std::map<SignedKnotId, std::uint64_t> entries;

  std::uint64_t total() const;
  bool has_unknown() const;

  /// count / 2^k in lowest terms: (id, numerator, log2 of denominator).
  struct Reduced {
    std::map<SignedKnotId, std::uint64_t> numerators;
    std::map<SignedKnotId, int> exponents;
    friend bool operator==(const Reduced&, const Reduced&) = default;
  };
  Reduced reduced() const;

  friend bool operator==(const WeReSet&, const WeReSet&) = default;
};

/// Parallel enumeration: resolutions are tallied by invariant, then each
/// distinct invariant is identified once. jobs <= 0 uses the OpenMP default.
WeReSet were(const PseudoDiagram& d, bool is_signed, const KnotTable& table = KnotTable::bundled(), int jobs = 0);

/// Reference implementation: identify every resolution on its own, in order.
WeReSet were_serial(const PseudoDiagram& d, bool is_signed, const KnotTable& table = KnotTable::bundled());

WeReSet unsign(const WeReSet& s);
/// Equality of reduced probabilities. Throws DomainError on mixed signedness.
bool were_equal(const WeReSet& a, const WeReSet& b);
WeReSet mirror_were(const WeReSet& s);

/// The signed set equals its mirror. Necessary for amphicheirality, not sufficient.
bool amphicheiral_necessary(const PseudoDiagram& d, const KnotTable& table = KnotTable::bundled());

/// Text of the reduced probabilities; equal keys iff were_equal (same signedness).
std::string canonical_key(const WeReSet& s);

/// "{(0_1,3),(+3_1,1)} / 2^2"
std::string render_paper(const WeReSet& s);
/// "{(0_1,3/4),(+3_1,1/4)}"
std::string render_fractions(const WeReSet& s);
nlohmann::json to_json(const WeReSet& s, const std::string& symbol);
WeReSet were_from_json(const nlohmann::json& j, const KnotTable& table = KnotTable::bundled());

/// Parses an id rendered by SignedKnotId::to_string (not Unknown ones).
SignedKnotId parse_id(const std::string& text, const KnotTable& table = KnotTable::bundled());
/// Parses render_paper output ("/ 2^k" may be omitted when k = 0).
WeReSet parse_paper(const std::string& text, bool is_signed, const KnotTable& table = KnotTable::bundled());

} // namespace pk
