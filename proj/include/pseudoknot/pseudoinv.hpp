#pragma once

#include "pseudoknot/bracket.hpp"
#include "pseudoknot/diagram.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace pk {

/// Partial resolution: bit j of `chosen` fixes pre_ids()[j], with sign
/// positive when bit j of `signs` is set.
struct AssignmentMask {
  std::uint64_t chosen = 0;
  std::uint64_t signs = 0;

  int size() const;
  /// e.g. "{c2:+, c5:-}" using crossing ids.
  std::string describe(const PseudoDiagram& d) const;
  /// d with the chosen precrossings resolved.
  PseudoDiagram apply(const PseudoDiagram& d) const;
};

struct MaskSearchResult {
  int number = 0;
  AssignmentMask witness;
};

/// Fewest precrossings to resolve so that every completion is the unknot.
std::optional<MaskSearchResult> trivializing_number(const PseudoDiagram& d, int jobs = 0);
/// Fewest precrossings to resolve so that every completion is knotted.
std::optional<MaskSearchResult> knotting_number(const PseudoDiagram& d, int jobs = 0);

/// Two intersecting prechords in the Gauss diagram: d is not homotopic to the unknot.
bool homotopy_nontrivial_cert(const PseudoDiagram& d);

struct Descended {
  PseudoDiagram diagram;
  int changes = 0;
};

/// Walk from `basepoint` (an edge) and make every crossing over on first visit.
Descended descending_resolution(const PseudoDiagram& d, int basepoint, bool forward = true);

/// One precrossing: the loop leaving the precrossing is lifted over the rest
/// and both loops are made descending, which leaves the precrossing nugatory.
/// Throws if the result has a knotted resolution.
Descended unknot_single_precrossing(const PseudoDiagram& d, const KnotTable& table = KnotTable::bundled());

} // namespace pk
