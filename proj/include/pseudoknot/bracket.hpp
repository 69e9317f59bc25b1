#pragma once

#include "pseudoknot/diagram.hpp"
#include "pseudoknot/laurent.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace pk {

enum class ContractionOrder { Greedy, Reversed };

/// Kauffman bracket by sweeping crossings and memoizing the pairing of the
/// open strand ends. Normalized so the crossingless circle has bracket 1.
LaurentPoly kauffman_bracket(const PseudoDiagram& d, ContractionOrder order = ContractionOrder::Greedy);

/// Plain 2^n state sum. Only for testing; n <= 20.
LaurentPoly kauffman_bracket_naive(const PseudoDiagram& d);

/// (-A^3)^{-w} <D>, an isotopy invariant. Requires a classical knot diagram.
LaurentPoly invariant_f(const PseudoDiagram& d);

/// A named prime knot with handedness. sign is +1 / -1, or 0 when the knot is
/// amphicheiral (or the id has been unsigned).
struct PrimeFactor {
  std::string name;
  int crossing_number = 0;
  int rank = 0;  // position in the table
  int sign = 0;

  std::string to_string() const;
  friend bool operator==(const PrimeFactor& a, const PrimeFactor& b) {
    return a.rank == b.rank && a.sign == b.sign;
  }
  friend std::strong_ordering operator<=>(const PrimeFactor& a, const PrimeFactor& b) {
    if (auto c = a.crossing_number <=> b.crossing_number; c != 0)
      return c;
    if (auto c = a.rank <=> b.rank; c != 0)
      return c;
    return b.sign <=> a.sign;  // + before -
  }
};

struct SignedKnotId {
  enum class Kind { Unknot, Prime, Composite, Unknown };

  Kind kind = Kind::Unknot;
  std::vector<PrimeFactor> factors;  // one for Prime, sorted for Composite
  LaurentPoly invariant;             // Unknown only
  int crossing_bound = 0;            // Unknown only; not part of equality

  static SignedKnotId unknot() { return {}; }
  static SignedKnotId prime(PrimeFactor p);
  static SignedKnotId composite(std::vector<PrimeFactor> parts);
  static SignedKnotId unknown(LaurentPoly f, int bound);

  bool is_unknot() const { return kind == Kind::Unknot; }
  bool is_unknown() const { return kind == Kind::Unknown; }

  /// "0_1", "+3_1", "4_1", "+3_1#-3_1", "UNKNOWN[...]".
  std::string to_string() const;

  SignedKnotId mirrored() const;
  /// Forgets handedness; Unknown ids are replaced by a mirror-invariant representative.
  SignedKnotId unsigned_id() const;

  friend bool operator==(const SignedKnotId& a, const SignedKnotId& b) {
    return a.kind == b.kind && a.factors == b.factors && a.invariant == b.invariant;
  }
  friend bool operator<(const SignedKnotId& a, const SignedKnotId& b);
};

struct KnotEntry {
  std::string name;
  std::string symbol;
  int crossing_number = 0;
  bool amphicheiral = false;
  /// Chiral, but the invariant cannot tell the two handednesses apart.
  bool ambiguous_sign = false;
  LaurentPoly invariant;  // of the diagram built from `symbol`, which defines the + handedness
};

/// Prime knot table indexed by invariant_f of every entry and its mirror.
class KnotTable {
public:
  /// Reads `name<TAB>symbol<TAB>crossing_number<TAB>amphicheiral` lines; '#' starts a comment.
  /// Throws DomainError on malformed lines or invariant collisions.
  static KnotTable load(const std::string& path);
  /// Path from PK_KNOT_TABLE, else the table installed with the library.
  static std::string default_path();
  /// Process-wide instance loaded from default_path() on first use.
  static const KnotTable& bundled();

  const std::vector<KnotEntry>& entries() const noexcept { return entries_; }
  const KnotEntry* find(const std::string& name) const;

  /// Identification of a classical knot diagram.
  SignedKnotId identify(const PseudoDiagram& d) const;
  /// Same, from a precomputed invariant and crossing bound.
  SignedKnotId identify_invariant(const LaurentPoly& f, int crossing_bound) const;

private:
  struct Hit {
    int entry;
    int sign;
  };

  PrimeFactor factor(const Hit& h) const;
  std::optional<PrimeFactor> lookup_prime(const LaurentPoly& f, int bound) const;
  bool factorize(const LaurentPoly& f, int bound, int parts, std::size_t first, std::vector<PrimeFactor>& out) const;

  std::vector<KnotEntry> entries_;
  std::unordered_map<LaurentPoly, Hit, LaurentPolyHash> index_;
  std::vector<std::pair<Hit, LaurentPoly>> signed_;  // every entry and its distinct mirror
  std::map<std::string, int> by_name_;
};

} // namespace pk
