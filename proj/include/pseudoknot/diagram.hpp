#pragma once

#include "pseudoknot/conway.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace pk {

/// Over/under information at a crossing. Slots 0..3 are the four edge-ends
/// in counterclockwise order; strands pass 0-2 and 1-3.
enum class CrossingState : std::uint8_t { Pre, Over02, Over13 };

/// Oriented crossing sign (right-hand rule), or Pre for a precrossing.
enum class Label { Positive, Negative, Pre };

char label_char(Label l);

/// One pass of the traversal through a crossing.
struct Passage {
  int crossing;
  int entry_slot;
};

/// A 4-valent planar map with labelled crossings.
///
/// The map is stored as a perfect matching on ports (port = 4 * crossing +
/// slot), which together with the counterclockwise slot order is a rotation
/// system. Diagrams are immutable; the traversal is computed once on
/// construction and fixes orientation, Gauss code and edge numbering.
class PseudoDiagram {
public:
  /// The crossingless round unknot.
  PseudoDiagram();

  /// Throws DomainError if `match` is not a fixed-point-free involution or
  /// the underlying map is disconnected.
  static PseudoDiagram from_ports(std::vector<int> match, std::vector<CrossingState> states);

  int crossing_count() const noexcept { return static_cast<int>(states_.size()); }
  int pre_count() const noexcept { return static_cast<int>(pre_ids_.size()); }
  int component_count() const noexcept { return components_; }

  CrossingState state(int c) const { return states_.at(static_cast<std::size_t>(c)); }
  const std::vector<CrossingState>& states() const noexcept { return states_; }
  int partner(int port) const { return match_.at(static_cast<std::size_t>(port)); }
  const std::vector<int>& ports() const noexcept { return match_; }

  /// Precrossing ids in ascending order; bit j of a resolution mask refers to pre_ids()[j].
  const std::vector<int>& pre_ids() const noexcept { return pre_ids_; }

  /// All passages, component by component; component i starts at component_starts()[i].
  const std::vector<Passage>& traversal() const noexcept { return traversal_; }
  const std::vector<int>& component_starts() const noexcept { return component_starts_; }

  /// Traversal positions (indices into traversal()) of the two passes through c.
  std::pair<int, int> passages_of(int c) const;

  Label label(int c) const;
  /// +1 / -1 for a classical crossing; throws for a precrossing.
  int sign(int c) const;
  /// The state that resolves crossing c with the given oriented sign.
  CrossingState state_for_sign(int c, bool positive) const;
  bool is_over_passage(int position) const;

  /// Edge j leaves passage j. Returns the edge attached at (c, slot).
  int edge_at(int c, int slot) const;
  int edge_count() const noexcept { return static_cast<int>(traversal_.size()); }
  /// Exit port of passage `edge` (the dart that starts the edge).
  int edge_exit_port(int edge) const;

  PseudoDiagram with_states(std::vector<CrossingState> states) const;

  /// `id label e1 e2 e3 e4` per crossing, slots in counterclockwise order.
  std::string dump() const;

  bool is_planar() const;

  friend bool operator==(const PseudoDiagram& a, const PseudoDiagram& b) {
    return a.match_ == b.match_ && a.states_ == b.states_;
  }

private:
  void index();

  std::vector<int> match_;
  std::vector<CrossingState> states_;
  std::vector<int> pre_ids_;
  std::vector<Passage> traversal_;
  std::vector<int> component_starts_;
  std::vector<int> position_of_entry_;  // entry port -> traversal position, -1 for exits
  std::vector<int> position_of_exit_;
  int components_ = 1;
};

/// A choice of sign at every precrossing.
struct Resolution {
  std::uint64_t assignment = 0;  // bit j set: pre_ids()[j] resolved Positive
  PseudoDiagram diagram;
};

Resolution resolve(const PseudoDiagram& d, std::uint64_t assignment);
/// State vector of a resolution without building the diagram.
std::vector<CrossingState> resolved_states(const PseudoDiagram& d, std::uint64_t assignment);

/// All 2^k resolutions in ascending assignment order.
class ResolutionRange {
public:
  class iterator {
  public:
    using value_type = Resolution;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(const PseudoDiagram* d, std::uint64_t at) : d_(d), at_(at) {}
    Resolution operator*() const { return resolve(*d_, at_); }
    iterator& operator++() {
      ++at_;
      return *this;
    }
    iterator operator++(int) {
      auto tmp = *this;
      ++at_;
      return tmp;
    }
    bool operator==(const iterator& o) const { return at_ == o.at_; }

  private:
    const PseudoDiagram* d_ = nullptr;
    std::uint64_t at_ = 0;
  };

  explicit ResolutionRange(const PseudoDiagram& d) : d_(&d) {}
  iterator begin() const { return {d_, 0}; }
  iterator end() const { return {d_, std::uint64_t{1} << d_->pre_count()}; }
  std::uint64_t size() const { return std::uint64_t{1} << d_->pre_count(); }

private:
  const PseudoDiagram* d_;
};

inline ResolutionRange resolutions(const PseudoDiagram& d) { return ResolutionRange(d); }

/// Standard diagram of a symbol: numerator closure of the Conway product,
/// braid closure for braid words, band-joined summands for `#`.
PseudoDiagram build(const ConwayAst& ast);
PseudoDiagram build(std::string_view symbol);

/// Band-join along edge 0 of each diagram.
PseudoDiagram connected_sum(const PseudoDiagram& a, const PseudoDiagram& b);

PseudoDiagram mirror(const PseudoDiagram& d);

/// Sum of crossing signs; requires k = 0.
int writhe(const PseudoDiagram& d);

struct Chord {
  int crossing;
  int first;   // traversal positions, first < second
  int second;
  Label label;
};

struct GaussDiagram {
  int points = 0;
  std::vector<Chord> chords;  // ordered by first endpoint
  bool intersect(std::size_t i, std::size_t j) const;
};

/// Requires a knot (one component).
GaussDiagram gauss(const PseudoDiagram& d);

std::set<int> nugatory_crossings(const PseudoDiagram& d);
bool is_potentially_alternating(const PseudoDiagram& d);

/// Faces as cyclic lists of darts (ports); the face lies to the left of each dart.
std::vector<std::vector<int>> faces(const PseudoDiagram& d);

/// Adds a one-crossing curl on `edge`.
PseudoDiagram insert_kink(const PseudoDiagram& d, int edge, CrossingState state);

/// Pushes the edge starting at dart `over_dart` across the edge starting at
/// `under_dart`, creating a bigon with two new crossings. Both darts must
/// bound the same face. States refer to the new crossings in the order the
/// pushed strand meets them; Over02 means the pushed strand is over.
PseudoDiagram insert_clasp(const PseudoDiagram& d, int over_dart, int under_dart, CrossingState first,
                           CrossingState second);

} // namespace pk
