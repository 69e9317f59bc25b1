#include "pseudoknot/pseudoinv.hpp"

#include "pseudoknot/errors.hpp"
#include "pseudoknot/wereset.hpp"

#include <bit>
#include <omp.h>
#include <vector>

namespace pk {

int AssignmentMask::size() const { return std::popcount(chosen); }

std::string AssignmentMask::describe(const PseudoDiagram& d) const {
  std::string out = "{";
  for (std::size_t j = 0; j < d.pre_ids().size(); ++j) {
    if (!((chosen >> j) & 1u))
      continue;
    if (out.size() > 1)
      out += ", ";
    out += "c" + std::to_string(d.pre_ids()[j]) + ((signs >> j) & 1u ? ":+" : ":-");
  }
  return out + "}";
}

PseudoDiagram AssignmentMask::apply(const PseudoDiagram& d) const {
  std::vector<CrossingState> states = d.states();
  for (std::size_t j = 0; j < d.pre_ids().size(); ++j) {
    if ((chosen >> j) & 1u) {
      int c = d.pre_ids()[j];
      states[static_cast<std::size_t>(c)] = d.state_for_sign(c, (signs >> j) & 1u);
    }
  }
  return d.with_states(std::move(states));
}

namespace {

/// unknotted[m] for every full resolution m.
std::vector<char> unknotted_resolutions(const PseudoDiagram& d, int jobs) {
  if (d.component_count() != 1)
    throw DomainError("diagram has " + std::to_string(d.component_count()) + " components; only knots are supported");
  if (d.pre_count() > 24)
    throw DomainError("too many precrossings for an exhaustive search");
  const std::int64_t total = std::int64_t{1} << d.pre_count();
  std::vector<char> out(static_cast<std::size_t>(total));
  const LaurentPoly one = LaurentPoly::one();
#pragma omp parallel for schedule(dynamic, 16) num_threads(jobs > 0 ? jobs : omp_get_max_threads())
  for (std::int64_t m = 0; m < total; ++m)
    out[static_cast<std::size_t>(m)] =
        invariant_f(d.with_states(resolved_states(d, static_cast<std::uint64_t>(m)))) == one;
  return out;
}

/// Smallest mask whose completions all satisfy want(unknotted) == true.
std::optional<MaskSearchResult> search(const PseudoDiagram& d, bool want_unknot, int jobs) {
  const std::vector<char> unknotted = unknotted_resolutions(d, jobs);
  const int k = d.pre_count();
  const std::uint64_t all = (std::uint64_t{1} << k) - 1;
  for (int size = 0; size <= k; ++size) {
    // Masks of one size in increasing numeric order.
    for (std::uint64_t chosen = 0; chosen <= all; ++chosen) {
      if (std::popcount(chosen) != size)
        continue;
      const std::uint64_t free = all & ~chosen;
      // Enumerate sign patterns as submasks of `chosen`.
      std::uint64_t signs = 0;
      do {
        bool ok = true;
        std::uint64_t rest = 0;
        do {
          if ((unknotted[signs | rest] != 0) != want_unknot) {
            ok = false;
            break;
          }
          rest = (rest - free) & free;
        } while (rest != 0);
        if (ok)
          return MaskSearchResult{size, {chosen, signs}};
        signs = (signs - chosen) & chosen;
      } while (signs != 0);
    }
  }
  return std::nullopt;
}

} // namespace

std::optional<MaskSearchResult> trivializing_number(const PseudoDiagram& d, int jobs) {
  return search(d, true, jobs);
}

std::optional<MaskSearchResult> knotting_number(const PseudoDiagram& d, int jobs) {
  return search(d, false, jobs);
}

bool homotopy_nontrivial_cert(const PseudoDiagram& d) {
  GaussDiagram g = gauss(d);
  for (std::size_t i = 0; i < g.chords.size(); ++i) {
    if (g.chords[i].label != Label::Pre)
      continue;
    for (std::size_t j = i + 1; j < g.chords.size(); ++j)
      if (g.chords[j].label == Label::Pre && g.intersect(i, j))
        return true;
  }
  return false;
}

namespace {

/// Make the passage at `position` the over passage of its crossing.
int lift(std::vector<CrossingState>& states, const PseudoDiagram& d, int position) {
  const Passage& p = d.traversal()[static_cast<std::size_t>(position)];
  CrossingState want = p.entry_slot % 2 == 0 ? CrossingState::Over02 : CrossingState::Over13;
  CrossingState& s = states[static_cast<std::size_t>(p.crossing)];
  int changed = s != want && s != CrossingState::Pre;
  s = want;
  return changed;
}

/// Traversal positions from `first` onwards, wrapping, `count` of them.
std::vector<int> walk(int first, int count, int n, bool forward) {
  std::vector<int> out;
  for (int i = 0; i < count; ++i)
    out.push_back(((forward ? first + i : first - i) % n + n) % n);
  return out;
}

} // namespace

Descended descending_resolution(const PseudoDiagram& d, int basepoint, bool forward) {
  if (d.pre_count() != 0)
    throw DomainError("descending_resolution: diagram has precrossings");
  if (d.component_count() != 1)
    throw DomainError("descending_resolution: diagram is not a knot");
  const int n = d.edge_count();
  if (n == 0)
    return {d, 0};
  if (basepoint < 0 || basepoint >= n)
    throw DomainError("descending_resolution: no edge " + std::to_string(basepoint));
  // Edge b runs from passage b to passage b+1.
  const int first = forward ? basepoint + 1 : basepoint;
  std::vector<CrossingState> states = d.states();
  std::vector<char> visited(static_cast<std::size_t>(d.crossing_count()), 0);
  int changes = 0;
  for (int pos : walk(first, n, n, forward)) {
    int c = d.traversal()[static_cast<std::size_t>(pos)].crossing;
    if (visited[static_cast<std::size_t>(c)])
      continue;
    visited[static_cast<std::size_t>(c)] = 1;
    changes += lift(states, d, pos);
  }
  return {d.with_states(std::move(states)), changes};
}

Descended unknot_single_precrossing(const PseudoDiagram& d, const KnotTable& table) {
  if (d.pre_count() != 1)
    throw DomainError("unknot_single_precrossing: expects exactly one precrossing");
  if (d.component_count() != 1)
    throw DomainError("unknot_single_precrossing: diagram is not a knot");
  const int n = d.edge_count();
  const int pre = d.pre_ids().front();
  auto [a, b] = d.passages_of(pre);
  // The basepoint sits just before passage a; loop A runs a+1 .. b-1, loop B the rest.
  std::vector<int> loop_a = walk(a + 1, b - a - 1, n, true);
  std::vector<int> loop_b = walk(b + 1, n - (b - a) - 1, n, true);
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  for (int p : loop_a)
    side[static_cast<std::size_t>(p)] = 0;
  for (int p : loop_b)
    side[static_cast<std::size_t>(p)] = 1;

  std::vector<CrossingState> states = d.states();
  std::vector<char> visited(static_cast<std::size_t>(d.crossing_count()), 0);
  visited[static_cast<std::size_t>(pre)] = 1;
  int changes = 0;
  for (const auto* loop : {&loop_a, &loop_b}) {
    for (int pos : *loop) {
      int c = d.traversal()[static_cast<std::size_t>(pos)].crossing;
      if (visited[static_cast<std::size_t>(c)])
        continue;
      visited[static_cast<std::size_t>(c)] = 1;
      // First visit: within loop A this is the descending rule; a crossing
      // shared by both loops is met from A first, so A goes over B.
      changes += lift(states, d, pos);
    }
  }
  Descended out{d.with_states(std::move(states)), changes};
  WeReSet s = were(out.diagram, false, table);
  if (s.entries.size() != 1 || !s.entries.begin()->first.is_unknot())
    throw DomainError("unknot_single_precrossing: construction left a knotted resolution");
  return out;
}

} // namespace pk
