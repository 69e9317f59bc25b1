#include "pseudoknot/diagram.hpp"

#include "pseudoknot/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pk {

char label_char(Label l) {
  switch (l) {
  case Label::Positive: return '+';
  case Label::Negative: return '-';
  case Label::Pre: return 'i';
  }
  return '?';
}

namespace {

constexpr int kNone = -1;

int crossing_of(int port) { return port / 4; }
int slot_of(int port) { return port % 4; }
int opposite(int port) { return 4 * crossing_of(port) + (slot_of(port) + 2) % 4; }

CrossingState pair_state(int slot) { return slot % 2 == 0 ? CrossingState::Over02 : CrossingState::Over13; }

} // namespace

PseudoDiagram::PseudoDiagram() = default;

PseudoDiagram PseudoDiagram::from_ports(std::vector<int> match, std::vector<CrossingState> states) {
  if (match.size() != 4 * states.size())
    throw DomainError("diagram: port table size does not match crossing count");
  const int n = static_cast<int>(match.size());
  for (int p = 0; p < n; ++p) {
    int q = match[static_cast<std::size_t>(p)];
    if (q < 0 || q >= n || q == p || match[static_cast<std::size_t>(q)] != p)
      throw DomainError("diagram: port matching is not a perfect matching");
  }
  // Connectivity of the underlying map.
  if (!states.empty()) {
    std::vector<char> seen(states.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      for (int s = 0; s < 4; ++s) {
        int other = crossing_of(match[static_cast<std::size_t>(4 * c + s)]);
        if (!seen[static_cast<std::size_t>(other)]) {
          seen[static_cast<std::size_t>(other)] = 1;
          stack.push_back(other);
        }
      }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw DomainError("diagram: closure is disconnected");
  }
  PseudoDiagram d;
  d.match_ = std::move(match);
  d.states_ = std::move(states);
  d.index();
  return d;
}

void PseudoDiagram::index() {
  pre_ids_.clear();
  for (int c = 0; c < crossing_count(); ++c)
    if (states_[static_cast<std::size_t>(c)] == CrossingState::Pre)
      pre_ids_.push_back(c);

  traversal_.clear();
  component_starts_.clear();
  const std::size_t nports = match_.size();
  position_of_entry_.assign(nports, kNone);
  position_of_exit_.assign(nports, kNone);
  if (nports == 0) {
    components_ = 1;
    return;
  }
  std::vector<char> visited(nports, 0);
  components_ = 0;
  for (std::size_t start = 0; start < nports; ++start) {
    if (visited[start])
      continue;
    ++components_;
    component_starts_.push_back(static_cast<int>(traversal_.size()));
    int entry = static_cast<int>(start);
    do {
      int pos = static_cast<int>(traversal_.size());
      traversal_.push_back({crossing_of(entry), slot_of(entry)});
      int exit = opposite(entry);
      visited[static_cast<std::size_t>(entry)] = visited[static_cast<std::size_t>(exit)] = 1;
      position_of_entry_[static_cast<std::size_t>(entry)] = pos;
      position_of_exit_[static_cast<std::size_t>(exit)] = pos;
      entry = match_[static_cast<std::size_t>(exit)];
    } while (entry != static_cast<int>(start));
  }
}

std::pair<int, int> PseudoDiagram::passages_of(int c) const {
  int a = kNone, b = kNone;
  for (int s = 0; s < 4; ++s) {
    int pos = position_of_entry_[static_cast<std::size_t>(4 * c + s)];
    if (pos == kNone)
      continue;
    (a == kNone ? a : b) = pos;
  }
  if (a > b)
    std::swap(a, b);
  return {a, b};
}

int PseudoDiagram::sign(int c) const {
  CrossingState st = state(c);
  if (st == CrossingState::Pre)
    throw DomainError("sign: crossing " + std::to_string(c) + " is a precrossing");
  auto [a, b] = passages_of(c);
  int ea = traversal_[static_cast<std::size_t>(a)].entry_slot;
  int eb = traversal_[static_cast<std::size_t>(b)].entry_slot;
  int over = pair_state(ea) == st ? ea : eb;
  int under = over == ea ? eb : ea;
  return under == (over + 1) % 4 ? 1 : -1;
}

Label PseudoDiagram::label(int c) const {
  if (state(c) == CrossingState::Pre)
    return Label::Pre;
  return sign(c) > 0 ? Label::Positive : Label::Negative;
}

CrossingState PseudoDiagram::state_for_sign(int c, bool positive) const {
  auto [a, b] = passages_of(c);
  int ea = traversal_[static_cast<std::size_t>(a)].entry_slot;
  int eb = traversal_[static_cast<std::size_t>(b)].entry_slot;
  bool a_over_is_positive = eb == (ea + 1) % 4;
  return a_over_is_positive == positive ? pair_state(ea) : pair_state(eb);
}

bool PseudoDiagram::is_over_passage(int position) const {
  const Passage& p = traversal_.at(static_cast<std::size_t>(position));
  return state(p.crossing) == pair_state(p.entry_slot);
}

int PseudoDiagram::edge_at(int c, int slot) const {
  int port = 4 * c + slot;
  int pos = position_of_exit_[static_cast<std::size_t>(port)];
  if (pos != kNone)
    return pos;
  pos = position_of_entry_[static_cast<std::size_t>(port)];
  auto it = std::upper_bound(component_starts_.begin(), component_starts_.end(), pos);
  int begin = *(it - 1);
  int end = it == component_starts_.end() ? static_cast<int>(traversal_.size()) : *it;
  return pos == begin ? end - 1 : pos - 1;
}

int PseudoDiagram::edge_exit_port(int edge) const {
  const Passage& p = traversal_.at(static_cast<std::size_t>(edge));
  return 4 * p.crossing + (p.entry_slot + 2) % 4;
}

PseudoDiagram PseudoDiagram::with_states(std::vector<CrossingState> states) const {
  if (states.size() != states_.size())
    throw DomainError("with_states: wrong number of crossings");
  PseudoDiagram d = *this;
  d.states_ = std::move(states);
  d.pre_ids_.clear();
  for (int c = 0; c < d.crossing_count(); ++c)
    if (d.states_[static_cast<std::size_t>(c)] == CrossingState::Pre)
      d.pre_ids_.push_back(c);
  return d;
}

std::string PseudoDiagram::dump() const {
  std::ostringstream out;
  for (int c = 0; c < crossing_count(); ++c) {
    out << c << ' ' << label_char(label(c));
    for (int s = 0; s < 4; ++s)
      out << ' ' << edge_at(c, s);
    out << '\n';
  }
  return out.str();
}

std::vector<std::vector<int>> faces(const PseudoDiagram& d) {
  const auto& match = d.ports();
  std::vector<char> seen(match.size(), 0);
  std::vector<std::vector<int>> out;
  for (std::size_t start = 0; start < match.size(); ++start) {
    if (seen[start])
      continue;
    std::vector<int> face;
    int dart = static_cast<int>(start);
    while (!seen[static_cast<std::size_t>(dart)]) {
      seen[static_cast<std::size_t>(dart)] = 1;
      face.push_back(dart);
      int q = match[static_cast<std::size_t>(dart)];
      dart = 4 * crossing_of(q) + (slot_of(q) + 3) % 4;
    }
    out.push_back(std::move(face));
  }
  return out;
}

bool PseudoDiagram::is_planar() const {
  if (states_.empty())
    return true;
  return static_cast<int>(faces(*this).size()) == crossing_count() + 2;
}

std::vector<CrossingState> resolved_states(const PseudoDiagram& d, std::uint64_t assignment) {
  std::vector<CrossingState> states = d.states();
  const auto& pre = d.pre_ids();
  for (std::size_t j = 0; j < pre.size(); ++j)
    states[static_cast<std::size_t>(pre[j])] = d.state_for_sign(pre[j], (assignment >> j) & 1u);
  return states;
}

Resolution resolve(const PseudoDiagram& d, std::uint64_t assignment) {
  if (d.pre_count() < 64 && (assignment >> d.pre_count()) != 0)
    throw DomainError("resolve: assignment has bits beyond the precrossing count");
  return {assignment, d.with_states(resolved_states(d, assignment))};
}

PseudoDiagram mirror(const PseudoDiagram& d) {
  std::vector<CrossingState> states = d.states();
  for (auto& s : states) {
    if (s == CrossingState::Over02)
      s = CrossingState::Over13;
    else if (s == CrossingState::Over13)
      s = CrossingState::Over02;
  }
  return d.with_states(std::move(states));
}

int writhe(const PseudoDiagram& d) {
  if (d.pre_count() != 0)
    throw DomainError("writhe: diagram has precrossings");
  int w = 0;
  for (int c = 0; c < d.crossing_count(); ++c)
    w += d.sign(c);
  return w;
}

bool GaussDiagram::intersect(std::size_t i, std::size_t j) const {
  const Chord& a = chords.at(i);
  const Chord& b = chords.at(j);
  bool b1_inside = a.first < b.first && b.first < a.second;
  bool b2_inside = a.first < b.second && b.second < a.second;
  return b1_inside != b2_inside;
}

GaussDiagram gauss(const PseudoDiagram& d) {
  if (d.component_count() != 1)
    throw DomainError("gauss: diagram has " + std::to_string(d.component_count()) + " components");
  GaussDiagram g;
  g.points = d.edge_count();
  for (int c = 0; c < d.crossing_count(); ++c) {
    auto [a, b] = d.passages_of(c);
    g.chords.push_back({c, a, b, d.label(c)});
  }
  std::sort(g.chords.begin(), g.chords.end(), [](const Chord& x, const Chord& y) { return x.first < y.first; });
  return g;
}

std::set<int> nugatory_crossings(const PseudoDiagram& d) {
  GaussDiagram g = gauss(d);
  std::set<int> out;
  for (std::size_t i = 0; i < g.chords.size(); ++i) {
    bool isolated = true;
    for (std::size_t j = 0; j < g.chords.size() && isolated; ++j)
      if (i != j && g.intersect(i, j))
        isolated = false;
    if (isolated)
      out.insert(g.chords[i].crossing);
  }
  return out;
}

bool is_potentially_alternating(const PseudoDiagram& d) {
  if (!nugatory_crossings(d).empty())
    return false;
  // In an alternating diagram the over passages all sit at positions of one parity.
  int parity = -1;
  for (int pos = 0; pos < d.edge_count(); ++pos) {
    const Passage& p = d.traversal()[static_cast<std::size_t>(pos)];
    if (d.state(p.crossing) == CrossingState::Pre || !d.is_over_passage(pos))
      continue;
    if (parity == -1)
      parity = pos % 2;
    else if (parity != pos % 2)
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Construction

namespace {

/// Four-ended tangle under construction. Unmatched ports hold kNone and are
/// exactly the four corner ports.
struct Tangle {
  std::vector<int> match;
  std::vector<CrossingState> states;
  int nw = kNone, ne = kNone, sw = kNone, se = kNone;

  int crossings() const { return static_cast<int>(states.size()); }
};

void link(std::vector<int>& match, int a, int b) {
  match[static_cast<std::size_t>(a)] = b;
  match[static_cast<std::size_t>(b)] = a;
}

CrossingState tangle_state(Mark m) {
  // Elementary tangle [1] has its overstrand running NW-SE.
  switch (m) {
  case Mark::Positive: return CrossingState::Over13;
  case Mark::Negative: return CrossingState::Over02;
  case Mark::Pre: return CrossingState::Pre;
  }
  return CrossingState::Pre;
}

Tangle elementary(Mark m) {
  Tangle t;
  t.match.assign(4, kNone);
  t.states = {tangle_state(m)};
  // Slots counterclockwise from SW.
  t.sw = 0;
  t.se = 1;
  t.ne = 2;
  t.nw = 3;
  return t;
}

Tangle sum(const Tangle& left, const Tangle& right) {
  Tangle t;
  const int offset = 4 * left.crossings();
  t.match = left.match;
  for (int p : right.match)
    t.match.push_back(p == kNone ? kNone : p + offset);
  t.states = left.states;
  t.states.insert(t.states.end(), right.states.begin(), right.states.end());
  link(t.match, left.ne, right.nw + offset);
  link(t.match, left.se, right.sw + offset);
  t.nw = left.nw;
  t.sw = left.sw;
  t.ne = right.ne + offset;
  t.se = right.se + offset;
  return t;
}

/// Reflection in the NW-SE diagonal; keeps crossing information, inverts the fraction.
Tangle reflect(const Tangle& in) {
  auto remap = [](int p) {
    if (p == kNone)
      return kNone;
    int s = slot_of(p);
    if (s == 1 || s == 3)
      return 4 * crossing_of(p) + (4 - s);
    return p;
  };
  Tangle t;
  t.states = in.states;
  t.match.assign(in.match.size(), kNone);
  for (std::size_t p = 0; p < in.match.size(); ++p)
    t.match[static_cast<std::size_t>(remap(static_cast<int>(p)))] = remap(in.match[p]);
  t.nw = remap(in.nw);
  t.se = remap(in.se);
  t.sw = remap(in.ne);
  t.ne = remap(in.sw);
  return t;
}

Tangle twist_tangle(const Twist& tw) {
  if (tw.marks.empty())
    throw DomainError("build: empty twist");
  Tangle t = elementary(tw.marks.front());
  for (std::size_t i = 1; i < tw.marks.size(); ++i)
    t = sum(t, elementary(tw.marks[i]));
  return t;
}

PseudoDiagram numerator_closure(Tangle t) {
  link(t.match, t.nw, t.ne);
  link(t.match, t.sw, t.se);
  return PseudoDiagram::from_ports(std::move(t.match), std::move(t.states));
}

PseudoDiagram build_product(const Product& p) {
  if (p.factors.empty())
    throw DomainError("build: empty product");
  Tangle t = twist_tangle(p.factors.front());
  for (std::size_t i = 1; i < p.factors.size(); ++i)
    t = sum(reflect(t), twist_tangle(p.factors[i]));
  return numerator_closure(std::move(t));
}

PseudoDiagram build_braid(const BraidWord& w) {
  if (w.letters.empty())
    throw DomainError("build: empty braid word");
  const int strands = w.strands();
  const int n = static_cast<int>(w.letters.size());
  std::vector<int> match(static_cast<std::size_t>(4 * n), kNone);
  std::vector<CrossingState> states;
  std::vector<int> bottom(static_cast<std::size_t>(strands), kNone);
  std::vector<int> top(static_cast<std::size_t>(strands), kNone);
  for (int c = 0; c < n; ++c) {
    const auto& l = w.letters[static_cast<std::size_t>(c)];
    const auto j = static_cast<std::size_t>(l.generator - 1);
    // Upward strands: SW (slot 0) -> NE (slot 2), SE (slot 1) -> NW (slot 3).
    for (auto [pos, slot] : {std::pair{j, 0}, std::pair{j + 1, 1}}) {
      if (top[pos] == kNone)
        bottom[pos] = 4 * c + slot;
      else
        link(match, top[pos], 4 * c + slot);
    }
    top[j] = 4 * c + 3;
    top[j + 1] = 4 * c + 2;
    // With both strands oriented upward, SW-NE over is a positive crossing.
    states.push_back(l.mark == Mark::Pre        ? CrossingState::Pre
                     : l.mark == Mark::Positive ? CrossingState::Over02
                                                : CrossingState::Over13);
  }
  for (std::size_t j = 0; j < top.size(); ++j) {
    if (top[j] == kNone)
      throw DomainError("build: braid strand " + std::to_string(j + 1) + " has no crossings");
    link(match, top[j], bottom[j]);
  }
  return PseudoDiagram::from_ports(std::move(match), std::move(states));
}

} // namespace

PseudoDiagram connected_sum(const PseudoDiagram& a, const PseudoDiagram& b) {
  if (a.crossing_count() == 0)
    return b;
  if (b.crossing_count() == 0)
    return a;
  const int offset = 4 * a.crossing_count();
  std::vector<int> match = a.ports();
  for (int p : b.ports())
    match.push_back(p + offset);
  std::vector<CrossingState> states = a.states();
  states.insert(states.end(), b.states().begin(), b.states().end());
  int xa = a.edge_exit_port(0);
  int ya = a.partner(xa);
  int xb = b.edge_exit_port(0) + offset;
  int yb = b.partner(xb - offset) + offset;
  link(match, xa, yb);
  link(match, xb, ya);
  return PseudoDiagram::from_ports(std::move(match), std::move(states));
}

PseudoDiagram build(const ConwayAst& ast) {
  if (ast.summands.empty())
    throw DomainError("build: empty symbol");
  PseudoDiagram result;
  bool first = true;
  for (const auto& s : ast.summands) {
    PseudoDiagram part = std::holds_alternative<Product>(s) ? build_product(std::get<Product>(s))
                                                            : build_braid(std::get<BraidWord>(s));
    if (ast.summands.size() > 1 && part.component_count() != 1)
      throw DomainError("build: connected sum of a link summand");
    result = first ? std::move(part) : connected_sum(result, part);
    first = false;
  }
  return result;
}

PseudoDiagram build(std::string_view symbol) { return build(parse(symbol)); }

PseudoDiagram insert_kink(const PseudoDiagram& d, int edge, CrossingState state) {
  std::vector<int> match = d.ports();
  std::vector<CrossingState> states = d.states();
  const int k = 4 * d.crossing_count();
  match.resize(match.size() + 4, kNone);
  states.push_back(state);
  if (d.crossing_count() == 0) {
    link(match, k + 0, k + 1);
    link(match, k + 2, k + 3);
    return PseudoDiagram::from_ports(std::move(match), std::move(states));
  }
  int p = d.edge_exit_port(edge);
  int q = d.partner(p);
  link(match, p, k + 0);
  link(match, k + 1, q);
  link(match, k + 2, k + 3);
  return PseudoDiagram::from_ports(std::move(match), std::move(states));
}

PseudoDiagram insert_clasp(const PseudoDiagram& d, int over_dart, int under_dart, CrossingState first,
                           CrossingState second) {
  bool same_face = false;
  for (const auto& f : faces(d)) {
    bool a = std::find(f.begin(), f.end(), over_dart) != f.end();
    bool b = std::find(f.begin(), f.end(), under_dart) != f.end();
    same_face = same_face || (a && b);
  }
  const int p1 = over_dart, p2 = under_dart;
  const int q1 = d.partner(p1), q2 = d.partner(p2);
  if (!same_face || p1 == p2 || p2 == q1)
    throw DomainError("insert_clasp: darts must be distinct edges on a common face");
  std::vector<int> match = d.ports();
  std::vector<CrossingState> states = d.states();
  const int x = 4 * d.crossing_count();
  const int y = x + 4;
  match.resize(match.size() + 8, kNone);
  states.push_back(first);
  states.push_back(second);
  link(match, p1, x + 0);
  link(match, x + 2, y + 2);
  link(match, y + 0, q1);
  link(match, p2, y + 1);
  link(match, y + 3, x + 1);
  link(match, x + 3, q2);
  return PseudoDiagram::from_ports(std::move(match), std::move(states));
}

} // namespace pk
