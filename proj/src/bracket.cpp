#include "pseudoknot/bracket.hpp"

#include "pseudoknot/errors.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#ifndef PK_DATA_DIR
#define PK_DATA_DIR "data"
#endif

namespace pk {

namespace {

/// Smoothing pairs of a classical crossing: A pairs first, then B pairs.
struct Smoothings {
  std::array<std::pair<int, int>, 2> a;
  std::array<std::pair<int, int>, 2> b;
};

Smoothings smoothings(CrossingState s) {
  // The A regions lie counterclockwise from the incoming overstrand.
  const std::array<std::pair<int, int>, 2> p01{{{0, 1}, {2, 3}}};
  const std::array<std::pair<int, int>, 2> p12{{{1, 2}, {3, 0}}};
  if (s == CrossingState::Over02)
    return {p12, p01};
  if (s == CrossingState::Over13)
    return {p01, p12};
  throw DomainError("bracket: diagram has precrossings");
}

std::vector<int> sweep_order(const PseudoDiagram& d, ContractionOrder order) {
  const int n = d.crossing_count();
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int best = -1, best_growth = 0;
    for (int i = 0; i < n; ++i) {
      int c = order == ContractionOrder::Greedy ? i : n - 1 - i;
      if (done[static_cast<std::size_t>(c)])
        continue;
      int growth = 0;
      for (int s = 0; s < 4; ++s) {
        int other = d.partner(4 * c + s) / 4;
        if (other == c)
          continue;
        growth += done[static_cast<std::size_t>(other)] ? -1 : 1;
      }
      if (best == -1 || growth < best_growth) {
        best = c;
        best_growth = growth;
      }
    }
    done[static_cast<std::size_t>(best)] = 1;
    out.push_back(best);
  }
  return out;
}

struct PairingHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

LaurentPoly loop_power(int k) {
  static const std::vector<LaurentPoly> cache = [] {
    std::vector<LaurentPoly> v{LaurentPoly::one()};
    for (int i = 1; i <= 8; ++i)
      v.push_back(v.back() * loop_value());
    return v;
  }();
  return k < static_cast<int>(cache.size()) ? cache[static_cast<std::size_t>(k)] : loop_value().pow(static_cast<unsigned>(k));
}

} // namespace

LaurentPoly kauffman_bracket(const PseudoDiagram& d, ContractionOrder order) {
  const int n = d.crossing_count();
  if (n == 0)
    return LaurentPoly::one();
  if (d.pre_count() != 0)
    throw DomainError("bracket: diagram has precrossings");

  std::vector<char> processed(static_cast<std::size_t>(n), 0);
  std::vector<int> frontier;  // sorted port ids with an unprocessed partner
  std::unordered_map<std::vector<int>, LaurentPoly, PairingHash> states{{{}, LaurentPoly::one()}};

  for (int c : sweep_order(d, order)) {
    processed[static_cast<std::size_t>(c)] = 1;
    const int f = static_cast<int>(frontier.size());
    const int nodes = f + 4;
    auto port_of = [&](int node) { return node < f ? frontier[static_cast<std::size_t>(node)] : 4 * c + node - f; };

    // Edge links between local nodes; -1 marks a node that stays open.
    std::vector<int> edge(static_cast<std::size_t>(nodes), -1);
    for (int i = 0; i < f; ++i) {
      int q = d.partner(frontier[static_cast<std::size_t>(i)]);
      if (q / 4 == c)
        edge[static_cast<std::size_t>(i)] = f + q % 4;
    }
    for (int s = 0; s < 4; ++s) {
      int q = d.partner(4 * c + s);
      if (q / 4 == c)
        edge[static_cast<std::size_t>(f + s)] = f + q % 4;
      else if (processed[static_cast<std::size_t>(q / 4)])
        edge[static_cast<std::size_t>(f + s)] =
            static_cast<int>(std::lower_bound(frontier.begin(), frontier.end(), q) - frontier.begin());
    }
    std::vector<int> next_frontier;
    for (int node = 0; node < nodes; ++node)
      if (edge[static_cast<std::size_t>(node)] == -1)
        next_frontier.push_back(port_of(node));
    std::sort(next_frontier.begin(), next_frontier.end());
    auto slot_in_next = [&](int node) {
      return static_cast<int>(std::lower_bound(next_frontier.begin(), next_frontier.end(), port_of(node)) -
                              next_frontier.begin());
    };

    const Smoothings sm = smoothings(d.state(c));
    std::unordered_map<std::vector<int>, LaurentPoly, PairingHash> next;
    std::vector<int> path(static_cast<std::size_t>(nodes));
    std::vector<char> seen(static_cast<std::size_t>(nodes));
    for (const auto& [pairing, value] : states) {
      for (int choice = 0; choice < 2; ++choice) {
        for (int i = 0; i < f; ++i)
          path[static_cast<std::size_t>(i)] = pairing[static_cast<std::size_t>(i)];
        for (auto [x, y] : choice == 0 ? sm.a : sm.b) {
          path[static_cast<std::size_t>(f + x)] = f + y;
          path[static_cast<std::size_t>(f + y)] = f + x;
        }
        std::fill(seen.begin(), seen.end(), 0);
        std::vector<int> out(next_frontier.size(), -1);
        for (int t = 0; t < nodes; ++t) {
          if (seen[static_cast<std::size_t>(t)] || edge[static_cast<std::size_t>(t)] != -1)
            continue;
          seen[static_cast<std::size_t>(t)] = 1;
          int u = path[static_cast<std::size_t>(t)];
          seen[static_cast<std::size_t>(u)] = 1;
          while (edge[static_cast<std::size_t>(u)] != -1) {
            int v = edge[static_cast<std::size_t>(u)];
            u = path[static_cast<std::size_t>(v)];
            seen[static_cast<std::size_t>(v)] = seen[static_cast<std::size_t>(u)] = 1;
          }
          int a = slot_in_next(t), b = slot_in_next(u);
          out[static_cast<std::size_t>(a)] = b;
          out[static_cast<std::size_t>(b)] = a;
        }
        int loops = 0;
        for (int s = 0; s < nodes; ++s) {
          if (seen[static_cast<std::size_t>(s)])
            continue;
          ++loops;
          int u = s;
          do {
            seen[static_cast<std::size_t>(u)] = 1;
            int v = path[static_cast<std::size_t>(u)];
            seen[static_cast<std::size_t>(v)] = 1;
            u = edge[static_cast<std::size_t>(v)];
          } while (u != s);
        }
        LaurentPoly term = value.scaled(1, choice == 0 ? 1 : -1);
        if (loops)
          term = term * loop_power(loops);
        next[std::move(out)] += term;
      }
    }
    states = std::move(next);
    frontier = std::move(next_frontier);
  }
  // Every closed loop contributed a factor d; the bracket counts one fewer.
  return states.at({}).divide_exact(loop_value());
}

LaurentPoly kauffman_bracket_naive(const PseudoDiagram& d) {
  const int n = d.crossing_count();
  if (n == 0)
    return LaurentPoly::one();
  if (n > 20)
    throw DomainError("bracket: naive state sum limited to 20 crossings");
  LaurentPoly total;
  std::vector<int> parent(static_cast<std::size_t>(4 * n));
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  auto unite = [&](int x, int y) { parent[static_cast<std::size_t>(find(x))] = find(y); };
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    int exponent = 0;
    for (int c = 0; c < n; ++c) {
      const Smoothings sm = smoothings(d.state(c));
      bool a = ((mask >> c) & 1u) == 0;
      exponent += a ? 1 : -1;
      for (auto [x, y] : a ? sm.a : sm.b)
        unite(4 * c + x, 4 * c + y);
    }
    for (int p = 0; p < 4 * n; ++p)
      unite(p, d.partner(p));
    int loops = 0;
    for (int p = 0; p < 4 * n; ++p)
      loops += find(p) == p;
    total += loop_value().pow(static_cast<unsigned>(loops - 1)).scaled(1, exponent);
  }
  return total;
}

LaurentPoly invariant_f(const PseudoDiagram& d) {
  if (d.component_count() != 1)
    throw DomainError("invariant: diagram has " + std::to_string(d.component_count()) + " components");
  const int w = writhe(d);
  return kauffman_bracket(d).scaled(w % 2 == 0 ? 1 : -1, -3 * w);
}

// ---------------------------------------------------------------------------

std::string PrimeFactor::to_string() const {
  if (sign > 0)
    return "+" + name;
  if (sign < 0)
    return "-" + name;
  return name;
}

SignedKnotId SignedKnotId::prime(PrimeFactor p) {
  SignedKnotId id;
  id.kind = Kind::Prime;
  id.factors = {std::move(p)};
  return id;
}

SignedKnotId SignedKnotId::composite(std::vector<PrimeFactor> parts) {
  if (parts.size() < 2)
    throw DomainError("composite id needs at least two factors");
  SignedKnotId id;
  id.kind = Kind::Composite;
  std::sort(parts.begin(), parts.end());
  id.factors = std::move(parts);
  return id;
}

SignedKnotId SignedKnotId::unknown(LaurentPoly f, int bound) {
  SignedKnotId id;
  id.kind = Kind::Unknown;
  id.invariant = std::move(f);
  id.crossing_bound = bound;
  return id;
}

std::string SignedKnotId::to_string() const {
  switch (kind) {
  case Kind::Unknot: return "0_1";
  case Kind::Unknown: return "UNKNOWN[" + invariant.to_string() + "]";
  case Kind::Prime:
  case Kind::Composite: break;
  }
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty())
      out += '#';
    out += f.to_string();
  }
  return out;
}

SignedKnotId SignedKnotId::mirrored() const {
  SignedKnotId id = *this;
  for (auto& f : id.factors)
    f.sign = -f.sign;
  std::sort(id.factors.begin(), id.factors.end());
  if (kind == Kind::Unknown)
    id.invariant = invariant.inverted();
  return id;
}

SignedKnotId SignedKnotId::unsigned_id() const {
  SignedKnotId id = *this;
  for (auto& f : id.factors)
    f.sign = 0;
  std::sort(id.factors.begin(), id.factors.end());
  if (kind == Kind::Unknown)
    id.invariant = std::min(invariant, invariant.inverted());
  return id;
}

bool operator<(const SignedKnotId& a, const SignedKnotId& b) {
  if (a.kind != b.kind)
    return a.kind < b.kind;
  if (a.factors != b.factors)
    return std::lexicographical_compare(a.factors.begin(), a.factors.end(), b.factors.begin(), b.factors.end());
  return a.invariant < b.invariant;
}

// ---------------------------------------------------------------------------

std::string KnotTable::default_path() {
  if (const char* env = std::getenv("PK_KNOT_TABLE"); env && *env)
    return env;
  return std::string(PK_DATA_DIR) + "/knot_table.tsv";
}

const KnotTable& KnotTable::bundled() {
  static const KnotTable table = load(default_path());
  return table;
}

KnotTable KnotTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw DomainError("knot table: cannot open " + path);
  KnotTable t;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#')
      continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    for (std::string col; std::getline(ss, col, '\t');)
      cols.push_back(col);
    if (cols.size() != 4)
      throw DomainError("knot table: line " + std::to_string(lineno) + " does not have 4 columns");
    KnotEntry e;
    e.name = cols[0];
    e.symbol = cols[1];
    e.crossing_number = std::stoi(cols[2]);
    e.amphicheiral = cols[3] == "1";
    PseudoDiagram d = build(e.symbol);
    if (d.component_count() != 1)
      throw DomainError("knot table: " + e.name + " is not a knot");
    e.invariant = invariant_f(d);
    LaurentPoly mirror_f = e.invariant.inverted();
    if (e.amphicheiral && mirror_f != e.invariant)
      throw DomainError("knot table: " + e.name + " is marked amphicheiral but its invariant is chiral");
    e.ambiguous_sign = !e.amphicheiral && mirror_f == e.invariant;

    const int index = static_cast<int>(t.entries_.size());
    auto insert = [&](const LaurentPoly& f, int sign) {
      auto [it, fresh] = t.index_.emplace(f, Hit{index, sign});
      if (!fresh)
        throw DomainError("knot table: invariant of " + e.name + " collides with " +
                          t.entries_[static_cast<std::size_t>(it->second.entry)].name);
      t.signed_.push_back({Hit{index, sign}, f});
    };
    if (e.amphicheiral || e.ambiguous_sign) {
      insert(e.invariant, 0);
    } else {
      insert(e.invariant, 1);
      insert(mirror_f, -1);
    }
    if (!t.by_name_.emplace(e.name, index).second)
      throw DomainError("knot table: duplicate entry " + e.name);
    t.entries_.push_back(std::move(e));
  }
  return t;
}

const KnotEntry* KnotTable::find(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? nullptr : &entries_[static_cast<std::size_t>(it->second)];
}

PrimeFactor KnotTable::factor(const Hit& h) const {
  const KnotEntry& e = entries_[static_cast<std::size_t>(h.entry)];
  return {e.name, e.crossing_number, h.entry, h.sign};
}

std::optional<PrimeFactor> KnotTable::lookup_prime(const LaurentPoly& f, int bound) const {
  auto it = index_.find(f);
  if (it == index_.end() || entries_[static_cast<std::size_t>(it->second.entry)].crossing_number > bound)
    return std::nullopt;
  return factor(it->second);
}

bool KnotTable::factorize(const LaurentPoly& f, int bound, int parts, std::size_t first,
                          std::vector<PrimeFactor>& out) const {
  for (std::size_t i = first; i < signed_.size(); ++i) {
    const auto& [hit, poly] = signed_[i];
    const int cn = entries_[static_cast<std::size_t>(hit.entry)].crossing_number;
    if (cn + 3 * (parts - 1) > bound)
      continue;
    if (parts == 1) {
      if (poly == f) {
        out.push_back(factor(hit));
        return true;
      }
      continue;
    }
    auto q = f.try_divide(poly);
    if (q && factorize(*q, bound - cn, parts - 1, i, out)) {
      out.push_back(factor(hit));
      return true;
    }
  }
  return false;
}

SignedKnotId KnotTable::identify_invariant(const LaurentPoly& f, int crossing_bound) const {
  if (f == LaurentPoly::one())
    return SignedKnotId::unknot();
  if (auto p = lookup_prime(f, crossing_bound))
    return SignedKnotId::prime(*p);
  for (int parts = 2; parts <= 3; ++parts) {
    std::vector<PrimeFactor> out;
    if (factorize(f, crossing_bound, parts, 0, out))
      return SignedKnotId::composite(std::move(out));
  }
  return SignedKnotId::unknown(f, crossing_bound);
}

SignedKnotId KnotTable::identify(const PseudoDiagram& d) const {
  return identify_invariant(invariant_f(d), d.crossing_count());
}

} // namespace pk
