#include "pseudoknot/families.hpp"

#include "pseudoknot/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <tuple>

namespace pk {

std::uint64_t CountTable::count(const std::string& descriptor) const {
  for (const auto& [d, n] : rows)
    if (d == descriptor)
      return n;
  return 0;
}

std::uint64_t CountTable::sum() const {
  std::uint64_t s = 0;
  for (const auto& [d, n] : rows)
    s += n;
  return s;
}

void CountTable::add(const std::string& descriptor, std::uint64_t n) {
  for (auto& [d, c] : rows) {
    if (d == descriptor) {
      c += n;
      return;
    }
  }
  rows.emplace_back(descriptor, n);
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n)
    return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

CountTable braid2_counts(int n, int l) {
  if (n < 0 || n > 62)
    throw DomainError("braid2_counts: n out of range");
  CountTable t;
  t.total = std::uint64_t{1} << n;
  for (int k = 0; k <= n; ++k)
    t.add(std::to_string(l + n - 2 * k), binomial(n, k));
  return t;
}

CountTable torus2p_counts(int p) {
  if (p < 1 || p % 2 == 0 || p > 61)
    throw DomainError("torus2p_counts: p must be odd and positive");
  CountTable t;
  t.total = std::uint64_t{1} << p;
  for (int k = 0; k <= p; ++k) {
    int m = p - 2 * k;
    t.add(std::abs(m) == 1 ? "unknot" : "T(2," + std::to_string(m) + ")", binomial(p, k));
  }
  return t;
}

int torus2p_knotting_number(int p) {
  if (p < 3 || p % 2 == 0)
    throw DomainError("torus2p_knotting_number: p must be odd and at least 3");
  return (p + 3) / 2;
}

std::string twist_knot_name(int crossings) {
  static const std::map<int, std::string> names{{3, "3_1"}, {4, "4_1"}, {5, "5_2"}, {6, "6_1"},
                                                {7, "7_2"}, {8, "8_1"}, {9, "9_2"}};
  auto it = names.find(crossings);
  return it == names.end() ? std::string() : it->second;
}

CountTable twist_shadow_counts(int n) {
  if (n < 3 || n > 62)
    throw DomainError("twist_shadow_counts: n must be at least 3");
  const int m = n - 2;
  CountTable t;
  t.total = std::uint64_t{1} << n;
  // A clasp resolved as (1,-1) cancels: the result is unknotted whatever the twists do.
  t.add("unknot", std::uint64_t{1} << (n - 1));
  for (int k = 0; 2 * k <= m; ++k) {
    const int net = m - 2 * k;
    const std::uint64_t ways = 2 * binomial(m, k);
    if (net == 0) {
      t.add("unknot", ways);
      continue;
    }
    // Clasp and twist agreeing in sign give net + 2 crossings, disagreeing give net + 1.
    for (int c : {net + 2, net + 1})
      t.add(c <= 2 ? "unknot" : "twist(" + std::to_string(c) + ")", ways);
  }
  return t;
}

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

Fraction normalize(std::int64_t num, std::int64_t den) {
  std::int64_t g = std::gcd(num, den);
  if (g != 0) {
    num /= g;
    den /= g;
  }
  if (num < 0 || (num == 0 && den < 0)) {
    num = -num;
    den = -den;
  }
  return {num, den};
}

std::int64_t inverse_mod(std::int64_t q, std::int64_t p) {
  // Extended Euclid; q and p coprime.
  std::int64_t a = mod(q, p), m = p, x0 = 1, x1 = 0;
  while (m != 0) {
    std::int64_t t = a / m;
    std::tie(a, m) = std::make_pair(m, a - t * m);
    std::tie(x0, x1) = std::make_pair(x1, x0 - t * x1);
  }
  return mod(x0, p);
}

} // namespace

Fraction twist_fraction(const std::vector<int>& seq) {
  if (seq.empty())
    throw DomainError("continued fraction of an empty sequence");
  std::int64_t num = seq.front(), den = 1;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    std::int64_t a = seq[i];
    std::tie(num, den) = std::make_pair(a * num + den, num);
    if (std::abs(num) > (std::int64_t{1} << 60))
      throw DomainError("continued fraction overflow");
  }
  return normalize(num, den);
}

Fraction continued_fraction(const std::vector<int>& seq) {
  if (seq.empty())
    throw DomainError("continued fraction of an empty sequence");
  std::int64_t num = seq.front(), den = 1;
  if (num == 0)
    throw DomainError("improper sequence: zero term");
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (seq[i] == 0)
      throw DomainError("improper sequence: zero term");
    if (num == 0)
      throw DomainError("improper sequence: division by zero after term " + std::to_string(i));
    std::tie(num, den) = std::make_pair(static_cast<std::int64_t>(seq[i]) * num + den, num);
  }
  if (num == 0)
    throw DomainError("improper sequence: the value is 0");
  return normalize(num, den);
}

bool schubert_equiv(const Fraction& a, const Fraction& b) {
  if (a.p != b.p)
    return false;
  if (a.p <= 1)
    return true;
  return mod(a.q - b.q, a.p) == 0 || mod(a.q * b.q - 1, a.p) == 0;
}

Fraction schubert_canonical(const Fraction& f) {
  if (f.p <= 1)
    return {f.p, f.p == 1 ? 0 : 1};
  std::int64_t q = mod(f.q, f.p);
  return {f.p, std::min(q, inverse_mod(q, f.p))};
}

Fraction schubert_canonical_unoriented(const Fraction& f) {
  Fraction a = schubert_canonical(f);
  Fraction b = schubert_canonical({f.p, -f.q});
  return a.q <= b.q ? a : b;
}

std::vector<int> rational_sequence(const Fraction& f) {
  if (f.p < 2)
    throw DomainError("rational_sequence: p must be at least 2");
  std::int64_t num = f.p, den = mod(f.q, f.p);
  if (den == 0)
    throw DomainError("rational_sequence: q must be coprime to p");
  std::vector<int> out;
  while (den != 0) {
    out.push_back(static_cast<int>(num / den));
    std::tie(num, den) = std::make_pair(den, num % den);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::uint64_t rational_shadow_count(const std::vector<int>& seq, const std::vector<int>& kvec) {
  if (seq.size() != kvec.size())
    throw DomainError("rational_shadow_count: sequence and k vector differ in length");
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] < 1 || kvec[i] < 0 || kvec[i] > seq[i])
      throw DomainError("rational_shadow_count: k_i out of range");
    r *= binomial(seq[i], kvec[i]);
  }
  return r;
}

std::vector<std::pair<Fraction, std::uint64_t>> rational_shadow_classes(const std::vector<int>& seq) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::uint64_t> tally;
  std::vector<int> k(seq.size(), 0);
  for (;;) {
    std::vector<int> nets(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i)
      nets[i] = seq[i] - 2 * k[i];
    Fraction c = schubert_canonical_unoriented(twist_fraction(nets));
    tally[{c.p, c.q}] += rational_shadow_count(seq, k);
    std::size_t i = 0;
    while (i < k.size() && k[i] == seq[i])
      k[i++] = 0;
    if (i == k.size())
      break;
    ++k[i];
  }
  std::vector<std::pair<Fraction, std::uint64_t>> out;
  for (const auto& [pq, n] : tally)
    out.push_back({{pq.first, pq.second}, n});
  return out;
}

// ---------------------------------------------------------------------------
// BJ recursion over rational pseudodiagrams with one precrossing.

namespace {

/// Classical twist nets, plus the twist holding the precrossing (-1: none).
struct PseudoSeq {
  std::vector<int> nets;
  int pre = -1;

  int crossings() const {
    int n = pre >= 0 ? 1 : 0;
    for (int a : nets)
      n += std::abs(a);
    return n;
  }
};

using Key = std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>;

/// Signed Schubert classes of the two resolutions, or nullopt for links.
std::optional<Key> key_of(const PseudoSeq& s) {
  std::vector<int> plus = s.nets, minus = s.nets;
  if (s.pre >= 0) {
    ++plus[static_cast<std::size_t>(s.pre)];
    --minus[static_cast<std::size_t>(s.pre)];
  }
  Fraction a = schubert_canonical(twist_fraction(plus));
  Fraction b = schubert_canonical(twist_fraction(minus));
  if (a.p % 2 == 0 || b.p % 2 == 0)
    return std::nullopt;
  return Key{a.p, a.q, b.p, b.q};
}

bool is_target(const Key& k) { return std::get<0>(k) == 1 && std::get<2>(k) == 1; }

struct MinimalDiagrams {
  int max_crossings = 0;
  std::map<Key, std::vector<PseudoSeq>> by_key;
};

void enumerate(int budget, bool with_pre, PseudoSeq& cur, bool pre_placed, int total, MinimalDiagrams& out) {
  if (budget == 0) {
    if (cur.nets.empty() || pre_placed != with_pre)
      return;
    auto key = key_of(cur);
    if (!key)
      return;
    auto& list = out.by_key[*key];
    if (list.empty() || list.front().crossings() == total)
      list.push_back(cur);
    return;
  }
  for (int size = 1; size <= budget; ++size) {
    for (int sign : {1, -1}) {
      cur.nets.push_back(sign * size);
      enumerate(budget - size, with_pre, cur, pre_placed, total, out);
      cur.nets.pop_back();
    }
  }
  if (with_pre && !pre_placed) {
    // The precrossing's twist: the i plus c classical crossings, c possibly zero.
    for (int c = 0; c < budget; ++c) {
      for (int sign : {1, -1}) {
        if (c == 0 && sign < 0)
          continue;
        cur.pre = static_cast<int>(cur.nets.size());
        cur.nets.push_back(sign * c);
        enumerate(budget - 1 - c, with_pre, cur, true, total, out);
        cur.nets.pop_back();
        cur.pre = -1;
      }
    }
  }
}

const MinimalDiagrams& minimal_diagrams(int max_crossings, bool with_pre) {
  static std::mutex mu;
  static std::map<std::pair<int, bool>, MinimalDiagrams> cache;
  std::lock_guard lock(mu);
  auto& m = cache[{max_crossings, with_pre}];
  if (m.max_crossings == 0) {
    m.max_crossings = max_crossings;
    for (int n = 1; n <= max_crossings; ++n) {
      PseudoSeq cur;
      enumerate(n, with_pre, cur, false, n, m);
    }
  }
  return m;
}

PseudoSeq from_ast(const ConwayAst& ast) {
  if (!ast.is_rational())
    throw DomainError("bj_unknotting: input must be a rational Conway product");
  if (ast.pre_count() > 1)
    throw DomainError("bj_unknotting: at most one precrossing is supported");
  PseudoSeq s;
  for (const auto& t : std::get<Product>(ast.summands.front()).factors) {
    int net = 0;
    for (Mark m : t.marks) {
      if (m == Mark::Pre)
        s.pre = static_cast<int>(s.nets.size());
      else
        net += m == Mark::Positive ? 1 : -1;
    }
    s.nets.push_back(net);
  }
  return s;
}

} // namespace

int bj_unknotting(const ConwayAst& ast, int depth_cap) {
  PseudoSeq start = from_ast(ast);
  auto start_key = key_of(start);
  if (!start_key)
    throw DomainError("bj_unknotting: input is a link");
  if (is_target(*start_key))
    return 0;
  const MinimalDiagrams& minimal = minimal_diagrams(start.crossings(), start.pre >= 0);

  std::set<Key> seen{*start_key};
  std::vector<Key> frontier{*start_key};
  for (int depth = 1; depth <= depth_cap && !frontier.empty(); ++depth) {
    std::vector<Key> next;
    for (const Key& k : frontier) {
      auto it = minimal.by_key.find(k);
      if (it == minimal.by_key.end())
        throw DomainError("bj_unknotting: no minimal diagram found for an intermediate node");
      for (const PseudoSeq& d : it->second) {
        for (std::size_t t = 0; t < d.nets.size(); ++t) {
          if (d.nets[t] == 0)
            continue;
          PseudoSeq changed = d;
          changed.nets[t] -= d.nets[t] > 0 ? 2 : -2;
          auto key = key_of(changed);
          if (!key)
            continue;
          if (is_target(*key))
            return depth;
          if (seen.insert(*key).second)
            next.push_back(*key);
        }
      }
    }
    frontier = std::move(next);
  }
  throw DomainError("bj_unknotting: no unknotting sequence within depth " + std::to_string(depth_cap));
}

} // namespace pk
