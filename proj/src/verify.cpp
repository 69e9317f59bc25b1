#include "pseudoknot/verify.hpp"

#include "pseudoknot/errors.hpp"
#include "pseudoknot/families.hpp"
#include "pseudoknot/wereset.hpp"

#include <cstdlib>
#include <map>
#include <sstream>

namespace pk {

void CheckReport::record(bool ok, const std::string& what) {
  pass = pass && ok;
  lines.push_back(std::string(ok ? "PASS " : "FAIL ") + what);
}

std::string CheckReport::text() const {
  std::string out;
  for (const auto& l : lines)
    out += l + "\n";
  return out;
}

namespace {

std::string repeat_pre(int n) { return n == 1 ? "(i)" : "(i^" + std::to_string(n) + ")"; }

std::string name_of(const ConwayAst& ast, const KnotTable& table) {
  return table.identify(build(ast)).unsigned_id().to_string();
}

/// Brute-force tally keyed by unsigned knot name.
std::map<std::string, std::uint64_t> tally(const std::string& symbol, const KnotTable& table, int jobs) {
  WeReSet s = were(build(symbol), false, table, jobs);
  std::map<std::string, std::uint64_t> out;
  for (const auto& [id, n] : s.entries)
    out[id.to_string()] += n;
  return out;
}

std::string show(const std::map<std::string, std::uint64_t>& m) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [k, v] : m) {
    out << (first ? "" : ",") << "(" << k << "," << v << ")";
    first = false;
  }
  out << "}";
  return out.str();
}

void compare(CheckReport& r, const std::string& label, const std::map<std::string, std::uint64_t>& formula,
             const std::map<std::string, std::uint64_t>& brute) {
  bool ok = formula == brute;
  r.record(ok, label + ": closed form " + show(formula) + (ok ? " matches" : " differs from") + " brute force " +
                   show(brute));
}

} // namespace

std::string torus3_shadow(int q) {
  if (q < 1)
    throw DomainError("torus shadow needs q >= 1");
  std::string s = "braid[";
  for (int j = 0; j < q; ++j)
    s += std::string(j ? "," : "") + "i1,i2";
  return s + "]";
}

CheckReport check_torus2p(int p, const KnotTable& table, int jobs) {
  if (p < 3 || p % 2 == 0 || p > 9)
    throw DomainError("torus2p check needs odd p in 3..9");
  std::map<std::string, std::uint64_t> formula;
  for (const auto& [desc, n] : torus2p_counts(p).rows) {
    if (desc == "unknot") {
      formula["0_1"] += n;
      continue;
    }
    int m = std::atoi(desc.c_str() + 4);  // "T(2,m)"
    formula[name_of(rational_from_sequence({std::abs(m)}), table)] += n;
  }
  CheckReport r;
  compare(r, "torus2p p=" + std::to_string(p), formula, tally(repeat_pre(p), table, jobs));
  return r;
}

CheckReport check_twist(int n, const KnotTable& table, int jobs) {
  if (n < 3 || n > 9)
    throw DomainError("twist check needs n in 3..9");
  std::map<std::string, std::uint64_t> formula;
  for (const auto& [desc, count] : twist_shadow_counts(n).rows) {
    if (desc == "unknot") {
      formula["0_1"] += count;
      continue;
    }
    int c = std::atoi(desc.c_str() + 6);  // "twist(c)"
    formula[name_of(rational_from_sequence({c - 2, 2}), table)] += count;
  }
  CheckReport r;
  compare(r, "twist n=" + std::to_string(n), formula, tally(repeat_pre(n - 2) + "(i^2)", table, jobs));
  return r;
}

CheckReport check_rational(const std::vector<int>& seq, const KnotTable& table, int jobs) {
  std::string shadow, label;
  for (int a : seq) {
    if (a <= 0)
      throw DomainError("rational check needs positive twists");
    shadow += repeat_pre(a);
    label += (label.empty() ? "" : " ") + std::to_string(a);
  }
  if (seq.empty())
    throw DomainError("rational check needs a nonempty sequence");
  std::map<std::string, std::uint64_t> formula;
  for (const auto& [f, n] : rational_shadow_classes(seq)) {
    if (f.p == 0)
      throw DomainError("rational check: shadow resolves to a link");
    formula[f.p == 1 ? "0_1" : name_of(rational_from_sequence(rational_sequence(f)), table)] += n;
  }
  CheckReport r;
  compare(r, "rational [" + label + "]", formula, tally(shadow, table, jobs));
  return r;
}

CheckReport check_torus34(const KnotTable& table, int jobs) {
  const WeReSet expected = parse_paper(
      "{(0_1,88),(3_1,72),(4_1,4),(5_1,16),(5_2,32),(6_3,16),(8_18,2),(8_19,2),(8_20,16),(3_1#3_1,8)} / 2^8", false,
      table);
  WeReSet got = were(build(torus3_shadow(4)), false, table, jobs);
  CheckReport r;
  r.record(got == expected, "torus34: " + render_paper(got));
  return r;
}

CheckReport check_torus37(const KnotTable& table, int jobs) {
  WeReSet got = were(build(torus3_shadow(7)), false, table, jobs);
  std::uint64_t unknot = 0, trefoil = 0;
  for (const auto& [id, n] : got.entries) {
    if (id.is_unknot())
      unknot = n;
    else if (id.to_string() == "3_1")
      trefoil = n;
  }
  CheckReport r;
  r.record(got.k == 14 && unknot == 2688, "torus37: unknot count " + std::to_string(unknot) + " of 2^14 (expected 2688)");
  r.record(trefoil == 2884, "torus37: trefoil count " + std::to_string(trefoil) + " (expected 2884)");
  r.record(trefoil > unknot, "torus37: trefoil more likely than unknot");
  return r;
}

CheckReport check_amphi(const KnotTable& table) {
  CheckReport r;
  for (int p : {2, 3}) {
    const std::string ones = "(1^" + std::to_string(p) + ")";
    const std::string one = ones + "(i)(1)" + ones;
    const std::string two = ones + "(i)(i)" + ones;
    r.record(amphicheiral_necessary(build(one), table), one + " has a mirror-symmetric signed set");
    r.record(amphicheiral_necessary(build(two), table), two + " has a mirror-symmetric signed set");

    const std::string full = name_of(rational_from_sequence({p, 1, 1, p}), table);
    r.record(tally(one, table, 0).count(full) == 1, one + " resolves to " + full);

    std::map<std::string, std::uint64_t> expected;
    expected["0_1"] = 2;
    expected[full] += 1;
    expected[name_of(rational_from_sequence({p - 1, 1, 1, p - 1}), table)] += 1;
    std::map<std::string, std::uint64_t> got = tally(two, table, 0);
    r.record(got == expected, two + " resolutions " + show(got));
  }
  r.record(!amphicheiral_necessary(build("(i^2,1)"), table), "(i^2,1) is detected as chiral");
  return r;
}

} // namespace pk
