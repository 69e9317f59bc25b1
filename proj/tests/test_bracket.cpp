#include "doctest.h"

#include "pseudoknot/bracket.hpp"
#include "pseudoknot/errors.hpp"
#include "support.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>

using namespace pk;

namespace {

LaurentPoly A(int e, std::int64_t c = 1) { return LaurentPoly::monomial(c, e); }

/// Parses KnotInfo's Jones strings ("t^(-2)-t^(-1)+1-t+t^2", "2*t^3") with t = A^-4.
LaurentPoly jones_in_a(const std::string& text) {
  static const std::regex term(R"(([+-]?)(\d*)\*?(t?)(?:\^\(?(-?\d+)\)?)?)");
  LaurentPoly out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), term); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    if (m.length(0) == 0)
      continue;
    std::int64_t c = m[2].length() ? std::stoll(m[2]) : 1;
    if (m[1] == "-")
      c = -c;
    int e = m[3].length() ? (m[4].length() ? std::stoi(m[4]) : 1) : 0;
    out += A(-4 * e, c);
  }
  return out;
}

} // namespace

TEST_CASE("bracket: small values") {
  CHECK(kauffman_bracket(PseudoDiagram()) == LaurentPoly::one());
  auto kink = build("1");
  auto expected = writhe(kink) > 0 ? A(3, -1) : A(-3, -1);
  CHECK(kauffman_bracket(kink) == expected);
  CHECK(kauffman_bracket_naive(kink) == expected);
  CHECK(kauffman_bracket(build("(1^3)")) == kauffman_bracket_naive(build("(1^3)")));
  // Hopf link: -A^4 - A^-4.
  auto hopf = kauffman_bracket(build("2"));
  CHECK(hopf == A(4, -1) + A(-4, -1));
  CHECK_THROWS_AS(kauffman_bracket(build("(i,1)")), DomainError);
}

TEST_CASE("bracket: memoized contraction agrees with the naive state sum") {
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    auto s = testing::random_knot_symbol(rng, 10, 0.0);
    CAPTURE(s);
    auto d = build(s);
    auto fast = kauffman_bracket(d);
    CHECK(fast == kauffman_bracket(d, ContractionOrder::Reversed));
    if (d.crossing_count() <= 8)
      CHECK(fast == kauffman_bracket_naive(d));
  }
  for (const char* s : {"2", "(1,1)(-1,-1)", "braid[1,-2,1,-2,1,-2]", "braid[1,2,1,2,1,2,1,2]"}) {
    CAPTURE(s);
    CHECK(kauffman_bracket(build(s)) == kauffman_bracket_naive(build(s)));
  }
}

TEST_CASE("bracket: normalized invariant") {
  CHECK(invariant_f(PseudoDiagram()) == LaurentPoly::one());
  CHECK(invariant_f(build("1")) == LaurentPoly::one());
  CHECK(invariant_f(build("-1")) == LaurentPoly::one());
  // Right-handed trefoil, V = t + t^3 - t^4.
  CHECK(invariant_f(build("3")) == A(-4) + A(-12) - A(-16));
  auto t = build("(1^3)");
  CHECK(invariant_f(mirror(t)) == invariant_f(t).inverted());
  CHECK(invariant_f(build("(1^3)#(1^3)")) == invariant_f(t) * invariant_f(t));
  CHECK(invariant_f(build("2 2#(1^3)")) == invariant_f(build("2 2")) * invariant_f(t));
  CHECK_THROWS_AS(invariant_f(build("2")), DomainError);
}

TEST_CASE("bracket: invariant is unchanged by R1 kinks and R2 clasps") {
  std::mt19937 rng(9);
  for (int i = 0; i < 60; ++i) {
    auto s = testing::random_knot_symbol(rng, 7, 0.0);
    CAPTURE(s);
    auto d = build(s);
    auto f = invariant_f(d);
    int e = std::uniform_int_distribution<int>(0, d.edge_count() - 1)(rng);
    CHECK(invariant_f(insert_kink(d, e, CrossingState::Over02)) == f);
    CHECK(invariant_f(insert_kink(d, e, CrossingState::Over13)) == f);
    auto fs = faces(d);
    for (const auto& face : fs) {
      if (face.size() < 3)
        continue;
      int p1 = face[0], p2 = face[1 + face.size() / 2 - 1];
      if (p2 == p1 || p2 == d.partner(p1))
        continue;
      CHECK(invariant_f(insert_clasp(d, p1, p2, CrossingState::Over02, CrossingState::Over02)) == f);
      CHECK(invariant_f(insert_clasp(d, p1, p2, CrossingState::Over13, CrossingState::Over13)) == f);
      break;
    }
  }
}

TEST_CASE("bracket: bundled table matches KnotInfo Jones polynomials") {
  const auto& table = KnotTable::bundled();
  REQUIRE(table.entries().size() == 84);
  std::ifstream in(std::string(PK_TEST_DATA) + "/knotinfo_jones.tsv");
  REQUIRE(in);
  std::string line;
  int checked = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    auto tab = line.find('\t');
    std::string name = line.substr(0, tab);
    const KnotEntry* e = table.find(name);
    REQUIRE(e);
    auto v = jones_in_a(line.substr(tab + 1));
    CAPTURE(name);
    CHECK((e->invariant == v || e->invariant == v.inverted()));
    ++checked;
  }
  CHECK(checked == 84);
}

TEST_CASE("bracket: identification") {
  const auto& table = KnotTable::bundled();
  auto t = table.identify(build("(1^3)"));
  CHECK(t.to_string() == "+3_1");
  CHECK(table.identify(mirror(build("(1^3)"))).to_string() == "-3_1");
  CHECK(table.identify(build("2 1 1 2")).to_string() == "6_3");
  CHECK(table.identify(build("1")).is_unknot());
  CHECK(table.identify(build("(1^3)#(1^3)")).to_string() == "+3_1#+3_1");
  CHECK(table.identify(build("(1^3)#((-1)^3)")).to_string() == "+3_1#-3_1");
  CHECK(table.identify(build("(1^3)#2 2#(1^3)")).to_string() == "+3_1#+3_1#4_1");
  CHECK(table.identify(build("(1^3)#(1^3)")).unsigned_id().to_string() == "3_1#3_1");

  // Every entry identifies as itself (+), its mirror as the other handedness.
  for (const auto& e : table.entries()) {
    CAPTURE(e.name);
    auto d = build(e.symbol);
    auto id = table.identify(d);
    REQUIRE(id.kind == SignedKnotId::Kind::Prime);
    CHECK(id.factors[0].name == e.name);
    CHECK(id.factors[0].sign == (e.amphicheiral || e.ambiguous_sign ? 0 : 1));
    CHECK(table.identify(mirror(d)) == id.mirrored());
  }
  CHECK(table.find("9_42")->ambiguous_sign);
}

TEST_CASE("bracket: crossing bound and unknown ids") {
  const auto& table = KnotTable::bundled();
  auto f = invariant_f(build("5"));
  CHECK(table.identify_invariant(f, 5).to_string() == "+5_1");
  auto u = table.identify_invariant(f, 4);
  CHECK(u.is_unknown());
  CHECK(u == SignedKnotId::unknown(f, 9));
  CHECK(u.to_string().rfind("UNKNOWN[", 0) == 0);
  CHECK(u.mirrored().mirrored() == u);
  CHECK(u.unsigned_id() == u.mirrored().unsigned_id());
}

TEST_CASE("bracket: id ordering") {
  const auto& table = KnotTable::bundled();
  auto unknot = SignedKnotId::unknot();
  auto p3 = table.identify(build("3"));
  auto m3 = p3.mirrored();
  auto p41 = table.identify(build("2 2"));
  auto c = table.identify(build("3#3"));
  CHECK(unknot < p3);
  CHECK(p3 < m3);
  CHECK(m3 < p41);
  CHECK(p41 < c);
  CHECK(c < SignedKnotId::unknown(A(1), 3));
}

TEST_CASE("bracket: table loading errors") {
  auto dir = std::filesystem::temp_directory_path();
  auto write = [&](const std::string& name, const std::string& body) {
    auto p = dir / name;
    std::ofstream(p) << body;
    return p.string();
  };
  CHECK_THROWS_AS(KnotTable::load(write("pk_dup.tsv", "a\t3\t3\t0\nb\t3\t3\t0\n")), DomainError);
  CHECK_THROWS_AS(KnotTable::load(write("pk_bad.tsv", "a\t3\t3\n")), DomainError);
  CHECK_THROWS_AS(KnotTable::load(write("pk_amph.tsv", "a\t3\t3\t1\n")), DomainError);
  CHECK_THROWS_AS(KnotTable::load((dir / "pk_missing.tsv").string()), DomainError);
  auto ok = KnotTable::load(write("pk_ok.tsv", "# c\n3_1\t3\t3\t0\n4_1\t2 2\t4\t1\n"));
  CHECK(ok.entries().size() == 2);
}
