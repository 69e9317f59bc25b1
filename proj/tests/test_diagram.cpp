#include "doctest.h"

#include "pseudoknot/diagram.hpp"
#include "pseudoknot/errors.hpp"
#include "support.hpp"

#include <random>

using namespace pk;

TEST_CASE("diagram: building standard diagrams") {
  auto d = build("(i,i,i)");
  CHECK(d.crossing_count() == 3);
  CHECK(d.pre_count() == 3);
  CHECK(d.component_count() == 1);
  CHECK(build("1").crossing_count() == 1);
  CHECK(build("1").component_count() == 1);
  CHECK(build("3").component_count() == 1);
  CHECK(build("2").component_count() == 2);
  CHECK(build("(i^2)(i^2)").component_count() == 1);
  CHECK(build("(i,1)").component_count() == 2);
  auto e = build("(3)(i)(-2)");
  CHECK(e.crossing_count() == 6);
  CHECK(e.pre_count() == 1);
  CHECK(build("braid[1,-2,1,-2]").component_count() == 1);
  CHECK_THROWS_AS(build("braid[1,3]"), DomainError);
  CHECK(PseudoDiagram().crossing_count() == 0);
  CHECK(PseudoDiagram().component_count() == 1);
}

TEST_CASE("diagram: every built diagram is a connected planar map") {
  std::mt19937 rng(7);
  for (int i = 0; i < 100; ++i) {
    auto s = testing::random_knot_symbol(rng, 10, 0.3);
    CAPTURE(s);
    auto d = build(s);
    CHECK(d.is_planar());
    CHECK(d.edge_count() == 2 * d.crossing_count());
  }
  for (const char* s : {"3#3", "(i^2,1)#2 2", "braid[1,1,1,-2,1,1,1,-2]", "braid[1,2,1,2,1,2,1,2]"}) {
    CAPTURE(s);
    CHECK(build(s).is_planar());
  }
}

TEST_CASE("diagram: from_ports validation") {
  CHECK_THROWS_AS(PseudoDiagram::from_ports({1, 0, 3}, {CrossingState::Pre}), DomainError);
  CHECK_THROWS_AS(PseudoDiagram::from_ports({1, 0, 3, 3}, {CrossingState::Pre}), DomainError);
  // Two separate kinks.
  CHECK_THROWS_AS(PseudoDiagram::from_ports({1, 0, 3, 2, 5, 4, 7, 6}, {CrossingState::Pre, CrossingState::Pre}),
                  DomainError);
}

TEST_CASE("diagram: writhe and sign convention") {
  CHECK(writhe(build("(1^3)")) == 3);
  CHECK(writhe(mirror(build("(1^3)"))) == -3);
  CHECK(writhe(build("(1^3)#(1^3)")) == 6);
  auto kink = build("1");
  CHECK(std::abs(writhe(kink)) == 1);
  CHECK(writhe(mirror(kink)) == -writhe(kink));
  CHECK(writhe(build("braid[1,1,1]")) == 3);
  CHECK(writhe(build("braid[-1,-1,-1]")) == -3);
  CHECK_THROWS_AS(writhe(build("(i,1)")), DomainError);
  for (const char* s : {"(1^3)(i)((-1)^3)", "(i^2,1)", "(2)(i,1)(-2)"}) {
    auto d = build(s);
    for (int c = 0; c < d.crossing_count(); ++c) {
      if (d.label(c) == Label::Pre)
        continue;
      CHECK(d.state_for_sign(c, d.sign(c) > 0) == d.state(c));
    }
  }
}

TEST_CASE("diagram: resolutions") {
  auto d = build("(i^3)");
  CHECK(resolutions(d).size() == 8);
  std::uint64_t expect = 0;
  for (const Resolution& r : resolutions(d)) {
    CHECK(r.assignment == expect++);
    CHECK(r.diagram.pre_count() == 0);
    CHECK(r.diagram.ports() == d.ports());
    CHECK(r.diagram.component_count() == d.component_count());
    for (std::size_t j = 0; j < d.pre_ids().size(); ++j)
      CHECK((r.diagram.sign(d.pre_ids()[j]) > 0) == (((r.assignment >> j) & 1u) != 0));
  }
  CHECK(expect == 8);
  auto c = build("3");
  CHECK(resolutions(c).size() == 1);
  CHECK((*resolutions(c).begin()).diagram == c);
  CHECK_THROWS_AS(resolve(d, 8), DomainError);
}

TEST_CASE("diagram: mirror") {
  auto d = build("(1^3)");
  auto m = mirror(d);
  for (int c = 0; c < 3; ++c)
    CHECK(m.label(c) == Label::Negative);
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    auto e = build(testing::random_knot_symbol(rng, 8, 0.4));
    CHECK(mirror(mirror(e)) == e);
    auto g = gauss(e), gm = gauss(mirror(e));
    REQUIRE(g.chords.size() == gm.chords.size());
    for (std::size_t j = 0; j < g.chords.size(); ++j) {
      CHECK(g.chords[j].first == gm.chords[j].first);
      CHECK(g.chords[j].second == gm.chords[j].second);
      auto l = g.chords[j].label;
      auto expected = l == Label::Pre ? Label::Pre : l == Label::Positive ? Label::Negative : Label::Positive;
      CHECK(gm.chords[j].label == expected);
    }
  }
}

TEST_CASE("diagram: gauss diagrams") {
  auto g = gauss(build("(i^2,1)"));
  REQUIRE(g.chords.size() == 3);
  CHECK(g.points == 6);
  std::vector<std::size_t> pre;
  for (std::size_t i = 0; i < 3; ++i)
    if (g.chords[i].label == Label::Pre)
      pre.push_back(i);
  REQUIRE(pre.size() == 2);
  CHECK(g.intersect(pre[0], pre[1]));

  auto k = gauss(build("1"));
  CHECK(k.chords.size() == 1);

  // Figure-eight Gauss word a b c a d c b d has four intersecting pairs.
  auto f = gauss(build("(i,1)(i,1)"));
  REQUIRE(f.chords.size() == 4);
  int crossings = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      crossings += f.intersect(i, j);
  CHECK(crossings == 4);
  CHECK_THROWS_AS(gauss(build("2")), DomainError);
}

TEST_CASE("diagram: nugatory crossings and alternation") {
  CHECK(nugatory_crossings(build("1")) == std::set<int>{0});
  CHECK(nugatory_crossings(build("(i^3)")).empty());
  CHECK(nugatory_crossings(build("(3)(i)(-2)")).empty());
  CHECK(nugatory_crossings(build("(1^3)#1")).size() == 1);
  CHECK_FALSE(is_potentially_alternating(build("(3)(i)(-2)")));
  CHECK(is_potentially_alternating(build("(1^3)")));
  CHECK(is_potentially_alternating(build("(i^3)")));
  CHECK(is_potentially_alternating(build("(i^2)(i^2)")));
  CHECK(is_potentially_alternating(build("(3)(2)")));
  CHECK_FALSE(is_potentially_alternating(build("1")));
  CHECK_FALSE(is_potentially_alternating(build("(3)(-2)")));
  CHECK(is_potentially_alternating(build("(3)(i)(2)")));
}

TEST_CASE("diagram: dump format") {
  auto text = build("(i,1)(1)").dump();
  CHECK(text.rfind("0 i ", 0) == 0);
  int lines = 0;
  for (char ch : text)
    lines += ch == '\n';
  CHECK(lines == 3);
}

TEST_CASE("diagram: kinks and clasps keep the map planar") {
  std::mt19937 rng(3);
  for (int i = 0; i < 60; ++i) {
    auto d = build(testing::random_knot_symbol(rng, 7, 0.3));
    int e = std::uniform_int_distribution<int>(0, d.edge_count() - 1)(rng);
    auto k = insert_kink(d, e, CrossingState::Pre);
    CHECK(k.crossing_count() == d.crossing_count() + 1);
    CHECK(k.is_planar());
    CHECK(k.component_count() == 1);
    CHECK(nugatory_crossings(k).count(d.crossing_count()) == 1);

    auto fs = faces(d);
    const auto& face = fs[std::uniform_int_distribution<std::size_t>(0, fs.size() - 1)(rng)];
    if (face.size() < 2)
      continue;
    int p1 = face[0], p2 = face[face.size() / 2];
    if (p2 == d.partner(p1) || p1 == p2)
      continue;
    auto c = insert_clasp(d, p1, p2, CrossingState::Over02, CrossingState::Over02);
    CHECK(c.crossing_count() == d.crossing_count() + 2);
    CHECK(c.is_planar());
    CHECK(c.component_count() == 1);
  }
  auto t = build("3");
  CHECK_THROWS_AS(insert_clasp(t, 0, 0, CrossingState::Pre, CrossingState::Pre), DomainError);
}
