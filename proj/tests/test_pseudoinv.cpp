#include "doctest.h"

#include "pseudoknot/errors.hpp"
#include "pseudoknot/pseudoinv.hpp"
#include "pseudoknot/wereset.hpp"
#include "support.hpp"

#include <random>

using namespace pk;

namespace {

bool all_unknots(const PseudoDiagram& d) {
  auto s = were(d, false);
  return s.entries.size() == 1 && s.entries.begin()->first.is_unknot();
}

bool all_knotted(const PseudoDiagram& d) {
  auto s = were(d, false);
  return std::none_of(s.entries.begin(), s.entries.end(), [](const auto& e) { return e.first.is_unknot(); });
}

/// Smallest mask size for which pred holds on some partial resolution, by direct enumeration.
std::optional<int> oracle(const PseudoDiagram& d, bool (*pred)(const PseudoDiagram&)) {
  const int k = d.pre_count();
  std::optional<int> best;
  for (std::uint64_t chosen = 0; chosen < (std::uint64_t{1} << k); ++chosen) {
    int size = __builtin_popcountll(chosen);
    if (best && size >= *best)
      continue;
    for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << k); ++signs) {
      if (signs & ~chosen)
        continue;
      if (pred(AssignmentMask{chosen, signs}.apply(d))) {
        best = size;
        break;
      }
    }
  }
  return best;
}

} // namespace

TEST_CASE("pseudoinv: trivializing number") {
  auto r = trivializing_number(build("(i^3)"));
  REQUIRE(r);
  CHECK(r->number == 2);
  CHECK(all_unknots(r->witness.apply(build("(i^3)"))));
  CHECK(trivializing_number(build("(i^5)"))->number == 4);
  CHECK(trivializing_number(build("1"))->number == 0);
  CHECK(trivializing_number(build("(i)"))->number == 0);
  // A classical knot cannot be trivialized.
  CHECK_FALSE(trivializing_number(build("3")));
}

TEST_CASE("pseudoinv: knotting number") {
  CHECK(knotting_number(build("(i^5)"))->number == 4);
  CHECK(knotting_number(build("(i^7)"))->number == 5);
  auto r = knotting_number(build("(i,1^2)"));
  REQUIRE(r);
  CHECK(r->number == 1);
  CHECK(r->witness.describe(build("(i,1^2)")).find(":+") != std::string::npos);
  CHECK_FALSE(knotting_number(build("(i)")));
}

TEST_CASE("pseudoinv: mask searches agree with direct enumeration") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    auto sym = testing::random_knot_symbol(rng, 6, 0.5);
    auto d = build(sym);
    auto t = trivializing_number(d, 1);
    auto k = knotting_number(d, 1);
    auto ot = oracle(d, all_unknots);
    auto ok = oracle(d, all_knotted);
    CHECK_MESSAGE(t.has_value() == ot.has_value(), sym);
    CHECK_MESSAGE(k.has_value() == ok.has_value(), sym);
    if (t && ot) {
      CHECK_MESSAGE(t->number == *ot, sym);
      CHECK(all_unknots(t->witness.apply(d)));
    }
    if (k && ok) {
      CHECK_MESSAGE(k->number == *ok, sym);
      CHECK(all_knotted(k->witness.apply(d)));
    }
    CHECK((t && t->number == 0) == all_unknots(d));

    // Twist canonicalization does not change either number.
    auto canon = build(canonical_twists(parse(sym)).ast);
    auto tc = trivializing_number(canon, 1);
    auto kc = knotting_number(canon, 1);
    CHECK(tc.has_value() == t.has_value());
    CHECK(kc.has_value() == k.has_value());
    if (tc && t)
      CHECK(tc->number == t->number);
    if (kc && k)
      CHECK(kc->number == k->number);
  }
}

TEST_CASE("pseudoinv: homotopy certificate") {
  CHECK(homotopy_nontrivial_cert(build("(i^2,1)")));
  CHECK(homotopy_nontrivial_cert(build("(i^3)")));
  CHECK(homotopy_nontrivial_cert(mirror(build("(i^3)"))));
  CHECK_FALSE(homotopy_nontrivial_cert(build("(i)")));
  CHECK_FALSE(homotopy_nontrivial_cert(build("(3)(i)(-2)")));
  CHECK_FALSE(homotopy_nontrivial_cert(build("3")));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    auto d = build(testing::random_knot_symbol(rng, 8, 0.4));
    CHECK(homotopy_nontrivial_cert(d) == homotopy_nontrivial_cert(mirror(d)));
    if (d.pre_count() <= 1)
      CHECK_FALSE(homotopy_nontrivial_cert(d));
  }
}

TEST_CASE("pseudoinv: descending diagrams are unknots") {
  // Half of the basepoints start on an under passage of the alternating trefoil and need two changes.
  auto trefoil = build("(1^3)");
  int fewest = 99;
  for (int base = 0; base < trefoil.edge_count(); ++base) {
    for (bool forward : {true, false}) {
      auto r = descending_resolution(trefoil, base, forward);
      fewest = std::min(fewest, r.changes);
      CHECK((r.changes == 1 || r.changes == 2));
      CHECK(invariant_f(r.diagram) == LaurentPoly::one());
      CHECK(descending_resolution(r.diagram, base, forward).changes == 0);
    }
  }
  CHECK(fewest == 1);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    auto d = build(testing::random_knot_symbol(rng, 8, 0.0));
    int base = std::uniform_int_distribution<int>(0, d.edge_count() - 1)(rng);
    auto r = descending_resolution(d, base);
    CHECK(invariant_f(r.diagram) == LaurentPoly::one());
    CHECK(r.changes <= d.crossing_count());
  }
}

TEST_CASE("pseudoinv: single precrossing pseudodiagrams unknot") {
  auto r = unknot_single_precrossing(build("(3)(i)(-2)"));
  CHECK(r.diagram.pre_count() == 1);
  CHECK(render_paper(were(r.diagram, false)) == "{(0_1,2)} / 2^1");
  CHECK(unknot_single_precrossing(build("(i)")).changes == 0);

  std::mt19937 rng(5);
  int done = 0;
  while (done < 30) {
    auto sym = testing::random_knot_symbol(rng, 8, 0.2);
    auto d = build(sym);
    if (d.pre_count() != 1)
      continue;
    ++done;
    auto out = unknot_single_precrossing(d);
    CHECK_MESSAGE(all_unknots(out.diagram), sym);
  }
  CHECK_THROWS_AS(unknot_single_precrossing(build("(i^2,1)")), DomainError);
  CHECK_THROWS_AS(unknot_single_precrossing(build("3")), DomainError);
}
