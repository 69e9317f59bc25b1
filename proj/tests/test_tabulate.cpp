#include "doctest.h"

#include "pseudoknot/errors.hpp"
#include "pseudoknot/tabulate.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <unistd.h>

using namespace pk;

namespace {

struct Row {
  std::string symbol, were;
};

std::map<std::string, Row> expected_rows() {
  std::ifstream in(std::string(PK_TEST_DATA) + "/census_rows.tsv");
  REQUIRE(in);
  std::map<std::string, Row> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    std::istringstream fields(line);
    std::string id;
    Row r;
    std::getline(fields, id, '\t');
    std::getline(fields, r.symbol, '\t');
    std::getline(fields, r.were);
    out[id] = r;
  }
  return out;
}

const std::vector<CensusEntry>& census5() {
  static const std::vector<CensusEntry> c = census(5);
  return c;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() : path(std::filesystem::temp_directory_path() / ("pk_store_" + std::to_string(::getpid()))) {
    std::filesystem::remove_all(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

} // namespace

TEST_CASE("tabulate: census reproduces the published rows") {
  const auto& c = census5();
  auto rows = expected_rows();
  REQUIRE(rows.size() == 23);
  REQUIRE(c.size() == 23);
  std::map<int, int> per_n;
  for (const auto& e : c) {
    ++per_n[e.crossing_number];
    auto it = rows.find(e.id);
    REQUIRE_MESSAGE(it != rows.end(), e.id);
    CHECK_MESSAGE(e.symbol == it->second.symbol, e.id);
    CHECK_MESSAGE(render_paper(e.were_unsigned) == it->second.were, e.id);
  }
  CHECK(per_n == std::map<int, int>{{3, 3}, {4, 5}, {5, 15}});
}

TEST_CASE("tabulate: census invariants") {
  const auto& c = census5();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& e = c[i];
    CHECK(e.were.total() == (std::uint64_t{1} << e.were.k));
    CHECK(e.were.k == static_cast<int>(parse(e.symbol).pre_count()));
    CHECK(unsign(e.were) == e.were_unsigned);
    CHECK(e.id.rfind(e.source + ".", 0) == 0);
    for (std::size_t j = 0; j < i; ++j) {
      bool same = c[j].were.k == e.were.k && were_equal(c[j].were_unsigned, e.were_unsigned);
      CHECK_FALSE_MESSAGE(same, c[j].id, " ", e.id);
    }
    // Shadows: the unknot is the most likely resolution.
    if (parse(e.symbol).pre_count() == parse(e.symbol).crossing_count()) {
      std::uint64_t unknot = e.were_unsigned.entries.begin()->second;
      REQUIRE(e.were_unsigned.entries.begin()->first.is_unknot());
      for (auto it = std::next(e.were_unsigned.entries.begin()); it != e.were_unsigned.entries.end(); ++it)
        CHECK(unknot > it->second);
    }
  }
  // Dense ordinals per source knot.
  std::map<std::string, int> last;
  for (const auto& e : c) {
    int ord = std::stoi(e.id.substr(e.id.find('.') + 1));
    CHECK(ord == ++last[e.source]);
  }
}

TEST_CASE("tabulate: deterministic output") {
  auto a = emit(census(5, KnotTable::bundled(), {1, DedupeKey::Unsigned, false, {}}), EmitFormat::Paper);
  CHECK(a == emit(census5(), EmitFormat::Paper));
  CHECK(emit(census5(), EmitFormat::Json) == emit(census5(), EmitFormat::Json));
  CHECK(emit({}, EmitFormat::Paper).empty());
  CHECK(a.find("3_1.2  ") != std::string::npos);
  CHECK(a.find("{(0_1,22),(3_1,6),(4_1,2),(5_2,2)} / 2^5") != std::string::npos);

  auto j = nlohmann::json::parse(emit(census5(), EmitFormat::Json));
  CHECK(j["entries"].size() == 23);
  CHECK(j["counts"]["5"] == 15);
  for (std::size_t i = 0; i < census5().size(); ++i) {
    const auto& e = j["entries"][i];
    CHECK(were_from_json(e["were"]) == census5()[i].were);
    CHECK(were_from_json(e["were_unsigned"]) == census5()[i].were_unsigned);
    CHECK(e["were"]["symbol"] == census5()[i].symbol);
  }
}

TEST_CASE("tabulate: signed dedupe keeps more entries") {
  CensusOptions opts;
  opts.dedupe = DedupeKey::SignedUpToMirror;
  auto c = census(5, KnotTable::bundled(), opts);
  CHECK(c.size() == 24);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (c[i].were.k != c[j].were.k)
        continue;
      CHECK_FALSE(were_equal(c[i].were, c[j].were));
      CHECK_FALSE(were_equal(c[i].were, mirror_were(c[j].were)));
    }
}

TEST_CASE("tabulate: errors") {
  CHECK_THROWS_AS(census(7), DomainError);
  CHECK_THROWS_AS(parse_format("xml"), DomainError);

  TempDir tmp;
  std::filesystem::create_directories(tmp.path);
  auto table_path = tmp.path / "small.tsv";
  std::ofstream(table_path) << "3_1\t3\t3\t0\n";
  auto small = KnotTable::load(table_path.string());
  CHECK(census(3, small).size() == 3);
  CHECK_THROWS_AS(census(4, small), DomainError);
  CHECK_THROWS_AS(lookup_by_were((tmp.path / "none").string(), were(build("(i)"), true)), DomainError);
}

TEST_CASE("tabulate: store and lookup") {
  TempDir tmp;
  persist(tmp.path.string(), census5(), 5);
  for (int n : {3, 4, 5})
    CHECK(std::filesystem::exists(tmp.path / ("census_n" + std::to_string(n) + ".json")));
  CHECK(store_max_n(tmp.path.string()) == 5);

  auto hit = lookup_by_were(tmp.path.string(), were(build("(i^2,1)"), true));
  REQUIRE(hit.size() == 1);
  CHECK(hit[0].id == "3_1.2");
  CHECK_FALSE(hit[0].mirrored);

  auto mirrored = lookup_by_were(tmp.path.string(), were(mirror(build("(i^2,1)")), true));
  REQUIRE(mirrored.size() == 1);
  CHECK(mirrored[0].id == "3_1.2");
  CHECK(mirrored[0].mirrored);

  auto plain = lookup_by_were(tmp.path.string(), were(build("(i^3)(i^2)"), false));
  // Lookup compares probabilities, and 5_2.1 has exactly twice the counts of 5_2.2.
  REQUIRE(plain.size() == 2);
  CHECK(plain[0].id == "5_2.1");
  CHECK(plain[1].id == "5_2.2");

  auto six = were(build("(3)(i)(-2)"), true);
  CHECK(render_fractions(unsign(six)) == "{(5_1,1/2),(5_2,1/2)}");
  CHECK(lookup_by_were(tmp.path.string(), six).empty());
  CHECK(lookup_by_were(tmp.path.string(), unsign(six)).empty());
  CHECK(lookup_by_were(tmp.path.string(), were(build("(i)"), true)).empty());

  // Each file holds exactly the entries of its crossing number.
  std::ifstream in(tmp.path / "census_n4.json");
  auto j = nlohmann::json::parse(in);
  CHECK(j["n"] == 4);
  CHECK(j["entries"].size() == 5);
}
