#include "pseudoknot/tabulate.hpp"

#include "pseudoknot/conway.hpp"
#include "pseudoknot/errors.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <omp.h>

namespace pk {

namespace {

struct Candidate {
  std::vector<int> order;  // minus the precrossing count of each twist or letter
  std::string symbol;
  ConwayAst ast;
};

/// Every mark of the symbol as (summand, factor or letter, index within twist).
struct MarkRef {
  std::size_t summand, factor, mark;
};

std::vector<MarkRef> marks_of(const ConwayAst& ast) {
  std::vector<MarkRef> out;
  for (std::size_t s = 0; s < ast.summands.size(); ++s) {
    if (const auto* p = std::get_if<Product>(&ast.summands[s])) {
      for (std::size_t f = 0; f < p->factors.size(); ++f)
        for (std::size_t m = 0; m < p->factors[f].marks.size(); ++m)
          out.push_back({s, f, m});
    } else {
      for (std::size_t l = 0; l < std::get<BraidWord>(ast.summands[s]).letters.size(); ++l)
        out.push_back({s, l, 0});
    }
  }
  return out;
}

void set_pre(ConwayAst& ast, const MarkRef& r) {
  if (auto* p = std::get_if<Product>(&ast.summands[r.summand]))
    p->factors[r.factor].marks[r.mark] = Mark::Pre;
  else
    std::get<BraidWord>(ast.summands[r.summand]).letters[r.factor].mark = Mark::Pre;
}

std::vector<int> order_key(const ConwayAst& ast) {
  std::vector<int> key;
  for (const auto& s : ast.summands) {
    if (const auto* p = std::get_if<Product>(&s)) {
      for (const auto& t : p->factors)
        key.push_back(-static_cast<int>(std::count(t.marks.begin(), t.marks.end(), Mark::Pre)));
    } else {
      for (const auto& l : std::get<BraidWord>(s).letters)
        key.push_back(l.mark == Mark::Pre ? -1 : 0);
    }
  }
  return key;
}

/// Distinct pseudodiagram symbols from one source knot, more precrossings in earlier twists first.
std::vector<Candidate> substitutions(const KnotEntry& e) {
  ConwayAst base = parse(e.symbol);
  auto refs = marks_of(base);
  if (refs.size() > 20)
    throw DomainError("census: diagram of " + e.name + " is too large");
  std::map<std::string, Candidate> unique;
  for (std::uint32_t mask = 1; mask < (1u << refs.size()); ++mask) {
    ConwayAst ast = base;
    for (std::size_t j = 0; j < refs.size(); ++j)
      if ((mask >> j) & 1u)
        set_pre(ast, refs[j]);
    ast = canonical_twists(ast).ast;
    std::string sym = print_concise(ast);
    if (!unique.count(sym))
      unique.emplace(sym, Candidate{order_key(ast), sym, std::move(ast)});
  }
  std::vector<Candidate> out;
  for (auto& [sym, c] : unique)
    out.push_back(std::move(c));
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    return std::tie(a.order, a.symbol) < std::tie(b.order, b.symbol);
  });
  return out;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  std::ostringstream out;
  out << std::hex << v;
  return out.str();
}

nlohmann::json read_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in)
    throw DomainError("cannot read " + p.string());
  return nlohmann::json::parse(in);
}

void write_json(const std::filesystem::path& p, const nlohmann::json& j) {
  std::ofstream out(p);
  if (!out)
    throw DomainError("cannot write " + p.string());
  out << j.dump(2) << '\n';
}

} // namespace

std::vector<CensusEntry> census(int max_n, const KnotTable& table, const CensusOptions& opts) {
  if (max_n >= 7 && !opts.allow_large)
    throw DomainError("census: max_n >= 7 is out of the supported range; pass the override to run it anyway");
  for (int n = 3; n <= max_n; ++n) {
    bool present = std::any_of(table.entries().begin(), table.entries().end(),
                               [n](const KnotEntry& e) { return e.crossing_number == n; });
    if (!present)
      throw DomainError("census: the knot table has no knot with " + std::to_string(n) + " crossings");
  }

  std::vector<CensusEntry> out;
  std::set<std::string> seen;
  for (const KnotEntry& e : table.entries()) {
    if (e.crossing_number > max_n)
      continue;
    if (opts.progress)
      opts.progress(e.name);
    std::vector<Candidate> cands = substitutions(e);
    std::vector<WeReSet> sets(cands.size());
    const int threads = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::size_t i = 0; i < cands.size(); ++i)
      sets[i] = were(build(cands[i].ast), true, table, 1);

    int ordinal = 0;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      // Sets with equal probabilities but different k are listed separately.
      WeReSet plain = unsign(sets[i]);
      const std::string k = std::to_string(plain.k) + ":";
      std::string key, mirror_key;
      if (opts.dedupe == DedupeKey::Unsigned) {
        key = mirror_key = k + canonical_key(plain);
      } else {
        key = k + canonical_key(sets[i]);
        mirror_key = k + canonical_key(mirror_were(sets[i]));
      }
      if (seen.count(key) || seen.count(mirror_key))
        continue;
      seen.insert(key);
      seen.insert(mirror_key);
      CensusEntry c;
      c.id = e.name + "." + std::to_string(++ordinal);
      c.source = e.name;
      c.crossing_number = e.crossing_number;
      c.symbol = cands[i].symbol;
      c.were_unsigned = std::move(plain);
      c.were = std::move(sets[i]);
      out.push_back(std::move(c));
    }
  }
  return out;
}

EmitFormat parse_format(const std::string& name) {
  if (name == "paper")
    return EmitFormat::Paper;
  if (name == "json")
    return EmitFormat::Json;
  throw DomainError("unknown format '" + name + "'");
}

nlohmann::json entry_json(const CensusEntry& e) {
  return {{"id", e.id},
          {"source", e.source},
          {"n", e.crossing_number},
          {"symbol", e.symbol},
          {"were", to_json(e.were, e.symbol)},
          {"were_unsigned", to_json(e.were_unsigned, e.symbol)}};
}

std::string emit(const std::vector<CensusEntry>& entries, EmitFormat format) {
  std::map<int, int> counts;
  for (const auto& e : entries)
    ++counts[e.crossing_number];
  if (format == EmitFormat::Json) {
    nlohmann::json j;
    j["entries"] = nlohmann::json::array();
    for (const auto& e : entries)
      j["entries"].push_back(entry_json(e));
    j["counts"] = nlohmann::json::object();
    for (auto [n, c] : counts)
      j["counts"][std::to_string(n)] = c;
    return j.dump(2) + "\n";
  }
  if (entries.empty())
    return "";
  std::size_t id_w = 0, sym_w = 0;
  for (const auto& e : entries) {
    id_w = std::max(id_w, e.id.size());
    sym_w = std::max(sym_w, e.symbol.size());
  }
  std::ostringstream out;
  for (const auto& e : entries) {
    out << e.id << std::string(id_w - e.id.size() + 2, ' ') << e.symbol << std::string(sym_w - e.symbol.size() + 2, ' ')
        << render_paper(e.were_unsigned) << '\n';
  }
  out << '\n';
  for (auto [n, c] : counts)
    out << "# " << n << " crossings: " << c << " pseudoknots\n";
  return out.str();
}

void persist(const std::string& dir, const std::vector<CensusEntry>& entries, int max_n) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  std::map<int, nlohmann::json> per_n;
  for (int n = 3; n <= max_n; ++n)
    per_n[n] = {{"n", n}, {"entries", nlohmann::json::array()}};
  nlohmann::json index = {{"max_n", max_n}, {"entries", nlohmann::json::array()}};
  for (const auto& e : entries) {
    per_n[e.crossing_number]["entries"].push_back(entry_json(e));
    std::string key = canonical_key(e.were);
    index["entries"].push_back({{"id", e.id},
                                {"symbol", e.symbol},
                                {"n", e.crossing_number},
                                {"signed_key", key},
                                {"mirror_key", canonical_key(mirror_were(e.were))},
                                {"unsigned_key", canonical_key(e.were_unsigned)},
                                {"hash", hex(fnv1a(key))}});
  }
  for (const auto& [n, j] : per_n)
    write_json(fs::path(dir) / ("census_n" + std::to_string(n) + ".json"), j);
  write_json(fs::path(dir) / "index.json", index);
}

int store_max_n(const std::string& dir) {
  auto p = std::filesystem::path(dir) / "index.json";
  if (!std::filesystem::exists(p))
    throw DomainError("no census store in " + dir);
  return read_json(p).at("max_n").get<int>();
}

std::vector<StoreMatch> lookup_by_were(const std::string& dir, const WeReSet& w) {
  auto p = std::filesystem::path(dir) / "index.json";
  if (!std::filesystem::exists(p))
    throw DomainError("no census store in " + dir);
  const nlohmann::json index = read_json(p);
  const std::string key = canonical_key(w);
  std::vector<StoreMatch> out;
  for (const auto& e : index.at("entries")) {
    StoreMatch m{e.at("id").get<std::string>(), e.at("symbol").get<std::string>(), false};
    if (!w.is_signed) {
      if (e.at("unsigned_key") == key)
        out.push_back(m);
    } else if (e.at("signed_key") == key) {
      out.push_back(m);
    } else if (e.at("mirror_key") == key) {
      m.mirrored = true;
      out.push_back(m);
    }
  }
  return out;
}

} // namespace pk
