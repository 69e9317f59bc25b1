#include "pseudoknot/wereset.hpp"

#include "pseudoknot/errors.hpp"

#include <bit>
#include <regex>
#include <unordered_map>

#include <omp.h>

namespace pk {

std::uint64_t WeReSet::total() const {
  std::uint64_t t = 0;
  for (const auto& [id, c] : entries)
    t += c;
  return t;
}

bool WeReSet::has_unknown() const {
  return !entries.empty() && entries.rbegin()->first.is_unknown();
}

WeReSet::Reduced WeReSet::reduced() const {
  Reduced r;
  for (const auto& [id, c] : entries) {
    int shift = std::min(std::countr_zero(c), k);
    r.numerators[id] = c >> shift;
    r.exponents[id] = k - shift;
  }
  return r;
}

namespace {

void check_input(const PseudoDiagram& d) {
  if (d.component_count() != 1)
    throw DomainError("WeRe-set: diagram has " + std::to_string(d.component_count()) +
                      " components; only knots are supported");
  if (d.pre_count() > 40)
    throw DomainError("WeRe-set: too many precrossings to enumerate");
}

WeReSet finish(WeReSet s, bool is_signed) { return is_signed ? s : unsign(s); }

} // namespace

WeReSet were(const PseudoDiagram& d, bool is_signed, const KnotTable& table, int jobs) {
  check_input(d);
  const std::int64_t total = std::int64_t{1} << d.pre_count();
  using Tally = std::unordered_map<LaurentPoly, std::uint64_t, LaurentPolyHash>;
  Tally merged;
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
  {
    Tally local;
#pragma omp for schedule(dynamic, 16) nowait
    for (std::int64_t m = 0; m < total; ++m) {
      PseudoDiagram r = d.with_states(resolved_states(d, static_cast<std::uint64_t>(m)));
      ++local[invariant_f(r)];
    }
#pragma omp critical(pk_were_merge)
    for (auto& [f, c] : local)
      merged[f] += c;
  }
  WeReSet s;
  s.k = d.pre_count();
  s.is_signed = true;
  for (const auto& [f, c] : merged)
    s.entries[table.identify_invariant(f, d.crossing_count())] += c;
  return finish(std::move(s), is_signed);
}

WeReSet were_serial(const PseudoDiagram& d, bool is_signed, const KnotTable& table) {
  check_input(d);
  WeReSet s;
  s.k = d.pre_count();
  s.is_signed = true;
  for (const Resolution& r : resolutions(d))
    ++s.entries[table.identify(r.diagram)];
  return finish(std::move(s), is_signed);
}

WeReSet unsign(const WeReSet& s) {
  WeReSet out;
  out.k = s.k;
  out.is_signed = false;
  for (const auto& [id, c] : s.entries)
    out.entries[id.unsigned_id()] += c;
  return out;
}

bool were_equal(const WeReSet& a, const WeReSet& b) {
  if (a.is_signed != b.is_signed)
    throw DomainError("were_equal: cannot compare a signed and an unsigned WeRe-set");
  return a.reduced() == b.reduced();
}

WeReSet mirror_were(const WeReSet& s) {
  WeReSet out;
  out.k = s.k;
  out.is_signed = s.is_signed;
  for (const auto& [id, c] : s.entries)
    out.entries[id.mirrored()] += c;
  return out;
}

bool amphicheiral_necessary(const PseudoDiagram& d, const KnotTable& table) {
  WeReSet s = were(d, true, table);
  return were_equal(s, mirror_were(s));
}

std::string canonical_key(const WeReSet& s) {
  auto r = s.reduced();
  std::string out = s.is_signed ? "S" : "U";
  for (const auto& [id, num] : r.numerators)
    out += ";" + id.to_string() + "=" + std::to_string(num) + "/2^" + std::to_string(r.exponents.at(id));
  return out;
}

std::string render_paper(const WeReSet& s) {
  std::string out = "{";
  for (const auto& [id, c] : s.entries) {
    if (out.size() > 1)
      out += ',';
    out += "(" + id.to_string() + "," + std::to_string(c) + ")";
  }
  return out + "} / 2^" + std::to_string(s.k);
}

std::string render_fractions(const WeReSet& s) {
  auto r = s.reduced();
  std::string out = "{";
  for (const auto& [id, num] : r.numerators) {
    if (out.size() > 1)
      out += ',';
    int e = r.exponents.at(id);
    out += "(" + id.to_string() + "," + std::to_string(num);
    if (e > 0)
      out += "/" + std::to_string(std::uint64_t{1} << e);
    out += ")";
  }
  return out + "}";
}

nlohmann::json to_json(const WeReSet& s, const std::string& symbol) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [id, c] : s.entries)
    entries.push_back({{"id", id.to_string()}, {"count", c}});
  return {{"symbol", symbol}, {"k", s.k}, {"signed", s.is_signed}, {"entries", entries}};
}

SignedKnotId parse_id(const std::string& text, const KnotTable& table) {
  if (text == "0_1")
    return SignedKnotId::unknot();
  std::vector<PrimeFactor> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('#', start);
    std::string part = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    int sign = 0;
    if (!part.empty() && (part[0] == '+' || part[0] == '-')) {
      sign = part[0] == '+' ? 1 : -1;
      part.erase(0, 1);
    }
    const KnotEntry* e = table.find(part);
    if (!e)
      throw DomainError("unknown knot name '" + part + "'");
    if (e->amphicheiral || e->ambiguous_sign)
      sign = 0;
    parts.push_back({e->name, e->crossing_number, static_cast<int>(e - table.entries().data()), sign});
    if (end == std::string::npos)
      break;
    start = end + 1;
  }
  return parts.size() == 1 ? SignedKnotId::prime(parts[0]) : SignedKnotId::composite(std::move(parts));
}

WeReSet parse_paper(const std::string& text, bool is_signed, const KnotTable& table) {
  static const std::regex whole(R"(\s*\{(.*)\}\s*(?:/\s*2\^(\d+))?\s*)");
  static const std::regex pair(R"(\(\s*([^,()\s]+)\s*,\s*(\d+)\s*\))");
  std::smatch m;
  if (!std::regex_match(text, m, whole))
    throw ParseError("expected {(id,count),...} / 2^k", 0);
  WeReSet s;
  s.is_signed = is_signed;
  s.k = m[2].matched ? std::stoi(m[2]) : 0;
  const std::string body = m[1];
  for (auto it = std::sregex_iterator(body.begin(), body.end(), pair); it != std::sregex_iterator(); ++it) {
    SignedKnotId id = parse_id((*it)[1], table);
    s.entries[is_signed ? id : id.unsigned_id()] += std::stoull((*it)[2]);
  }
  if (s.k > 62 || s.total() != (std::uint64_t{1} << s.k))
    throw DomainError("WeRe-set counts do not sum to 2^" + std::to_string(s.k));
  return s;
}

WeReSet were_from_json(const nlohmann::json& j, const KnotTable& table) {
  WeReSet s;
  s.k = j.at("k").get<int>();
  s.is_signed = j.at("signed").get<bool>();
  for (const auto& e : j.at("entries"))
    s.entries[parse_id(e.at("id").get<std::string>(), table)] += e.at("count").get<std::uint64_t>();
  return s;
}

} // namespace pk
