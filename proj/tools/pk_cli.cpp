#include "pseudoknot/bracket.hpp"
#include "pseudoknot/errors.hpp"
#include "pseudoknot/families.hpp"
#include "pseudoknot/pseudoinv.hpp"
#include "pseudoknot/tabulate.hpp"
#include "pseudoknot/verify.hpp"
#include "pseudoknot/wereset.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

using namespace pk;

namespace {

int jobs = 0;

Mark flip(Mark m) {
  switch (m) {
  case Mark::Positive: return Mark::Negative;
  case Mark::Negative: return Mark::Positive;
  default: return m;
  }
}

ConwayAst mirror_symbol(ConwayAst ast) {
  for (auto& s : ast.summands) {
    if (auto* p = std::get_if<Product>(&s)) {
      for (auto& t : p->factors)
        for (auto& m : t.marks)
          m = flip(m);
    } else {
      for (auto& l : std::get<BraidWord>(s).letters)
        l.mark = flip(l.mark);
    }
  }
  return ast;
}

std::vector<int> classical_sequence(const ConwayAst& ast) {
  if (!ast.is_rational())
    throw DomainError("fraction needs a single rational Conway product");
  std::vector<int> seq;
  for (const auto& t : std::get<Product>(ast.summands.front()).factors) {
    int v = 0;
    for (Mark m : t.marks) {
      if (m == Mark::Pre)
        throw DomainError("fraction needs a diagram without precrossings");
      v += m == Mark::Positive ? 1 : -1;
    }
    seq.push_back(v);
  }
  return seq;
}

Fraction parse_fraction(const std::string& text) {
  std::istringstream in(text);
  long long p = 0, q = 0;
  char slash = 0;
  if (!(in >> p >> slash >> q) || slash != '/' || !in.eof())
    throw ParseError("expected p/q", 0);
  if (p <= 0)
    throw DomainError("fraction needs p > 0");
  return {p, q};
}

std::vector<int> parse_ints(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> out;
  int v;
  while (in >> v)
    out.push_back(v);
  if (!in.eof() || out.empty())
    throw ParseError("expected a list of integers", 0);
  return out;
}

std::string store_dir(const std::string& flag) {
  if (!flag.empty())
    return flag;
  if (const char* env = std::getenv("PK_STORE"))
    return env;
  return "";
}

void print_mask(const std::optional<MaskSearchResult>& r, const PseudoDiagram& d) {
  if (!r)
    std::cout << "none\n";
  else
    std::cout << r->number << " " << r->witness.describe(d) << "\n";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudoknot WeRe-set toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--jobs", jobs, "Worker threads (default: all)")->check(CLI::NonNegativeNumber);

  std::string symbol, format = "paper";
  bool is_signed = false;

  auto* were_cmd = app.add_subcommand("were", "WeRe-set of a pseudodiagram");
  were_cmd->add_option("symbol", symbol, "Extended Conway symbol")->required();
  were_cmd->add_flag("--signed", is_signed, "Distinguish mirror images");
  were_cmd->add_option("--format", format, "paper, fractions or json")
      ->check(CLI::IsMember({"paper", "fractions", "json"}));

  auto* identify_cmd = app.add_subcommand("identify", "Name the knot of a classical diagram");
  identify_cmd->add_option("symbol", symbol)->required();

  bool normalized = false;
  auto* bracket_cmd = app.add_subcommand("bracket", "Kauffman bracket of a classical diagram");
  bracket_cmd->add_option("symbol", symbol)->required();
  bracket_cmd->add_flag("--normalized", normalized, "Print (-A^3)^-w <D> instead");

  auto* mirror_cmd = app.add_subcommand("mirror", "Symbol of the mirror image");
  mirror_cmd->add_option("symbol", symbol)->required();

  auto* fraction_cmd = app.add_subcommand("fraction", "Continued-fraction value of a rational symbol");
  fraction_cmd->add_option("symbol", symbol)->required();

  std::vector<std::string> fractions;
  bool unoriented = false;
  auto* schubert_cmd = app.add_subcommand("schubert", "Canonical form of p/q, or equivalence of two fractions");
  schubert_cmd->add_option("fractions", fractions, "p/q [p/q]")->required()->expected(1, 2);
  schubert_cmd->add_flag("--unoriented", unoriented, "Identify a knot with its mirror image");

  auto* verify_cmd = app.add_subcommand("verify", "Closed forms and published values against brute force");
  verify_cmd->require_subcommand(1);
  int p = 0, n = 0;
  std::string seq;
  auto* v_torus2p = verify_cmd->add_subcommand("torus2p", "(2,p)-torus shadow");
  v_torus2p->add_option("--p", p)->required();
  auto* v_twist = verify_cmd->add_subcommand("twist", "Twist-knot shadow with n crossings");
  v_twist->add_option("--n", n)->required();
  auto* v_rational = verify_cmd->add_subcommand("rational", "Rational shadow");
  v_rational->add_option("--seq", seq, "Twist lengths, e.g. \"3 2\"")->required();
  auto* v_torus34 = verify_cmd->add_subcommand("torus34", "(3,4)-torus shadow");
  auto* v_torus37 = verify_cmd->add_subcommand("torus37", "(3,7)-torus shadow");
  auto* v_amphi = verify_cmd->add_subcommand("amphi", "Amphicheiral families");

  auto* trivializing_cmd = app.add_subcommand("trivializing", "Trivializing number with a witness");
  trivializing_cmd->add_option("symbol", symbol)->required();
  auto* knotting_cmd = app.add_subcommand("knotting", "Knotting number with a witness");
  knotting_cmd->add_option("symbol", symbol)->required();
  auto* homotopy_cmd = app.add_subcommand("homotopy-cert", "Intersecting prechords in the Gauss diagram");
  homotopy_cmd->add_option("symbol", symbol)->required();

  int depth_cap = 8;
  auto* bj_cmd = app.add_subcommand("bj", "Crossing changes to an all-unknot pseudodiagram via minimal diagrams");
  bj_cmd->add_option("symbol", symbol)->required();
  bj_cmd->add_option("--depth-cap", depth_cap)->check(CLI::PositiveNumber);

  int max_n = 0;
  std::string store, dedupe = "unsigned";
  bool allow_large = false;
  auto* tabulate_cmd = app.add_subcommand("tabulate", "Pseudoknot census by precrossing substitution");
  tabulate_cmd->add_option("--max-n", max_n)->required()->check(CLI::Range(3, 9));
  tabulate_cmd->add_option("--store", store, "Directory to persist into (default: $PK_STORE)");
  tabulate_cmd->add_option("--format", format)->check(CLI::IsMember({"paper", "json"}));
  tabulate_cmd->add_option("--dedupe", dedupe, "unsigned or signed")->check(CLI::IsMember({"unsigned", "signed"}));
  tabulate_cmd->add_flag("--allow-large", allow_large, "Permit max-n >= 7");

  std::string were_text;
  auto* lookup_cmd = app.add_subcommand("lookup", "Census entries with a given WeRe-set");
  auto* lookup_symbol = lookup_cmd->add_option("--symbol", symbol, "Pseudodiagram whose WeRe-set is looked up");
  auto* lookup_were = lookup_cmd->add_option("--were", were_text, "WeRe-set in paper format");
  lookup_symbol->excludes(lookup_were);
  lookup_cmd->add_flag("--signed", is_signed, "Compare signed sets up to mirror");
  lookup_cmd->add_option("--store", store, "Census store (default: $PK_STORE)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const KnotTable& table = KnotTable::bundled();

    if (*were_cmd) {
      WeReSet s = were(build(symbol), is_signed, table, jobs);
      if (format == "json")
        std::cout << to_json(s, symbol).dump(2) << "\n";
      else if (format == "fractions")
        std::cout << render_fractions(s) << "\n";
      else
        std::cout << render_paper(s) << "\n";
    } else if (*identify_cmd) {
      PseudoDiagram d = build(symbol);
      if (d.pre_count() > 0)
        throw DomainError("identify needs a diagram without precrossings; use were");
      std::cout << table.identify(d).to_string() << "\n";
    } else if (*bracket_cmd) {
      PseudoDiagram d = build(symbol);
      std::cout << (normalized ? invariant_f(d) : kauffman_bracket(d)).to_string() << "\n";
    } else if (*mirror_cmd) {
      std::cout << print_concise(mirror_symbol(parse(symbol))) << "\n";
    } else if (*fraction_cmd) {
      std::cout << continued_fraction(classical_sequence(parse(symbol))).to_string() << "\n";
    } else if (*schubert_cmd) {
      auto canon = unoriented ? schubert_canonical_unoriented : schubert_canonical;
      Fraction a = parse_fraction(fractions[0]);
      if (fractions.size() == 1) {
        std::cout << canon(a).to_string() << "\n";
      } else {
        Fraction b = parse_fraction(fractions[1]);
        bool eq = unoriented ? canon(a) == canon(b) : schubert_equiv(a, b);
        std::cout << (eq ? "true" : "false") << "\n";
      }
    } else if (*verify_cmd) {
      CheckReport r;
      if (*v_torus2p)
        r = check_torus2p(p, table, jobs);
      else if (*v_twist)
        r = check_twist(n, table, jobs);
      else if (*v_rational)
        r = check_rational(parse_ints(seq), table, jobs);
      else if (*v_torus34)
        r = check_torus34(table, jobs);
      else if (*v_torus37)
        r = check_torus37(table, jobs);
      else if (*v_amphi)
        r = check_amphi(table);
      std::cout << r.text();
      return r.pass ? 0 : 1;
    } else if (*trivializing_cmd) {
      PseudoDiagram d = build(symbol);
      print_mask(trivializing_number(d, jobs), d);
    } else if (*knotting_cmd) {
      PseudoDiagram d = build(symbol);
      print_mask(knotting_number(d, jobs), d);
    } else if (*homotopy_cmd) {
      std::cout << (homotopy_nontrivial_cert(build(symbol)) ? "true" : "false") << "\n";
    } else if (*bj_cmd) {
      std::cout << bj_unknotting(parse(symbol), depth_cap) << "\n";
    } else if (*tabulate_cmd) {
      CensusOptions opts;
      opts.jobs = jobs;
      opts.allow_large = allow_large;
      opts.dedupe = dedupe == "signed" ? DedupeKey::SignedUpToMirror : DedupeKey::Unsigned;
      opts.progress = [](const std::string& name) { std::cerr << "tabulate: " << name << "\n"; };
      auto entries = census(max_n, table, opts);
      std::cout << emit(entries, parse_format(format));
      if (std::string dir = store_dir(store); !dir.empty()) {
        persist(dir, entries, max_n);
        std::cerr << "tabulate: stored " << entries.size() << " entries in " << dir << "\n";
      }
    } else if (*lookup_cmd) {
      std::string dir = store_dir(store);
      if (dir.empty()) {
        std::cerr << "lookup: pass --store or set PK_STORE\n";
        return 2;
      }
      if (symbol.empty() == were_text.empty()) {
        std::cerr << "lookup: pass exactly one of --symbol and --were\n";
        return 2;
      }
      WeReSet w = symbol.empty() ? parse_paper(were_text, is_signed, table) : were(build(symbol), is_signed, table, jobs);
      std::cerr << "lookup: store covers crossing numbers up to " << store_max_n(dir) << "\n";
      auto matches = lookup_by_were(dir, w);
      if (matches.empty())
        std::cout << "no match\n";
      for (const auto& m : matches)
        std::cout << m.id << "  " << m.symbol << (m.mirrored ? "  (mirror)" : "") << "\n";
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
