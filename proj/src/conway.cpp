#include "pseudoknot/conway.hpp"

#include "pseudoknot/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace pk {

int BraidWord::strands() const {
  int top = 0;
  for (const auto& l : letters)
    top = std::max(top, l.generator);
  return top + 1;
}

std::size_t ConwayAst::crossing_count() const {
  std::size_t n = 0;
  for (const auto& s : summands) {
    if (const auto* p = std::get_if<Product>(&s))
      for (const auto& t : p->factors)
        n += t.marks.size();
    else
      n += std::get<BraidWord>(s).letters.size();
  }
  return n;
}

std::size_t ConwayAst::pre_count() const {
  std::size_t n = 0;
  for (const auto& s : summands) {
    if (const auto* p = std::get_if<Product>(&s)) {
      for (const auto& t : p->factors)
        n += static_cast<std::size_t>(std::count(t.marks.begin(), t.marks.end(), Mark::Pre));
    } else {
      for (const auto& l : std::get<BraidWord>(s).letters)
        n += l.mark == Mark::Pre;
    }
  }
  return n;
}

bool ConwayAst::is_rational() const {
  return summands.size() == 1 && std::holds_alternative<Product>(summands.front());
}

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : s_(text) {}

  ConwayAst symbol() {
    ConwayAst ast;
    ast.summands.push_back(summand());
    skip_ws();
    while (peek() == '#') {
      ++pos_;
      ast.summands.push_back(summand());
      skip_ws();
    }
    if (pos_ != s_.size())
      fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return ast;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool starts_factor() {
    skip_ws();
    char c = peek();
    return c == '(' || c == 'i' || c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c));
  }

  Summand summand() {
    skip_ws();
    if (s_.substr(pos_, 5) == "braid")
      return braid();
    Product p;
    if (!starts_factor())
      fail("expected a tangle");
    while (starts_factor())
      p.factors.push_back(factor());
    return p;
  }

  long integer(bool allow_sign) {
    std::size_t start = pos_;
    if (allow_sign && (peek() == '-' || peek() == '+'))
      ++pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected an integer");
    while (std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    std::string digits(s_.substr(start, pos_ - start));
    long v = std::strtol(digits.c_str(), nullptr, 10);
    if (v > 1000 || v < -1000) {
      pos_ = start;
      fail("integer tangle too large");
    }
    return v;
  }

  static void append(Twist& t, Mark m, long count) {
    t.marks.insert(t.marks.end(), static_cast<std::size_t>(count), m);
  }

  long exponent() {
    if (peek() != '^')
      return 1;
    ++pos_;
    std::size_t at = pos_;
    long e = integer(false);
    if (e <= 0) {
      pos_ = at;
      fail("exponent must be positive");
    }
    return e;
  }

  Twist factor() {
    skip_ws();
    Twist t;
    if (peek() == '(') {
      ++pos_;
      mark_into(t);
      skip_ws();
      while (peek() == ',') {
        ++pos_;
        mark_into(t);
        skip_ws();
      }
      if (peek() != ')')
        fail("expected ')'");
      ++pos_;
      // "(i)^2" style is not part of the notation; exponents live inside marks.
      return t;
    }
    if (peek() == 'i') {
      ++pos_;
      append(t, Mark::Pre, 1);
      return t;
    }
    std::size_t at = pos_;
    long v = integer(true);
    if (v == 0) {
      pos_ = at;
      fail("the 0 tangle is not supported");
    }
    append(t, v > 0 ? Mark::Positive : Mark::Negative, std::labs(v));
    return t;
  }

  void mark_into(Twist& t) {
    skip_ws();
    if (peek() == 'i') {
      ++pos_;
      append(t, Mark::Pre, exponent());
      return;
    }
    if (peek() == '(') {
      // (-1)^q
      std::size_t at = pos_;
      ++pos_;
      skip_ws();
      long v = integer(true);
      skip_ws();
      if (v != -1 || peek() != ')') {
        pos_ = at;
        fail("expected (-1)^q");
      }
      ++pos_;
      append(t, Mark::Negative, exponent());
      return;
    }
    std::size_t at = pos_;
    long v = integer(true);
    if (v == 0) {
      pos_ = at;
      fail("zero crossing mark");
    }
    if (peek() == '^') {
      if (v != 1) {
        pos_ = at;
        fail("only 1^q, i^p and (-1)^q take exponents");
      }
      append(t, Mark::Positive, exponent());
      return;
    }
    append(t, v > 0 ? Mark::Positive : Mark::Negative, std::labs(v));
  }

  Summand braid() {
    pos_ += 5;
    skip_ws();
    if (peek() != '[')
      fail("expected '[' after braid");
    ++pos_;
    BraidWord w;
    for (;;) {
      skip_ws();
      BraidLetter l;
      std::size_t at = pos_;
      if (peek() == 'i') {
        ++pos_;
        l.mark = Mark::Pre;
        l.generator = static_cast<int>(integer(false));
      } else {
        long g = integer(true);
        l.mark = g > 0 ? Mark::Positive : Mark::Negative;
        l.generator = static_cast<int>(std::labs(g));
      }
      if (l.generator == 0) {
        pos_ = at;
        fail("braid generators start at 1");
      }
      w.letters.push_back(l);
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == ']') {
        ++pos_;
        break;
      }
      fail("expected ',' or ']'");
    }
    return w;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string run(Mark m, std::size_t count) {
  std::string base;
  switch (m) {
  case Mark::Pre: base = "i"; break;
  case Mark::Positive: base = "1"; break;
  case Mark::Negative: base = count == 1 ? "-1" : "(-1)"; break;
  }
  if (count > 1)
    base += "^" + std::to_string(count);
  return base;
}

std::string print_braid(const BraidWord& w) {
  std::string out = "braid[";
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    const auto& l = w.letters[i];
    if (i)
      out += ',';
    if (l.mark == Mark::Pre)
      out += 'i';
    else if (l.mark == Mark::Negative)
      out += '-';
    out += std::to_string(l.generator);
  }
  return out + "]";
}

} // namespace

ConwayAst parse(std::string_view text) { return Parser(text).symbol(); }

std::string print_twist(const Twist& t, bool parenthesize) {
  std::string body;
  for (std::size_t i = 0; i < t.marks.size();) {
    std::size_t j = i;
    while (j < t.marks.size() && t.marks[j] == t.marks[i])
      ++j;
    if (!body.empty())
      body += ',';
    body += run(t.marks[i], j - i);
    i = j;
  }
  return parenthesize ? "(" + body + ")" : body;
}

std::string print_concise(const ConwayAst& ast) {
  std::string out;
  for (std::size_t s = 0; s < ast.summands.size(); ++s) {
    if (s)
      out += '#';
    const auto& summand = ast.summands[s];
    if (const auto* p = std::get_if<Product>(&summand)) {
      bool lone = ast.summands.size() == 1 && p->factors.size() == 1 && p->factors[0].marks.size() == 1;
      for (const auto& t : p->factors)
        out += print_twist(t, !lone);
    } else {
      out += print_braid(std::get<BraidWord>(summand));
    }
  }
  return out;
}

CanonicalTwists canonical_twists(const ConwayAst& ast) {
  CanonicalTwists out;
  out.ast = ast;
  for (auto& summand : out.ast.summands) {
    auto* p = std::get_if<Product>(&summand);
    if (!p)
      continue;
    for (auto& t : p->factors) {
      auto pre = std::count(t.marks.begin(), t.marks.end(), Mark::Pre);
      auto pos = std::count(t.marks.begin(), t.marks.end(), Mark::Positive);
      auto neg = std::count(t.marks.begin(), t.marks.end(), Mark::Negative);
      t.marks.assign(static_cast<std::size_t>(pre), Mark::Pre);
      if (pre == 0 && pos == neg) {
        t.marks = {Mark::Positive, Mark::Negative};
        out.irreducible_twist = true;
        continue;
      }
      auto net = pos - neg;
      t.marks.insert(t.marks.end(), static_cast<std::size_t>(net > 0 ? net : -net),
                     net > 0 ? Mark::Positive : Mark::Negative);
    }
  }
  return out;
}

ConwayAst rational_from_sequence(const std::vector<int>& seq) {
  Product p;
  for (int a : seq) {
    if (a == 0)
      throw DomainError("rational_from_sequence: zero twist");
    Twist t;
    t.marks.assign(static_cast<std::size_t>(a > 0 ? a : -a), a > 0 ? Mark::Positive : Mark::Negative);
    p.factors.push_back(std::move(t));
  }
  return ConwayAst{{std::move(p)}};
}

} // namespace pk
