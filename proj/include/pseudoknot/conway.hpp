#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pk {

/// Elementary tangle of extended Conway notation: 1, -1, or the precrossing i.
enum class Mark { Positive, Negative, Pre };

/// A horizontal twist; marks are read left to right. Never empty.
struct Twist {
  std::vector<Mark> marks;
  friend bool operator==(const Twist&, const Twist&) = default;
};

/// Conway product a_1 a_2 ... a_n of twists (rational tangle, numerator closure).
struct Product {
  std::vector<Twist> factors;
  friend bool operator==(const Product&, const Product&) = default;
};

/// Braid-closure summand, written `braid[1,-2,i1,...]`. Generator g > 0 is a
/// positive crossing between strands g and g+1; `i<g>` is a precrossing there.
/// Used for knots that have no rational Conway symbol (table entries, torus
/// shadows on three or more strands).
struct BraidLetter {
  int generator = 1;  // 1-based
  Mark mark = Mark::Positive;
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct BraidWord {
  std::vector<BraidLetter> letters;
  int strands() const;
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

using Summand = std::variant<Product, BraidWord>;

/// Parsed symbol. More than one summand means a connected sum.
struct ConwayAst {
  std::vector<Summand> summands;

  std::size_t crossing_count() const;
  std::size_t pre_count() const;
  bool is_rational() const;  // a single Product summand
  friend bool operator==(const ConwayAst&, const ConwayAst&) = default;
};

ConwayAst parse(std::string_view text);

/// Exponent shorthand: runs of i as i^p, of 1 as 1^q, of -1 as (-1)^q.
std::string print_concise(const ConwayAst& ast);
std::string print_twist(const Twist& t, bool parenthesize);

struct CanonicalTwists {
  ConwayAst ast;
  /// Some twist would have cancelled to zero crossings and was kept as (1,-1).
  bool irreducible_twist = false;
};

/// Cancel opposite classical crossings inside each twist and order the twist
/// as (i^p,1^q) or (i^p,(-1)^q). Braid summands are untouched.
CanonicalTwists canonical_twists(const ConwayAst& ast);

/// Convenience: product of twists given as signed integers (no precrossings).
ConwayAst rational_from_sequence(const std::vector<int>& seq);

} // namespace pk
