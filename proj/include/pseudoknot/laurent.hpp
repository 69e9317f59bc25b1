#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pk {

/// Exact Laurent polynomial in one variable with 64-bit integer coefficients.
///
/// Stored densely from the lowest nonzero exponent; zero coefficients at
/// either end are trimmed so equal polynomials have equal representations.
/// Arithmetic throws std::overflow_error rather than wrapping.
class LaurentPoly {
public:
  LaurentPoly() = default;

  static LaurentPoly monomial(std::int64_t coeff, int exponent);
  static LaurentPoly one() { return monomial(1, 0); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int min_degree() const noexcept { return low_; }
  int max_degree() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coefficient(int exponent) const noexcept;

  /// Multiply by c * x^e.
  LaurentPoly scaled(std::int64_t c, int e) const;
  /// x -> x^{-1}
  LaurentPoly inverted() const;
  /// Exact division; throws std::domain_error when the remainder is nonzero.
  LaurentPoly divide_exact(const LaurentPoly& divisor) const;
  /// Quotient if the division is exact, nullopt otherwise.
  std::optional<LaurentPoly> try_divide(const LaurentPoly& divisor) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly pow(unsigned n) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

  /// e.g. "-A^-3+A^5"; zero renders as "0".
  std::string to_string(char var = 'A') const;

  std::size_t hash() const noexcept;

  /// (exponent, coefficient) pairs for nonzero terms, ascending exponent.
  std::vector<std::pair<int, std::int64_t>> terms() const;

private:
  void trim();

  int low_ = 0;
  std::vector<std::int64_t> coeffs_;
};

/// The loop value -A^2 - A^-2 of the bracket.
const LaurentPoly& loop_value();

struct LaurentPolyHash {
  std::size_t operator()(const LaurentPoly& p) const noexcept { return p.hash(); }
};

} // namespace pk
