#include "pseudoknot/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace pk {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("LaurentPoly: coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("LaurentPoly: coefficient overflow");
  return r;
}

} // namespace

LaurentPoly LaurentPoly::monomial(std::int64_t coeff, int exponent) {
  LaurentPoly p;
  if (coeff != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(coeff);
  }
  return p;
}

std::int64_t LaurentPoly::coefficient(int exponent) const noexcept {
  if (coeffs_.empty() || exponent < low_ || exponent > max_degree())
    return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

void LaurentPoly::trim() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](std::int64_t c) { return c != 0; });
  coeffs_.erase(last.base(), coeffs_.end());
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
}

LaurentPoly LaurentPoly::scaled(std::int64_t c, int e) const {
  if (c == 0 || is_zero())
    return {};
  LaurentPoly r = *this;
  r.low_ += e;
  if (c != 1)
    for (auto& x : r.coeffs_)
      x = checked_mul(x, c);
  return r;
}

LaurentPoly LaurentPoly::inverted() const {
  if (is_zero())
    return {};
  LaurentPoly r;
  r.low_ = -max_degree();
  r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero())
    return *this;
  if (is_zero())
    return *this = rhs;
  int lo = std::min(low_, rhs.low_);
  int hi = std::max(max_degree(), rhs.max_degree());
  if (lo < low_ || hi > max_degree()) {
    std::vector<std::int64_t> grown(static_cast<std::size_t>(hi - lo + 1), 0);
    std::copy(coeffs_.begin(), coeffs_.end(), grown.begin() + (low_ - lo));
    coeffs_.swap(grown);
    low_ = lo;
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    auto& slot = coeffs_[static_cast<std::size_t>(rhs.low_ - low_) + i];
    slot = checked_add(slot, rhs.coeffs_[i]);
  }
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += rhs.scaled(-1, 0); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero())
    return {};
  LaurentPoly r;
  r.low_ = a.low_ + b.low_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] = checked_add(r.coeffs_[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
  }
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result = one();
  LaurentPoly base = *this;
  while (n) {
    if (n & 1u)
      result = result * base;
    n >>= 1u;
    if (n)
      base = base * base;
  }
  return result;
}

std::optional<LaurentPoly> LaurentPoly::try_divide(const LaurentPoly& divisor) const {
  if (divisor.is_zero())
    throw std::domain_error("LaurentPoly: division by zero");
  if (is_zero())
    return LaurentPoly{};
  LaurentPoly rem = *this;
  LaurentPoly quot;
  const std::int64_t lead = divisor.coeffs_.back();
  while (!rem.is_zero()) {
    if (rem.max_degree() - divisor.max_degree() < rem.min_degree() - divisor.min_degree())
      return std::nullopt;
    std::int64_t top = rem.coeffs_.back();
    if (top % lead != 0)
      return std::nullopt;
    LaurentPoly term = monomial(top / lead, rem.max_degree() - divisor.max_degree());
    quot += term;
    rem -= divisor * term;
  }
  return quot;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  auto q = try_divide(divisor);
  if (!q)
    throw std::domain_error("LaurentPoly: inexact division");
  return *std::move(q);
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.low_ != b.low_)
    return a.low_ < b.low_;
  return a.coeffs_ < b.coeffs_;
}

std::string LaurentPoly::to_string(char var) const {
  if (is_zero())
    return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    std::int64_t c = coeffs_[i];
    if (c == 0)
      continue;
    int e = low_ + static_cast<int>(i);
    if (c < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1 || e == 0)
      out += std::to_string(mag);
    if (e != 0) {
      out += var;
      if (e != 1)
        out += '^' + std::to_string(e);
    }
  }
  return out;
}

std::size_t LaurentPoly::hash() const noexcept {
  // FNV-1a over exponent and coefficients.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(low_)));
  for (auto c : coeffs_)
    mix(static_cast<std::uint64_t>(c));
  return static_cast<std::size_t>(h);
}

std::vector<std::pair<int, std::int64_t>> LaurentPoly::terms() const {
  std::vector<std::pair<int, std::int64_t>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0)
      out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
  return out;
}

const LaurentPoly& loop_value() {
  static const LaurentPoly d = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
  return d;
}

} // namespace pk
