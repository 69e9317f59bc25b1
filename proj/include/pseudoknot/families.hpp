#pragma once

#include "pseudoknot/conway.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pk {

/// p/q in lowest terms with p >= 0; the sign lives in q.
struct Fraction {
  std::int64_t p = 1;
  std::int64_t q = 0;
  std::string to_string() const { return std::to_string(p) + "/" + std::to_string(q); }
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// Exact counts keyed by a descriptor, in presentation order.
struct CountTable {
  std::vector<std::pair<std::string, std::uint64_t>> rows;
  std::uint64_t total = 0;

  std::uint64_t count(const std::string& descriptor) const;
  std::uint64_t sum() const;
  void add(const std::string& descriptor, std::uint64_t n);
};

std::uint64_t binomial(int n, int k);

/// sigma_1^l followed by n precrossings on two strands: C(n,k) ways to reach sigma_1^(l+n-2k).
/// Descriptors are the resulting exponents.
CountTable braid2_counts(int n, int l);

/// Resolutions of the (2,p)-torus shadow: "T(2,m)" for |m| >= 3, and "unknot".
CountTable torus2p_counts(int p);
int torus2p_knotting_number(int p);

/// Resolutions of the twist-knot shadow (i^(n-2))(i^2): "unknot" and "twist(c)"
/// for the twist knot with c crossings.
CountTable twist_shadow_counts(int n);
/// 3_1, 4_1, 5_2, 6_1, 7_2, 8_1, 9_2; empty beyond the bundled table.
std::string twist_knot_name(int crossings);

/// a_n + 1/(a_(n-1) + ... + 1/a_1). Throws DomainError on zero terms or a zero denominator.
Fraction continued_fraction(const std::vector<int>& seq);
/// Same evaluation projectively: zero twists are allowed and 1/0 is a legal
/// intermediate value. p = 0 means a two-component result.
Fraction twist_fraction(const std::vector<int>& seq);

bool schubert_equiv(const Fraction& a, const Fraction& b);
/// Representative of the Schubert class: smallest of q, q^-1 mod p.
Fraction schubert_canonical(const Fraction& f);
/// Same, identifying a knot with its mirror image.
Fraction schubert_canonical_unoriented(const Fraction& f);
/// Positive continued fraction expansion of a class with p >= 2, suitable for build().
std::vector<int> rational_sequence(const Fraction& f);

/// Product of C(a_i, k_i).
std::uint64_t rational_shadow_count(const std::vector<int>& seq, const std::vector<int>& kvec);
/// Resolutions of the shadow of a_1 ... a_n grouped by the unoriented Schubert class of the result.
std::vector<std::pair<Fraction, std::uint64_t>> rational_shadow_classes(const std::vector<int>& seq);

/// Crossing-change distance from a rational pseudodiagram with at most one
/// precrossing to one whose resolutions are all unknots, through minimal
/// diagrams. Throws DomainError for unsupported input or when depth_cap is reached.
int bj_unknotting(const ConwayAst& ast, int depth_cap = 8);

} // namespace pk
