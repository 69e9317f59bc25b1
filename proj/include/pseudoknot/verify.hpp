#pragma once

#include "pseudoknot/bracket.hpp"

#include <string>
#include <vector>

namespace pk {

/// Outcome of a closed-form or published-value check. Each line starts with PASS or FAIL.
struct CheckReport {
  bool pass = true;
  std::vector<std::string> lines;

  void record(bool ok, const std::string& what);
  std::string text() const;
};

/// torus2p_counts(p) against the unsigned WeRe-set of (i^p).
CheckReport check_torus2p(int p, const KnotTable& table = KnotTable::bundled(), int jobs = 0);
/// twist_shadow_counts(n) against the unsigned WeRe-set of (i^(n-2))(i^2).
CheckReport check_twist(int n, const KnotTable& table = KnotTable::bundled(), int jobs = 0);
/// rational_shadow_classes(seq) against the unsigned WeRe-set of the shadow of seq.
CheckReport check_rational(const std::vector<int>& seq, const KnotTable& table = KnotTable::bundled(), int jobs = 0);
/// Unsigned WeRe-set of the (3,4)-torus shadow against the published ten-entry set.
CheckReport check_torus34(const KnotTable& table = KnotTable::bundled(), int jobs = 0);
/// Unknot and trefoil counts of the (3,7)-torus shadow.
CheckReport check_torus37(const KnotTable& table = KnotTable::bundled(), int jobs = 0);
/// The amphicheiral families (1^p)(i)(1)(1^p), (1^p)(i)(i)(1^p) for p = 2, 3 and the chiral (i^2,1).
CheckReport check_amphi(const KnotTable& table = KnotTable::bundled());

/// Symbol of the (3,q)-torus shadow as a closed braid.
std::string torus3_shadow(int q);

} // namespace pk
