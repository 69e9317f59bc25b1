#pragma once

#include "pseudoknot/diagram.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <string>

namespace pk::testing {

/// Random rational symbol with between 1 and max_crossings crossings whose
/// closure is a knot. pre_weight is the chance of each mark being `i`.
inline std::string random_knot_symbol(std::mt19937& rng, int max_crossings, double pre_weight) {
  std::uniform_int_distribution<int> total(1, max_crossings);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (;;) {
    int n = total(rng);
    std::string out;
    int left = n;
    while (left > 0) {
      int len = std::uniform_int_distribution<int>(1, left)(rng);
      left -= len;
      out += '(';
      for (int j = 0; j < len; ++j) {
        if (j)
          out += ',';
        double r = unit(rng);
        out += r < pre_weight ? "i" : r < pre_weight + (1 - pre_weight) * 0.7 ? "1" : "-1";
      }
      out += ')';
    }
    if (build(out).component_count() == 1)
      return out;
  }
}

/// Random knot symbol, sometimes a connected sum of two rational pieces.
inline std::string random_symbol_with_sums(std::mt19937& rng, int max_crossings, double pre_weight) {
  if (max_crossings >= 4 && std::uniform_int_distribution<int>(0, 4)(rng) == 0)
    return random_knot_symbol(rng, max_crossings / 2, pre_weight) + "#" +
           random_knot_symbol(rng, max_crossings / 2, pre_weight);
  return random_knot_symbol(rng, max_crossings, pre_weight);
}

/// Two darts on a common face that belong to different edges, for a clasp.
inline std::optional<std::pair<int, int>> clasp_darts(const PseudoDiagram& d, std::mt19937& rng) {
  auto fs = faces(d);
  std::shuffle(fs.begin(), fs.end(), rng);
  for (const auto& face : fs) {
    if (face.size() < 2)
      continue;
    for (std::size_t a = 0; a < face.size(); ++a)
      for (std::size_t b = 0; b < face.size(); ++b)
        if (a != b && face[b] != face[a] && face[b] != d.partner(face[a]))
          return std::make_pair(face[a], face[b]);
  }
  return std::nullopt;
}

} // namespace pk::testing
