#pragma once

#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wreath/actions.hpp"
#include "wreath/perm_group.hpp"

namespace testing_support {

inline oracle::Perm raw(const wreath::Permutation& p) { return {p.images().begin(), p.images().end()}; }

inline std::vector<oracle::Perm> raw_gens(const wreath::PermGroup& g) {
  std::vector<oracle::Perm> out;
  for (const auto& x : g.generators()) out.push_back(raw(x));
  return out;
}

inline wreath::Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  return wreath::Permutation(oracle::random_perm(n, rng));
}

/// Small groups used across the property tests.
inline const std::vector<std::string>& small_groups() {
  static const std::vector<std::string> specs{
      "cyclic:2",    "cyclic:3",     "cyclic:4",       "cyclic:6",  "gens:4,(1 2)(3 4),(1 3)(2 4)",
      "symmetric:3", "symmetric:4",  "alternating:4",  "dihedral:4", "dihedral:5",
      "wreath-cyclic:2", "wreath-cyclic:3", "quaternion", "subsets:4,2", "subsets:5,2",
      "product:3,1,2", "gens:(1 2),(3 4)", "gens:6,(1 2 3)"};
  return specs;
}

}  // namespace testing_support
