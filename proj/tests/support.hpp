#pragma once

#include <random>
#include <set>
#include <vector>

#include "fundom/perm.hpp"

namespace fundom::testing {

// Independent oracle: the full element set as the closure of the generators
// under multiplication. Deliberately avoids the stabilizer-chain machinery.
inline std::set<Perm> group_closure(const std::vector<Perm>& generators) {
  std::set<Perm> elements;
  if (generators.empty()) return elements;
  elements.insert(Perm::identity(generators.front().degree()));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> snapshot(elements.begin(), elements.end());
    for (const Perm& a : snapshot)
      for (const Perm& g : generators)
        if (elements.insert(compose(a, g)).second) grew = true;
  }
  return elements;
}

inline double next_double(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

inline std::vector<double> random_vector(std::mt19937_64& engine, int n) {
  std::vector<double> x(static_cast<size_t>(n));
  for (double& v : x) v = next_double(engine);
  return x;
}

}  // namespace fundom::testing
