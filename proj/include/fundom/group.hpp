#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "fundom/perm.hpp"

namespace fundom {

/// How a group was constructed; lets callers pick closed-form fast paths.
enum class GroupKind { Generic, Symmetric, Alternating, Cyclic, Dihedral };

/// A permutation group given by generators. The identity-only group is
/// represented by generators = {identity}.
struct PermGroup {
  int degree = 0;
  std::vector<Perm> generators;
  GroupKind kind = GroupKind::Generic;

  static PermGroup from_generators(int degree, std::vector<Perm> generators,
                                   GroupKind kind = GroupKind::Generic);
  static PermGroup trivial(int degree);
};

/// Orbit of a point under the right action i.s = s^-1(i), together with a
/// transversal: for each orbit point j an element u_j with b.u_j = j (and
/// therefore u_j(j) = b). The orbit is kept in BFS discovery order and
/// transversal[b] is the identity.
struct OrbitTransversal {
  std::vector<int> orbit;
  std::map<int, Perm> transversal;
};

OrbitTransversal orbit_with_transversal(const std::vector<Perm>& generators, int point);

/// One level of a stabilizer chain: base point b_i, a generating set for
/// G_{i-1}, the orbit Delta_i = b_i . G_{i-1} in BFS order, and the Schreier
/// transversal indexed by orbit point.
struct ChainLevel {
  int base = 0;
  std::vector<Perm> generators;
  std::vector<int> orbit;
  std::vector<Perm> transversal_by_point;  // size degree+1; valid on orbit points
  std::vector<char> in_orbit;              // size degree+1

  const Perm& transversal(int point) const { return transversal_by_point[static_cast<size_t>(point)]; }
};

/// Base-and-strong-generating-set data for a permutation group, built by a
/// deterministic Schreier-Sims run. Immutable after construction.
class StabilizerChain {
public:
  /// Greedy base: at every level the base point is the smallest point moved
  /// by the current stabilizer, which makes the base orbit-minimal.
  static StabilizerChain build(const PermGroup& group);

  /// Same algorithm with a prescribed base prefix; remaining points are
  /// appended in natural order, so the prefix need not be a full base.
  static StabilizerChain build_with_base(const PermGroup& group, const std::vector<int>& base_prefix);

  int degree() const { return degree_; }
  const std::vector<ChainLevel>& levels() const { return levels_; }
  std::vector<int> base() const;

  std::uint64_t order() const;

  /// Strips p level by level with transversal inverses; the residue is the
  /// identity exactly when p lies in the group.
  Perm sift(const Perm& p) const;
  bool contains(const Perm& p) const;

  /// All |G| elements exactly once, composed from transversal representatives
  /// across levels. Errors if the order exceeds the bound.
  std::vector<Perm> elements(std::uint64_t bound) const;

private:
  int degree_ = 0;
  std::vector<ChainLevel> levels_;
};

/// Deterministic pseudo-random group element: a product of word_length
/// uniformly chosen generators and inverse generators.
Perm random_element(const PermGroup& group, int word_length, std::uint64_t seed);

}  // namespace fundom
