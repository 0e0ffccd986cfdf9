#pragma once

#include <span>
#include <vector>

#include "fundom/actions.hpp"

namespace fundom {

/// Perturbation vector used to break ties before ranking. Entries must be
/// pairwise distinct; the default (1/2n)(1,...,n) keeps the spread below 1,
/// which guarantees the perturbed entries preserve the relative order of the
/// input.
struct PerturbationConfig {
  std::vector<double> epsilon;

  static PerturbationConfig standard(int n);
  void validate() const;
};

enum class ProjectionKind { Ascending, Descending, AscendingAverage, DescendingAverage };

/// Rank vector of x + d*epsilon where d is the smallest gap between distinct
/// entries of x (d = 1 when all entries are equal). The result is a
/// permutation of 1..n; ranking uses a stable sort on (value, index) so the
/// outcome is deterministic even under pathological float collisions.
std::vector<int> rank_hat(std::span<const double> x, const PerturbationConfig& cfg);
std::vector<int> rank_hat(const std::vector<double>& x, const PerturbationConfig& cfg);

/// The witness of the ascending projection: walks the chain, at each level
/// transporting the minimal entry indexed by the orbit to the base point via
/// the Schreier transversal, and returns the product g_k...g_1 (g_1 applied
/// first). Works on any integer vector with distinct entries.
Perm phi_ascending(const StabilizerChain& chain, std::span<const int> hat);
Perm phi_descending(const StabilizerChain& chain, std::span<const int> hat);
Perm phi_ascending(const StabilizerChain& chain, const std::vector<int>& hat);
Perm phi_descending(const StabilizerChain& chain, const std::vector<int>& hat);

/// Equivariant averaging map: each entry is replaced by the sum over the
/// tensor factors of the mean of the fiber through it. Fiber sums are
/// accumulated in index order with compensated summation.
std::vector<double> mu_average(std::span<const double> x, const std::vector<int>& dims);
std::vector<double> mu_average(const std::vector<double>& x, const std::vector<int>& dims);

struct ProjectionResult {
  std::vector<double> canonical;
  Perm witness;
};

/// Canonicalizes x under the action. The witness satisfies
/// apply_to_vector(witness, x) == canonical bit-exactly; averaging kinds rank
/// mu(x) instead of x but always apply the witness to x itself. Averaging
/// kinds require a tensor spec. Passing cfg = nullptr uses the standard
/// perturbation.
ProjectionResult project(const Action& action, ProjectionKind kind, std::span<const double> x,
                         const PerturbationConfig* cfg = nullptr);
ProjectionResult project(const Action& action, ProjectionKind kind, const std::vector<double>& x,
                         const PerturbationConfig* cfg = nullptr);

/// Ascending witness for tensor actions computed factor-wise: locates the
/// minimal entry over the product of the factor orbits of 1, restricts to the
/// fibers through it and lifts the per-factor witnesses. Must agree with
/// phi_ascending on the flattened chain built with the structured base.
Perm phi_tensor_fastpath(const Action& action, std::span<const int> hat);
Perm phi_tensor_fastpath(const Action& action, const std::vector<int>& hat);

}  // namespace fundom
