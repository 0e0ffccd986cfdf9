#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fundom/actions.hpp"
#include "fundom/project.hpp"

namespace fundom {

/// Configuration for discrete gradient descent over a group orbit.
///
/// The default reference (1,2,...,n) has distinct entries, so its stabilizer
/// inside any permutation action is trivial. The default generating set is
/// the group generators together with their inverses, except that symmetric
/// factors contribute adjacent transpositions instead.
struct DirichletConfig {
  std::vector<double> reference;
  std::vector<Perm> generating_set;
  std::int64_t max_steps = 100000;

  static DirichletConfig defaults(const Action& action);
};

/// Euclidean inner product with the reference vector; the quantity descent
/// minimizes over the orbit.
double dirichlet_objective(std::span<const double> x, std::span<const double> reference);
double dirichlet_objective(const std::vector<double>& x, const std::vector<double>& reference);

struct DescentResult {
  std::vector<double> canonical;
  Perm witness;
  std::int64_t steps = 0;
  std::int64_t seeds = 1;  // descent restarts taken (n1*n2 for multi-seed)
  double objective = 0.0;
  bool hit_step_limit = false;  // non-fatal: the result is still a valid orbit point
  std::vector<double> objective_trace;  // objective after each accepted step, starting value first
};

/// Greedy walk: at each step moves to the generator image that strictly
/// decreases the objective, preferring the identity (stopping) on ties and
/// otherwise the earliest generator in the configured order. Objective
/// comparisons are exact (no tolerance), so the walk always terminates at a
/// fixpoint or at the step cap.
DescentResult descend(const Action& action, std::span<const double> x, const DirichletConfig& cfg);
DescentResult descend(const Action& action, const std::vector<double>& x, const DirichletConfig& cfg);

/// Descent restarted from every cyclic double shift of a two-factor tensor
/// input: seeds C1^k x C2^m for 1 <= k <= n1, 1 <= m <= n2. Requires both
/// factor groups to contain their full cycle. Returns the best result,
/// breaking objective ties by the lexicographically smaller canonical vector.
DescentResult descend_multi_seed(const Action& action, std::span<const double> x, const DirichletConfig& cfg);
DescentResult descend_multi_seed(const Action& action, const std::vector<double>& x, const DirichletConfig& cfg);

/// Exact minimizer by full orbit enumeration; ties broken by the
/// lexicographically smallest orbit vector. The oracle the descent results
/// are measured against.
DescentResult brute_force_min(const StabilizerChain& chain, std::span<const double> x,
                              std::span<const double> reference, std::uint64_t bound);
DescentResult brute_force_min(const StabilizerChain& chain, const std::vector<double>& x,
                              const std::vector<double>& reference, std::uint64_t bound);

}  // namespace fundom
