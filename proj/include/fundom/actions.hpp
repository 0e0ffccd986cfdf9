#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "fundom/group.hpp"
#include "fundom/perm.hpp"

namespace fundom {

/// Named group constructors on {1,...,n}.
///
/// symmetric:  {(1 2), (1 2 ... n)}
/// alternating: {(1 2 3), (1 2 ... n)} for odd n, {(1 2 3), (2 3 ... n)} for even n
/// cyclic:     {(1 2 ... n)}
/// dihedral:   {(1 2 ... n), (2 n)(3 n-1)(4 n-2)...}
/// Degenerate small n collapse to the trivial group or a single transposition.
PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);
PermGroup cyclic_group(int n);
PermGroup dihedral_group(int n);

struct ActionSpec;

/// Plain action of a group on R^n by coordinate permutation.
struct PlainAction {
  PermGroup group;
};

/// Product group acting factor-wise on a direct sum; flat indices offset
/// factor j by the total degree of the earlier factors.
struct DirectSumAction {
  std::vector<ActionSpec> factors;
};

/// Product of groups H_j <= S_{n_j} acting on an n_1 x ... x n_r tensor, each
/// factor permuting its own index. Flattening is row-major:
/// (i_1,...,i_r) -> 1 + sum_j (i_j - 1) * prod_{j' > j} n_{j'}.
struct TensorAction {
  std::vector<PermGroup> factors;
};

struct ActionSpec {
  std::variant<PlainAction, DirectSumAction, TensorAction> node;

  static ActionSpec plain(PermGroup group);
  static ActionSpec direct_sum(std::vector<ActionSpec> factors);
  static ActionSpec tensor(std::vector<PermGroup> factors);

  bool is_plain() const { return std::holds_alternative<PlainAction>(node); }
  bool is_direct_sum() const { return std::holds_alternative<DirectSumAction>(node); }
  bool is_tensor() const { return std::holds_alternative<TensorAction>(node); }

  int degree() const;

  /// Tensor shape n_1,...,n_r; empty for non-tensor specs.
  std::vector<int> tensor_dims() const;
};

/// Flattens a structured action to a single permutation group on 1..degree.
PermGroup flatten(const ActionSpec& spec);

/// Lift of a single factor generator to the flat degree of a tensor action.
Perm lift_tensor_generator(const std::vector<int>& dims, int factor, const Perm& g);

/// Row-major flat index of a 1-indexed multi-index.
int flat_index(const std::vector<int>& dims, const std::vector<int>& multi_index);

/// The prescribed flat base of a structured action: for tensors the
/// all-ones multi-index followed by each factor's base tail (factor bases
/// must start at point 1); for direct sums the concatenation of factor bases
/// with offsets; for plain actions the greedy base of the group.
std::vector<int> structured_base(const ActionSpec& spec);

/// A spec bundled with its flattened group and stabilizer chain, plus factor
/// chains for tensor actions. Immutable; safe to share across threads.
class Action {
public:
  static Action build(ActionSpec spec);

  const ActionSpec& spec() const { return spec_; }
  const PermGroup& flat_group() const { return flat_; }
  const StabilizerChain& chain() const { return chain_; }
  int degree() const { return flat_.degree; }

  bool is_tensor() const { return spec_.is_tensor(); }
  const std::vector<int>& dims() const { return dims_; }
  const std::vector<StabilizerChain>& factor_chains() const { return factor_chains_; }

private:
  ActionSpec spec_{PlainAction{PermGroup::trivial(1)}};
  PermGroup flat_ = PermGroup::trivial(1);
  StabilizerChain chain_;
  std::vector<int> dims_;
  std::vector<StabilizerChain> factor_chains_;
};

}  // namespace fundom
