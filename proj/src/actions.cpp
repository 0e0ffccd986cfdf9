#include "fundom/actions.hpp"

#include <numeric>
#include <string>

namespace fundom {

PermGroup symmetric_group(int n) {
  if (n < 1) throw InvalidArgument("symmetric group needs n >= 1");
  if (n == 1) return PermGroup{1, {Perm::identity(1)}, GroupKind::Symmetric};
  std::vector<Perm> gens{Perm::from_cycles("(1 2)", n)};
  if (n > 2) {
    std::vector<int> cycle(static_cast<size_t>(n));
    for (int i = 1; i < n; ++i) cycle[static_cast<size_t>(i) - 1] = i + 1;
    cycle[static_cast<size_t>(n) - 1] = 1;
    gens.push_back(Perm::from_images(std::move(cycle)));
  }
  return PermGroup{n, std::move(gens), GroupKind::Symmetric};
}

PermGroup alternating_group(int n) {
  if (n < 1) throw InvalidArgument("alternating group needs n >= 1");
  if (n <= 2) return PermGroup{n, {Perm::identity(n)}, GroupKind::Alternating};
  std::vector<Perm> gens{Perm::from_cycles("(1 2 3)", n)};
  if (n > 3) {
    std::vector<int> images(static_cast<size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    if (n % 2 == 1) {
      for (int i = 1; i < n; ++i) images[static_cast<size_t>(i) - 1] = i + 1;
      images[static_cast<size_t>(n) - 1] = 1;
    } else {
      for (int i = 2; i < n; ++i) images[static_cast<size_t>(i) - 1] = i + 1;
      images[static_cast<size_t>(n) - 1] = 2;
    }
    gens.push_back(Perm::from_images(std::move(images)));
  }
  return PermGroup{n, std::move(gens), GroupKind::Alternating};
}

PermGroup cyclic_group(int n) {
  if (n < 1) throw InvalidArgument("cyclic group needs n >= 1");
  if (n == 1) return PermGroup{1, {Perm::identity(1)}, GroupKind::Cyclic};
  std::vector<int> images(static_cast<size_t>(n));
  for (int i = 1; i < n; ++i) images[static_cast<size_t>(i) - 1] = i + 1;
  images[static_cast<size_t>(n) - 1] = 1;
  return PermGroup{n, {Perm::from_images(std::move(images))}, GroupKind::Cyclic};
}

PermGroup dihedral_group(int n) {
  if (n < 1) throw InvalidArgument("dihedral group needs n >= 1");
  if (n == 1) return PermGroup{1, {Perm::identity(1)}, GroupKind::Dihedral};
  if (n == 2) return PermGroup{2, {Perm::from_cycles("(1 2)", 2)}, GroupKind::Dihedral};
  PermGroup rotation = cyclic_group(n);
  std::vector<int> reflect(static_cast<size_t>(n));
  reflect[0] = 1;
  for (int i = 2; i <= n; ++i) reflect[static_cast<size_t>(i) - 1] = n + 2 - i;
  std::vector<Perm> gens{rotation.generators[0], Perm::from_images(std::move(reflect))};
  return PermGroup{n, std::move(gens), GroupKind::Dihedral};
}

ActionSpec ActionSpec::plain(PermGroup group) { return ActionSpec{PlainAction{std::move(group)}}; }

ActionSpec ActionSpec::direct_sum(std::vector<ActionSpec> factors) {
  if (factors.empty()) throw InvalidArgument("direct sum needs at least one factor");
  return ActionSpec{DirectSumAction{std::move(factors)}};
}

ActionSpec ActionSpec::tensor(std::vector<PermGroup> factors) {
  if (factors.empty()) throw InvalidArgument("tensor action needs at least one factor");
  return ActionSpec{TensorAction{std::move(factors)}};
}

int ActionSpec::degree() const {
  if (const auto* plain = std::get_if<PlainAction>(&node)) return plain->group.degree;
  if (const auto* sum = std::get_if<DirectSumAction>(&node)) {
    int total = 0;
    for (const ActionSpec& f : sum->factors) total += f.degree();
    return total;
  }
  const auto& tensor = std::get<TensorAction>(node);
  long long total = 1;
  for (const PermGroup& f : tensor.factors) {
    total *= f.degree;
    if (total > 1'000'000) throw BoundExceeded("tensor degree too large");
  }
  return static_cast<int>(total);
}

std::vector<int> ActionSpec::tensor_dims() const {
  std::vector<int> dims;
  if (const auto* tensor = std::get_if<TensorAction>(&node))
    for (const PermGroup& f : tensor->factors) dims.push_back(f.degree);
  return dims;
}

int flat_index(const std::vector<int>& dims, const std::vector<int>& multi_index) {
  if (dims.size() != multi_index.size()) throw InvalidArgument("flat_index: rank mismatch");
  int flat = 0;
  for (size_t j = 0; j < dims.size(); ++j) {
    if (multi_index[j] < 1 || multi_index[j] > dims[j]) throw InvalidArgument("flat_index: index out of range");
    flat = flat * dims[j] + (multi_index[j] - 1);
  }
  return flat + 1;
}

Perm lift_tensor_generator(const std::vector<int>& dims, int factor, const Perm& g) {
  const size_t r = dims.size();
  if (factor < 0 || static_cast<size_t>(factor) >= r) throw InvalidArgument("lift: factor out of range");
  if (g.degree() != dims[static_cast<size_t>(factor)]) throw InvalidArgument("lift: generator degree mismatch");
  int total = 1;
  for (int d : dims) total *= d;
  std::vector<int> images(static_cast<size_t>(total));
  std::vector<int> index(r, 1);
  for (int flat = 1; flat <= total; ++flat) {
    std::vector<int> target = index;
    target[static_cast<size_t>(factor)] = g.image(index[static_cast<size_t>(factor)]);
    images[static_cast<size_t>(flat) - 1] = flat_index(dims, target);
    for (size_t j = r; j-- > 0;) {
      if (++index[j] <= dims[j]) break;
      index[j] = 1;
    }
  }
  return Perm::from_images(std::move(images));
}

namespace {

Perm shift_perm(const Perm& g, int offset, int total) {
  std::vector<int> images(static_cast<size_t>(total));
  std::iota(images.begin(), images.end(), 1);
  for (int i = 1; i <= g.degree(); ++i) images[static_cast<size_t>(offset + i) - 1] = offset + g.image(i);
  return Perm::from_images(std::move(images));
}

}  // namespace

PermGroup flatten(const ActionSpec& spec) {
  if (const auto* plain = std::get_if<PlainAction>(&spec.node)) return plain->group;

  if (const auto* sum = std::get_if<DirectSumAction>(&spec.node)) {
    const int total = spec.degree();
    std::vector<Perm> gens;
    int offset = 0;
    for (const ActionSpec& factor : sum->factors) {
      PermGroup flat = flatten(factor);
      for (const Perm& g : flat.generators)
        if (!g.is_identity()) gens.push_back(shift_perm(g, offset, total));
      offset += flat.degree;
    }
    if (gens.empty()) gens.push_back(Perm::identity(total));
    return PermGroup{total, std::move(gens), GroupKind::Generic};
  }

  const auto& tensor = std::get<TensorAction>(spec.node);
  const std::vector<int> dims = spec.tensor_dims();
  const int total = spec.degree();
  std::vector<Perm> gens;
  for (size_t j = 0; j < tensor.factors.size(); ++j)
    for (const Perm& g : tensor.factors[j].generators)
      if (!g.is_identity()) gens.push_back(lift_tensor_generator(dims, static_cast<int>(j), g));
  if (gens.empty()) gens.push_back(Perm::identity(total));
  return PermGroup{total, std::move(gens), GroupKind::Generic};
}

std::vector<int> structured_base(const ActionSpec& spec) {
  if (const auto* plain = std::get_if<PlainAction>(&spec.node))
    return StabilizerChain::build(plain->group).base();

  if (const auto* sum = std::get_if<DirectSumAction>(&spec.node)) {
    std::vector<int> base;
    int offset = 0;
    for (const ActionSpec& factor : sum->factors) {
      for (int b : structured_base(factor)) base.push_back(offset + b);
      offset += factor.degree();
    }
    return base;
  }

  const auto& tensor = std::get<TensorAction>(spec.node);
  const std::vector<int> dims = spec.tensor_dims();
  std::vector<std::vector<int>> factor_bases;
  bool any_nontrivial = false;
  for (const PermGroup& factor : tensor.factors) {
    std::vector<int> base = StabilizerChain::build(factor).base();
    if (!base.empty()) {
      any_nontrivial = true;
      if (base.front() != 1)
        throw InvalidArgument("tensor base requires every nontrivial factor base to start at point 1");
    }
    factor_bases.push_back(std::move(base));
  }
  if (!any_nontrivial) return {};

  std::vector<int> base;
  std::vector<int> ones(dims.size(), 1);
  base.push_back(flat_index(dims, ones));
  for (size_t j = 0; j < factor_bases.size(); ++j) {
    for (size_t t = 1; t < factor_bases[j].size(); ++t) {
      std::vector<int> multi = ones;
      multi[j] = factor_bases[j][t];
      base.push_back(flat_index(dims, multi));
    }
  }
  return base;
}

Action Action::build(ActionSpec spec) {
  Action action;
  action.flat_ = flatten(spec);
  action.dims_ = spec.tensor_dims();
  action.chain_ = StabilizerChain::build(action.flat_);
  if (const auto* tensor = std::get_if<TensorAction>(&spec.node))
    for (const PermGroup& factor : tensor->factors)
      action.factor_chains_.push_back(StabilizerChain::build(factor));
  action.spec_ = std::move(spec);
  return action;
}

}  // namespace fundom
