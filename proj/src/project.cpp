#include "fundom/project.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace fundom {

PerturbationConfig PerturbationConfig::standard(int n) {
  if (n < 1) throw InvalidArgument("perturbation: n must be >= 1");
  PerturbationConfig cfg;
  cfg.epsilon.resize(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) cfg.epsilon[static_cast<size_t>(i) - 1] = static_cast<double>(i) / (2.0 * n);
  return cfg;
}

void PerturbationConfig::validate() const {
  std::vector<double> sorted = epsilon;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1]) throw InvalidArgument("perturbation entries must be pairwise distinct");
}

std::vector<int> rank_hat(std::span<const double> x, const PerturbationConfig& cfg) {
  const size_t n = x.size();
  if (cfg.epsilon.size() != n) throw InvalidArgument("rank_hat: length mismatch");
  cfg.validate();

  std::vector<double> sorted(x.begin(), x.end());
  std::sort(sorted.begin(), sorted.end());
  double d = std::numeric_limits<double>::infinity();
  for (size_t i = 1; i < n; ++i)
    if (sorted[i] != sorted[i - 1]) d = std::min(d, sorted[i] - sorted[i - 1]);
  if (!std::isfinite(d)) d = 1.0;  // all entries equal

  std::vector<double> perturbed(n);
  for (size_t i = 0; i < n; ++i) perturbed[i] = x[i] + d * cfg.epsilon[i];

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (perturbed[static_cast<size_t>(a)] != perturbed[static_cast<size_t>(b)])
      return perturbed[static_cast<size_t>(a)] < perturbed[static_cast<size_t>(b)];
    return a < b;
  });
  std::vector<int> ranks(n);
  for (size_t r = 0; r < n; ++r) ranks[static_cast<size_t>(idx[r])] = static_cast<int>(r) + 1;
  return ranks;
}

std::vector<int> rank_hat(const std::vector<double>& x, const PerturbationConfig& cfg) {
  return rank_hat(std::span<const double>(x), cfg);
}

namespace {

template <typename Better>
Perm phi_walk(const StabilizerChain& chain, std::span<const int> hat, Better better) {
  if (static_cast<int>(hat.size()) != chain.degree()) throw InvalidArgument("phi: length mismatch");
  std::vector<int> working(hat.begin(), hat.end());
  Perm acc = Perm::identity(chain.degree());
  for (const ChainLevel& level : chain.levels()) {
    int pick = level.orbit.front();
    for (int j : level.orbit)
      if (better(working[static_cast<size_t>(j) - 1], working[static_cast<size_t>(pick) - 1])) pick = j;
    // u maps pick to the base point, so the picked entry lands on base.
    const Perm& u = level.transversal(pick);
    working = apply_to_vector(u, std::span<const int>(working));
    acc = compose(u, acc);
  }
  return acc;
}

}  // namespace

Perm phi_ascending(const StabilizerChain& chain, std::span<const int> hat) {
  return phi_walk(chain, hat, [](int a, int b) { return a < b; });
}

Perm phi_descending(const StabilizerChain& chain, std::span<const int> hat) {
  return phi_walk(chain, hat, [](int a, int b) { return a > b; });
}

Perm phi_ascending(const StabilizerChain& chain, const std::vector<int>& hat) {
  return phi_ascending(chain, std::span<const int>(hat));
}

Perm phi_descending(const StabilizerChain& chain, const std::vector<int>& hat) {
  return phi_descending(chain, std::span<const int>(hat));
}

namespace {

struct Kahan {
  double sum = 0.0;
  double carry = 0.0;
  void add(double v) {
    double y = v - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

std::vector<double> mu_average(std::span<const double> x, const std::vector<int>& dims) {
  if (dims.empty()) throw InvalidArgument("mu_average: empty shape");
  long long total = 1;
  for (int d : dims) {
    if (d < 1) throw InvalidArgument("mu_average: bad dimension");
    total *= d;
  }
  if (static_cast<long long>(x.size()) != total) throw InvalidArgument("mu_average: shape mismatch");

  const size_t r = dims.size();
  std::vector<int> strides(r, 1);
  for (size_t j = r - 1; j-- > 0;) strides[j] = strides[j + 1] * dims[j + 1];

  // fiber id for dimension j: linear index with coordinate j removed
  std::vector<std::vector<Kahan>> fiber_sums(r);
  for (size_t j = 0; j < r; ++j) fiber_sums[j].resize(static_cast<size_t>(total / dims[j]));

  std::vector<int> coord(r, 0);
  for (long long l = 0; l < total; ++l) {
    for (size_t j = 0; j < r; ++j) {
      long long fid = 0;
      for (size_t t = 0; t < r; ++t) {
        if (t == j) continue;
        fid = fid * dims[t] + coord[t];
      }
      fiber_sums[j][static_cast<size_t>(fid)].add(x[static_cast<size_t>(l)]);
    }
    for (size_t j = r; j-- > 0;) {
      if (++coord[j] < dims[j]) break;
      coord[j] = 0;
    }
  }

  std::vector<double> out(static_cast<size_t>(total));
  std::fill(coord.begin(), coord.end(), 0);
  for (long long l = 0; l < total; ++l) {
    double value = 0.0;
    for (size_t j = 0; j < r; ++j) {
      long long fid = 0;
      for (size_t t = 0; t < r; ++t) {
        if (t == j) continue;
        fid = fid * dims[t] + coord[t];
      }
      value += fiber_sums[j][static_cast<size_t>(fid)].sum / dims[j];
    }
    out[static_cast<size_t>(l)] = value;
    for (size_t j = r; j-- > 0;) {
      if (++coord[j] < dims[j]) break;
      coord[j] = 0;
    }
  }
  return out;
}

std::vector<double> mu_average(const std::vector<double>& x, const std::vector<int>& dims) {
  return mu_average(std::span<const double>(x), dims);
}

ProjectionResult project(const Action& action, ProjectionKind kind, std::span<const double> x,
                         const PerturbationConfig* cfg) {
  if (static_cast<int>(x.size()) != action.degree()) throw InvalidArgument("project: length mismatch");
  const bool averaging = kind == ProjectionKind::AscendingAverage || kind == ProjectionKind::DescendingAverage;
  if (averaging && !action.is_tensor())
    throw InvalidArgument("averaging projections require a tensor action");

  PerturbationConfig standard;
  if (cfg == nullptr) {
    standard = PerturbationConfig::standard(action.degree());
    cfg = &standard;
  }

  std::vector<int> hat;
  if (averaging) {
    hat = rank_hat(mu_average(x, action.dims()), *cfg);
  } else {
    hat = rank_hat(x, *cfg);
  }

  const bool ascending = kind == ProjectionKind::Ascending || kind == ProjectionKind::AscendingAverage;
  Perm witness = ascending ? phi_ascending(action.chain(), hat) : phi_descending(action.chain(), hat);
  return ProjectionResult{apply_to_vector(witness, x), std::move(witness)};
}

ProjectionResult project(const Action& action, ProjectionKind kind, const std::vector<double>& x,
                         const PerturbationConfig* cfg) {
  return project(action, kind, std::span<const double>(x), cfg);
}

Perm phi_tensor_fastpath(const Action& action, std::span<const int> hat) {
  if (!action.is_tensor()) throw InvalidArgument("fastpath requires a tensor action");
  if (static_cast<int>(hat.size()) != action.degree()) throw InvalidArgument("fastpath: length mismatch");
  const auto& tensor = std::get<TensorAction>(action.spec().node);
  const std::vector<int>& dims = action.dims();
  const size_t r = dims.size();

  for (const StabilizerChain& chain : action.factor_chains()) {
    std::vector<int> base = chain.base();
    if (!base.empty() && base.front() != 1)
      throw InvalidArgument("fastpath requires factor bases starting at point 1");
  }

  // Product of the factor orbits of point 1 is the G-orbit of the all-ones
  // index; pick the multi-index with minimal hat entry.
  std::vector<std::vector<int>> orbits;
  for (size_t j = 0; j < r; ++j)
    orbits.push_back(orbit_with_transversal(tensor.factors[j].generators, 1).orbit);

  long long combinations = 1;
  for (const auto& orbit : orbits) combinations *= static_cast<long long>(orbit.size());
  std::vector<int> best_index;
  int best_value = 0;
  for (long long t = 0; t < combinations; ++t) {
    std::vector<int> multi(r);
    long long rest = t;
    for (size_t j = r; j-- > 0;) {
      multi[j] = orbits[j][static_cast<size_t>(rest % static_cast<long long>(orbits[j].size()))];
      rest /= static_cast<long long>(orbits[j].size());
    }
    int value = hat[static_cast<size_t>(flat_index(dims, multi)) - 1];
    if (t == 0 || value < best_value) {
      best_value = value;
      best_index = multi;
    }
  }

  Perm acc = Perm::identity(action.degree());
  for (size_t j = 0; j < r; ++j) {
    std::vector<int> fiber(static_cast<size_t>(dims[j]));
    std::vector<int> multi = best_index;
    for (int l = 1; l <= dims[j]; ++l) {
      multi[j] = l;
      fiber[static_cast<size_t>(l) - 1] = hat[static_cast<size_t>(flat_index(dims, multi)) - 1];
    }
    Perm factor_phi = phi_ascending(action.factor_chains()[j], fiber);
    acc = compose(lift_tensor_generator(dims, static_cast<int>(j), factor_phi), acc);
  }
  return acc;
}

Perm phi_tensor_fastpath(const Action& action, const std::vector<int>& hat) {
  return phi_tensor_fastpath(action, std::span<const int>(hat));
}

}  // namespace fundom
