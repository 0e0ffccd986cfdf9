#include "fundom/dirichlet.hpp"

#include <algorithm>
#include <numeric>

namespace fundom {

namespace {

void append_adjacent_transpositions(std::vector<Perm>& out, const std::vector<int>& dims, int factor,
                                    int n, bool lift) {
  for (int i = 1; i < n; ++i) {
    Perm t = Perm::from_cycles("(" + std::to_string(i) + " " + std::to_string(i + 1) + ")", n);
    out.push_back(lift ? lift_tensor_generator(dims, factor, t) : std::move(t));
  }
}

void append_with_inverses(std::vector<Perm>& out, const Perm& g) {
  if (g.is_identity()) return;
  if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  Perm inv = g.inverse();
  if (std::find(out.begin(), out.end(), inv) == out.end()) out.push_back(std::move(inv));
}

}  // namespace

DirichletConfig DirichletConfig::defaults(const Action& action) {
  DirichletConfig cfg;
  cfg.reference.resize(static_cast<size_t>(action.degree()));
  std::iota(cfg.reference.begin(), cfg.reference.end(), 1.0);

  if (action.is_tensor()) {
    const auto& tensor = std::get<TensorAction>(action.spec().node);
    for (size_t j = 0; j < tensor.factors.size(); ++j) {
      const PermGroup& factor = tensor.factors[j];
      if (factor.kind == GroupKind::Symmetric && factor.degree > 1) {
        append_adjacent_transpositions(cfg.generating_set, action.dims(), static_cast<int>(j),
                                       factor.degree, true);
      } else {
        for (const Perm& g : factor.generators)
          append_with_inverses(cfg.generating_set, lift_tensor_generator(action.dims(), static_cast<int>(j), g));
      }
    }
  } else if (action.flat_group().kind == GroupKind::Symmetric && action.degree() > 1) {
    append_adjacent_transpositions(cfg.generating_set, {}, 0, action.degree(), false);
  } else {
    for (const Perm& g : action.flat_group().generators) append_with_inverses(cfg.generating_set, g);
  }
  if (cfg.generating_set.empty()) cfg.generating_set.push_back(Perm::identity(action.degree()));
  return cfg;
}

double dirichlet_objective(std::span<const double> x, std::span<const double> reference) {
  if (x.size() != reference.size()) throw InvalidArgument("objective: length mismatch");
  double sum = 0.0;
  for (size_t i = 0; i < x.size(); ++i) sum += x[i] * reference[i];
  return sum;
}

double dirichlet_objective(const std::vector<double>& x, const std::vector<double>& reference) {
  return dirichlet_objective(std::span<const double>(x), std::span<const double>(reference));
}

DescentResult descend(const Action& action, std::span<const double> x, const DirichletConfig& cfg) {
  if (static_cast<int>(x.size()) != action.degree()) throw InvalidArgument("descend: length mismatch");
  if (static_cast<int>(cfg.reference.size()) != action.degree())
    throw InvalidArgument("descend: reference length mismatch");

  DescentResult result;
  result.canonical.assign(x.begin(), x.end());
  result.witness = Perm::identity(action.degree());
  result.objective = dirichlet_objective(result.canonical, cfg.reference);
  result.objective_trace.push_back(result.objective);

  while (true) {
    if (result.steps >= cfg.max_steps) {
      result.hit_step_limit = true;
      break;
    }
    const Perm* best = nullptr;
    std::vector<double> best_vector;
    double best_objective = result.objective;
    for (const Perm& t : cfg.generating_set) {
      std::vector<double> moved = apply_to_vector(t, std::span<const double>(result.canonical));
      double objective = dirichlet_objective(moved, cfg.reference);
      if (objective < best_objective) {
        best_objective = objective;
        best_vector = std::move(moved);
        best = &t;
      }
    }
    if (best == nullptr) break;  // identity attains the minimum: fixpoint
    result.canonical = std::move(best_vector);
    result.witness = compose(*best, result.witness);
    result.objective = best_objective;
    result.objective_trace.push_back(best_objective);
    ++result.steps;
  }
  return result;
}

DescentResult descend(const Action& action, const std::vector<double>& x, const DirichletConfig& cfg) {
  return descend(action, std::span<const double>(x), cfg);
}

DescentResult descend_multi_seed(const Action& action, std::span<const double> x, const DirichletConfig& cfg) {
  if (!action.is_tensor() || action.dims().size() != 2)
    throw InvalidArgument("multi-seed descent requires a two-factor tensor action");
  const auto& tensor = std::get<TensorAction>(action.spec().node);
  const int rows = action.dims()[0];
  const int cols = action.dims()[1];

  const Perm row_cycle_factor = cyclic_group(rows).generators[0];
  const Perm col_cycle_factor = cyclic_group(cols).generators[0];
  if (!action.factor_chains()[0].contains(row_cycle_factor) ||
      !action.factor_chains()[1].contains(col_cycle_factor))
    throw InvalidArgument("multi-seed descent requires both factor groups to contain their full cycle");

  const Perm row_cycle = lift_tensor_generator(action.dims(), 0, row_cycle_factor);
  const Perm col_cycle = lift_tensor_generator(action.dims(), 1, col_cycle_factor);

  std::vector<Perm> row_powers{Perm::identity(action.degree())};
  for (int k = 1; k <= rows; ++k) row_powers.push_back(compose(row_cycle, row_powers.back()));
  std::vector<Perm> col_powers{Perm::identity(action.degree())};
  for (int m = 1; m <= cols; ++m) col_powers.push_back(compose(col_cycle, col_powers.back()));

  DescentResult best;
  bool have_best = false;
  for (int k = 1; k <= rows; ++k) {
    for (int m = 1; m <= cols; ++m) {
      Perm shift = compose(row_powers[static_cast<size_t>(k)], col_powers[static_cast<size_t>(m)]);
      std::vector<double> seed = apply_to_vector(shift, x);
      DescentResult candidate = descend(action, seed, cfg);
      candidate.witness = compose(candidate.witness, shift);
      bool take = !have_best || candidate.objective < best.objective ||
                  (candidate.objective == best.objective && candidate.canonical < best.canonical);
      if (take) {
        best = std::move(candidate);
        have_best = true;
      }
    }
  }
  best.seeds = static_cast<std::int64_t>(rows) * cols;
  return best;
}

DescentResult descend_multi_seed(const Action& action, const std::vector<double>& x, const DirichletConfig& cfg) {
  return descend_multi_seed(action, std::span<const double>(x), cfg);
}

DescentResult brute_force_min(const StabilizerChain& chain, std::span<const double> x,
                              std::span<const double> reference, std::uint64_t bound) {
  if (static_cast<int>(x.size()) != chain.degree()) throw InvalidArgument("brute force: length mismatch");
  DescentResult best;
  bool have_best = false;
  for (const Perm& g : chain.elements(bound)) {
    std::vector<double> moved = apply_to_vector(g, x);
    double objective = dirichlet_objective(moved, reference);
    bool take = !have_best || objective < best.objective ||
                (objective == best.objective && moved < best.canonical);
    if (take) {
      best.canonical = std::move(moved);
      best.witness = g;
      best.objective = objective;
      have_best = true;
    }
  }
  best.objective_trace.push_back(best.objective);
  return best;
}

DescentResult brute_force_min(const StabilizerChain& chain, const std::vector<double>& x,
                              const std::vector<double>& reference, std::uint64_t bound) {
  return brute_force_min(chain, std::span<const double>(x), std::span<const double>(reference), bound);
}

}  // namespace fundom
