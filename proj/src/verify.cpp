#include "fundom/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include <json.hpp>

#include "fundom/serialize.hpp"

namespace fundom {

namespace {

using nlohmann::json;

constexpr int kMaxBruteDegree = 8;
constexpr std::uint64_t kMaxEnumeration = 1'000'000;
constexpr std::uint64_t kMaxTransversal = 100'000;

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Deterministic double in [0, 1) independent of the standard library's
// distribution implementations.
double next_double(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

std::vector<double> random_vector(std::mt19937_64& engine, int n) {
  std::vector<double> x(static_cast<size_t>(n));
  for (double& v : x) v = next_double(engine);
  return x;
}

std::vector<double> random_small_int_vector(std::mt19937_64& engine, int n, int alphabet) {
  std::vector<double> x(static_cast<size_t>(n));
  for (double& v : x) v = static_cast<double>(engine() % static_cast<std::uint64_t>(alphabet));
  return x;
}

bool distinct_entries(const std::vector<double>& x) {
  std::vector<double> sorted = x;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace

PermGroup conjugate_group(const PermGroup& group, const Perm& s) {
  if (s.degree() != group.degree) throw InvalidArgument("conjugate: degree mismatch");
  const Perm s_inv = s.inverse();
  std::vector<Perm> gens;
  gens.reserve(group.generators.size());
  for (const Perm& g : group.generators) gens.push_back(compose(compose(s_inv, g), s));
  return PermGroup{group.degree, std::move(gens), GroupKind::Generic};
}

std::vector<int> conjugate_base(const std::vector<int>& base, const Perm& s) {
  std::vector<int> out;
  out.reserve(base.size());
  for (int b : base) out.push_back(act_on_point(b, s));
  return out;
}

std::vector<std::vector<std::vector<int>>> dixon_partitions(const StabilizerChain& chain) {
  const int n = chain.degree();
  std::vector<std::vector<int>> current;
  std::vector<int> all(static_cast<size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  current.push_back(all);

  std::vector<std::vector<std::vector<int>>> out{current};
  for (const ChainLevel& level : chain.levels()) {
    size_t gamma_index = current.size();
    for (size_t t = 0; t < current.size(); ++t)
      if (std::find(current[t].begin(), current[t].end(), level.base) != current[t].end()) {
        gamma_index = t;
        break;
      }
    if (gamma_index == current.size()) throw InvalidArgument("partition recursion lost the base point");

    const std::vector<int> gamma = current[gamma_index];
    std::set<int> delta(level.orbit.begin(), level.orbit.end());
    for (int p : level.orbit)
      if (std::find(gamma.begin(), gamma.end(), p) == gamma.end())
        throw InvalidArgument("orbit escapes its partition block; chain is not orbit-minimal");

    std::vector<int> delta_rest, gamma_rest;
    for (int p : gamma) {
      if (p == level.base) continue;
      (delta.contains(p) ? delta_rest : gamma_rest).push_back(p);
    }

    std::vector<std::vector<int>> next;
    for (size_t t = 0; t < current.size(); ++t) {
      if (t != gamma_index) {
        next.push_back(current[t]);
        continue;
      }
      next.push_back({level.base});
      if (!delta_rest.empty()) next.push_back(delta_rest);
      if (!gamma_rest.empty()) next.push_back(gamma_rest);
    }
    current = std::move(next);
    out.push_back(current);
  }
  return out;
}

Perm reindex_relabeling(const StabilizerChain& chain) {
  const auto partitions = dixon_partitions(chain);
  std::vector<int> images;  // new position -> old point
  for (const std::vector<int>& part : partitions.back())
    for (int p : part) images.push_back(p);
  return Perm::from_images(std::move(images));
}

namespace {

// All l-element subsets of a sorted list, in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(const std::vector<int>& items, int l) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick;
  auto recurse = [&](auto&& self, size_t from) -> void {
    if (static_cast<int>(pick.size()) == l) {
      out.push_back(pick);
      return;
    }
    for (size_t t = from; t < items.size(); ++t) {
      pick.push_back(items[t]);
      self(self, t + 1);
      pick.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

void sort_values_at(std::vector<int>& w, const std::vector<int>& positions) {
  std::vector<int> values;
  values.reserve(positions.size());
  for (int p : positions) values.push_back(w[static_cast<size_t>(p) - 1]);
  std::sort(values.begin(), values.end());
  for (size_t t = 0; t < positions.size(); ++t) w[static_cast<size_t>(positions[t]) - 1] = values[t];
}

std::vector<Perm> symmetric_on_points(const std::vector<int>& points, int degree) {
  std::vector<int> arrangement = points;  // sorted
  std::vector<Perm> out;
  do {
    std::vector<int> images(static_cast<size_t>(degree));
    std::iota(images.begin(), images.end(), 1);
    for (size_t t = 0; t < points.size(); ++t) images[static_cast<size_t>(points[t]) - 1] = arrangement[t];
    out.push_back(Perm::from_images(std::move(images)));
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  return out;
}

}  // namespace

DixonData dixon_transversal(const StabilizerChain& chain, std::uint64_t bound) {
  const int n = chain.degree();
  if (n > kMaxBruteDegree) throw BoundExceeded("dixon transversal limited to degree <= 8");
  if (!reindex_relabeling(chain).is_identity())
    throw InvalidArgument("dixon transversal requires a reindexed chain (conjugate the group first)");

  const std::uint64_t order = chain.order();
  const std::uint64_t nfact = factorial(n);
  const std::uint64_t expected = nfact / order;
  if (expected > bound || expected > kMaxTransversal)
    throw BoundExceeded("transversal size " + std::to_string(expected) + " exceeds bound");

  DixonData data;
  data.partitions = dixon_partitions(chain);

  for (size_t i = 0; i < chain.levels().size(); ++i) {
    const ChainLevel& level = chain.levels()[i];
    const auto& before = data.partitions[i];
    std::vector<int> gamma;
    for (const std::vector<int>& part : before)
      if (std::find(part.begin(), part.end(), level.base) != part.end()) gamma = part;

    std::vector<int> delta = level.orbit;
    std::sort(delta.begin(), delta.end());
    std::vector<int> rest;
    for (int p : gamma)
      if (!std::binary_search(delta.begin(), delta.end(), p)) rest.push_back(p);

    std::vector<Perm> u_tilde;
    const int pair_max = static_cast<int>(std::min(delta.size(), rest.size()));
    for (int l = 0; l <= pair_max; ++l) {
      for (const std::vector<int>& a : subsets_of_size(delta, l)) {
        for (const std::vector<int>& b : subsets_of_size(rest, l)) {
          std::vector<int> images(static_cast<size_t>(n));
          std::iota(images.begin(), images.end(), 1);
          for (int t = 0; t < l; ++t) {
            images[static_cast<size_t>(a[static_cast<size_t>(t)]) - 1] = b[static_cast<size_t>(t)];
            images[static_cast<size_t>(b[static_cast<size_t>(t)]) - 1] = a[static_cast<size_t>(t)];
          }
          u_tilde.push_back(Perm::from_images(std::move(images)));
        }
      }
    }

    std::vector<Perm> u_set;
    u_set.reserve(u_tilde.size());
    for (const Perm& ut : u_tilde) {
      std::vector<int> w = rho(ut);
      sort_values_at(w, delta);
      sort_values_at(w, rest);
      u_set.push_back(Perm::from_images(std::move(w)).inverse());
    }

    data.gamma.push_back(std::move(gamma));
    data.u_tilde.push_back(std::move(u_tilde));
    data.u_sets.push_back(std::move(u_set));
  }

  data.terminal = {Perm::identity(n)};
  for (const std::vector<int>& part : data.partitions.back()) {
    if (part.size() < 2) continue;
    std::vector<Perm> grown;
    for (const Perm& h : symmetric_on_points(part, n))
      for (const Perm& acc : data.terminal) grown.push_back(compose(h, acc));
    data.terminal = std::move(grown);
    if (data.terminal.size() > expected) throw BoundExceeded("terminal factor larger than the transversal");
  }

  std::vector<Perm> transversal{Perm::identity(n)};
  for (const std::vector<Perm>& u_set : data.u_sets) {
    std::vector<Perm> grown;
    grown.reserve(transversal.size() * u_set.size());
    for (const Perm& u : u_set)
      for (const Perm& acc : transversal) grown.push_back(compose(u, acc));
    transversal = std::move(grown);
  }
  {
    std::vector<Perm> grown;
    grown.reserve(transversal.size() * data.terminal.size());
    for (const Perm& h : data.terminal)
      for (const Perm& acc : transversal) grown.push_back(compose(h, acc));
    transversal = std::move(grown);
  }

  std::set<Perm> unique(transversal.begin(), transversal.end());
  if (unique.size() != transversal.size() || transversal.size() != expected)
    throw InvalidArgument("transversal construction produced " + std::to_string(unique.size()) +
                          " distinct elements, expected " + std::to_string(expected));
  data.transversal = std::move(transversal);
  return data;
}

TransversalReport check_transversal(const DixonData& data, const StabilizerChain& chain) {
  TransversalReport report;
  report.size = data.transversal.size();
  report.expected = factorial(chain.degree()) / chain.order();

  report.disjoint = true;
  for (size_t a = 0; a < data.transversal.size() && report.disjoint; ++a)
    for (size_t b = a + 1; b < data.transversal.size(); ++b)
      if (chain.contains(compose(data.transversal[a], data.transversal[b].inverse()))) {
        report.disjoint = false;
        break;
      }
  report.covers = report.disjoint && report.size == report.expected &&
                  report.size * chain.order() == factorial(chain.degree());
  return report;
}

namespace {

template <typename Visit>
void for_each_rank_vector(int n, Visit visit) {
  if (n > kMaxBruteDegree) throw BoundExceeded("rank-vector enumeration limited to degree <= 8");
  std::vector<int> c(static_cast<size_t>(n));
  std::iota(c.begin(), c.end(), 1);
  do {
    visit(c);
  } while (std::next_permutation(c.begin(), c.end()));
}

}  // namespace

std::uint64_t count_canonical_forms(const StabilizerChain& chain, ProjectionKind kind) {
  if (kind != ProjectionKind::Ascending && kind != ProjectionKind::Descending)
    throw InvalidArgument("counting is defined for the ascending and descending kinds");
  std::set<std::vector<int>> forms;
  for_each_rank_vector(chain.degree(), [&](const std::vector<int>& c) {
    Perm phi = kind == ProjectionKind::Ascending ? phi_ascending(chain, c) : phi_descending(chain, c);
    forms.insert(apply_to_vector(phi, c));
  });
  return forms.size();
}

std::vector<std::vector<int>> ascending_image(const StabilizerChain& chain) {
  std::set<std::vector<int>> forms;
  for_each_rank_vector(chain.degree(), [&](const std::vector<int>& c) {
    forms.insert(apply_to_vector(phi_ascending(chain, c), c));
  });
  return {forms.begin(), forms.end()};
}

ImageReport characterize_image(const StabilizerChain& chain) {
  if (!reindex_relabeling(chain).is_identity())
    throw InvalidArgument("image characterization requires a reindexed chain (conjugate the group first)");

  std::set<std::vector<int>> image;
  std::set<std::vector<int>> predicted;
  for_each_rank_vector(chain.degree(), [&](const std::vector<int>& c) {
    image.insert(apply_to_vector(phi_ascending(chain, c), c));
    bool inside = true;
    for (const ChainLevel& level : chain.levels()) {
      for (int j : level.orbit)
        if (c[static_cast<size_t>(level.base) - 1] > c[static_cast<size_t>(j) - 1]) {
          inside = false;
          break;
        }
      if (!inside) break;
    }
    if (inside) predicted.insert(c);
  });

  ImageReport report;
  report.image_size = image.size();
  report.predicted_size = predicted.size();
  report.expected = factorial(chain.degree()) / chain.order();
  report.equal = image == predicted;
  return report;
}

GalleryResult gallery_connected(const std::vector<std::vector<int>>& vertices) {
  GalleryResult result;
  result.vertex_count = vertices.size();
  if (vertices.empty()) {
    result.connected = true;
    return result;
  }

  std::map<std::vector<int>, std::size_t> index;
  for (size_t t = 0; t < vertices.size(); ++t) index.emplace(vertices[t], t);

  const int n = static_cast<int>(vertices.front().size());
  std::vector<char> visited(vertices.size(), 0);
  std::vector<std::size_t> queue{0};
  visited[0] = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    const std::vector<int>& c = vertices[queue[head]];
    std::vector<int> position(static_cast<size_t>(n) + 1, 0);
    for (int p = 1; p <= n; ++p) position[static_cast<size_t>(c[static_cast<size_t>(p) - 1])] = p;
    for (int v = 1; v < n; ++v) {
      std::vector<int> swapped = c;
      std::swap(swapped[static_cast<size_t>(position[static_cast<size_t>(v)]) - 1],
                swapped[static_cast<size_t>(position[static_cast<size_t>(v) + 1]) - 1]);
      auto it = index.find(swapped);
      if (it != index.end() && !visited[it->second]) {
        visited[it->second] = 1;
        result.tree_edges.emplace_back(queue[head], it->second);
        queue.push_back(it->second);
      }
    }
  }
  result.connected = queue.size() == vertices.size();
  return result;
}

InvarianceStats harness_invariance(const Action& action, ProjectionKind kind, std::uint64_t samples,
                                   std::uint64_t seed) {
  InvarianceStats stats;
  std::mt19937_64 engine(seed);
  const int n = action.degree();
  const bool averaging = kind == ProjectionKind::AscendingAverage || kind == ProjectionKind::DescendingAverage;

  for (std::uint64_t trial = 0; trial < samples; ++trial) {
    std::vector<double> x;
    if (averaging) {
      // integer entries keep mu exact; retry until mu has distinct entries so
      // the ranking is tie-free
      do {
        x = random_small_int_vector(engine, n, 97);
      } while (!distinct_entries(mu_average(x, action.dims())));
    } else {
      do {
        x = random_vector(engine, n);
      } while (!distinct_entries(x));
    }
    Perm g = random_element(action.flat_group(), 2 * n + 4, engine());
    std::vector<double> gx = apply_to_vector(g, x);

    ProjectionResult base = project(action, kind, x);
    ProjectionResult moved = project(action, kind, gx);
    ++stats.trials;
    if (moved.canonical != base.canonical) ++stats.canonical_failures;
    if (moved.witness != compose(base.witness, g.inverse())) ++stats.cocycle_failures;
    ProjectionResult again = project(action, kind, base.canonical);
    if (again.canonical != base.canonical) ++stats.idempotence_failures;

    if (!averaging) {
      PerturbationConfig cfg = PerturbationConfig::standard(n);
      std::vector<int> hx = rank_hat(x, cfg);
      if (rank_hat(gx, cfg) != apply_to_vector(g, hx)) ++stats.rank_transport_failures;
    }
    if (action.is_tensor()) {
      std::vector<double> lhs = mu_average(gx, action.dims());
      std::vector<double> rhs = apply_to_vector(g, mu_average(x, action.dims()));
      for (size_t t = 0; t < lhs.size(); ++t)
        if (std::abs(lhs[t] - rhs[t]) > 1e-12) {
          ++stats.mu_failures;
          break;
        }
    }
  }

  // Tied inputs sit on chamber boundaries; invariance is measured, not asserted.
  for (std::uint64_t trial = 0; trial < samples; ++trial) {
    std::vector<double> x = random_small_int_vector(engine, n, 3);
    Perm g = random_element(action.flat_group(), 2 * n + 4, engine());
    ProjectionResult base = project(action, kind, x);
    ProjectionResult moved = project(action, kind, apply_to_vector(g, x));
    ++stats.tied_trials;
    if (moved.canonical == base.canonical) ++stats.tied_invariant;
  }
  return stats;
}

ConjugationStats harness_conjugation(const Action& action, const Perm& s, std::uint64_t samples,
                                     std::uint64_t seed) {
  if (s.degree() != action.degree()) throw InvalidArgument("conjugation: relabeling degree mismatch");
  ConjugationStats stats;
  std::mt19937_64 engine(seed);

  PermGroup conjugated = conjugate_group(action.flat_group(), s);
  StabilizerChain conj_chain =
      StabilizerChain::build_with_base(conjugated, conjugate_base(action.chain().base(), s));
  const Perm s_inv = s.inverse();
  PerturbationConfig cfg = PerturbationConfig::standard(action.degree());

  for (std::uint64_t trial = 0; trial < samples; ++trial) {
    std::vector<double> x;
    do {
      x = random_vector(engine, action.degree());
    } while (!distinct_entries(x));

    Perm phi = phi_ascending(action.chain(), rank_hat(x, cfg));
    std::vector<double> lhs = apply_to_vector(phi, x);

    std::vector<double> pulled = apply_to_vector(s_inv, x);
    Perm conj_phi = phi_ascending(conj_chain, rank_hat(pulled, cfg));
    std::vector<double> rhs = apply_to_vector(s, apply_to_vector(conj_phi, pulled));

    ++stats.trials;
    if (lhs != rhs) ++stats.failures;
  }
  return stats;
}

namespace {

json stats_to_json(const InvarianceStats& stats) {
  json j{{"trials", stats.trials},
         {"canonical_failures", stats.canonical_failures},
         {"cocycle_failures", stats.cocycle_failures},
         {"idempotence_failures", stats.idempotence_failures},
         {"rank_transport_failures", stats.rank_transport_failures},
         {"mu_failures", stats.mu_failures},
         {"tied_trials", stats.tied_trials}};
  if (stats.tied_trials > 0)
    j["tied_invariance_rate"] =
        static_cast<double>(stats.tied_invariant) / static_cast<double>(stats.tied_trials);
  return j;
}

std::uint64_t assertion_failures(const InvarianceStats& stats) {
  return stats.canonical_failures + stats.cocycle_failures + stats.idempotence_failures +
         stats.rank_transport_failures + stats.mu_failures;
}

struct ReindexedView {
  StabilizerChain chain;
  bool relabeled = false;
  std::string relabeling;
};

ReindexedView reindexed_chain(const Action& action) {
  ReindexedView view;
  Perm s = reindex_relabeling(action.chain());
  if (s.is_identity()) {
    view.chain = action.chain();
    return view;
  }
  PermGroup conjugated = conjugate_group(action.flat_group(), s);
  view.chain = StabilizerChain::build_with_base(conjugated, conjugate_base(action.chain().base(), s));
  view.relabeled = true;
  view.relabeling = s.cycles();
  return view;
}

}  // namespace

SuiteResult run_suite(const Action& action, const std::string& suite, std::uint64_t trials,
                      std::uint64_t seed) {
  json report;
  report["suite"] = suite;
  report["group_spec"] = json::parse(action_spec_to_json(action.spec()));
  report["trials"] = trials;
  json details = json::array();
  std::uint64_t failures = 0;

  if (suite == "invariance") {
    for (ProjectionKind kind : {ProjectionKind::Ascending, ProjectionKind::Descending}) {
      InvarianceStats stats = harness_invariance(action, kind, trials, seed);
      failures += assertion_failures(stats);
      json d = stats_to_json(stats);
      d["kind"] = kind == ProjectionKind::Ascending ? "asc" : "desc";
      details.push_back(d);
    }
    if (action.is_tensor()) {
      InvarianceStats stats = harness_invariance(action, ProjectionKind::AscendingAverage, trials, seed);
      failures += assertion_failures(stats);
      json d = stats_to_json(stats);
      d["kind"] = "asc-avg";
      details.push_back(d);
    }
  } else if (suite == "idempotence") {
    InvarianceStats stats = harness_invariance(action, ProjectionKind::Ascending, trials, seed);
    failures += stats.idempotence_failures;
    json d{{"trials", stats.trials}, {"idempotence_failures", stats.idempotence_failures}};
    details.push_back(d);
  } else if (suite == "counting") {
    const std::uint64_t expected = factorial(action.degree()) / action.chain().order();
    for (ProjectionKind kind : {ProjectionKind::Ascending, ProjectionKind::Descending}) {
      std::uint64_t count = count_canonical_forms(action.chain(), kind);
      if (count != expected) ++failures;
      details.push_back(json{{"kind", kind == ProjectionKind::Ascending ? "asc" : "desc"},
                             {"distinct_forms", count},
                             {"expected", expected}});
    }
  } else if (suite == "transversal" || suite == "gallery") {
    ReindexedView view = reindexed_chain(action);
    DixonData data = dixon_transversal(view.chain, kMaxTransversal);
    json d;
    if (view.relabeled) d["relabeling"] = view.relabeling;
    if (suite == "transversal") {
      TransversalReport tr = check_transversal(data, view.chain);
      if (!tr.disjoint || !tr.covers || tr.size != tr.expected) ++failures;
      d["size"] = tr.size;
      d["expected"] = tr.expected;
      d["cosets_disjoint"] = tr.disjoint;
      d["cosets_cover"] = tr.covers;

      std::set<std::vector<int>> rho_r;
      for (const Perm& r : data.transversal) rho_r.insert(rho(r));
      std::vector<std::vector<int>> image = ascending_image(view.chain);
      bool image_matches = rho_r == std::set<std::vector<int>>(image.begin(), image.end());
      if (!image_matches) ++failures;
      d["rho_matches_projected_image"] = image_matches;
    } else {
      std::vector<std::vector<int>> vertices;
      vertices.reserve(data.transversal.size());
      for (const Perm& r : data.transversal) vertices.push_back(rho(r));
      std::sort(vertices.begin(), vertices.end());
      GalleryResult gallery = gallery_connected(vertices);
      if (!gallery.connected) ++failures;
      d["vertices"] = gallery.vertex_count;
      d["connected"] = gallery.connected;
      d["spanning_tree_edges"] = gallery.tree_edges.size();
    }
    details.push_back(d);
  } else if (suite == "image") {
    ReindexedView view = reindexed_chain(action);
    ImageReport ir = characterize_image(view.chain);
    if (!ir.equal || ir.image_size != ir.expected) ++failures;
    json d{{"image_size", ir.image_size},
           {"predicted_size", ir.predicted_size},
           {"expected", ir.expected},
           {"sets_equal", ir.equal}};
    if (view.relabeled) d["relabeling"] = view.relabeling;
    details.push_back(d);
  } else if (suite == "conjugation") {
    std::mt19937_64 engine(seed);
    for (int pair = 0; pair < 3; ++pair) {
      Perm s = random_element(symmetric_group(action.degree()), 2 * action.degree() + 4, engine());
      ConjugationStats stats = harness_conjugation(action, s, trials, engine());
      failures += stats.failures;
      details.push_back(json{{"relabeling", s.cycles()}, {"trials", stats.trials}, {"failures", stats.failures}});
    }
  } else if (suite == "dirichlet-oracle") {
    std::mt19937_64 engine(seed);
    DirichletConfig cfg = DirichletConfig::defaults(action);
    const bool multi = action.is_tensor() && action.dims().size() == 2;
    const std::vector<Perm> all_elements = action.chain().elements(kMaxEnumeration);
    std::uint64_t monotonic_failures = 0, soundness_failures = 0, dominance_failures = 0,
                  invariance_failures = 0, matches = 0, unique_trials = 0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
      std::vector<double> x = random_small_int_vector(engine, action.degree(), 10);
      DescentResult approx =
          multi ? descend_multi_seed(action, x, cfg) : descend(action, x, cfg);
      for (size_t t = 1; t < approx.objective_trace.size(); ++t)
        if (!(approx.objective_trace[t] < approx.objective_trace[t - 1])) ++monotonic_failures;
      if (!action.chain().contains(approx.witness) ||
          apply_to_vector(approx.witness, x) != approx.canonical)
        ++soundness_failures;

      DescentResult exact = brute_force_min(action.chain(), x, cfg.reference, kMaxEnumeration);
      if (!(exact.objective <= approx.objective &&
            approx.objective <= dirichlet_objective(x, cfg.reference)))
        ++dominance_failures;
      if (exact.canonical == approx.canonical) ++matches;

      // invariance of the exact minimizer when the minimizing vector is
      // unique over the orbit
      bool unique_min = true;
      for (const Perm& g : all_elements) {
        std::vector<double> y = apply_to_vector(g, x);
        if (y != exact.canonical && dirichlet_objective(y, cfg.reference) == exact.objective) {
          unique_min = false;
          break;
        }
      }
      if (unique_min) {
        ++unique_trials;
        Perm g = random_element(action.flat_group(), 2 * action.degree() + 4, engine());
        DescentResult moved =
            brute_force_min(action.chain(), apply_to_vector(g, x), cfg.reference, kMaxEnumeration);
        if (moved.canonical != exact.canonical) ++invariance_failures;
      }
    }
    failures += monotonic_failures + soundness_failures + dominance_failures + invariance_failures;
    details.push_back(json{{"trials", trials},
                           {"oracle_match_rate", trials ? static_cast<double>(matches) / trials : 1.0},
                           {"monotonicity_failures", monotonic_failures},
                           {"soundness_failures", soundness_failures},
                           {"dominance_failures", dominance_failures},
                           {"unique_minimizer_trials", unique_trials},
                           {"unique_minimizer_invariance_failures", invariance_failures}});
  } else {
    throw InvalidArgument("unknown suite \"" + suite +
                          "\"; expected one of invariance, counting, gallery, transversal, image, "
                          "conjugation, idempotence, dirichlet-oracle");
  }

  report["failures"] = failures;
  report["details"] = details;
  report["passed"] = failures == 0;
  return SuiteResult{failures == 0, report.dump(2)};
}

}  // namespace fundom
