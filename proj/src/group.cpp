#include "fundom/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>

namespace fundom {

PermGroup PermGroup::from_generators(int degree, std::vector<Perm> generators, GroupKind kind) {
  if (degree < 1) throw InvalidArgument("group degree must be >= 1");
  if (generators.empty()) throw InvalidArgument("generator list must be nonempty");
  for (const Perm& g : generators)
    if (g.degree() != degree) throw InvalidArgument("generator degree mismatch");
  return PermGroup{degree, std::move(generators), kind};
}

PermGroup PermGroup::trivial(int degree) {
  return PermGroup{degree, {Perm::identity(degree)}, GroupKind::Generic};
}

OrbitTransversal orbit_with_transversal(const std::vector<Perm>& generators, int point) {
  if (generators.empty()) throw InvalidArgument("orbit: empty generator list");
  const int n = generators[0].degree();
  if (point < 1 || point > n) throw InvalidArgument("orbit: point out of range");

  std::vector<Perm> step = generators;
  for (const Perm& g : generators) {
    Perm inv = g.inverse();
    if (std::find(step.begin(), step.end(), inv) == step.end()) step.push_back(std::move(inv));
  }

  OrbitTransversal out;
  out.orbit.push_back(point);
  out.transversal.emplace(point, Perm::identity(n));
  std::deque<int> queue{point};
  while (!queue.empty()) {
    int p = queue.front();
    queue.pop_front();
    const Perm& up = out.transversal.at(p);
    for (const Perm& s : step) {
      int q = act_on_point(p, s);
      if (!out.transversal.contains(q)) {
        out.transversal.emplace(q, compose(up, s));
        out.orbit.push_back(q);
        queue.push_back(q);
      }
    }
  }
  return out;
}

namespace {

// Schreier-Sims working state over a fixed ordering of all n points. Level l
// owns the generators whose first moved point (in base order) is exactly
// base_order[l]; the generating set for level l is the union over >= l.
struct ChainBuilder {
  int n;
  std::vector<int> base_order;         // all n points
  std::vector<int> position_of_point;  // point -> index in base_order
  std::vector<std::vector<Perm>> bucket;
  std::vector<std::vector<int>> orbit;
  std::vector<std::vector<int>> transversal_slot;  // point -> index into elems, -1 if absent
  std::vector<std::vector<Perm>> elems;

  explicit ChainBuilder(int degree, const std::vector<int>& prefix) : n(degree) {
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);
    for (int p : prefix) {
      if (p < 1 || p > n) throw InvalidArgument("base point out of range");
      if (used[static_cast<size_t>(p)]) throw InvalidArgument("base point repeated");
      used[static_cast<size_t>(p)] = 1;
      base_order.push_back(p);
    }
    for (int p = 1; p <= n; ++p)
      if (!used[static_cast<size_t>(p)]) base_order.push_back(p);
    position_of_point.assign(static_cast<size_t>(n) + 1, 0);
    for (int l = 0; l < n; ++l) position_of_point[static_cast<size_t>(base_order[static_cast<size_t>(l)])] = l;
    bucket.resize(static_cast<size_t>(n));
    orbit.resize(static_cast<size_t>(n));
    transversal_slot.resize(static_cast<size_t>(n));
    elems.resize(static_cast<size_t>(n));
  }

  // First level whose base point is moved by g; n when g is the identity.
  int first_moved_level(const Perm& g) const {
    for (int l = 0; l < n; ++l)
      if (g.image(base_order[static_cast<size_t>(l)]) != base_order[static_cast<size_t>(l)]) return l;
    return n;
  }

  void add_generator(const Perm& g) {
    int l = first_moved_level(g);
    if (l < n) bucket[static_cast<size_t>(l)].push_back(g);
  }

  std::vector<Perm> level_generators(int level) const {
    std::vector<Perm> gens;
    for (int l = level; l < n; ++l)
      for (const Perm& g : bucket[static_cast<size_t>(l)]) gens.push_back(g);
    return gens;
  }

  void recompute_orbit(int level) {
    const int b = base_order[static_cast<size_t>(level)];
    auto& orb = orbit[static_cast<size_t>(level)];
    auto& slot = transversal_slot[static_cast<size_t>(level)];
    auto& reps = elems[static_cast<size_t>(level)];
    orb.clear();
    reps.clear();
    slot.assign(static_cast<size_t>(n) + 1, -1);

    std::vector<Perm> gens = level_generators(level);
    for (size_t i = 0, sz = gens.size(); i < sz; ++i) {
      Perm inv = gens[i].inverse();
      if (std::find(gens.begin(), gens.end(), inv) == gens.end()) gens.push_back(std::move(inv));
    }

    orb.push_back(b);
    slot[static_cast<size_t>(b)] = 0;
    reps.push_back(Perm::identity(n));
    for (size_t head = 0; head < orb.size(); ++head) {
      int p = orb[head];
      for (const Perm& s : gens) {
        int q = act_on_point(p, s);
        if (slot[static_cast<size_t>(q)] < 0) {
          slot[static_cast<size_t>(q)] = static_cast<int>(reps.size());
          reps.push_back(compose(reps[static_cast<size_t>(slot[static_cast<size_t>(p)])], s));
          orb.push_back(q);
        }
      }
    }
  }

  const Perm& rep(int level, int point) const {
    return elems[static_cast<size_t>(level)][static_cast<size_t>(
        transversal_slot[static_cast<size_t>(level)][static_cast<size_t>(point)])];
  }

  // Sift through levels >= from; returns the residue.
  Perm sift_from(Perm g, int from) const {
    for (int l = from; l < n; ++l) {
      int b = base_order[static_cast<size_t>(l)];
      int j = act_on_point(b, g);
      if (j == b) continue;
      if (transversal_slot[static_cast<size_t>(l)][static_cast<size_t>(j)] < 0) return g;
      g = compose(g, rep(l, j).inverse());
    }
    return g;
  }

  // Verifies that every Schreier generator of the level sifts to the identity
  // through the levels below. On failure the residue is filed and the level
  // index that must be re-verified first is returned.
  std::optional<int> verify_level(int level) {
    recompute_orbit(level);
    std::vector<Perm> gens = level_generators(level);
    for (int p : orbit[static_cast<size_t>(level)]) {
      const Perm& up = rep(level, p);
      for (const Perm& s : gens) {
        Perm w = compose(up, s);
        int q = act_on_point(base_order[static_cast<size_t>(level)], w);
        Perm schreier = compose(w, rep(level, q).inverse());
        Perm residue = sift_from(schreier, level + 1);
        if (!residue.is_identity()) {
          int m = first_moved_level(residue);
          bucket[static_cast<size_t>(m)].push_back(std::move(residue));
          return m;
        }
      }
    }
    return std::nullopt;
  }

  void run() {
    int level = n - 1;
    while (level >= 0) {
      if (auto dirty = verify_level(level)) {
        level = *dirty;
      } else {
        --level;
      }
    }
  }
};

}  // namespace

StabilizerChain StabilizerChain::build(const PermGroup& group) { return build_with_base(group, {}); }

StabilizerChain StabilizerChain::build_with_base(const PermGroup& group, const std::vector<int>& base_prefix) {
  ChainBuilder builder(group.degree, base_prefix);
  for (const Perm& g : group.generators)
    if (!g.is_identity()) builder.add_generator(g);
  builder.run();

  StabilizerChain chain;
  chain.degree_ = group.degree;
  for (int l = 0; l < builder.n; ++l) {
    if (builder.orbit[static_cast<size_t>(l)].size() <= 1) continue;
    ChainLevel level;
    level.base = builder.base_order[static_cast<size_t>(l)];
    level.generators = builder.level_generators(l);
    level.orbit = builder.orbit[static_cast<size_t>(l)];
    level.transversal_by_point.assign(static_cast<size_t>(group.degree) + 1, Perm());
    level.in_orbit.assign(static_cast<size_t>(group.degree) + 1, 0);
    for (int p : level.orbit) {
      level.transversal_by_point[static_cast<size_t>(p)] = builder.rep(l, p);
      level.in_orbit[static_cast<size_t>(p)] = 1;
    }
    chain.levels_.push_back(std::move(level));
  }
  return chain;
}

std::vector<int> StabilizerChain::base() const {
  std::vector<int> out;
  out.reserve(levels_.size());
  for (const ChainLevel& level : levels_) out.push_back(level.base);
  return out;
}

std::uint64_t StabilizerChain::order() const {
  unsigned __int128 order = 1;
  for (const ChainLevel& level : levels_) {
    order *= static_cast<unsigned __int128>(level.orbit.size());
    if (order > static_cast<unsigned __int128>(UINT64_MAX))
      throw BoundExceeded("group order exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(order);
}

Perm StabilizerChain::sift(const Perm& p) const {
  if (p.degree() != degree_) throw InvalidArgument("sift: degree mismatch");
  Perm g = p;
  for (const ChainLevel& level : levels_) {
    int j = act_on_point(level.base, g);
    if (!level.in_orbit[static_cast<size_t>(j)]) return g;
    g = compose(g, level.transversal(j).inverse());
  }
  return g;
}

bool StabilizerChain::contains(const Perm& p) const { return sift(p).is_identity(); }

std::vector<Perm> StabilizerChain::elements(std::uint64_t bound) const {
  std::uint64_t total = order();
  if (total > bound) throw BoundExceeded("group order " + std::to_string(total) + " exceeds bound");
  std::vector<Perm> out{Perm::identity(degree_)};
  for (const ChainLevel& level : levels_) {
    std::vector<Perm> next;
    next.reserve(out.size() * level.orbit.size());
    for (int j : level.orbit)
      for (const Perm& acc : out) next.push_back(compose(level.transversal(j), acc));
    out = std::move(next);
  }
  return out;
}

Perm random_element(const PermGroup& group, int word_length, std::uint64_t seed) {
  if (word_length < 1) throw InvalidArgument("word length must be >= 1");
  std::mt19937_64 engine(seed);
  std::vector<Perm> alphabet = group.generators;
  for (const Perm& g : group.generators) alphabet.push_back(g.inverse());
  Perm acc = Perm::identity(group.degree);
  for (int i = 0; i < word_length; ++i) {
    const Perm& pick = alphabet[static_cast<size_t>(engine() % alphabet.size())];
    acc = compose(pick, acc);
  }
  return acc;
}

}  // namespace fundom
