#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fundom/actions.hpp"
#include "fundom/dirichlet.hpp"
#include "fundom/project.hpp"

namespace fundom {

/// Conjugate s^-1 G s of a group by a relabeling permutation.
PermGroup conjugate_group(const PermGroup& group, const Perm& s);

/// Image of a base under the right action: b -> b.s = s^-1(b).
std::vector<int> conjugate_base(const std::vector<int>& base, const Perm& s);

/// The partition recursion attached to a chain: partitions[0] = {N}; at each
/// level the part containing b_i is replaced by the nonempty members of
/// {b_i}, Delta_i - {b_i}, Gamma_i - Delta_i, kept in that order. Parts are
/// sorted point lists; the list order encodes the relabeling order.
std::vector<std::vector<std::vector<int>>> dixon_partitions(const StabilizerChain& chain);

/// Relabeling s such that conjugating by s makes every part of every
/// partition a consecutive integer range while each base point stays minimal
/// in its orbit. Returns the identity when the chain already has this shape.
/// Expects a greedy (orbit-minimal) chain.
Perm reindex_relabeling(const StabilizerChain& chain);

/// Dixon-style right transversal data for G <= S_n at small degree.
struct DixonData {
  std::vector<std::vector<std::vector<int>>> partitions;  // Pi_0 .. Pi_k
  std::vector<std::vector<int>> gamma;                    // Gamma_i per level
  std::vector<std::vector<Perm>> u_tilde;                 // unordered transposition products
  std::vector<std::vector<Perm>> u_sets;                  // reordered transversals U_i
  std::vector<Perm> terminal;                             // H_k = prod Sym(part)
  std::vector<Perm> transversal;                          // R = H_k U_k ... U_1
};

/// Builds the transversal R = H_k U_k ... U_1. Requires a reindexed chain
/// (reindex_relabeling == identity), n <= 8 and n!/|G| <= bound.
DixonData dixon_transversal(const StabilizerChain& chain, std::uint64_t bound);

struct TransversalReport {
  bool disjoint = false;
  bool covers = false;
  std::size_t size = 0;
  std::uint64_t expected = 0;
};

/// Checks that the right cosets G.r are pairwise disjoint and cover S_n.
TransversalReport check_transversal(const DixonData& data, const StabilizerChain& chain);

/// Number of distinct projected rank vectors over all n! of them; equals
/// n!/|G| for the ascending and descending kinds. Requires n <= 8.
std::uint64_t count_canonical_forms(const StabilizerChain& chain, ProjectionKind kind);

/// All distinct ascending-projected rank vectors (n <= 8).
std::vector<std::vector<int>> ascending_image(const StabilizerChain& chain);

struct ImageReport {
  bool equal = false;
  std::size_t image_size = 0;
  std::size_t predicted_size = 0;
  std::uint64_t expected = 0;  // n!/|G|
};

/// Compares the projected image of rank vectors with the inequality-defined
/// set {c : c_{b_i} <= c_j for all j in Delta_i}. Requires a reindexed chain.
ImageReport characterize_image(const StabilizerChain& chain);

struct GalleryResult {
  bool connected = false;
  std::size_t vertex_count = 0;
  /// Spanning-tree certificate: (parent, child) indices into the vertex list.
  std::vector<std::pair<std::size_t, std::size_t>> tree_edges;
};

/// Connectivity of a set of rank vectors under the adjacency "swap exactly
/// two entries that are consecutive integers".
GalleryResult gallery_connected(const std::vector<std::vector<int>>& vertices);

struct InvarianceStats {
  std::uint64_t trials = 0;
  std::uint64_t canonical_failures = 0;
  std::uint64_t cocycle_failures = 0;
  std::uint64_t idempotence_failures = 0;
  std::uint64_t rank_transport_failures = 0;
  std::uint64_t mu_failures = 0;
  std::uint64_t tied_trials = 0;
  std::uint64_t tied_invariant = 0;  // measured only; ties sit on chamber boundaries
};

/// Randomized projection properties on continuous inputs (distinct entries
/// almost surely): canonical invariance, the cocycle identity
/// witness(g.x) = witness(x) g^-1, idempotence and rank transport, plus a
/// measured tied-input track on small-integer inputs.
InvarianceStats harness_invariance(const Action& action, ProjectionKind kind, std::uint64_t samples,
                                   std::uint64_t seed);

struct ConjugationStats {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
};

/// Checks project_G(x) == s . project_{s^-1 G s}(s^-1 . x) where the
/// conjugate chain is built on the carried-over base B.s.
ConjugationStats harness_conjugation(const Action& action, const Perm& s, std::uint64_t samples,
                                     std::uint64_t seed);

struct SuiteResult {
  bool passed = false;
  std::string report_json;
};

/// Runs one named verification suite and renders a machine-readable report
/// {"suite", "group_spec", "trials", "failures", "details"}. Measured-rate
/// tracks never fail the suite. Suites: invariance, counting, gallery,
/// transversal, image, conjugation, idempotence, dirichlet-oracle.
SuiteResult run_suite(const Action& action, const std::string& suite, std::uint64_t trials,
                      std::uint64_t seed);

}  // namespace fundom
