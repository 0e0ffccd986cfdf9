#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fundom/verify.hpp"
#include "support.hpp"

using namespace fundom;

namespace {

PermGroup klein4() {
  return PermGroup::from_generators(4, {Perm::from_cycles("(1 2)", 4), Perm::from_cycles("(3 4)", 4)});
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

TEST_CASE("partition recursion") {
  StabilizerChain chain = StabilizerChain::build(klein4());
  auto partitions = dixon_partitions(chain);
  REQUIRE(partitions.size() == 3);
  CHECK(partitions[0] == std::vector<std::vector<int>>{{1, 2, 3, 4}});
  CHECK(partitions[1] == std::vector<std::vector<int>>{{1}, {2}, {3, 4}});
  CHECK(partitions[2] == std::vector<std::vector<int>>{{1}, {2}, {3}, {4}});

  // blocks stay pairwise disjoint and cover N at every level
  for (const auto& partition : partitions) {
    std::set<int> seen;
    size_t total = 0;
    for (const auto& part : partition) {
      total += part.size();
      seen.insert(part.begin(), part.end());
    }
    CHECK(total == 4);
    CHECK(seen.size() == 4);
  }
}

TEST_CASE("reindexing") {
  CHECK(reindex_relabeling(StabilizerChain::build(klein4())).is_identity());
  CHECK(reindex_relabeling(StabilizerChain::build(PermGroup::trivial(4))).is_identity());

  // <(1 3)> <= S3: orbit {1,3} is not consecutive, relabel 3 <-> 2
  StabilizerChain chain =
      StabilizerChain::build(PermGroup::from_generators(3, {Perm::from_cycles("(1 3)", 3)}));
  Perm s = reindex_relabeling(chain);
  CHECK(s == Perm::from_cycles("(2 3)", 3));

  // after conjugating, the relabeling is the identity
  PermGroup conjugated = conjugate_group(PermGroup::from_generators(3, {Perm::from_cycles("(1 3)", 3)}), s);
  StabilizerChain fixed = StabilizerChain::build_with_base(conjugated, conjugate_base(chain.base(), s));
  CHECK(reindex_relabeling(fixed).is_identity());

  // dihedral(4) needs a relabeling as well; verify it by rebuilding
  StabilizerChain d4 = StabilizerChain::build(dihedral_group(4));
  Perm sd = reindex_relabeling(d4);
  StabilizerChain d4_fixed = StabilizerChain::build_with_base(conjugate_group(dihedral_group(4), sd),
                                                              conjugate_base(d4.base(), sd));
  CHECK(reindex_relabeling(d4_fixed).is_identity());
}

TEST_CASE("dixon transversal sizes") {
  SUBCASE("full symmetric group gives the identity transversal") {
    DixonData data = dixon_transversal(StabilizerChain::build(symmetric_group(4)), 1000);
    REQUIRE(data.transversal.size() == 1);
    CHECK(data.transversal[0] == Perm::identity(4));
  }
  SUBCASE("Klein four group") {
    StabilizerChain chain = StabilizerChain::build(klein4());
    DixonData data = dixon_transversal(chain, 1000);
    CHECK(data.transversal.size() == 6);
    TransversalReport report = check_transversal(data, chain);
    CHECK(report.disjoint);
    CHECK(report.covers);
    CHECK(report.expected == 6);
  }
  SUBCASE("alternating group") {
    StabilizerChain chain = StabilizerChain::build(alternating_group(4));
    DixonData data = dixon_transversal(chain, 1000);
    CHECK(data.transversal.size() == 2);
    CHECK(check_transversal(data, chain).covers);
  }
  SUBCASE("u-tilde sizes follow the binomial identity") {
    StabilizerChain chain = StabilizerChain::build(klein4());
    DixonData data = dixon_transversal(chain, 1000);
    for (size_t i = 0; i < data.u_tilde.size(); ++i) {
      const auto& gamma = data.gamma[i];
      size_t m = chain.levels()[i].orbit.size();
      size_t rest = gamma.size() - m;
      // sum_l C(m, l) C(m', l) = C(m + m', m)
      std::uint64_t expected =
          factorial(static_cast<int>(gamma.size())) /
          (factorial(static_cast<int>(m)) * factorial(static_cast<int>(rest)));
      CHECK(data.u_tilde[i].size() == expected);
      CHECK(data.u_sets[i].size() == expected);
    }
  }
  SUBCASE("bounds and preconditions") {
    CHECK_THROWS_AS(dixon_transversal(StabilizerChain::build(PermGroup::trivial(4)), 3), BoundExceeded);
    StabilizerChain bad = StabilizerChain::build(dihedral_group(4));
    CHECK_THROWS_AS(dixon_transversal(bad, 1000), InvalidArgument);  // needs reindexing first
  }
}

TEST_CASE("counting law") {
  CHECK(count_canonical_forms(StabilizerChain::build(cyclic_group(4)), ProjectionKind::Ascending) == 6);
  CHECK(count_canonical_forms(StabilizerChain::build(symmetric_group(4)), ProjectionKind::Ascending) == 1);
  CHECK(count_canonical_forms(StabilizerChain::build(klein4()), ProjectionKind::Ascending) == 6);
  const StabilizerChain d4 = StabilizerChain::build(dihedral_group(4));
  CHECK(count_canonical_forms(d4, ProjectionKind::Ascending) == 3);
  CHECK(count_canonical_forms(d4, ProjectionKind::Descending) == 3);
  CHECK(count_canonical_forms(StabilizerChain::build(alternating_group(4)), ProjectionKind::Ascending) == 2);
}

TEST_CASE("image characterization") {
  SUBCASE("cyclic group of order 3") {
    ImageReport report = characterize_image(StabilizerChain::build(cyclic_group(3)));
    CHECK(report.equal);
    CHECK(report.image_size == 2);
  }
  SUBCASE("full symmetric group") {
    ImageReport report = characterize_image(StabilizerChain::build(symmetric_group(3)));
    CHECK(report.equal);
    CHECK(report.image_size == 1);
  }
  SUBCASE("Klein four group") {
    ImageReport report = characterize_image(StabilizerChain::build(klein4()));
    CHECK(report.equal);
    CHECK(report.image_size == 6);
    CHECK(report.predicted_size == 6);
  }
}

TEST_CASE("rho of the transversal equals the projected image") {
  for (const PermGroup& group : {cyclic_group(4), klein4(), alternating_group(4)}) {
    StabilizerChain chain = StabilizerChain::build(group);
    DixonData data = dixon_transversal(chain, 1000);
    std::set<std::vector<int>> rho_r;
    for (const Perm& r : data.transversal) rho_r.insert(rho(r));
    std::vector<std::vector<int>> image = ascending_image(chain);
    CHECK(rho_r == std::set<std::vector<int>>(image.begin(), image.end()));
  }
}

TEST_CASE("gallery connectivity") {
  SUBCASE("transversal image of the cyclic group") {
    DixonData data = dixon_transversal(StabilizerChain::build(cyclic_group(4)), 1000);
    std::vector<std::vector<int>> vertices;
    for (const Perm& r : data.transversal) vertices.push_back(rho(r));
    GalleryResult result = gallery_connected(vertices);
    CHECK(result.connected);
    CHECK(result.vertex_count == 6);
    CHECK(result.tree_edges.size() == 5);
  }
  SUBCASE("singleton") {
    CHECK(gallery_connected({{1, 2, 3}}).connected);
  }
  SUBCASE("swap of non-consecutive values is not an edge") {
    GalleryResult result = gallery_connected({{1, 2, 3}, {3, 2, 1}});
    CHECK_FALSE(result.connected);
  }
  SUBCASE("one consecutive swap is an edge") {
    CHECK(gallery_connected({{1, 2, 3}, {2, 1, 3}}).connected);
  }
}

TEST_CASE("invariance harness") {
  Action action = Action::build(ActionSpec::tensor({cyclic_group(3), symmetric_group(3)}));
  InvarianceStats stats = harness_invariance(action, ProjectionKind::Ascending, 200, 4242);
  CHECK(stats.trials == 200);
  CHECK(stats.canonical_failures == 0);
  CHECK(stats.cocycle_failures == 0);
  CHECK(stats.idempotence_failures == 0);
  CHECK(stats.rank_transport_failures == 0);
  CHECK(stats.mu_failures == 0);
  CHECK(stats.tied_trials == 200);
}

TEST_CASE("conjugation harness") {
  SUBCASE("identity relabeling") {
    Action action = Action::build(ActionSpec::plain(cyclic_group(4)));
    ConjugationStats stats = harness_conjugation(action, Perm::identity(4), 100, 7);
    CHECK(stats.failures == 0);
  }
  SUBCASE("cyclic group with a transposition") {
    Action action = Action::build(ActionSpec::plain(cyclic_group(4)));
    ConjugationStats stats = harness_conjugation(action, Perm::from_cycles("(1 2)", 4), 500, 8);
    CHECK(stats.failures == 0);
  }
  SUBCASE("Klein four group") {
    Action action = Action::build(ActionSpec::plain(klein4()));
    ConjugationStats stats = harness_conjugation(action, Perm::from_cycles("(2 3)", 4), 500, 9);
    CHECK(stats.failures == 0);
  }
  SUBCASE("non-involutive relabeling") {
    Action action = Action::build(ActionSpec::plain(dihedral_group(4)));
    ConjugationStats stats = harness_conjugation(action, Perm::from_cycles("(1 3 2)", 4), 500, 10);
    CHECK(stats.failures == 0);
  }
}

TEST_CASE("suite runner") {
  Action action = Action::build(ActionSpec::plain(cyclic_group(4)));

  SuiteResult counting = run_suite(action, "counting", 10, 1);
  CHECK(counting.passed);
  CHECK(counting.report_json.find("\"suite\": \"counting\"") != std::string::npos);
  CHECK(counting.report_json.find("\"distinct_forms\": 6") != std::string::npos);

  CHECK(run_suite(action, "invariance", 50, 2).passed);
  CHECK(run_suite(action, "idempotence", 50, 3).passed);
  CHECK(run_suite(action, "transversal", 10, 4).passed);
  CHECK(run_suite(action, "image", 10, 5).passed);
  CHECK(run_suite(action, "gallery", 10, 6).passed);
  CHECK(run_suite(action, "conjugation", 50, 7).passed);
  CHECK(run_suite(action, "dirichlet-oracle", 20, 8).passed);

  CHECK_THROWS_AS(run_suite(action, "nonsense", 1, 1), InvalidArgument);

  // dihedral needs the reindexing path inside the transversal/image suites
  Action d4 = Action::build(ActionSpec::plain(dihedral_group(4)));
  CHECK(run_suite(d4, "transversal", 10, 4).passed);
  CHECK(run_suite(d4, "image", 10, 5).passed);
  CHECK(run_suite(d4, "gallery", 10, 6).passed);
}
