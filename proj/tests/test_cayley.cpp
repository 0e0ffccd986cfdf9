#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fundom/cayley.hpp"
#include "fundom/project.hpp"

using namespace fundom;

namespace {

std::vector<double> flatten(const std::array<std::array<int, 8>, 8>& t) {
  std::vector<double> out;
  for (const auto& row : t)
    for (int v : row) out.push_back(static_cast<double>(v));
  return out;
}

}  // namespace

TEST_CASE("tables are valid group tables") {
  // construction itself runs the Latin-square / identity / associativity checks
  for (Order8Group g : kOrder8Groups) {
    auto table = cayley_table(g);
    CHECK(table[0][0] == 1);
  }
}

TEST_CASE("the five tables are pairwise non-isomorphic by element orders") {
  // order spectra distinguish the five groups of order 8
  std::set<std::multiset<int>> spectra;
  for (Order8Group g : kOrder8Groups) {
    auto table = cayley_table(g);
    std::multiset<int> spectrum;
    for (int a = 1; a <= 8; ++a) {
      int power = a, order = 1;
      while (power != 1) {
        power = table[static_cast<size_t>(power) - 1][static_cast<size_t>(a) - 1];
        ++order;
      }
      spectrum.insert(order);
    }
    spectra.insert(spectrum);
  }
  // C8, C4xC2, C2^3 have distinct abelian spectra; D4 and Q8 differ in the
  // number of elements of order 2
  CHECK(spectra.size() == 5);
}

TEST_CASE("two-step sort") {
  auto table = cayley_table(Order8Group::C8);
  // already canonical: first row and column are 1..8
  CHECK(two_step_sort(table) == table);
}

TEST_CASE("small demo is exact") {
  CayleyDemoReport report = cayley_demo(5, 2024);
  CHECK(report.samples == 25);
  CHECK(report.correct == 25);
  CHECK(report.accuracy == 1.0);
  CHECK(report.two_step_mismatches == 0);
  CHECK(report.representatives_distinct);
  CHECK(report.passed);
  CHECK(report.report_json.find("\"accuracy\": 1.0") != std::string::npos);
}

TEST_CASE("two-step sort equals the generic projection on permuted tables") {
  CayleyDemoReport report = cayley_demo(20, 99);
  CHECK(report.two_step_mismatches == 0);
  CHECK(report.accuracy == 1.0);
}

TEST_CASE("per-class must be positive") {
  CHECK_THROWS_AS(cayley_demo(0, 1), InvalidArgument);
}

TEST_CASE("canonical form of an unpermuted table is the table itself") {
  // tables with identity first row/column are already in the fundamental
  // domain of the ascending projection
  Action action = Action::build(ActionSpec::tensor({symmetric_group(8), symmetric_group(8)}));
  for (Order8Group g : {Order8Group::C8, Order8Group::Q8}) {
    std::vector<double> x = flatten(cayley_table(g));
    CHECK(project(action, ProjectionKind::Ascending, x).canonical == x);
  }
}
