#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include "fundom.h"

namespace {

struct ActionGuard {
  fundom_action* ptr = nullptr;
  ~ActionGuard() { fundom_action_free(ptr); }
};

}  // namespace

TEST_CASE("parse and inspect an action") {
  ActionGuard guard;
  REQUIRE(fundom_action_parse(
              R"({"tensor": [{"kind": "cyclic", "degree": 3}, {"kind": "symmetric", "degree": 3}]})",
              &guard.ptr) == FUNDOM_OK);
  CHECK(fundom_action_degree(guard.ptr) == 9);
  CHECK(fundom_action_rank(guard.ptr) == 2);
  int32_t dims[2] = {0, 0};
  fundom_action_dims(guard.ptr, dims);
  CHECK(dims[0] == 3);
  CHECK(dims[1] == 3);
  uint64_t order = 0;
  REQUIRE(fundom_action_order(guard.ptr, &order) == FUNDOM_OK);
  CHECK(order == 18);
}

TEST_CASE("parse failures set the error message") {
  fundom_action* action = nullptr;
  CHECK(fundom_action_parse("{broken", &action) == FUNDOM_ERR_PARSE);
  CHECK(action == nullptr);
  CHECK(std::strlen(fundom_last_error()) > 0);

  CHECK(fundom_action_parse(R"j({"degree": 3, "generators": ["(1 9)"]})j", &action) == FUNDOM_ERR_PARSE);
  CHECK(fundom_action_parse(nullptr, &action) == FUNDOM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("projection through the C surface") {
  ActionGuard guard;
  REQUIRE(fundom_action_parse(
              R"({"tensor": [{"kind": "cyclic", "degree": 3}, {"kind": "symmetric", "degree": 3}]})",
              &guard.ptr) == FUNDOM_OK);

  const double x[9] = {5, 3, 3, 4, 0, 0, 3, 5, 1};
  double canonical[9];
  int32_t witness[9];
  REQUIRE(fundom_project(guard.ptr, FUNDOM_PROJECTION_ASC, x, 9, canonical, witness) == FUNDOM_OK);
  const double expected[9] = {0, 0, 4, 5, 1, 3, 3, 3, 5};
  for (int i = 0; i < 9; ++i) CHECK(canonical[i] == expected[i]);

  // witness images form a bijection and transport x to the canonical vector
  std::vector<double> moved(9);
  for (int i = 0; i < 9; ++i) moved[static_cast<size_t>(witness[i]) - 1] = x[i];
  for (int i = 0; i < 9; ++i) CHECK(moved[static_cast<size_t>(i)] == expected[i]);

  // degree mismatch
  CHECK(fundom_project(guard.ptr, FUNDOM_PROJECTION_ASC, x, 5, canonical, nullptr) ==
        FUNDOM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("averaging on a plain action is rejected") {
  ActionGuard guard;
  REQUIRE(fundom_action_parse(R"({"kind": "cyclic", "degree": 4})", &guard.ptr) == FUNDOM_OK);
  const double x[4] = {1, 2, 3, 4};
  double canonical[4];
  CHECK(fundom_project(guard.ptr, FUNDOM_PROJECTION_ASC_AVG, x, 4, canonical, nullptr) ==
        FUNDOM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("dirichlet descent through the C surface") {
  ActionGuard guard;
  REQUIRE(fundom_action_parse(R"({"kind": "symmetric", "degree": 2})", &guard.ptr) == FUNDOM_OK);
  const double x[2] = {1, 3};
  double canonical[2];
  int32_t witness[2];
  fundom_descent_stats stats{};
  REQUIRE(fundom_dirichlet(guard.ptr, nullptr, x, 2, canonical, witness, &stats) == FUNDOM_OK);
  CHECK(canonical[0] == 3.0);
  CHECK(canonical[1] == 1.0);
  CHECK(stats.objective == 5.0);
  CHECK(stats.steps == 1);
  CHECK(stats.hit_step_limit == 0);

  double exact[2];
  double objective = 0.0;
  REQUIRE(fundom_dirichlet_oracle(guard.ptr, x, 2, 100, exact, &objective) == FUNDOM_OK);
  CHECK(exact[0] == 3.0);
  CHECK(objective == 5.0);
}

TEST_CASE("multi-seed option plumbs through") {
  ActionGuard guard;
  REQUIRE(fundom_action_parse(
              R"({"tensor": [{"kind": "cyclic", "degree": 3}, {"kind": "cyclic", "degree": 3}]})",
              &guard.ptr) == FUNDOM_OK);
  const double x[9] = {4, 0, 2, 8, 1, 7, 3, 6, 5};
  double single[9], multi[9];
  fundom_descent_options options{};
  fundom_descent_stats single_stats{}, multi_stats{};
  REQUIRE(fundom_dirichlet(guard.ptr, &options, x, 9, single, nullptr, &single_stats) == FUNDOM_OK);
  options.multi_seed = 1;
  REQUIRE(fundom_dirichlet(guard.ptr, &options, x, 9, multi, nullptr, &multi_stats) == FUNDOM_OK);
  CHECK(multi_stats.objective <= single_stats.objective);
}

TEST_CASE("verify suite through the C surface") {
  ActionGuard guard;
  REQUIRE(fundom_action_parse(R"({"kind": "cyclic", "degree": 4})", &guard.ptr) == FUNDOM_OK);
  char* report = nullptr;
  int32_t passed = 0;
  REQUIRE(fundom_verify_run(guard.ptr, "counting", 10, 1, &report, &passed) == FUNDOM_OK);
  REQUIRE(report != nullptr);
  CHECK(passed == 1);
  CHECK(std::string(report).find("\"distinct_forms\": 6") != std::string::npos);
  fundom_string_free(report);

  CHECK(fundom_verify_run(guard.ptr, "nonsense", 10, 1, &report, &passed) ==
        FUNDOM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("cayley demo through the C surface") {
  char* report = nullptr;
  int32_t passed = 0;
  REQUIRE(fundom_cayley_demo(3, 7, &report, &passed) == FUNDOM_OK);
  REQUIRE(report != nullptr);
  CHECK(passed == 1);
  CHECK(std::string(report).find("\"accuracy\": 1.0") != std::string::npos);
  fundom_string_free(report);

  CHECK(fundom_cayley_demo(0, 7, &report, &passed) == FUNDOM_ERR_INVALID_ARGUMENT);
}
