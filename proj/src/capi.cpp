#include "fundom.h"

#include <cstring>
#include <string>

#include "fundom/actions.hpp"
#include "fundom/cayley.hpp"
#include "fundom/dirichlet.hpp"
#include "fundom/project.hpp"
#include "fundom/serialize.hpp"
#include "fundom/verify.hpp"

struct fundom_action {
  fundom::Action action;
};

namespace {

thread_local std::string g_last_error;

fundom_status fail(fundom_status status, const char* message) {
  g_last_error = message;
  return status;
}

template <typename Fn>
fundom_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const fundom::BoundExceeded& e) {
    return fail(FUNDOM_ERR_BOUND_EXCEEDED, e.what());
  } catch (const fundom::InvalidArgument& e) {
    return fail(FUNDOM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(FUNDOM_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

fundom::ProjectionKind to_kind(fundom_projection_kind kind) {
  switch (kind) {
    case FUNDOM_PROJECTION_ASC: return fundom::ProjectionKind::Ascending;
    case FUNDOM_PROJECTION_DESC: return fundom::ProjectionKind::Descending;
    case FUNDOM_PROJECTION_ASC_AVG: return fundom::ProjectionKind::AscendingAverage;
    case FUNDOM_PROJECTION_DESC_AVG: return fundom::ProjectionKind::DescendingAverage;
  }
  throw fundom::InvalidArgument("unknown projection kind");
}

void write_witness(const fundom::Perm& witness, int32_t* out) {
  if (out == nullptr) return;
  for (int i = 1; i <= witness.degree(); ++i) out[i - 1] = witness.image(i);
}

}  // namespace

extern "C" {

fundom_status fundom_action_parse(const char* spec_json, fundom_action** out) {
  if (spec_json == nullptr || out == nullptr)
    return fail(FUNDOM_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&]() -> fundom_status {
    try {
      fundom::ActionSpec spec = fundom::parse_action_spec(spec_json);
      *out = new fundom_action{fundom::Action::build(std::move(spec))};
      return FUNDOM_OK;
    } catch (const fundom::InvalidArgument& e) {
      return fail(FUNDOM_ERR_PARSE, e.what());
    }
  });
}

void fundom_action_free(fundom_action* action) { delete action; }

int32_t fundom_action_degree(const fundom_action* action) {
  return action == nullptr ? 0 : action->action.degree();
}

fundom_status fundom_action_order(const fundom_action* action, uint64_t* order_out) {
  if (action == nullptr || order_out == nullptr)
    return fail(FUNDOM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() -> fundom_status {
    *order_out = action->action.chain().order();
    return FUNDOM_OK;
  });
}

int32_t fundom_action_rank(const fundom_action* action) {
  return action == nullptr ? 0 : static_cast<int32_t>(action->action.dims().size());
}

void fundom_action_dims(const fundom_action* action, int32_t* dims) {
  if (action == nullptr || dims == nullptr) return;
  const auto& d = action->action.dims();
  for (size_t j = 0; j < d.size(); ++j) dims[j] = d[j];
}

fundom_status fundom_project(const fundom_action* action, fundom_projection_kind kind, const double* x,
                             int32_t n, double* canonical_out, int32_t* witness_out) {
  if (action == nullptr || x == nullptr || canonical_out == nullptr)
    return fail(FUNDOM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() -> fundom_status {
    fundom::ProjectionResult result = fundom::project(
        action->action, to_kind(kind), std::span<const double>(x, static_cast<size_t>(n)));
    std::memcpy(canonical_out, result.canonical.data(), result.canonical.size() * sizeof(double));
    write_witness(result.witness, witness_out);
    return FUNDOM_OK;
  });
}

fundom_status fundom_dirichlet(const fundom_action* action, const fundom_descent_options* options,
                               const double* x, int32_t n, double* canonical_out, int32_t* witness_out,
                               fundom_descent_stats* stats) {
  if (action == nullptr || x == nullptr || canonical_out == nullptr)
    return fail(FUNDOM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() -> fundom_status {
    fundom::DirichletConfig cfg = fundom::DirichletConfig::defaults(action->action);
    if (options != nullptr && options->max_steps > 0) cfg.max_steps = options->max_steps;
    std::span<const double> input(x, static_cast<size_t>(n));
    fundom::DescentResult result = (options != nullptr && options->multi_seed != 0)
                                       ? fundom::descend_multi_seed(action->action, input, cfg)
                                       : fundom::descend(action->action, input, cfg);
    std::memcpy(canonical_out, result.canonical.data(), result.canonical.size() * sizeof(double));
    write_witness(result.witness, witness_out);
    if (stats != nullptr) {
      stats->steps = result.steps;
      stats->objective = result.objective;
      stats->hit_step_limit = result.hit_step_limit ? 1 : 0;
    }
    return FUNDOM_OK;
  });
}

fundom_status fundom_dirichlet_oracle(const fundom_action* action, const double* x, int32_t n,
                                      uint64_t bound, double* canonical_out, double* objective_out) {
  if (action == nullptr || x == nullptr || canonical_out == nullptr)
    return fail(FUNDOM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() -> fundom_status {
    fundom::DirichletConfig cfg = fundom::DirichletConfig::defaults(action->action);
    fundom::DescentResult result = fundom::brute_force_min(
        action->action.chain(), std::span<const double>(x, static_cast<size_t>(n)), cfg.reference, bound);
    std::memcpy(canonical_out, result.canonical.data(), result.canonical.size() * sizeof(double));
    if (objective_out != nullptr) *objective_out = result.objective;
    return FUNDOM_OK;
  });
}

fundom_status fundom_verify_run(const fundom_action* action, const char* suite, uint64_t trials,
                                uint64_t seed, char** report_json_out, int32_t* passed_out) {
  if (action == nullptr || suite == nullptr || report_json_out == nullptr || passed_out == nullptr)
    return fail(FUNDOM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() -> fundom_status {
    fundom::SuiteResult result = fundom::run_suite(action->action, suite, trials, seed);
    *report_json_out = copy_string(result.report_json);
    *passed_out = result.passed ? 1 : 0;
    return FUNDOM_OK;
  });
}

fundom_status fundom_cayley_demo(int32_t per_class, uint64_t seed, char** report_json_out,
                                 int32_t* passed_out) {
  if (report_json_out == nullptr || passed_out == nullptr)
    return fail(FUNDOM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() -> fundom_status {
    fundom::CayleyDemoReport report = fundom::cayley_demo(per_class, seed);
    *report_json_out = copy_string(report.report_json);
    *passed_out = report.passed ? 1 : 0;
    return FUNDOM_OK;
  });
}

void fundom_string_free(char* text) { delete[] text; }

const char* fundom_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
