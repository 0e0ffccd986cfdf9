#include "fundom/cayley.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include <json.hpp>

#include "fundom/project.hpp"

namespace fundom {

namespace {

using Table = std::array<std::array<int, 8>, 8>;

void check_table(const Table& t, const std::string& name) {
  for (int i = 0; i < 8; ++i) {
    std::array<char, 9> row{}, col{};
    for (int j = 0; j < 8; ++j) {
      row[static_cast<size_t>(t[static_cast<size_t>(i)][static_cast<size_t>(j)])] = 1;
      col[static_cast<size_t>(t[static_cast<size_t>(j)][static_cast<size_t>(i)])] = 1;
    }
    for (int v = 1; v <= 8; ++v)
      if (!row[static_cast<size_t>(v)] || !col[static_cast<size_t>(v)])
        throw InvalidArgument(name + ": table is not a Latin square");
  }
  for (int i = 0; i < 8; ++i)
    if (t[0][static_cast<size_t>(i)] != i + 1 || t[static_cast<size_t>(i)][0] != i + 1)
      throw InvalidArgument(name + ": label 1 is not the identity");
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int c = 0; c < 8; ++c) {
        int ab_c = t[static_cast<size_t>(t[static_cast<size_t>(a)][static_cast<size_t>(b)] - 1)]
                    [static_cast<size_t>(c)];
        int a_bc = t[static_cast<size_t>(a)]
                    [static_cast<size_t>(t[static_cast<size_t>(b)][static_cast<size_t>(c)] - 1)];
        if (ab_c != a_bc) throw InvalidArgument(name + ": operation is not associative");
      }
}

Table table_from_op(const std::string& name, int (*op)(int, int)) {
  Table t{};
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) t[static_cast<size_t>(a)][static_cast<size_t>(b)] = op(a, b) + 1;
  check_table(t, name);
  return t;
}

int op_c8(int a, int b) { return (a + b) % 8; }

int op_c4xc2(int a, int b) {
  // label = 2*(Z4 part) + (Z2 part)
  int a4 = a / 2, a2 = a % 2, b4 = b / 2, b2 = b % 2;
  return 2 * ((a4 + b4) % 4) + ((a2 + b2) % 2);
}

int op_c2cube(int a, int b) { return a ^ b; }

// D4 as the symmetries of a square with vertices 1..4: elements are the
// vertex permutations r^k and r^k f, composed as functions.
const std::array<Perm, 8>& d4_elements() {
  static const std::array<Perm, 8> elems = [] {
    Perm r = Perm::from_cycles("(1 2 3 4)", 4);
    Perm f = Perm::from_cycles("(2 4)", 4);
    std::array<Perm, 8> out{Perm::identity(4), r, compose(r, r), compose(r, compose(r, r)),
                            f, compose(r, f), compose(r, compose(r, f)),
                            compose(r, compose(r, compose(r, f)))};
    return out;
  }();
  return elems;
}

int op_d4(int a, int b) {
  const auto& elems = d4_elements();
  Perm product = compose(elems[static_cast<size_t>(a)], elems[static_cast<size_t>(b)]);
  for (int t = 0; t < 8; ++t)
    if (elems[static_cast<size_t>(t)] == product) return t;
  throw InvalidArgument("D4: product escaped the element list");
}

// Quaternion units 1, -1, i, -i, j, -j, k, -k encoded as (axis, sign) with
// axes 0=1, 1=i, 2=j, 3=k and label = 2*axis + (sign < 0).
int op_q8(int a, int b) {
  int axis_a = a / 2, neg_a = a % 2, axis_b = b / 2, neg_b = b % 2;
  static constexpr int axis_table[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign_table[4][4] = {{+1, +1, +1, +1},
                                           {+1, -1, +1, -1},
                                           {+1, -1, -1, +1},
                                           {+1, +1, -1, -1}};
  int axis = axis_table[axis_a][axis_b];
  int sign = sign_table[axis_a][axis_b];
  int neg = (neg_a + neg_b + (sign < 0 ? 1 : 0)) % 2;
  return 2 * axis + neg;
}

}  // namespace

std::string order8_group_name(Order8Group g) {
  switch (g) {
    case Order8Group::C8: return "C8";
    case Order8Group::C4xC2: return "C4xC2";
    case Order8Group::D4: return "D4";
    case Order8Group::Q8: return "Q8";
    case Order8Group::C2x2x2: return "C2xC2xC2";
  }
  return "?";
}

std::array<std::array<int, 8>, 8> cayley_table(Order8Group g) {
  switch (g) {
    case Order8Group::C8: return table_from_op("C8", op_c8);
    case Order8Group::C4xC2: return table_from_op("C4xC2", op_c4xc2);
    case Order8Group::D4: return table_from_op("D4", op_d4);
    case Order8Group::Q8: return table_from_op("Q8", op_q8);
    case Order8Group::C2x2x2: return table_from_op("C2xC2xC2", op_c2cube);
  }
  throw InvalidArgument("unknown order-8 group");
}

std::array<std::array<int, 8>, 8> two_step_sort(const Table& table) {
  std::array<int, 8> col_order{};
  std::iota(col_order.begin(), col_order.end(), 0);
  std::sort(col_order.begin(), col_order.end(),
            [&](int a, int b) { return table[0][static_cast<size_t>(a)] < table[0][static_cast<size_t>(b)]; });
  Table cols{};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      cols[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          table[static_cast<size_t>(i)][static_cast<size_t>(col_order[static_cast<size_t>(j)])];

  std::array<int, 8> row_order{};
  std::iota(row_order.begin(), row_order.end(), 0);
  std::sort(row_order.begin(), row_order.end(),
            [&](int a, int b) { return cols[static_cast<size_t>(a)][0] < cols[static_cast<size_t>(b)][0]; });
  Table out{};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      out[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          cols[static_cast<size_t>(row_order[static_cast<size_t>(i)])][static_cast<size_t>(j)];
  return out;
}

namespace {

std::vector<double> flatten_table(const Table& t) {
  std::vector<double> out;
  out.reserve(64);
  for (const auto& row : t)
    for (int v : row) out.push_back(static_cast<double>(v));
  return out;
}

std::vector<int> shuffled_indices(std::mt19937_64& engine, int n) {
  std::vector<int> idx(static_cast<size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(engine() % static_cast<std::uint64_t>(i + 1));
    std::swap(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(j)]);
  }
  return idx;
}

}  // namespace

CayleyDemoReport cayley_demo(int per_class, std::uint64_t seed) {
  if (per_class < 1) throw InvalidArgument("per-class count must be >= 1");

  Action action = Action::build(ActionSpec::tensor({symmetric_group(8), symmetric_group(8)}));

  CayleyDemoReport report;
  report.per_class = per_class;
  report.seed = seed;

  std::map<std::vector<double>, Order8Group> lookup;
  for (Order8Group g : kOrder8Groups) {
    std::vector<double> canonical = project(action, ProjectionKind::Ascending, flatten_table(cayley_table(g))).canonical;
    lookup.emplace(std::move(canonical), g);
  }
  report.representatives_distinct = lookup.size() == kOrder8Groups.size();

  std::mt19937_64 engine(seed);
  for (Order8Group g : kOrder8Groups) {
    const Table base = cayley_table(g);
    for (int sample = 0; sample < per_class; ++sample) {
      std::vector<int> rows = shuffled_indices(engine, 8);
      std::vector<int> cols = shuffled_indices(engine, 8);
      Table permuted{};
      for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
          permuted[static_cast<size_t>(i)][static_cast<size_t>(j)] =
              base[static_cast<size_t>(rows[static_cast<size_t>(i)])]
                  [static_cast<size_t>(cols[static_cast<size_t>(j)])];

      std::vector<double> canonical =
          project(action, ProjectionKind::Ascending, flatten_table(permuted)).canonical;
      ++report.samples;
      auto found = lookup.find(canonical);
      if (found != lookup.end() && found->second == g) ++report.correct;
      if (canonical != flatten_table(two_step_sort(permuted))) ++report.two_step_mismatches;
    }
  }

  report.accuracy = report.samples ? static_cast<double>(report.correct) / static_cast<double>(report.samples) : 0.0;
  report.passed = report.representatives_distinct && report.correct == report.samples &&
                  report.two_step_mismatches == 0;

  nlohmann::json j{{"per_class", report.per_class},
                   {"seed", report.seed},
                   {"samples", report.samples},
                   {"correct", report.correct},
                   {"accuracy", report.accuracy},
                   {"two_step_mismatches", report.two_step_mismatches},
                   {"representatives_distinct", report.representatives_distinct},
                   {"action", "S8 x S8 acting on 8x8 tables by independent row and column permutations"},
                   {"classifier", "exact canonical-form lookup"},
                   {"baseline_svm_accuracy", "0.994 +/- 0.008"},
                   {"passed", report.passed}};
  nlohmann::json classes = nlohmann::json::array();
  for (Order8Group g : kOrder8Groups) classes.push_back(order8_group_name(g));
  j["classes"] = classes;
  report.report_json = j.dump(2);
  return report;
}

}  // namespace fundom
