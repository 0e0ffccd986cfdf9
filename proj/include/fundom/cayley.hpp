#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fundom/actions.hpp"

namespace fundom {

/// The five isomorphism classes of groups with eight elements.
enum class Order8Group { C8, C4xC2, D4, Q8, C2x2x2 };

constexpr std::array<Order8Group, 5> kOrder8Groups{Order8Group::C8, Order8Group::C4xC2, Order8Group::D4,
                                                   Order8Group::Q8, Order8Group::C2x2x2};

std::string order8_group_name(Order8Group g);

/// 8x8 multiplication table with element labels 1..8 and label 1 the
/// identity. Built from the group operation itself (modular addition, square
/// symmetries, quaternion units, XOR) and checked for the Latin-square and
/// associativity laws on construction.
std::array<std::array<int, 8>, 8> cayley_table(Order8Group g);

/// The closed-form canonicalization of a table under row/column permutations:
/// reorder columns so the first row increases, then reorder rows so the first
/// column increases.
std::array<std::array<int, 8>, 8> two_step_sort(const std::array<std::array<int, 8>, 8>& table);

struct CayleyDemoReport {
  int per_class = 0;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t correct = 0;
  double accuracy = 0.0;
  std::size_t two_step_mismatches = 0;
  bool representatives_distinct = false;
  bool passed = false;
  std::string report_json;
};

/// Classifies row/column-permuted order-8 Cayley tables by exact lookup of
/// their canonical form under the S8 x S8 ascending projection; also
/// cross-checks the two-step sort description against the generic projection
/// on every sample. Row and column permutations are drawn independently.
CayleyDemoReport cayley_demo(int per_class, std::uint64_t seed);

}  // namespace fundom
