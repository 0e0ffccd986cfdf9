// fundom command-line tool: streams JSONL records through the shared
// library's C interface. Subcommands: project, verify, cayley-demo,
// dirichlet. Exit codes: 0 success, 1 verification failure, 2 usage or
// format error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fundom.h"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

[[noreturn]] void die(const std::string& message) {
  std::cerr << "fundom: " << message << "\n";
  std::exit(kExitUsage);
}

struct ActionHandle {
  fundom_action* ptr = nullptr;
  ~ActionHandle() { fundom_action_free(ptr); }
};

void load_action(const std::string& path, ActionHandle& handle) {
  std::ifstream in(path);
  if (!in) die("cannot open group spec file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  if (fundom_action_parse(buffer.str().c_str(), &handle.ptr) != FUNDOM_OK)
    die("bad group spec in " + path + ": " + fundom_last_error());
}

fundom_projection_kind parse_kind(const std::string& name) {
  if (name == "asc") return FUNDOM_PROJECTION_ASC;
  if (name == "desc") return FUNDOM_PROJECTION_DESC;
  if (name == "asc-avg") return FUNDOM_PROJECTION_ASC_AVG;
  if (name == "desc-avg") return FUNDOM_PROJECTION_DESC_AVG;
  die("unknown projection kind \"" + name + "\" (expected asc|desc|asc-avg|desc-avg)");
}

// Streams with "-" meaning stdin/stdout.
struct RecordIo {
  std::ifstream file_in;
  std::ofstream file_out;
  std::istream* in = nullptr;
  std::ostream* out = nullptr;

  RecordIo(const std::string& input, const std::string& output) {
    if (input == "-") {
      in = &std::cin;
    } else {
      file_in.open(input);
      if (!file_in) die("cannot open input file: " + input);
      in = &file_in;
    }
    if (output == "-") {
      out = &std::cout;
    } else {
      file_out.open(output);
      if (!file_out) die("cannot open output file: " + output);
      out = &file_out;
    }
  }
};

// Integer-valued doubles serialize without a decimal point.
ordered_json number_to_json(double v) {
  if (std::floor(v) == v && std::abs(v) <= 9.0e15) return ordered_json(static_cast<std::int64_t>(v));
  return ordered_json(v);
}

void flatten_x(const ordered_json& node, std::vector<double>& out, std::vector<int>& shape, int depth,
               size_t line_number) {
  if (!node.is_array()) {
    if (!node.is_number()) die("line " + std::to_string(line_number) + ": \"x\" must contain numbers");
    out.push_back(node.get<double>());
    return;
  }
  if (static_cast<int>(shape.size()) <= depth) shape.push_back(static_cast<int>(node.size()));
  if (shape[static_cast<size_t>(depth)] != static_cast<int>(node.size()))
    die("line " + std::to_string(line_number) + ": ragged \"x\" array");
  for (const ordered_json& child : node) flatten_x(child, out, shape, depth + 1, line_number);
}

ordered_json reshape(const std::vector<double>& flat, const std::vector<int>& shape, size_t& cursor,
                     size_t depth) {
  ordered_json node = ordered_json::array();
  if (depth + 1 == shape.size()) {
    for (int t = 0; t < shape[depth]; ++t) node.push_back(number_to_json(flat[cursor++]));
    return node;
  }
  for (int t = 0; t < shape[depth]; ++t) node.push_back(reshape(flat, shape, cursor, depth + 1));
  return node;
}

ordered_json render_vector(const std::vector<double>& flat, const std::vector<int>& shape) {
  if (shape.size() <= 1) {
    ordered_json node = ordered_json::array();
    for (double v : flat) node.push_back(number_to_json(v));
    return node;
  }
  size_t cursor = 0;
  return reshape(flat, shape, cursor, 0);
}

ordered_json witness_to_json(const std::vector<int32_t>& images) {
  ordered_json node;
  node["degree"] = images.size();
  node["images"] = images;
  return node;
}

// Validates the record's "x" against the action shape and returns the
// row-major flattening together with the nesting shape used on output.
std::vector<double> read_record_x(const ordered_json& record, const fundom_action* action,
                                  size_t line_number, std::vector<int>& shape) {
  if (!record.is_object() || !record.contains("x"))
    die("line " + std::to_string(line_number) + ": record needs an \"x\" field");
  std::vector<double> flat;
  shape.clear();
  flatten_x(record["x"], flat, shape, 0, line_number);

  const int degree = fundom_action_degree(action);
  if (static_cast<int>(flat.size()) != degree)
    die("line " + std::to_string(line_number) + ": \"x\" has " + std::to_string(flat.size()) +
        " entries, the action needs " + std::to_string(degree));
  const int rank = fundom_action_rank(action);
  if (shape.size() > 1) {
    if (rank != static_cast<int>(shape.size()))
      die("line " + std::to_string(line_number) + ": nested \"x\" of rank " +
          std::to_string(shape.size()) + " does not match the action");
    std::vector<int32_t> dims(static_cast<size_t>(rank));
    fundom_action_dims(action, dims.data());
    for (int j = 0; j < rank; ++j)
      if (dims[static_cast<size_t>(j)] != shape[static_cast<size_t>(j)])
        die("line " + std::to_string(line_number) + ": \"x\" shape does not match the action");
  }
  return flat;
}

int run_project(const std::string& group_file, const std::string& kind_name, const std::string& input,
                const std::string& output, bool with_witness) {
  ActionHandle action;
  load_action(group_file, action);
  fundom_projection_kind kind = parse_kind(kind_name);

  RecordIo io(input, output);
  std::string line;
  size_t line_number = 0;
  while (std::getline(*io.in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ordered_json record = ordered_json::parse(line, nullptr, false);
    if (record.is_discarded()) die("line " + std::to_string(line_number) + ": invalid JSON");

    std::vector<int> shape;
    std::vector<double> flat = read_record_x(record, action.ptr, line_number, shape);
    std::vector<double> canonical(flat.size());
    std::vector<int32_t> witness(flat.size());
    if (fundom_project(action.ptr, kind, flat.data(), static_cast<int32_t>(flat.size()),
                       canonical.data(), witness.data()) != FUNDOM_OK)
      die("line " + std::to_string(line_number) + ": " + fundom_last_error());

    record["canonical"] = render_vector(canonical, shape);
    if (with_witness) record["witness"] = witness_to_json(witness);
    *io.out << record.dump() << "\n";
  }
  return 0;
}

int run_dirichlet(const std::string& group_file, const std::string& input, const std::string& output,
                  bool with_witness, bool multi_seed, bool with_oracle, std::int64_t max_steps) {
  ActionHandle action;
  load_action(group_file, action);

  fundom_descent_options options{};
  options.max_steps = max_steps;
  options.multi_seed = multi_seed ? 1 : 0;

  RecordIo io(input, output);
  std::string line;
  size_t line_number = 0;
  std::uint64_t oracle_matches = 0, oracle_total = 0;
  while (std::getline(*io.in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ordered_json record = ordered_json::parse(line, nullptr, false);
    if (record.is_discarded()) die("line " + std::to_string(line_number) + ": invalid JSON");

    std::vector<int> shape;
    std::vector<double> flat = read_record_x(record, action.ptr, line_number, shape);
    std::vector<double> canonical(flat.size());
    std::vector<int32_t> witness(flat.size());
    fundom_descent_stats stats{};
    if (fundom_dirichlet(action.ptr, &options, flat.data(), static_cast<int32_t>(flat.size()),
                         canonical.data(), witness.data(), &stats) != FUNDOM_OK)
      die("line " + std::to_string(line_number) + ": " + fundom_last_error());

    record["canonical"] = render_vector(canonical, shape);
    record["objective"] = number_to_json(stats.objective);
    record["steps"] = stats.steps;
    if (stats.hit_step_limit) record["hit_step_limit"] = true;
    if (with_witness) record["witness"] = witness_to_json(witness);
    if (with_oracle) {
      std::vector<double> exact(flat.size());
      if (fundom_dirichlet_oracle(action.ptr, flat.data(), static_cast<int32_t>(flat.size()), 1000000,
                                  exact.data(), nullptr) != FUNDOM_OK)
        die("line " + std::to_string(line_number) + ": " + fundom_last_error());
      bool match = exact == canonical;
      record["oracle_match"] = match;
      ++oracle_total;
      if (match) ++oracle_matches;
    }
    *io.out << record.dump() << "\n";
  }
  if (with_oracle && oracle_total > 0)
    std::cerr << "oracle match rate: " << (static_cast<double>(oracle_matches) / oracle_total) << " ("
              << oracle_matches << "/" << oracle_total << ")\n";
  return 0;
}

int run_verify(const std::string& group_file, const std::string& suite, std::uint64_t trials,
               std::uint64_t seed) {
  ActionHandle action;
  load_action(group_file, action);
  char* report = nullptr;
  int32_t passed = 0;
  fundom_status status = fundom_verify_run(action.ptr, suite.c_str(), trials, seed, &report, &passed);
  if (status != FUNDOM_OK) die(std::string("verify: ") + fundom_last_error());
  std::cout << report << "\n";
  fundom_string_free(report);
  return passed ? 0 : kExitVerificationFailure;
}

int run_cayley(int per_class, std::uint64_t seed) {
  char* report = nullptr;
  int32_t passed = 0;
  fundom_status status = fundom_cayley_demo(per_class, seed, &report, &passed);
  if (status != FUNDOM_OK) die(std::string("cayley-demo: ") + fundom_last_error());
  std::cout << report << "\n";
  fundom_string_free(report);
  return passed ? 0 : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"canonical forms of vectors and tensors under permutation-group actions"};
  app.require_subcommand(1);

  std::string group_file, projection = "asc", input = "-", output = "-", suite = "invariance";
  bool witness = false, multi_seed = false, oracle = false;
  std::uint64_t trials = 1000, seed = 0;
  int per_class = 2000;
  std::int64_t max_steps = 0;

  CLI::App* project = app.add_subcommand("project", "canonicalize JSONL records");
  project->add_option("--group", group_file, "group/action spec JSON file")->required();
  project->add_option("--projection", projection, "asc|desc|asc-avg|desc-avg");
  project->add_option("--input", input, "input JSONL file or -");
  project->add_option("--output", output, "output JSONL file or -");
  project->add_flag("--witness", witness, "emit the witness permutation per record");
  project->add_option("--seed", seed, "unused; accepted for interface uniformity");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--group", group_file, "group/action spec JSON file")->required();
  verify->add_option("--suite", suite,
                     "invariance|counting|gallery|transversal|image|conjugation|idempotence|dirichlet-oracle");
  verify->add_option("--trials", trials, "randomized trials per track");
  verify->add_option("--seed", seed, "RNG seed");

  CLI::App* cayley = app.add_subcommand("cayley-demo", "order-8 Cayley table classification demo");
  cayley->add_option("--per-class", per_class, "samples per isomorphism class");
  cayley->add_option("--seed", seed, "RNG seed");

  CLI::App* dirichlet = app.add_subcommand("dirichlet", "Dirichlet descent over JSONL records");
  dirichlet->add_option("--group", group_file, "group/action spec JSON file")->required();
  dirichlet->add_option("--input", input, "input JSONL file or -");
  dirichlet->add_option("--output", output, "output JSONL file or -");
  dirichlet->add_flag("--witness", witness, "emit the witness permutation per record");
  dirichlet->add_flag("--multi-seed", multi_seed, "restart from every cyclic double shift");
  dirichlet->add_flag("--oracle", oracle, "cross-check against the exact orbit minimum");
  dirichlet->add_option("--max-steps", max_steps, "descent step cap (0 = library default)");
  dirichlet->add_option("--seed", seed, "unused; accepted for interface uniformity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (project->parsed()) return run_project(group_file, projection, input, output, witness);
  if (verify->parsed()) return run_verify(group_file, suite, trials, seed);
  if (cayley->parsed()) return run_cayley(per_class, seed);
  if (dirichlet->parsed())
    return run_dirichlet(group_file, input, output, witness, multi_seed, oracle, max_steps);
  return kExitUsage;
}
