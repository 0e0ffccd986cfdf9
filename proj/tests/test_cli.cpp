#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

fs::path scratch_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "fundom_cli_test";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

CommandResult run_cli(const std::string& args) {
  fs::path out_path = scratch_dir() / "stdout.txt";
  std::string command = std::string(FUNDOM_CLI_PATH) + " " + args + " > " + out_path.string() + " 2>/dev/null";
  int status = std::system(command.c_str());
  CommandResult result;
  result.exit_code = WEXITSTATUS(status);
  result.output = read_file(out_path);
  return result;
}

const char* kTensorSpec =
    R"({"tensor": [{"kind": "cyclic", "degree": 3}, {"kind": "symmetric", "degree": 3}]})";

fs::path tensor_spec_file() {
  fs::path path = scratch_dir() / "z3s3.json";
  write_file(path, kTensorSpec);
  return path;
}

}  // namespace

TEST_CASE("project: worked example with pass-through fields") {
  fs::path spec = tensor_spec_file();
  fs::path input = scratch_dir() / "in.jsonl";
  fs::path output = scratch_dir() / "out.jsonl";
  write_file(input, R"({"x": [[5,3,3],[4,0,0],[3,5,1]], "y": "label-7", "id": 42})"
                    "\n");

  CommandResult result = run_cli("project --group " + spec.string() + " --projection asc --input " +
                                 input.string() + " --output " + output.string());
  CHECK(result.exit_code == 0);
  std::string line = read_file(output);
  CHECK(line.find("\"canonical\":[[0,0,4],[5,1,3],[3,3,5]]") != std::string::npos);
  // auxiliary fields pass through untouched, in order
  CHECK(line.find("\"y\":\"label-7\"") != std::string::npos);
  CHECK(line.find("\"id\":42") != std::string::npos);
  CHECK(line.find("\"witness\"") == std::string::npos);
}

TEST_CASE("project: witness flag and flat vectors") {
  fs::path spec = scratch_dir() / "c3.json";
  write_file(spec, R"({"kind": "cyclic", "degree": 3})");
  fs::path input = scratch_dir() / "flat.jsonl";
  write_file(input, R"({"x": [2, 0, 1]})"
                    "\n");
  fs::path output = scratch_dir() / "flat_out.jsonl";

  CommandResult result = run_cli("project --group " + spec.string() + " --input " + input.string() +
                                 " --output " + output.string() + " --witness");
  CHECK(result.exit_code == 0);
  std::string line = read_file(output);
  CHECK(line.find("\"canonical\":[0,1,2]") != std::string::npos);
  CHECK(line.find("\"witness\":{\"degree\":3,\"images\":") != std::string::npos);
}

TEST_CASE("project: averaging kinds") {
  fs::path spec = tensor_spec_file();
  fs::path input = scratch_dir() / "avg_in.jsonl";
  write_file(input, R"({"x": [[5,3,3],[4,0,0],[3,5,1]]})"
                    "\n");
  fs::path output = scratch_dir() / "avg_out.jsonl";

  CommandResult asc_avg = run_cli("project --group " + spec.string() + " --projection asc-avg --input " +
                                  input.string() + " --output " + output.string());
  CHECK(asc_avg.exit_code == 0);
  CHECK(read_file(output).find("\"canonical\":[[0,0,4],[1,5,3],[3,3,5]]") != std::string::npos);

  CommandResult desc_avg = run_cli("project --group " + spec.string() + " --projection desc-avg --input " +
                                   input.string() + " --output " + output.string());
  CHECK(desc_avg.exit_code == 0);
  CHECK(read_file(output).find("\"canonical\":[[5,3,3],[4,0,0],[3,5,1]]") != std::string::npos);

  // averaging needs a tensor action
  fs::path plain = scratch_dir() / "plain_c9.json";
  write_file(plain, R"({"kind": "cyclic", "degree": 9})");
  fs::path flat_in = scratch_dir() / "avg_flat.jsonl";
  write_file(flat_in, R"({"x": [5,3,3,4,0,0,3,5,1]})"
                      "\n");
  CHECK(run_cli("project --group " + plain.string() + " --projection asc-avg --input " + flat_in.string())
            .exit_code == 2);
}

TEST_CASE("project: empty input succeeds with empty output") {
  fs::path spec = tensor_spec_file();
  fs::path input = scratch_dir() / "empty.jsonl";
  write_file(input, "");
  fs::path output = scratch_dir() / "empty_out.jsonl";
  CommandResult result = run_cli("project --group " + spec.string() + " --input " + input.string() +
                                 " --output " + output.string());
  CHECK(result.exit_code == 0);
  CHECK(read_file(output).empty());
}

TEST_CASE("project: deterministic across reruns") {
  fs::path spec = tensor_spec_file();
  fs::path input = scratch_dir() / "det.jsonl";
  std::ostringstream lines;
  for (int i = 0; i < 10; ++i)
    lines << "{\"x\": [[" << (i % 4) << "," << (i * 7 % 5) << ",2],[0,5,1],[3," << (i % 3)
          << ",4]]}"
          << "\n";
  write_file(input, lines.str());
  fs::path out1 = scratch_dir() / "det1.jsonl";
  fs::path out2 = scratch_dir() / "det2.jsonl";
  CHECK(run_cli("project --group " + spec.string() + " --input " + input.string() + " --output " +
                out1.string())
            .exit_code == 0);
  CHECK(run_cli("project --group " + spec.string() + " --input " + input.string() + " --output " +
                out2.string())
            .exit_code == 0);
  CHECK(read_file(out1) == read_file(out2));
  CHECK_FALSE(read_file(out1).empty());
}

TEST_CASE("project: malformed records abort with exit 2") {
  fs::path spec = tensor_spec_file();
  fs::path input = scratch_dir() / "bad.jsonl";

  write_file(input, "{not json}\n");
  CHECK(run_cli("project --group " + spec.string() + " --input " + input.string()).exit_code == 2);

  write_file(input, R"({"x": [1, 2, 3]})"
                    "\n");
  CHECK(run_cli("project --group " + spec.string() + " --input " + input.string()).exit_code == 2);

  write_file(input, R"({"x": [[1,2],[3,4]]})"
                    "\n");
  CHECK(run_cli("project --group " + spec.string() + " --input " + input.string()).exit_code == 2);

  write_file(input, R"({"y": 3})"
                    "\n");
  CHECK(run_cli("project --group " + spec.string() + " --input " + input.string()).exit_code == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("project").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  fs::path spec = tensor_spec_file();
  CHECK(run_cli("project --group " + spec.string() + " --projection sideways").exit_code == 2);
  CHECK(run_cli("project --group /nonexistent/g.json").exit_code == 2);

  fs::path bad_spec = scratch_dir() / "bad_spec.json";
  write_file(bad_spec, R"({"degree": -1})");
  CHECK(run_cli("project --group " + bad_spec.string()).exit_code == 2);
}

TEST_CASE("verify subcommand") {
  fs::path spec = scratch_dir() / "c4.json";
  write_file(spec, R"({"kind": "cyclic", "degree": 4})");

  CommandResult counting =
      run_cli("verify --group " + spec.string() + " --suite counting --trials 10 --seed 1");
  CHECK(counting.exit_code == 0);
  CHECK(counting.output.find("\"distinct_forms\": 6") != std::string::npos);
  CHECK(counting.output.find("\"passed\": true") != std::string::npos);

  CommandResult invariance =
      run_cli("verify --group " + spec.string() + " --suite invariance --trials 100 --seed 5");
  CHECK(invariance.exit_code == 0);

  // bounds: a degree-12 group cannot run the brute-force suites
  fs::path big = scratch_dir() / "c12.json";
  write_file(big, R"({"kind": "cyclic", "degree": 12})");
  CHECK(run_cli("verify --group " + big.string() + " --suite counting --trials 1").exit_code == 2);
}

TEST_CASE("cayley-demo subcommand") {
  CommandResult result = run_cli("cayley-demo --per-class 3 --seed 11");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("\"accuracy\": 1.0") != std::string::npos);
  CHECK(result.output.find("\"two_step_mismatches\": 0") != std::string::npos);
}

TEST_CASE("dirichlet subcommand") {
  fs::path spec = scratch_dir() / "s2.json";
  write_file(spec, R"({"kind": "symmetric", "degree": 2})");
  fs::path input = scratch_dir() / "dir_in.jsonl";
  write_file(input, R"({"x": [1, 3], "tag": "a"})"
                    "\n"
                    R"({"x": [3, 1], "tag": "b"})"
                    "\n");
  fs::path output = scratch_dir() / "dir_out.jsonl";

  CommandResult result = run_cli("dirichlet --group " + spec.string() + " --input " + input.string() +
                                 " --output " + output.string() + " --oracle");
  CHECK(result.exit_code == 0);
  std::string out = read_file(output);
  CHECK(out.find("\"canonical\":[3,1]") != std::string::npos);
  CHECK(out.find("\"objective\":5") != std::string::npos);
  CHECK(out.find("\"steps\":1") != std::string::npos);
  CHECK(out.find("\"steps\":0") != std::string::npos);
  CHECK(out.find("\"oracle_match\":true") != std::string::npos);
  CHECK(out.find("\"tag\":\"a\"") != std::string::npos);

  // multi-seed on a cyclic tensor
  fs::path tensor = scratch_dir() / "z3z3.json";
  write_file(tensor, R"({"tensor": [{"kind": "cyclic", "degree": 3}, {"kind": "cyclic", "degree": 3}]})");
  fs::path tensor_in = scratch_dir() / "dir_tensor.jsonl";
  write_file(tensor_in, R"({"x": [[4,0,2],[8,1,7],[3,6,5]]})"
                        "\n");
  CommandResult multi = run_cli("dirichlet --group " + tensor.string() + " --input " +
                                tensor_in.string() + " --output - --multi-seed --witness");
  CHECK(multi.exit_code == 0);
  CHECK(multi.output.find("\"witness\"") != std::string::npos);

  // multi-seed without the factor cycles is a usage error
  fs::path nocycle = scratch_dir() / "nocycle.json";
  write_file(nocycle, R"j({"tensor": [{"degree": 3, "generators": ["(1 2)"]}, {"kind": "cyclic", "degree": 2}]})j");
  fs::path nocycle_in = scratch_dir() / "nocycle.jsonl";
  write_file(nocycle_in, R"({"x": [0, 1, 2, 3, 4, 5]})"
                         "\n");
  CHECK(run_cli("dirichlet --group " + nocycle.string() + " --input " + nocycle_in.string() +
                " --multi-seed")
            .exit_code == 2);
}
