#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

using nlohmann::ordered_json;

std::string g_dir;

const std::string& work_dir() {
  if (g_dir.empty()) {
    std::string tmpl = "/tmp/slanthankel_cli_XXXXXX";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s", tmpl.c_str());
    REQUIRE(mkdtemp(buf) != nullptr);
    g_dir = buf;
  }
  return g_dir;
}

std::string path_of(const std::string& name) { return work_dir() + "/" + name; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  REQUIRE(out.good());
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(const std::string& args, const std::string& out_name = "") {
  std::string cmd = std::string(SLANTHANKEL_BIN) + " " + args;
  if (!out_name.empty()) cmd += " > " + path_of(out_name) + " 2>" + path_of(out_name + ".err");
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("spectrum command reports the certified quadratic pair") {
  write_file(path_of("ps3.json"),
             R"({"anti": {"0": ["1","0"], "1": ["1","0"], "2": ["1","0"], "3": ["1","0"]}})");
  int code = run("spectrum --k 2 --symbol " + path_of("ps3.json"), "spectrum.json");
  CHECK(code == 0);
  ordered_json doc = ordered_json::parse(read_file(path_of("spectrum.json")));
  CHECK(doc["tool"] == "slanthankel");
  CHECK(doc["config"]["k"][0] == 2);
  CHECK(doc["config"]["dim"] == 16);
  CHECK(doc["config"]["tol"] == 1e-9);
  CHECK(doc["config"]["seed"] == 42);
  bool saw_l1 = false, saw_l2 = false;
  for (const auto& e : doc["reports"][0]["report"]["eigenvalues"]) {
    double re = e["re"].get<double>();
    if (std::abs(re - 1.5930703308) < 1e-9) saw_l1 = true;
    if (std::abs(re - 0.1569296692) < 1e-9) saw_l2 = true;
  }
  CHECK(saw_l1);
  CHECK(saw_l2);
  CHECK(doc["reports"][0]["report"]["kernel"] == true);
}

TEST_CASE("commute command: dependent pair") {
  write_file(path_of("a.json"), R"({"anti": {"0": ["1","0"], "2": ["-1/2","1"]}})");
  write_file(path_of("b.json"), R"({"anti": {"0": ["2","0"], "2": ["-1","2"]}})");
  int code = run("commute --k 2 --symbol " + path_of("a.json") + " --symbol " + path_of("b.json"),
                 "commute.json");
  CHECK(code == 0);
  ordered_json doc = ordered_json::parse(read_file(path_of("commute.json")));
  const auto& rep = doc["pairs"][0]["report"];
  CHECK(rep["commute"] == true);
  CHECK(rep["dependent"] == true);
  CHECK(rep["witness"].is_null());
}

TEST_CASE("commute command: independent pair carries a witness") {
  write_file(path_of("c.json"), R"({"anti": {"0": ["1","0"], "1": ["1","0"]}})");
  write_file(path_of("d.json"), R"({"anti": {"0": ["1","0"], "1": ["2","0"]}})");
  int code = run("commute --k 2 --symbol " + path_of("c.json") + " --symbol " + path_of("d.json"),
                 "commute2.json");
  CHECK(code == 0);
  ordered_json doc = ordered_json::parse(read_file(path_of("commute2.json")));
  const auto& rep = doc["pairs"][0]["report"];
  CHECK(rep["commute"] == false);
  CHECK(rep["dependent"] == false);
  CHECK_FALSE(rep["witness"].is_null());
}

TEST_CASE("verify command: exit code 2 and the documented mismatch cells") {
  int code = run("verify --k 2 --trials 5 --seed 42 --out " + path_of("verify.json"),
                 "verify.stdout");
  CHECK(code == 2);
  ordered_json doc = ordered_json::parse(read_file(path_of("verify.json")));
  CHECK(doc["overall"] == "MISMATCH_DOCUMENTED");
  int partial_mismatches = 0;
  for (const auto& cell : doc["partial_sum_sweep"])
    if (cell["status"] == "MISMATCH_DOCUMENTED") {
      ++partial_mismatches;
      CHECK(cell["N"] == 2);  // only the N = k cell
    }
  CHECK(partial_mismatches == 1);
  int monomial_mismatches = 0;
  for (const auto& cell : doc["monomial_family"])
    if (cell["status"] == "MISMATCH_DOCUMENTED") {
      ++monomial_mismatches;
      int i = cell["i"].get<int>();
      CHECK((i == 6 || i == 9));
    }
  CHECK(monomial_mismatches == 2);
  for (const auto& s : doc["equal_degree"]) CHECK(s["counterexample"].is_null());
  for (const auto& s : doc["unequal_degree"]) CHECK(s["counterexample"].is_null());
  for (const auto& s : doc["tail_vanishing_lemma"]) CHECK(s["counterexample"].is_null());
}

TEST_CASE("verify output is byte-identical across runs") {
  int a = run("verify --k 2 --trials 3 --seed 9 --out " + path_of("v1.json"), "v1.stdout");
  int b = run("verify --k 2 --trials 3 --seed 9 --out " + path_of("v2.json"), "v2.stdout");
  CHECK(a == 2);
  CHECK(b == 2);
  CHECK(read_file(path_of("v1.json")) == read_file(path_of("v2.json")));
}

TEST_CASE("matrix command: JSON and CSV formats") {
  write_file(path_of("m.json"), R"({"anti": {"0": ["1","0"], "1": ["1","0"]}})");
  int code =
      run("matrix --k 2 --dim 4 --symbol " + path_of("m.json"), "matrix.json");
  CHECK(code == 0);
  ordered_json doc = ordered_json::parse(read_file(path_of("matrix.json")));
  const auto& entry = doc["matrices"][0];
  CHECK(entry["hankel"]["rows"] == 4);
  CHECK(entry["slant"]["cols"] == 4);
  CHECK(entry["w"]["cols"] == 7);
  CHECK(entry["hankel"]["entries"][0][0] == 1.0);

  int csv_code = run("matrix --k 2 --dim 4 --format CSV --symbol " + path_of("m.json"),
                     "matrix.csv");
  CHECK(csv_code == 0);
  std::string csv = read_file(path_of("matrix.csv"));
  CHECK(csv.find("# hankel") != std::string::npos);
  CHECK(csv.find("# slant") != std::string::npos);
  CHECK(csv.find("# w") != std::string::npos);
  CHECK(csv.find("1+0i") != std::string::npos);
}

TEST_CASE("error paths: missing file, bad key, bad k") {
  CHECK(run("spectrum --k 2 --symbol " + path_of("nope.json"), "e1") == 1);
  std::string err = read_file(path_of("e1.err"));
  CHECK(err.find("nope.json") != std::string::npos);

  write_file(path_of("bad.json"), R"({"anti": {"x": ["1","0"]}})");
  CHECK(run("spectrum --k 2 --symbol " + path_of("bad.json"), "e2") == 1);
  std::string err2 = read_file(path_of("e2.err"));
  CHECK(err2.find("bad.json") != std::string::npos);
  CHECK(err2.find("anti.x") != std::string::npos);

  write_file(path_of("ok.json"), R"({"anti": {"0": ["1","0"]}})");
  CHECK(run("spectrum --k 1 --symbol " + path_of("ok.json"), "e3") == 1);
  CHECK(run("commute --k 2 --symbol " + path_of("ok.json"), "e4") == 1);
}

TEST_CASE("spectrum exits 2 when a closed-form comparison is documented as a mismatch") {
  write_file(path_of("m6.json"), R"({"anti": {"6": ["1","0"]}})");
  int code = run("spectrum --k 2 --symbol " + path_of("m6.json"), "m6.out");
  CHECK(code == 2);
  ordered_json doc = ordered_json::parse(read_file(path_of("m6.out")));
  bool documented = false;
  for (const auto& v : doc["reports"][0]["report"]["verdicts"])
    if (v["claim"] == "thm-point-spectrum-monomial")
      documented = v["status"] == "MISMATCH_DOCUMENTED";
  CHECK(documented);
}

TEST_CASE("k ranges expand inclusively") {
  write_file(path_of("r.json"), R"({"anti": {"0": ["1","0"]}})");
  int code = run("matrix --k 2..4 --dim 3 --symbol " + path_of("r.json"), "range.json");
  CHECK(code == 0);
  ordered_json doc = ordered_json::parse(read_file(path_of("range.json")));
  REQUIRE(doc["matrices"].size() == 3);
  CHECK(doc["matrices"][0]["k"] == 2);
  CHECK(doc["matrices"][1]["k"] == 3);
  CHECK(doc["matrices"][2]["k"] == 4);
}
