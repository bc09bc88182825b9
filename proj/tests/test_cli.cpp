#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "qfl/catalog/catalog.hpp"
#include "qfl/cli/cli.hpp"
#include "qfl/liecore/invariants.hpp"
#include "qfl/liecore/json_io.hpp"

using nlohmann::json;
using qfl::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line))
    if (!line.empty()) out.push_back(json::parse(line));
  return out;
}

int exit_status(const std::string& command) {
  const int s = std::system(command.c_str());
  return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
}

}  // namespace

TEST_CASE("complete verb") {
  const auto o = call({"complete", "Lnr:n=6,r=3"});
  CHECK(o.code == 0);
  const auto j = json::parse(o.out);
  CHECK(j["H0"] == 0);
  CHECK(j["H1"] == 0);
  CHECK(j["complete"] == true);
}

TEST_CASE("build reports Jacobi failures with exit 1") {
  auto o = call({"build", "A+C:n=10,k=2,alpha=1,0,1"});
  CHECK(o.code == 1);
  const auto j = json::parse(o.out);
  CHECK(j["jacobi"] == false);
  CHECK(j["defects"].size() > 0);
  CHECK(j["defects"][0]["triple"].size() == 3);

  CHECK(j["defects"][0]["triple"] == json::array({1, 2, 3}));
  o = call({"build", "A+C:n=8,k=2,alpha=1,1"});
  CHECK(o.code == 0);
}

TEST_CASE("h2bound verb") {
  auto o = call({"h2bound", "n=11 k=3"});
  CHECK(o.code == 0);
  auto j = json::parse(o.out);
  CHECK(j["bound"] == 2);
  CHECK(j["classes"] == 2);
  CHECK(j["H2"].get<int>() >= 2);
  CHECK(j["t"] == 4);
  // (10, 2): one of the two deformation directions is not closed, which is
  // a mathematical verdict (exit 1), reported in the row.
  o = call({"h2bound", "n=10 k=2"});
  CHECK(o.code == 1);
  j = json::parse(o.out);
  CHECK(j["bound"] == 2);
  CHECK(j["classes"] == 1);
  CHECK(j["not_closed"] == json::array({3}));
  CHECK(call({"h2bound", "n=8", "k=2"}).code == 0);
  CHECK(call({"h2bound", "n=8"}).code == 2);
  CHECK(call({"h2bound", "n=8 k=x"}).code == 2);
}

TEST_CASE("input errors exit 2 and name the field") {
  auto o = call({"invariants", "Lnr:n=6,r=4"});
  CHECK(o.code == 2);
  CHECK(o.err.find("r") != std::string::npos);
  o = call({"invariants", "Bogus:n=6"});
  CHECK(o.code == 2);
  CHECK(call({"frobnicate", "L+C:n=6"}).code == 2);
  CHECK(call({"--format", "xml", "invariants", "L+C:n=6"}).code == 2);

  const std::string path = "cli_bad.json";
  std::ofstream(path) << R"({"dim": 3, "brackets": [{"i": 0, "j": 5, "terms": []}]})";
  o = call({"invariants", path});
  CHECK(o.code == 2);
  CHECK(o.err.find("brackets[0].j") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("round trip through JSON") {
  const std::string path = "cli_roundtrip.json";
  auto b = call({"build", "Tn_n4:n=9"});
  REQUIRE(b.code == 0);
  std::ofstream(path) << json::parse(b.out)["algebra"].dump();
  const auto from_file = json::parse(call({"invariants", path}).out);
  const auto in_memory = json::parse(call({"invariants", "Tn_n4:n=9"}).out);
  for (const char* key : {"dim", "jacobi", "nilindex", "psequence", "center_dim", "type", "rank"}) {
    CAPTURE(key);
    CHECK(from_file[key] == in_memory[key]);
  }
  const auto g = qfl::catalog::build_family(qfl::catalog::parse_spec("Tn_n4:n=9"));
  CHECK(qfl::liecore::load_algebra_file(path) == g);

  // A JSON algebra is tested for completeness as given.
  std::ofstream(path) << R"({"dim": 2, "brackets": [{"i": 0, "j": 1, "terms": [{"k": 0, "c": "-1"}]}]})";
  const auto c = call({"complete", path});
  CHECK(c.code == 0);
  CHECK(json::parse(c.out)["complete"] == true);
  std::ofstream(path) << R"({"dim": 3, "brackets": [{"i": 0, "j": 1, "terms": [{"k": 2, "c": 1}]}]})";
  CHECK(call({"complete", path}).code == 1);
  std::remove(path.c_str());
}

TEST_CASE("other verbs") {
  auto j = json::parse(call({"invariants", "L+C:n=6"}).out);
  CHECK(j["nilindex"] == 4);
  CHECK(j["type"] == 3);
  CHECK(j["rank"] == 3);
  CHECK(j["psequence"] == json::array({3, 1, 1, 1}));
  j = json::parse(call({"derivations", "L+C:n=6"}).out);
  CHECK(j["diagonal_rank"] == 3);
  CHECK(j["weights"].size() == 6);
  j = json::parse(call({"cohomology", "E73"}).out);
  CHECK(j["dims"]["C2"] == 147);
  CHECK(j["H"].contains("H2"));
  const auto o = call({"completable", "Cnr_k:n=6,r=3,k=2"});
  CHECK(o.code == 0);
  CHECK(json::parse(o.out)["torus_rank"] == 2);
  CHECK(call({"completable", "Fnr_k:n=9,r=3,k=1"}).code == 1);
  const auto t = call({"--format", "table", "invariants", "L+C:n=6"});
  CHECK(t.out.find("nilindex") != std::string::npos);
  CHECK(call({"--max-n", "7", "invariants", "L+C:n=8"}).code == 2);
}

TEST_CASE("batch keeps input order and sorts tables") {
  const std::string path = "cli_batch.txt";
  std::ofstream(path) << "Lnr:n=7,r=3\n# comment\n\nE73\nA+C:n=8,k=2\nLnr:n=6,r=4\nL+C:n=5\n";
  auto o = call({"batch", path});
  CHECK(o.code == 2);
  const auto rows = lines(o.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0]["spec"] == "Lnr:n=7,r=3");
  CHECK(rows[1]["spec"] == "E73");
  CHECK(rows[2]["complete"] == true);
  CHECK(rows[3].contains("error"));
  CHECK(rows[4]["spec"] == "L+C:n=5");

  // The same run twice gives identical bytes.
  CHECK(call({"batch", path}).out == o.out);

  o = call({"--format", "table", "batch", path});
  std::istringstream is(o.out);
  std::string header, first, second;
  std::getline(is, header);
  std::getline(is, first);
  std::getline(is, second);
  CHECK(header.rfind("spec", 0) == 0);
  CHECK(first.rfind("A+C", 0) == 0);
  CHECK(second.rfind("E73", 0) == 0);

  o = call({"--max-n", "6", "batch", path});
  CHECK(lines(o.out)[0].contains("error"));
  CHECK(lines(o.out)[4]["complete"] == true);

  const std::string out_path = "cli_batch_out.txt";
  CHECK(call({"--out", out_path, "batch", "--verb", "invariants", path}).code == 2);
  std::ifstream in(out_path);
  std::string first_line;
  std::getline(in, first_line);
  CHECK(json::parse(first_line)["nilindex"] == 5);
  std::remove(out_path.c_str());
  std::remove(path.c_str());
}

TEST_CASE("installed binary honours the exit-code contract") {
  const std::string bin = QFL_CLI_PATH;
  CHECK(exit_status(bin + " complete Lnr:n=6,r=3 > /dev/null") == 0);
  CHECK(exit_status(bin + " build A+C:n=10,k=2,alpha=1,0,1 > /dev/null 2>&1") == 1);
  CHECK(exit_status(bin + " invariants 'Lnr:n=6,r=4' > /dev/null 2>&1") == 2);
  CHECK(exit_status(bin + " h2bound 'n=8 k=2' > /dev/null") == 0);
}
