#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

// MSAT_BIN is injected by the build as the path of the command-line binary.

namespace {

using Json = nlohmann::ordered_json;

struct Cmd {
  int code = -1;
  std::string out;
};

Cmd run_cmd(const std::string& tail) {
  Cmd c;
  std::string full = std::string(MSAT_BIN) + " " + tail + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) c.out.append(buf, got);
  int status = pclose(pipe);
  c.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return c;
}

std::string write_temp(const std::string& name, const std::string& body) {
  std::string path = "/tmp/" + name;
  std::ofstream out(path);
  out << body;
  return path;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("describe-group prints the headline data") {
  Cmd c = run_cmd("describe-group --group GL2");
  CHECK(c.code == 0);
  CHECK(contains(c.out, "group GL2"));
  CHECK(contains(c.out, "|W| = 2"));
  CHECK(contains(c.out, "antidominant generators: (-1,-1) (0,1) (1,1)"));
  CHECK(contains(c.out, "levi {1} rank 1"));

  Cmd rel = run_cmd("describe-group --group SL3 --relations --bound 4");
  CHECK(rel.code == 0);
  CHECK(contains(rel.out, "g1 + g2 = 3*g3"));
}

TEST_CASE("describe-group emits machine-readable json") {
  Cmd c = run_cmd("describe-group --group GL2 --relations --json");
  REQUIRE(c.code == 0);
  Json j = Json::parse(c.out);
  CHECK(j.at("weyl_order") == 2);
  CHECK(j.at("longest_word") == Json::array({1}));
  CHECK(j.at("monoid").at("generators") ==
        Json::array({{-1, -1}, {0, 1}, {1, 1}}));
  CHECK(j.at("strata").size() == 2);
  CHECK(j.at("relations").at("relations").size() == 1);
  CHECK(j.at("group").at("name") == "GL2");
}

TEST_CASE("satake transforms inline and file elements") {
  Cmd torus = run_cmd("satake --group GL2 --coweight 1,0 --basis ic --p 2 --levi none");
  REQUIRE(torus.code == 0);
  Json jt = Json::parse(torus.out);
  CHECK(jt.at("levi") == Json::array());
  CHECK(jt.at("terms") ==
        Json::array({Json{{"coweight", {0, 1}}, {"coeff", 1}}}));

  Cmd levi = run_cmd(
      "satake --group GL3 --coweight 2,1,0 --basis ic --p 3 --levi 1 --out-basis ic");
  REQUIRE(levi.code == 0);
  Json jl = Json::parse(levi.out);
  CHECK(jl.at("levi") == Json::array({1}));
  CHECK(jl.at("basis") == "ic");
  CHECK(jl.at("terms") ==
        Json::array({Json{{"coweight", {1, 0, 2}}, {"coeff", 1}}}));

  std::string path = write_temp(
      "msat_cli_elem.json",
      R"({"group":"GL2","levi":[1],"p":3,"basis":"std",)"
      R"("terms":[{"coweight":[1,1],"coeff":2}]})");
  Cmd file = run_cmd("satake --element " + path + " --levi all");
  REQUIRE(file.code == 0);
  CHECK(Json::parse(file.out).at("terms") ==
        Json::array({Json{{"coweight", {1, 1}}, {"coeff", 2}}}));
}

TEST_CASE("oracle mv-count prints csv and json tables") {
  Cmd c = run_cmd("oracle mv-count --group GL2 --q 2 --lambda 1,0 --nu 0,1");
  CHECK(c.code == 0);
  CHECK(c.out ==
        "q,lambda,nu,raw_count,count_mod_p\n"
        "2,\"1 0\",\"0 1\",1,1\n");
  Cmd j = run_cmd("oracle mv-count --group GL2 --q 2,3 --lambda 1,0 --nu 1,0 --json");
  REQUIRE(j.code == 0);
  Json rows = Json::parse(j.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].at("raw_count") == 2);
  CHECK(rows[1].at("raw_count") == 3);
}

TEST_CASE("oracle check subcommands report verdicts by exit code") {
  Cmd sc = run_cmd("oracle satake-check --group GL2 --q 2,3 --lambda 1,0");
  CHECK(sc.code == 0);
  CHECK(contains(sc.out, "q,lambda,nu,raw_count,count_mod_p"));
  CHECK(contains(sc.out, "q=2 expected e^(0,1): PASS"));
  CHECK(sc.out.rfind("PASS\n") == sc.out.size() - 5);

  Cmd cc = run_cmd("oracle conv-check --group GL2 --q 2 --mu1 1,0 --mu2 1,0");
  CHECK(cc.code == 0);
  CHECK(contains(cc.out, "\"1 0\",\"1 0\",\"1 1\",3,1"));
  CHECK(contains(cc.out, "q=2: PASS"));

  Cmd js = run_cmd("oracle satake-check --group GL3 --q 2 --lambda 1,1,0 --json");
  REQUIRE(js.code == 0);
  Json report = Json::parse(js.out);
  CHECK(report.at("pass") == true);
  CHECK(report.at("checks")[0].at("pass") == true);
}

TEST_CASE("classify-param reads stdin and files") {
  std::string ordinary = write_temp("msat_cli_ord.json", R"({
    "group": "GL2", "p": 2, "k": 1,
    "values": [
      {"generator": [-1,-1], "value": [1]},
      {"generator": [0,1],  "value": [1]},
      {"generator": [1,1],  "value": [1]}
    ]
  })");
  Cmd c = run_cmd("classify-param --param - < " + ordinary);
  REQUIRE(c.code == 0);
  Json j = Json::parse(c.out);
  CHECK(j.at("stratum") == Json::array());
  CHECK(j.at("rank") == 2);

  std::string super = write_temp("msat_cli_ss.json", R"({
    "group": "SL2", "p": 3,
    "values": [{"generator": [-1], "value": [0]}]
  })");
  Cmd s = run_cmd("classify-param --param " + super);
  REQUIRE(s.code == 0);
  CHECK(Json::parse(s.out).at("stratum") == Json::array({1}));

  std::string bad = write_temp("msat_cli_bad.json", R"({
    "group": "GL2", "p": 3,
    "values": [
      {"generator": [-1,-1], "value": [2]},
      {"generator": [0,1],  "value": [1]},
      {"generator": [1,1],  "value": [1]}
    ]
  })");
  CHECK(run_cmd("classify-param --param " + bad).code == 3);
}

TEST_CASE("exit codes separate usage, computation and verification errors") {
  CHECK(run_cmd("describe-group").code == 1);          // missing --group
  CHECK(run_cmd("oracle").code == 1);                  // missing subcommand
  CHECK(run_cmd("no-such-command").code == 1);
  CHECK(run_cmd("describe-group --group E8").code == 2);
  CHECK(run_cmd("oracle mv-count --group Sp4 --q 2 --lambda 1,0 --nu 1,0").code == 2);
  CHECK(run_cmd("satake --group GL2 --coweight 0,1 --p 2").code == 2);  // not dominant
  CHECK(run_cmd("--help").code == 0);
}

TEST_CASE("output is byte-for-byte deterministic") {
  std::string args = "describe-group --group Sp4 --relations --json";
  CHECK(run_cmd(args).out == run_cmd(args).out);
  std::string oracle = "oracle satake-check --group GL2 --q 2,3 --lambda 2,0 --json";
  Cmd first = run_cmd(oracle);
  CHECK(first.code == 0);
  CHECK(first.out == run_cmd(oracle).out);
  CHECK(first.out == run_cmd(oracle + " --jobs 3").out);
}
