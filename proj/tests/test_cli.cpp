#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string &args) {
  std::string cmd = std::string(TREEHOPF_CLI) + " " + args + " 2>&1";
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
    out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string &name, const std::string &content) {
  auto path = std::filesystem::temp_directory_path() / ("treehopf_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

} // namespace

TEST_CASE("element verbs") {
  Run r = run("coproduct '[[]]'");
  CHECK(r.status == 0);
  CHECK(r.out == "1 (x) [[]] + [[]] (x) 1 + [] (x) []\n");
  CHECK(run("antipode '[[]]'").out == "-1 [[]] + [] []\n");
  CHECK(run("graft '[]' '[] []'").out == "[[]] []\n");
  CHECK(run("pi1 '[] []'").out == "-2 [[]] + [] []\n");
  CHECK(run("degp '[[[]]]'").out == "3\n");
  CHECK(run("decompose '1 + [[]]'").out == "scalar: 1\n2: [[]]\n");
  CHECK(run("bracket '[]' '[[]]'").out == "2 [[][]]\n");
  CHECK(run("pair '[].[]' '[] []'").out == "2\n");
  CHECK(run("shuffle '[]' '[]'").out == "2 [[]]\n");
}

TEST_CASE("tables") {
  Run r = run("dims 8");
  CHECK(r.status == 0);
  CHECK(r.out.find("h: 1 1 1 2 3 8 16 41\n") != std::string::npos);
  CHECK(r.out.find("r: 1 2 4 9 20 48 115 286\n") != std::string::npos);
  Run b = run("prim-basis 4");
  CHECK(b.status == 0);
  CHECK(std::count(b.out.begin(), b.out.end(), '\n') == 2);
}

TEST_CASE("structured output") {
  Run r = run("--format json coproduct '[[]]'");
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["format"] == "treehopf.result");
  CHECK(j["verb"] == "coproduct");
  CHECK(j["result"]["terms"].size() == 3);
  auto d = nlohmann::json::parse(run("dims 29 --format json").out);
  CHECK(d["result"]["r"][28] == 354426847597LL);
  CHECK(d["result"]["h"][28] == 43073007846LL);
}

TEST_CASE("usage and parse errors") {
  Run r = run("coproduct '[[]'");
  CHECK(r.status == 2);
  CHECK(r.out.find("position 3") != std::string::npos);
  CHECK(run("").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("check no-such-suite").status == 2);
  CHECK(run("xi --max-weight 40").status == 2);
  CHECK(run("comodule build /nonexistent/file").status == 2);
  CHECK(run("degp 0").status == 2);
}

TEST_CASE("suites") {
  Run r = run("check hopf-axioms --max-weight 5");
  CHECK(r.status == 0);
  CHECK(r.out.find("seed") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  Run a = run("check comodule --seed 9");
  Run b = run("check comodule --seed 9");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("comodule verbs") {
  std::string p = temp_file("p.json", R"({"format":"treehopf.matrix","version":1,"kind":"primitive","n":2,
    "entries":[{"i":1,"j":1,"element":"[]"},{"i":2,"j":2,"element":"[]"}]})");
  Run built = run("--format json comodule build " + p);
  REQUIRE(built.status == 0);
  auto q = nlohmann::json::parse(built.out)["result"];
  CHECK(q["kind"] == "structure");
  std::string qfile = temp_file("q.json", q.dump());
  CHECK(run("comodule verify " + qfile).out == "coassociative\n");
  CHECK(run("comodule type " + p).out == "reduced type: (1,1,1)\nflag type: (1,1,1)\n");
  Run extracted = run("--format json comodule extract " + qfile);
  CHECK(nlohmann::json::parse(extracted.out)["result"]["entries"].size() == 2);
  CHECK(run("comodule flag " + qfile).out.find("dims: 1 2 3") != std::string::npos);
  std::string g = temp_file("g.json", R"([[1,0,0],[0,2,0],[0,0,1]])");
  CHECK(run("comodule act " + p + " --matrix " + g).out == "p[1,1] = 1/2 []\np[2,2] = 2 []\n");
  std::string bad = temp_file("g2.json", R"([[1,0,0],[1,1,0],[0,0,1]])");
  CHECK(run("comodule act " + p + " --matrix " + bad).status == 2);
  q["entries"][0]["element"] = "[[]]";
  std::string broken = temp_file("broken.json", q.dump());
  CHECK(run("comodule verify " + broken).status == 1);
}

TEST_CASE("endomorphism verbs") {
  std::string fam = temp_file("family.json", R"({"[]": "[]"})");
  CHECK(run("endo apply --family " + fam + " '[[][]] + []'").out == "[[][]] + []\n");
  Run rec = run("endo recover --family " + fam + " --max-weight 3");
  CHECK(rec.status == 0);
  CHECK(rec.out.find("[] -> []\n") != std::string::npos);
  std::string images = temp_file("images.json", R"({"[]": "2 []", "[[]]": "[[]]"})");
  CHECK(run("endo recover --images " + images + " --max-weight 2").status == 1);
  Run xi = run("xi --max-weight 3 --verify");
  CHECK(xi.status == 0);
  CHECK(xi.out.find("FAIL") == std::string::npos);
}

TEST_CASE("renormalization verb") {
  CHECK(run("renorm '[[[]]]' --form counterterm").out ==
        "x_{[[[]]]}(c) - [x_{[]}(c)]x_{[[]]}(c) - [x_{[[]]}(c)]x_{[]}(c) + "
        "[x_{[]}(c) x_{[]}(c)]x_{[]}(c)\n");
  CHECK(run("renorm '[]'").out == "x_{[]}(c) - [x_{[]}(c)]\n");
  CHECK(run("renorm '[]' --form other").status == 2);
}
