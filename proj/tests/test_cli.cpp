#include <cstdio>
#include <fstream>
#include <sstream>

#include "catch_amalgamated.hpp"

#include "cli.hpp"
#include "support/golden.hpp"

namespace
{

struct Outcome
{
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> const &args)
{
  std::ostringstream out, err;
  int const code = togglegrp::run(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("enumerate prints the index table", "[cli]")
{
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const r = run({"enumerate", "--n", std::to_string(n)});
    CHECK(r.code == 0);
    CHECK(r.out == golden::read("figure1_n" + std::to_string(n) + ".txt"));
  }
  auto const j = run({"enumerate", "--n", "2", "--format", "json"});
  CHECK(j.code == 0);
  CHECK(j.out == R"({"n":2,"sets":[{"index":1,"set":"{}"},{"index":2,"set":"{1}"},{"index":3,"set":"{2}"}]})"
                 "\n");
}

TEST_CASE("enumerate reads a graph file", "[cli]")
{
  std::string const path = "test_cli_triangle.txt";
  {
    std::ofstream f(path);
    f << "3\n1 2\n2 3\n1 3\n";
  }
  auto const r = run({"enumerate", "--graph", path});
  std::remove(path.c_str());
  CHECK(r.code == 0);
  CHECK(r.out == "1 {}\n2 {1}\n3 {2}\n4 {3}\n");
  CHECK(run({"enumerate", "--graph", "no-such-file"}).code == 2);
  CHECK(run({"enumerate"}).code == 2);
}

TEST_CASE("index and unindex", "[cli]")
{
  CHECK(run({"index", "--n", "4", "--set", "{1,4}"}).out == "7\n");
  CHECK(run({"unindex", "--n", "4", "--idx", "7"}).out == "{1,4}\n");
  CHECK(run({"index", "--n", "4", "--set", "{1,4}", "--json"}).out ==
        R"({"index":7,"n":4,"set":"{1,4}"})"
        "\n");
  CHECK(run({"index", "--n", "4", "--set", "{1,2}"}).code == 2);
  CHECK(run({"index", "--n", "4", "--set", "{1,9}"}).code == 2);
  CHECK(run({"unindex", "--n", "4", "--idx", "9"}).code == 2);
  CHECK(run({"index", "--n", "0", "--set", "{}"}).code == 2);
}

TEST_CASE("toggle", "[cli]")
{
  CHECK(run({"toggle", "--n", "4", "--k", "3", "--set", "{1}"}).out ==
        "{1,3}\n");
  CHECK(run({"toggle", "--n", "4", "--k", "2", "--set", "{1}"}).out ==
        "{1}\n");
  CHECK(run({"toggle", "--n", "4", "--k", "5", "--set", "{1}"}).code == 2);
}

TEST_CASE("permutation printing", "[cli]")
{
  CHECK(run({"generators", "--n", "3"}).out ==
        "(1,2)(4,5)\n(1,3)\n(1,4)(2,5)\n");
  CHECK(run({"generators", "--n", "4", "--prime"}).out ==
        "(1,2)(4,5)(6,7)\n(1,3)(6,8)\n");
  CHECK(run({"generators", "--n", "2", "--prime"}).code == 2);
  CHECK(run({"hat-t", "--n", "4"}).out == "(1,6)(2,7)(3,8)\n");
  CHECK(run({"toggle-perm", "--n", "4", "--k", "2"}).out == "(1,3)(6,8)\n");
  auto const j = run({"hat-t", "--n", "2", "--format", "json"});
  CHECK(j.out == R"j({"degree":3,"n":2,"permutation":"(1,3)"})j"
                 "\n");
  CHECK(run({"hat-t", "--n", "40"}).code == 3);
}

TEST_CASE("order", "[cli]")
{
  CHECK(run({"order", "--n", "3"}).out == "120\n");
  CHECK(run({"order", "--n", "4", "--toggles"}).out == "40320\n");
  CHECK(run({"order", "--n", "4", "--prime"}).out == "12\n");
  CHECK(run({"order", "--n", "3", "--prime", "--json"}).out ==
        R"({"degree":5,"group":"G'","n":3,"order":"2"})"
        "\n");
  CHECK(run({"order", "--n", "4", "--prime", "--toggles"}).code == 2);
  CHECK(run({"order", "--n", "13"}).code == 3);
}

TEST_CASE("verify exit codes", "[cli]")
{
  auto const ok = run({"verify", "--max-n", "3"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("summary:") != std::string::npos);
  CHECK(ok.out.find("FAIL") == std::string::npos);

  auto const red = run({"verify", "--max-n", "4", "--claim", "thm:gen'"});
  CHECK(red.code == 1);
  CHECK(red.out.find("FAIL thm:gen' n=4") != std::string::npos);

  auto const quick_skip =
    run({"verify", "--max-n", "14", "--claim", "thm:gen"});
  CHECK(quick_skip.code == 0);
  CHECK(quick_skip.out.find("SKIPPED thm:gen n=13") != std::string::npos);

  auto const full_skip =
    run({"verify", "--max-n", "13", "--profile", "full", "--claim", "thm:gen"});
  CHECK(full_skip.code == 3);

  auto const j = run({"verify", "--max-n", "2", "--claim", "lem:iota",
                      "--format", "json"});
  auto const parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["summary"]["pass"] == 2);
  CHECK(parsed["reports"].size() == 2);

  CHECK(run({"verify", "--max-n", "3", "--claim", "bogus"}).code == 2);
  CHECK(run({"verify", "--max-n", "3", "--profile", "slow"}).code == 2);
}

TEST_CASE("usage errors", "[cli]")
{
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"index", "--n", "4"}).code == 2);
  CHECK(run({"index", "--n", "x", "--set", "{}"}).code == 2);
  CHECK(run({"index", "--n", "4", "--set", "{}", "--json", "--format",
             "text"})
          .code == 2);
  CHECK(run({"index", "--n", "4", "--set", "{}", "--format", "xml"}).code == 2);
  auto const help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("enumerate") != std::string::npos);
}
