#include <doctest.h>

#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = hml::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(HML_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("eval") {
  auto r = run({"eval", "--lts", data("a_loop.aut"), "--state", "0", "--formula", "T"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");
  r = run({"eval", "--lts", data("a_loop.aut"), "--formula", "[a] F"});
  CHECK(r.code == 1);
  CHECK(r.out == "false\n");
  r = run({"eval", "--lts", "@right-counterexample", "--formula", "<a> AND{n in N} <a>^n T"});
  CHECK(r.code == 0);
  r = run({"eval", "--lts", "@left-counterexample", "--state", "chain(2)", "--formula",
           "<a> <a> T"});
  CHECK(r.out == "true\n");
}

TEST_CASE("equiv") {
  auto trace = run({"equiv", "--lts1", data("a_b_plus_c.aut"), "--lts2", data("ab_plus_ac.aut"),
                    "--semantics", "trace"});
  CHECK(trace.code == 0);
  CHECK(trace.out.rfind("equivalent", 0) == 0);
  auto bis = run({"equiv", "--lts1", data("a_b_plus_c.aut"), "--lts2", data("ab_plus_ac.aut"),
                  "--semantics", "bisimulation", "--bound", "3"});
  CHECK(bis.code == 1);
  CHECK(bis.out ==
        "distinguished (bisimulation, bound 3)\nwitness: <a> and(<b> T, <c> T)\nholds on: lts1\n");
}

TEST_CASE("cut prints F per logic") {
  CHECK(run({"cut", "--n", "0", "--formula", "<a> T"}).out == "not T\n");
  CHECK(run({"cut", "--n", "0", "--formula", "or(<a> T, [b] F)"}).out == "or(F, T)\n");
  CHECK(run({"cut", "--n", "2", "--formula", "AND{n in N} <a>^n T"}).out ==
        "and(T, <a> T, <a> <a> T, <a> <a> not T)\n");
}

TEST_CASE("project") {
  auto r = run({"project", "--lts", data("a_loop.aut"), "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "des (0, 2, 3)\n(0, \"a\", 1)\n(1, \"a\", 2)\n# 0 = pi_2(0)\n# 1 = pi_1(0)\n# 2 = pi_0(0)\n");
}

TEST_CASE("spectrum-report") {
  auto r = run({"spectrum-report", "--lts1", data("a_b_plus_c.aut"), "--lts2",
                data("ab_plus_ac.aut"), "--bound", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("failures              4       distinguished   distinguished") !=
        std::string::npos);
  CHECK(r.out.find("trace                 4       equivalent      equivalent") != std::string::npos);
  CHECK(r.out.find("nested-simulation") != std::string::npos);
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"eval", "--lts", data("a_loop.aut")}).code == 2);
  auto bad = run({"eval", "--lts", data("a_loop.aut"), "--formula", "<a> (T"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 1, column 7") != std::string::npos);
  auto sem = run({"equiv", "--lts1", data("a_loop.aut"), "--lts2", data("a_loop.aut"),
                  "--semantics", "weak"});
  CHECK(sem.code == 2);
  CHECK(sem.err.find("ready-simulation") != std::string::npos);
  CHECK(run({"eval", "--lts", data("missing.aut"), "--formula", "T"}).code == 2);
  CHECK(run({"eval", "--lts", "@nowhere", "--formula", "T"}).code == 2);
  CHECK(run({"eval", "--lts", data("a_loop.aut"), "--state", "9", "--formula", "T"}).code == 2);
  CHECK(run({"project", "--lts", "@left-counterexample", "--n", "2"}).code == 2);
  CHECK(run({"eval", "--lts", "@left-counterexample", "--formula", "AND{n in N} <b> <a>^n T"}).code ==
        2);
}
