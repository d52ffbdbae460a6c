#include <sstream>

#include "doctest.h"
#include "strandbox/cli.hpp"
#include "strandbox/modules.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = strandbox::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("tau on the command line") {
  auto r = cli({"tau", "--n", "4", "--orient", "RRR", "triv(2)"});
  CHECK(r.code == 0);
  CHECK(r.out == "triv(3)\n");
  auto back = cli({"--n", "4", "--orient", "RRR", "tau", "triv(3)", "--power", "-1"});
  CHECK(back.out == "triv(2)\n");
  CHECK(cli({"tau", "--n", "4", "triv(2)", "--power", "3"}).out == "triv(2)\n");
}

TEST_CASE("roots and verification commands") {
  auto r = cli({"roots", "--n", "3", "--bound", "2"});
  CHECK(r.code == 0);
  for (const char* v : {"(1,0,0)", "(0,1,0)", "(0,0,1)", "(1,1,0)"}) CHECK(r.out.find(v) != std::string::npos);
  auto j = cli({"roots", "--n", "3", "--bound", "6", "--format", "json"});
  auto cf = cli({"roots", "--n", "3", "--bound", "6", "--format", "json", "--closed-form", "--seq", "3,2,1"});
  CHECK(j.out == cf.out);

  auto gls = cli({"verify-gls", "--n", "3", "--orient", "RR", "--bound", "12", "--format", "json"});
  CHECK(gls.code == 0);
  CHECK(strandbox::Json::parse(gls.out)["pass"] == true);
  auto cox = cli({"verify-coxeter", "--n", "3", "--seq", "3,2,1", "--depth", "4"});
  CHECK(cox.code == 0);
  CHECK(cox.out == "PASS\n");
}

TEST_CASE("listing commands") {
  auto s = cli({"strings", "--n", "3", "--max-len", "1", "--format", "json"});
  CHECK(s.code == 0);
  CHECK(strandbox::Json::parse(s.out).size() == 7);
  auto b = cli({"bands", "--n", "3", "--max-dl", "1"});
  CHECK(b.out.find("band(e1.a21~.a32~.e3.a32.a21,1,1)") != std::string::npos);
  auto m = cli({"minimal", "--n", "3", "--max-len", "5"});
  CHECK(m.out.find("(2,2): a21~.a32~") != std::string::npos);
  auto t = cli({"tube", "--n", "4"});
  CHECK(t.out == "level 1: e1~.a21~.a32~.a43~.e4~ triv(3) triv(2)\n");
  auto c = cli({"component", "triv(2)", "--radius", "2", "--format", "dot"});
  CHECK(c.code == 0);
  CHECK(c.out.find("digraph") != std::string::npos);
  auto cj = cli({"component", "triv(2)", "--radius", "2", "--format", "json"});
  CHECK(strandbox::Json::parse(cj.out)["kind"] == "TubeRank");
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"tau", "nonsense"}).code == 2);
  CHECK(cli({"tau", "0"}).code == 0);
  CHECK(cli({"component", "0"}).code == 2);
  CHECK(cli({"strings", "--n", "2"}).code == 2);
  CHECK(cli({"strings", "--orient", "RRR"}).code == 2);
  CHECK(cli({"strings", "--format", "xml"}).code == 2);
  CHECK(cli({"verify-coxeter", "--seq", "2,1,3"}).code == 2);
  auto bad = cli({"tau", "a99"});
  CHECK(bad.err.find("error") != std::string::npos);
  CHECK(bad.out.empty());
}
