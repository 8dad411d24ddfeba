#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ordcx/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ordcx::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("ordcx_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }
bool contains(const std::string& s, const std::string& p) { return s.find(p) != std::string::npos; }

}  // namespace

TEST_CASE("radius") {
  const auto g = run({"radius", write_temp("g.txt", "geom 1\n")});
  CHECK(g.code == ordcx::cli::kExitOk);
  CHECK(starts_with(g.out, "L=1 rho=1\n"));
  const auto f = run({"radius", write_temp("f.txt", "fact\n")});
  CHECK(starts_with(f.out, "L=inf rho=0\n"));
  const auto mixed = run({"radius", write_temp("m.txt", "# two coordinates\ngeom 2\ninvfact\n")});
  CHECK(starts_with(mixed.out, "L=[2,0] rho=[0.5,inf]\n"));
  CHECK_FALSE(contains(mixed.out, "FAILED"));
}

TEST_CASE("radius input errors") {
  const auto empty = run({"radius", write_temp("e.txt", "")});
  CHECK(empty.code == ordcx::cli::kExitInput);
  CHECK(contains(empty.err, "e.txt:1:1: empty family description"));
  const auto bad = run({"radius", write_temp("b.txt", "geom 1\nwat\n")});
  CHECK(bad.code == ordcx::cli::kExitInput);
  CHECK(contains(bad.err, "b.txt:2:1:"));
  CHECK(run({"radius", "/nonexistent/ordcx/family.txt"}).code == ordcx::cli::kExitInput);
}

TEST_CASE("decompose") {
  const auto d = run({"decompose", "[2, inf, 0]"});
  CHECK(d.code == 0);
  CHECK(d.out == "u_F=[2,0,0] u_inf=[0,inf,0] bands: {0}|{1}|{2}\n");
  CHECK(run({"decompose", "[-1]"}).code == ordcx::cli::kExitInput);
  CHECK(run({"decompose", "[1,"}).code == ordcx::cli::kExitInput);
}

TEST_CASE("diff-check") {
  const auto ok = run({"diff-check", "inv(z)", "[2,2]"});
  CHECK(ok.code == 0);
  CHECK(starts_with(ok.out, "f=inv(z)\nf'=-inv(z)^2\n"));
  CHECK(contains(ok.out, "\nPASS\n"));
  const auto fail = run({"diff-check", "z^2", "[1]", "--depth", "3"});
  CHECK(fail.code == ordcx::cli::kExitFail);
  CHECK(contains(fail.out, "reason: final ratio"));
  const auto dom = run({"diff-check", "inv(z)", "[1,0]"});
  CHECK(dom.code == ordcx::cli::kExitDomain);
  CHECK(contains(dom.err, "coordinate 1"));
  CHECK(run({"diff-check", "z^", "[1]"}).code == ordcx::cli::kExitInput);
  CHECK(run({"diff-check", "z", "[1,1]", "--radius", "[1,0]"}).code == ordcx::cli::kExitInput);
  CHECK(run({"diff-check", "z", "[1]", "--depth", "0"}).code == ordcx::cli::kExitInput);
}

TEST_CASE("series") {
  const auto geo = write_temp("geo.txt", "geom 1\n");
  const auto in = run({"series", geo, "[0]", "[0.5]"});
  CHECK(in.code == 0);
  CHECK(starts_with(in.out, "IN\nL*r=[0.5]\nvalue=2\ncutoff=30 "));
  const auto edge = run({"series", geo, "[0]", "[1]"});
  CHECK(edge.out == "BOUNDARY\nL*r=[1]\n");
  const auto fact = run({"series", write_temp("fact.txt", "fact\n"), "[0]", "[0.1]"});
  CHECK(fact.out == "OUT\nL*r=[inf]\nwitness coordinate=0 index=25\n");
  CHECK(run({"series", geo, "[0]", "[1,2]"}).code == ordcx::cli::kExitInput);
}

TEST_CASE("counterexamples") {
  const auto all = run({"counterexamples", "run"});
  CHECK(all.code == 0);
  for (const char* name : {"shift", "swap", "fkl-net", "linf-sigma", "disk-open"})
    CHECK(contains(all.out, std::string(name) + ": REPRODUCED\n"));
  const auto one = run({"counterexamples", "run", "shift"});
  CHECK(starts_with(one.out, "shift: REPRODUCED\n"));
  CHECK_FALSE(contains(one.out, "swap"));
  CHECK(run({"counterexamples", "run", "bogus"}).code == ordcx::cli::kExitInput);
}

TEST_CASE("holomorphy") {
  const auto e = run({"holomorphy", "inv(z) + z^2", "[2,2]", "[1,1]", "--samples", "5", "--seed", "3"});
  CHECK(e.code == 0);
  CHECK(e.out == "samples=5 passed=5 seed=3\nPASS\n");
  const auto fam = run({"holomorphy", "--family", write_temp("h.txt", "geom 1\ninvfact\n"), "[0,0]", "[0.5,inf]"});
  CHECK(fam.code == 0);
  CHECK(contains(fam.out, "passed=25"));
  const auto outside = run({"holomorphy", "--family", write_temp("h2.txt", "geom 1\n"), "[0]", "[2]"});
  CHECK(outside.code == ordcx::cli::kExitDomain);
}

TEST_CASE("usage") {
  CHECK(run({}).code == ordcx::cli::kExitInput);
  CHECK(run({"bogus"}).code == ordcx::cli::kExitInput);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(contains(help.out, "diff-check"));
}
