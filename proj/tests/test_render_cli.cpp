#include <doctest.h>

#include <sstream>

#include "../tools/cli_app.hpp"
#include "forestf/census.hpp"
#include "forestf/metric.hpp"
#include "forestf/render.hpp"
#include "forestf/word.hpp"

using namespace forestf;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("ascii rendering goldens") {
  CHECK(render_ascii(identity()) == "*\n*");
  CHECK(render_ascii(evaluate("x1")) == "/-\\\n* .\n* .");
  CHECK(render_ascii(evaluate("x0")) == ". *\n* .");
  CHECK(render_ascii(evaluate("x1^-1")) == "* .\n* .\n\\-/");
  CHECK(render_ascii(evaluate("x1^2")) ==
        "/---\\\n/-\\\n* . .\n* . .");
}

TEST_CASE("diagram DOT is deterministic") {
  std::string a = render_dot(evaluate("x1 x0^-1"));
  std::string b = render_dot(evaluate("x1 x0^-1"));
  CHECK(a == b);
  CHECK(a.find("digraph diagram {") == 0);
  CHECK(a.find("cluster_top") != std::string::npos);
  CHECK(a.find("cluster_bottom") != std::string::npos);
}

TEST_CASE("cli eval/len/normal/antinormal/minword") {
  CHECK(run({"eval", "x0"}).out == ". *.\n*. .\n");
  CHECK(run({"len", "x7 x3"}).out == "l=14 l0=12 l1=2\n");
  CliResult explain = run({"len", "--explain", "x0"});
  CHECK(explain.out == "l=1 l0=1 l1=0\n0: top=L bottom=R weight=1\n");
  CHECK(run({"normal", "x7 x3"}).out == "x3 x8\n");
  CHECK(run({"antinormal", "x1 x3^3 x6 x7 x10"}).out == "x4 x2 x3 x4 x2^2 x1\n");
  CHECK(run({"minword", "e"}).out == "e\n");
  CHECK(run({"minword", "x7 x3"}).out == "x0^-6 x1 x0^4 x1 x0^2\n");

  // CLI output equals direct library calls
  ForestDiagram f = evaluate("x0^3 x2 x5^2 x7 x6^-1 x5^-1 x1^-2 x0^-1");
  CHECK(run({"normal", "x0^3 x2 x5^2 x7 x6^-1 x5^-1 x1^-2 x0^-1"}).out ==
        format_word(normal_form(f)) + "\n");
}

TEST_CASE("cli exit codes") {
  CHECK(run({"eval", "x0 x"}).code == 1);        // word syntax error
  CHECK(run({"antinormal", "x0"}).code == 2);    // precondition violation
  CHECK(run({"ball", "--radius", "11"}).code == 3);  // budget
  CHECK(run({"ball", "--radius", "11", "--max-radius", "11", "--max-elements", "100"}).code == 3);
  CHECK(run({"nonsense"}).code == 1);
  CHECK(run({"eval", "x0"}).code == 0);
}

TEST_CASE("cli plmap and render") {
  CHECK(run({"plmap", "x1"}).out == "m=0 n=1\nx y slope_exponent\n0 0 -1\n2 1 0\n");
  CHECK(run({"plmap", "x0"}).out == "m=1 n=1\n(no breakpoints)\n");
  CHECK(run({"render", "x1"}).out == "/-\\\n* .\n* .\n");
  CHECK(run({"render", "--dot", "x1"}).out == render_dot(evaluate("x1")));
}

TEST_CASE("cli ball, growth, deadends, iso, convexity") {
  CliResult ball = run({"ball", "--radius", "2", "--verify"});
  CHECK(ball.code == 0);
  CHECK(ball.out.find("radius 2\n") == 0);
  CHECK(ball.out.find("sphere 1 4\n") != std::string::npos);
  CHECK(ball.out.find("verify: 0 mismatches\n") != std::string::npos);

  CliResult dot = run({"ball", "--radius", "2", "--dot"});
  CHECK(dot.out == render_dot(bfs_ball(2)));

  CliResult growth = run({"growth", "--max", "5"});
  CHECK(growth.out.find("5 45 45\n") != std::string::npos);
  CHECK(growth.out.find("recurrence holds for n >= 3\n") != std::string::npos);

  CliResult dead = run({"deadends", "--radius", "7"});
  CHECK(dead.code == 0);
  CHECK(dead.out.find("characterization agrees: yes") != std::string::npos);
  CHECK(dead.out.find("escape length is l+1: yes") != std::string::npos);

  CliResult iso = run({"iso", "--width", "0", "--height", "2"});
  CHECK(iso.out.find("ratio 4/1\n") != std::string::npos);

  CliResult conv = run({"convexity", "--n", "1"});
  CHECK(conv.code == 0);
  CHECK(conv.out.find("in-ball distance 8\n") != std::string::npos);
  CHECK(conv.out.find("direct path exits ball: yes\n") != std::string::npos);
}
