#include "cli_app.hpp"

#include <CLI11.hpp>
#include <ostream>

#include "forestf/census.hpp"
#include "forestf/errors.hpp"
#include "forestf/metric.hpp"
#include "forestf/plmap.hpp"
#include "forestf/render.hpp"
#include "forestf/word.hpp"

namespace forestf {

namespace {

BallBudget make_budget(int max_radius, std::size_t max_elements) {
  BallBudget b;
  b.max_radius = max_radius;
  b.max_elements = max_elements;
  return b;
}

void print_ball_summary(const Ball& ball, std::ostream& out) {
  out << "radius " << ball.radius << "\n";
  out << "elements " << ball.distances.size() << "\n";
  std::vector<std::size_t> sizes = ball.sphere_sizes();
  for (std::size_t d = 0; d < sizes.size(); ++d)
    out << "sphere " << d << " " << sizes[d] << "\n";
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact engine for Thompson's group F over {x0, x1}"};
  app.require_subcommand(1);

  std::string word_arg;
  bool explain = false;
  int radius = 10;
  bool verify = false;
  bool dot = false;
  int growth_max = 10;
  int iso_width = 4;
  int iso_height = 2;
  int convexity_n = 1;
  int max_radius = 10;
  std::size_t max_elements = 10'000'000;

  auto add_budget_flags = [&](CLI::App* cmd) {
    cmd->add_option("--max-radius", max_radius, "Radius budget (default 10)");
    cmd->add_option("--max-elements", max_elements, "Stored-element budget (default 10^7)");
  };

  CLI::App* eval_cmd = app.add_subcommand("eval", "Canonical forest diagram of a word");
  eval_cmd->add_option("word", word_arg)->required();

  CLI::App* len_cmd = app.add_subcommand("len", "Word length l = l0 + l1");
  len_cmd->add_option("word", word_arg)->required();
  len_cmd->add_flag("--explain", explain, "Dump the space labels and weights");

  CLI::App* normal_cmd = app.add_subcommand("normal", "Normal form of a word");
  normal_cmd->add_option("word", word_arg)->required();

  CLI::App* anti_cmd = app.add_subcommand("antinormal", "Anti-normal form (strongly positive only)");
  anti_cmd->add_option("word", word_arg)->required();

  CLI::App* minword_cmd = app.add_subcommand("minword", "A minimum-length word");
  minword_cmd->add_option("word", word_arg)->required();

  CLI::App* render_cmd = app.add_subcommand("render", "ASCII art of the forest diagram");
  render_cmd->add_option("word", word_arg)->required();
  render_cmd->add_flag("--dot", dot, "DOT output instead of ASCII");

  CLI::App* plmap_cmd = app.add_subcommand("plmap", "Breakpoint table of the piecewise-linear map");
  plmap_cmd->add_option("word", word_arg)->required();

  CLI::App* ball_cmd = app.add_subcommand("ball", "Breadth-first ball of the Cayley graph");
  ball_cmd->add_option("--radius", radius)->required();
  ball_cmd->add_flag("--verify", verify, "Check the length formula against BFS distances");
  ball_cmd->add_flag("--dot", dot, "DOT export of the ball");
  add_budget_flags(ball_cmd);

  CLI::App* growth_cmd = app.add_subcommand("growth", "Growth series of the positive monoid");
  growth_cmd->add_option("--max", growth_max)->required();
  add_budget_flags(growth_cmd);

  CLI::App* deadends_cmd = app.add_subcommand("deadends", "Dead-end census");
  deadends_cmd->add_option("--radius", radius)->required();
  add_budget_flags(deadends_cmd);

  CLI::App* iso_cmd = app.add_subcommand("iso", "Isoperimetric ratio |dS|/|S| on S_{width,height}");
  iso_cmd->add_option("--width", iso_width)->required();
  iso_cmd->add_option("--height", iso_height)->required();
  add_budget_flags(iso_cmd);

  CLI::App* convexity_cmd = app.add_subcommand("convexity", "Convexity-gap witness search");
  convexity_cmd->add_option("--n", convexity_n)->required();
  add_budget_flags(convexity_cmd);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 1;
  }

  try {
    if (eval_cmd->parsed()) {
      out << serialize(evaluate(word_arg)) << "\n";
    } else if (len_cmd->parsed()) {
      ForestDiagram f = evaluate(word_arg);
      LengthBreakdown lb = length(f);
      out << "l=" << lb.total() << " l0=" << lb.ell0 << " l1=" << lb.ell1 << "\n";
      if (explain) out << format_labeling(f);
    } else if (normal_cmd->parsed()) {
      out << format_word(normal_form(evaluate(word_arg))) << "\n";
    } else if (anti_cmd->parsed()) {
      out << format_word(anti_normal_form(evaluate(word_arg))) << "\n";
    } else if (minword_cmd->parsed()) {
      out << format_word(minimum_length_word(evaluate(word_arg))) << "\n";
    } else if (render_cmd->parsed()) {
      ForestDiagram f = evaluate(word_arg);
      out << (dot ? render_dot(f) : render_ascii(f) + "\n");
    } else if (plmap_cmd->parsed()) {
      out << format_plmap(to_plmap(evaluate(word_arg)));
    } else if (ball_cmd->parsed()) {
      Ball ball = bfs_ball(radius, make_budget(max_radius, max_elements));
      if (dot) {
        out << render_dot(ball);
      } else {
        print_ball_summary(ball, out);
        if (verify) {
          std::vector<LengthMismatch> mismatches = verify_length_formula(ball);
          out << "verify: " << mismatches.size() << " mismatches\n";
          for (const LengthMismatch& m : mismatches) {
            out << "mismatch formula=" << m.formula << " bfs=" << m.bfs << "\n"
                << m.key << "\n";
          }
          if (!mismatches.empty()) return 4;
        }
      }
    } else if (growth_cmd->parsed()) {
      std::vector<long long> enumerated =
          positive_growth_series(growth_max, make_budget(std::max(max_radius, growth_max), max_elements));
      std::vector<long long> reference = growth_reference_series(growth_max);
      out << "n enumerated reference\n";
      for (int n = 0; n <= growth_max; ++n)
        out << n << " " << enumerated[n] << " " << reference[n] << "\n";
      out << "recurrence holds for n >= " << growth_recurrence_crossover(enumerated) << "\n";
    } else if (deadends_cmd->parsed()) {
      Ball ball = bfs_ball(radius, make_budget(max_radius, max_elements));
      DeadEndReport report = dead_end_census(ball);
      out << "length count\n";
      for (const auto& [len, count] : report.counts_by_length)
        out << len << " " << count << "\n";
      out << "total " << report.dead_ends.size() << "\n";
      out << "characterization agrees: "
          << (report.characterization_matches_definition ? "yes" : "no") << "\n";
      out << "escape length is l+1: " << (report.escape_property_holds ? "yes" : "no") << "\n";
    } else if (iso_cmd->parsed()) {
      IsoResult r = iso_ratio(iso_width, iso_height, make_budget(max_radius, max_elements));
      out << "set " << r.set_size << "\n";
      out << "boundary " << r.boundary_edges << "\n";
      out << "ratio " << r.ratio.to_string() << "\n";
    } else if (convexity_cmd->parsed()) {
      ConvexityWitness w =
          convexity_witness(convexity_n, make_budget(max_radius, max_elements));
      out << "witness\n" << w.f_key << "\n";
      out << "length " << w.length_f << "\n";
      out << "x0^2 witness length " << w.length_g << "\n";
      out << "in-ball distance " << w.in_ball_distance << "\n";
      out << "path";
      for (Gen g : w.path) out << " " << gen_name(g);
      out << "\n";
      out << "direct path exits ball: " << (w.direct_path_exits_ball ? "yes" : "no") << "\n";
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace forestf
