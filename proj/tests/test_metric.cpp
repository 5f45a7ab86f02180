#include <doctest.h>

#include <random>
#include <set>

#include "forestf/census.hpp"
#include "forestf/errors.hpp"
#include "forestf/metric.hpp"
#include "forestf/word.hpp"
#include "test_util.hpp"

using namespace forestf;
using namespace forestf::testutil;

TEST_CASE("weight table") {
  CHECK(weight(SpaceLabel::L, SpaceLabel::L) == 2);
  CHECK(weight(SpaceLabel::R, SpaceLabel::I) == 0);
  CHECK(weight(SpaceLabel::I, SpaceLabel::N) == 2);
  CHECK(weight(SpaceLabel::L, SpaceLabel::N) == 1);
  CHECK(weight(SpaceLabel::N, SpaceLabel::L) == 1);
  CHECK(weight(SpaceLabel::I, SpaceLabel::I) == 0);
  // symmetric, matching length(f) == length(f^-1)
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      CHECK(default_weight_table()[a][b] == default_weight_table()[b][a]);
}

TEST_CASE("labels of the generators") {
  Labeling x0 = label_spaces(evaluate("x0"));
  REQUIRE(x0.size() == 1);
  CHECK(x0[0].top == SpaceLabel::L);
  CHECK(x0[0].bottom == SpaceLabel::R);

  Labeling x1 = label_spaces(evaluate("x1"));
  REQUIRE(x1.size() == 1);
  CHECK(x1[0].top == SpaceLabel::I);
  CHECK(x1[0].bottom == SpaceLabel::R);

  CHECK(label_spaces(identity()).empty());

  // strongly positive elements only see (N,R), (R,R), (I,R)
  std::mt19937 rng(61);
  for (int i = 0; i < 200; ++i) {
    Word w = random_strongly_positive_word(rng, 10, 8);
    for (const LabeledSpace& s : label_spaces(evaluate(w))) {
      REQUIRE(s.bottom == SpaceLabel::R);
      REQUIRE(s.top != SpaceLabel::L);
    }
  }
}

TEST_CASE("worked length examples") {
  LengthBreakdown a = length(evaluate("x4 x5^2 x4 x2 x3 x1^2"));
  CHECK(a.ell0 == 10);
  CHECK(a.ell1 == 8);
  CHECK(a.total() == 18);

  CHECK(length(evaluate("x7 x3")).total() == 14);
  CHECK(length(evaluate("x6^3 x5 x2^2")).total() == 16);
  CHECK(length(evaluate("x3 x4 x3 x1")).total() == 10);
  CHECK(length(evaluate("x1 x3^3 x6 x7 x10")).total() == 17);

  CHECK(length(evaluate("x0")).total() == 1);
  CHECK(length(evaluate("x0^-1")).total() == 1);
  CHECK(length(evaluate("x1")).total() == 1);
  CHECK(length(evaluate("x1^-1")).total() == 1);
}

TEST_CASE("strongly positive length stats") {
  auto [n, c] = strongly_positive_length_stats(evaluate("x4 x5^2 x4 x2 x3 x1^2"));
  CHECK(n == 5);
  CHECK(c == 8);
  CHECK(2 * n + c == 18);

  auto [n2, c2] = strongly_positive_length_stats(evaluate("x6^3 x5 x2^2"));
  CHECK(2 * n2 + c2 == 16);
  auto [n3, c3] = strongly_positive_length_stats(evaluate("x3 x4 x3 x1"));
  CHECK(2 * n3 + c3 == 10);

  CHECK_THROWS_AS(strongly_positive_length_stats(evaluate("x0")), PreconditionError);

  std::mt19937 rng(67);
  for (int i = 0; i < 200; ++i) {
    ForestDiagram f = evaluate(random_strongly_positive_word(rng, 10, 8));
    auto [nn, cc] = strongly_positive_length_stats(f);
    LengthBreakdown lb = length(f);
    REQUIRE(lb.ell0 == 2 * nn);
    REQUIRE(lb.ell1 == cc);
  }
}

TEST_CASE("predict_delta base cases") {
  CHECK(predict_delta(Gen::x0, identity()) == 1);
  CHECK(predict_delta(Gen::x0_inv, identity()) == 1);
  CHECK(predict_delta(Gen::x1, identity()) == 1);
  CHECK(predict_delta(Gen::x1_inv, identity()) == 1);
  CHECK(predict_delta(Gen::x1_inv, evaluate("x1")) == -1);
  CHECK(predict_delta(Gen::x1, evaluate("x1^-1")) == -1);
  CHECK(predict_delta(Gen::x0_inv, evaluate("x0")) == -1);
}

TEST_CASE("predict_delta matches recomputed lengths on the radius-6 ball") {
  Ball ball = bfs_ball(6);
  for (const std::string& key : ball.sorted_keys()) {
    ForestDiagram f = parse_diagram(key);
    int base = length(f).total();
    for (Gen g : {Gen::x0, Gen::x0_inv, Gen::x1, Gen::x1_inv}) {
      int predicted = predict_delta(g, f);
      int actual = length(apply_generator(g, f)).total() - base;
      REQUIRE(predicted == actual);
      REQUIRE((predicted == 1 || predicted == -1));
    }
  }
}

TEST_CASE("length equals BFS distance on the radius-6 ball") {
  Ball ball = bfs_ball(6);
  for (const auto& [key, dist] : ball.distances)
    REQUIRE(length(parse_diagram(key)).total() == dist);
}

TEST_CASE("length is symmetric under inversion") {
  std::mt19937 rng(71);
  for (int i = 0; i < 300; ++i) {
    ForestDiagram f = random_diagram(rng, 25, 6);
    LengthBreakdown a = length(f);
    LengthBreakdown b = length(invert(f));
    REQUIRE(a.total() == b.total());
    REQUIRE(a.ell0 == b.ell0);
    REQUIRE(a.ell1 == b.ell1);
  }
}

TEST_CASE("minimum-length words") {
  CHECK(minimum_length_word(identity()).empty());
  CHECK(minimum_length_word(evaluate("x7 x3")).size() == 14);

  // The element with exactly one minimum-length word.
  std::string u = "x1^2 x0^-1 x1 x0";
  std::string word = "x0^-3 " + u + " x0 " + u + " x0 " + u + " x0";
  ForestDiagram f = evaluate(word);
  CHECK(format_word(minimum_length_word(f)) ==
        "x0^-3 x1^2 x0^-1 x1 x0^2 x1^2 x0^-1 x1 x0^2 x1^2 x0^-1 x1 x0^2");

  std::mt19937 rng(73);
  for (int i = 0; i < 300; ++i) {
    ForestDiagram g = random_diagram(rng, 20, 6);
    Word w = minimum_length_word(g);
    LengthBreakdown lb = length(g);
    REQUIRE(static_cast<int>(w.size()) == lb.total());
    REQUIRE(evaluate(w) == g);
    int x1_letters = 0;
    for (const Letter& l : w) {
      REQUIRE((l.index == 0 || l.index == 1));
      if (l.index == 1) ++x1_letters;
    }
    REQUIRE(x1_letters == lb.ell1);
  }
}

TEST_CASE("dead ends") {
  CHECK_THROWS_AS(is_dead_end(identity()), PreconditionError);
  CHECK_FALSE(is_dead_end(evaluate("x0")));
  CHECK_FALSE(is_dead_end(evaluate("x1")));
  CHECK_THROWS_AS(dead_end_escape_length(evaluate("x0")), PreconditionError);

  // The four shortest dead ends of F have length 11 (none exist within
  // radius 10; radius-13 census: 4, 8 and 52 dead ends at lengths 11-13).
  for (const char* word : {"x0 x1 x3 x6 x0^-3", "x0 x1 x3 x6^-1 x0^-3",
                           "x0^2 x3 x6 x1^-1 x0^-2", "x0^2 x3 x6^-1 x1^-1 x0^-2"}) {
    ForestDiagram f = evaluate(word);
    CHECK(is_dead_end(f));
    CHECK(length(f).total() == 11);
    for (Gen g : {Gen::x0, Gen::x0_inv, Gen::x1, Gen::x1_inv})
      CHECK(length(apply_generator(g, f)).total() == 10);
    CHECK(dead_end_escape_length(f) == 12);
  }
  ForestDiagram dead = evaluate("x0 x1 x3 x6 x0^-3");
  REQUIRE(serialize(dead) == "(..) *(..) . (..)\n. . . *. . . .");
  int dead_len = 11;

  // a dead end is a 2-pocket but not a 3-pocket
  auto max_length_within = [&](int steps) {
    std::set<std::string> seen{serialize(dead)};
    std::vector<ForestDiagram> frontier{dead};
    int best = dead_len;
    for (int depth = 0; depth < steps; ++depth) {
      std::vector<ForestDiagram> next;
      for (const ForestDiagram& g : frontier) {
        for (Gen s : {Gen::x0, Gen::x0_inv, Gen::x1, Gen::x1_inv}) {
          ForestDiagram h = apply_generator(s, g);
          if (!seen.insert(serialize(h)).second) continue;
          best = std::max(best, length(h).total());
          next.push_back(std::move(h));
        }
      }
      frontier = std::move(next);
    }
    return best;
  };
  CHECK(max_length_within(2) == dead_len);      // 2-pocket
  CHECK(max_length_within(3) == dead_len + 1);  // but not a 3-pocket

  // characterization agrees with the definitional four-neighbor test
  Ball ball = bfs_ball(7);
  for (const auto& [key, dist] : ball.distances) {
    if (dist == 0) continue;
    ForestDiagram f = parse_diagram(key);
    bool definitional = true;
    for (Gen g : {Gen::x0, Gen::x0_inv, Gen::x1, Gen::x1_inv})
      if (length(apply_generator(g, f)).total() >= dist) definitional = false;
    REQUIRE(is_dead_end(f) == definitional);
  }
}

TEST_CASE("labeling dump format") {
  CHECK(format_labeling(evaluate("x0")) == "0: top=L bottom=R weight=1\n");
  CHECK(format_labeling(identity()).empty());
}

TEST_CASE("corrupted weight table is detected") {
  WeightTable bad = default_weight_table();
  bad[static_cast<int>(SpaceLabel::R)][static_cast<int>(SpaceLabel::I)] = 1;
  Ball ball = bfs_ball(5);
  CHECK(verify_length_formula(ball).empty());
  CHECK_FALSE(verify_length_formula(ball, bad).empty());
}
