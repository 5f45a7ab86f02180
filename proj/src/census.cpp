#include "forestf/census.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "forestf/errors.hpp"

namespace forestf {

namespace {

constexpr Gen kGens[4] = {Gen::x0, Gen::x0_inv, Gen::x1, Gen::x1_inv};

}  // namespace

int Ball::distance(const std::string& key) const {
  auto it = distances.find(key);
  if (it == distances.end()) throw PreconditionError("element outside the computed ball");
  return it->second;
}

std::vector<std::size_t> Ball::sphere_sizes() const {
  std::vector<std::size_t> sizes(radius + 1, 0);
  for (const auto& [key, dist] : distances) ++sizes[dist];
  return sizes;
}

std::vector<std::string> Ball::sorted_keys() const {
  std::vector<std::string> keys;
  keys.reserve(distances.size());
  for (const auto& [key, dist] : distances) keys.push_back(key);
  std::sort(keys.begin(), keys.end());
  return keys;
}

Ball bfs_ball(int radius, const BallBudget& budget) {
  if (radius < 0) throw PreconditionError("radius must be nonnegative");
  if (radius > budget.max_radius)
    throw BudgetError("radius " + std::to_string(radius) + " exceeds the budget of " +
                      std::to_string(budget.max_radius));
  Ball ball;
  ball.radius = radius;
  std::vector<ForestDiagram> frontier{identity()};
  ball.distances.emplace(serialize(frontier.front()), 0);
  for (int d = 1; d <= radius; ++d) {
    std::vector<ForestDiagram> next;
    for (const ForestDiagram& f : frontier) {
      for (Gen g : kGens) {
        ForestDiagram h = apply_generator(g, f);
        std::string key = serialize(h);
        if (ball.distances.count(key)) continue;
        if (ball.distances.size() >= budget.max_elements)
          throw BudgetError("ball exceeds the element budget of " +
                            std::to_string(budget.max_elements));
        ball.distances.emplace(std::move(key), d);
        next.push_back(std::move(h));
      }
    }
    frontier = std::move(next);
  }
  return ball;
}

std::vector<LengthMismatch> verify_length_formula(const Ball& ball, const WeightTable& table) {
  std::vector<LengthMismatch> mismatches;
  for (const auto& [key, dist] : ball.distances) {
    int formula = length_with_table(parse_diagram(key), table).total();
    if (formula != dist) mismatches.push_back({key, formula, dist});
  }
  std::sort(mismatches.begin(), mismatches.end(),
            [](const LengthMismatch& a, const LengthMismatch& b) { return a.key < b.key; });
  return mismatches;
}

std::vector<LengthMismatch> verify_length_formula(const Ball& ball) {
  return verify_length_formula(ball, default_weight_table());
}

std::vector<long long> positive_growth_series(const Ball& ball) {
  std::vector<long long> counts(ball.radius + 1, 0);
  for (const auto& [key, dist] : ball.distances)
    if (is_positive(parse_diagram(key))) ++counts[dist];
  return counts;
}

std::vector<long long> positive_growth_series(int max_len, const BallBudget& budget) {
  return positive_growth_series(bfs_ball(max_len, budget));
}

std::vector<long long> growth_reference_series(int max_len) {
  // (1 - x^2) / (1 - 2x - x^2 + x^3) by long division.
  std::vector<long long> p(max_len + 1, 0);
  auto num = [](int n) -> long long { return n == 0 ? 1 : (n == 2 ? -1 : 0); };
  auto at = [&p](int n) -> long long { return n < 0 ? 0 : p[n]; };
  for (int n = 0; n <= max_len; ++n)
    p[n] = num(n) + 2 * at(n - 1) + at(n - 2) - at(n - 3);
  return p;
}

int growth_recurrence_crossover(const std::vector<long long>& series) {
  auto at = [&series](int n) -> long long { return n < 0 ? 0 : series[n]; };
  int crossover = 1;
  for (int n = 1; n < static_cast<int>(series.size()); ++n)
    if (series[n] != 2 * at(n - 1) + at(n - 2) - at(n - 3)) crossover = n + 1;
  return crossover;
}

DeadEndReport dead_end_census(const Ball& ball) {
  DeadEndReport report;
  std::unordered_map<int, long long> counts;
  for (const std::string& key : ball.sorted_keys()) {
    int dist = ball.distances.at(key);
    if (dist == 0) continue;
    ForestDiagram f = parse_diagram(key);
    bool characterized = is_dead_end(f);
    bool definitional = true;
    for (Gen g : kGens) {
      if (length(apply_generator(g, f)).total() >= dist) {
        definitional = false;
        break;
      }
    }
    if (characterized != definitional) report.characterization_matches_definition = false;
    if (!characterized) continue;
    report.dead_ends.push_back(key);
    ++counts[dist];
    try {
      if (dead_end_escape_length(f) != dist + 1) report.escape_property_holds = false;
    } catch (const std::logic_error&) {
      report.escape_property_holds = false;
    }
  }
  report.counts_by_length.assign(counts.begin(), counts.end());
  std::sort(report.counts_by_length.begin(), report.counts_by_length.end());
  return report;
}

std::vector<std::string> find_k_pockets(const Ball& ball, int k) {
  std::vector<std::string> pockets;
  for (const std::string& key : ball.sorted_keys()) {
    ForestDiagram f = parse_diagram(key);
    int base = length(f).total();
    // Depth-k neighborhood; products may repeat letters or stall, so only
    // the set of visited elements matters.
    std::unordered_map<std::string, int> seen{{key, 0}};
    std::vector<ForestDiagram> frontier{f};
    bool escapes = false;
    for (int depth = 1; depth <= k && !escapes; ++depth) {
      std::vector<ForestDiagram> next;
      for (const ForestDiagram& g : frontier) {
        for (Gen s : kGens) {
          ForestDiagram h = apply_generator(s, g);
          std::string hkey = serialize(h);
          if (seen.count(hkey)) continue;
          seen.emplace(std::move(hkey), depth);
          if (length(h).total() > base) {
            escapes = true;
            break;
          }
          next.push_back(std::move(h));
        }
        if (escapes) break;
      }
      frontier = std::move(next);
    }
    if (!escapes) pockets.push_back(key);
  }
  return pockets;
}

std::string Rational::to_string() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

// All binary trees of height <= h, smallest first; |result| is 1, 2, 5, 26,
// 677, ... so budgets bind quickly for h >= 4.
std::vector<Tree> trees_of_height_at_most(int h, std::size_t budget) {
  std::vector<Tree> out{Tree::leaf()};
  for (int level = 1; level <= h; ++level) {
    std::vector<Tree> next{Tree::leaf()};
    for (const Tree& a : out)
      for (const Tree& b : out) {
        next.push_back(Tree::caret(a, b));
        if (next.size() > budget)
          throw BudgetError("tree shapes exceed the enumeration budget");
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

IsoResult iso_ratio(int width, int height, const BallBudget& budget) {
  if (width < 0 || height < 0) throw PreconditionError("width and height must be nonnegative");
  std::vector<Tree> shapes = trees_of_height_at_most(height, budget.max_elements);

  // Enumerate S: canonical positive diagrams of support width <= width whose
  // top trees all have height <= height.
  std::vector<ForestDiagram> members;
  std::unordered_map<std::string, int> member_keys;
  std::vector<Tree> stack;
  auto emit = [&](int columns) {
    for (int ptr = 0; ptr < static_cast<int>(stack.size()); ++ptr) {
      bool canonical = columns == 1 || !stack.back().is_leaf() ||
                       ptr + 1 == static_cast<int>(stack.size());
      if (!canonical) continue;
      ForestDiagram d;
      d.top.trees = stack;
      d.top.pointer = ptr;
      d.bottom.trees.assign(columns, Tree::leaf());
      d.bottom.pointer = 0;
      if (members.size() >= budget.max_elements)
        throw BudgetError("iso set exceeds the element budget");
      member_keys.emplace(serialize(d), 1);
      members.push_back(std::move(d));
    }
  };
  auto enumerate = [&](auto&& self, int remaining, int columns) -> void {
    if (remaining == 0) {
      emit(columns);
      return;
    }
    for (const Tree& t : shapes) {
      if (t.leaf_count() > remaining) continue;
      stack.push_back(t);
      self(self, remaining - t.leaf_count(), columns);
      stack.pop_back();
    }
  };
  for (int columns = 1; columns <= width + 1; ++columns) enumerate(enumerate, columns, columns);

  long long boundary = 0;
  for (const ForestDiagram& f : members)
    for (Gen g : kGens)
      if (!member_keys.count(serialize(apply_generator(g, f)))) ++boundary;

  IsoResult result;
  result.set_size = static_cast<long long>(members.size());
  result.boundary_edges = boundary;
  long long g = std::gcd(boundary, result.set_size);
  result.ratio = {boundary / g, result.set_size / g};
  return result;
}

namespace {

// In-ball BFS from `start`; returns per-key (distance, parent key, generator
// from parent). Stops early once `goal` is reached.
struct InBallSearch {
  std::unordered_map<std::string, std::pair<std::string, Gen>> parent;
  std::unordered_map<std::string, int> dist;

  int run(const Ball& ball, const std::string& start, const std::string& goal) {
    dist[start] = 0;
    std::deque<std::string> queue{start};
    while (!queue.empty()) {
      std::string key = std::move(queue.front());
      queue.pop_front();
      int d = dist[key];
      if (key == goal) return d;
      ForestDiagram f = parse_diagram(key);
      for (Gen g : kGens) {
        std::string next = serialize(apply_generator(g, f));
        if (!ball.contains(next) || dist.count(next)) continue;
        dist[next] = d + 1;
        parent[next] = {key, g};
        queue.push_back(std::move(next));
      }
    }
    return -1;  // unreachable inside the ball
  }
};

}  // namespace

ConvexityWitness convexity_witness(int n, const BallBudget& budget) {
  if (n < 0) throw PreconditionError("n must be nonnegative");
  const int radius = 2 * n + 2;
  const int target = 4 * n + 4;
  BallBudget b = budget;
  b.max_radius = std::max(b.max_radius, radius);
  Ball ball = bfs_ball(radius, b);

  for (const std::string& f_key : ball.sorted_keys()) {
    if (ball.distances.at(f_key) != radius) continue;
    ForestDiagram f = parse_diagram(f_key);
    ForestDiagram step = apply_generator(Gen::x0, f);
    if (length(step).total() != radius + 1) continue;  // direct path stays inside
    ForestDiagram g = apply_generator(Gen::x0, step);
    std::string g_key = serialize(g);
    auto it = ball.distances.find(g_key);
    if (it == ball.distances.end() || it->second != radius) continue;

    InBallSearch search;
    int d = search.run(ball, f_key, g_key);
    if (d != target) continue;

    ConvexityWitness w;
    w.f_key = f_key;
    w.g_key = g_key;
    w.length_f = length(f).total();
    w.length_g = length(g).total();
    w.in_ball_distance = d;
    w.direct_path_exits_ball = true;
    for (std::string key = g_key; key != f_key;) {
      auto [prev, gen] = search.parent.at(key);
      w.path.push_back(gen);
      key = prev;
    }
    std::reverse(w.path.begin(), w.path.end());

    // Independent re-checks of all three claims: lengths, path replay, and
    // a fresh reverse search for the in-ball distance.
    if (w.length_f != radius || w.length_g != radius)
      throw std::logic_error("witness lengths failed re-verification");
    ForestDiagram cur = f;
    for (Gen gen : w.path) {
      cur = apply_generator(gen, cur);
      if (!ball.contains(serialize(cur)))
        throw std::logic_error("witness path leaves the ball");
    }
    if (!(cur == g)) throw std::logic_error("witness path does not reach x0^2 f");
    InBallSearch reverse_search;
    if (reverse_search.run(ball, g_key, f_key) != target)
      throw std::logic_error("reverse search distance mismatch");
    return w;
  }
  throw std::logic_error("no convexity witness found at n=" + std::to_string(n));
}

std::string render_dot(const Ball& ball) {
  std::vector<std::string> keys = ball.sorted_keys();
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < keys.size(); ++i) index.emplace(keys[i], i);

  auto escape = [](const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '\n')
        out += "\\n";
      else
        out += c;
    }
    return out;
  };

  std::string dot = "graph ball {\n";
  for (std::size_t i = 0; i < keys.size(); ++i)
    dot += "  v" + std::to_string(i) + " [label=\"" + escape(keys[i]) + "\"];\n";
  for (std::size_t i = 0; i < keys.size(); ++i) {
    ForestDiagram f = parse_diagram(keys[i]);
    for (Gen g : {Gen::x0, Gen::x1}) {
      std::string next = serialize(apply_generator(g, f));
      auto it = index.find(next);
      if (it == index.end()) continue;
      dot += "  v" + std::to_string(i) + " -- v" + std::to_string(it->second) +
             " [label=\"" + (g == Gen::x0 ? "x0" : "x1") + "\"];\n";
    }
  }
  dot += "}\n";
  return dot;
}

}  // namespace forestf
