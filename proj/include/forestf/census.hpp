#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "forestf/diagram.hpp"
#include "forestf/metric.hpp"
#include "forestf/word.hpp"

namespace forestf {

struct BallBudget {
  int max_radius = 10;
  std::size_t max_elements = 10'000'000;
};

// Exact distances for every element within the radius, keyed by canonical
// serialization.
struct Ball {
  int radius = 0;
  std::unordered_map<std::string, int> distances;

  bool contains(const std::string& key) const { return distances.count(key) != 0; }
  int distance(const std::string& key) const;
  std::vector<std::size_t> sphere_sizes() const;  // element counts per distance
  std::vector<std::string> sorted_keys() const;
};

// Frontier expansion over the four generator actions with canonical-form
// deduplication. Throws BudgetError when the budget is exceeded.
Ball bfs_ball(int radius, const BallBudget& budget = {});

struct LengthMismatch {
  std::string key;
  int formula;
  int bfs;
};

// Compares the length formula against every BFS distance; expected empty.
std::vector<LengthMismatch> verify_length_formula(const Ball& ball);
std::vector<LengthMismatch> verify_length_formula(const Ball& ball, const WeightTable& table);

// p_n = number of positive elements of length n, enumerated from a BFS ball
// of radius max_len.
std::vector<long long> positive_growth_series(int max_len, const BallBudget& budget = {});
std::vector<long long> positive_growth_series(const Ball& ball);

// Series expansion of (1 - x^2) / (1 - 2x - x^2 + x^3).
std::vector<long long> growth_reference_series(int max_len);

// Smallest k such that p_n = 2 p_{n-1} + p_{n-2} - p_{n-3} holds for every
// n in [k, max]; missing indices count as zero.
int growth_recurrence_crossover(const std::vector<long long>& series);

struct DeadEndReport {
  std::vector<std::pair<int, long long>> counts_by_length;  // (length, count)
  std::vector<std::string> dead_ends;                       // sorted keys
  bool characterization_matches_definition = true;
  bool escape_property_holds = true;
};

// Lists all dead ends in the ball, checking the label characterization
// against the definitional four-neighbor test and the escape property.
DeadEndReport dead_end_census(const Ball& ball);

// Keys of elements from which no product of at most k generators increases
// the length (k-pockets). Empty for k >= 3.
std::vector<std::string> find_k_pockets(const Ball& ball, int k);

struct Rational {
  long long num = 0;
  long long den = 1;

  std::string to_string() const;
};

struct IsoResult {
  Rational ratio;
  long long set_size = 0;
  long long boundary_edges = 0;
};

// |dS|/|S| for S = positive elements of support width <= width whose top
// trees all have height <= height.
IsoResult iso_ratio(int width, int height, const BallBudget& budget = {});

struct ConvexityWitness {
  std::string f_key;
  std::string g_key;  // x0^2 . f
  int length_f = 0;
  int length_g = 0;
  int in_ball_distance = 0;
  std::vector<Gen> path;  // generators applied in order from f to g, inside the ball
  bool direct_path_exits_ball = false;
};

// Searches the (2n+2)-ball for f with length(f) = length(x0^2 f) = 2n+2 and
// in-ball distance between them exactly 4n+4. Throws if no witness exists.
ConvexityWitness convexity_witness(int n, const BallBudget& budget = {});

// Undirected Cayley-graph DOT export with vertices labeled by canonical
// serialization and edges labeled x0/x1, in stable sorted order.
std::string render_dot(const Ball& ball);

}  // namespace forestf
