#pragma once

#include <string>
#include <vector>

#include "forestf/diagram.hpp"
#include "forestf/dyadic.hpp"

namespace forestf {

struct Breakpoint {
  Dyadic x;
  Dyadic y;
};

inline bool operator==(const Breakpoint& a, const Breakpoint& b) {
  return a.x == b.x && a.y == b.y;
}

// Exact piecewise-linear self-homeomorphism of the line with power-of-two
// slopes, dyadic breakpoints and integer-translation ends: t - m on the far
// left, t - n on the far right. Canonical form merges collinear segments, so
// a breakpoint is stored only where the slope changes; translations store no
// breakpoints and m == n.
class PLMap {
 public:
  PLMap() = default;  // identity

  static PLMap translation(long long m);
  // Canonicalizes (merges collinear segments) and validates the invariants.
  static PLMap make(std::vector<Breakpoint> breakpoints, long long m, long long n);

  const std::vector<Breakpoint>& breakpoints() const { return breakpoints_; }
  long long left_offset() const { return m_; }
  long long right_offset() const { return n_; }

  friend bool operator==(const PLMap& a, const PLMap& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.breakpoints_ == b.breakpoints_;
  }
  friend bool operator!=(const PLMap& a, const PLMap& b) { return !(a == b); }

 private:
  std::vector<Breakpoint> breakpoints_;
  long long m_ = 0;
  long long n_ = 0;
};

// Endpoints of the leaf intervals of a forest: the pointer tree spans [0, 1],
// the tree at signed offset j from the pointer spans [j, j+1], and each caret
// halves its interval.
std::vector<Dyadic> leaf_partition(const Forest& f);

// The map sending the k-th bottom leaf interval linearly onto the k-th top
// leaf interval, extended by integer translations outside the support.
PLMap to_plmap(const ForestDiagram& f);

Dyadic plmap_apply(const PLMap& a, const Dyadic& t);
PLMap plmap_compose(const PLMap& a, const PLMap& b);  // a after b
bool plmap_equal(const PLMap& a, const PLMap& b);

// Throws PreconditionError if any invariant fails: strictly increasing
// breakpoints, power-of-two slopes, integer-translation ends, canonical
// (slope changes at every breakpoint).
void validate_plmap(const PLMap& a);

// Header "m=<m> n=<n>", then one "x y slope_exponent" row per breakpoint
// (slope of the segment to the right).
std::string format_plmap(const PLMap& a);

}  // namespace forestf
