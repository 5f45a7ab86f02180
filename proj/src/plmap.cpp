#include "forestf/plmap.hpp"

#include <algorithm>
#include <optional>

#include "forestf/errors.hpp"

namespace forestf {

namespace {

// Slope of the segment from a to b as an exponent of two, or nullopt when it
// is not an exact power of two: dy/dx is a power of two iff the odd parts of
// the numerators agree.
std::optional<int> slope_exponent(const Breakpoint& a, const Breakpoint& b) {
  Dyadic dx = b.x - a.x;
  Dyadic dy = b.y - a.y;
  if (dx.numerator() <= 0 || dy.numerator() <= 0) return std::nullopt;
  const BigInt& nx = dx.numerator();
  const BigInt& ny = dy.numerator();
  int vx = static_cast<int>(boost::multiprecision::lsb(nx));
  int vy = static_cast<int>(boost::multiprecision::lsb(ny));
  if ((nx >> vx) != (ny >> vy)) return std::nullopt;
  return (vy - dy.exponent()) - (vx - dx.exponent());
}

}  // namespace

PLMap PLMap::translation(long long m) {
  PLMap p;
  p.m_ = p.n_ = m;
  return p;
}

PLMap PLMap::make(std::vector<Breakpoint> breakpoints, long long m, long long n) {
  // Treat the end translations as slope-1 segments and drop breakpoints
  // where the slope does not change.
  std::vector<Breakpoint> canonical;
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    std::optional<int> left, right;
    if (i == 0) {
      left = 0;  // t - m
      if (breakpoints[i].y != breakpoints[i].x - Dyadic(m))
        throw PreconditionError("left end is not the stated translation");
    } else {
      left = slope_exponent(breakpoints[i - 1], breakpoints[i]);
    }
    if (i + 1 == breakpoints.size()) {
      right = 0;  // t - n
      if (breakpoints[i].y != breakpoints[i].x - Dyadic(n))
        throw PreconditionError("right end is not the stated translation");
    } else {
      right = slope_exponent(breakpoints[i], breakpoints[i + 1]);
    }
    if (!left || !right) throw PreconditionError("segment slope is not a power of two");
    if (*left == *right) continue;  // collinear: the segment continues through this point
    canonical.push_back(breakpoints[i]);
  }
  if (canonical.empty() && m != n)
    throw PreconditionError("offsets differ but the map has no breakpoints");
  PLMap p;
  p.breakpoints_ = std::move(canonical);
  p.m_ = m;
  p.n_ = n;
  validate_plmap(p);
  return p;
}

std::vector<Dyadic> leaf_partition(const Forest& f) {
  std::vector<Dyadic> points;
  points.push_back(Dyadic(-f.pointer));

  struct Rec {
    std::vector<Dyadic>& points;
    void subdivide(const Tree& t, const Dyadic& lo, const Dyadic& hi) {
      if (t.is_leaf()) {
        points.push_back(hi);
        return;
      }
      Dyadic mid = (lo + hi).times_pow2(-1);
      subdivide(t.left(), lo, mid);
      subdivide(t.right(), mid, hi);
    }
  } rec{points};

  for (int i = 0; i < f.tree_count(); ++i)
    rec.subdivide(f.trees[i], Dyadic(i - f.pointer), Dyadic(i - f.pointer + 1));
  return points;
}

PLMap to_plmap(const ForestDiagram& f) {
  std::vector<Dyadic> domain = leaf_partition(f.bottom);
  std::vector<Dyadic> range = leaf_partition(f.top);
  std::vector<Breakpoint> bps;
  bps.reserve(domain.size());
  for (std::size_t k = 0; k < domain.size(); ++k) bps.push_back({domain[k], range[k]});
  long long m = f.top.pointer - f.bottom.pointer;
  long long n = (f.bottom.tree_count() - f.bottom.pointer) -
                (f.top.tree_count() - f.top.pointer);
  return PLMap::make(std::move(bps), m, n);
}

Dyadic plmap_apply(const PLMap& a, const Dyadic& t) {
  const auto& bps = a.breakpoints();
  if (bps.empty() || t <= bps.front().x) return t - Dyadic(a.left_offset());
  if (t >= bps.back().x) return t - Dyadic(a.right_offset());
  std::size_t i = 0;
  while (i + 1 < bps.size() && bps[i + 1].x < t) ++i;
  auto k = slope_exponent(bps[i], bps[i + 1]);
  return bps[i].y + (t - bps[i].x).times_pow2(*k);
}

namespace {

// Exact preimage under b (b is strictly increasing with power-of-two slopes).
Dyadic inverse_apply(const PLMap& b, const Dyadic& y) {
  const auto& bps = b.breakpoints();
  if (bps.empty() || y <= bps.front().y) return y + Dyadic(b.left_offset());
  if (y >= bps.back().y) return y + Dyadic(b.right_offset());
  std::size_t i = 0;
  while (i + 1 < bps.size() && bps[i + 1].y < y) ++i;
  auto k = slope_exponent(bps[i], bps[i + 1]);
  return bps[i].x + (y - bps[i].y).times_pow2(-*k);
}

}  // namespace

PLMap plmap_compose(const PLMap& a, const PLMap& b) {
  std::vector<Dyadic> xs;
  for (const Breakpoint& bp : b.breakpoints()) xs.push_back(bp.x);
  for (const Breakpoint& bp : a.breakpoints()) xs.push_back(inverse_apply(b, bp.x));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<Breakpoint> bps;
  bps.reserve(xs.size());
  for (const Dyadic& x : xs) bps.push_back({x, plmap_apply(a, plmap_apply(b, x))});
  return PLMap::make(std::move(bps), a.left_offset() + b.left_offset(),
                     a.right_offset() + b.right_offset());
}

bool plmap_equal(const PLMap& a, const PLMap& b) { return a == b; }

void validate_plmap(const PLMap& a) {
  const auto& bps = a.breakpoints();
  if (bps.empty()) {
    if (a.left_offset() != a.right_offset())
      throw PreconditionError("translation with mismatched offsets");
    return;
  }
  if (bps.front().y != bps.front().x - Dyadic(a.left_offset()))
    throw PreconditionError("left end is not the stated translation");
  if (bps.back().y != bps.back().x - Dyadic(a.right_offset()))
    throw PreconditionError("right end is not the stated translation");
  int prev_slope = 0;  // slope exponent of t - m
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    if (!(bps[i].x < bps[i + 1].x) || !(bps[i].y < bps[i + 1].y))
      throw PreconditionError("breakpoints are not strictly increasing");
    auto k = slope_exponent(bps[i], bps[i + 1]);
    if (!k) throw PreconditionError("segment slope is not a power of two");
    if (*k == prev_slope) throw PreconditionError("collinear breakpoint is not canonical");
    prev_slope = *k;
  }
  if (prev_slope == 0 && bps.size() > 1)
    throw PreconditionError("collinear breakpoint is not canonical");
  if (bps.size() == 1)
    throw PreconditionError("a single breakpoint cannot change the slope");
}

std::string format_plmap(const PLMap& a) {
  std::string out = "m=" + std::to_string(a.left_offset()) +
                    " n=" + std::to_string(a.right_offset()) + "\n";
  const auto& bps = a.breakpoints();
  if (bps.empty()) {
    out += "(no breakpoints)\n";
    return out;
  }
  out += "x y slope_exponent\n";
  for (std::size_t i = 0; i < bps.size(); ++i) {
    int slope = 0;
    if (i + 1 < bps.size()) slope = *slope_exponent(bps[i], bps[i + 1]);
    out += bps[i].x.to_string() + " " + bps[i].y.to_string() + " " +
           std::to_string(slope) + "\n";
  }
  return out;
}

}  // namespace forestf
