#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "thermores/rational.hpp"
#include "thermores/statespace.hpp"

namespace thermores {

/// One sloped piece of a thermomajorization curve: it rises by `height`
/// (probability mass) at `slope` = p/g (probability per unit Gibbs weight).
struct Segment {
  Rat height;
  Rat slope;

  Rat width() const { return height / slope; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

struct Point {
  Rat x;
  Rat y;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Canonical thermomajorization curve. Segments have strictly decreasing
/// positive slopes and heights summing to 1; the remaining width up to
/// total_width (the partition function) is an implicit flat tail carried by
/// zero-probability levels.
///
/// Curves under `product` form a commutative cancellative monoid with
/// identity {(1, 1)}, Z = 1.
class Curve {
 public:
  /// Merges equal slopes and sorts. Throws Error(InvalidArgument) if a
  /// height or slope is not positive, heights do not sum to 1, or the
  /// sloped part is wider than total_width.
  static Curve from_segments(std::vector<Segment> segments, Rat total_width);

  static Curve identity();

  const std::vector<Segment>& segments() const { return segments_; }
  const Rat& total_width() const { return total_width_; }
  /// Width where the curve first reaches height 1.
  Rat sloped_width() const;

  /// Curve height at x, clamped to [0, 1] outside the sloped part.
  Rat operator()(const Rat& x) const;

  /// (0,0), each elbow, and (Z,1) when there is a flat tail.
  std::vector<Point> breakpoints() const;

  friend bool operator==(const Curve&, const Curve&) = default;

 private:
  Curve(std::vector<Segment> segments, Rat total_width)
      : segments_(std::move(segments)), total_width_(std::move(total_width)) {}

  std::vector<Segment> segments_;
  Rat total_width_;
};

/// Levels in beta-order (descending p/g), equal slopes merged, zero-probability
/// levels folded into the flat tail.
Curve curve_of(const ThermoState& state);

/// Number of distinct positive slopes.
std::size_t num_distinct_slopes(const Curve& curve);

/// a(x) >= b(x) on [0, Z]. Exact: both are piecewise linear, so checking the
/// union of breakpoints suffices. Throws Error(WidthMismatch) when the
/// partition functions differ.
bool majorizes(const Curve& a, const Curve& b);

/// Identical canonical segments and equal total width.
bool coincide(const Curve& a, const Curve& b);

/// Composite-system curve: pairwise (y_a y_b, k_a k_b), equal slopes merged.
Curve product(const Curve& a, const Curve& b);

/// The unique q with product(a, q) == l, or nullopt. Peels the largest
/// remaining slope of l against the largest slope of a, as in the
/// cancellation argument.
std::optional<Curve> divide(const Curve& l, const Curve& a);

}  // namespace thermores
