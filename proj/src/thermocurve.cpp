#include "thermores/thermocurve.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "thermores/errors.hpp"

namespace thermores {
namespace {

using SlopeMap = std::map<Rat, Rat, std::greater<>>;  // slope -> accumulated height

std::vector<Segment> to_segments(const SlopeMap& merged) {
  std::vector<Segment> out;
  out.reserve(merged.size());
  for (const auto& [slope, height] : merged) out.push_back({height, slope});
  return out;
}

}  // namespace

Curve Curve::from_segments(std::vector<Segment> segments, Rat total_width) {
  SlopeMap merged;
  Rat total_height;
  Rat width;
  for (auto& s : segments) {
    if (s.height.sign() <= 0 || s.slope.sign() <= 0) {
      throw Error(ErrorCode::InvalidArgument, "segment heights and slopes must be positive");
    }
    total_height += s.height;
    width += s.width();
    merged[s.slope] += s.height;
  }
  if (total_height != Rat(1)) {
    throw Error(ErrorCode::InvalidArgument, "segment heights sum to " + total_height.str());
  }
  if (width > total_width) {
    throw Error(ErrorCode::InvalidArgument,
                "sloped width " + width.str() + " exceeds total width " + total_width.str());
  }
  return Curve(to_segments(merged), std::move(total_width));
}

Curve Curve::identity() { return Curve({{Rat(1), Rat(1)}}, Rat(1)); }

Rat Curve::sloped_width() const {
  Rat w;
  for (const auto& s : segments_) w += s.width();
  return w;
}

Rat Curve::operator()(const Rat& x) const {
  if (x.sign() <= 0) return Rat(0);
  Rat x0;
  Rat y0;
  for (const auto& s : segments_) {
    const Rat x1 = x0 + s.width();
    if (x <= x1) return y0 + s.slope * (x - x0);
    x0 = x1;
    y0 += s.height;
  }
  return Rat(1);
}

std::vector<Point> Curve::breakpoints() const {
  std::vector<Point> pts;
  pts.reserve(segments_.size() + 2);
  pts.push_back({Rat(0), Rat(0)});
  Rat x;
  Rat y;
  for (const auto& s : segments_) {
    x += s.width();
    y += s.height;
    pts.push_back({x, y});
  }
  if (x < total_width_) pts.push_back({total_width_, Rat(1)});
  return pts;
}

Curve curve_of(const ThermoState& state) {
  std::vector<Segment> segments;
  segments.reserve(state.dimension());
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    const Rat& p = state.probs()[i];
    if (p.is_zero()) continue;
    segments.push_back({p, p / state.weights()[i]});
  }
  return Curve::from_segments(std::move(segments), state.partition_function());
}

std::size_t num_distinct_slopes(const Curve& curve) { return curve.segments().size(); }

bool majorizes(const Curve& a, const Curve& b) {
  if (a.total_width() != b.total_width()) {
    throw Error(ErrorCode::WidthMismatch, "cannot compare curves of total width " +
                                              a.total_width().str() + " and " +
                                              b.total_width().str());
  }
  for (const Curve* c : {&a, &b}) {
    for (const auto& pt : c->breakpoints()) {
      if (a(pt.x) < b(pt.x)) return false;
    }
  }
  return true;
}

bool coincide(const Curve& a, const Curve& b) { return a == b; }

Curve product(const Curve& a, const Curve& b) {
  SlopeMap merged;
  for (const auto& sa : a.segments()) {
    for (const auto& sb : b.segments()) merged[sa.slope * sb.slope] += sa.height * sb.height;
  }
  return Curve::from_segments(to_segments(merged), a.total_width() * b.total_width());
}

std::optional<Curve> divide(const Curve& l, const Curve& a) {
  const Segment& lead = a.segments().front();
  SlopeMap remaining;
  for (const auto& s : l.segments()) remaining.emplace(s.slope, s.height);

  std::vector<Segment> quotient;
  while (!remaining.empty()) {
    // The steepest remaining piece of l can only come from a's steepest piece.
    const auto top = remaining.begin();
    const Segment q{top->second / lead.height, top->first / lead.slope};
    for (const auto& sa : a.segments()) {
      const Rat slope = sa.slope * q.slope;
      auto it = remaining.find(slope);
      if (it == remaining.end()) return std::nullopt;
      it->second -= sa.height * q.height;
      if (it->second.sign() < 0) return std::nullopt;
      if (it->second.is_zero()) remaining.erase(it);
    }
    quotient.push_back(q);
  }

  const Rat width = l.total_width() / a.total_width();
  Rat height;
  Rat sloped;
  for (const auto& q : quotient) {
    height += q.height;
    sloped += q.width();
  }
  if (height != Rat(1) || sloped > width) return std::nullopt;
  Curve q = Curve::from_segments(std::move(quotient), width);
  if (!(product(a, q) == l)) return std::nullopt;
  return q;
}

}  // namespace thermores
