#include "hk/arrangement.hpp"

#include <algorithm>
#include <utility>

#include "hk/error.hpp"

namespace hk {

namespace {

Rat cross(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// x-coordinate of the common point of two segments, if they meet in a
// single point.
bool crossing_x(const Segment2& s, const Segment2& t, Rat* x) {
  const Rat d1 = cross(s.a, s.b, t.a);
  const Rat d2 = cross(s.a, s.b, t.b);
  const Rat d3 = cross(t.a, t.b, s.a);
  const Rat d4 = cross(t.a, t.b, s.b);
  if (d1 == d2) return false;  // parallel or collinear; endpoints already count
  if ((d1 > 0 && d2 > 0) || (d1 < 0 && d2 < 0)) return false;
  if ((d3 > 0 && d4 > 0) || (d3 < 0 && d4 < 0)) return false;
  const Rat u = d1 / (d1 - d2);
  *x = t.a[0] + u * (t.b[0] - t.a[0]);
  return true;
}

struct Active {
  Rat y0, y1, ymid;
};

}  // namespace

Arrangement2D::Arrangement2D(std::vector<Segment2> segments)
    : segments_(std::move(segments)) {
  if (segments_.empty()) return;
  lo_ = hi_ = segments_.front().a;
  for (const auto& s : segments_) {
    if (s.a.dim() != 2 || s.b.dim() != 2) {
      throw Error(ErrorCode::kDimMismatch, "arrangement segments must be planar");
    }
    for (const Point* p : {&s.a, &s.b}) {
      for (std::size_t i = 0; i < 2; ++i) {
        if ((*p)[i] < lo_[i]) lo_[i] = (*p)[i];
        if ((*p)[i] > hi_[i]) hi_[i] = (*p)[i];
      }
    }
  }
  std::vector<Segment2> all = segments_;
  const Point c01{lo_[0], hi_[1]}, c10{hi_[0], lo_[1]};
  all.push_back({lo_, c10});
  all.push_back({c10, hi_});
  all.push_back({hi_, c01});
  all.push_back({c01, lo_});

  std::vector<Rat> xs;
  for (const auto& s : all) {
    xs.push_back(s.a[0]);
    xs.push_back(s.b[0]);
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      Rat x;
      if (crossing_x(all[i], all[j], &x)) xs.push_back(x);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    const Rat& x0 = xs[k];
    const Rat& x1 = xs[k + 1];
    const Rat xm = (x0 + x1) / 2;
    std::vector<Active> act;
    for (const auto& s : all) {
      if (s.a[0] == s.b[0]) continue;
      const Point& l = s.a[0] < s.b[0] ? s.a : s.b;
      const Point& r = s.a[0] < s.b[0] ? s.b : s.a;
      if (l[0] > x0 || r[0] < x1) continue;
      const Rat slope = (r[1] - l[1]) / (r[0] - l[0]);
      act.push_back({l[1] + (x0 - l[0]) * slope, l[1] + (x1 - l[0]) * slope,
                     l[1] + (xm - l[0]) * slope});
    }
    std::sort(act.begin(), act.end(),
              [](const Active& a, const Active& b) { return a.ymid < b.ymid; });
    for (std::size_t i = 0; i + 1 < act.size(); ++i) {
      const Active& lo = act[i];
      const Active& up = act[i + 1];
      if (lo.ymid == up.ymid) continue;
      Face f;
      const Point p0{x0, lo.y0}, p1{x1, lo.y1}, p2{x1, up.y1}, p3{x0, up.y0};
      for (const Point* p : {&p0, &p1, &p2, &p3}) {
        if (f.corners.empty() || !(f.corners.back() == *p)) f.corners.push_back(*p);
      }
      if (f.corners.size() > 1 && f.corners.back() == f.corners.front()) f.corners.pop_back();
      f.rep = Point{xm, (lo.ymid + up.ymid) / 2};
      f.area = (x1 - x0) * ((up.y0 - lo.y0) + (up.y1 - lo.y1)) / 2;
      faces_.push_back(std::move(f));
    }
  }
}

}  // namespace hk
