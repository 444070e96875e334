#include "hk/region.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "hk/arrangement.hpp"
#include "hk/error.hpp"
#include "hk/parallel.hpp"

namespace hk {

namespace {

using Polygon = std::vector<Point>;

constexpr int kMaxBisectionDepth = 16;

Rat cross(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Rat twice_area(const Polygon& p) {
  Rat s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point& a = p[i];
    const Point& b = p[(i + 1) % p.size()];
    s += a[0] * b[1] - a[1] * b[0];
  }
  return s;
}

bool inside_closed(const Polygon& poly, const Point& x) {
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (cross(poly[i], poly[(i + 1) % poly.size()], x) < 0) return false;
  }
  return true;
}

bool inside_open(const Polygon& poly, const Point& x) {
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (cross(poly[i], poly[(i + 1) % poly.size()], x) <= 0) return false;
  }
  return true;
}

struct Box {
  Point lo, hi;
};

Box box_of(const Polygon& p) {
  Box b{p.front(), p.front()};
  for (const auto& v : p) {
    for (std::size_t i = 0; i < v.dim(); ++i) {
      if (v[i] < b.lo[i]) b.lo[i] = v[i];
      if (v[i] > b.hi[i]) b.hi[i] = v[i];
    }
  }
  return b;
}

bool boxes_meet(const Box& a, const Box& b) {
  for (std::size_t i = 0; i < a.lo.dim(); ++i) {
    if (a.hi[i] < b.lo[i] || b.hi[i] < a.lo[i]) return false;
  }
  return true;
}

// Sutherland-Hodgman against a convex counter-clockwise clipper. Returns an
// empty polygon when the intersection has zero area.
Polygon clip(const Polygon& subject, const Polygon& clipper) {
  Polygon out = subject;
  for (std::size_t e = 0; e < clipper.size() && !out.empty(); ++e) {
    const Point& a = clipper[e];
    const Point& b = clipper[(e + 1) % clipper.size()];
    const Polygon in = std::move(out);
    out.clear();
    for (std::size_t i = 0; i < in.size(); ++i) {
      const Point& prev = in[(i + in.size() - 1) % in.size()];
      const Point& cur = in[i];
      const Rat pp = cross(a, b, prev);
      const Rat cp = cross(a, b, cur);
      if (cp >= 0) {
        if (pp < 0) out.push_back(prev + (cur - prev) * (pp / (pp - cp)));
        out.push_back(cur);
      } else if (pp > 0) {
        out.push_back(prev + (cur - prev) * (pp / (pp - cp)));
      }
    }
    Polygon dedup;
    for (auto& p : out) {
      if (dedup.empty() || !(dedup.back() == p)) dedup.push_back(std::move(p));
    }
    while (dedup.size() > 1 && dedup.back() == dedup.front()) dedup.pop_back();
    out = std::move(dedup);
  }
  if (out.size() < 3 || twice_area(out) == 0) return {};
  return out;
}

// Area of the union of convex counter-clockwise polygons, by integrating
// x dy - y dx over the part of each edge that lies on the union boundary.
// An edge shared by two polygons on the same side is kept for the lower
// index only; one shared with opposite orientation is interior.
Rat union_area(const std::vector<Polygon>& polys) {
  std::vector<Box> boxes;
  for (const auto& p : polys) boxes.push_back(box_of(p));
  Rat total = 0;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const Polygon& pi = polys[i];
    for (std::size_t e = 0; e < pi.size(); ++e) {
      const Point& P = pi[e];
      const Point& Q = pi[(e + 1) % pi.size()];
      const Point dir = Q - P;
      const Box edge_box = box_of({P, Q});
      std::vector<std::pair<Rat, Rat>> covered;
      for (std::size_t j = 0; j < polys.size(); ++j) {
        if (j == i || !boxes_meet(edge_box, boxes[j])) continue;
        const Polygon& pj = polys[j];
        Rat lo = 0, hi = 1;
        bool ok = true;
        for (std::size_t f = 0; f < pj.size() && ok; ++f) {
          const Point& A = pj[f];
          const Point& B = pj[(f + 1) % pj.size()];
          const Rat fa = cross(A, B, P);
          const Rat fb = cross(A, B, Q) - fa;
          if (fb == 0) {
            if (fa > 0) continue;
            if (fa < 0) {
              ok = false;
              continue;
            }
            const bool same = dot(B - A, dir) > 0;
            if (same && j > i) ok = false;
            continue;
          }
          const Rat r = -fa / fb;
          if (fb > 0) {
            if (r > lo) lo = r;
          } else if (r < hi) {
            hi = r;
          }
          if (!(lo < hi)) ok = false;
        }
        if (ok) covered.emplace_back(lo, hi);
      }
      std::sort(covered.begin(), covered.end());
      Rat s = 0;
      auto emit = [&](const Rat& s0, const Rat& s1) {
        const Point x0 = P + dir * s0;
        const Point x1 = P + dir * s1;
        total += x0[0] * x1[1] - x0[1] * x1[0];
      };
      for (const auto& [a, b] : covered) {
        if (a > s) emit(s, a);
        if (b > s) s = b;
      }
      if (s < 1) emit(s, 1);
    }
  }
  return total / 2;
}

struct Interval {
  Rat lo, hi;
};

Rat union_length(std::vector<Interval> iv) {
  std::sort(iv.begin(), iv.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  Rat total = 0;
  bool open = false;
  Rat cl, ch;
  for (const auto& x : iv) {
    if (open && x.lo <= ch) {
      if (x.hi > ch) ch = x.hi;
      continue;
    }
    if (open) total += ch - cl;
    cl = x.lo;
    ch = x.hi;
    open = true;
  }
  if (open) total += ch - cl;
  return total;
}

// Subtrahends at t, restricted to the minuend and with positive measure.
std::vector<Polygon> clipped_subtrahends(const SliceFamily& fam, const Polygon& m,
                                         const Rat& t) {
  std::vector<Polygon> out;
  const Box mb = box_of(m);
  for (const auto& s : fam.subtrahends) {
    if (s.scale_at(t) <= 0) continue;
    const Polygon p = s.at(t);
    if (!boxes_meet(box_of(p), mb)) continue;
    Polygon c = clip(p, m);
    if (!c.empty()) out.push_back(std::move(c));
  }
  return out;
}

std::vector<Interval> clipped_intervals(const SliceFamily& fam, const Interval& m, const Rat& t) {
  std::vector<Interval> out;
  for (const auto& s : fam.subtrahends) {
    if (s.scale_at(t) <= 0) continue;
    const auto p = s.at(t);
    Interval x{std::max(p[0][0], m.lo), std::min(p[1][0], m.hi)};
    if (x.lo < x.hi) out.push_back(x);
  }
  return out;
}

void check_family(const SliceFamily& fam) {
  if (fam.dim != 1 && fam.dim != 2) {
    throw Error(ErrorCode::kUnsupportedDimension,
                "slice families exist only in dimension 1 or 2");
  }
}

ConvexPolytope interval_polytope(const Rat& lo, const Rat& hi) {
  return hrep_from_vrep({Point{lo}, Point{hi}});
}

// Primitive integer normal with its first nonzero entry positive.
Point normalized_normal(Point n) {
  BigInt lcm = 1, g = 0;
  for (const auto& c : n.coords()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& c : n.coords()) {
    const BigInt v = c.get_num() * (lcm / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rat factor(lcm, g);
  factor.canonicalize();
  n *= factor;
  if (n[0] < 0 || (n[0] == 0 && n[1] < 0)) n *= Rat(-1);
  return n;
}

// Supporting line n.x = c0 + t c1 of one moving edge.
struct EdgeLine {
  Point n;
  Rat c0, c1;
  std::size_t body;
  std::size_t va, vb;
  std::size_t cls;
};

const MovingBody& body_of(const SliceFamily& fam, std::size_t i) {
  return i == 0 ? fam.minuend : fam.subtrahends[i - 1];
}

Point vertex_at(const MovingBody& b, std::size_t v, const Rat& t) {
  return b.offset0 + b.offset1 * t + b.shape[v] * b.scale_at(t);
}

bool on_segment(const Point& x, const Point& a, const Point& b) {
  if (a == b) return x == a;
  return dot(x - a, b - a) >= 0 && dot(x - b, a - b) >= 0;
}

std::vector<Rat> events_2d(const SliceFamily& fam, const Rat& a, const Rat& b) {
  const std::size_t nbodies = fam.subtrahends.size() + 1;
  std::vector<Box> boxes;
  for (std::size_t i = 0; i < nbodies; ++i) {
    const MovingBody& body = body_of(fam, i);
    Polygon both = body.at(a);
    for (auto& p : body.at(b)) both.push_back(std::move(p));
    boxes.push_back(box_of(both));
  }
  // Bodies that never meet the minuend's sweep cannot matter.
  std::vector<bool> relevant(nbodies, true);
  for (std::size_t i = 1; i < nbodies; ++i) relevant[i] = boxes_meet(boxes[i], boxes[0]);

  std::vector<EdgeLine> lines;
  std::map<Point, std::size_t> classes;
  for (std::size_t i = 0; i < nbodies; ++i) {
    if (!relevant[i]) continue;
    const MovingBody& body = body_of(fam, i);
    const std::size_t k = body.shape.size();
    for (std::size_t v = 0; v < k; ++v) {
      const Point& p = body.shape[v];
      const Point& q = body.shape[(v + 1) % k];
      const Point n = normalized_normal(Point{p[1] - q[1], q[0] - p[0]});
      const Rat np = dot(n, p);
      const std::size_t cls = classes.emplace(n, classes.size()).first->second;
      lines.push_back({n, dot(n, body.offset0) + body.scale0 * np,
                       dot(n, body.offset1) + body.scale1 * np, i, v, (v + 1) % k, cls});
    }
  }

  std::set<Rat> out;
  auto in_range = [&](const Rat& t) { return a < t && t < b; };
  auto seg_at = [&](const EdgeLine& l, const Rat& t, Point* p, Point* q) {
    const MovingBody& body = body_of(fam, l.body);
    *p = vertex_at(body, l.va, t);
    *q = vertex_at(body, l.vb, t);
  };

  for (std::size_t i = 0; i < nbodies; ++i) {
    const MovingBody& body = body_of(fam, i);
    if (relevant[i] && body.scale1 != 0) {
      const Rat t = -body.scale0 / body.scale1;
      if (in_range(t)) out.insert(t);
    }
  }

  // Parallel edges becoming collinear while overlapping.
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t k = i + 1; k < lines.size(); ++k) {
      const EdgeLine& li = lines[i];
      const EdgeLine& lk = lines[k];
      if (li.cls != lk.cls || li.c1 == lk.c1) continue;
      if (li.body != 0 && lk.body != 0 && li.body == lk.body) continue;
      if (!boxes_meet(boxes[li.body], boxes[lk.body])) continue;
      const Rat t = (lk.c0 - li.c0) / (li.c1 - lk.c1);
      if (!in_range(t) || out.count(t)) continue;
      Point p1, q1, p2, q2;
      seg_at(li, t, &p1, &q1);
      seg_at(lk, t, &p2, &q2);
      const Point dir{-li.n[1], li.n[0]};
      Rat a1 = dot(dir, p1), b1 = dot(dir, q1), a2 = dot(dir, p2), b2 = dot(dir, q2);
      if (a1 > b1) std::swap(a1, b1);
      if (a2 > b2) std::swap(a2, b2);
      if (a1 <= b2 && a2 <= b1) out.insert(t);
    }
  }

  // Three edges through one point: a vertex crossing an edge, or two
  // crossings merging.
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const EdgeLine& li = lines[i];
      const EdgeLine& lj = lines[j];
      if (li.cls == lj.cls) continue;
      if (!boxes_meet(boxes[li.body], boxes[lj.body])) continue;
      const Rat det = li.n[0] * lj.n[1] - li.n[1] * lj.n[0];
      const Point x0{(lj.n[1] * li.c0 - li.n[1] * lj.c0) / det,
                     (li.n[0] * lj.c0 - lj.n[0] * li.c0) / det};
      const Point x1{(lj.n[1] * li.c1 - li.n[1] * lj.c1) / det,
                     (li.n[0] * lj.c1 - lj.n[0] * li.c1) / det};
      for (std::size_t k = j + 1; k < lines.size(); ++k) {
        const EdgeLine& lk = lines[k];
        if (lk.cls == li.cls || lk.cls == lj.cls) continue;
        if (!boxes_meet(boxes[lk.body], boxes[li.body]) ||
            !boxes_meet(boxes[lk.body], boxes[lj.body])) {
          continue;
        }
        const Rat beta = dot(lk.n, x1) - lk.c1;
        if (beta == 0) continue;
        const Rat t = (lk.c0 - dot(lk.n, x0)) / beta;
        if (!in_range(t) || out.count(t)) continue;
        const Point x = x0 + x1 * t;
        bool hit = true;
        for (const EdgeLine* l : {&li, &lj, &lk}) {
          Point p, q;
          seg_at(*l, t, &p, &q);
          if (!on_segment(x, p, q)) {
            hit = false;
            break;
          }
        }
        if (hit && fam.minuend.scale_at(t) > 0 && !inside_closed(fam.minuend.at(t), x)) hit = false;
        if (hit) out.insert(t);
      }
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Rat> events_1d(const SliceFamily& fam, const Rat& a, const Rat& b) {
  struct End {
    Rat c0, c1;
  };
  std::vector<End> ends;
  for (std::size_t i = 0; i <= fam.subtrahends.size(); ++i) {
    const MovingBody& body = body_of(fam, i);
    for (const auto& v : body.shape) {
      ends.push_back({body.offset0[0] + body.scale0 * v[0], body.offset1[0] + body.scale1 * v[0]});
    }
  }
  std::set<Rat> out;
  for (std::size_t i = 0; i < ends.size(); ++i) {
    for (std::size_t j = i + 1; j < ends.size(); ++j) {
      if (ends[i].c1 == ends[j].c1) continue;
      const Rat t = (ends[j].c0 - ends[i].c0) / (ends[i].c1 - ends[j].c1);
      if (a < t && t < b) out.insert(t);
    }
  }
  return {out.begin(), out.end()};
}

struct Fit {
  std::vector<Rat> breaks;  // includes both ends
  std::vector<Poly> pieces;
};

Fit fit_interval(const SliceFamily& fam, const Rat& lo, const Rat& hi, int depth) {
  const std::size_t samples = fam.dim + 1;
  const Rat w = hi - lo;
  const Rat denom(static_cast<long>(samples + 1));
  std::vector<Rat> xs, ys;
  for (std::size_t j = 1; j <= samples; ++j) {
    xs.push_back(lo + w * Rat(static_cast<long>(j)) / denom);
    ys.push_back(family_area(fam, xs.back()));
  }
  Poly p = interpolate(xs, ys);
  const Rat check = lo + w * make_rat(static_cast<long>(2 * samples + 1), 2) / denom;
  if (p(check) == family_area(fam, check)) return {{lo, hi}, {std::move(p)}};
  if (depth >= kMaxBisectionDepth) {
    throw Error(ErrorCode::kBreakpointVerificationFailed,
                "area is not polynomial on [" + to_string(lo) + ", " + to_string(hi) +
                    "] after bisection");
  }
  const Rat mid = (lo + hi) / 2;
  Fit left = fit_interval(fam, lo, mid, depth + 1);
  Fit right = fit_interval(fam, mid, hi, depth + 1);
  left.breaks.pop_back();
  left.breaks.insert(left.breaks.end(), right.breaks.begin(), right.breaks.end());
  left.pieces.insert(left.pieces.end(), right.pieces.begin(), right.pieces.end());
  return left;
}

}  // namespace

std::vector<Point> MovingBody::at(const Rat& t) const {
  const Point off = offset0 + offset1 * t;
  const Rat s = scale_at(t);
  std::vector<Point> out;
  for (const auto& v : shape) out.push_back(off + v * s);
  return out;
}

Rat area_of_slice(const RegionSlice& s) {
  Rat total = 0;
  for (const auto& p : s.pieces) total += volume(p);
  return total;
}

std::vector<Point> ccw_polygon(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i - 1]) <= 0) --k;
    hull[k++] = pts[i - 1];
  }
  hull.resize(k - 1);
  return hull;
}

Rat family_area(const SliceFamily& fam, const Rat& t) {
  check_family(fam);
  if (fam.minuend.scale_at(t) <= 0) return 0;
  const auto m = fam.minuend.at(t);
  if (fam.dim == 1) {
    const Interval mi{m[0][0], m[1][0]};
    return (mi.hi - mi.lo) - union_length(clipped_intervals(fam, mi, t));
  }
  return twice_area(m) / 2 - union_area(clipped_subtrahends(fam, m, t));
}

RegionSlice family_slice(const SliceFamily& fam, const Rat& t) {
  check_family(fam);
  RegionSlice out{t, {}};
  if (fam.minuend.scale_at(t) <= 0) return out;
  const auto m = fam.minuend.at(t);
  if (fam.dim == 1) {
    const Interval mi{m[0][0], m[1][0]};
    auto cuts = clipped_intervals(fam, mi, t);
    std::sort(cuts.begin(), cuts.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    Rat pos = mi.lo;
    for (const auto& c : cuts) {
      if (c.lo > pos) out.pieces.push_back(interval_polytope(pos, c.lo));
      if (c.hi > pos) pos = c.hi;
    }
    if (mi.hi > pos) out.pieces.push_back(interval_polytope(pos, mi.hi));
    return out;
  }
  const auto subs = clipped_subtrahends(fam, m, t);
  std::vector<Segment2> segs;
  for (const Polygon* p : {&m}) {
    for (std::size_t i = 0; i < p->size(); ++i) segs.push_back({(*p)[i], (*p)[(i + 1) % p->size()]});
  }
  for (const auto& p : subs) {
    for (std::size_t i = 0; i < p.size(); ++i) segs.push_back({p[i], p[(i + 1) % p.size()]});
  }
  const Arrangement2D arr(std::move(segs));
  for (const auto& f : arr.faces()) {
    if (!inside_open(m, f.rep)) continue;
    const bool removed = std::any_of(subs.begin(), subs.end(),
                                     [&](const Polygon& s) { return inside_open(s, f.rep); });
    if (!removed) out.pieces.push_back(hrep_from_vrep(f.corners));
  }
  return out;
}

std::vector<Rat> family_events(const SliceFamily& fam, const Rat& a, const Rat& b) {
  check_family(fam);
  return fam.dim == 1 ? events_1d(fam, a, b) : events_2d(fam, a, b);
}

PiecewisePoly family_volume_function(const SliceFamily& fam, const Rat& a, const Rat& b) {
  check_family(fam);
  if (!(a < b)) throw Error(ErrorCode::kInvalidArgument, "empty parameter interval");
  std::vector<Rat> cuts{a};
  for (auto& t : family_events(fam, a, b)) cuts.push_back(std::move(t));
  cuts.push_back(b);
  std::vector<Fit> fits(cuts.size() - 1);
  parallel_for(fits.size(), [&](std::size_t i) { fits[i] = fit_interval(fam, cuts[i], cuts[i + 1], 0); });
  std::vector<Rat> breaks{a};
  std::vector<Poly> pieces;
  for (auto& f : fits) {
    breaks.insert(breaks.end(), f.breaks.begin() + 1, f.breaks.end());
    for (auto& p : f.pieces) pieces.push_back(std::move(p));
  }
  return PiecewisePoly(std::move(breaks), std::move(pieces)).merged();
}

namespace {

void require_low_dim(const ToricPair& pair) {
  if (pair.lattice_dim() > 2) {
    throw Error(ErrorCode::kUnsupportedDimension,
                "exact slices need a polytope of dimension 1 or 2, got " +
                    std::to_string(pair.lattice_dim()));
  }
}

std::vector<Point> body_shape(const ConvexPolytope& p) {
  if (p.ambient_dim() == 2) return ccw_polygon(p.vertices());
  return {p.vertices().front(), p.vertices().back()};
}

}  // namespace

SliceFamily hk_family(const ToricPair& pair) {
  require_low_dim(pair);
  const std::size_t n = pair.lattice_dim();
  SliceFamily fam;
  fam.dim = n;
  const auto shape = body_shape(pair.polytope());
  fam.minuend = {shape, Point(n), Point(n), Rat(1), Rat(1)};
  for (const auto& u : pair.lattice_points()) {
    fam.subtrahends.push_back({shape, u, Point(n), Rat(0), Rat(1)});
  }
  return fam;
}

SliceFamily phi_family(const ToricPair& pair, const Rat& lambda_max) {
  require_low_dim(pair);
  if (lambda_max < 0) throw Error(ErrorCode::kInvalidArgument, "lambda must be nonnegative");
  const std::size_t n = pair.lattice_dim();
  const ConvexPolytope& p = pair.polytope();
  SliceFamily fam;
  fam.dim = n;
  const ConvexPolytope cell = unit_cell(Point(n));
  const auto cell_shape = body_shape(cell);
  fam.minuend = {cell_shape, Point(n), Point(n), Rat(1), Rat(0)};
  if (lambda_max == 0) return fam;
  const auto shape = body_shape(p);

  // Candidates from the bounding box of W0 - lambda_max P.
  std::vector<BigInt> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rat mn = p.vertices()[0][i], mx = mn;
    for (const auto& v : p.vertices()) {
      if (v[i] < mn) mn = v[i];
      if (v[i] > mx) mx = v[i];
    }
    lo[i] = ceil(-lambda_max * mx);
    hi[i] = floor(1 - lambda_max * mn);
  }
  const MovingBody probe{shape, Point(n), Point(n), lambda_max, Rat(0)};
  const auto big = probe.at(0);
  Point u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = lo[i];
  while (true) {
    std::vector<Point> moved;
    for (const auto& v : big) moved.push_back(v + u);
    bool meets;
    if (n == 2) {
      meets = !clip(moved, cell_shape).empty();
    } else {
      meets = std::max(moved[0][0], Rat(0)) < std::min(moved[1][0], Rat(1));
    }
    if (meets) fam.subtrahends.push_back({shape, u, Point(n), Rat(0), Rat(1)});
    std::size_t i = n;
    bool done = true;
    while (i > 0) {
      --i;
      if (u[i] < hi[i]) {
        u[i] += 1;
        for (std::size_t j = i + 1; j < n; ++j) u[j] = lo[j];
        done = false;
        break;
      }
    }
    if (done) break;
  }
  return fam;
}

RegionSlice hk_slice(const ToricPair& pair, const Rat& z) {
  require_low_dim(pair);
  if (z < 0) throw Error(ErrorCode::kInvalidArgument, "slice height must be nonnegative");
  if (z <= 1) return {z, {scale(pair.polytope(), z)}};
  RegionSlice s = family_slice(hk_family(pair), z - 1);
  s.level = z;
  return s;
}

RegionSlice phi_slice(const ToricPair& pair, const Rat& lambda) {
  require_low_dim(pair);
  if (lambda < 0) throw Error(ErrorCode::kInvalidArgument, "lambda must be nonnegative");
  return family_slice(phi_family(pair, lambda), lambda);
}

}  // namespace hk
