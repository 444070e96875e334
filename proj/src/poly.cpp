#include "hk/poly.hpp"

#include <algorithm>
#include <utility>

#include "hk/error.hpp"

namespace hk {

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rat& c, std::size_t degree) {
  std::vector<Rat> v(degree + 1, Rat(0));
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat Poly::operator()(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(c));
}

Poly Poly::antiderivative() const {
  std::vector<Rat> c(c_.size() + 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i + 1] = c_[i] / Rat(i + 1);
  return Poly(std::move(c));
}

Rat Poly::integrate(const Rat& a, const Rat& b) const {
  const Poly F = antiderivative();
  return F(b) - F(a);
}

Poly Poly::compose_affine(const Rat& a, const Rat& b) const {
  const Poly inner({a, b});
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  Poly out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Poly basis = Poly::constant(1);
    Rat denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * Poly({-xs[j], Rat(1)});
      denom *= xs[i] - xs[j];
    }
    out += basis * (ys[i] / denom);
  }
  return out;
}

PiecewisePoly::PiecewisePoly(std::vector<Rat> breakpoints, std::vector<Poly> pieces)
    : breaks_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (breaks_.empty() && pieces_.empty()) return;
  if (breaks_.size() != pieces_.size() + 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "piece count must be one less than breakpoint count");
  }
  for (std::size_t i = 1; i < breaks_.size(); ++i) {
    if (!(breaks_[i - 1] < breaks_[i])) {
      throw Error(ErrorCode::kInvalidArgument, "breakpoints must strictly increase");
    }
  }
}

Rat PiecewisePoly::operator()(const Rat& x) const {
  if (pieces_.empty() || x < breaks_.front() || x > breaks_.back()) return 0;
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
  std::size_t i = static_cast<std::size_t>(it - breaks_.begin());
  if (i == breaks_.size()) i = pieces_.size();  // x is the domain end
  return pieces_[i - 1](x);
}

Rat PiecewisePoly::integral() const {
  Rat s = 0;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    s += pieces_[i].integrate(breaks_[i], breaks_[i + 1]);
  }
  return s;
}

bool PiecewisePoly::is_continuous() const {
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    if (pieces_[i - 1](breaks_[i]) != pieces_[i](breaks_[i])) return false;
  }
  return true;
}

int PiecewisePoly::max_degree() const {
  int d = -1;
  for (const auto& p : pieces_) d = std::max(d, p.degree());
  return d;
}

PiecewisePoly PiecewisePoly::merged() const {
  if (pieces_.empty()) return {};
  std::vector<Rat> b{breaks_.front()};
  std::vector<Poly> p{pieces_.front()};
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    if (pieces_[i] == p.back()) continue;
    b.push_back(breaks_[i]);
    p.push_back(pieces_[i]);
  }
  b.push_back(breaks_.back());
  return PiecewisePoly(std::move(b), std::move(p));
}

PiecewisePoly PiecewisePoly::simplified() const {
  std::size_t lo = 0, hi = pieces_.size();
  while (lo < hi && pieces_[lo].is_zero()) ++lo;
  while (hi > lo && pieces_[hi - 1].is_zero()) --hi;
  if (lo == hi) return {};
  return PiecewisePoly(std::vector<Rat>(breaks_.begin() + lo, breaks_.begin() + hi + 1),
                       std::vector<Poly>(pieces_.begin() + lo, pieces_.begin() + hi))
      .merged();
}

PiecewisePoly PiecewisePoly::compose_scale(const Rat& k) const {
  if (k <= 0) throw Error(ErrorCode::kInvalidArgument, "scale factor must be positive");
  std::vector<Rat> b;
  std::vector<Poly> p;
  for (const auto& t : breaks_) b.push_back(t / k);
  for (const auto& q : pieces_) p.push_back(q.compose_affine(0, k));
  return PiecewisePoly(std::move(b), std::move(p));
}

PiecewisePoly PiecewisePoly::shifted(const Rat& s) const {
  std::vector<Rat> b;
  std::vector<Poly> p;
  for (const auto& t : breaks_) b.push_back(t + s);
  for (const auto& q : pieces_) p.push_back(q.compose_affine(-s, 1));
  return PiecewisePoly(std::move(b), std::move(p));
}

PiecewisePoly PiecewisePoly::refined(const std::vector<Rat>& extra) const {
  std::vector<Rat> b = breaks_;
  b.insert(b.end(), extra.begin(), extra.end());
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  if (b.size() < 2) return *this;
  std::vector<Poly> p;
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    const Rat mid = (b[i] + b[i + 1]) / 2;
    if (pieces_.empty() || mid < breaks_.front() || mid > breaks_.back()) {
      p.emplace_back();
      continue;
    }
    const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), mid);
    p.push_back(pieces_[static_cast<std::size_t>(it - breaks_.begin()) - 1]);
  }
  return PiecewisePoly(std::move(b), std::move(p));
}

PiecewisePoly PiecewisePoly::times(const Poly& q) const {
  std::vector<Poly> p;
  for (const auto& x : pieces_) p.push_back(x * q);
  return PiecewisePoly(breaks_, std::move(p));
}

PiecewisePoly pw_combine(const PiecewisePoly& f, const PiecewisePoly& g, PwOp op) {
  const PiecewisePoly a = f.refined(g.breakpoints());
  const PiecewisePoly b = g.refined(f.breakpoints());
  // Both sides now share the union breakpoint set (zero pieces fill gaps).
  if (a.empty() && b.empty()) return {};
  std::vector<Poly> p;
  for (std::size_t i = 0; i < a.pieces().size(); ++i) {
    const Poly& x = a.pieces()[i];
    const Poly& y = b.pieces()[i];
    switch (op) {
      case PwOp::kAdd: p.push_back(x + y); break;
      case PwOp::kSub: p.push_back(x - y); break;
      case PwOp::kMul: p.push_back(x * y); break;
    }
  }
  return PiecewisePoly(a.breakpoints(), std::move(p));
}

bool pw_equal(const PiecewisePoly& f, const PiecewisePoly& g) {
  const PiecewisePoly d = pw_combine(f, g, PwOp::kSub);
  return std::all_of(d.pieces().begin(), d.pieces().end(),
                     [](const Poly& p) { return p.is_zero(); });
}

}  // namespace hk
