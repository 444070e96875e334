#include "hk/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

#include "hk/error.hpp"
#include "hk/region.hpp"

namespace hk {

PairSpec PairSpec::leaf(ToricPair pair) {
  PairSpec s;
  s.leaf_.emplace(std::move(pair));
  return s;
}

PairSpec PairSpec::segre(PairSpec a, PairSpec b) {
  PairSpec s;
  s.left_ = std::make_shared<const PairSpec>(std::move(a));
  s.right_ = std::make_shared<const PairSpec>(std::move(b));
  return s;
}

std::size_t PairSpec::lattice_dim() const {
  return is_segre() ? left_->lattice_dim() + right_->lattice_dim() : leaf_->lattice_dim();
}

ConvexPolytope PairSpec::polytope() const {
  return is_segre() ? product(left_->polytope(), right_->polytope()) : leaf_->polytope();
}

namespace {

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

// Largest power-of-two fraction of `start` at which the family still has
// positive area, assuming emptiness persists once reached.
template <class AreaAt>
Rat shrink_support(Rat hi, AreaAt&& area_at) {
  while (area_at(hi) != 0) hi *= 2;
  while (area_at(hi / 2) == 0) hi /= 2;
  return hi;
}

}  // namespace

PiecewisePoly hkd_function(const ToricPair& pair) {
  if (pair.lattice_dim() > 2) {
    throw Error(ErrorCode::kUnsupportedDimension,
                "the exact density needs dim P <= 2; use a Segre spec or the oracle");
  }
  const std::size_t n = pair.lattice_dim();
  const Rat vol = volume(pair.polytope());
  const SliceFamily fam = hk_family(pair);
  const Rat hi = shrink_support(Rat(static_cast<long>(pair.l())),
                                [&](const Rat& mu) { return family_area(fam, mu); });
  const PiecewisePoly tail = family_volume_function(fam, 0, hi).shifted(1);
  const PiecewisePoly head({Rat(0), Rat(1)}, {Poly::monomial(vol, n)});
  PiecewisePoly f = pw_combine(head, tail, PwOp::kAdd).simplified();
  if (!f.is_continuous()) {
    throw Error(ErrorCode::kBreakpointVerificationFailed, "density is discontinuous");
  }
  return f;
}

Rat e_hk(const ToricPair& pair) { return hkd_function(pair).integral(); }

long unit_cell_radius(const ToricPair& pair) {
  const std::size_t n = pair.lattice_dim();
  std::vector<Point> corners = unit_cell(Point(n)).vertices();
  for (long r = 1;; ++r) {
    const ConvexPolytope rp = scale(pair.polytope(), Rat(r));
    for (const auto& v : lattice_points(rp)) {
      bool fits = true;
      for (const auto& c : corners) {
        if (!rp.contains(v + c)) {
          fits = false;
          break;
        }
      }
      if (fits) return r;
    }
  }
}

PiecewisePoly phi_function(const ToricPair& pair) {
  if (pair.lattice_dim() > 2) {
    throw Error(ErrorCode::kUnsupportedDimension,
                "the exact phi needs dim P <= 2; use a Segre spec");
  }
  // phi does not see translations of P; moving a vertex to the origin makes
  // lambda P increase with lambda, so the neighbour set for the largest
  // lambda serves the whole range.
  const ToricPair moved = pair.translated(Point(pair.lattice_dim()) - pair.polytope().vertices().front());
  // phi is non-increasing, positive below Vol^{-1/n} and zero from l r on.
  // Doubling up from 1 / ceil(Vol^{1/n}) keeps the neighbour set small.
  const Rat cap(static_cast<long>(pair.l()) * unit_cell_radius(moved));
  const std::size_t n = pair.lattice_dim();
  const Rat vol = volume(pair.polytope());
  BigInt root = 1;
  while (pow(Rat(root), static_cast<unsigned>(n)) < vol) ++root;
  Rat hi = 1 / Rat(root);
  while (hi < cap && family_area(phi_family(moved, hi), hi) != 0) hi = std::min<Rat>(2 * hi, cap);
  return family_volume_function(phi_family(moved, hi), 0, hi).simplified();
}

PiecewisePoly phi_scaled(const PiecewisePoly& phi, long k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be a positive integer");
  return phi.compose_scale(Rat(k));
}

PiecewisePoly phi_scaled(const ToricPair& pair, long k) { return phi_scaled(phi_function(pair), k); }

Rat limit_A(const ToricPair& pair) { return volume(pair.polytope()) * phi_function(pair).integral(); }

bool is_tiler(const PiecewisePoly& phi, const Rat& vol, std::size_t n) {
  Rat root;
  if (!exact_root(1 / vol, static_cast<unsigned>(n), &root)) return false;
  const PiecewisePoly bound({Rat(0), root}, {Poly::constant(1) - Poly::monomial(vol, n)});
  return pw_equal(phi, bound);
}

bool is_tiler(const ToricPair& pair) {
  return is_tiler(phi_function(pair), volume(pair.polytope()), pair.lattice_dim());
}

double tiling_gap_B(const Rat& e0, const Rat& a, std::size_t d) {
  const double m = static_cast<double>(d - 1);
  const double ex = (2.0 - static_cast<double>(d)) / m;
  const double fact = factorial(d - 1).get_d();
  return std::pow(e0.get_d(), ex) * a.get_d() - (m / static_cast<double>(d)) * std::pow(fact, ex);
}

int tiling_gap_sign(const Rat& e0, const Rat& a, std::size_t d) {
  // Both terms are positive; compare their (d-1)-th powers.
  const unsigned m = static_cast<unsigned>(d - 1);
  const Rat lhs = pow(a, m) / pow(e0, m - 1);
  const Rat rhs = pow(make_rat(static_cast<long>(m), static_cast<long>(d)), m) /
                  pow(Rat(factorial(m)), m - 1);
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

PiecewisePoly segre_phi(const PiecewisePoly& f, const PiecewisePoly& g) {
  const PiecewisePoly sum = pw_combine(f, g, PwOp::kAdd);
  return pw_combine(sum, pw_combine(f, g, PwOp::kMul), PwOp::kSub).simplified();
}

PiecewisePoly segre_hkd(const PiecewisePoly& hx, const Rat& vol_x, std::size_t nx,
                        const PiecewisePoly& hy, const Rat& vol_y, std::size_t ny) {
  // Full slices minus the product of the covered parts.
  const PiecewisePoly a = hy.times(Poly::monomial(vol_x, nx));
  const PiecewisePoly b = hx.times(Poly::monomial(vol_y, ny));
  const PiecewisePoly sum = pw_combine(a, b, PwOp::kAdd);
  return pw_combine(sum, pw_combine(hx, hy, PwOp::kMul), PwOp::kSub).simplified();
}

VeroneseExpansion veronese_expansion(const ToricPair& pair, long k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be a positive integer");
  const std::size_t d = pair.d();
  const Rat vol = volume(pair.polytope());
  const Rat e0 = Rat(factorial(d - 1)) * vol;
  VeroneseExpansion out;
  out.coeff_d = e0 / Rat(factorial(d));
  out.coeff_d_minus_1 = limit_A(pair);
  out.e0_scaled = e0 * pow(Rat(k), static_cast<unsigned>(d));
  if (pair.lattice_dim() <= 2) out.ehk_scaled = Rat(k) * e_hk(pair.scaled(k));
  return out;
}

std::string HKReport::tiling_gap_text() const {
  if (is_tiler) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", tiling_gap_B);
  return buf;
}

PiecewisePoly phi_of(const PairSpec& spec) {
  if (!spec.is_segre()) return phi_function(spec.pair());
  return segre_phi(phi_of(spec.left()), phi_of(spec.right()));
}

std::optional<PiecewisePoly> hkd_of(const PairSpec& spec) {
  if (!spec.is_segre()) {
    if (spec.lattice_dim() > 2) return std::nullopt;
    return hkd_function(spec.pair());
  }
  if (spec.lattice_dim() <= 2) {
    return hkd_function(ToricPair(LatticePolytope(spec.polytope())));
  }
  const auto hx = hkd_of(spec.left());
  const auto hy = hkd_of(spec.right());
  if (!hx || !hy) return std::nullopt;
  return segre_hkd(*hx, volume(spec.left().polytope()), spec.left().lattice_dim(), *hy,
                   volume(spec.right().polytope()), spec.right().lattice_dim());
}

HKReport analyze(const PairSpec& spec) {
  HKReport r;
  const ConvexPolytope p = spec.polytope();
  const std::size_t n = spec.lattice_dim();
  r.d = n + 1;
  r.volume = volume(p);
  r.e0 = Rat(factorial(n)) * r.volume;
  r.h0 = static_cast<unsigned long>(lattice_points(p).size());
  r.hkd = hkd_of(spec);
  if (r.hkd) r.e_hk = r.hkd->integral();
  r.phi = phi_of(spec);
  r.phi_integral = r.phi.integral();
  r.limit_A = r.volume * r.phi_integral;
  r.is_tiler = is_tiler(r.phi, r.volume, n);
  r.tiling_gap_sign = r.is_tiler ? 0 : tiling_gap_sign(r.e0, r.limit_A, r.d);
  r.tiling_gap_B = r.is_tiler ? 0.0 : tiling_gap_B(r.e0, r.limit_A, r.d);
  return r;
}

}  // namespace hk
