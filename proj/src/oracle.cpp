#include "hk/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <sstream>

#include "hk/error.hpp"
#include "hk/parallel.hpp"

namespace hk {

namespace {

using i64 = std::int64_t;

constexpr i64 kMagnitudeLimit = i64{1} << 40;

// Integer H-representation a.x >= c of a lattice polytope.
struct IntHRep {
  std::size_t n = 0;
  std::vector<std::vector<i64>> a;
  std::vector<i64> c;
  std::vector<i64> lo, hi;  // bounding box of P
};

IntHRep int_hrep(const LatticePolytope& lp) {
  const ConvexPolytope& p = lp.polytope();
  if (!p.is_full_dimensional()) {
    throw Error(ErrorCode::kDegenerate, "oracle needs a full-dimensional polytope");
  }
  IntHRep h;
  h.n = p.ambient_dim();
  for (const auto& hs : p.halfspaces()) {
    std::vector<i64> row;
    for (const auto& x : hs.normal.coords()) row.push_back(to_int64(x.get_num()));
    h.a.push_back(std::move(row));
    if (!is_integer(hs.offset)) {
      throw Error(ErrorCode::kNonIntegralVertex, "facet offset is not integral");
    }
    h.c.push_back(to_int64(hs.offset.get_num()));
  }
  h.lo.assign(h.n, 0);
  h.hi.assign(h.n, 0);
  for (std::size_t i = 0; i < h.n; ++i) {
    h.lo[i] = h.hi[i] = to_int64(p.vertices()[0][i].get_num());
    for (const auto& v : p.vertices()) {
      const i64 x = to_int64(v[i].get_num());
      h.lo[i] = std::min(h.lo[i], x);
      h.hi[i] = std::max(h.hi[i], x);
    }
  }
  return h;
}

void check_magnitude(const IntHRep& h, long m) {
  for (std::size_t i = 0; i < h.n; ++i) {
    const i64 span = std::max(std::abs(h.lo[i]), std::abs(h.hi[i]));
    if (span > 0 && m > kMagnitudeLimit / span) {
      throw Error(ErrorCode::kInvalidArgument, "oracle degree too large for 64-bit scan");
    }
  }
}

// Calls fn(w, a.w) for every lattice point w of m P.
template <class Fn>
void scan(const IntHRep& h, long m, Fn&& fn) {
  check_magnitude(h, m);
  const std::size_t n = h.n;
  std::vector<i64> w(n), aw(h.a.size(), 0);
  const std::size_t last = n - 1;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == last) {
      // aw holds the contribution of coordinates 0..last-1.
      i64 lo = h.lo[last] * m, hi = h.hi[last] * m;
      for (std::size_t f = 0; f < h.a.size(); ++f) {
        const i64 coef = h.a[f][last];
        const i64 rhs = m * h.c[f] - aw[f];
        if (coef > 0) {
          const i64 b = rhs >= 0 ? (rhs + coef - 1) / coef : -((-rhs) / coef);
          lo = std::max(lo, b);
        } else if (coef < 0) {
          const i64 cc = -coef;  // x <= -rhs / cc
          const i64 r = -rhs;
          const i64 b = r >= 0 ? r / cc : -((-r + cc - 1) / cc);
          hi = std::min(hi, b);
        } else if (aw[f] < m * h.c[f]) {
          return;
        }
      }
      std::vector<i64> full(h.a.size());
      for (i64 x = lo; x <= hi; ++x) {
        w[last] = x;
        for (std::size_t f = 0; f < h.a.size(); ++f) full[f] = aw[f] + h.a[f][last] * x;
        fn(w, full);
      }
      return;
    }
    for (i64 x = h.lo[k] * m; x <= h.hi[k] * m; ++x) {
      w[k] = x;
      for (std::size_t f = 0; f < h.a.size(); ++f) aw[f] += h.a[f][k] * x;
      self(self, k + 1);
      for (std::size_t f = 0; f < h.a.size(); ++f) aw[f] -= h.a[f][k] * x;
    }
  };
  rec(rec, 0);
}

struct FrobeniusTable {
  // au[u][f] = a_f . u for each lattice point u of P.
  std::vector<std::vector<i64>> au;
};

FrobeniusTable frobenius_table(const IntHRep& h) {
  FrobeniusTable t;
  scan(h, 1, [&](const std::vector<i64>&, const std::vector<i64>& aw) { t.au.push_back(aw); });
  return t;
}

i64 count_slice(const IntHRep& h, const FrobeniusTable& t, long q, long m) {
  i64 count = 0;
  if (m < q) {
    scan(h, m, [&](const std::vector<i64>&, const std::vector<i64>&) { ++count; });
    return count;
  }
  const i64 rest = m - q;
  scan(h, m, [&](const std::vector<i64>&, const std::vector<i64>& aw) {
    for (const auto& au : t.au) {
      bool inside = true;
      for (std::size_t f = 0; f < aw.size(); ++f) {
        if (aw[f] - q * au[f] < rest * h.c[f]) {
          inside = false;
          break;
        }
      }
      if (inside) return;
    }
    ++count;
  });
  return count;
}

void require_q(long q) {
  if (q < 1) throw Error(ErrorCode::kInvalidArgument, "q must be a positive integer");
}

}  // namespace

BigInt ehrhart_count(const LatticePolytope& p, long n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "n must be nonnegative");
  const IntHRep h = int_hrep(p);
  i64 count = 0;
  scan(h, n, [&](const std::vector<i64>&, const std::vector<i64>&) { ++count; });
  return BigInt(static_cast<long>(count));
}

BigInt slice_count(const LatticePolytope& p, long q, long m) {
  require_q(q);
  if (m < 0) throw Error(ErrorCode::kInvalidArgument, "m must be nonnegative");
  const IntHRep h = int_hrep(p);
  return BigInt(static_cast<long>(count_slice(h, frobenius_table(h), q, m)));
}

OracleSample f_n(const LatticePolytope& p, long q, const Rat& lambda) {
  require_q(q);
  if (lambda < 0) throw Error(ErrorCode::kInvalidArgument, "lambda must be nonnegative");
  OracleSample s;
  s.q = q;
  s.m = to_int64(floor(Rat(q) * lambda));
  s.count = slice_count(p, q, s.m);
  s.f_value = Rat(s.count) / pow(Rat(q), static_cast<unsigned>(p.dim()));
  return s;
}

Rat oracle_ehk(const LatticePolytope& p, long q) {
  require_q(q);
  const IntHRep h = int_hrep(p);
  const FrobeniusTable t = frobenius_table(h);
  const long l = static_cast<long>(p.polytope().vertices().size());
  const long top = q * (1 + l);
  std::vector<i64> counts(static_cast<std::size_t>(top + 1));
  parallel_for(counts.size(), [&](std::size_t m) {
    counts[m] = count_slice(h, t, q, static_cast<long>(m));
  });
  BigInt total = 0;
  for (const i64 c : counts) total += static_cast<long>(c);
  return Rat(total) / pow(Rat(q), static_cast<unsigned>(p.dim() + 1));
}

ConvergenceReport convergence_report(const PairSpec& spec, const Rat& lambda,
                                     const std::vector<long>& qs) {
  ConvergenceReport r;
  r.lambda = lambda;
  const LatticePolytope lp(spec.polytope());
  const auto hkd = hkd_of(spec);
  if (hkd) r.exact_value = (*hkd)(lambda);
  r.samples.resize(qs.size());
  parallel_for(qs.size(), [&](std::size_t i) { r.samples[i] = f_n(lp, qs[i], lambda); });
  if (r.exact_value) {
    for (const auto& s : r.samples) r.gaps.push_back(abs(s.f_value - *r.exact_value));
    for (std::size_t i = r.gaps.size() / 2; i < r.gaps.size(); ++i) {
      if (!r.max_gap_tail || r.gaps[i] > *r.max_gap_tail) r.max_gap_tail = r.gaps[i];
    }
  }
  return r;
}

std::string convergence_csv(const ConvergenceReport& r) {
  std::ostringstream out;
  out << "q,m,count,f_value,exact_value,gap\n";
  for (std::size_t i = 0; i < r.samples.size(); ++i) {
    const auto& s = r.samples[i];
    out << s.q << ',' << s.m << ',' << s.count.get_str() << ',' << to_string(s.f_value) << ',';
    if (r.exact_value) out << to_string(*r.exact_value) << ',' << to_string(r.gaps[i]);
    else out << ',';
    out << '\n';
  }
  return out.str();
}

}  // namespace hk
