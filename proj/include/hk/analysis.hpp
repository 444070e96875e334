#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>

#include "hk/geometry.hpp"
#include "hk/poly.hpp"
#include "hk/toric_pair.hpp"

namespace hk {

// A toric pair, or a Segre product of two such specs.
class PairSpec {
 public:
  static PairSpec leaf(ToricPair pair);
  static PairSpec segre(PairSpec a, PairSpec b);

  bool is_segre() const { return !leaf_.has_value(); }
  const ToricPair& pair() const { return *leaf_; }
  const PairSpec& left() const { return *left_; }
  const PairSpec& right() const { return *right_; }

  std::size_t lattice_dim() const;
  // The product polytope for Segre specs.
  ConvexPolytope polytope() const;

 private:
  std::optional<ToricPair> leaf_;
  std::shared_ptr<const PairSpec> left_, right_;
};

// HK density on [0, 1 + l]: Vol z^{d-1} on [0, 1], then the area of the HK
// region slice. Throws kUnsupportedDimension for dim P >= 3.
PiecewisePoly hkd_function(const ToricPair& pair);
Rat e_hk(const ToricPair& pair);

// Least positive integer r such that r P contains a lattice translate of
// the unit cell.
long unit_cell_radius(const ToricPair& pair);

// Unit-cell defect function, trimmed to its support.
PiecewisePoly phi_function(const ToricPair& pair);
// lambda -> phi(k lambda)
PiecewisePoly phi_scaled(const PiecewisePoly& phi, long k);
PiecewisePoly phi_scaled(const ToricPair& pair, long k);

// Vol(P) * integral of phi.
Rat limit_A(const ToricPair& pair);

// phi == max(0, 1 - Vol lambda^n) exactly, n = dim P.
bool is_tiler(const PiecewisePoly& phi, const Rat& vol, std::size_t n);
bool is_tiler(const ToricPair& pair);

// e0^{(2-d)/(d-1)} A - ((d-1)/d) ((d-1)!)^{(2-d)/(d-1)}, in floating point.
double tiling_gap_B(const Rat& e0, const Rat& a, std::size_t d);
// Exact sign of the same quantity.
int tiling_gap_sign(const Rat& e0, const Rat& a, std::size_t d);

// (1 - result) = (1 - f)(1 - g)
PiecewisePoly segre_phi(const PiecewisePoly& f, const PiecewisePoly& g);
// Density of a product from the factor densities, volumes and dimensions.
PiecewisePoly segre_hkd(const PiecewisePoly& hx, const Rat& vol_x, std::size_t nx,
                        const PiecewisePoly& hy, const Rat& vol_y, std::size_t ny);

struct VeroneseExpansion {
  Rat coeff_d;        // e0 / d!
  Rat coeff_d_minus_1;  // A
  Rat e0_scaled;      // k^d e0
  std::optional<Rat> ehk_scaled;  // k e_hk(k P), when dim P <= 2
};
VeroneseExpansion veronese_expansion(const ToricPair& pair, long k);

struct HKReport {
  std::size_t d = 0;
  Rat volume;
  std::optional<PiecewisePoly> hkd;
  std::optional<Rat> e_hk;
  Rat e0;
  BigInt h0;
  PiecewisePoly phi;
  Rat phi_integral;
  Rat limit_A;
  double tiling_gap_B = 0;
  int tiling_gap_sign = 0;
  bool is_tiler = false;

  // "0" for tilers, otherwise a decimal rendering of tiling_gap_B.
  std::string tiling_gap_text() const;
};

HKReport analyze(const PairSpec& spec);

// Per-spec invariants shared by analyze() and the CLI.
PiecewisePoly phi_of(const PairSpec& spec);
std::optional<PiecewisePoly> hkd_of(const PairSpec& spec);

}  // namespace hk
