#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hk/analysis.hpp"
#include "hk/geometry.hpp"
#include "hk/toric_pair.hpp"

namespace hk {

// Brute-force lattice counts. They share no code with the exact engine
// beyond the polytope's inequalities.

struct OracleSample {
  long q = 0;
  long m = 0;
  BigInt count;
  Rat f_value;  // count / q^{d-1}
};

struct ConvergenceReport {
  Rat lambda;
  std::optional<Rat> exact_value;
  std::vector<OracleSample> samples;
  std::vector<Rat> gaps;  // |f - exact| per sample, when exact is known
  // Largest gap over the second half of the samples.
  std::optional<Rat> max_gap_tail;
};

// #(n P ∩ Z^k)
BigInt ehrhart_count(const LatticePolytope& p, long n);

// Lattice points w of m P such that no lattice point u of P has
// w - q u ∈ (m - q) P. For m < q the condition is vacuous.
BigInt slice_count(const LatticePolytope& p, long q, long m);

OracleSample f_n(const LatticePolytope& p, long q, const Rat& lambda);

// Sum over m of slice_count(q, m) / q^d, m = 0 .. q (1 + l).
Rat oracle_ehk(const LatticePolytope& p, long q);

ConvergenceReport convergence_report(const PairSpec& spec, const Rat& lambda,
                                     const std::vector<long>& qs);

// Columns q,m,count,f_value,exact_value,gap.
std::string convergence_csv(const ConvergenceReport& report);

}  // namespace hk
