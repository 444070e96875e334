#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "hk/rational.hpp"

namespace hk {

// Univariate polynomial with exact coefficients, lowest degree first.
// Trailing zeros are always stripped, so the zero polynomial has no
// coefficients and degree() == -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<Rat> coeffs) : Poly(std::vector<Rat>(coeffs)) {}

  static Poly constant(const Rat& c) { return Poly({c}); }
  static Poly monomial(const Rat& c, std::size_t degree);

  const std::vector<Rat>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }

  Rat operator()(const Rat& x) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rat& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly&, const Poly&) = default;

  // Antiderivative with zero constant term.
  Poly antiderivative() const;
  Rat integrate(const Rat& a, const Rat& b) const;
  // x -> p(a + b x)
  Poly compose_affine(const Rat& a, const Rat& b) const;

 private:
  void trim();
  std::vector<Rat> c_;
};

// Unique polynomial of degree < xs.size() through the given points.
Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

// A function that is polynomial on each interval [t_i, t_{i+1}] and zero
// outside [t_0, t_m]. An empty breakpoint list is the zero function.
class PiecewisePoly {
 public:
  PiecewisePoly() = default;
  // Throws kInvalidArgument unless breakpoints strictly increase and
  // pieces.size() + 1 == breakpoints.size().
  PiecewisePoly(std::vector<Rat> breakpoints, std::vector<Poly> pieces);

  const std::vector<Rat>& breakpoints() const { return breaks_; }
  const std::vector<Poly>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  Rat domain_begin() const { return breaks_.empty() ? Rat(0) : breaks_.front(); }
  Rat domain_end() const { return breaks_.empty() ? Rat(0) : breaks_.back(); }

  // Interior breakpoints take the piece to their right; the domain end
  // takes the last piece.
  Rat operator()(const Rat& x) const;

  Rat integral() const;
  bool is_continuous() const;
  int max_degree() const;

  // Merges neighbours carrying the same polynomial.
  PiecewisePoly merged() const;
  // merged(), then drops zero pieces at either end.
  PiecewisePoly simplified() const;
  // x -> f(k x)
  PiecewisePoly compose_scale(const Rat& k) const;
  // x -> f(x - s)
  PiecewisePoly shifted(const Rat& s) const;
  // Same function on the refined breakpoint set.
  PiecewisePoly refined(const std::vector<Rat>& extra) const;
  PiecewisePoly times(const Poly& p) const;

 private:
  std::vector<Rat> breaks_;
  std::vector<Poly> pieces_;
};

enum class PwOp { kAdd, kSub, kMul };

PiecewisePoly pw_combine(const PiecewisePoly& f, const PiecewisePoly& g, PwOp op);
bool pw_equal(const PiecewisePoly& f, const PiecewisePoly& g);

}  // namespace hk
