#pragma once
#include <climits>
#include <map>
#include <string>

#include "gapprob/multipoly.hpp"

namespace gp {

// Truncated series sum_k c_k x^{k/ram} with coefficients in MultiPoly.
// Coefficients with k >= prec are exact; everything below prec is unknown.
// prec == kExact marks a series known exactly (finitely many terms).
class PuiseuxSeries {
 public:
  static constexpr int kExact = INT_MIN / 4;

  PuiseuxSeries(std::string var = "x", int ram = 1, int prec = kExact);
  static PuiseuxSeries from_poly(const MultiPoly& p, const std::string& var, int prec = kExact);
  static PuiseuxSeries monomial(const std::string& var, int ram, int k, const MultiPoly& c, int prec = kExact);

  const std::string& var() const { return var_; }
  int ram() const { return ram_; }
  int prec() const { return prec_; }
  bool exact() const { return prec_ == kExact; }
  bool is_zero() const { return c_.empty(); }
  const std::map<int, MultiPoly>& coeffs() const { return c_; }
  // Highest index with nonzero coefficient; throws on the zero series.
  int lead() const;
  // Coefficient of x^{k/ram}; throws if k is below the known window.
  MultiPoly coeff(int k) const;
  // Coefficient of x^e for rational e.
  MultiPoly coeff_at(const Rational& e) const;

  PuiseuxSeries with_ram(int r) const;
  PuiseuxSeries truncated(int prec) const;
  // Multiply by x^{k/ram}.
  PuiseuxSeries shifted(int k) const;

  PuiseuxSeries operator-() const;
  friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }
  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator*(const MultiPoly& c, const PuiseuxSeries& s);

  // s^q by the binomial series; leading coefficient must be 1. The result is
  // additionally cut at index `floor` of its own ramification.
  PuiseuxSeries pow(const Rational& q, int floor = kExact) const;
  // Terms with nonnegative integer exponent, as a polynomial in var.
  MultiPoly polynomial_part() const;

  std::string str() const;

 private:
  std::string var_;
  int ram_;
  int prec_;
  std::map<int, MultiPoly> c_;
  void drop_below();
};

// Coefficient of var^{-1}.
MultiPoly residue(const PuiseuxSeries& s);

// Evaluate P(var_of_P = s) for a polynomial P in `pvar`.
PuiseuxSeries compose(const MultiPoly& P, const std::string& pvar, const PuiseuxSeries& s);

// Solve w = V'(u) for u as a series in w^{1/p}, known down to index kmin
// (exponent kmin/p). V' must be monic of degree p in `u`.
PuiseuxSeries puiseux_revert(const MultiPoly& Vprime, const std::string& u, int kmin, const std::string& w = "w");

}  // namespace gp
