#pragma once
#include <map>
#include <string>
#include <vector>

#include "gapprob/rational.hpp"

namespace gp {

// Natural variable order: alphabetic prefix, then numeric suffix (t2 < t10).
bool var_less(const std::string& a, const std::string& b);

class MultiPoly {
 public:
  using Exps = std::vector<int>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT: implicit constant
  MultiPoly(long long c) : MultiPoly(Rational(c)) {}  // NOLINT
  static MultiPoly var(const std::string& name, int power = 1);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exps, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  int degree(const std::string& v) const;
  int total_degree() const;
  // weight(v) per variable; returns -1 if not homogeneous
  int weighted_degree(const std::map<std::string, int>& weight, bool* homogeneous = nullptr) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned k) const;
  MultiPoly diff(const std::string& v) const;
  MultiPoly subs(const std::string& v, const MultiPoly& val) const;
  // Coefficient of v^k, as a polynomial in the other variables.
  MultiPoly coeff(const std::string& v, int k) const;
  double eval(const std::map<std::string, double>& values) const;
  Rational eval_exact(const std::map<std::string, Rational>& values) const;

  // Canonical text: ascending total degree, lex-descending within a degree.
  std::string str() const;

  // Build from (vars, terms) directly; zero coefficients dropped.
  static MultiPoly from_terms(std::vector<std::string> vars, const std::map<Exps, Rational>& terms);

 private:
  std::vector<std::string> vars_;
  std::map<Exps, Rational> terms_;

  void compact();
  static std::vector<std::string> merged(const std::vector<std::string>& a, const std::vector<std::string>& b);
  MultiPoly reindexed(const std::vector<std::string>& nv) const;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

// F with F(0)=0 and dF/dv_i = grad_i. Throws std::logic_error if the
// cross-partials of grad disagree.
MultiPoly integrate_gradient(const std::vector<std::string>& vars, const std::vector<MultiPoly>& grad);

}  // namespace gp
