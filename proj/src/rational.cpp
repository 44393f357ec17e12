#include "gapprob/rational.hpp"

namespace gp {

std::string to_string(const Rational& r) {
  Int n = boost::multiprecision::numerator(r), d = boost::multiprecision::denominator(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational binomial(const Rational& q, int k) {
  Rational b = 1;
  for (int i = 0; i < k; ++i) b = b * (q - i) / (i + 1);
  return b;
}

Int factorial(int k) {
  Int f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace gp
