#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace gp {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long n, long long d = 1) { return Rational(Int(n)) / Rational(Int(d)); }

std::string to_string(const Rational& r);
double to_double(const Rational& r);
Rational binomial(const Rational& q, int k);
Int factorial(int k);

}  // namespace gp
