#include <doctest.h>

#include "gapprob/algebra.hpp"

using namespace gp;

namespace {
MultiPoly t(int i) { return MultiPoly::var(tvar(i)); }
MultiPoly q(long a, long b = 1) { return MultiPoly(rat(a, b)); }
}  // namespace

TEST_CASE("rational printing") {
  CHECK(to_string(rat(6, -4)) == "-3/2");
  CHECK(to_string(rat(4, 2)) == "2");
  CHECK(binomial(rat(3, 2), 2) == rat(3, 8));
}

TEST_CASE("multipoly canonical text") {
  MultiPoly p = q(-1, 3) * t(1).pow(2) * t(2) - q(2, 27) * t(2).pow(4);
  CHECK(p.str() == "-1/3*t1^2*t2 - 2/27*t2^4");
  CHECK(MultiPoly().str() == "0");
  CHECK((t(1) - t(1)).is_zero());
  CHECK((q(1) + t(10) + t(2)).str() == "1 + t2 + t10");
  CHECK(var_less("t2", "t10"));
}

TEST_CASE("ring axioms on sample polynomials") {
  MultiPoly a = q(3, 2) * t(1) * t(2) + q(-1, 5) * t(3).pow(2) + 7;
  MultiPoly b = t(1) - q(2, 3) * t(2).pow(3);
  MultiPoly c = q(1, 7) * t(3) + t(1).pow(2);
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * (b + c) == a * b + a * c);
  CHECK(a + b == b + a);
  CHECK((a * b).diff("t1") == a.diff("t1") * b + a * b.diff("t1"));
  CHECK(a.subs("t1", b).eval({{"t1", 0.5}, {"t2", 0.25}, {"t3", -1.0}}) ==
        doctest::Approx(a.eval({{"t1", b.eval({{"t1", 0.5}, {"t2", 0.25}})}, {"t2", 0.25}, {"t3", -1.0}})));
}

TEST_CASE("schur polynomials") {
  auto p = schur_polynomials(0, 3);
  REQUIRE(p.size() == 1);
  CHECK(p[0] == MultiPoly(1));
  p = schur_polynomials(2, 2);
  CHECK(p[1] == t(1));
  CHECK(p[2] == t(2) + q(1, 2) * t(1).pow(2));
  p = schur_polynomials(8, 8);
  for (int l = 0; l <= 8; ++l) {
    MultiPoly at = p[l];
    for (int i = 2; i <= 8; ++i) at = at.subs(tvar(i), MultiPoly());
    CHECK(at == MultiPoly(Rational(1) / Rational(factorial(l))) * t(1).pow(l));
  }
}

TEST_CASE("schur generating function") {
  // exp(sum t_i z^i) truncated at z^6, by direct multiplication of exp-series
  const int N = 6;
  MultiPoly z = MultiPoly::var("z");
  MultiPoly X;
  for (int i = 1; i <= N; ++i) X += t(i) * z.pow(i);
  MultiPoly e = 1, term = 1;
  auto trunc = [&](const MultiPoly& m) {
    MultiPoly r;
    for (int k = 0; k <= N; ++k) r += m.coeff("z", k) * z.pow(k);
    return r;
  };
  for (int k = 1; k <= N; ++k) {
    term = trunc(term * X) * q(1, k);
    e += term;
  }
  auto p = schur_polynomials(N, N);
  MultiPoly g;
  for (int l = 0; l <= N; ++l) g += p[l] * z.pow(l);
  CHECK(g == e);
}

TEST_CASE("puiseux pow") {
  PuiseuxSeries u2 = PuiseuxSeries::from_poly(MultiPoly::var("u", 2), "u");
  auto r = u2.pow(rat(1, 2));
  CHECK(r.coeffs().size() == 1);
  CHECK(r.coeff_at(1) == MultiPoly(1));

  PuiseuxSeries s = PuiseuxSeries::from_poly(MultiPoly::var("u", 2) - t(1), "u");
  auto p32 = s.pow(rat(3, 2), -3);
  CHECK(p32.coeff(3) == MultiPoly(1));
  CHECK(p32.coeff(2).is_zero());
  CHECK(p32.coeff(1) == q(-3, 2) * t(1));
  CHECK(p32.coeff(-1) == q(3, 8) * t(1).pow(2));
  CHECK(residue(p32) == q(3, 8) * t(1).pow(2));
  CHECK_THROWS(p32.coeff(-4));

  MultiPoly v3 = MultiPoly::var("u", 3) - q(2) * t(2) * MultiPoly::var("u") - t(1);
  auto p23 = PuiseuxSeries::from_poly(v3, "u").pow(rat(2, 3), -2);
  CHECK(p23.polynomial_part() == MultiPoly::var("u", 2) - q(4, 3) * t(2));

  CHECK_THROWS(PuiseuxSeries::from_poly(q(2) * MultiPoly::var("u", 2), "u").pow(rat(1, 2), -2));
}

TEST_CASE("puiseux pow round trip") {
  MultiPoly v = MultiPoly::var("u", 4) + q(1, 3) * t(1) * MultiPoly::var("u", 2) - q(5) * MultiPoly::var("u") + t(2);
  PuiseuxSeries s = PuiseuxSeries::from_poly(v, "u");
  auto a = s.pow(rat(3, 4), -12);
  auto back = a.pow(rat(4, 3), -8);
  for (int k = back.prec(); k <= 4; ++k) CHECK(back.coeff(k) == PuiseuxSeries(s).truncated(-8).coeff(k));
}

TEST_CASE("residue") {
  CHECK(residue(PuiseuxSeries::monomial("u", 1, -1, MultiPoly(1))) == MultiPoly(1));
  CHECK(residue(PuiseuxSeries::from_poly(MultiPoly::var("u", 3), "u")).is_zero());
  CHECK_THROWS(residue(PuiseuxSeries::monomial("u", 1, 2, MultiPoly(1), 0)));
}

TEST_CASE("puiseux revert") {
  auto u = puiseux_revert(MultiPoly::var("u", 2), "u", -3);
  CHECK(u.coeff(1) == MultiPoly(1));
  CHECK(u.coeff(-1).is_zero());

  MultiPoly th = MultiPoly::var("theta0");
  u = puiseux_revert(MultiPoly::var("u", 2) + th, "u", -1);
  CHECK(u.coeff(-1) == q(-1, 2) * th);
  CHECK(u.prec() <= -1);

  // round trip V'(u(w)) = w with numeric rational coefficients, p <= 6
  for (int p = 2; p <= 6; ++p) {
    MultiPoly v = MultiPoly::var("u", p);
    for (int i = 0; i <= p - 2; ++i) v += q(i * 3 - 2, i + 2) * MultiPoly::var("u", i);
    int kmin = -2 * p;
    auto s = puiseux_revert(v, "u", kmin);
    auto c = compose(v, "u", s);
    CHECK(c.coeff(p) == MultiPoly(1));
    for (int k = c.prec(); k < p; ++k) CHECK(c.coeff(k).is_zero());
    CHECK(c.prec() <= 0);
  }
}

TEST_CASE("partitions and schur functions") {
  CHECK(partitions(5).size() == 7);
  CHECK(schur_function({2}) == t(2) + q(1, 2) * t(1).pow(2));
  CHECK(schur_function({1, 1}) == q(1, 2) * t(1).pow(2) - t(2));
}
