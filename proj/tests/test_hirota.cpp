#include <doctest.h>

#include "gapprob/algebra.hpp"
#include "gapprob/hirota.hpp"

using namespace gp;
using namespace gp::pde;

namespace {
MultiPoly tv(int i) { return MultiPoly::var(tvar(i)); }
MultiPoly dv(int i) { return MultiPoly::var(dsym(i)); }
MultiPoly q(long a, long b = 1) { return MultiPoly(rat(a, b)); }
DiffExpr k(long a, long b = 1) { return DiffExpr(q(a, b)); }

Atom U(std::initializer_list<std::pair<int, int>> parts) {
  Atom a;
  a.fn = "U";
  for (auto [i, e] : parts) a.set_t(i, e);
  return a;
}
DiffExpr u(std::initializer_list<std::pair<int, int>> parts) { return DiffExpr::atom(U(parts)); }

Atom G(int d, std::initializer_list<std::pair<int, int>> parts = {}) {
  Atom a;
  a.fn = "g";
  a.d = d;
  for (auto [i, e] : parts) a.set_t(i, e);
  return a;
}
DiffExpr g(int d, std::initializer_list<std::pair<int, int>> parts = {}) { return DiffExpr::atom(G(d, parts)); }
}  // namespace

TEST_CASE("hirota symbol basics") {
  MultiPoly f = tv(1).pow(3) + tv(1) * tv(2) + q(2);
  MultiPoly f1 = f.diff("t1");
  CHECK(hirota_apply(dv(1).pow(2), f, f) == q(2) * (f * f1.diff("t1") - f1 * f1));
  // odd symbols vanish on f o f
  for (const auto& P : {dv(1), dv(1) * dv(2).pow(2), dv(3).pow(3), dv(1).pow(2) * dv(3)})
    CHECK(hirota_apply(P, f, f).is_zero());
  MultiPoly s2 = tv(2) + q(1, 2) * tv(1).pow(2);
  CHECK(hirota_apply(hirota_equation(3, HirotaKind::Y), s2, s2).is_zero());
  // a non-tau function is caught
  MultiPoly bad = tv(1).pow(3) + tv(2);
  CHECK_FALSE(hirota_apply(hirota_equation(3, HirotaKind::Y), bad, bad).is_zero());
}

TEST_CASE("reduced Hirota operators") {
  auto Y3 = even_part(hirota_equation(3, HirotaKind::Y));
  auto Y4 = even_part(hirota_equation(4, HirotaKind::Y));
  auto Y5 = even_part(hirota_equation(5, HirotaKind::Y));
  auto Y14 = even_part(hirota_equation(5, HirotaKind::Y1));
  MultiPoly Y3l = q(-4) * dv(1) * dv(3) + q(3) * dv(2).pow(2) + dv(1).pow(4);
  MultiPoly Y4l = q(-3) * dv(1) * dv(4) + q(2) * dv(2) * dv(3) + dv(2) * dv(1).pow(3);
  MultiPoly Y5l = q(1, 4) * dv(2) * dv(4) - q(3, 5) * dv(1) * dv(5) + q(1, 9) * dv(3).pow(2) +
                  q(1, 9) * dv(1).pow(3) * dv(3) + q(1, 8) * dv(1).pow(2) * dv(2).pow(2) + q(1, 360) * dv(1).pow(6);
  MultiPoly Y14l = q(-1, 8) * dv(2) * dv(4) + q(1, 10) * dv(1) * dv(5) + q(1, 18) * dv(3).pow(2) -
                   q(1, 36) * dv(1).pow(3) * dv(3) - q(1, 360) * dv(1).pow(6);
  MultiPoly combo = q(1, 2) * dv(2) * dv(4) - q(2) * dv(1) * dv(5) + q(2, 3) * dv(3).pow(2) +
                    q(1, 3) * dv(1).pow(3) * dv(3) + q(1, 2) * dv(1).pow(2) * dv(2).pow(2);
  CHECK(proportional(Y3l, Y3) == Rational(24));
  CHECK(proportional(Y4l, Y4) == Rational(12));
  CHECK(proportional(Y5l, Y5) == Rational(2));
  CHECK_FALSE(proportional(Y14l, Y14).has_value());
  CHECK(q(12) * Y5 + q(2) * Y14 == combo);
  CHECK_FALSE(proportional(combo, q(10) * Y5 + q(4) * Y14).has_value());
  std::string rep;
  CHECK(bilinear_identity_check(7, &rep));
  CHECK(even_part(hirota_equation(5, HirotaKind::Y1Raw)) == Y5 + q(1, 2) * Y14);
  CHECK(proportional(Y14l, even_part(hirota_equation(5, HirotaKind::Y1Raw))) == Rational(1));
}

TEST_CASE("printed Hirota table") {
  auto rows = hirota_table();
  REQUIRE(rows.size() == 5);
  for (const auto& r : rows) {
    CAPTURE(r.label);
    CHECK(r.ok());
  }
  CHECK(rows[0].op_scale == Rational(24));
  CHECK(rows[2].log_scale == Rational(72));
  CHECK(rows[4].op_scale == Rational(1));
}

TEST_CASE("log-tau translation") {
  CHECK(to_logtau_pde(dv(1)).is_zero());
  CHECK(to_logtau_pde(dv(2) * dv(3) * dv(1)).is_zero());
  DiffExpr y3 = u({{1, 4}}) + k(6) * u({{1, 2}}).pow(2) + k(3) * u({{2, 2}}) - k(4) * u({{1, 1}, {3, 1}});
  CHECK(proportional(to_logtau_pde(hirota_equation(3, HirotaKind::Y)), y3) == Rational(1, 24));
  CHECK(hirota_logform(PdeEquation::Y3) == y3);
  DiffExpr y4 = k(-3) * u({{1, 1}, {4, 1}}) + k(2) * u({{2, 1}, {3, 1}}) + u({{1, 3}, {2, 1}}) +
                k(6) * u({{1, 2}}) * u({{1, 1}, {2, 1}});
  CHECK(hirota_logform(PdeEquation::Y4) == y4);
  DiffExpr y5 = k(-108, 5) * u({{1, 1}, {5, 1}}) + k(1, 10) * u({{1, 6}}) + k(6) * u({{1, 2}}).pow(3) +
                k(3) * u({{1, 4}}) * u({{1, 2}}) + k(9) * u({{2, 1}, {4, 1}}) + k(4) * u({{3, 2}}) +
                k(4) * u({{1, 3}, {3, 1}}) + k(24) * u({{1, 2}}) * u({{1, 1}, {3, 1}}) +
                k(9) * u({{1, 2}}) * u({{2, 2}}) + k(9, 2) * u({{1, 2}, {2, 2}}) + k(18) * u({{1, 1}, {2, 1}}).pow(2);
  CHECK(proportional(y5, to_logtau_pde(hirota_equation(5, HirotaKind::Y))) == Rational(72));
  DiffExpr y14 = k(-36, 5) * u({{1, 1}, {5, 1}}) + k(1, 5) * u({{1, 6}}) + k(12) * u({{1, 2}}).pow(3) +
                 k(6) * u({{1, 4}}) * u({{1, 2}}) + k(9) * u({{2, 1}, {4, 1}}) - k(4) * u({{3, 2}}) +
                 k(2) * u({{1, 3}, {3, 1}}) + k(12) * u({{1, 2}}) * u({{1, 1}, {3, 1}});
  // the listed Y_{1,4} rows agree with each other but not with the Y_{1,4} operator
  CHECK_FALSE(proportional(y14, to_logtau_pde(hirota_equation(5, HirotaKind::Y1))).has_value());
  MultiPoly Y14l = q(-1, 8) * dv(2) * dv(4) + q(1, 10) * dv(1) * dv(5) + q(1, 18) * dv(3).pow(2) -
                   q(1, 36) * dv(1).pow(3) * dv(3) - q(1, 360) * dv(1).pow(6);
  CHECK(proportional(y14, to_logtau_pde(Y14l)).has_value());
  DiffExpr cmb = k(-4) * u({{1, 1}, {5, 1}}) + u({{2, 1}, {4, 1}}) + k(4, 3) * u({{3, 2}}) +
                 k(2, 3) * u({{1, 3}, {3, 1}}) + k(4) * u({{1, 2}}) * u({{1, 1}, {3, 1}}) + u({{1, 2}, {2, 2}}) +
                 k(4) * u({{1, 1}, {2, 1}}).pow(2) + k(2) * u({{1, 2}}) * u({{2, 2}});
  CHECK(proportional(cmb, hirota_logform(PdeEquation::Y5Y14)) == Rational(1));
}

TEST_CASE("schur functions are tau functions") {
  int checked = 0;
  auto fails = schur_tau_check(4, &checked);
  CHECK(fails.empty());
  CHECK(checked == 3 * (1 + 2 + 3 + 5));
}

TEST_CASE("DiffExpr calculus") {
  DiffExpr x = Q();
  // d eps = (eps + 1) d
  CHECK(d(eps(x)) == eps(d(x)) + d(x));
  CHECK(d(eps(eps(x))) == eps(eps(d(x))) + k(2) * eps(d(x)) + d(x));
  CHECK(bracket(d(x), x) == -bracket(x, d(x)));
  CHECK(bracket(x, x).is_zero());
  CHECK(dt(2, DiffExpr(t(2).pow(2)) * x) == DiffExpr(q(2) * t(2)) * x + DiffExpr(t(2).pow(2)) * dt(2, x));
  CHECK(dw(DiffExpr(w()) * dw(x)) == dw(x) + DiffExpr(w()) * dw(x, 2));
  CHECK(d(DiffExpr(t(2))).is_zero());
  CHECK((k(6) * d(x, 2).pow(2) + d(x, 4) - k(4) * eps(d(x)) + k(2) * d(x)).str() ==
        "6*(d^2 Q)^2 + d^4 Q - 4*eps d Q + 2*d Q");
  CHECK(DiffExpr().str() == "0");
}

TEST_CASE("virasoro substitution rules") {
  CHECK(virasoro_substitute(u({{1, 2}}), 3, 0) == g(2) - DiffExpr(q(2, 3) * tv(2)));
  CHECK(virasoro_substitute(u({{1, 2}}), 2, 0) == g(2));
  CHECK(virasoro_substitute(u({{1, 3}}), 2, 0) == g(3) - k(1, 2));
  CHECK(virasoro_substitute(u({{1, 3}}), 3, 0) == g(3));
  for (int p = 2; p <= 5; ++p) CHECK(virasoro_substitute(u({{1, 4}}), p, 0) == g(4));
  CHECK(virasoro_substitute(u({{1, 1}}), 4, 0) == g(1) - DiffExpr(q(1, 2) * tv(2).pow(2)));
  // p d1 d_{p+1} g = (p eps - 1) d g - ... at p = 2
  CHECK(virasoro_substitute(u({{1, 1}, {3, 1}}), 2, 0) == eps(g(1)) - k(1, 2) * g(1));
  // d_p vanishes for n = 0 and becomes -d_w for n > 0
  CHECK(virasoro_substitute(u({{2, 2}}), 2, 0).is_zero());
  CHECK(virasoro_substitute(u({{2, 2}}), 2, 1) == dw(g(0), 2));
  CHECK(virasoro_substitute(u({{1, 1}, {3, 1}}), 3, 1) == -dw(g(1)));
  CHECK_THROWS_AS(virasoro_substitute(u({{3, 1}, {5, 1}}), 4, 0), std::invalid_argument);
  CHECK_THROWS_AS(virasoro_substitute(u({{1, 1}, {6, 1}}), 4, 0), std::invalid_argument);
}

TEST_CASE("derivations reproduce the stored equations") {
  for (const auto& id : target_ids()) {
    auto r = check_target(id);
    CAPTURE(id);
    CAPTURE(r.derived);
    if (id == "intro12" || id == "intro28" || id == "78':p=3" || id == "78':p=4") {
      CHECK_FALSE(r.match);
      CHECK(r.match_flipped_bracket);
    } else if (id == "intro13" || id == "Y5Y14:p=4") {
      CHECK_FALSE(r.match);
    } else {
      CHECK(r.match);
    }
  }
  // the Boussinesq shift that works is tau/3, not tau/2
  DiffExpr x = Q();
  DiffExpr U = d(x, 2) - DiffExpr(q(2, 3) * t(2));
  DiffExpr bous = d(U, 4) + k(3) * dt(2, U, 2) + k(6) * d(U * U, 2);
  CHECK(proportional(derive_gap_pde(PdeEquation::Bous, 3, 0).expr, bous).has_value());
  // Y5-Y14 at p = 4, differences from the printed equation
  DiffExpr diff = derive_gap_pde(PdeEquation::Y5Y14, 4, 0).expr - target_pde("Y5Y14:p=4").expr;
  DiffExpr expect = DiffExpr(q(-9, 4) * t(3).pow(2)) * d(x, 2) - DiffExpr(q(3, 2) * t(3)) * dt(2, x, 2) -
                    DiffExpr(t(3) * q(3) - q(3)) * dt(3, d(x));
  CHECK(diff == expect);
}

TEST_CASE("n > 0 equations reduce to n = 0 without d_w terms") {
  struct E {
    PdeEquation e;
    int p;
  };
  for (auto [e, p] : {E{PdeEquation::Y3, 2}, E{PdeEquation::Y3, 3}, E{PdeEquation::Y3, 4}, E{PdeEquation::Y3, 5},
                      E{PdeEquation::Y4, 3}, E{PdeEquation::Y4, 4}, E{PdeEquation::Y3Y4, 3},
                      E{PdeEquation::Y3Y4, 4}, E{PdeEquation::Bous, 3}, E{PdeEquation::Y5Y14, 4}}) {
    CAPTURE(to_string(e));
    CAPTURE(p);
    auto a = derive_gap_pde(e, p, 0).expr;
    auto b = derive_gap_pde(e, p, 1).expr.without_dw();
    CHECK(a == b);
  }
}

TEST_CASE("derivation errors") {
  CHECK_THROWS_AS(derive_gap_pde(PdeEquation::Y4, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(derive_gap_pde(PdeEquation::Y3, 6, 0), std::invalid_argument);
  CHECK_THROWS_AS(derive_gap_pde(PdeEquation::Y3, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_equation("Y9"), std::invalid_argument);
  CHECK_THROWS_AS(target_pde("nope"), std::invalid_argument);
  CHECK(parse_equation("Y3Y4") == PdeEquation::Y3Y4);
}
