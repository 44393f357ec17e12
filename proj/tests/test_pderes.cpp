#include <doctest.h>

#include <cmath>
#include <sstream>

#include "gapprob/pderes.hpp"

using namespace gp;

TEST_CASE("central stencils") {
  auto w1 = central_weights(1);
  REQUIRE(w1.size() == 3);
  CHECK(w1[0] == doctest::Approx(-0.5));
  CHECK(w1[2] == doctest::Approx(0.5));
  auto w4 = central_weights(4);
  REQUIRE(w4.size() == 5);
  CHECK(w4[2] == doctest::Approx(6));
  CHECK(w4[0] == doctest::Approx(1));
  CHECK(w4[1] == doctest::Approx(-4));
  CHECK(central_weights(3).size() == 5);
  CHECK(central_weights(6).size() == 7);
  CHECK_THROWS(central_weights(-1));
}

TEST_CASE("fd_partial on surrogates") {
  // Q = s^4 with s the left endpoint shift: 4th shift derivative is 24
  GridFunction quartic = [](const Endpoints& E, double, double) { return std::pow(E.lo(), 4); };
  ParamGrid g1(quartic, Endpoints({0.3, 1.0}), 0, 0, FDSteps{});
  CHECK(g1.fd_partial({0, 4, 0, 0}) == doctest::Approx(24).epsilon(1e-8));

  // Euler: eps(a1 a2) = 2 a1 a2
  GridFunction prod = [](const Endpoints& E, double, double) { return E.a[0] * E.a[1]; };
  ParamGrid g2(prod, Endpoints({0.5, 1.5}), 0, 0, FDSteps{});
  CHECK(g2.fd_partial({1, 0, 0, 0}) == doctest::Approx(2 * 0.75).epsilon(1e-3));

  GridFunction ex = [](const Endpoints& E, double, double) { return std::exp(E.a[0] + E.a[1]); };
  ParamGrid g3(ex, Endpoints({-0.2, 0.4}), 0, 0, FDSteps{});
  const double truth = 2 * std::exp(0.2);
  CHECK(std::abs(g3.fd_partial({0, 1, 0, 0}) - truth) < 4 * 0.05 * 0.05 * truth);

  // mixed tau-shift partial on a product surrogate
  GridFunction mixed = [](const Endpoints& E, double tau, double w) { return E.lo() * tau * tau + w; };
  ParamGrid g4(mixed, Endpoints({0.1, 0.2}), 1.5, 0.3, FDSteps{});
  CHECK(g4.fd_partial({0, 1, 1, 0}) == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(g4.fd_partial({0, 0, 0, 1}) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(g4.evaluations() > 0);
  std::ostringstream os;
  g4.dump_csv(os);
  CHECK(os.str().rfind("h,s,tau,w,Q\n", 0) == 0);
}

TEST_CASE("prefetch in parallel agrees with serial") {
  GridFunction f = [](const Endpoints& E, double tau, double) { return std::sin(E.lo()) * std::cos(E.hi()) + tau; };
  ParamGrid a(f, Endpoints({-0.5, 0.7}), 1, 0, FDSteps{}), b(f, Endpoints({-0.5, 0.7}), 1, 0, FDSteps{});
  std::vector<Orders> need{{1, 3, 0, 0}, {0, 4, 0, 0}, {2, 0, 1, 0}};
  a.prefetch(need, 1);
  b.prefetch(need, 4);
  CHECK(a.evaluations() == b.evaluations());
  for (const auto& o : need) CHECK(a.fd_partial(o) == b.fd_partial(o));
}

TEST_CASE("ordering is validated on the grid") {
  GridFunction f = [](const Endpoints&, double, double) { return 0.0; };
  ParamGrid g(f, Endpoints({-1, 1}), 0, 0, FDSteps{});
  CHECK_NOTHROW(g.fd_partial({2, 2, 0, 0}));
  GridFunction bad = [](const Endpoints&, double, double) { return NAN; };
  ParamGrid gb(bad, Endpoints({-1, 1}), 0, 0, FDSteps{});
  CHECK_THROWS(gb.fd_partial({0, 1, 0, 0}));
}

TEST_CASE("residual of the Airy equation") {
  GapProblem pr;
  pr.preset = "airy";
  auto r = residual(target_pde("intro4"), pr, Endpoints({-1, 1}), FDSteps{}, 2);
  CHECK(r.relative < 1e-2);
  CHECK(r.order >= 1.5);
  REQUIRE(r.levels.size() == 2);
  CHECK(r.levels[1].relative < r.levels[0].relative);
  // the two largest terms balance each other
  std::vector<double> v;
  for (const auto& t : r.terms) v.push_back(t.value);
  std::sort(v.begin(), v.end(), [](double a, double b) { return std::abs(a) > std::abs(b); });
  CHECK(v[0] * v[1] < 0);
  CHECK(std::abs(v[1]) > 0.2 * std::abs(v[0]));
}

TEST_CASE("empty set gives identically zero residuals") {
  GapProblem pr;
  pr.preset = "pearcey";
  auto r = residual(target_pde("intro10"), pr, Endpoints(), FDSteps{}, 2);
  CHECK(r.residual == 0.0);
  for (const auto& t : r.terms) CHECK(t.value == 0.0);
}

TEST_CASE("n = 0 run of an outlier equation without d_w terms") {
  GapProblem pr;
  pr.preset = "airy";
  auto eq7 = target_pde("intro7");
  GapPDE reduced{"intro7-no-dw", eq7.expr.without_dw(), {}};
  auto a = residual(reduced, pr, Endpoints({-1, 1}), FDSteps{}, 1);
  auto b = residual(target_pde("intro4"), pr, Endpoints({-1, 1}), FDSteps{}, 1);
  CHECK(a.residual == doctest::Approx(b.residual).epsilon(1e-12));
}

TEST_CASE("unsupported requests") {
  GapProblem pr;
  pr.preset = "nope";
  CHECK_THROWS(residual(target_pde("intro4"), pr, Endpoints({-1, 1}), FDSteps{}, 1));
  GapProblem pa;
  CHECK_THROWS(residual(derive_gap_pde(PdeEquation::Y3, 4, 0), pa, Endpoints({-1, 1}), FDSteps{}, 1));
}

TEST_CASE("Pearcey to Airy with the empty set") {
  auto r = pearcey_airy_limit({4, 8}, Endpoints(), -1, -1);
  for (const auto& row : r.rows) {
    CHECK(row.pearcey_prob == 1.0);
    CHECK(row.airy_prob == 1.0);
    CHECK(row.deviation == 0.0);
  }
}
