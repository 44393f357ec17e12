#include <doctest.h>

#include "gapprob/algebra.hpp"
#include "gapprob/potential.hpp"

using namespace gp;

namespace {
MultiPoly t(int i) { return MultiPoly::var(tvar(i)); }
MultiPoly q(long a, long b = 1) { return MultiPoly(rat(a, b)); }
}  // namespace

TEST_CASE("theta inversion closed forms") {
  CHECK(solve_theta(2).theta[0] == -t(1));
  auto p3 = solve_theta(3);
  CHECK(p3.theta[1] == q(-2) * t(2));
  CHECK(p3.theta[0] == -t(1));
  for (int p = 2; p <= 6; ++p) {
    auto pot = solve_theta(p);
    CHECK(pot.theta[p - 2] == q(-(p - 1)) * t(p - 1));
    if (p >= 3) CHECK(pot.theta[p - 3] == q(-(p - 2)) * t(p - 2));
    if (p >= 4)
      CHECK(pot.theta[p - 4] == q(p - 3) * (-t(p - 3) + q((p - 1) * (p - 1), 2 * p) * t(p - 1).pow(2)));
    auto w = t_weights(p);
    for (int i = 0; i <= p - 2; ++i) {
      bool hom = false;
      CHECK(pot.theta[i].weighted_degree(w, &hom) == p - i);
      CHECK(hom);
    }
  }
  CHECK(solve_theta(5).theta[1] == q(2) * (-t(2) + q(8, 5) * t(4).pow(2)));
}

TEST_CASE("reverted series matches the t-series") {
  for (int p = 2; p <= 6; ++p) {
    auto u = puiseux_revert(solve_theta(p).vprime(), "u", -(p - 1));
    for (int j = 1; j <= p - 1; ++j) CHECK(u.coeff(-j) == q(p - j, p) * t(p - j));
  }
}

TEST_CASE("topological tau") {
  CHECK(topological_tau_log(2).str() == "-1/12*t1^3");
  CHECK(topological_tau_log(3).str() == "-1/3*t1^2*t2 - 2/27*t2^4");
  MultiPoly f4 = topological_tau_log(4);
  MultiPoly printed = q(-3, 8) * t(1).pow(2) * t(3) - q(1, 2) * t(1) * t(2).pow(2) - q(9, 16) * t(2).pow(2) * t(3).pow(2);
  MultiPoly last = f4 - printed;
  REQUIRE(last.terms().size() == 1);
  CHECK(last.terms().begin()->second == rat(-81, 1280));
  CHECK(last.degree("t3") == 5);
  for (int p = 2; p <= 4; ++p) {
    bool hom = false;
    CHECK(topological_tau_log(p).weighted_degree(t_weights(p), &hom) == 2 * (p + 1));
    CHECK(hom);
    CHECK(consistency_71_72(p));
  }
}

TEST_CASE("phase polynomial") {
  CHECK(phase_polynomial(2).is_zero());
  CHECK(phase_polynomial(3) == q(-2, 3) * t(2).pow(2));
}

TEST_CASE("numeric potential") {
  auto np = numeric_potential(3, {0.0, 0.5});
  CHECK(np.theta[1] == doctest::Approx(-1.0));
  CHECK(std::abs(np.V({1.0, 0.0}) - std::complex<double>(0.25 - 0.5, 0)) < 1e-15);
}
