#include <doctest.h>

#include <cmath>

#include "gapprob/contours.hpp"
#include "gapprob/fredholm.hpp"
#include "gapprob/kernel.hpp"
#include "gapprob/special.hpp"

using namespace gp;

namespace {
cd integrate(const QuadratureRule& q, const std::function<cd(cd)>& f) {
  cd s = 0;
  for (size_t i = 0; i < q.nodes.size(); ++i) s += q.weights[i] * f(q.nodes[i]);
  return s;
}
double airy_kernel(double x, double y) {
  double ax, apx, ay, apy;
  airy_series(x, ax, apx);
  airy_series(y, ay, apy);
  if (x == y) return apx * apx - x * ax * ax;
  return (ax * apy - apx * ay) / (x - y);
}
}  // namespace

TEST_CASE("gauss-legendre") {
  std::vector<double> x, w;
  gauss_legendre(8, x, w);
  double s = 0, s6 = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    s += w[i];
    s6 += w[i] * std::pow(x[i], 6);
  }
  CHECK(s == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(s6 == doctest::Approx(2.0 / 7).epsilon(1e-14));
}

TEST_CASE("standard contours decay") {
  for (int p = 2; p <= 6; ++p)
    for (int sign : {1, -1}) {
      auto c = standard_contours(p, sign);
      for (const auto& wd : c.wedges)
        for (int s : {1, -1}) {
          cd dir = std::polar(1.0, s * wd.theta);
          // -sign y^{p+1} has negative real part far out on each ray
          CHECK((-double(sign) * std::pow(dir, p + 1)).real() < 0);
        }
    }
  CHECK(standard_contours(3, 1).wedges.at(0).theta == doctest::Approx(M_PI / 2));
  CHECK_THROWS(standard_contours(7, 1));
}

TEST_CASE("quadrature self-consistency and offset invariance") {
  auto env = integrand_envelope(2, 1, {0.0}, 0, 0);
  auto f = [](cd y) { return std::exp(-y * y * y / 3.0); };
  RayContour c = standard_contours(2, 1);
  QuadOptions o;
  o.nodes_per_panel = 16;
  cd a = integrate(build_quadrature(c, env, o), f);
  o.nodes_per_panel = 32;
  cd b = integrate(build_quadrature(c, env, o), f);
  CHECK(std::abs(a - b) < 1e-12 * std::abs(a));
  for (double off : {-0.1, 0.1}) {
    RayContour c2 = c;
    c2.wedges[0].apex += off;
    cd d = integrate(build_quadrature(c2, env, o), f);
    CHECK(std::abs(d - b) < 1e-12 * std::abs(b));
  }
  QuadOptions bad;
  bad.rel_tol = 1;
  CHECK_THROWS(build_quadrature(c, env, bad));
  CHECK_THROWS(build_quadrature(RayContour{}, env, o));
}

TEST_CASE("phi against the Airy series") {
  PhiSpec s;
  s.p = 2;
  s.sign = -1;
  PhiEvaluator ev(s, -2, 2);
  for (double u = -2; u <= 2; u += 0.5) {
    double ai, aip;
    airy_series(u, ai, aip);
    cd v = ev.value(u);
    CHECK(std::abs(v - 2 * std::sqrt(M_PI) * ai) < 1e-10 * std::abs(v));
  }
  PhiSpec sp;
  sp.p = 2;
  sp.sign = 1;
  PhiEvaluator e1(sp, -1, 1);
  QuadOptions fine;
  fine.nodes_per_panel = 32;
  sp.quad = fine;
  PhiEvaluator e2(sp, -1, 1);
  CHECK(std::abs(e1.value(0.0) - e2.value(0.0)) < 1e-12 * std::abs(e1.value(0.0)));
  CHECK(std::abs(e1.ode_residual_fd(0.5, 1e-3)) < 1e-6);
}

TEST_CASE("spectral ODE residuals") {
  PhiSpec s3;
  s3.p = 3;
  s3.sign = 1;
  CHECK(std::abs(PhiEvaluator(s3).ode_residual(1.0)) < 1e-8);
  PhiSpec s2;
  s2.p = 2;
  s2.sign = -1;
  s2.n = 1;
  s2.w = 0.5;
  PhiEvaluator e(s2);
  CHECK(std::abs(e.ode_residual(0.0)) < 1e-8);
  CHECK(std::abs(e.ode_residual_fd(0.0, 1e-3) - e.ode_residual(0.0)) < 1e-5);
}

namespace {
// wedge apex moved to 0 so that z can sit on the contour ray
cd psi_on_ray(int p, int sign, double arg, double r) {
  RayContour c = phi_contour(p, sign, 0, 0.0, 0.25);
  c.wedges[0].apex = 0;
  PhiSpec s;
  s.p = p;
  s.sign = sign;
  s.contour = c;
  return wave_psi(s, 0.0, {}, std::polar(r, arg * M_PI));
}
}  // namespace

TEST_CASE("wave function tends to 1 in its sector") {
  struct Ray {
    int p, sign;
    double arg;
  };
  for (Ray r : {Ray{2, 1, -2.0 / 3}, Ray{2, -1, 1.0 / 3}, Ray{2, -1, -1.0 / 3}, Ray{3, 1, -0.5}, Ray{3, -1, 0.75},
                Ray{3, -1, -0.75}}) {
    CAPTURE(r.p);
    CAPTURE(r.sign);
    CAPTURE(r.arg);
    CHECK(std::abs(psi_on_ray(r.p, r.sign, r.arg, 8.0) - 1.0) < 0.1);
  }
  // conjugate ray of the + side crosses the principal branch of z^{(p-1)/2}
  CHECK(std::abs(psi_on_ray(2, 1, 2.0 / 3, 8.0) + 1.0) < 0.1);

  double e4 = std::abs(psi_on_ray(2, -1, 1.0 / 3, 4.0) - 1.0);
  double e16 = std::abs(psi_on_ray(2, -1, 1.0 / 3, 16.0) - 1.0);
  CHECK(std::log(e4 / e16) / std::log(4.0) >= 1.5);
}

TEST_CASE("Airy kernel against the series oracle") {
  KernelEvaluator k(airy_preset(0, 0.0), -3, 3);
  const double kd = std::pow(3.0, -1.0 / 3) / std::tgamma(1.0 / 3);
  CHECK(k.double_integral(0, 0) == doctest::Approx(kd * kd).epsilon(1e-8));
  for (auto [x, y] : {std::pair{0.3, -0.2}, {1.0, 0.5}, {-1.5, 2.0}}) {
    CHECK(k.double_integral(x, y) == doctest::Approx(airy_kernel(x, y)).epsilon(1e-8));
    CHECK(k.iiks(x, y) == doctest::Approx(k.double_integral(x, y)).epsilon(1e-8));
  }
  CHECK(k.iiks(0.5, 0.5, true) == doctest::Approx(k.double_integral(0.5, 0.5)).epsilon(1e-8));
  // w does not enter when n = 0
  KernelEvaluator k5(airy_preset(0, 5.0), -3, 3);
  CHECK(k5.double_integral(0.3, -0.2) == doctest::Approx(k.double_integral(0.3, -0.2)).epsilon(1e-12));
}

TEST_CASE("Pearcey kernel") {
  KernelEvaluator k(pearcey_preset(1.0, 0, 0.0), -3, 3);
  CHECK(k.double_integral(0.2, -0.1) == doctest::Approx(pearcey_display(1.0, 0, 0.0, 0.2, -0.1)).epsilon(1e-10));
  CHECK(k.iiks(0.3, -0.2) == doctest::Approx(k.double_integral(0.3, -0.2)).epsilon(1e-8));
  KernelEvaluator k0(pearcey_preset(0.0, 0, 0.0), -3, 3);
  for (double x : {0.4, 1.1}) CHECK(k0.double_integral(x, x) == doctest::Approx(k0.double_integral(-x, -x)).epsilon(1e-9));
  // contour offset invariance
  KernelEvaluator a(pearcey_preset(1.0, 0, 0.0, 0.2), -3, 3), b(pearcey_preset(1.0, 0, 0.0, 0.3), -3, 3);
  CHECK(a.double_integral(0.5, 0.1) == doctest::Approx(b.double_integral(0.5, 0.1)).epsilon(1e-10));
}

TEST_CASE("gap probabilities") {
  auto airy = airy_preset(0, 0.0);
  auto e = gap_logdet(airy, Endpoints());
  CHECK(e.Q == 0.0);
  CHECK(e.det == 1.0);
  CHECK(std::abs(gap_logdet(airy, Endpoints({4, 12})).Q) < 1e-3);
  auto a40 = gap_logdet(airy, Endpoints({-2, 2}), 40, false), a80 = gap_logdet(airy, Endpoints({-2, 2}), 80, false);
  CHECK(std::abs(a40.Q - a80.Q) < 1e-10);
  // Tracy-Widom values F2(-2) = 0.41322414..., F2(0) = 0.96937282...
  CHECK(std::exp(gap_semi_infinite(airy, -2, 12).Q) == doctest::Approx(0.4132241425).epsilon(1e-8));
  CHECK(std::exp(gap_semi_infinite(airy, 0, 12).Q) == doctest::Approx(0.9693728284).epsilon(1e-8));
  CHECK(std::abs(gap_semi_infinite(airy, -1, 8).Q - gap_semi_infinite(airy, -1, 12).Q) < 1e-8);
  double prev = -INFINITY;
  for (double s : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
    double q = gap_semi_infinite(airy, s, 10).Q;
    CHECK(q >= prev);
    CHECK(q <= 0);
    prev = q;
  }
  // inclusion monotone and det in (0, 1]
  auto pe = pearcey_preset(1.0, 1, 0.5);
  double qs = gap_logdet(pe, Endpoints({-0.5, 0.5})).Q, ql = gap_logdet(pe, Endpoints({-1, 1})).Q;
  CHECK(ql <= qs);
  CHECK(qs <= 0);
  CHECK(Endpoints::parse("-1,1").intervals() == 1);
  CHECK_THROWS(Endpoints::parse("1,-1"));
  CHECK_THROWS(Endpoints::parse("0,1,2"));
}
