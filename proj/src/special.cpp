#include "gapprob/special.hpp"

#include <cmath>
#include <stdexcept>

#include "gapprob/algebra.hpp"
#include "gapprob/potential.hpp"

namespace gp {

cd phi_prefactor(int p, int sign) {
  const cd I(0, 1);
  if (p == 2) return sign > 0 ? cd(1 / std::sqrt(M_PI)) : 1.0 / (I * std::sqrt(M_PI));
  double a = std::sqrt(p / (2 * M_PI));
  return sign > 0 ? cd(a) : -I * a;
}

RayContour phi_contour(int p, int sign, int n, double w, double delta) {
  auto pr = kernel_contours(p, n, w, delta);
  return sign > 0 ? pr.first : pr.second;
}

namespace {
std::vector<double> padded_t(int p, const std::vector<double>& t) {
  std::vector<double> r(p - 1, 0.0);
  for (size_t i = 0; i < t.size() && i < r.size(); ++i) r[i] = t[i];
  return r;
}

cd poly_eval(const std::vector<cd>& q, cd y) {
  cd s = 0;
  for (size_t k = q.size(); k-- > 0;) s = s * y + q[k];
  return s;
}
}  // namespace

PhiEvaluator::PhiEvaluator(const PhiSpec& spec, double u_lo, double u_hi) : spec_(spec) {
  if (spec_.sign != 1 && spec_.sign != -1) throw std::invalid_argument("phi: sign must be +-1");
  if (spec_.n < 0) throw std::invalid_argument("phi: n must be >= 0");
  theta_ = numeric_potential(spec_.p, padded_t(spec_.p, spec_.t)).theta;
  if (spec_.contour.wedges.empty()) spec_.contour = phi_contour(spec_.p, spec_.sign, spec_.n, spec_.w, spec_.delta);
  rule_ = build_quadrature(spec_.contour,
                           integrand_envelope(spec_.p, spec_.sign, theta_, u_lo, u_hi, spec_.n, spec_.w), spec_.quad);
  if (spec_.sign < 0 && spec_.n > 0) {
    double d = distance_to_contour(spec_.contour, spec_.w);
    if (d < 10 * std::numeric_limits<double>::epsilon() * rule_.radius)
      throw std::domain_error("phi: pole y = w lies on the contour; choose a different offset");
  }
}

cd PhiEvaluator::integrand(cd y, cd u) const {
  const int p = spec_.p, s = spec_.sign;
  cd V = std::pow(y, p + 1) / double(p + 1), pw = y;
  for (size_t i = 0; i < theta_.size(); ++i) {
    V += theta_[i] * pw / double(i + 1);
    pw *= y;
  }
  cd e = std::exp(-double(s) * V + double(s) * u * y);
  if (spec_.n) e *= std::pow(y - spec_.w, s * spec_.n);
  return e;
}

cd PhiEvaluator::moment(cd u, const std::vector<cd>& q) const {
  cd acc = 0;
  for (size_t k = 0; k < rule_.nodes.size(); ++k) acc += rule_.weights[k] * poly_eval(q, rule_.nodes[k]) * integrand(rule_.nodes[k], u);
  return phi_prefactor(spec_.p, spec_.sign) * acc;
}

cd PhiEvaluator::value(cd u) const { return moment(u, {1.0}); }

cd PhiEvaluator::ode_residual(cd u) const {
  // D = +-d/du acts as the factor y; D u = u D +- 1
  const int p = spec_.p;
  std::vector<cd> yp(p + 2, 0.0);  // y^{p+1} - w y^p - u y + w u -+ 1 - n
  yp[p + 1] = 1;
  yp[p] = -spec_.w;
  yp[1] += -u;
  yp[0] += spec_.w * u - double(spec_.sign) - double(spec_.n);
  return moment(u, yp);
}

cd PhiEvaluator::ode_residual_fd(cd u, double h) const {
  // D = +-d/du by central differences on values; builds (D - w)(D^p - u) - n
  const int p = spec_.p;
  const double s = spec_.sign;
  auto deriv = [&](int k, cd x) {
    // k-th derivative via repeated central differencing (order h^2)
    std::vector<cd> f;
    cd acc = 0;
    for (int j = 0; j <= k; ++j) {
      double c = std::pow(-1.0, j) * std::tgamma(k + 1) / (std::tgamma(j + 1) * std::tgamma(k - j + 1));
      acc += c * value(x + (k / 2.0 - j) * h);
    }
    return acc / std::pow(h, k) * std::pow(s, k);
  };
  cd Dp1 = deriv(p + 1, u), Dp = deriv(p, u), D1 = deriv(1, u), f = value(u);
  // (D - w)(D^p - u)f = D^{p+1}f - s*f - u*D f - w D^p f + w u f
  return Dp1 - s * f - u * D1 - spec_.w * Dp + spec_.w * u * f - double(spec_.n) * f;
}

cd wave_psi_apply(const PhiSpec& spec, double x, const std::vector<double>& t, cd z, const std::vector<cd>& q) {
  const int p = spec.p, s = spec.sign;
  std::vector<double> tt = padded_t(p, t);
  PotentialVp pot = solve_theta(p);
  std::vector<double> theta = pot.theta_at(tt);
  std::map<std::string, double> tv;
  for (int i = 1; i <= p - 1; ++i) tv[tvar(i)] = tt[i - 1];
  double P = phase_polynomial(p).eval(tv);
  RayContour c = spec.contour.wedges.empty() ? phi_contour(p, s, spec.n, spec.w, spec.delta) : spec.contour;
  const cd lam = x + std::pow(z, p);
  const cd shift = double(p) / (p + 1) * std::pow(z, p + 1);
  auto expo = [&](cd y) {
    cd V = std::pow(y, p + 1) / double(p + 1), pw = y;
    for (size_t i = 0; i < theta.size(); ++i) {
      V += theta[i] * pw / double(i + 1);
      pw *= y;
    }
    return -double(s) * V + double(s) * lam * y - double(s) * shift;
  };
  LogEnvelope env = [&](cd y) {
    double e = expo(y).real();
    if (spec.n) e += s * spec.n * std::log(std::max(std::abs(y - spec.w), 1e-300));
    return e;
  };
  QuadratureRule rule = build_quadrature(c, env, spec.quad);
  cd acc = 0;
  for (size_t k = 0; k < rule.nodes.size(); ++k) {
    cd y = rule.nodes[k];
    cd f = std::exp(expo(y)) * poly_eval(q, y);
    if (spec.n) f *= std::pow(y - spec.w, s * spec.n);
    acc += rule.weights[k] * f;
  }
  // principal branch of z^{(p-1)/2 -+ n}
  cd zp = std::pow(z, (p - 1) / 2.0 - s * spec.n);
  return std::exp(s * P) * phi_prefactor(p, s) * zp * acc;
}

cd wave_psi(const PhiSpec& spec, double x, const std::vector<double>& t, cd z) {
  return wave_psi_apply(spec, x, t, z, {1.0});
}

void airy_series(double x, double& ai, double& aip) {
  // Ai = c1 f - c2 g with f = sum 3^k (1/3)_k x^{3k}/(3k)!, g = sum 3^k (2/3)_k x^{3k+1}/(3k+1)!
  const double c1 = 0.355028053887817239260063186004183176397979174199;
  const double c2 = 0.258819403792806798405183560189203963479091138354;
  double f = 0, g = 0, fp = 0, gp = 0;
  double tf = 1, tg = x;  // current terms
  f = tf;
  g = tg;
  gp = 1;
  double tfp = 0, tgp = 1;
  for (int k = 1; k < 200; ++k) {
    // term ratios of the standard series
    tf *= x * x * x / ((3.0 * k - 1) * (3.0 * k));
    tg *= x * x * x / ((3.0 * k) * (3.0 * k + 1));
    f += tf;
    g += tg;
    tfp = tf * 3 * k / x;
    tgp = tg * (3 * k + 1) / x;
    fp += tfp;
    gp += tgp;
    if (std::abs(tf) + std::abs(tg) < 1e-18 * (std::abs(f) + std::abs(g)) && k > 5) break;
  }
  if (x == 0) fp = 0, gp = 1;
  ai = c1 * f - c2 * g;
  aip = c1 * fp - c2 * gp;
}

}  // namespace gp
