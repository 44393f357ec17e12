#include "gapprob/kernel.hpp"

#include <cmath>
#include <stdexcept>

#include "gapprob/potential.hpp"

namespace gp {

namespace {
const cd kTwoPiI(0, 2 * M_PI);

cd Vnum(cd y, int p, const std::vector<double>& theta) {
  cd V = std::pow(y, p + 1) / double(p + 1), pw = y;
  for (size_t i = 0; i < theta.size(); ++i) {
    V += theta[i] * pw / double(i + 1);
    pw *= y;
  }
  return V;
}
}  // namespace

KernelSpec make_kernel_spec(int p, int n, double w, const std::vector<double>& t, double delta) {
  if (p < 2 || p > 6) throw std::invalid_argument("kernel: p must be in 2..6");
  if (n < 0) throw std::invalid_argument("kernel: n must be >= 0");
  KernelSpec s;
  s.p = p;
  s.n = n;
  s.w = w;
  s.t = t;
  s.t.resize(p - 1, 0.0);
  s.delta = delta;
  return s;
}

KernelSpec airy_preset(int n, double w, double delta) {
  KernelSpec s = make_kernel_spec(2, n, w, {0.0}, delta);
  s.name = "airy";
  return s;
}

KernelSpec pearcey_preset(double tau, int n, double w, double delta) {
  KernelSpec s = make_kernel_spec(3, n, w, {0.0, tau / 2}, delta);
  s.name = "pearcey";
  s.negate_args = true;
  return s;
}

KernelEvaluator::KernelEvaluator(const KernelSpec& spec, double lam_lo, double lam_hi) : spec_(spec) {
  const int p = spec_.p;
  theta_ = numeric_potential(p, spec_.t).theta;
  wi_ = spec_.negate_args ? -spec_.w : spec_.w;
  double lo = to_internal(lam_lo), hi = to_internal(lam_hi);
  if (lo > hi) std::swap(lo, hi);
  const double d = spec_.delta;
  RayContour gp = spec_.gplus, gm = spec_.gminus;
  if (gp.wedges.empty() || gm.wedges.empty()) {
    auto pr = kernel_contours(p, spec_.n, wi_, d, spec_.c0, spec_.right_apex);
    if (gp.wedges.empty()) gp = pr.first;
    if (gm.wedges.empty()) gm = pr.second;
  }
  spec_.gplus = gp;
  spec_.gminus = gm;
  qp_ = build_quadrature(gp, integrand_envelope(p, 1, theta_, lo, hi, spec_.n, wi_), spec_.quad);
  qm_ = build_quadrature(gm, integrand_envelope(p, -1, theta_, lo, hi, spec_.n, wi_), spec_.quad);
  if (spec_.n > 0 && distance_to_contour(gm, wi_) < 1e-9)
    throw std::domain_error("kernel: pole v = w lies on Gamma^-; choose a different offset");
  const Eigen::Index nu = qp_.nodes.size(), nv = qm_.nodes.size();
  Vp_.resize(nu);
  Vm_.resize(nv);
  for (Eigen::Index i = 0; i < nu; ++i) Vp_[i] = Vnum(qp_.nodes[i], p, theta_);
  for (Eigen::Index i = 0; i < nv; ++i) Vm_[i] = Vnum(qm_.nodes[i], p, theta_);
  C_.resize(nv, nu);
  for (Eigen::Index a = 0; a < nv; ++a)
    for (Eigen::Index b = 0; b < nu; ++b) {
      cd dz = qp_.nodes[b] - qm_.nodes[a];
      if (std::abs(dz) < 1e-12) throw std::domain_error("kernel: contours intersect");
      C_(a, b) = 1.0 / dz;
    }
}

double KernelEvaluator::check_real(cd z) const {
  if (std::abs(z.imag()) > 1e-8 * std::abs(z) + 1e-13)
    throw std::runtime_error("kernel: non-negligible imaginary part " + std::to_string(z.imag()) +
                             "; raise the node count");
  return z.real();
}

double KernelEvaluator::double_integral(double lam, double lam_prime) const {
  return matrix({lam, lam_prime})(0, 1);
}

Eigen::MatrixXd KernelEvaluator::matrix(const std::vector<double>& x) const {
  const Eigen::Index N = x.size(), nu = qp_.nodes.size(), nv = qm_.nodes.size();
  Eigen::MatrixXcd A(N, nu), B(N, nv);
  for (Eigen::Index j = 0; j < N; ++j) {
    double l = to_internal(x[j]);
    for (Eigen::Index b = 0; b < nu; ++b) {
      cd u = qp_.nodes[b];
      cd f = qp_.weights[b] * std::exp(-Vp_[b] + l * u);
      if (spec_.n) f *= std::pow(u - wi_, spec_.n);
      A(j, b) = f;
    }
    for (Eigen::Index a = 0; a < nv; ++a) {
      cd v = qm_.nodes[a];
      cd f = qm_.weights[a] * std::exp(Vm_[a] - l * v);
      if (spec_.n) f *= std::pow(v - wi_, -spec_.n);
      B(j, a) = f;
    }
  }
  Eigen::MatrixXcd K = (B * C_) * A.transpose();
  K *= spec_.sign / (kTwoPiI * kTwoPiI);
  Eigen::MatrixXd R(N, N);
  for (Eigen::Index i = 0; i < N; ++i)
    for (Eigen::Index j = 0; j < N; ++j) R(i, j) = check_real(K(i, j));
  return R;
}

cd KernelEvaluator::psi_plus(int k, int m, double l) const {
  cd acc = 0;
  for (size_t b = 0; b < qp_.nodes.size(); ++b) {
    cd u = qp_.nodes[b];
    cd f = std::pow(u, k) * std::exp(-Vp_[b] + l * u);
    if (m) f *= std::pow(u - wi_, m);
    acc += qp_.weights[b] * f;
  }
  return acc / kTwoPiI;
}

cd KernelEvaluator::psi_minus(int k, int m, double l) const {
  cd acc = 0;
  for (size_t a = 0; a < qm_.nodes.size(); ++a) {
    cd v = qm_.nodes[a];
    cd f = std::pow(v, k) * std::exp(Vm_[a] - l * v);
    if (m) f *= std::pow(v - wi_, m);
    acc += qm_.weights[a] * f;
  }
  return acc / kTwoPiI;
}

double KernelEvaluator::iiks(double lam, double lam_prime, bool diagonal_mode) const {
  const int p = spec_.p, n = spec_.n;
  double l = to_internal(lam), lp = to_internal(lam_prime);
  bool diag = std::abs(l - lp) < 1e-14 * (1 + std::abs(l));
  if (diag && !diagonal_mode) throw std::domain_error("kernel_iiks: diagonal needs diagonal mode");
  // d = 1 differentiates the psi^+ factors in lam' (confluent form)
  const int d = diag ? 1 : 0;
  cd N = 0;
  for (int k = 0; k <= p - 1; ++k) N += psi_plus(k + d, n, lp) * psi_minus(p - 1 - k, -n, l);
  for (int i = 1; i <= p - 2; ++i)
    for (int k = 0; k <= i - 1; ++k) N += theta_[i] * psi_plus(k + d, n, lp) * psi_minus(i - 1 - k, -n, l);
  if (n) N += double(n) * psi_plus(d, n - 1, lp) * psi_minus(0, -n - 1, l);
  cd K = spec_.sign * (diag ? N : N / (lp - l));
  return check_real(K);
}

Eigen::MatrixXd KernelEvaluator::matrix_iiks(const std::vector<double>& x) const {
  const Eigen::Index N = x.size();
  Eigen::MatrixXd R(N, N);
  for (Eigen::Index i = 0; i < N; ++i)
    for (Eigen::Index j = 0; j < N; ++j) R(i, j) = iiks(x[i], x[j], true);
  return R;
}

double pearcey_display(double tau, int n, double w, double lam, double lam_prime, double delta) {
  // 1/(2 pi i)^2 int du int dv e^{-u^4/4 + tau u^2/2 - lam' u} / e^{-v^4/4 + tau v^2/2 - lam v}
  //   ((u + w)/(v + w))^n / (u - v)
  auto [gp, gm] = kernel_contours(3, n, -w, delta, 0.0, 0.0);
  double lo = std::min(-lam, -lam_prime), hi = std::max(-lam, -lam_prime);
  std::vector<double> theta{0.0, -tau};
  QuadratureRule qp = build_quadrature(gp, integrand_envelope(3, 1, theta, lo, hi, n, -w));
  QuadratureRule qm = build_quadrature(gm, integrand_envelope(3, -1, theta, lo, hi, n, -w));
  cd acc = 0;
  for (size_t a = 0; a < qm.nodes.size(); ++a) {
    cd v = qm.nodes[a];
    cd fv = qm.weights[a] / std::exp(-std::pow(v, 4) / 4.0 + tau * v * v / 2.0 - lam * v);
    if (n) fv /= std::pow(v + w, n);
    cd inner = 0;
    for (size_t b = 0; b < qp.nodes.size(); ++b) {
      cd u = qp.nodes[b];
      cd fu = qp.weights[b] * std::exp(-std::pow(u, 4) / 4.0 + tau * u * u / 2.0 - lam_prime * u);
      if (n) fu *= std::pow(u + w, n);
      inner += fu / (u - v);
    }
    acc += fv * inner;
  }
  cd K = -1.0 * acc / (kTwoPiI * kTwoPiI);
  return K.real();
}

}  // namespace gp
