#include "gapprob/fredholm.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gp {

Endpoints::Endpoints(std::vector<double> v) : a(std::move(v)) {
  if (a.size() % 2) throw std::invalid_argument("endpoints: need an even number of values");
  for (size_t i = 1; i < a.size(); ++i)
    if (!(a[i] > a[i - 1])) throw std::invalid_argument("endpoints: must be strictly increasing");
}

Endpoints Endpoints::parse(const std::string& csv) {
  std::vector<double> v;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.find_first_not_of(" \t") == std::string::npos) continue;
    size_t used = 0;
    double x = std::stod(tok, &used);
    if (tok.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("endpoints: bad number '" + tok + "'");
    v.push_back(x);
  }
  return Endpoints(v);
}

Endpoints Endpoints::shifted(double s) const {
  Endpoints e = *this;
  for (double& x : e.a) x += s;
  return e;
}

Endpoints Endpoints::dilated(double f) const {
  if (!(f > 0)) throw std::invalid_argument("endpoints: dilation factor must be positive");
  Endpoints e = *this;
  for (double& x : e.a) x *= f;
  return e;
}

namespace {
GapResult logdet_once(const KernelEvaluator& k, const Endpoints& E, int m) {
  GapResult r;
  if (E.empty()) return r;
  std::vector<double> gx, gw;
  gauss_legendre(m, gx, gw);
  std::vector<double> x, sw;
  for (int i = 0; i < E.intervals(); ++i) {
    double a = E.a[2 * i], b = E.a[2 * i + 1];
    for (int j = 0; j < m; ++j) {
      x.push_back(0.5 * (a + b) + 0.5 * (b - a) * gx[j]);
      sw.push_back(std::sqrt(0.5 * (b - a) * gw[j]));
    }
  }
  const Eigen::Index N = x.size();
  Eigen::MatrixXd K = k.matrix(x);
  Eigen::MatrixXd M = Eigen::MatrixXd::Identity(N, N);
  for (Eigen::Index i = 0; i < N; ++i)
    for (Eigen::Index j = 0; j < N; ++j) M(i, j) -= sw[i] * K(i, j) * sw[j];
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(M);
  const Eigen::MatrixXd& U = lu.matrixLU();
  double logabs = 0;
  int sgn = lu.permutationP().determinant();
  for (Eigen::Index i = 0; i < N; ++i) {
    double d = U(i, i);
    if (d < 0) sgn = -sgn;
    logabs += std::log(std::abs(d));
  }
  if (sgn <= 0 || !std::isfinite(logabs))
    throw std::runtime_error("gap_logdet: det(I - K) <= 0; discretization too coarse or kernel misconfigured");
  r.Q = logabs;
  r.det = std::exp(logabs);
  r.node_count = static_cast<int>(N);
  return r;
}
}  // namespace

GapResult gap_logdet(const KernelEvaluator& k, const Endpoints& E, int m, bool estimate_error) {
  if (m < 8) throw std::invalid_argument("gap_logdet: m must be >= 8");
  GapResult r = logdet_once(k, E, m);
  if (estimate_error && !E.empty()) r.error_estimate = std::abs(logdet_once(k, E, (3 * m) / 2).Q - r.Q);
  return r;
}

GapResult gap_logdet(const KernelSpec& spec, const Endpoints& E, int m, bool estimate_error) {
  if (E.empty()) return {};
  KernelEvaluator k(spec, E.lo() - 0.5, E.hi() + 0.5);
  return gap_logdet(k, E, m, estimate_error);
}

GapResult gap_semi_infinite(const KernelSpec& spec, double s, double M_cut, int m) {
  if (spec.p != 2) throw std::invalid_argument("gap_semi_infinite: needs Airy-type decay (p = 2)");
  if (!(M_cut > 0)) throw std::invalid_argument("gap_semi_infinite: M_cut must be positive");
  double M2 = 1.5 * M_cut;
  KernelEvaluator k(spec, s - 0.5, s + M2 + 0.5);
  GapResult r = gap_logdet(k, Endpoints({s, s + M_cut}), m, false);
  GapResult r2 = gap_logdet(k, Endpoints({s, s + M2}), m, false);
  r.error_estimate = std::abs(r2.Q - r.Q);
  return r;
}

}  // namespace gp
