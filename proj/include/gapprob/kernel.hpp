#pragma once
#include <Eigen/Dense>
#include <string>
#include <vector>

#include "gapprob/contours.hpp"

namespace gp {

struct KernelSpec {
  std::string name = "generic";
  int p = 2;
  int n = 0;
  double w = 0.0;          // as seen by the caller
  std::vector<double> t;   // t1..t_{p-1}
  double delta = 0.25;
  double c0 = 0.0;         // real part of the p = 3 vertical Gamma^+ line
  double right_apex = 0.0; // p = 3 right Gamma^- apex override (0: default)
  double sign = -1.0;      // global orientation convention
  bool negate_args = false;  // evaluate at (-lam, -lam'; -w)
  QuadOptions quad;
  RayContour gplus, gminus;  // empty: built from the fields above
};

KernelSpec make_kernel_spec(int p, int n, double w, const std::vector<double>& t, double delta = 0.25);
KernelSpec airy_preset(int n, double w, double delta = 0.25);
KernelSpec pearcey_preset(double tau, int n, double w, double delta = 0.25);

// Direct evaluation of the Pearcey double-integral display (no argument
// mapping), independent of the generic code path.
double pearcey_display(double tau, int n, double w, double lam, double lam_prime, double delta = 0.25);

class KernelEvaluator {
 public:
  // Arguments (in caller coordinates) are expected inside [lam_lo, lam_hi].
  KernelEvaluator(const KernelSpec& spec, double lam_lo = -4, double lam_hi = 4);

  double double_integral(double lam, double lam_prime) const;
  double iiks(double lam, double lam_prime, bool diagonal_mode = false) const;
  // K(x_i, x_j) via the double integral, assembled with matrix products.
  Eigen::MatrixXd matrix(const std::vector<double>& x) const;
  Eigen::MatrixXd matrix_iiks(const std::vector<double>& x) const;

  const KernelSpec& spec() const { return spec_; }
  const QuadratureRule& rule_plus() const { return qp_; }
  const QuadratureRule& rule_minus() const { return qm_; }
  double internal_w() const { return wi_; }

 private:
  KernelSpec spec_;
  std::vector<double> theta_;
  double wi_;
  QuadratureRule qp_, qm_;
  Eigen::VectorXcd Vp_, Vm_;  // V at the nodes
  Eigen::MatrixXcd C_;        // 1/(u - v), v rows

  double to_internal(double x) const { return spec_.negate_args ? -x : x; }
  double check_real(cd z) const;
  // (1/2 pi i) sum over Gamma^+ of u^k (u-w)^m e^{-V(u) + l u}
  cd psi_plus(int k, int m, double l) const;
  cd psi_minus(int k, int m, double l) const;
};

}  // namespace gp
