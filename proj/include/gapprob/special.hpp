#pragma once
#include <complex>
#include <vector>

#include "gapprob/contours.hpp"

namespace gp {

struct PhiSpec {
  int p = 2;
  int sign = 1;  // +1 or -1
  int n = 0;
  double w = 0.0;
  std::vector<double> t;  // t1..t_{p-1}; empty means all zero
  RayContour contour;     // empty: default contour for (p, sign, n, w)
  QuadOptions quad;
  double delta = 0.25;
};

// Prefactors of the building-block integrals (exact values for p = 2, 3, 4).
cd phi_prefactor(int p, int sign);
// Default contour, keeping the pole y = w off Gamma^- when n > 0.
RayContour phi_contour(int p, int sign, int n, double w, double delta);

class PhiEvaluator {
 public:
  // [u_lo, u_hi] bounds the real arguments the rule must cover.
  PhiEvaluator(const PhiSpec& spec, double u_lo = -4, double u_hi = 4);
  cd value(cd u) const;
  // prefactor * int q(y) (y-w)^{+-n} e^{-+V(y) +- u y} dy, q given by coefficients
  cd moment(cd u, const std::vector<cd>& q) const;
  // ((+-d/du - w)((+-d/du)^p - u) - n) Phi, derivatives as integrand factors
  cd ode_residual(cd u) const;
  // same operator with central finite differences of step h in u
  cd ode_residual_fd(cd u, double h) const;
  const QuadratureRule& rule() const { return rule_; }
  const PhiSpec& spec() const { return spec_; }

 private:
  PhiSpec spec_;
  std::vector<double> theta_;
  QuadratureRule rule_;
  cd integrand(cd y, cd u) const;
};

// Psi^{+-}(x, t; z) per the wave-function formula with the e^{+-P(t)} phase.
// The contour of `spec` should pass close to the saddle y = z.
cd wave_psi(const PhiSpec& spec, double x, const std::vector<double>& t, cd z);
// D^k applied to Psi is the integrand factor y^k; q holds polynomial coefficients.
cd wave_psi_apply(const PhiSpec& spec, double x, const std::vector<double>& t, cd z, const std::vector<cd>& q);

// Power-series Airy oracle, accurate for |x| <= 6.
void airy_series(double x, double& ai, double& aip);

}  // namespace gp
