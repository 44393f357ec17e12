#pragma once
#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace gp {

using cd = std::complex<double>;

// Two rays apex + r e^{+-i theta}, r >= 0. orient = +1 runs from
// infinity along e^{-i theta} into the apex and out along e^{+i theta};
// orient = -1 is the reverse. theta = pi/2 is a vertical line.
struct Wedge {
  double apex = 0.0;
  double theta = 0.0;
  int orient = 1;
};

struct RayContour {
  std::vector<Wedge> wedges;
  double truncation_radius = 0.0;  // 0: choose from the envelope
};

struct QuadOptions {
  int nodes_per_panel = 16;
  double first_panel = 0.25;
  double max_panel_len = 1.0;
  double rel_tol = 1e-16;
  double radius = 0.0;  // overrides the envelope search when > 0
};

struct QuadratureRule {
  std::vector<cd> nodes;
  std::vector<cd> weights;  // dz, direction included
  std::vector<double> panel_edges;  // radial panel boundaries (shared by all rays)
  double radius = 0.0;
};

// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int m, std::vector<double>& x, std::vector<double>& w);

// Ray contours for the integrand exp(-+ y^{p+1}/(p+1) ...).
// sign = +1: Gamma^+, sign = -1: Gamma^-. delta is the apex offset.
RayContour standard_contours(int p, int sign, double delta = 0.25);

// Non-crossing (Gamma^+, Gamma^-) pair for the double integral. For n > 0 the
// pole at wi lies inside the part of Gamma^- on its side of the real axis.
std::pair<RayContour, RayContour> kernel_contours(int p, int n, double wi, double delta, double c0 = 0.0,
                                                  double right_apex = 0.0);
// log|integrand| bound along the contour, used to truncate rays.
using LogEnvelope = std::function<double(cd)>;

QuadratureRule build_quadrature(const RayContour& c, const LogEnvelope& env, const QuadOptions& opt = {});

// Envelope of exp(-+V(y) +- lam*y) (y-w)^{+-n} over lam in [lam_lo, lam_hi];
// theta holds the numeric lower coefficients of V'.
LogEnvelope integrand_envelope(int p, int sign, const std::vector<double>& theta, double lam_lo, double lam_hi,
                               int n = 0, double w = 0.0);

// Distance from a point to the contour (for pole checks).
double distance_to_contour(const RayContour& c, cd z);

}  // namespace gp
