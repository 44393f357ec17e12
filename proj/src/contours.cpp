#include "gapprob/contours.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gp {

void gauss_legendre(int m, std::vector<double>& x, std::vector<double>& w) {
  if (m < 1) throw std::invalid_argument("gauss_legendre: m >= 1");
  x.assign(m, 0.0);
  w.assign(m, 0.0);
  for (int i = 0; i < (m + 1) / 2; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (m + 0.5)), dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = z;
      for (int k = 2; k <= m; ++k) {
        double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (m == 1) p0 = 1, p1 = z;
      dp = m * (z * p1 - p0) / (z * z - 1);
      double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    double p0 = 1, p1 = z;
    for (int k = 2; k <= m; ++k) {
      double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = m * (z * p1 - p0) / (z * z - 1);
    x[i] = -z;
    x[m - 1 - i] = z;
    w[i] = w[m - 1 - i] = 2 / ((1 - z * z) * dp * dp);
  }
  if (m == 1) x[0] = 0, w[0] = 2;
}

RayContour standard_contours(int p, int sign, double delta) {
  if (p < 2 || p > 6) throw std::invalid_argument("standard_contours: unsupported p (2..6)");
  if (sign != 1 && sign != -1) throw std::invalid_argument("standard_contours: sign must be +-1");
  const double a = M_PI / (p + 1);
  RayContour c;
  if (sign > 0) {
    if (p == 3) {
      c.wedges.push_back({0.0, M_PI / 2, 1});
    } else {
      // left-opening C(omega^{2j}) with angle closest to pi
      int j = p / 2;
      c.wedges.push_back({-delta, 2 * j * a, 1});
    }
  } else {
    if (p == 3) {
      c.wedges.push_back({-delta, 3 * a, -1});
      c.wedges.push_back({delta, a, 1});
    } else {
      c.wedges.push_back({delta, a, 1});
    }
  }
  return c;
}

std::pair<RayContour, RayContour> kernel_contours(int p, int n, double wi, double d, double c0, double right_apex) {
  RayContour gp = standard_contours(p, 1, d), gm = standard_contours(p, -1, d);
  if (p != 3) {
    // for n > 0 the pole v = w sits inside the right-opening Gamma^-
    double m = n > 0 ? std::min(d, wi - d) : d;
    gm.wedges[0].apex = m;
    gp.wedges[0].apex = std::min(-d, m - 2 * d);
    return {gp, gm};
  }
  double left = std::min(-d, c0 - d), right = std::max(d, c0 + d), c = c0;
  if (right_apex != 0.0) right = right_apex;
  if (n > 0 && wi >= 0) {
    // pole inside the right wedge
    right = std::min(right, wi - d);
    c = std::min(c, right - d);
    left = std::min(left, c - d);
  } else if (n > 0) {
    left = std::max(left, wi + d);
    c = std::max(c, left + d);
    right = std::max(right, c + d);
  }
  gp.wedges[0].apex = c;
  gm.wedges[0].apex = left;
  gm.wedges[1].apex = right;
  return {gp, gm};
}

LogEnvelope integrand_envelope(int p, int sign, const std::vector<double>& theta, double lam_lo, double lam_hi, int n,
                               double w) {
  return [=](cd y) {
    cd V = std::pow(y, p + 1) / double(p + 1), pw = y;
    for (size_t i = 0; i < theta.size(); ++i) {
      V += theta[i] * pw / double(i + 1);
      pw *= y;
    }
    double e = -sign * V.real() + std::max(sign * lam_lo * y.real(), sign * lam_hi * y.real());
    if (n) e += sign * n * std::log(std::max(std::abs(y - w), 1e-300));
    return e;
  };
}

namespace {
double ray_radius(cd apex, cd dir, const LogEnvelope& env, double rel_tol) {
  const double dr = 0.02;
  double peak = -std::numeric_limits<double>::infinity();
  double lt = std::log(rel_tol);
  int below = 0;
  for (double r = 0; r < 200; r += dr) {
    double g = env(apex + r * dir);
    if (g > peak) peak = g;
    if (g < peak + lt) {
      if (++below > 25) return r;
    } else {
      below = 0;
    }
  }
  throw std::runtime_error("build_quadrature: integrand does not decay along a ray");
}
}  // namespace

QuadratureRule build_quadrature(const RayContour& c, const LogEnvelope& env, const QuadOptions& opt) {
  if (c.wedges.empty()) throw std::invalid_argument("build_quadrature: empty contour");
  if (!(opt.rel_tol > 0 && opt.rel_tol < 1)) throw std::invalid_argument("build_quadrature: rel_tol must be in (0,1)");
  if (opt.nodes_per_panel < 4) throw std::invalid_argument("build_quadrature: need >= 4 nodes per panel");
  std::vector<double> gx, gw;
  gauss_legendre(opt.nodes_per_panel, gx, gw);
  QuadratureRule q;
  for (const Wedge& wd : c.wedges) {
    for (int s : {-1, 1}) {
      cd dir = std::polar(1.0, s * wd.theta);
      double R = opt.radius > 0 ? opt.radius
                 : c.truncation_radius > 0 ? c.truncation_radius
                                          : ray_radius(wd.apex, dir, env, opt.rel_tol);
      q.radius = std::max(q.radius, R);
      std::vector<double> edges{0.0};
      double len = opt.first_panel;
      while (edges.back() < R) {
        double next = std::min(edges.back() + std::min(len, opt.max_panel_len), R);
        if (R - next < 0.25 * opt.first_panel) next = R;
        edges.push_back(next);
        len *= 2;
      }
      if (q.panel_edges.size() < edges.size()) q.panel_edges = edges;
      // lower ray (s=-1) traversed inward for orient +1
      double d = s * wd.orient;
      for (size_t k = 0; k + 1 < edges.size(); ++k) {
        double a = edges[k], b = edges[k + 1];
        for (int i = 0; i < opt.nodes_per_panel; ++i) {
          double r = 0.5 * (a + b) + 0.5 * (b - a) * gx[i];
          q.nodes.push_back(wd.apex + r * dir);
          q.weights.push_back(d * 0.5 * (b - a) * gw[i] * dir);
        }
      }
    }
  }
  return q;
}

double distance_to_contour(const RayContour& c, cd z) {
  double best = std::numeric_limits<double>::infinity();
  for (const Wedge& wd : c.wedges)
    for (int s : {-1, 1}) {
      cd dir = std::polar(1.0, s * wd.theta);
      cd rel = z - wd.apex;
      double t = std::max(0.0, (rel * std::conj(dir)).real());
      best = std::min(best, std::abs(rel - t * dir));
    }
  return best;
}

}  // namespace gp
