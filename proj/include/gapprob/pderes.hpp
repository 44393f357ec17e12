#pragma once
#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <ostream>
#include <string>
#include <vector>

#include "gapprob/fredholm.hpp"
#include "gapprob/hirota.hpp"

namespace gp {

struct FDSteps {
  double shift = 0.05;
  double dilation = 0.02;
  double tau = 0.05;
  double w = 0.05;
  FDSteps scaled(double f) const { return {shift * f, dilation * f, tau * f, w * f}; }
};

// Axes of a parameter grid: dilation h (E -> e^h E), shift s (E -> E + s), tau, w.
enum Axis { kDilation = 0, kShift = 1, kTau = 2, kW = 3 };
using Offsets = std::array<int, 4>;
using Orders = std::array<int, 4>;

// Q(E; tau, w) for the grid to sample
using GridFunction = std::function<double(const Endpoints&, double tau, double w)>;

// Central finite-difference weights for the k-th derivative, accuracy order 2,
// on offsets -r..r with r = max(1, ceil(k/2)).
std::vector<double> central_weights(int k);

class ParamGrid {
 public:
  ParamGrid(GridFunction f, Endpoints base, double tau, double w, FDSteps steps);

  // d^k / (dh^a ds^b dtau^c dw^e) of Q(e^h E + s; tau, w) at 0
  double fd_partial(const Orders& orders);
  // Evaluate every point the listed partials need, using up to jobs threads.
  void prefetch(const std::vector<Orders>& orders, int jobs = 1);
  std::vector<Offsets> stencil_points(const Orders& orders) const;

  Endpoints endpoints_at(const Offsets& o) const;
  double value(const Offsets& o);
  int evaluations() const { return static_cast<int>(cache_.size()); }
  const FDSteps& steps() const { return steps_; }
  // columns: h, s, tau, w offsets (integers), Q
  void dump_csv(std::ostream& os) const;

 private:
  GridFunction f_;
  Endpoints base_;
  double tau_, w_;
  FDSteps steps_;
  std::map<Offsets, double> cache_;
  std::mutex mu_;
  double compute(const Offsets& o) const;
};

// Gap problem on a named preset with Q evaluated by the Fredholm pipeline.
struct GapProblem {
  std::string preset = "airy";  // airy | pearcey
  int n = 0;
  double w = 0.5;
  double tau = 1.0;
  int m = 48;
  double delta = 0.25;
  int p() const { return preset == "pearcey" ? 3 : 2; }
  KernelSpec spec(double tau_value, double w_value) const;
  // Q(E; tau, w); one quadrature envelope [lam_lo, lam_hi] for every point
  GridFunction function(double lam_lo, double lam_hi) const;
};

struct TermValue {
  std::string term;
  double value = 0.0;
};

struct ResidualLevel {
  FDSteps steps;
  double residual = 0.0;
  double max_term = 0.0;
  double relative = 0.0;
};

struct ResidualReport {
  std::string id;
  double residual = 0.0;
  double max_term = 0.0;
  double relative = 0.0;  // |residual| / max_term
  std::vector<TermValue> terms;
  std::vector<ResidualLevel> levels;  // levels[0] is the reported one
  double order = 0.0;                 // log2 of successive residual ratios, first pair
  int evaluations = 0;
};

// Coefficients use t2 = tau / 2, t_i = 0 otherwise.
ResidualReport residual_on_grid(const GapPDE& eq, ParamGrid& grid, double tau, double w, int n, int jobs = 1);
// Residual at steps, steps/2, ... (levels >= 2); the report carries the first level.
ResidualReport residual(const GapPDE& eq, const GapProblem& prob, const Endpoints& E, const FDSteps& steps,
                        int levels = 2, int jobs = 1, const std::function<void(const ParamGrid&)>& on_first_grid = {});
// same with a caller-provided Q
ResidualReport residual(const GapPDE& eq, const GridFunction& f, const Endpoints& E, double tau, double w, int n,
                        const FDSteps& steps, int levels = 2, int jobs = 1,
                        const std::function<void(const ParamGrid&)>& on_first_grid = {});

struct LimitRow {
  double tau = 0.0;
  double center = 0.0;
  double scale = 0.0;
  double pearcey_prob = 1.0;
  double airy_prob = 1.0;
  double deviation = 0.0;  // |P_pearcey / P_airy - 1|
};

struct LimitResult {
  int window_sign = -1;  // Pearcey window center + scale * (window_sign E)
  int airy_sign = -1;    // Airy gap on airy_sign E
  std::vector<LimitRow> rows;
  double exponent = 0.0;  // least-squares slope of log deviation against log tau
  bool monotone = false;
  std::vector<std::string> dropped;
  std::string orientation() const;
};

// Displayed convention: both signs -1. The Gamma^+ line runs through the
// merging saddle at sqrt(tau/3) so that large windows stay well conditioned.
LimitResult pearcey_airy_limit(const std::vector<double>& taus, const Endpoints& E, int window_sign = -1,
                               int airy_sign = -1, int m = 48, int jobs = 1);
// All four sign choices; the first entry is the one with monotone decay and
// the smallest final deviation.
std::vector<LimitResult> pearcey_airy_orientations(const std::vector<double>& taus, const Endpoints& E, int m = 48,
                                                   int jobs = 1);

}  // namespace gp
