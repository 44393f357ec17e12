#pragma once
#include <string>
#include <vector>

#include "gapprob/kernel.hpp"

namespace gp {

struct Endpoints {
  std::vector<double> a;  // a1 < a2 < ... < a_{2r}
  Endpoints() = default;
  explicit Endpoints(std::vector<double> v);
  static Endpoints parse(const std::string& csv);
  bool empty() const { return a.empty(); }
  int intervals() const { return static_cast<int>(a.size() / 2); }
  Endpoints shifted(double s) const;
  Endpoints dilated(double f) const;
  double lo() const { return a.front(); }
  double hi() const { return a.back(); }
};

struct GapResult {
  double Q = 0.0;
  double det = 1.0;
  int node_count = 0;
  double error_estimate = 0.0;
};

// log det(I - K chi_E) by Nystrom with m Gauss-Legendre nodes per interval.
// The error estimate reruns with 3m/2 nodes when requested.
GapResult gap_logdet(const KernelEvaluator& k, const Endpoints& E, int m = 48, bool estimate_error = true);
GapResult gap_logdet(const KernelSpec& spec, const Endpoints& E, int m = 48, bool estimate_error = true);

// Airy-type sets [s, infinity) truncated to [s, s + M_cut]; error_estimate
// holds the change when the cut is enlarged by half.
GapResult gap_semi_infinite(const KernelSpec& spec, double s, double M_cut, int m = 48);

}  // namespace gp
