#pragma once
#include <complex>
#include <vector>

#include "gapprob/multipoly.hpp"

namespace gp {

struct PotentialVp {
  int p = 2;
  std::vector<MultiPoly> theta;  // theta_0 .. theta_{p-2} in t1..t_{p-1}

  MultiPoly vprime() const;  // V'(u) with symbolic theta(t)
  // theta values at numeric t = (t1..t_{p-1})
  std::vector<double> theta_at(const std::vector<double>& t) const;
};

PotentialVp solve_theta(int p);
MultiPoly topological_tau_log(int p);
bool consistency_71_72(int p);
MultiPoly phase_polynomial(int p);
// d log tau0 / dt_i from the residue formula, i = 1..p-1
std::vector<MultiPoly> topological_tau_gradient(int p);
// weight(t_m) = p+1-m
std::map<std::string, int> t_weights(int p);

// Numeric potential V(u) = u^{p+1}/(p+1) + sum theta_i u^{i+1}/(i+1).
struct NumericPotential {
  int p = 2;
  std::vector<double> theta;
  std::complex<double> V(std::complex<double> u) const;
  // V(u) - u^{p+1}/(p+1)
  std::complex<double> V_lower(std::complex<double> u) const;
};

NumericPotential numeric_potential(int p, const std::vector<double>& t);

}  // namespace gp
