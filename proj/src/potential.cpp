#include "gapprob/potential.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "gapprob/algebra.hpp"

namespace gp {

namespace {
std::string thvar(int i) { return "theta" + std::to_string(i); }

MultiPoly vprime_symbolic(int p) {
  MultiPoly v = MultiPoly::var("u", p);
  for (int i = 0; i <= p - 2; ++i) v += MultiPoly::var(thvar(i)) * MultiPoly::var("u", i);
  return v;
}
}  // namespace

std::map<std::string, int> t_weights(int p) {
  std::map<std::string, int> w;
  for (int m = 1; m <= p; ++m) w[tvar(m)] = p + 1 - m;
  return w;
}

MultiPoly PotentialVp::vprime() const {
  MultiPoly v = MultiPoly::var("u", p);
  for (int i = 0; i <= p - 2; ++i) v += theta[i] * MultiPoly::var("u", i);
  return v;
}

std::vector<double> PotentialVp::theta_at(const std::vector<double>& t) const {
  std::map<std::string, double> vals;
  for (int i = 1; i <= p - 1; ++i) vals[tvar(i)] = i - 1 < static_cast<int>(t.size()) ? t[i - 1] : 0.0;
  std::vector<double> out;
  for (auto& th : theta) out.push_back(th.eval(vals));
  return out;
}

PotentialVp solve_theta(int p) {
  if (p < 2) throw std::invalid_argument("solve_theta: p must be >= 2");
  static std::mutex mu;
  static std::map<int, PotentialVp> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
  }
  PuiseuxSeries u = puiseux_revert(vprime_symbolic(p), "u", -(2 * p - 1));
  PotentialVp pot;
  pot.p = p;
  pot.theta.assign(p - 1, MultiPoly());
  for (int j = 1; j <= p - 1; ++j) {
    int k = p - 1 - j;  // the new theta entering at w^{-j/p}
    MultiPoly c = u.coeff(-j);
    for (int i = k + 1; i <= p - 2; ++i) c = c.subs(thvar(i), pot.theta[i]);
    MultiPoly rest = c + MultiPoly(Rational(1, p)) * MultiPoly::var(thvar(k));
    if (rest.degree(thvar(k)) != 0 || !(c.coeff(thvar(k), 1) == MultiPoly(Rational(-1, p))))
      throw std::logic_error("solve_theta: system not triangular");
    MultiPoly target = MultiPoly(Rational(p - j, p)) * MultiPoly::var(tvar(p - j));
    pot.theta[k] = MultiPoly(Rational(p)) * (rest - target);
  }
  std::lock_guard<std::mutex> lock(mu);
  cache[p] = pot;
  return pot;
}

std::vector<MultiPoly> topological_tau_gradient(int p) {
  PotentialVp pot = solve_theta(p);
  PuiseuxSeries v = PuiseuxSeries::from_poly(pot.vprime(), "u");
  std::vector<MultiPoly> grad;
  for (int i = 1; i <= p - 1; ++i) {
    // two levels past u^{-1} as a guard band
    PuiseuxSeries s = v.pow(Rational(p + i, p), -3);
    grad.push_back(MultiPoly(Rational(-p, p + i)) * residue(s));
  }
  return grad;
}

MultiPoly topological_tau_log(int p) {
  std::vector<std::string> vars;
  for (int i = 1; i <= p - 1; ++i) vars.push_back(tvar(i));
  return integrate_gradient(vars, topological_tau_gradient(p));
}

bool consistency_71_72(int p) {
  PotentialVp pot = solve_theta(p);
  MultiPoly f = topological_tau_log(p);
  PuiseuxSeries v = PuiseuxSeries::from_poly(pot.vprime(), "u");
  for (int i = 1; i <= p - 1; ++i) {
    MultiPoly lhs = f.diff(tvar(1)).diff(tvar(i));
    MultiPoly rhs = residue(v.pow(Rational(i, p), -3));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

MultiPoly phase_polynomial(int p) {
  PotentialVp pot = solve_theta(p);
  PuiseuxSeries v = PuiseuxSeries::from_poly(pot.vprime(), "u");
  std::vector<std::string> vars;
  std::vector<MultiPoly> b;
  for (int i = 1; i <= p - 1; ++i) {
    vars.push_back(tvar(i));
    b.push_back(v.pow(Rational(i, p), -1).coeff(0));
  }
  return integrate_gradient(vars, b);
}

std::complex<double> NumericPotential::V_lower(std::complex<double> u) const {
  std::complex<double> s = 0, pw = u;
  for (int i = 0; i <= p - 2; ++i) {
    s += theta[i] * pw / double(i + 1);
    pw *= u;
  }
  return s;
}

std::complex<double> NumericPotential::V(std::complex<double> u) const {
  return std::pow(u, p + 1) / double(p + 1) + V_lower(u);
}

NumericPotential numeric_potential(int p, const std::vector<double>& t) {
  NumericPotential np;
  np.p = p;
  np.theta = solve_theta(p).theta_at(t);
  return np;
}

}  // namespace gp
