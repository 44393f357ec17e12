#include <optional>
#include <stdexcept>

#include "gapprob/algebra.hpp"
#include "gapprob/hirota.hpp"
#include "gapprob/potential.hpp"
#include "gapprob/puiseux.hpp"

namespace gp {

namespace {

using namespace pde;

DiffExpr c(const MultiPoly& x) { return DiffExpr(x); }
DiffExpr c(long long n, long long d = 1) { return DiffExpr(MultiPoly(rat(n, d))); }

struct Ctx {
  int bs = 1;
  std::optional<Rational> res_power;
  DiffExpr br(const DiffExpr& f, const DiffExpr& g) const { return c(bs) * bracket(f, g); }
};

// eps - w d_w
DiffExpr epsw(const DiffExpr& x) { return eps(x) - c(w()) * dw(x); }

// tau = 2 t2
MultiPoly tau() { return MultiPoly(2) * t(2); }
DiffExpr dtau(const DiffExpr& x, int k = 1) { return c(1, 1LL << k) * dt(2, x, k); }

DiffExpr general_y3(int p) {
  DiffExpr q = Q();
  DiffExpr e = d(q, 4) + c(6) * d(q, 2).pow(2);
  if (p == 2) return e + c(2) * d(q) - c(4) * eps(d(q));
  DiffExpr inner = c(MultiPoly(rat(3 * (p - 1), p)) * t(p - 1)) * d(d(q));
  if (p != 3) inner += dt(3, d(q));
  return e + c(3) * dt(2, q, 2) - c(4) * inner;
}

DiffExpr general_y4(int p) {
  DiffExpr q = Q();
  DiffExpr e = dt(2, d(q, 3)) + c(6) * dt(2, d(q)) * (d(q, 2) - c(MultiPoly(rat(p - 1, p)) * t(p - 1)));
  if (p == 3) return e + d(q) - c(3) * eps(d(q)) + c(MultiPoly(2) * t(2)) * d(dt(2, q));
  DiffExpr inner = c(MultiPoly(rat(4 * (p - 2), p)) * t(p - 2)) * d(d(q));
  if (p != 4) inner += dt(4, d(q));
  return e + c(2) * dt(2, dt(3, q)) - c(3) * inner;
}

DiffExpr general_y3y4(int p, const Ctx& k) {
  DiffExpr q = Q();
  DiffExpr q2 = d(q, 2);
  DiffExpr e = dt(2, q, 3) + c(2) * k.br(dt(2, d(q)), q2);
  if (p == 3) return e + eps(q2) - c(MultiPoly(2) * t(2)) * dt(2, q2) - c(2) * q2;
  e -= c(2) * dt(2, dt(3, d(q)));
  DiffExpr op = c(MultiPoly(Rational(p - 1)) * t(p - 1)) * dt(2, q2) - c(MultiPoly(Rational(2 * (p - 2))) * t(p - 2)) * d(q2);
  if (p != 4) op -= c(p, 2) * d(q2);
  return e - c(2, p) * op;
}

DiffExpr bous(const DiffExpr& U, int p, int n) {
  DiffExpr e = d(U, 4) + c(3) * dt(2, U, 2) + c(6) * d(U * U, 2);
  if (p != 3) e -= c(4) * dt(3, d(U));
  if (n > 0) e += c(4) * dw(d(U));
  return e;
}

// d_2 res_u V'(u)^q at t1 = 0
MultiPoly d2_residue(int p, const Rational& q) {
  PuiseuxSeries v = PuiseuxSeries::from_poly(solve_theta(p).vprime(), "u");
  return residue(v.pow(q, -3)).diff(tvar(2)).subs(tvar(1), MultiPoly());
}

DiffExpr y5y14(int p, const Rational& res_power) {
  DiffExpr q = Q();
  MultiPoly res = MultiPoly(rat(p, p + 2)) * d2_residue(p, res_power);
  DiffExpr e = dt(2, d(q, 2), 2) + c(2, 3) * dt(3, d(q, 3)) + c(4, 3) * dt(3, q, 2) +
               c(4) * d(q, 2) * dt(3, d(q)) + c(4) * dt(2, d(q)).pow(2) + c(2) * (dt(2, q, 2) - c(res)) * d(q, 2) -
               c(4 * (p - 1), p) * dt(3, d(q)) - c(MultiPoly(rat(16 * (p - 2), p)) * t(p - 2)) * dt(2, d(q));
  DiffExpr b = d(q) - c(4) * eps(d(q)) + c(MultiPoly(2) * t(2)) * dt(2, d(q)) + c(MultiPoly(3) * t(3)) * dt(3, d(q));
  return e + b;
}

DiffExpr build(const std::string& id, const Ctx& k) {
  DiffExpr q = Q();
  if (id == "intro4") return general_y3(2);
  if (id == "intro7" || id == "intro25")
    return d(q, 4) + c(6) * d(q, 2).pow(2) + c(2) * d(q) - c(4) * epsw(d(q)) + c(3) * dw(q, 2);
  if (id == "intro10") return d(q, 4) + c(6) * d(q, 2).pow(2) + c(12) * dtau(q, 2) - c(MultiPoly(4) * tau()) * d(q, 2);
  if (id == "intro11")
    return c(2) * dtau(d(q, 3)) + c(12) * dtau(d(q)) * (d(q, 2) - c(MultiPoly(rat(1, 3)) * tau())) + d(q) -
           c(3) * eps(d(q)) + c(MultiPoly(2) * tau()) * dtau(d(q));
  if (id == "intro12")
    return c(8) * dtau(q, 3) + c(4) * k.br(dtau(d(q)), d(q, 2)) + eps(d(q, 2)) -
           c(MultiPoly(2) * tau()) * dtau(d(q, 2)) - c(2) * d(q, 2);
  if (id == "intro13") {
    DiffExpr U = d(q, 2) - c(MultiPoly(rat(1, 2)) * tau());
    return d(U, 4) + c(12) * dtau(U, 2) + c(6) * d(U * U, 2);
  }
  if (id == "intro26")
    return d(q, 4) + c(6) * d(q, 2).pow(2) - c(MultiPoly(8) * t(2)) * d(q, 2) + c(3) * dt(2, q, 2) + c(4) * dw(d(q));
  if (id == "intro27")
    return dt(2, d(q, 3)) - c(MultiPoly(2) * t(2)) * dt(2, d(q)) - c(3) * epsw(d(q)) + d(q) +
           c(6) * d(q, 2) * dt(2, d(q)) - c(2) * dt(2, dw(q));
  if (id == "intro28")
    return epsw(d(q, 2)) - c(MultiPoly(2) * t(2)) * dt(2, d(q, 2)) - c(2) * d(q, 2) + dt(2, q, 3) +
           c(2) * k.br(dt(2, d(q)), d(q, 2)) + c(2) * dt(2, dw(d(q)));
  if (id == "intro29") return bous(d(q, 2) - c(MultiPoly(rat(2, 3)) * t(2)), 3, 1);
  auto tail = [&](const std::string& pre) -> int {
    if (id.rfind(pre, 0) != 0) return -1;
    return std::stoi(id.substr(pre.size()));
  };
  int p;
  if ((p = tail("76:p=")) >= 2) return general_y3(p);
  if ((p = tail("77:p=")) >= 3) return general_y4(p);
  if ((p = tail("78':p=")) >= 3) return general_y3y4(p, k);
  if ((p = tail("Bous:p=")) >= 3) return bous(d(q, 2) - c(MultiPoly(rat(p - 1, p)) * t(p - 1)), p, 0);
  if ((p = tail("Y5Y14:p=")) == 4) return y5y14(p, k.res_power ? *k.res_power : Rational(p + 2, 2));
  throw std::invalid_argument("unknown target '" + id + "'");
}

}  // namespace

const std::vector<TargetEntry>& target_table() {
  static const std::vector<TargetEntry> table = {
      {"intro4", PdeEquation::Y3, 2, 0, "Airy"},
      {"intro7", PdeEquation::Y3, 2, 1, "Airy with outliers"},
      {"intro10", PdeEquation::Y3, 3, 0, "Pearcey, tau = 2 t2"},
      {"intro11", PdeEquation::Y4, 3, 0, "Pearcey, tau = 2 t2"},
      {"intro12", PdeEquation::Y3Y4, 3, 0, "Pearcey, tau = 2 t2"},
      {"intro13", PdeEquation::Bous, 3, 0, "Pearcey Boussinesq form, tau = 2 t2"},
      {"intro25", PdeEquation::Y3, 2, 1, "p = 2, n > 0"},
      {"intro26", PdeEquation::Y3, 3, 1, "p = 3, n > 0"},
      {"intro27", PdeEquation::Y4, 3, 1, "p = 3, n > 0"},
      {"intro28", PdeEquation::Y3Y4, 3, 1, "p = 3, n > 0"},
      {"intro29", PdeEquation::Bous, 3, 1, "p = 3, n > 0, Boussinesq form"},
      {"76:p=2", PdeEquation::Y3, 2, 0, "general Y3"},
      {"76:p=3", PdeEquation::Y3, 3, 0, "general Y3"},
      {"76:p=4", PdeEquation::Y3, 4, 0, "general Y3"},
      {"76:p=5", PdeEquation::Y3, 5, 0, "general Y3"},
      {"77:p=3", PdeEquation::Y4, 3, 0, "general Y4"},
      {"77:p=4", PdeEquation::Y4, 4, 0, "general Y4"},
      {"78':p=3", PdeEquation::Y3Y4, 3, 0, "general d2 Y3 - d Y4"},
      {"78':p=4", PdeEquation::Y3Y4, 4, 0, "general d2 Y3 - d Y4"},
      {"Bous:p=3", PdeEquation::Bous, 3, 0, "general Boussinesq form"},
      {"Bous:p=4", PdeEquation::Bous, 4, 0, "general Boussinesq form"},
      {"Y5Y14:p=4", PdeEquation::Y5Y14, 4, 0, "Y5 - Y14 combination"},
  };
  return table;
}

std::vector<std::string> target_ids() {
  std::vector<std::string> ids;
  for (const auto& e : target_table()) ids.push_back(e.id);
  return ids;
}

GapPDE target_pde(const std::string& id, int bracket_sign) {
  Ctx k;
  k.bs = bracket_sign;
  GapPDE g;
  g.id = id;
  g.expr = build(id, k);
  for (const auto& v : g.expr.coefficient_vars()) g.params.push_back(v);
  return g;
}

MatchResult check_target(const std::string& id) {
  const TargetEntry* entry = nullptr;
  for (const auto& e : target_table())
    if (e.id == id) entry = &e;
  if (!entry) throw std::invalid_argument("unknown target '" + id + "'");
  MatchResult r;
  r.id = id;
  GapPDE derived = derive_gap_pde(entry->equation, entry->p, entry->n);
  GapPDE target = target_pde(id);
  r.derived = derived.str();
  r.target = target.str();
  r.scale = proportional(derived.expr, target.expr);
  r.match = r.scale.has_value();
  if (!r.match) r.match_flipped_bracket = proportional(derived.expr, target_pde(id, -1).expr).has_value();
  return r;
}

}  // namespace gp
