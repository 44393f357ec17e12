#include "gapprob/pderes.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "gapprob/rational.hpp"

namespace gp {

std::vector<double> central_weights(int k) {
  if (k < 0) throw std::invalid_argument("central_weights: negative order");
  if (k == 0) return {1.0};
  const int r = std::max(1, (k + 1) / 2);
  const int N = 2 * r + 1;
  // Fornberg's recursion at x0 = 0 on nodes -r..r
  std::vector<double> x(N);
  for (int i = 0; i < N; ++i) x[i] = i - r;
  std::vector<std::vector<double>> c(N, std::vector<double>(k + 1, 0.0));
  double c1 = 1.0, c4 = x[0];
  c[0][0] = 1.0;
  for (int i = 1; i < N; ++i) {
    const int mn = std::min(i, k);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i];
    for (int j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int s = mn; s >= 1; --s) c[i][s] = c1 * (s * c[i - 1][s - 1] - c5 * c[i - 1][s]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int s = mn; s >= 1; --s) c[j][s] = (c4 * c[j][s] - s * c[j][s - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(N);
  for (int i = 0; i < N; ++i) w[i] = c[i][k];
  return w;
}

ParamGrid::ParamGrid(GridFunction f, Endpoints base, double tau, double w, FDSteps steps)
    : f_(std::move(f)), base_(std::move(base)), tau_(tau), w_(w), steps_(steps) {}

Endpoints ParamGrid::endpoints_at(const Offsets& o) const {
  if (base_.empty()) return base_;
  Endpoints E = base_.dilated(std::exp(o[kDilation] * steps_.dilation)).shifted(o[kShift] * steps_.shift);
  for (size_t i = 1; i < E.a.size(); ++i)
    if (!(E.a[i] > E.a[i - 1])) throw std::domain_error("ParamGrid: endpoints lose their order on the grid");
  return E;
}

double ParamGrid::compute(const Offsets& o) const {
  return f_(endpoints_at(o), tau_ + o[kTau] * steps_.tau, w_ + o[kW] * steps_.w);
}

double ParamGrid::value(const Offsets& o) {
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = cache_.find(o);
    if (it != cache_.end()) return it->second;
  }
  double v = compute(o);
  if (!std::isfinite(v)) throw std::domain_error("ParamGrid: non-finite Q on the grid");
  std::lock_guard<std::mutex> lk(mu_);
  cache_[o] = v;
  return v;
}

std::vector<Offsets> ParamGrid::stencil_points(const Orders& orders) const {
  std::vector<Offsets> pts{{0, 0, 0, 0}};
  for (int ax = 0; ax < 4; ++ax) {
    if (orders[ax] == 0) continue;
    const int r = static_cast<int>(central_weights(orders[ax]).size() / 2);
    std::vector<Offsets> next;
    for (const auto& p : pts)
      for (int j = -r; j <= r; ++j) {
        Offsets q = p;
        q[ax] = j;
        next.push_back(q);
      }
    pts = std::move(next);
  }
  return pts;
}

double ParamGrid::fd_partial(const Orders& orders) {
  const double h[4] = {steps_.dilation, steps_.shift, steps_.tau, steps_.w};
  std::vector<std::pair<Offsets, double>> pts{{{0, 0, 0, 0}, 1.0}};
  for (int ax = 0; ax < 4; ++ax) {
    const int k = orders[ax];
    if (k < 0) throw std::invalid_argument("fd_partial: negative order");
    if (k == 0) continue;
    auto wts = central_weights(k);
    const int r = static_cast<int>(wts.size() / 2);
    const double scale = std::pow(h[ax], -k);
    std::vector<std::pair<Offsets, double>> next;
    for (const auto& [p, c] : pts)
      for (int j = -r; j <= r; ++j) {
        if (wts[j + r] == 0.0) continue;
        Offsets q = p;
        q[ax] = j;
        next.emplace_back(q, c * wts[j + r] * scale);
      }
    pts = std::move(next);
  }
  double s = 0.0;
  for (const auto& [p, c] : pts) s += c * value(p);
  return s;
}

void ParamGrid::prefetch(const std::vector<Orders>& orders, int jobs) {
  std::set<Offsets> need;
  for (const auto& o : orders)
    for (const auto& p : stencil_points(o)) need.insert(p);
  std::vector<Offsets> todo;
  {
    std::lock_guard<std::mutex> lk(mu_);
    for (const auto& p : need)
      if (!cache_.count(p)) todo.push_back(p);
  }
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(todo.size())));
  if (jobs == 1) {
    for (const auto& p : todo) value(p);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errs(jobs);
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&, t] {
      try {
        for (size_t i = t; i < todo.size(); i += jobs) value(todo[i]);
      } catch (...) {
        errs[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

void ParamGrid::dump_csv(std::ostream& os) const {
  os << "h,s,tau,w,Q\n";
  os.precision(17);
  for (const auto& [o, q] : cache_) os << o[0] << ',' << o[1] << ',' << o[2] << ',' << o[3] << ',' << q << '\n';
}

// ---------------------------------------------------------------- gap problem

KernelSpec GapProblem::spec(double tau_value, double w_value) const {
  if (preset == "airy") return airy_preset(n, w_value, delta);
  if (preset == "pearcey") return pearcey_preset(tau_value, n, w_value, delta);
  throw std::invalid_argument("unknown preset '" + preset + "' (airy | pearcey)");
}

GridFunction GapProblem::function(double lam_lo, double lam_hi) const {
  struct Cache {
    std::mutex mu;
    std::map<std::pair<double, double>, std::shared_ptr<KernelEvaluator>> ev;
  };
  auto cache = std::make_shared<Cache>();
  GapProblem self = *this;
  spec(tau, w);  // validates the preset name
  return [self, cache, lam_lo, lam_hi](const Endpoints& E, double tau_v, double w_v) {
    if (E.empty()) return 0.0;
    std::shared_ptr<KernelEvaluator> k;
    {
      std::lock_guard<std::mutex> lk(cache->mu);
      auto key = std::make_pair(tau_v, w_v);
      auto it = cache->ev.find(key);
      if (it == cache->ev.end())
        it = cache->ev.emplace(key, std::make_shared<KernelEvaluator>(self.spec(tau_v, w_v), lam_lo, lam_hi)).first;
      k = it->second;
    }
    return gap_logdet(*k, E, self.m, false).Q;
  };
}

// ---------------------------------------------------------------- residuals

namespace {

Orders atom_orders(const Atom& a, double* factor) {
  for (int i = 1; i <= static_cast<int>(a.t.size()); ++i)
    if (i != 2 && a.t_order(i) != 0)
      throw std::invalid_argument("residual: only t2 (tau = 2 t2) derivatives are sampled, got " + a.str());
  // d/dt2 = 2 d/dtau
  *factor = std::pow(2.0, a.t_order(2));
  return {a.eps, a.d, a.t_order(2), a.dw};
}

double coefficient_value(const MultiPoly& c, double tau, double w, int n) {
  std::map<std::string, double> vals;
  for (const auto& v : c.vars()) {
    if (v == "w")
      vals[v] = w;
    else if (v == "n")
      vals[v] = n;
    else if (v.size() > 1 && v[0] == 't')
      vals[v] = v == "t2" ? tau / 2 : 0.0;
    else
      throw std::invalid_argument("residual: cannot evaluate coefficient variable " + v);
  }
  return c.eval(vals);
}

std::string term_label(const DiffExpr::Mono& m, const MultiPoly& c) {
  std::string s = c.str();
  bool first = true;
  for (const auto& [a, k] : m) {
    s += first ? " * " : " ";
    first = false;
    s += "(" + a.str() + ")";
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

}  // namespace

ResidualReport residual_on_grid(const GapPDE& eq, ParamGrid& grid, double tau, double w, int n, int jobs) {
  std::vector<Orders> need;
  for (const auto& [m, c] : eq.expr.terms())
    for (const auto& [a, k] : m) {
      double f;
      need.push_back(atom_orders(a, &f));
    }
  grid.prefetch(need, jobs);
  ResidualReport r;
  r.id = eq.id;
  for (const auto& [m, c] : eq.expr.terms()) {
    double v = coefficient_value(c, tau, w, n);
    for (const auto& [a, k] : m) {
      double f = 1.0;
      Orders o = atom_orders(a, &f);
      v *= std::pow(f * grid.fd_partial(o), k);
    }
    r.terms.push_back({term_label(m, c), v});
    r.residual += v;
    r.max_term = std::max(r.max_term, std::abs(v));
  }
  r.relative = r.max_term > 0 ? std::abs(r.residual) / r.max_term : 0.0;
  r.evaluations = grid.evaluations();
  return r;
}

ResidualReport residual(const GapPDE& eq, const GridFunction& f, const Endpoints& E, double tau, double w, int n,
                        const FDSteps& steps, int levels, int jobs,
                        const std::function<void(const ParamGrid&)>& on_first_grid) {
  if (levels < 1) throw std::invalid_argument("residual: need at least one step level");
  ResidualReport out;
  int evals = 0;
  for (int l = 0; l < levels; ++l) {
    FDSteps s = steps.scaled(std::pow(0.5, l));
    ParamGrid grid(f, E, tau, w, s);
    ResidualReport r = residual_on_grid(eq, grid, tau, w, n, jobs);
    evals += r.evaluations;
    if (l == 0) {
      out = r;
      if (on_first_grid) on_first_grid(grid);
    }
    out.levels.push_back({s, r.residual, r.max_term, r.relative});
  }
  out.evaluations = evals;
  if (out.levels.size() >= 2) {
    const double a = std::abs(out.levels[0].residual), b = std::abs(out.levels[1].residual);
    out.order = (a > 0 && b > 0) ? std::log2(a / b) : (a == 0 && b == 0 ? INFINITY : 0.0);
  }
  return out;
}

ResidualReport residual(const GapPDE& eq, const GapProblem& prob, const Endpoints& E, const FDSteps& steps,
                        int levels, int jobs, const std::function<void(const ParamGrid&)>& on_first_grid) {
  if (E.empty()) {
    ResidualReport r;
    r.id = eq.id;
    for (const auto& [m, c] : eq.expr.terms()) r.terms.push_back({term_label(m, c), 0.0});
    for (int l = 0; l < levels; ++l) r.levels.push_back({steps.scaled(std::pow(0.5, l)), 0, 0, 0});
    r.order = INFINITY;
    return r;
  }
  // widest reach of any stencil: radius 3 in shift and dilation covers 6th order
  const double reach = 3 * steps.shift + (std::exp(3 * steps.dilation) - 1) * std::max(std::abs(E.lo()), std::abs(E.hi()));
  GridFunction f = prob.function(E.lo() - reach - 0.5, E.hi() + reach + 0.5);
  return residual(eq, f, E, prob.tau, prob.w, prob.n, steps, levels, jobs, on_first_grid);
}

// ---------------------------------------------------------------- Pearcey to Airy

std::string LimitResult::orientation() const {
  return std::string("window c ") + (window_sign < 0 ? "-" : "+") + " s E, Airy on " + (airy_sign < 0 ? "-E" : "E");
}

namespace {
Endpoints signed_set(const Endpoints& E, int sign) {
  Endpoints r = E;
  if (sign < 0) {
    for (double& x : r.a) x = -x;
    std::reverse(r.a.begin(), r.a.end());
  }
  return r;
}
}  // namespace

LimitResult pearcey_airy_limit(const std::vector<double>& taus, const Endpoints& E, int window_sign, int airy_sign,
                               int m, int jobs) {
  if (std::abs(window_sign) != 1 || std::abs(airy_sign) != 1) throw std::invalid_argument("signs must be +1 or -1");
  LimitResult res;
  res.window_sign = window_sign;
  res.airy_sign = airy_sign;
  const Endpoints Ew = signed_set(E, window_sign), Ea = signed_set(E, airy_sign);
  const double airy = Ea.empty() ? 1.0 : std::exp(gap_logdet(airy_preset(0, 0.0), Ea, m, false).Q);
  std::vector<LimitRow> rows(taus.size());
  std::vector<std::string> errs(taus.size());
  auto work = [&](size_t i) {
    LimitRow& r = rows[i];
    r.tau = taus[i];
    r.center = 2.0 / 27.0 * std::pow(3 * r.tau, 1.5);
    r.scale = std::pow(3 * r.tau, 1.0 / 6.0);
    r.airy_prob = airy;
    if (Ew.empty()) return;
    Endpoints W = Ew.dilated(r.scale).shifted(r.center);
    try {
      KernelSpec sp = pearcey_preset(r.tau, 0, 0.0);
      sp.c0 = std::sqrt(r.tau / 3);
      r.pearcey_prob = std::exp(gap_logdet(sp, W, m, false).Q);
      if (!(r.pearcey_prob > 0) || !std::isfinite(r.pearcey_prob)) errs[i] = "determinant underflow";
    } catch (const std::exception& e) {
      errs[i] = e.what();
    }
    r.deviation = std::abs(r.pearcey_prob / r.airy_prob - 1);
  };
  if (jobs <= 1) {
    for (size_t i = 0; i < taus.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&, t] {
        for (size_t i = t; i < taus.size(); i += jobs) work(i);
      });
    for (auto& th : pool) th.join();
  }
  for (size_t i = 0; i < taus.size(); ++i) {
    if (errs[i].empty())
      res.rows.push_back(rows[i]);
    else
      res.dropped.push_back("tau=" + std::to_string(taus[i]) + ": " + errs[i]);
  }
  res.monotone = true;
  for (size_t i = 1; i < res.rows.size(); ++i)
    if (!(res.rows[i].deviation < res.rows[i - 1].deviation)) res.monotone = false;
  std::vector<double> X, Y;
  for (const auto& r : res.rows)
    if (r.deviation > 0) {
      X.push_back(std::log(r.tau));
      Y.push_back(std::log(r.deviation));
    }
  if (X.size() >= 2) {
    const double mx = std::accumulate(X.begin(), X.end(), 0.0) / X.size();
    const double my = std::accumulate(Y.begin(), Y.end(), 0.0) / Y.size();
    double sxy = 0, sxx = 0;
    for (size_t i = 0; i < X.size(); ++i) {
      sxy += (X[i] - mx) * (Y[i] - my);
      sxx += (X[i] - mx) * (X[i] - mx);
    }
    res.exponent = sxy / sxx;
  }
  return res;
}

std::vector<LimitResult> pearcey_airy_orientations(const std::vector<double>& taus, const Endpoints& E, int m,
                                                   int jobs) {
  std::vector<LimitResult> all;
  for (int ws : {-1, 1})
    for (int as : {-1, 1}) all.push_back(pearcey_airy_limit(taus, E, ws, as, m, jobs));
  auto score = [](const LimitResult& r) {
    double last = r.rows.empty() ? INFINITY : r.rows.back().deviation;
    return std::make_pair(r.monotone ? 0 : 1, last);
  };
  std::stable_sort(all.begin(), all.end(), [&](const auto& a, const auto& b) { return score(a) < score(b); });
  return all;
}

}  // namespace gp
