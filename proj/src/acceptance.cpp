#include "gapprob/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>

#include "gapprob/algebra.hpp"
#include "gapprob/fredholm.hpp"
#include "gapprob/hirota.hpp"
#include "gapprob/kernel.hpp"
#include "gapprob/pderes.hpp"
#include "gapprob/potential.hpp"

namespace gp {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Warn: return "WARN";
  }
  return "?";
}

std::string verdict_line(const CriterionResult& r) {
  return to_string(r.verdict) + " " + std::to_string(r.id) + " " + r.name + ": " + r.summary;
}

int acceptance_status(const std::vector<CriterionResult>& rs) {
  for (const auto& r : rs)
    if (r.verdict == Verdict::Fail) return 1;
  return 0;
}

namespace {

std::string fmt(double x, int prec = 3) {
  std::ostringstream os;
  os << std::setprecision(prec) << x;
  return os.str();
}

MultiPoly tv(int i) { return MultiPoly::var(tvar(i)); }
MultiPoly q(long a, long b = 1) { return MultiPoly(rat(a, b)); }

void theta_check(CriterionResult& r) {
  int bad = 0;
  for (int p = 2; p <= 6; ++p) {
    auto th = solve_theta(p).theta;
    bool ok = th[p - 2] == q(-(p - 1)) * tv(p - 1);
    if (p >= 3) ok = ok && th[p - 3] == q(-(p - 2)) * tv(p - 2);
    if (p >= 4) ok = ok && th[p - 4] == q(p - 3) * (-tv(p - 3) + q((p - 1) * (p - 1), 2 * p) * tv(p - 1).pow(2));
    r.details.push_back("p=" + std::to_string(p) + " theta_{p-2..}: " + (ok ? "exact" : "MISMATCH"));
    if (!ok) ++bad;
  }
  const bool v2 = solve_theta(2).vprime() == MultiPoly::var("u").pow(2) - tv(1);
  const bool v3 = solve_theta(3).vprime() == MultiPoly::var("u").pow(3) - q(2) * tv(2) * MultiPoly::var("u") - tv(1);
  r.details.push_back(std::string("V2' = u^2 - t1: ") + (v2 ? "exact" : "MISMATCH"));
  r.details.push_back(std::string("V3' = u^3 - 2 t2 u - t1: ") + (v3 ? "exact" : "MISMATCH"));
  r.verdict = bad == 0 && v2 && v3 ? Verdict::Pass : Verdict::Fail;
  r.summary = "closed forms for p=2..6 and V2, V3 " + std::string(r.verdict == Verdict::Pass ? "exact" : "differ");
}

void tau_check(CriterionResult& r) {
  const std::string s2 = topological_tau_log(2).str(), s3 = topological_tau_log(3).str();
  const bool ok2 = s2 == "-1/12*t1^3", ok3 = s3 == "-1/3*t1^2*t2 - 2/27*t2^4";
  MultiPoly f4 = topological_tau_log(4);
  MultiPoly printed = q(-3, 8) * tv(1).pow(2) * tv(3) - q(1, 2) * tv(1) * tv(2).pow(2) - q(9, 16) * tv(2).pow(2) * tv(3).pow(2);
  MultiPoly last = f4 - printed;
  bool hom = false;
  const int wd = last.is_zero() ? -1 : last.weighted_degree(t_weights(4), &hom);
  const bool ok4 = last.terms().size() == 1 && hom && wd == 10;
  r.details.push_back("p=2: " + s2);
  r.details.push_back("p=3: " + s3);
  r.details.push_back("p=4: " + f4.str());
  r.details.push_back("p=4 flagged last term: printed -81/1280*t3^3, computed " + last.str() +
                      " (weighted degree " + std::to_string(wd) + (hom ? ", quasi-homogeneous)" : ", not homogeneous)"));
  r.verdict = ok2 && ok3 && ok4 ? Verdict::Pass : Verdict::Fail;
  r.summary = std::string("p=2,3 exact; p=4 printed terms ") + (ok4 ? "exact" : "differ") + ", last term " + last.str();
}

void hirota_table_check(CriterionResult& r) {
  int ok = 0;
  auto rows = hirota_table();
  for (const auto& row : rows) {
    if (row.ok()) ++ok;
    r.details.push_back(row.label + " <- " + row.computed_from + ": operator x" +
                        (row.op_scale ? to_string(*row.op_scale) : std::string("none")) + ", log form x" +
                        (row.log_scale ? to_string(*row.log_scale) : std::string("none")));
  }
  r.verdict = ok == static_cast<int>(rows.size()) && rows.size() == 5 ? Verdict::Pass : Verdict::Fail;
  r.summary = std::to_string(ok) + "/" + std::to_string(rows.size()) +
              " rows reproduced up to constants (Y_{1,4} rows read as the raw y1 y4 coefficient)";
}

void schur_check(CriterionResult& r) {
  int checked = 0;
  auto fails = schur_tau_check(5, &checked);
  r.details = fails;
  r.verdict = fails.empty() ? Verdict::Pass : Verdict::Fail;
  r.summary = std::to_string(checked) + " (operator, partition) pairs with |lambda| <= 5, " +
              std::to_string(fails.size()) + " nonzero";
}

void derivation_check(CriterionResult& r) {
  const std::vector<std::string> ids{"intro4",  "intro10", "intro11", "intro12", "intro13", "intro29",
                                     "intro25", "intro26", "intro27", "intro28"};
  std::vector<std::string> miss;
  for (const auto& id : ids) {
    MatchResult m = check_target(id);
    std::string line = id + ": ";
    if (m.match) {
      line += "MATCH (derived = " + to_string(*m.scale) + " x printed)";
    } else {
      miss.push_back(id);
      line += "MISMATCH";
      if (m.match_flipped_bracket) line += " (matches with the bracket sign reversed)";
      if (id == "intro13") {
        auto bous = derive_gap_pde(PdeEquation::Bous, 3, 0);
        line += " (derived Boussinesq form uses U = d^2 Q - tau/3: " + bous.str() + ")";
      }
    }
    r.details.push_back(line);
  }
  r.verdict = miss.empty() ? Verdict::Pass : Verdict::Fail;
  std::string s = std::to_string(ids.size() - miss.size()) + "/" + std::to_string(ids.size()) + " match";
  if (!miss.empty()) {
    s += "; mismatched:";
    for (const auto& m : miss) s += " " + m;
  }
  r.summary = s;
}

void kernel_check(CriterionResult& r) {
  struct Cfg {
    int p, n;
    double w;
  };
  const std::vector<Cfg> cfgs{{2, 0, 0.0}, {2, 1, 0.5}, {3, 0, 0.0}, {3, 1, 0.5}};
  double worst_all = 0;
  for (const auto& c : cfgs) {
    KernelSpec s = c.p == 2 ? airy_preset(c.n, c.w) : pearcey_preset(1.0, c.n, c.w);
    KernelEvaluator k(s, -2.5, 2.5);
    double worst = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        const double x = -2 + i, y = -2 + j;
        const double a = k.double_integral(x, y), b = k.iiks(x, y, i == j);
        worst = std::max(worst, std::abs(a - b) / std::max(std::abs(b), 1e-300));
      }
    worst_all = std::max(worst_all, worst);
    r.details.push_back("p=" + std::to_string(c.p) + " n=" + std::to_string(c.n) + " w=" + fmt(c.w) +
                        ": max rel diff " + fmt(worst));
  }
  r.verdict = worst_all < 1e-7 ? Verdict::Pass : Verdict::Fail;
  r.summary = "double integral vs IIKS on 5x5 grid in [-2,2]^2, worst rel " + fmt(worst_all);
}

void fredholm_check(CriterionResult& r) {
  const double da = std::abs(gap_logdet(airy_preset(0, 0.0), Endpoints({-2, 2}), 40, false).Q -
                             gap_logdet(airy_preset(0, 0.0), Endpoints({-2, 2}), 80, false).Q);
  const double dp = std::abs(gap_logdet(pearcey_preset(1.0, 0, 0.0), Endpoints({-1, 1}), 40, false).Q -
                             gap_logdet(pearcey_preset(1.0, 0, 0.0), Endpoints({-1, 1}), 80, false).Q);
  r.details.push_back("Airy [-2,2] m=40 vs 80: |dQ| = " + fmt(da));
  r.details.push_back("Pearcey tau=1 [-1,1] m=40 vs 80: |dQ| = " + fmt(dp));
  r.verdict = da < 1e-10 && dp < 1e-9 ? Verdict::Pass : Verdict::Fail;
  r.summary = "Airy |dQ| " + fmt(da) + ", Pearcey |dQ| " + fmt(dp);
}

void residual_check(CriterionResult& r, int jobs) {
  struct Cfg {
    std::string id, preset;
    int n;
    double w;
  };
  const std::vector<Cfg> cfgs{{"intro4", "airy", 0, 0.0},     {"intro7", "airy", 1, 0.5},
                              {"intro10", "pearcey", 0, 0.0}, {"intro12", "pearcey", 0, 0.0},
                              {"intro26", "pearcey", 1, 0.5}, {"intro28", "pearcey", 1, 0.5}};
  std::vector<std::string> failed;
  for (const auto& c : cfgs) {
    GapProblem pr;
    pr.preset = c.preset;
    pr.n = c.n;
    pr.w = c.w;
    pr.tau = 1.0;
    auto rep = residual(target_pde(c.id), pr, Endpoints({-1, 1}), FDSteps{}, 2, jobs);
    const bool ok = rep.relative < 1e-2 && rep.order >= 1.5;
    if (!ok) failed.push_back(c.id);
    std::string line = c.id + " (" + c.preset + ", n=" + std::to_string(c.n) + "): rel " + fmt(rep.relative) +
                       " -> " + fmt(rep.levels[1].relative) + ", order " + fmt(rep.order) + (ok ? "" : "  FAIL");
    if (!ok) {
      auto flip = residual(target_pde(c.id, -1), pr, Endpoints({-1, 1}), FDSteps{}, 2, jobs);
      line += "; with the bracket sign reversed: rel " + fmt(flip.relative) + ", order " + fmt(flip.order);
    }
    r.details.push_back(line);
  }
  r.verdict = failed.empty() ? Verdict::Pass : Verdict::Fail;
  std::string s = std::to_string(cfgs.size() - failed.size()) + "/" + std::to_string(cfgs.size()) +
                  " equations below 1e-2 with order >= 1.5";
  if (!failed.empty()) {
    s += "; failing:";
    for (const auto& f : failed) s += " " + f;
  }
  r.summary = s;
}

void limit_check(CriterionResult& r, int jobs) {
  const std::vector<double> taus{4, 8, 16};
  auto all = pearcey_airy_orientations(taus, Endpoints({0, 1}), 48, jobs);
  auto table = [&](const LimitResult& lr) {
    r.details.push_back(lr.orientation() + ": exponent " + fmt(lr.exponent) + (lr.monotone ? ", monotone" : ", not monotone"));
    for (const auto& row : lr.rows)
      r.details.push_back("  tau=" + fmt(row.tau) + " P_pearcey=" + fmt(row.pearcey_prob, 10) + " P_airy=" +
                          fmt(row.airy_prob, 10) + " deviation=" + fmt(row.deviation));
    for (const auto& d : lr.dropped) r.details.push_back("  dropped " + d);
  };
  const LimitResult& best = all.front();
  const LimitResult* shown = nullptr;
  for (const auto& lr : all)
    if (lr.window_sign == -1 && lr.airy_sign == -1) shown = &lr;
  table(best);
  if (shown && shown != &best) table(*shown);
  const bool ok = best.monotone && best.rows.size() == taus.size() && best.exponent >= -2.0 && best.exponent <= -0.8;
  r.verdict = ok ? Verdict::Pass : Verdict::Warn;
  r.summary = "orientation " + best.orientation() + ": exponent " + fmt(best.exponent) +
              (best.monotone ? ", monotone" : ", not monotone") +
              (shown && shown != &best ? "; displayed orientation exponent " + fmt(shown->exponent) : "");
}

void sanity_check(CriterionResult& r) {
  struct Cfg {
    std::string label;
    KernelSpec spec;
    std::vector<Endpoints> family;  // nested, increasing
  };
  auto nested = [](double c, const std::vector<double>& radii) {
    std::vector<Endpoints> f;
    for (double a : radii) f.push_back(Endpoints({c - a, c + a}));
    return f;
  };
  std::vector<Cfg> cfgs;
  const std::vector<double> radii{0.25, 0.5, 1.0, 1.5};
  for (double c : {-1.0, 0.0, 1.0}) cfgs.push_back({"airy c=" + fmt(c), airy_preset(0, 0.0), nested(c, radii)});
  for (double c : {-0.5, 0.5}) cfgs.push_back({"airy n=1 w=1/2 c=" + fmt(c), airy_preset(1, 0.5), nested(c, radii)});
  for (double tau : {0.0, 1.0, 2.0})
    cfgs.push_back({"pearcey tau=" + fmt(tau), pearcey_preset(tau, 0, 0.0), nested(0.0, radii)});
  cfgs.push_back({"pearcey tau=1 c=-1.2", pearcey_preset(1.0, 0, 0.0), nested(-1.2, radii)});
  cfgs.push_back({"pearcey tau=1 c=0.7", pearcey_preset(1.0, 0, 0.0), nested(0.7, radii)});
  cfgs.push_back({"pearcey n=1 w=1/2", pearcey_preset(1.0, 1, 0.5), nested(0.0, radii)});
  // two-interval families grown on both components
  auto two = [](double g, const std::vector<double>& ext) {
    std::vector<Endpoints> f;
    for (double e : ext) f.push_back(Endpoints({-g - e, -g, g, g + e}));
    return f;
  };
  const std::vector<double> ext{0.2, 0.4, 0.8, 1.2};
  for (double g : {0.2, 0.6}) {
    cfgs.push_back({"airy two intervals g=" + fmt(g), airy_preset(0, 0.0), two(g, ext)});
    cfgs.push_back({"pearcey two intervals g=" + fmt(g), pearcey_preset(1.0, 0, 0.0), two(g, ext)});
  }
  cfgs.push_back({"airy semi-infinite proxies", airy_preset(0, 0.0),
                  {Endpoints({1, 9}), Endpoints({0, 9}), Endpoints({-1, 9}), Endpoints({-2, 9})}});
  cfgs.push_back({"airy n=1 w=1/2 two intervals", airy_preset(1, 0.5), two(0.4, ext)});
  cfgs.push_back({"pearcey n=1 w=1/2 c=-0.5", pearcey_preset(1.0, 1, 0.5), nested(-0.5, radii)});
  cfgs.push_back({"pearcey tau=-1", pearcey_preset(-1.0, 0, 0.0), nested(0.0, radii)});
  cfgs.push_back({"airy n=1 w=1 c=0", airy_preset(1, 1.0), nested(0.0, radii)});
  int bad = 0;
  for (const auto& c : cfgs) {
    double prev = 0.0;
    bool ok = true;
    std::string vals;
    for (const auto& E : c.family) {
      GapResult g;
      try {
        g = gap_logdet(c.spec, E, 48, false);
      } catch (const std::exception& e) {
        ok = false;
        vals += std::string(" error: ") + e.what();
        break;
      }
      if (!(g.det > 0 && g.det <= 1 + 1e-14) || g.Q > prev + 1e-14) ok = false;
      prev = g.Q;
      vals += " " + fmt(g.det, 6);
    }
    if (!ok) ++bad;
    r.details.push_back(c.label + ": det" + vals + (ok ? "" : "  FAIL"));
  }
  r.verdict = bad == 0 && cfgs.size() == 20 ? Verdict::Pass : Verdict::Fail;
  r.summary = std::to_string(cfgs.size() - bad) + "/" + std::to_string(cfgs.size()) +
              " nested families with det in (0,1] and decreasing";
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::vector<int>& only, int jobs, std::ostream* log) {
  struct Entry {
    int id;
    std::string name;
    std::function<void(CriterionResult&)> run;
  };
  const std::vector<Entry> all{
      {1, "theta inversion", theta_check},
      {2, "topological tau", tau_check},
      {3, "Hirota tables", hirota_table_check},
      {4, "Schur tau property", schur_check},
      {5, "derivation engine", derivation_check},
      {6, "kernel representations", kernel_check},
      {7, "Fredholm convergence", fredholm_check},
      {8, "PDE residuals", [jobs](CriterionResult& r) { residual_check(r, jobs); }},
      {9, "Pearcey to Airy", [jobs](CriterionResult& r) { limit_check(r, jobs); }},
      {10, "probability sanity", sanity_check},
  };
  std::vector<CriterionResult> out;
  for (const auto& e : all) {
    if (!only.empty() && std::find(only.begin(), only.end(), e.id) == only.end()) continue;
    CriterionResult r;
    r.id = e.id;
    r.name = e.name;
    auto t0 = std::chrono::steady_clock::now();
    try {
      e.run(r);
    } catch (const std::exception& ex) {
      r.verdict = Verdict::Fail;
      r.summary = std::string("error: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (log) {
      for (const auto& d : r.details) *log << "    " << d << '\n';
      *log << verdict_line(r) << "  (" << fmt(r.seconds, 3) << " s)" << std::endl;
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace gp
