#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "gapprob/acceptance.hpp"
#include "gapprob/algebra.hpp"
#include "gapprob/fredholm.hpp"
#include "gapprob/hirota.hpp"
#include "gapprob/kernel.hpp"
#include "gapprob/pderes.hpp"
#include "gapprob/potential.hpp"
#include "gapprob/special.hpp"

using json = nlohmann::ordered_json;
using namespace gp;

namespace {

struct BadFlag : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// JSON with every double printed at 17 significant digits
void write_json(std::ostream& os, const json& j, int indent = 0) {
  const std::string pad(indent, ' '), pad2(indent + 2, ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      size_t i = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        os << pad2 << json(it.key()).dump() << ": ";
        write_json(os, it.value(), indent + 2);
        os << (i + 1 < j.size() ? ",\n" : "\n");
      }
      os << pad << "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      for (size_t i = 0; i < j.size(); ++i) {
        os << pad2;
        write_json(os, j[i], indent + 2);
        os << (i + 1 < j.size() ? ",\n" : "\n");
      }
      os << pad << "]";
      return;
    }
    case json::value_t::number_float: {
      const double x = j.get<double>();
      if (!std::isfinite(x)) {
        os << (std::isnan(x) ? "\"nan\"" : (x > 0 ? "\"inf\"" : "\"-inf\""));
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", x);
      std::string s = buf;
      if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
      os << s;
      return;
    }
    default:
      os << j.dump();
  }
}

void emit(const json& j) {
  write_json(std::cout, j);
  std::cout << '\n';
}

json typed(const std::string& v) {
  if (v == "true") return true;
  if (v == "false") return false;
  try {
    size_t pos = 0;
    long long i = std::stoll(v, &pos);
    if (pos == v.size()) return i;
    double d = std::stod(v, &pos);
    if (pos == v.size()) return d;
  } catch (const std::exception&) {
  }
  return v;
}

// every flag of the subcommand with its effective value
json config_echo(const CLI::App* sub) {
  json c;
  c["subcommand"] = sub->get_name();
  auto opts = sub->get_parent()->get_options();
  for (const CLI::Option* o : sub->get_options()) opts.push_back(o);
  for (const CLI::Option* o : opts) {
    if (o->get_lnames().empty() || o->get_lnames()[0] == "help") continue;
    const std::string name = o->get_lnames()[0];
    if (o->count() > 0) {
      auto r = o->results();
      if (o->get_expected_min() == 0)
        c[name] = true;
      else if (r.size() == 1)
        c[name] = typed(r[0]);
      else
        c[name] = r;
    } else if (o->get_expected_min() == 0) {
      c[name] = false;
    } else {
      c[name] = typed(o->get_default_str());
    }
  }
  return c;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      size_t pos = 0;
      v.push_back(std::stod(tok, &pos));
      if (tok.find_first_not_of(" \t", pos) != std::string::npos) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw BadFlag("not a number list: '" + s + "'");
    }
  }
  return v;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> v;
  for (double x : parse_list(s)) v.push_back(static_cast<int>(x));
  return v;
}

Endpoints parse_set(const std::string& s) {
  try {
    return Endpoints::parse(s);
  } catch (const std::exception& e) {
    throw BadFlag(std::string("--E: ") + e.what());
  }
}

struct KernelFlags {
  std::string preset = "airy";
  int p = 2;
  int n = 0;
  double w = 0.5;
  double tau = 1.0;
  std::string t;
  double offset = 0.25;
  int nodes = 16;

  void add(CLI::App* s) {
    s->add_option("--preset", preset, "airy | pearcey | generic")->check(CLI::IsMember({"airy", "pearcey", "generic"}));
    s->add_option("--p", p, "order of the generic kernel")->check(CLI::Range(2, 6));
    s->add_option("--n", n, "outlier count")->check(CLI::NonNegativeNumber);
    s->add_option("--w", w, "outlier location");
    s->add_option("--tau", tau, "Pearcey time (t2 = tau/2)");
    s->add_option("--t", t, "generic times t1,...,t_{p-1}");
    s->add_option("--offset", offset, "contour apex offset")->check(CLI::PositiveNumber);
    s->add_option("--nodes", nodes, "Gauss nodes per contour panel")->check(CLI::Range(4, 128));
  }
  KernelSpec spec() const {
    KernelSpec s;
    if (preset == "airy")
      s = airy_preset(n, w, offset);
    else if (preset == "pearcey")
      s = pearcey_preset(tau, n, w, offset);
    else
      s = make_kernel_spec(p, n, w, parse_list(t), offset);
    s.quad.nodes_per_panel = nodes;
    return s;
  }
};

json gap_json(const GapResult& g) {
  return json{{"Q", g.Q}, {"det", g.det}, {"node_count", g.node_count}, {"error_estimate", g.error_estimate}};
}

json report_json(const ResidualReport& r) {
  json j;
  j["equation"] = r.id;
  j["residual"] = r.residual;
  j["max_term"] = r.max_term;
  j["relative"] = r.relative;
  j["order"] = r.order;
  j["evaluations"] = r.evaluations;
  json terms = json::array();
  for (const auto& t : r.terms) terms.push_back({{"term", t.term}, {"value", t.value}});
  j["terms"] = terms;
  json lv = json::array();
  for (const auto& l : r.levels)
    lv.push_back({{"h_shift", l.steps.shift},
                  {"h_dilation", l.steps.dilation},
                  {"h_tau", l.steps.tau},
                  {"h_w", l.steps.w},
                  {"residual", l.residual},
                  {"max_term", l.max_term},
                  {"relative", l.relative}});
  j["levels"] = lv;
  return j;
}

json limit_json(const LimitResult& r) {
  json j;
  j["orientation"] = r.orientation();
  j["window_sign"] = r.window_sign;
  j["airy_sign"] = r.airy_sign;
  j["exponent"] = r.exponent;
  j["monotone"] = r.monotone;
  json rows = json::array();
  for (const auto& x : r.rows)
    rows.push_back({{"tau", x.tau},
                    {"center", x.center},
                    {"scale", x.scale},
                    {"pearcey", x.pearcey_prob},
                    {"airy", x.airy_prob},
                    {"deviation", x.deviation}});
  j["rows"] = rows;
  j["dropped"] = r.dropped;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gap probabilities of p-Airy kernels and the PDEs they satisfy"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  int jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string format = "auto";
  app.add_option("--jobs", jobs, "worker threads for grid evaluations")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "json | text | auto")->check(CLI::IsMember({"json", "text", "auto"}));

  // eval-kernel
  auto* ek = app.add_subcommand("eval-kernel", "kernel value by double integral and IIKS form");
  KernelFlags ekf;
  ekf.add(ek);
  double lam = 0.0, lamp = 0.0;
  ek->add_option("--lambda", lam, "first argument");
  ek->add_option("--lambda-prime", lamp, "second argument");

  // fredholm
  auto* fr = app.add_subcommand("fredholm", "log det(I - K chi_E)");
  KernelFlags frf;
  frf.add(fr);
  std::string fr_E = "-1,1";
  int fr_m = 48;
  std::string semi;
  double cut = 10.0;
  bool fr_err = false;
  fr->add_option("--E", fr_E, "endpoints a1,a2,...");
  fr->add_option("--m", fr_m, "nodes per interval")->check(CLI::Range(4, 400));
  fr->add_option("--semi-infinite", semi, "use [s, s + cut] as a proxy for [s, infinity)");
  fr->add_option("--cut", cut, "truncation length for --semi-infinite")->check(CLI::PositiveNumber);
  fr->add_flag("--error-estimate", fr_err, "rerun with 3m/2 nodes");

  // pde-residual
  auto* pr = app.add_subcommand("pde-residual", "finite-difference residual of a gap PDE");
  std::string pr_eq = "intro4", pr_preset, pr_E = "-1,1", dump;
  int pr_n = -1, pr_p = 0, pr_levels = 2, pr_m = 48, bracket = 1;
  double pr_w = 0.5, pr_tau = 1.0;
  FDSteps steps;
  bool drop_dw = false;
  pr->add_option("--equation", pr_eq, "target id (intro4, intro10, 76:p=3, ...) or Y3|Y4|Y3Y4|Y5Y14|Bous with --p");
  pr->add_option("--preset", pr_preset, "airy | pearcey (default from the equation)")
      ->check(CLI::IsMember({"airy", "pearcey"}));
  pr->add_option("--p", pr_p, "order for a derived equation")->check(CLI::Range(2, 6));
  pr->add_option("--n", pr_n, "outlier count (default from the equation)");
  pr->add_option("--w", pr_w, "outlier location");
  pr->add_option("--tau", pr_tau, "Pearcey time");
  pr->add_option("--E", pr_E, "endpoints");
  pr->add_option("--h-shift", steps.shift, "shift step")->check(CLI::PositiveNumber);
  pr->add_option("--h-dilation", steps.dilation, "dilation step")->check(CLI::PositiveNumber);
  pr->add_option("--h-tau", steps.tau, "tau step")->check(CLI::PositiveNumber);
  pr->add_option("--h-w", steps.w, "w step")->check(CLI::PositiveNumber);
  pr->add_option("--levels", pr_levels, "step halvings (>= 2 for an order estimate)")->check(CLI::Range(1, 4));
  pr->add_option("--m", pr_m, "nodes per interval")->check(CLI::Range(4, 400));
  pr->add_option("--bracket-sign", bracket, "+1 printed bracket, -1 reversed")->check(CLI::IsMember({1, -1}));
  pr->add_flag("--drop-dw", drop_dw, "remove terms containing d_w");
  pr->add_option("--dump-grid", dump, "write the first-level Q grid as CSV");

  // derive
  auto* dv = app.add_subcommand("derive", "derive a gap PDE from a Hirota equation");
  std::string dv_eq = "Y3";
  int dv_p = 2, dv_n = 0;
  dv->add_option("--equation", dv_eq, "Y3 | Y4 | Y3Y4 | Y5Y14 | Bous");
  dv->add_option("--p", dv_p, "order")->check(CLI::Range(2, 6));
  dv->add_option("--n", dv_n, "outlier count")->check(CLI::NonNegativeNumber);

  // hirota
  auto* hi = app.add_subcommand("hirota", "Hirota operators and checks");
  bool check_schur = false, bilinear = false, table = false;
  int max_weight = 5, max_ell = 7, ell = 3;
  std::string kind = "Y";
  hi->add_flag("--check-schur", check_schur, "Y3, Y4, Y5 on s_lambda o s_lambda");
  hi->add_option("--max-weight", max_weight, "largest |lambda|")->check(CLI::Range(0, 8));
  hi->add_flag("--bilinear", bilinear, "residue expansion of the bilinear identity");
  hi->add_option("--max-ell", max_ell, "largest l for --bilinear")->check(CLI::Range(3, 9));
  hi->add_flag("--table", table, "the printed five-row table");
  hi->add_option("--ell", ell, "index of the operator to print")->check(CLI::Range(2, 12));
  hi->add_option("--kind", kind, "Y | Y1 | Y1Raw")->check(CLI::IsMember({"Y", "Y1", "Y1Raw"}));

  // theta
  auto* th = app.add_subcommand("theta", "theta_i(t) for the potential V_p");
  int th_p = 3;
  th->add_option("--p", th_p, "order")->check(CLI::Range(2, 6));

  // tau-topological
  auto* tt = app.add_subcommand("tau-topological", "log of the topological tau function");
  int tt_p = 3;
  tt->add_option("--p", tt_p, "order")->check(CLI::Range(2, 6));

  // phi
  auto* ph = app.add_subcommand("phi", "building-block integrals Phi_p^+-");
  PhiSpec ps;
  double u_re = 0.0, u_im = 0.0;
  std::string ph_t;
  ph->add_option("--p", ps.p, "order")->check(CLI::Range(2, 6));
  ph->add_option("--sign", ps.sign, "+1 or -1")->check(CLI::IsMember({1, -1}));
  ph->add_option("--n", ps.n, "outlier count")->check(CLI::NonNegativeNumber);
  ph->add_option("--w", ps.w, "outlier location");
  ph->add_option("--t", ph_t, "times t1,...,t_{p-1}");
  ph->add_option("--u", u_re, "real part of the argument");
  ph->add_option("--u-imag", u_im, "imaginary part of the argument");
  ph->add_option("--offset", ps.delta, "contour apex offset")->check(CLI::PositiveNumber);

  // asymptotics
  auto* as = app.add_subcommand("asymptotics", "Pearcey gap near the edge against the Airy gap");
  std::string as_tau = "4,8,16", as_E = "0,1", orient = "all";
  int as_m = 48;
  as->add_option("--tau", as_tau, "tau values");
  as->add_option("--E", as_E, "endpoints");
  as->add_option("--m", as_m, "nodes per interval")->check(CLI::Range(4, 400));
  as->add_option("--orientation", orient, "displayed | best | all")->check(CLI::IsMember({"displayed", "best", "all"}));

  // accept
  auto* ac = app.add_subcommand("accept", "run the acceptance criteria");
  std::string only;
  ac->add_option("--only", only, "criteria ids, e.g. 1,3,8");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto use_json = [&](bool default_json) { return format == "json" || (format == "auto" && default_json); };

  try {
    if (*ek) {
      json out;
      out["config"] = config_echo(ek);
      KernelSpec s = ekf.spec();
      KernelEvaluator k(s, std::min(lam, lamp) - 0.5, std::max(lam, lamp) + 0.5);
      out["double_integral"] = k.double_integral(lam, lamp);
      out["iiks"] = k.iiks(lam, lamp, lam == lamp);
      out["internal_w"] = k.internal_w();
      if (use_json(true)) {
        emit(out);
      } else {
        std::printf("K(%.17g, %.17g) = %.17g (iiks %.17g)\n", lam, lamp, out["double_integral"].get<double>(),
                    out["iiks"].get<double>());
      }
      return 0;
    }
    if (*fr) {
      json out;
      out["config"] = config_echo(fr);
      KernelSpec s = frf.spec();
      GapResult g;
      if (!semi.empty()) {
        auto v = parse_list(semi);
        if (v.size() != 1) throw BadFlag("--semi-infinite takes one number");
        g = gap_semi_infinite(s, v[0], cut, fr_m);
      }
      else
        g = gap_logdet(s, parse_set(fr_E), fr_m, fr_err);
      out["result"] = gap_json(g);
      if (use_json(true))
        emit(out);
      else
        std::printf("Q = %.17g  det = %.17g\n", g.Q, g.det);
      return 0;
    }
    if (*pr) {
      GapPDE eq;
      int p = pr_p, n_default = 0;
      auto ids = target_ids();
      if (std::find(ids.begin(), ids.end(), pr_eq) != ids.end()) {
        eq = target_pde(pr_eq, bracket);
        for (const auto& t : target_table())
          if (t.id == pr_eq) {
            if (p == 0) p = t.p;
            n_default = t.n;
          }
      } else {
        PdeEquation e;
        try {
          e = parse_equation(pr_eq);
        } catch (const std::exception&) {
          throw BadFlag("--equation: unknown equation '" + pr_eq + "'");
        }
        if (p == 0) throw BadFlag("--equation " + pr_eq + " needs --p");
        eq = derive_gap_pde(e, p, std::max(pr_n, 0));
        n_default = std::max(pr_n, 0);
      }
      if (drop_dw) eq = GapPDE{eq.id + " without d_w", eq.expr.without_dw(), eq.params};
      GapProblem prob;
      prob.preset = pr_preset.empty() ? (p == 3 ? "pearcey" : "airy") : pr_preset;
      prob.n = pr_n >= 0 ? pr_n : n_default;
      prob.w = pr_w;
      prob.tau = pr_tau;
      prob.m = pr_m;
      if ((prob.preset == "airy" && p != 2) || (prob.preset == "pearcey" && p != 3))
        throw BadFlag("equation " + pr_eq + " is for p = " + std::to_string(p) + "; preset " + prob.preset +
                      " has p = " + std::to_string(prob.p()));
      std::function<void(const ParamGrid&)> dumper;
      if (!dump.empty())
        dumper = [&](const ParamGrid& g) {
          std::ofstream f(dump);
          if (!f) throw std::runtime_error("cannot write " + dump);
          g.dump_csv(f);
        };
      auto rep = residual(eq, prob, parse_set(pr_E), steps, pr_levels, jobs, dumper);
      json out;
      out["config"] = config_echo(pr);
      out["config"]["resolved_preset"] = prob.preset;
      out["config"]["resolved_n"] = prob.n;
      out["equation_text"] = eq.str();
      out["report"] = report_json(rep);
      if (use_json(true)) {
        emit(out);
      } else {
        std::printf("%s: residual %.17g, max term %.17g, relative %.6g, order %.4g\n", rep.id.c_str(), rep.residual,
                    rep.max_term, rep.relative, rep.order);
      }
      return 0;
    }
    if (*dv) {
      PdeEquation e;
      try {
        e = parse_equation(dv_eq);
      } catch (const std::exception&) {
        throw BadFlag("--equation: unknown equation '" + dv_eq + "' (Y3 | Y4 | Y3Y4 | Y5Y14 | Bous)");
      }
      GapPDE g = derive_gap_pde(e, dv_p, dv_n);
      std::vector<std::pair<std::string, MatchResult>> results;
      for (const auto& t : target_table())
        if (t.equation == e && t.p == dv_p && t.n == dv_n) results.emplace_back(t.id, check_target(t.id));
      // the introduction's labels first
      std::stable_sort(results.begin(), results.end(), [](const auto& a, const auto& b) {
        return (a.first.rfind("intro", 0) == 0) > (b.first.rfind("intro", 0) == 0);
      });
      if (use_json(false)) {
        json out;
        out["config"] = config_echo(dv);
        out["id"] = g.id;
        out["equation"] = g.str();
        out["params"] = g.params;
        json m = json::array();
        for (const auto& [id, r] : results)
          m.push_back({{"target", id},
                       {"match", r.match},
                       {"scale", r.scale ? to_string(*r.scale) : ""},
                       {"match_reversed_bracket", r.match_flipped_bracket},
                       {"target_text", r.target}});
        out["targets"] = m;
        emit(out);
      } else {
        std::cout << g.str() << '\n';
        for (const auto& [id, r] : results) {
          if (r.match)
            std::cout << "MATCH: target " << id << '\n';
          else
            std::cout << "MISMATCH: target " << id
                      << (r.match_flipped_bracket ? " (matches with the bracket sign reversed)" : "") << "\n  printed: "
                      << r.target << '\n';
        }
        if (results.empty()) std::cout << "no stored target for this (equation, p, n)\n";
      }
      return 0;
    }
    if (*hi) {
      json out;
      out["config"] = config_echo(hi);
      bool ok = true;
      if (check_schur) {
        int checked = 0;
        auto f = schur_tau_check(max_weight, &checked);
        out["schur"] = {{"max_weight", max_weight}, {"checked", checked}, {"failures", f}, {"pass", f.empty()}};
        ok = ok && f.empty();
      }
      if (bilinear) {
        std::string rep;
        bool b = bilinear_identity_check(max_ell, &rep);
        out["bilinear"] = {{"max_ell", max_ell}, {"pass", b}, {"report", rep}};
        ok = ok && b;
      }
      if (table || (!check_schur && !bilinear)) {
        json rows = json::array();
        for (const auto& r : hirota_table())
          rows.push_back({{"label", r.label},
                          {"computed_from", r.computed_from},
                          {"listed_operator", r.listed_op.str()},
                          {"operator_scale", r.op_scale ? to_string(*r.op_scale) : ""},
                          {"listed_log_form", r.listed_log},
                          {"computed_log_form", r.computed_log},
                          {"log_scale", r.log_scale ? to_string(*r.log_scale) : ""},
                          {"ok", r.ok()}});
        out["table"] = rows;
        HirotaKind k = kind == "Y" ? HirotaKind::Y : kind == "Y1" ? HirotaKind::Y1 : HirotaKind::Y1Raw;
        out["operator"] = {{"ell", ell}, {"kind", kind}, {"value", hirota_equation(ell, k).str()}};
      }
      if (use_json(true)) {
        emit(out);
      } else {
        if (out.contains("schur"))
          std::cout << "schur: " << out["schur"]["checked"].get<int>() << " checked, "
                    << (out["schur"]["pass"].get<bool>() ? "all vanish" : "FAILURES") << '\n';
        if (out.contains("bilinear")) std::cout << out["bilinear"]["report"].get<std::string>() << '\n';
        if (out.contains("table"))
          for (const auto& r : out["table"])
            std::cout << r["label"].get<std::string>() << ": " << r["listed_operator"].get<std::string>() << "  ["
                      << (r["ok"].get<bool>() ? "reproduced" : "NOT reproduced") << "]\n";
      }
      return ok ? 0 : 1;
    }
    if (*th) {
      auto pot = solve_theta(th_p);
      if (use_json(false)) {
        json out;
        out["config"] = config_echo(th);
        json t = json::array();
        for (const auto& x : pot.theta) t.push_back(x.str());
        out["theta"] = t;
        out["vprime"] = pot.vprime().str();
        emit(out);
      } else {
        for (size_t i = 0; i < pot.theta.size(); ++i) std::cout << "theta" << i << " = " << pot.theta[i].str() << '\n';
        std::cout << "V' = " << pot.vprime().str() << '\n';
      }
      return 0;
    }
    if (*tt) {
      auto f = topological_tau_log(tt_p);
      if (use_json(false)) {
        json out;
        out["config"] = config_echo(tt);
        out["log_tau0"] = f.str();
        emit(out);
      } else {
        std::cout << f.str() << '\n';
      }
      return 0;
    }
    if (*ph) {
      ps.t = parse_list(ph_t);
      PhiEvaluator ev(ps, u_re - 1, u_re + 1);
      const cd u(u_re, u_im);
      cd v = ev.value(u), r = ev.ode_residual(u);
      PhiSpec fine = ps;
      fine.quad.nodes_per_panel *= 2;
      const double err = std::abs(PhiEvaluator(fine, u_re - 1, u_re + 1).value(u) - v);
      json out;
      out["config"] = config_echo(ph);
      out["value"] = {{"re", v.real()}, {"im", v.imag()}};
      out["error_estimate"] = err;
      out["ode_residual"] = {{"re", r.real()}, {"im", r.imag()}};
      if (use_json(true))
        emit(out);
      else
        std::printf("Phi = %.17g %+.17gi  (node doubling %.3g, ODE residual %.3g)\n", v.real(), v.imag(), err,
                    std::abs(r));
      return 0;
    }
    if (*as) {
      auto taus = parse_list(as_tau);
      if (taus.empty()) throw BadFlag("--tau: need at least one value");
      Endpoints E = parse_set(as_E);
      json out;
      out["config"] = config_echo(as);
      std::vector<LimitResult> rs;
      if (orient == "displayed")
        rs.push_back(pearcey_airy_limit(taus, E, -1, -1, as_m, jobs));
      else
        rs = pearcey_airy_orientations(taus, E, as_m, jobs);
      if (orient == "best") rs.resize(1);
      json tabs = json::array();
      for (const auto& r : rs) tabs.push_back(limit_json(r));
      out["results"] = tabs;
      if (use_json(true)) {
        emit(out);
      } else {
        for (const auto& r : rs) {
          std::printf("%s: exponent %.4g%s\n", r.orientation().c_str(), r.exponent, r.monotone ? ", monotone" : "");
          for (const auto& x : r.rows)
            std::printf("  tau=%g  pearcey=%.12g  airy=%.12g  deviation=%.4g\n", x.tau, x.pearcey_prob, x.airy_prob,
                        x.deviation);
        }
      }
      return 0;
    }
    if (*ac) {
      auto ids = parse_int_list(only);
      for (int i : ids)
        if (i < 1 || i > 10) throw BadFlag("--only: criteria are numbered 1..10");
      if (use_json(false)) {
        auto rs = run_acceptance(ids, jobs, nullptr);
        json out;
        out["config"] = config_echo(ac);
        json arr = json::array();
        for (const auto& r : rs)
          arr.push_back({{"id", r.id},
                         {"name", r.name},
                         {"verdict", to_string(r.verdict)},
                         {"summary", r.summary},
                         {"details", r.details},
                         {"seconds", r.seconds}});
        out["criteria"] = arr;
        emit(out);
        return acceptance_status(rs);
      }
      auto rs = run_acceptance(ids, jobs, &std::cout);
      std::cout << "\nSUMMARY\n";
      for (const auto& r : rs) std::cout << verdict_line(r) << '\n';
      return acceptance_status(rs);
    }
  } catch (const BadFlag& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
