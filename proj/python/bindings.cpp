#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gapprob/acceptance.hpp"
#include "gapprob/fredholm.hpp"
#include "gapprob/hirota.hpp"
#include "gapprob/kernel.hpp"
#include "gapprob/pderes.hpp"
#include "gapprob/potential.hpp"
#include "gapprob/special.hpp"

namespace py = pybind11;
using namespace gp;

namespace {

KernelSpec preset_spec(const std::string& preset, int n, double w, double tau) {
  if (preset == "airy") return airy_preset(n, w);
  if (preset == "pearcey") return pearcey_preset(tau, n, w);
  throw std::invalid_argument("unknown preset '" + preset + "' (airy | pearcey)");
}

py::dict residual_dict(const ResidualReport& r) {
  py::dict d;
  d["equation"] = r.id;
  d["residual"] = r.residual;
  d["max_term"] = r.max_term;
  d["relative"] = r.relative;
  d["order"] = r.order;
  d["evaluations"] = r.evaluations;
  py::list terms, levels;
  for (const auto& t : r.terms) terms.append(py::make_tuple(t.term, t.value));
  for (const auto& l : r.levels) levels.append(py::make_tuple(l.steps.shift, l.residual, l.relative));
  d["terms"] = terms;
  d["levels"] = levels;
  return d;
}

}  // namespace

PYBIND11_MODULE(_gapprob, m) {
  m.doc() = "Gap probabilities of p-Airy kernels, their PDEs and the symbolic derivation engine";

  m.def("theta", [](int p) {
    std::vector<std::string> out;
    for (const auto& t : solve_theta(p).theta) out.push_back(t.str());
    return out;
  }, py::arg("p"), "theta_0 .. theta_{p-2} as polynomials in t1..t_{p-1}");
  m.def("topological_tau", [](int p) { return topological_tau_log(p).str(); }, py::arg("p"));

  m.def("kernel", [](const std::string& preset, double lam, double lam_prime, int n, double w, double tau) {
    KernelEvaluator k(preset_spec(preset, n, w, tau), std::min(lam, lam_prime) - 0.5, std::max(lam, lam_prime) + 0.5);
    return py::make_tuple(k.double_integral(lam, lam_prime), k.iiks(lam, lam_prime, lam == lam_prime));
  }, py::arg("preset"), py::arg("lam"), py::arg("lam_prime"), py::arg("n") = 0, py::arg("w") = 0.5,
     py::arg("tau") = 1.0, "(double integral, IIKS) values of K(lam, lam')");

  m.def("gap_logdet", [](const std::string& preset, const std::vector<double>& E, int n, double w, double tau, int nodes,
                         bool error_estimate) {
    GapResult g = gap_logdet(preset_spec(preset, n, w, tau), Endpoints(E), nodes, error_estimate);
    py::dict d;
    d["Q"] = g.Q;
    d["det"] = g.det;
    d["node_count"] = g.node_count;
    d["error_estimate"] = g.error_estimate;
    return d;
  }, py::arg("preset"), py::arg("E"), py::arg("n") = 0, py::arg("w") = 0.5, py::arg("tau") = 1.0,
     py::arg("m") = 48, py::arg("error_estimate") = true);

  m.def("phi", [](int p, int sign, std::complex<double> u, int n, double w) {
    PhiSpec s;
    s.p = p;
    s.sign = sign;
    s.n = n;
    s.w = w;
    return PhiEvaluator(s, u.real() - 1, u.real() + 1).value(u);
  }, py::arg("p"), py::arg("sign"), py::arg("u"), py::arg("n") = 0, py::arg("w") = 0.0);

  m.def("derive", [](const std::string& eq, int p, int n) { return derive_gap_pde(parse_equation(eq), p, n).str(); },
        py::arg("equation"), py::arg("p"), py::arg("n") = 0);
  m.def("target", [](const std::string& id, int bracket_sign) { return target_pde(id, bracket_sign).str(); },
        py::arg("id"), py::arg("bracket_sign") = 1);
  m.def("target_ids", &target_ids);
  m.def("check_target", [](const std::string& id) {
    MatchResult r = check_target(id);
    py::dict d;
    d["match"] = r.match;
    d["scale"] = r.scale ? to_string(*r.scale) : std::string();
    d["match_reversed_bracket"] = r.match_flipped_bracket;
    d["derived"] = r.derived;
    d["target"] = r.target;
    return d;
  }, py::arg("id"));

  m.def("hirota_table", [] {
    py::list out;
    for (const auto& r : hirota_table())
      out.append(py::make_tuple(r.label, r.op_scale ? to_string(*r.op_scale) : std::string(),
                                r.log_scale ? to_string(*r.log_scale) : std::string(), r.ok()));
    return out;
  }, "(label, operator scale, log-form scale, reproduced) per printed row");
  m.def("schur_check", [](int max_weight) {
    int checked = 0;
    auto f = schur_tau_check(max_weight, &checked);
    return py::make_tuple(checked, f);
  }, py::arg("max_weight") = 5, "(pairs checked, failures)");

  m.def("pde_residual", [](const std::string& equation, const std::string& preset, const std::vector<double>& E, int n,
                           double w, double tau, double h_shift, double h_dilation, double h_tau, double h_w,
                           int levels, int bracket_sign, int jobs) {
    GapProblem prob;
    prob.preset = preset;
    prob.n = n;
    prob.w = w;
    prob.tau = tau;
    FDSteps s{h_shift, h_dilation, h_tau, h_w};
    py::gil_scoped_release release;
    auto r = residual(target_pde(equation, bracket_sign), prob, Endpoints(E), s, levels, jobs);
    py::gil_scoped_acquire acquire;
    return residual_dict(r);
  }, py::arg("equation"), py::arg("preset"), py::arg("E"), py::arg("n") = 0, py::arg("w") = 0.5, py::arg("tau") = 1.0,
     py::arg("h_shift") = 0.05, py::arg("h_dilation") = 0.02, py::arg("h_tau") = 0.05, py::arg("h_w") = 0.05,
     py::arg("levels") = 2, py::arg("bracket_sign") = 1, py::arg("jobs") = 1);

  m.def("fd_partial", [](const std::function<double(std::vector<double>, double, double)>& f,
                         const std::vector<double>& E, const std::array<int, 4>& orders, double tau, double w) {
    GridFunction g = [&](const Endpoints& e, double t, double ww) { return f(e.a, t, ww); };
    ParamGrid grid(g, Endpoints(E), tau, w, FDSteps{});
    return grid.fd_partial(orders);
  }, py::arg("f"), py::arg("E"), py::arg("orders"), py::arg("tau") = 0.0, py::arg("w") = 0.0,
     "derivative (dilation, shift, tau, w) of f(endpoints, tau, w) at default steps");

  m.def("pearcey_airy_limit", [](const std::vector<double>& taus, const std::vector<double>& E, int window_sign,
                                 int airy_sign) {
    auto r = pearcey_airy_limit(taus, Endpoints(E), window_sign, airy_sign);
    py::dict d;
    d["orientation"] = r.orientation();
    d["exponent"] = r.exponent;
    d["monotone"] = r.monotone;
    py::list rows;
    for (const auto& x : r.rows) rows.append(py::make_tuple(x.tau, x.pearcey_prob, x.airy_prob, x.deviation));
    d["rows"] = rows;
    return d;
  }, py::arg("taus"), py::arg("E"), py::arg("window_sign") = -1, py::arg("airy_sign") = 1);

  m.def("acceptance", [](const std::vector<int>& only, int jobs) {
    py::list out;
    for (const auto& r : run_acceptance(only, jobs)) out.append(py::make_tuple(r.id, to_string(r.verdict), r.summary));
    return out;
  }, py::arg("only") = std::vector<int>{}, py::arg("jobs") = 1);
}
