#pragma once
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gapprob/multipoly.hpp"

namespace gp {

// Polynomial in the Hirota symbols d1, d2, ...
using HirotaOperator = MultiPoly;

// Y1Raw: coefficient of y1 y_{l-1} in the bilinear expansion, = Y + Y1/2
enum class HirotaKind { Y, Y1, Y1Raw };

std::string dsym(int i);  // "d<i>"

// Y_l = p_{l+1}(dt) - d1 d_l / 2, Y_{1,l-1} = d1 d_l - d2 d_{l-1} / 2 - d1 p_l(dt), dt = (d1, d2/2, d3/3, ...)
HirotaOperator hirota_equation(int ell, HirotaKind kind);
HirotaOperator even_part(const HirotaOperator& P);
// P(d_y) f(t+y) g(t-y) at y = 0
MultiPoly hirota_apply(const HirotaOperator& P, const MultiPoly& f, const MultiPoly& g);
// r with a == r*b, if any
std::optional<Rational> proportional(const MultiPoly& a, const MultiPoly& b);

// The printed Hirota table: five operators and their log-tau equations, each
// compared up to a constant with what the machinery produces.
struct HirotaTableRow {
  std::string label;
  std::string computed_from;
  HirotaOperator listed_op, computed_op;
  std::optional<Rational> op_scale;  // listed == scale * computed
  std::string listed_log, computed_log;
  std::optional<Rational> log_scale;
  bool ok() const { return op_scale.has_value() && log_scale.has_value(); }
};
std::vector<HirotaTableRow> hirota_table();

// Residue expansion of the bilinear identity to y-degree 2 against Y_l, Y_{1,l-1} for 3 <= l <= max_ell.
bool bilinear_identity_check(int max_ell, std::string* report = nullptr);
// Y3, Y4, Y5 on s_lambda o s_lambda for |lambda| <= max_weight; returns failures
std::vector<std::string> schur_tau_check(int max_weight, int* checked = nullptr);

// eps^e d_2^l2 ... d^k d_w^m fn; eps outermost
struct Atom {
  std::string fn = "Q";
  int eps = 0;
  std::vector<int> t;  // t[i-1] = order of d_i
  int d = 0;
  int dw = 0;

  int t_order(int i) const { return i >= 1 && i <= static_cast<int>(t.size()) ? t[i - 1] : 0; }
  void set_t(int i, int k);
  int t_total() const;
  std::string str() const;
  friend auto operator<=>(const Atom&, const Atom&) = default;
  friend bool operator==(const Atom&, const Atom&) = default;
};

class DiffExpr {
 public:
  using Mono = std::vector<std::pair<Atom, int>>;

  DiffExpr() = default;
  DiffExpr(const MultiPoly& c);  // NOLINT: constant term
  DiffExpr(long long c) : DiffExpr(MultiPoly(c)) {}  // NOLINT
  static DiffExpr atom(const Atom& a);

  const std::map<Mono, MultiPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  DiffExpr operator-() const;
  DiffExpr& operator+=(const DiffExpr& o);
  DiffExpr& operator-=(const DiffExpr& o);
  DiffExpr& operator*=(const DiffExpr& o);
  friend DiffExpr operator+(DiffExpr a, const DiffExpr& b) { return a += b; }
  friend DiffExpr operator-(DiffExpr a, const DiffExpr& b) { return a -= b; }
  friend DiffExpr operator*(DiffExpr a, const DiffExpr& b) { return a *= b; }
  friend bool operator==(const DiffExpr& a, const DiffExpr& b) { return a.terms_ == b.terms_; }
  DiffExpr pow(unsigned k) const;

  // d with d eps = (eps + 1) d; coefficients are constant in the endpoints
  DiffExpr apply_d(int k = 1) const;
  DiffExpr apply_eps() const;
  DiffExpr apply_t(int i, int k = 1) const;  // also differentiates t_i in coefficients
  DiffExpr apply_w(int k = 1) const;         // also differentiates w in coefficients

  DiffExpr substitute(const std::string& fn, const std::function<DiffExpr(const Atom&)>& f) const;
  DiffExpr map_coefficients(const std::function<MultiPoly(const MultiPoly&)>& f) const;
  std::set<std::string> coefficient_vars() const;
  std::set<std::string> functions() const;
  // drop every term with an atom carrying d_w
  DiffExpr without_dw() const;
  // drop every term whose coefficient involves w
  DiffExpr without_w_terms() const;

  std::string str() const;

 private:
  std::map<Mono, MultiPoly> terms_;
  void add_term(const Mono& m, const MultiPoly& c);
  DiffExpr derive(const std::function<DiffExpr(const Atom&)>& on_atom,
                  const std::function<MultiPoly(const MultiPoly&)>& on_coef) const;
};

// r with a == r*b, if any
std::optional<Rational> proportional(const DiffExpr& a, const DiffExpr& b);

// Small builder vocabulary for writing equations by hand.
namespace pde {
DiffExpr Q();
DiffExpr d(const DiffExpr& x, int k = 1);
DiffExpr eps(const DiffExpr& x);
DiffExpr dt(int i, const DiffExpr& x, int k = 1);
DiffExpr dw(const DiffExpr& x, int k = 1);
DiffExpr bracket(const DiffExpr& f, const DiffExpr& g);  // f (d g) - (d f) g
MultiPoly t(int i);
MultiPoly w();
}  // namespace pde

// (1/2) P(d) tau o tau / tau^2 written in U = log tau, odd monomials dropped
DiffExpr to_logtau_pde(const HirotaOperator& P);

// Rewrite U-atoms (t-partials only) into g-atoms in d, eps, d_2..d_{p-1}, d_w.
DiffExpr virasoro_substitute(const DiffExpr& e, int p, int n);

enum class PdeEquation { Y3, Y4, Y3Y4, Y5Y14, Bous };
std::string to_string(PdeEquation e);
PdeEquation parse_equation(const std::string& s);

struct GapPDE {
  std::string id;
  DiffExpr expr;
  std::vector<std::string> params;
  std::string str() const { return expr.str() + " = 0"; }
};

// Log-tau form of the Hirota equation feeding each derivation, leading U-term scaled to 1.
DiffExpr hirota_logform(PdeEquation e);
GapPDE derive_gap_pde(PdeEquation e, int p, int n);

struct TargetEntry {
  std::string id;
  PdeEquation equation;
  int p;
  int n;
  std::string note;
};
const std::vector<TargetEntry>& target_table();
// bracket_sign = -1 evaluates {f,g} as (d f) g - f (d g)
GapPDE target_pde(const std::string& id, int bracket_sign = 1);
std::vector<std::string> target_ids();

struct MatchResult {
  std::string id;
  bool match = false;
  std::optional<Rational> scale;  // derived == scale * target
  bool match_flipped_bracket = false;
  std::string derived;
  std::string target;
};
MatchResult check_target(const std::string& id);

}  // namespace gp
