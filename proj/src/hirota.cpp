#include "gapprob/hirota.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "gapprob/algebra.hpp"
#include "gapprob/potential.hpp"

namespace gp {

std::string dsym(int i) { return "d" + std::to_string(i); }

namespace {

int suffix_index(const std::string& v) {
  size_t k = v.find_first_of("0123456789");
  if (k == std::string::npos) throw std::invalid_argument("not an indexed symbol: " + v);
  return std::stoi(v.substr(k));
}

MultiPoly filter_terms(const MultiPoly& P, const std::function<bool(const MultiPoly::Exps&)>& keep) {
  std::map<MultiPoly::Exps, Rational> t;
  for (const auto& [e, c] : P.terms())
    if (keep(e)) t[e] = c;
  return MultiPoly::from_terms(P.vars(), t);
}

std::vector<MultiPoly> tilde_args(int k) {
  std::vector<MultiPoly> a;
  for (int i = 1; i <= k; ++i) a.push_back(MultiPoly(rat(1, i)) * MultiPoly::var(dsym(i)));
  return a;
}

}  // namespace

HirotaOperator hirota_equation(int ell, HirotaKind kind) {
  if (ell < 3) throw std::invalid_argument("hirota_equation: ell >= 3 required");
  auto ps = schur_polynomials(ell + 1, tilde_args(ell + 1));
  auto d = [](int i) { return MultiPoly::var(dsym(i)); };
  if (kind == HirotaKind::Y) return ps[ell + 1] - MultiPoly(rat(1, 2)) * d(1) * d(ell);
  if (kind == HirotaKind::Y1Raw)
    return ps[ell + 1] - MultiPoly(rat(1, 4)) * d(2) * d(ell - 1) - MultiPoly(rat(1, 2)) * d(1) * ps[ell];
  return d(1) * d(ell) - MultiPoly(rat(1, 2)) * d(2) * d(ell - 1) - d(1) * ps[ell];
}

HirotaOperator even_part(const HirotaOperator& P) {
  return filter_terms(P, [](const MultiPoly::Exps& e) {
    int s = 0;
    for (int x : e) s += x;
    return s % 2 == 0;
  });
}

MultiPoly hirota_apply(const HirotaOperator& P, const MultiPoly& f, const MultiPoly& g) {
  std::vector<int> idx;
  for (const auto& v : P.vars()) idx.push_back(suffix_index(v));
  std::map<MultiPoly::Exps, MultiPoly> fcache, gcache;
  auto deriv = [&](std::map<MultiPoly::Exps, MultiPoly>& cache, const MultiPoly& h, const MultiPoly::Exps& a) {
    auto it = cache.find(a);
    if (it != cache.end()) return it->second;
    MultiPoly r = h;
    for (size_t i = 0; i < a.size() && !r.is_zero(); ++i)
      for (int k = 0; k < a[i]; ++k) r = r.diff(tvar(idx[i]));
    cache[a] = r;
    return r;
  };
  MultiPoly out;
  for (const auto& [beta, c] : P.terms()) {
    MultiPoly::Exps gam(beta.size(), 0);
    // odometer over gamma <= beta
    while (true) {
      Rational w = c;
      int odd = 0;
      MultiPoly::Exps rest(beta.size());
      for (size_t i = 0; i < beta.size(); ++i) {
        w *= binomial(Rational(beta[i]), gam[i]);
        rest[i] = beta[i] - gam[i];
        odd += rest[i];
      }
      if (odd % 2) w = -w;
      MultiPoly a = deriv(fcache, f, gam);
      if (!a.is_zero()) {
        MultiPoly b = deriv(gcache, g, rest);
        if (!b.is_zero()) out += MultiPoly(w) * a * b;
      }
      size_t i = 0;
      while (i < gam.size() && gam[i] == beta[i]) gam[i++] = 0;
      if (i == gam.size()) break;
      ++gam[i];
    }
  }
  return out;
}

std::optional<Rational> proportional(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    if (a.is_zero() && b.is_zero()) return Rational(1);
    return std::nullopt;
  }
  // align on a's first term
  const auto& [ea, ca] = *a.terms().begin();
  MultiPoly mono = MultiPoly::from_terms(a.vars(), {{ea, Rational(1)}});
  Rational cb = 0;
  for (const auto& [eb, c] : b.terms()) {
    if (MultiPoly::from_terms(b.vars(), {{eb, Rational(1)}}) == mono) {
      cb = c;
      break;
    }
  }
  if (cb == 0) return std::nullopt;
  Rational r = ca / cb;
  if (a == MultiPoly(r) * b) return r;
  return std::nullopt;
}

bool bilinear_identity_check(int max_ell, std::string* report) {
  const int L = max_ell;
  std::vector<MultiPoly> ys;
  for (int i = 1; i <= L; ++i) ys.push_back(MultiPoly::var("y" + std::to_string(i)));
  auto ydeg_le2 = [](const MultiPoly& P) {
    std::vector<bool> isy;
    for (const auto& v : P.vars()) isy.push_back(v[0] == 'y');
    return filter_terms(P, [&](const MultiPoly::Exps& e) {
      int s = 0;
      for (size_t i = 0; i < e.size(); ++i)
        if (isy[i]) s += e[i];
      return s <= 2;
    });
  };
  auto py = schur_polynomials(L, ys);
  auto pd = schur_polynomials(L + 2, tilde_args(L + 1));
  MultiPoly S;
  for (int l = 1; l <= L; ++l) S += ys[l - 1] * MultiPoly::var(dsym(l));
  MultiPoly E = MultiPoly(1) - MultiPoly(rat(1, 2)) * S + MultiPoly(rat(1, 8)) * S * S;
  MultiPoly gen;
  for (int j = 0; j <= L; ++j) gen += ydeg_le2(ydeg_le2(py[j]) * pd[j + 1] * E);
  auto coefficient = [&](const std::map<int, int>& pw) {
    MultiPoly c = gen;
    for (int i = 1; i <= L; ++i) {
      auto it = pw.find(i);
      c = c.coeff("y" + std::to_string(i), it == pw.end() ? 0 : it->second);
    }
    return c;
  };
  bool ok = true;
  std::ostringstream os;
  for (int l = 3; l <= L; ++l) {
    MultiPoly first = coefficient({{l, 1}});
    MultiPoly second = coefficient({{1, 1}, {l - 1, 1}});
    bool a = first == hirota_equation(l, HirotaKind::Y);
    bool b = MultiPoly(2) * second - MultiPoly(2) * first == hirota_equation(l, HirotaKind::Y1);
    os << "l=" << l << " Y:" << (a ? "ok" : "MISMATCH") << " Y1:" << (b ? "ok" : "MISMATCH") << "\n";
    ok = ok && a && b;
  }
  if (report) *report = os.str();
  return ok;
}

std::vector<std::string> schur_tau_check(int max_weight, int* checked) {
  std::vector<std::string> fails;
  int count = 0;
  HirotaOperator ops[3] = {hirota_equation(3, HirotaKind::Y), hirota_equation(4, HirotaKind::Y),
                           hirota_equation(5, HirotaKind::Y)};
  for (int n = 1; n <= max_weight; ++n)
    for (const auto& lam : partitions(n)) {
      MultiPoly s = schur_function(lam);
      for (int k = 0; k < 3; ++k) {
        ++count;
        if (!hirota_apply(ops[k], s, s).is_zero()) {
          std::ostringstream os;
          os << "Y" << (k + 3) << " on s_(";
          for (size_t i = 0; i < lam.size(); ++i) os << (i ? "," : "") << lam[i];
          os << ")";
          fails.push_back(os.str());
        }
      }
    }
  if (checked) *checked = count;
  return fails;
}

// ---------------------------------------------------------------- DiffExpr

void Atom::set_t(int i, int k) {
  if (i < 1) throw std::invalid_argument("Atom::set_t: index >= 1");
  if (static_cast<int>(t.size()) < i) t.resize(i, 0);
  t[i - 1] = k;
  while (!t.empty() && t.back() == 0) t.pop_back();
}

int Atom::t_total() const {
  int s = 0;
  for (int x : t) s += x;
  return s;
}

std::string Atom::str() const {
  std::ostringstream os;
  auto part = [&](const std::string& name, int k) {
    if (k == 0) return;
    os << name;
    if (k > 1) os << "^" << k;
    os << " ";
  };
  part("eps", eps);
  for (size_t i = 0; i < t.size(); ++i) part("d_" + std::to_string(i + 1), t[i]);
  part("d", d);
  part("d_w", dw);
  os << fn;
  return os.str();
}

namespace {

using Mono = DiffExpr::Mono;

Mono mono_mul(const Mono& a, const Mono& b) {
  std::map<Atom, int> m;
  for (const auto& [x, k] : a) m[x] += k;
  for (const auto& [x, k] : b) m[x] += k;
  return Mono(m.begin(), m.end());
}

int mono_order(const Mono& m) {
  int s = 0;
  for (const auto& [a, k] : m) s += (a.eps + a.d + a.dw + a.t_total()) * k;
  return s;
}

std::string coef_str(const MultiPoly& c, bool bare) {
  if (bare) return c.str();
  if (c == MultiPoly(1)) return "";
  if (c == MultiPoly(-1)) return "-";
  if (c.terms().size() == 1) return c.str() + "*";
  return "(" + c.str() + ")*";
}

}  // namespace

DiffExpr::DiffExpr(const MultiPoly& c) {
  if (!c.is_zero()) terms_[Mono{}] = c;
}

DiffExpr DiffExpr::atom(const Atom& a) {
  DiffExpr e;
  e.terms_[Mono{{a, 1}}] = MultiPoly(1);
  return e;
}

void DiffExpr::add_term(const Mono& m, const MultiPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

DiffExpr DiffExpr::operator-() const {
  DiffExpr r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

DiffExpr& DiffExpr::operator+=(const DiffExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

DiffExpr& DiffExpr::operator-=(const DiffExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

DiffExpr& DiffExpr::operator*=(const DiffExpr& o) {
  DiffExpr r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  *this = std::move(r);
  return *this;
}

DiffExpr DiffExpr::pow(unsigned k) const {
  DiffExpr r(1), b = *this;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

DiffExpr DiffExpr::derive(const std::function<DiffExpr(const Atom&)>& on_atom,
                          const std::function<MultiPoly(const MultiPoly&)>& on_coef) const {
  DiffExpr out;
  for (const auto& [m, c] : terms_) {
    MultiPoly dc = on_coef(c);
    if (!dc.is_zero()) out.add_term(m, dc);
    for (size_t i = 0; i < m.size(); ++i) {
      DiffExpr da = on_atom(m[i].first);
      if (da.is_zero()) continue;
      Mono rest = m;
      if (--rest[i].second == 0) rest.erase(rest.begin() + static_cast<long>(i));
      DiffExpr piece;
      piece.terms_[rest] = c * MultiPoly(Rational(m[i].second));
      out += piece * da;
    }
  }
  return out;
}

namespace {
MultiPoly zero_coef(const MultiPoly&) { return MultiPoly(); }
}  // namespace

DiffExpr DiffExpr::apply_d(int k) const {
  DiffExpr r = *this;
  for (int s = 0; s < k; ++s)
    r = r.derive(
        [](const Atom& a) {
          // d eps^e = (eps + 1)^e d
          DiffExpr out;
          for (int j = 0; j <= a.eps; ++j) {
            Atom b = a;
            b.eps = j;
            b.d += 1;
            out += DiffExpr(MultiPoly(binomial(Rational(a.eps), j))) * DiffExpr::atom(b);
          }
          return out;
        },
        zero_coef);
  return r;
}

DiffExpr DiffExpr::apply_eps() const {
  return derive(
      [](const Atom& a) {
        Atom b = a;
        b.eps += 1;
        return DiffExpr::atom(b);
      },
      zero_coef);
}

DiffExpr DiffExpr::apply_t(int i, int k) const {
  DiffExpr r = *this;
  std::string v = tvar(i);
  for (int s = 0; s < k; ++s)
    r = r.derive(
        [i](const Atom& a) {
          Atom b = a;
          b.set_t(i, a.t_order(i) + 1);
          return DiffExpr::atom(b);
        },
        [&v](const MultiPoly& c) { return c.diff(v); });
  return r;
}

DiffExpr DiffExpr::apply_w(int k) const {
  DiffExpr r = *this;
  for (int s = 0; s < k; ++s)
    r = r.derive(
        [](const Atom& a) {
          Atom b = a;
          b.dw += 1;
          return DiffExpr::atom(b);
        },
        [](const MultiPoly& c) { return c.diff("w"); });
  return r;
}

DiffExpr DiffExpr::substitute(const std::string& fn, const std::function<DiffExpr(const Atom&)>& f) const {
  std::map<Atom, DiffExpr> cache;
  DiffExpr out;
  for (const auto& [m, c] : terms_) {
    DiffExpr prod(c);
    for (const auto& [a, k] : m) {
      if (a.fn != fn) {
        DiffExpr x;
        x.terms_[Mono{{a, k}}] = MultiPoly(1);
        prod *= x;
        continue;
      }
      auto it = cache.find(a);
      if (it == cache.end()) it = cache.emplace(a, f(a)).first;
      prod *= it->second.pow(static_cast<unsigned>(k));
      if (prod.is_zero()) break;
    }
    out += prod;
  }
  return out;
}

DiffExpr DiffExpr::map_coefficients(const std::function<MultiPoly(const MultiPoly&)>& f) const {
  DiffExpr out;
  for (const auto& [m, c] : terms_) out.add_term(m, f(c));
  return out;
}

std::set<std::string> DiffExpr::coefficient_vars() const {
  std::set<std::string> s;
  for (const auto& [m, c] : terms_)
    for (const auto& [e, r] : c.terms())
      for (size_t i = 0; i < e.size(); ++i)
        if (e[i]) s.insert(c.vars()[i]);
  return s;
}

std::set<std::string> DiffExpr::functions() const {
  std::set<std::string> s;
  for (const auto& [m, c] : terms_)
    for (const auto& [a, k] : m) s.insert(a.fn);
  return s;
}

DiffExpr DiffExpr::without_dw() const {
  DiffExpr out;
  for (const auto& [m, c] : terms_) {
    bool has = false;
    for (const auto& [a, k] : m) has = has || a.dw > 0;
    if (!has) out.terms_[m] = c;
  }
  return out;
}

DiffExpr DiffExpr::without_w_terms() const {
  DiffExpr out;
  for (const auto& [m, c] : terms_) {
    MultiPoly kept = c.coeff("w", 0);
    out.add_term(m, kept);
  }
  return out;
}

std::string DiffExpr::str() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Mono, MultiPoly>*> order;
  for (const auto& kv : terms_) order.push_back(&kv);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
    int oa = mono_order(a->first), ob = mono_order(b->first);
    if (oa != ob) return oa > ob;
    return a->first.size() > b->first.size();
  });
  std::string out;
  for (auto* kv : order) {
    const Mono& m = kv->first;
    std::string s = coef_str(kv->second, m.empty());
    for (size_t i = 0; i < m.size(); ++i) {
      if (i) s += "*";
      if (m[i].second == 1 && m.size() == 1)
        s += m[i].first.str();
      else if (m[i].second == 1)
        s += "(" + m[i].first.str() + ")";
      else
        s += "(" + m[i].first.str() + ")^" + std::to_string(m[i].second);
    }
    if (out.empty())
      out = s;
    else if (s[0] == '-')
      out += " - " + s.substr(1);
    else
      out += " + " + s;
  }
  return out;
}

std::optional<Rational> proportional(const DiffExpr& a, const DiffExpr& b) {
  if (a.is_zero() || b.is_zero()) {
    if (a.is_zero() && b.is_zero()) return Rational(1);
    return std::nullopt;
  }
  const auto& [m, ca] = *a.terms().begin();
  auto it = b.terms().find(m);
  if (it == b.terms().end()) return std::nullopt;
  auto r = proportional(ca, it->second);
  if (!r) return std::nullopt;
  if (a == DiffExpr(MultiPoly(*r)) * b) return r;
  return std::nullopt;
}

namespace pde {
DiffExpr Q() { return DiffExpr::atom(Atom{}); }
DiffExpr d(const DiffExpr& x, int k) { return x.apply_d(k); }
DiffExpr eps(const DiffExpr& x) { return x.apply_eps(); }
DiffExpr dt(int i, const DiffExpr& x, int k) { return x.apply_t(i, k); }
DiffExpr dw(const DiffExpr& x, int k) { return x.apply_w(k); }
DiffExpr bracket(const DiffExpr& f, const DiffExpr& g) { return f * g.apply_d() - f.apply_d() * g; }
MultiPoly t(int i) { return MultiPoly::var(tvar(i)); }
MultiPoly w() { return MultiPoly::var("w"); }
}  // namespace pde

// ---------------------------------------------------------------- log form

DiffExpr to_logtau_pde(const HirotaOperator& P0) {
  HirotaOperator P = even_part(P0);
  if (P.is_zero()) return DiffExpr();
  std::vector<int> idx;
  for (const auto& v : P.vars()) idx.push_back(suffix_index(v));
  const size_t K = idx.size();
  std::vector<MultiPoly::Exps> support;
  for (const auto& [e, c] : P.terms()) support.push_back(e);
  auto dominated = [&](const MultiPoly::Exps& a) {
    for (const auto& b : support) {
      bool ok = true;
      for (size_t i = 0; i < K && ok; ++i) ok = a[i] <= b[i];
      if (ok) return true;
    }
    return false;
  };
  // every alpha <= some beta with |alpha| even >= 2
  std::vector<MultiPoly::Exps> alphas;
  std::set<MultiPoly::Exps> seen;
  for (const auto& b : support) {
    MultiPoly::Exps a(K, 0);
    while (true) {
      int s = 0;
      for (int x : a) s += x;
      if (s >= 2 && s % 2 == 0 && seen.insert(a).second) alphas.push_back(a);
      size_t i = 0;
      while (i < K && a[i] == b[i]) a[i++] = 0;
      if (i == K) break;
      ++a[i];
    }
  }
  auto yname = [](size_t i) { return "y" + std::to_string(i + 1); };
  MultiPoly S;
  for (size_t j = 0; j < alphas.size(); ++j) {
    Rational c = 2;
    MultiPoly term = MultiPoly::var("u" + std::to_string(j));
    for (size_t i = 0; i < K; ++i) {
      c /= Rational(factorial(alphas[j][i]));
      if (alphas[j][i]) term *= MultiPoly::var(yname(i), alphas[j][i]);
    }
    S += MultiPoly(c) * term;
  }
  auto trunc = [&](const MultiPoly& X) {
    std::vector<int> ypos(X.vars().size(), -1);
    for (size_t v = 0; v < X.vars().size(); ++v)
      if (X.vars()[v][0] == 'y') ypos[v] = std::stoi(X.vars()[v].substr(1)) - 1;
    return filter_terms(X, [&](const MultiPoly::Exps& e) {
      MultiPoly::Exps a(K, 0);
      for (size_t v = 0; v < e.size(); ++v)
        if (ypos[v] >= 0) a[ypos[v]] = e[v];
      return dominated(a);
    });
  };
  int D = P.total_degree();
  MultiPoly E(1), Sk(1);
  for (int k = 1; 2 * k <= D; ++k) {
    Sk = trunc(Sk * S);
    E += MultiPoly(Rational(1) / Rational(factorial(k))) * Sk;
  }
  MultiPoly acc;
  for (const auto& [beta, c] : P.terms()) {
    MultiPoly x = E;
    Rational w = c;
    for (size_t i = 0; i < K; ++i) {
      x = x.coeff(yname(i), beta[i]);
      w *= Rational(factorial(beta[i]));
    }
    acc += MultiPoly(w / 2) * x;
  }
  DiffExpr out;
  for (const auto& [e, c] : acc.terms()) {
    DiffExpr term{MultiPoly(c)};
    for (size_t v = 0; v < e.size(); ++v) {
      if (!e[v]) continue;
      const auto& a = alphas[static_cast<size_t>(std::stoi(acc.vars()[v].substr(1)))];
      Atom at;
      at.fn = "U";
      for (size_t i = 0; i < K; ++i)
        if (a[i]) at.set_t(idx[i], a[i]);
      term *= DiffExpr::atom(at).pow(static_cast<unsigned>(e[v]));
    }
    out += term;
  }
  return out;
}

// ---------------------------------------------------------------- Virasoro rules

namespace {

MultiPoly gamma_p(int p, int n) {
  MultiPoly g;
  for (int i = 1; i < p; ++i)
    g += MultiPoly(rat(i * (p - i), 2 * p)) * MultiPoly::var(tvar(i)) * MultiPoly::var(tvar(p - i));
  g -= MultiPoly(rat(p - 1, 2)) * MultiPoly::var(tvar(p));
  if (n > 0) g += MultiPoly(Rational(n)) * MultiPoly::var(tvar(p)) + MultiPoly::var("c0");
  return g;
}

std::string unsupported(const Atom& a, int p) {
  return "virasoro_substitute: partial " + a.str() + " outside the rule set for p=" + std::to_string(p);
}

Atom g_atom(const std::vector<int>& ell, int d) {
  Atom a;
  a.fn = "g";
  for (size_t i = 0; i < ell.size(); ++i)
    if (ell[i] && i + 1 != 1) a.set_t(static_cast<int>(i + 1), ell[i]);
  a.d = d;
  return a;
}

// pure t-partial with ell_1 possibly > 0, no d_p, d_{p+1}
DiffExpr rule_pure(std::vector<int> ell, int p, int n) {
  int l1 = ell.empty() ? 0 : ell[0];
  if (l1 == 0) return DiffExpr::atom(g_atom(ell, 0));
  MultiPoly corr = gamma_p(p, n);
  for (int k = 0; k < l1 - 1; ++k) corr = corr.diff(tvar(1));
  for (size_t i = 1; i < ell.size(); ++i)
    for (int k = 0; k < ell[i]; ++k) corr = corr.diff(tvar(static_cast<int>(i + 1)));
  corr = corr.subs(tvar(1), MultiPoly()).subs(tvar(p), MultiPoly());
  return DiffExpr::atom(g_atom(ell, l1)) - DiffExpr(corr);
}

DiffExpr eps_prime(const DiffExpr& x, int n) {
  if (n == 0) return x.apply_eps();
  return x.apply_eps() - DiffExpr(pde::w()) * x.apply_w();
}

DiffExpr rule(const Atom& a, int p, int n) {
  if (a.eps || a.d || a.dw) throw std::invalid_argument("virasoro_substitute: expects pure t-partials, got " + a.str());
  std::vector<int> ell = a.t;
  ell.resize(std::max<size_t>(ell.size(), static_cast<size_t>(p + 1)), 0);
  for (size_t i = p + 1; i < ell.size(); ++i)
    if (ell[i]) throw std::invalid_argument(unsupported(a, p));
  int m = 0;
  Rational sign = 1;
  if (ell[p - 1]) {
    if (n == 0) return DiffExpr();
    m = ell[p - 1];
    if (m % 2) sign = -1;
    ell[p - 1] = 0;
  }
  int lp1 = ell[p];
  ell[p] = 0;
  DiffExpr base;
  if (lp1 == 0) {
    base = rule_pure(ell, p, n);
  } else {
    if (lp1 != 1) throw std::invalid_argument(unsupported(a, p));
    std::vector<int> rest = ell;
    while (!rest.empty() && rest.back() == 0) rest.pop_back();
    auto unit = [](int i) {
      std::vector<int> v(static_cast<size_t>(i), 0);
      v[static_cast<size_t>(i - 1)] = 1;
      return v;
    };
    auto add_unit = [](std::vector<int> v, int i) {
      if (static_cast<int>(v.size()) < i) v.resize(static_cast<size_t>(i), 0);
      v[static_cast<size_t>(i - 1)] += 1;
      return v;
    };
    MultiPoly inv(rat(1, p));
    if (rest.empty()) {
      // d_{p+1} g = eps' g - c_p - (1/p) sum i t_i d_i g
      base = eps_prime(DiffExpr::atom(g_atom({}, 0)), n) - DiffExpr(MultiPoly::var("c1"));
      for (int i = 2; i <= p - 1; ++i)
        base -= DiffExpr(inv * MultiPoly(Rational(i)) * pde::t(i)) * rule_pure(unit(i), p, n);
    } else if (rest == unit(1)) {
      base = eps_prime(DiffExpr::atom(g_atom({}, 1)), n) - DiffExpr(inv) * rule_pure(unit(1), p, n);
      for (int i = 2; i <= p - 1; ++i)
        base -= DiffExpr(inv * MultiPoly(Rational(i)) * pde::t(i)) * rule_pure(add_unit(unit(1), i), p, n);
    } else if (rest == unit(2) && p >= 3) {
      base = eps_prime(DiffExpr::atom(g_atom(unit(2), 0)), n) - DiffExpr(inv * MultiPoly(2)) * rule_pure(unit(2), p, n);
      for (int i = 2; i <= p - 1; ++i)
        base -= DiffExpr(inv * MultiPoly(Rational(i)) * pde::t(i)) * rule_pure(add_unit(unit(2), i), p, n);
    } else {
      throw std::invalid_argument(unsupported(a, p));
    }
  }
  return DiffExpr(MultiPoly(sign)) * base.apply_w(m);
}

}  // namespace

DiffExpr virasoro_substitute(const DiffExpr& e, int p, int n) {
  if (p < 2) throw std::invalid_argument("virasoro_substitute: p >= 2");
  if (n < 0) throw std::invalid_argument("virasoro_substitute: n >= 0");
  return e.substitute("U", [&](const Atom& a) { return rule(a, p, n); });
}

// ---------------------------------------------------------------- derivations

std::string to_string(PdeEquation e) {
  switch (e) {
    case PdeEquation::Y3: return "Y3";
    case PdeEquation::Y4: return "Y4";
    case PdeEquation::Y3Y4: return "Y3Y4";
    case PdeEquation::Y5Y14: return "Y5Y14";
    case PdeEquation::Bous: return "Bous";
  }
  return "?";
}

PdeEquation parse_equation(const std::string& s) {
  for (auto e : {PdeEquation::Y3, PdeEquation::Y4, PdeEquation::Y3Y4, PdeEquation::Y5Y14, PdeEquation::Bous})
    if (to_string(e) == s) return e;
  throw std::invalid_argument("unknown equation '" + s + "' (expected Y3, Y4, Y3Y4, Y5Y14, Bous)");
}

namespace {

DiffExpr normalized(const DiffExpr& e, const Atom& lead) {
  auto it = e.terms().find(DiffExpr::Mono{{lead, 1}});
  if (it == e.terms().end() || !it->second.is_constant()) throw std::logic_error("normalization atom missing");
  return DiffExpr(MultiPoly(Rational(1) / it->second.constant_term())) * e;
}

Atom u_atom(std::initializer_list<std::pair<int, int>> parts) {
  Atom a;
  a.fn = "U";
  for (auto [i, k] : parts) a.set_t(i, k);
  return a;
}

const char* kSupported =
    "supported: Y3 (p=2..5), Y4/Y3Y4/Bous (p=3,4), Y5Y14 (p=4); n in {0,1}";

void check_supported(PdeEquation e, int p, int n) {
  bool ok = (n == 0 || n == 1);
  switch (e) {
    case PdeEquation::Y3: ok = ok && p >= 2 && p <= 5; break;
    case PdeEquation::Y4:
    case PdeEquation::Y3Y4:
    case PdeEquation::Bous: ok = ok && (p == 3 || p == 4); break;
    case PdeEquation::Y5Y14: ok = ok && p == 4; break;
  }
  if (!ok)
    throw std::invalid_argument("derive_gap_pde: unsupported (" + to_string(e) + ", p=" + std::to_string(p) +
                                ", n=" + std::to_string(n) + "); " + kSupported);
}

DiffExpr g0_value(const Atom& a, const MultiPoly& logtau) {
  if (a.eps || a.d) return DiffExpr();
  if (a.dw) throw std::logic_error("derive_gap_pde: surviving d_w partial of log tau: " + a.str());
  MultiPoly v = logtau;
  for (int i = 1; i <= static_cast<int>(a.t.size()); ++i)
    for (int k = 0; k < a.t[static_cast<size_t>(i - 1)]; ++k) v = v.diff(tvar(i));
  return DiffExpr(v.subs(tvar(1), MultiPoly()));
}

DiffExpr derive_from_logform(const DiffExpr& logform, int p, int n) {
  DiffExpr gam = virasoro_substitute(logform, p, n);
  auto as = [](const Atom& a, const char* fn) {
    Atom b = a;
    b.fn = fn;
    return DiffExpr::atom(b);
  };
  DiffExpr full = gam.substitute("g", [&](const Atom& a) { return as(a, "Q") + as(a, "G0"); });
  DiffExpr base = gam.substitute("g", [&](const Atom& a) { return as(a, "G0"); });
  DiffExpr diff = full - base;
  MultiPoly logtau = topological_tau_log(p);
  DiffExpr out = diff.substitute("G0", [&](const Atom& a) { return g0_value(a, logtau); });
  for (const auto& v : out.coefficient_vars())
    if (v == "c0" || v == "c1")
      throw std::logic_error("derive_gap_pde: additive constant " + v + " did not cancel");
  return out;
}

}  // namespace

DiffExpr hirota_logform(PdeEquation e) {
  switch (e) {
    case PdeEquation::Y3:
      return normalized(to_logtau_pde(hirota_equation(3, HirotaKind::Y)), u_atom({{1, 4}}));
    case PdeEquation::Y4:
      return normalized(to_logtau_pde(hirota_equation(4, HirotaKind::Y)), u_atom({{1, 3}, {2, 1}}));
    case PdeEquation::Y5Y14: {
      HirotaOperator op = MultiPoly(12) * even_part(hirota_equation(5, HirotaKind::Y)) +
                          MultiPoly(2) * even_part(hirota_equation(5, HirotaKind::Y1));
      return normalized(to_logtau_pde(op), u_atom({{1, 2}, {2, 2}}));
    }
    default: throw std::invalid_argument("hirota_logform: no single Hirota equation for " + to_string(e));
  }
}

GapPDE derive_gap_pde(PdeEquation e, int p, int n) {
  check_supported(e, p, n);
  GapPDE out;
  out.id = to_string(e) + ":p=" + std::to_string(p) + ":n=" + std::to_string(n);
  switch (e) {
    case PdeEquation::Y3:
    case PdeEquation::Y4:
    case PdeEquation::Y5Y14: out.expr = derive_from_logform(hirota_logform(e), p, n); break;
    case PdeEquation::Y3Y4: {
      DiffExpr y3 = derive_from_logform(hirota_logform(PdeEquation::Y3), p, n);
      DiffExpr y4 = derive_from_logform(hirota_logform(PdeEquation::Y4), p, n);
      out.expr = y3.apply_t(2) - y4.apply_d();
      break;
    }
    case PdeEquation::Bous:
      out.expr = derive_from_logform(hirota_logform(PdeEquation::Y3), p, n).apply_d(2);
      break;
  }
  for (const auto& v : out.expr.coefficient_vars()) out.params.push_back(v);
  return out;
}

}  // namespace gp
