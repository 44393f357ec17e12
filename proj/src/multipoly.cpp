#include "gapprob/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gp {

namespace {
std::pair<std::string, long> split_name(const std::string& s) {
  size_t k = s.size();
  while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
  if (k == s.size()) return {s, -1};
  return {s.substr(0, k), std::stol(s.substr(k))};
}
}  // namespace

bool var_less(const std::string& a, const std::string& b) {
  auto [pa, na] = split_name(a);
  auto [pb, nb] = split_name(b);
  if (pa != pb) return pa < pb;
  return na < nb;
}

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_[{}] = c;
}

MultiPoly MultiPoly::var(const std::string& name, int power) {
  MultiPoly p;
  if (power == 0) return MultiPoly(1);
  p.vars_ = {name};
  p.terms_[{power}] = 1;
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<std::string> vars, const std::map<Exps, Rational>& terms) {
  std::vector<size_t> order(vars.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return var_less(vars[a], vars[b]); });
  MultiPoly p;
  for (size_t i : order) {
    if (!p.vars_.empty() && p.vars_.back() == vars[i]) throw std::invalid_argument("duplicate variable " + vars[i]);
    p.vars_.push_back(vars[i]);
  }
  for (auto& [e, c] : terms) {
    if (c == 0) continue;
    Exps ne(order.size());
    for (size_t i = 0; i < order.size(); ++i) ne[i] = e.at(order[i]);
    p.terms_[ne] += c;
    if (p.terms_[ne] == 0) p.terms_.erase(ne);
  }
  p.compact();
  return p;
}

bool MultiPoly::is_constant() const { return vars_.empty(); }

Rational MultiPoly::constant_term() const {
  Exps z(vars_.size(), 0);
  auto it = terms_.find(z);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::degree(const std::string& v) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) return 0;
  size_t k = it - vars_.begin();
  int d = 0;
  for (auto& [e, c] : terms_) d = std::max(d, e[k]);
  return d;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

int MultiPoly::weighted_degree(const std::map<std::string, int>& weight, bool* homogeneous) const {
  int w = -1;
  bool hom = true;
  for (auto& [e, c] : terms_) {
    int s = 0;
    for (size_t i = 0; i < e.size(); ++i) s += e[i] * weight.at(vars_[i]);
    if (w >= 0 && s != w) hom = false;
    w = std::max(w, s);
  }
  if (homogeneous) *homogeneous = hom;
  return w < 0 ? 0 : w;
}

std::vector<std::string> MultiPoly::merged(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), var_less);
  return out;
}

MultiPoly MultiPoly::reindexed(const std::vector<std::string>& nv) const {
  if (nv == vars_) return *this;
  std::vector<size_t> pos(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) pos[i] = std::find(nv.begin(), nv.end(), vars_[i]) - nv.begin();
  MultiPoly r;
  r.vars_ = nv;
  for (auto& [e, c] : terms_) {
    Exps ne(nv.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
    r.terms_.emplace(std::move(ne), c);
  }
  return r;
}

void MultiPoly::compact() {
  std::vector<bool> used(vars_.size(), false);
  for (auto& [e, c] : terms_)
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) used[i] = true;
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
  std::vector<std::string> nv;
  for (size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) nv.push_back(vars_[i]);
  std::map<Exps, Rational> nt;
  for (auto& [e, c] : terms_) {
    Exps ne;
    for (size_t i = 0; i < e.size(); ++i)
      if (used[i]) ne.push_back(e[i]);
    nt.emplace(std::move(ne), c);
  }
  vars_ = std::move(nv);
  terms_ = std::move(nt);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  auto nv = merged(vars_, o.vars_);
  *this = reindexed(nv);
  MultiPoly b = o.reindexed(nv);
  for (auto& [e, c] : b.terms_) {
    auto& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }
  compact();
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  auto nv = merged(vars_, o.vars_);
  MultiPoly a = reindexed(nv), b = o.reindexed(nv);
  MultiPoly r;
  r.vars_ = nv;
  for (auto& [ea, ca] : a.terms_)
    for (auto& [eb, cb] : b.terms_) {
      Exps e(nv.size());
      for (size_t i = 0; i < nv.size(); ++i) e[i] = ea[i] + eb[i];
      auto& slot = r.terms_[e];
      slot += ca * cb;
      if (slot == 0) r.terms_.erase(e);
    }
  r.compact();
  *this = std::move(r);
  return *this;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly r(1), b = *this;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

MultiPoly MultiPoly::diff(const std::string& v) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) return {};
  size_t k = it - vars_.begin();
  MultiPoly r;
  r.vars_ = vars_;
  for (auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exps ne = e;
    ne[k] -= 1;
    r.terms_[ne] += c * e[k];
  }
  r.compact();
  return r;
}

MultiPoly MultiPoly::coeff(const std::string& v, int k) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) return k == 0 ? *this : MultiPoly();
  size_t idx = it - vars_.begin();
  MultiPoly r;
  r.vars_ = vars_;
  for (auto& [e, c] : terms_) {
    if (e[idx] != k) continue;
    Exps ne = e;
    ne[idx] = 0;
    r.terms_[ne] += c;
  }
  r.compact();
  return r;
}

MultiPoly MultiPoly::subs(const std::string& v, const MultiPoly& val) const {
  int d = degree(v);
  if (d == 0) return *this;
  MultiPoly r, pw(1);
  for (int k = 0; k <= d; ++k) {
    r += coeff(v, k) * pw;
    pw *= val;
  }
  return r;
}

double MultiPoly::eval(const std::map<std::string, double>& values) const {
  std::vector<double> x(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = values.find(vars_[i]);
    if (it == values.end()) throw std::invalid_argument("no value for variable " + vars_[i]);
    x[i] = it->second;
  }
  double s = 0;
  for (auto& [e, c] : terms_) {
    double m = to_double(c);
    for (size_t i = 0; i < e.size(); ++i) m *= std::pow(x[i], e[i]);
    s += m;
  }
  return s;
}

Rational MultiPoly::eval_exact(const std::map<std::string, Rational>& values) const {
  Rational s = 0;
  for (auto& [e, c] : terms_) {
    Rational m = c;
    for (size_t i = 0; i < e.size(); ++i) {
      auto it = values.find(vars_[i]);
      if (it == values.end()) throw std::invalid_argument("no value for variable " + vars_[i]);
      for (int k = 0; k < e[i]; ++k) m *= it->second;
    }
    s += m;
  }
  return s;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exps, Rational>> ts(terms_.begin(), terms_.end());
  auto deg = [](const Exps& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
  };
  std::stable_sort(ts.begin(), ts.end(), [&](auto& a, auto& b) {
    int da = deg(a.first), db = deg(b.first);
    if (da != db) return da < db;
    return a.first > b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : ts) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (a != 1 || deg(e) == 0) {
      os << to_string(a);
      need_star = true;
    }
    for (size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (need_star) os << "*";
      os << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

MultiPoly integrate_gradient(const std::vector<std::string>& vars, const std::vector<MultiPoly>& grad) {
  for (size_t i = 0; i < vars.size(); ++i)
    for (size_t j = i + 1; j < vars.size(); ++j)
      if (!(grad[i].diff(vars[j]) == grad[j].diff(vars[i])))
        throw std::logic_error("gradient not integrable in " + vars[i] + "," + vars[j]);
  MultiPoly euler;
  for (size_t i = 0; i < vars.size(); ++i) euler += MultiPoly::var(vars[i]) * grad[i];
  // each monomial of degree d in sum v_i G_i equals d times its coefficient in F
  std::map<MultiPoly::Exps, Rational> t;
  for (auto& [e, c] : euler.terms()) {
    int d = 0;
    for (int x : e) d += x;
    t[e] = c / d;
  }
  MultiPoly f = MultiPoly::from_terms(euler.vars(), t);
  for (size_t i = 0; i < vars.size(); ++i)
    if (!(f.diff(vars[i]) == grad[i])) throw std::logic_error("gradient integration failed for " + vars[i]);
  return f;
}

}  // namespace gp
