#include "gapprob/puiseux.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gp {

namespace {
int padd(int prec, int d) { return prec == PuiseuxSeries::kExact ? prec : prec + d; }
int pmax(int a, int b) { return std::max(a, b); }
}  // namespace

PuiseuxSeries::PuiseuxSeries(std::string var, int ram, int prec) : var_(std::move(var)), ram_(ram), prec_(prec) {
  if (ram < 1) throw std::invalid_argument("ramification index must be >= 1");
}

PuiseuxSeries PuiseuxSeries::from_poly(const MultiPoly& p, const std::string& var, int prec) {
  PuiseuxSeries s(var, 1, prec);
  for (int k = 0; k <= p.degree(var); ++k) {
    MultiPoly c = p.coeff(var, k);
    if (!c.is_zero()) s.c_[k] = c;
  }
  s.drop_below();
  return s;
}

PuiseuxSeries PuiseuxSeries::monomial(const std::string& var, int ram, int k, const MultiPoly& c, int prec) {
  PuiseuxSeries s(var, ram, prec);
  if (!c.is_zero()) s.c_[k] = c;
  s.drop_below();
  return s;
}

void PuiseuxSeries::drop_below() {
  if (exact()) return;
  c_.erase(c_.begin(), c_.lower_bound(prec_));
}

int PuiseuxSeries::lead() const {
  if (c_.empty()) throw std::domain_error("lead of zero series");
  return c_.rbegin()->first;
}

MultiPoly PuiseuxSeries::coeff(int k) const {
  if (k < prec_) throw std::out_of_range("coefficient below truncation of series in " + var_);
  auto it = c_.find(k);
  return it == c_.end() ? MultiPoly() : it->second;
}

MultiPoly PuiseuxSeries::coeff_at(const Rational& e) const {
  Rational k = e * ram_;
  if (boost::multiprecision::denominator(k) != 1) return {};
  return coeff(static_cast<int>(boost::multiprecision::numerator(k)));
}

PuiseuxSeries PuiseuxSeries::with_ram(int r) const {
  if (r % ram_) throw std::invalid_argument("ramification must be a multiple");
  int f = r / ram_;
  PuiseuxSeries s(var_, r, exact() ? kExact : prec_ * f);
  for (auto& [k, c] : c_) s.c_[k * f] = c;
  return s;
}

PuiseuxSeries PuiseuxSeries::truncated(int prec) const {
  PuiseuxSeries s = *this;
  s.prec_ = pmax(prec_, prec);
  s.drop_below();
  return s;
}

PuiseuxSeries PuiseuxSeries::shifted(int k) const {
  PuiseuxSeries s(var_, ram_, padd(prec_, k));
  for (auto& [i, c] : c_) s.c_[i + k] = c;
  return s;
}

PuiseuxSeries PuiseuxSeries::operator-() const {
  PuiseuxSeries s = *this;
  for (auto& [k, c] : s.c_) c = -c;
  return s;
}

static void align(PuiseuxSeries& a, PuiseuxSeries& b) {
  if (a.var() != b.var()) throw std::invalid_argument("series in different variables");
  int r = std::lcm(a.ram(), b.ram());
  a = a.with_ram(r);
  b = b.with_ram(r);
}

PuiseuxSeries operator+(const PuiseuxSeries& x, const PuiseuxSeries& y) {
  PuiseuxSeries a = x, b = y;
  align(a, b);
  PuiseuxSeries s(a.var_, a.ram_, pmax(a.prec_, b.prec_));
  s.c_ = a.c_;
  for (auto& [k, c] : b.c_) {
    MultiPoly v = s.c_[k] + c;
    if (v.is_zero())
      s.c_.erase(k);
    else
      s.c_[k] = v;
  }
  s.drop_below();
  return s;
}

PuiseuxSeries operator*(const PuiseuxSeries& x, const PuiseuxSeries& y) {
  PuiseuxSeries a = x, b = y;
  align(a, b);
  // effective upper bound on each operand's exponents, unknown part included
  auto leff = [](const PuiseuxSeries& s) {
    int l = s.c_.empty() ? PuiseuxSeries::kExact : s.c_.rbegin()->first;
    return s.exact() ? l : std::max(l, s.prec_ - 1);
  };
  int prec = PuiseuxSeries::kExact;
  if (!a.exact()) prec = pmax(prec, b.c_.empty() && b.exact() ? PuiseuxSeries::kExact : a.prec_ + leff(b));
  if (!b.exact()) prec = pmax(prec, a.c_.empty() && a.exact() ? PuiseuxSeries::kExact : b.prec_ + leff(a));
  PuiseuxSeries s(a.var_, a.ram_, prec);
  for (auto& [ka, ca] : a.c_)
    for (auto& [kb, cb] : b.c_) {
      int k = ka + kb;
      if (k < prec) continue;
      MultiPoly v = s.c_[k] + ca * cb;
      if (v.is_zero())
        s.c_.erase(k);
      else
        s.c_[k] = v;
    }
  return s;
}

PuiseuxSeries operator*(const MultiPoly& c, const PuiseuxSeries& s) {
  PuiseuxSeries r(s.var_, s.ram_, s.prec_);
  if (c.is_zero()) return r;
  for (auto& [k, v] : s.c_) r.c_[k] = c * v;
  return r;
}

PuiseuxSeries PuiseuxSeries::pow(const Rational& q, int floor) const {
  int L0 = lead();
  if (!(c_.at(L0) == MultiPoly(1))) throw std::domain_error("puiseux_pow: leading coefficient must be 1");
  Rational e = Rational(L0) * q / ram_;
  int R = std::lcm(ram_, static_cast<int>(boost::multiprecision::denominator(e)));
  PuiseuxSeries s = with_ram(R);
  int L = s.lead();
  int K = static_cast<int>(boost::multiprecision::numerator(Rational(e * R)));
  // y = s / x^L - 1, indices relative (all negative)
  PuiseuxSeries y(var_, R, padd(s.prec_, -L));
  for (auto& [k, c] : s.c_)
    if (k != L) y.c_[k - L] = c;
  int yfloor = floor == kExact ? kExact : floor - K;
  y = y.truncated(yfloor);
  if (y.exact() && !y.c_.empty()) throw std::domain_error("puiseux_pow: infinite expansion needs a floor");
  int ylim = y.prec_;
  PuiseuxSeries acc = monomial(var_, R, 0, MultiPoly(1), ylim);
  PuiseuxSeries term = monomial(var_, R, 0, MultiPoly(1));
  for (int j = 1; !y.c_.empty(); ++j) {
    term = (term * y).truncated(ylim);
    if (term.c_.empty()) break;
    acc = acc + binomial(q, j) * term;
  }
  return acc.shifted(K);
}

MultiPoly PuiseuxSeries::polynomial_part() const {
  if (prec_ > 0) throw std::out_of_range("polynomial part not resolved");
  MultiPoly p;
  for (auto& [k, c] : c_)
    if (k >= 0 && k % ram_ == 0) p += c * MultiPoly::var(var_, k / ram_);
  return p;
}

std::string PuiseuxSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    std::string c = it->second.str();
    if (it->second.terms().size() > 1) c = "(" + c + ")";
    os << c;
    if (it->first != 0) {
      os << "*" << var_ << "^";
      Rational e(it->first, ram_);
      os << (boost::multiprecision::denominator(e) == 1 ? to_string(e) : "(" + to_string(e) + ")");
    }
  }
  if (first) os << "0";
  if (!exact()) os << " + O(" << var_ << "^(" << to_string(Rational(prec_ - 1, ram_)) << "))";
  return os.str();
}

MultiPoly residue(const PuiseuxSeries& s) { return s.coeff_at(Rational(-1)); }

PuiseuxSeries compose(const MultiPoly& P, const std::string& pvar, const PuiseuxSeries& s) {
  int d = P.degree(pvar);
  PuiseuxSeries acc = PuiseuxSeries::monomial(s.var(), s.ram(), 0, P.coeff(pvar, d));
  for (int k = d - 1; k >= 0; --k) acc = acc * s + PuiseuxSeries::monomial(s.var(), s.ram(), 0, P.coeff(pvar, k));
  return acc;
}

PuiseuxSeries puiseux_revert(const MultiPoly& Vprime, const std::string& u, int kmin, const std::string& w) {
  int p = Vprime.degree(u);
  if (p < 1 || !(Vprime.coeff(u, p) == MultiPoly(1))) throw std::invalid_argument("puiseux_revert: V' must be monic");
  PuiseuxSeries x = PuiseuxSeries::monomial(w, p, 1, MultiPoly(1), 1);
  const int floor = kmin - p;  // working floor leaves room for the division by w
  for (int iter = 0; x.prec() > kmin; ++iter) {
    PuiseuxSeries S(w, p);
    PuiseuxSeries upow = PuiseuxSeries::monomial(w, p, 0, MultiPoly(1));
    for (int i = 0; i < p; ++i) {
      MultiPoly c = Vprime.coeff(u, i);
      if (!c.is_zero()) S = S + c * upow;
      upow = (upow * x).truncated(floor);
    }
    PuiseuxSeries T = PuiseuxSeries::monomial(w, p, 0, MultiPoly(1)) - S.shifted(-p);
    PuiseuxSeries nx = T.pow(Rational(1, p), kmin - 1).shifted(1).truncated(kmin);
    if (nx.prec() >= x.prec()) throw std::runtime_error("puiseux_revert: insufficient truncation to reach order");
    x = nx;
  }
  return x;
}

}  // namespace gp
