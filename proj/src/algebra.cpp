#include "gapprob/algebra.hpp"

#include <functional>

namespace gp {

std::string tvar(int i) { return "t" + std::to_string(i); }

std::vector<MultiPoly> schur_polynomials(int k_max, const std::vector<MultiPoly>& args) {
  std::vector<MultiPoly> p(k_max + 1);
  if (k_max < 0) return {};
  p[0] = MultiPoly(1);
  for (int l = 1; l <= k_max; ++l) {
    MultiPoly s;
    for (int i = 1; i <= l && i <= static_cast<int>(args.size()); ++i) s += MultiPoly(Rational(i)) * args[i - 1] * p[l - i];
    p[l] = MultiPoly(Rational(1, l)) * s;
  }
  return p;
}

std::vector<MultiPoly> schur_polynomials(int k_max, int var_count) {
  std::vector<MultiPoly> args;
  for (int i = 1; i <= var_count; ++i) args.push_back(MultiPoly::var(tvar(i)));
  return schur_polynomials(k_max, args);
}

namespace {
MultiPoly det(std::vector<std::vector<MultiPoly>> m) {
  // Laplace along the first row; sizes here are tiny
  size_t n = m.size();
  if (n == 0) return MultiPoly(1);
  if (n == 1) return m[0][0];
  MultiPoly d;
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<MultiPoly>> minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<MultiPoly> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    MultiPoly t = m[0][j] * det(minor);
    if (j % 2) d -= t; else d += t;
  }
  return d;
}
}  // namespace

MultiPoly schur_function(const std::vector<int>& lam) {
  int size = 0;
  for (int x : lam) size += x;
  auto p = schur_polynomials(size + static_cast<int>(lam.size()), size);
  size_t n = lam.size();
  std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      int k = lam[i] - static_cast<int>(i) + static_cast<int>(j);
      if (k >= 0) m[i][j] = p[k];
    }
  return det(m);
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int maxpart) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rem, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(rem - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace gp
