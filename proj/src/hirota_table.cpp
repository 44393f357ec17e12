#include "gapprob/hirota.hpp"

namespace gp {

namespace {

MultiPoly dv(int i, int k = 1) { return MultiPoly::var(dsym(i), k); }
MultiPoly q(long a, long b = 1) { return MultiPoly(rat(a, b)); }
DiffExpr k(long a, long b = 1) { return DiffExpr(q(a, b)); }
DiffExpr u(std::initializer_list<std::pair<int, int>> parts) {
  Atom a;
  a.fn = "U";
  for (auto [i, e] : parts) a.set_t(i, e);
  return DiffExpr::atom(a);
}

}  // namespace

std::vector<HirotaTableRow> hirota_table() {
  struct Src {
    std::string label, from;
    HirotaOperator computed;
    MultiPoly op;
    DiffExpr log;
  };
  auto ev = [](int l, HirotaKind kind) { return even_part(hirota_equation(l, kind)); };
  std::vector<Src> rows;
  rows.push_back({"Y3", "even part of Y3", ev(3, HirotaKind::Y),
                  q(-4) * dv(1) * dv(3) + q(3) * dv(2, 2) + dv(1, 4),
                  u({{1, 4}}) + k(6) * u({{1, 2}}).pow(2) + k(3) * u({{2, 2}}) - k(4) * u({{1, 1}, {3, 1}})});
  rows.push_back({"Y4", "even part of Y4", ev(4, HirotaKind::Y),
                  q(-3) * dv(1) * dv(4) + q(2) * dv(2) * dv(3) + dv(2) * dv(1, 3),
                  k(-3) * u({{1, 1}, {4, 1}}) + k(2) * u({{2, 1}, {3, 1}}) + u({{1, 3}, {2, 1}}) +
                      k(6) * u({{1, 2}}) * u({{1, 1}, {2, 1}})});
  rows.push_back({"Y5", "even part of Y5", ev(5, HirotaKind::Y),
                  q(1, 4) * dv(2) * dv(4) - q(3, 5) * dv(1) * dv(5) + q(1, 9) * dv(3, 2) + q(1, 9) * dv(1, 3) * dv(3) +
                      q(1, 8) * dv(1, 2) * dv(2, 2) + q(1, 360) * dv(1, 6),
                  k(-108, 5) * u({{1, 1}, {5, 1}}) + k(1, 10) * u({{1, 6}}) + k(6) * u({{1, 2}}).pow(3) +
                      k(3) * u({{1, 4}}) * u({{1, 2}}) + k(9) * u({{2, 1}, {4, 1}}) + k(4) * u({{3, 2}}) +
                      k(4) * u({{1, 3}, {3, 1}}) + k(24) * u({{1, 2}}) * u({{1, 1}, {3, 1}}) +
                      k(9) * u({{1, 2}}) * u({{2, 2}}) + k(9, 2) * u({{1, 2}, {2, 2}}) +
                      k(18) * u({{1, 1}, {2, 1}}).pow(2)});
  // the row printed as Y_{1,4} is the raw y1*y4 coefficient of the bilinear expansion
  rows.push_back({"Y_{1,4}", "even part of the raw y1*y4 coefficient (Y5 + Y_{1,4}/2)", ev(5, HirotaKind::Y1Raw),
                  q(-1, 8) * dv(2) * dv(4) + q(1, 10) * dv(1) * dv(5) + q(1, 18) * dv(3, 2) -
                      q(1, 36) * dv(1, 3) * dv(3) - q(1, 360) * dv(1, 6),
                  k(-36, 5) * u({{1, 1}, {5, 1}}) + k(1, 5) * u({{1, 6}}) + k(12) * u({{1, 2}}).pow(3) +
                      k(6) * u({{1, 4}}) * u({{1, 2}}) + k(9) * u({{2, 1}, {4, 1}}) - k(4) * u({{3, 2}}) +
                      k(2) * u({{1, 3}, {3, 1}}) + k(12) * u({{1, 2}}) * u({{1, 1}, {3, 1}})});
  rows.push_back({"4Y_{1,4}+10Y5", "12 Y5 + 2 Y_{1,4} (even parts)",
                  q(12) * ev(5, HirotaKind::Y) + q(2) * ev(5, HirotaKind::Y1),
                  q(1, 2) * dv(2) * dv(4) - q(2) * dv(1) * dv(5) + q(2, 3) * dv(3, 2) + q(1, 3) * dv(1, 3) * dv(3) +
                      q(1, 2) * dv(1, 2) * dv(2, 2),
                  k(-4) * u({{1, 1}, {5, 1}}) + u({{2, 1}, {4, 1}}) + k(4, 3) * u({{3, 2}}) +
                      k(2, 3) * u({{1, 3}, {3, 1}}) + k(4) * u({{1, 2}}) * u({{1, 1}, {3, 1}}) +
                      u({{1, 2}, {2, 2}}) + k(4) * u({{1, 1}, {2, 1}}).pow(2) + k(2) * u({{1, 2}}) * u({{2, 2}})});
  std::vector<HirotaTableRow> out;
  for (const auto& s : rows) {
    HirotaTableRow r;
    r.label = s.label;
    r.computed_from = s.from;
    r.listed_op = s.op;
    r.computed_op = s.computed;
    r.op_scale = proportional(s.op, s.computed);
    DiffExpr lg = to_logtau_pde(s.computed);
    r.listed_log = s.log.str();
    r.computed_log = lg.str();
    r.log_scale = proportional(s.log, lg);
    out.push_back(r);
  }
  return out;
}

}  // namespace gp
