#include "ddfpp/weno.hpp"

#include <cmath>
#include <vector>

namespace ddfpp {

namespace {

// Coefficients of the point value at xi of the polynomial whose cell averages over consecutive unit
// cells starting at `first` (centre cell is 0) match the data. Uses the primitive-function trick.
std::vector<double> point_coefficients(int first, int ncells, double xi) {
  std::vector<double> edges(ncells + 1);
  for (int l = 0; l <= ncells; ++l) edges[l] = first - 0.5 + l;
  std::vector<double> dl(ncells + 1, 0.0);  // derivative of the l-th Lagrange basis at xi
  for (int l = 0; l <= ncells; ++l) {
    double denom = 1.0;
    for (int r = 0; r <= ncells; ++r)
      if (r != l) denom *= edges[l] - edges[r];
    double num = 0.0;
    for (int q = 0; q <= ncells; ++q) {
      if (q == l) continue;
      double prod = 1.0;
      for (int r = 0; r <= ncells; ++r)
        if (r != l && r != q) prod *= xi - edges[r];
      num += prod;
    }
    dl[l] = num / denom;
  }
  std::vector<double> c(ncells, 0.0);
  for (int m = 0; m < ncells; ++m)
    for (int l = m + 1; l <= ncells; ++l) c[m] += dl[l];
  return c;
}

}  // namespace

WenoNodeTable make_weno_node(double xi) {
  WenoNodeTable t;
  t.xi = xi;
  for (int r = 0; r < 3; ++r) {
    auto c = point_coefficients(r - 2, 3, xi);
    for (int m = 0; m < 3; ++m) t.c[r][m] = c[m];
  }
  auto full = point_coefficients(-2, 5, xi);
  t.d[0] = full[0] / t.c[0][0];
  t.d[2] = full[4] / t.c[2][2];
  t.d[1] = 1.0 - t.d[0] - t.d[2];
  return t;
}

const WenoNodeTable& weno_table_right_edge() {
  static const WenoNodeTable t = make_weno_node(0.5);
  return t;
}

const WenoNodeTable& weno_table_left_edge() {
  static const WenoNodeTable t = make_weno_node(-0.5);
  return t;
}

const std::array<WenoNodeTable, 4>& weno_tables_gauss_lobatto() {
  static const std::array<WenoNodeTable, 4> t = [] {
    const double a = 0.5 / std::sqrt(5.0);
    return std::array<WenoNodeTable, 4>{make_weno_node(-0.5), make_weno_node(-a), make_weno_node(a),
                                        make_weno_node(0.5)};
  }();
  return t;
}

double weno5z_point(double left2, double left1, double c, double right1, double right2, EdgeBias bias) {
  const double v[5] = {left2, left1, c, right1, right2};
  return weno5z_eval(v, bias == EdgeBias::Right ? weno_table_right_edge() : weno_table_left_edge());
}

}  // namespace ddfpp
