#include <cmath>
#include <numeric>

#include "ddfpp/grid.hpp"
#include "ddfpp/problems.hpp"
#include "doctest.h"

using namespace ddfpp;

static StateVector constant_state() {
  StateVector u;
  u.q = {1.3, 0.2, -0.1, 0.05, 0.4, -0.3, 0.2, 3.0};
  return u;
}

TEST_CASE("edge quadrature rules") {
  const QuadratureRule q2 = edge_quadrature(2);
  CHECK(q2.Q == 1);
  CHECK(q2.nodes[0] == 0.0);
  CHECK(q2.weights[0] == 1.0);
  CHECK(q2.w_hat1 == 0.5);

  const QuadratureRule q5 = edge_quadrature(5);
  CHECK(q5.Q == 4);
  CHECK(q5.L == 4);
  CHECK(q5.w_hat1 == doctest::Approx(1.0 / 12.0));
  CHECK(q5.weights[0] + q5.weights[1] + q5.weights[2] + q5.weights[3] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(q5.nodes[0] == -0.5);
  CHECK(q5.nodes[3] == 0.5);
  CHECK(q5.nodes[1] == doctest::Approx(-0.5 / std::sqrt(5.0)));
  CHECK(q5.weights[1] == doctest::Approx(5.0 / 12.0));
  // exact for cubics on [-1/2, 1/2]: mean of x^2 is 1/12
  double m2 = 0.0;
  for (int m = 0; m < 4; ++m) m2 += q5.weights[m] * q5.nodes[m] * q5.nodes[m];
  CHECK(m2 == doctest::Approx(1.0 / 12.0));

  CHECK_THROWS_AS(edge_quadrature(3), ConfigError);
  CHECK(required_ghost_width(5) >= 3);
  CHECK(required_ghost_width(2) == 2);
}

TEST_CASE("grid geometry") {
  const Grid2D g(4, 2, 0.0, 2.0, -1.0, 1.0, 2);
  CHECK(g.dx() == 0.5);
  CHECK(g.dy() == 1.0);
  CHECK(g.xc(0) == 0.25);
  CHECK(g.yc(1) == 0.5);
  CHECK(g.xf(4) == 2.0);
  CHECK_THROWS(Grid2D(0, 2, 0.0, 1.0, 0.0, 1.0, 2));
}

TEST_CASE("periodic ghosts of a constant field equal the constant") {
  const Grid2D g(5, 4, 0.0, 1.0, 0.0, 1.0, 4);
  CellField f(g);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) f.set_state(i, j, constant_state());
  fill_ghosts(f, BoundarySpec::all(BoundaryKind::Periodic), 0.0);
  for (int j = -4; j < g.ny + 4; ++j)
    for (int i = -4; i < g.nx + 4; ++i) CHECK(f.state(i, j) == constant_state());
}

TEST_CASE("periodic wrap, idempotence and interior sums") {
  const Grid2D g(6, 5, 0.0, 1.0, 0.0, 1.0, 3);
  CellField f(g);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      for (int c = 0; c < kNumVars; ++c) f(c, i, j) = 1.0 + 0.01 * (i + 10 * j) + c;
  double before = 0.0;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) before += f(kRho, i, j);
  const BoundarySpec bc = BoundarySpec::all(BoundaryKind::Periodic);
  fill_ghosts(f, bc, 0.0);
  CHECK(f.state(-1, 0) == f.state(5, 0));
  CHECK(f.state(6, 2) == f.state(0, 2));
  CHECK(f.state(-2, -3) == f.state(4, 2));
  CHECK(f.state(8, 7) == f.state(2, 2));
  CellField f2 = f;
  fill_ghosts(f2, bc, 0.0);
  for (int j = -3; j < g.ny + 3; ++j)
    for (int i = -3; i < g.nx + 3; ++i) CHECK(f2.state(i, j) == f.state(i, j));
  double after = 0.0;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) after += f(kRho, i, j);
  CHECK(after == before);
}

TEST_CASE("reflecting and outflow ghosts") {
  const Grid2D g(3, 3, 0.0, 1.0, 0.0, 1.0, 2);
  CellField f(g);
  StateVector u;
  u.q = {1.0, 1.0, 0.5, 0.2, 0.7, 0.3, 0.1, 4.0};
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) f.set_state(i, j, u);
  BoundarySpec bc = BoundarySpec::all(BoundaryKind::Outflow);
  bc[Side::West].kind = BoundaryKind::Reflecting;
  fill_ghosts(f, bc, 0.0);
  const StateVector gw = f.state(-1, 1);
  CHECK(gw[kMx] == -1.0);
  CHECK(gw[kBx] == -0.7);
  CHECK(gw[kRho] == 1.0);
  CHECK(gw[kEnergy] == 4.0);
  CHECK(gw[kMy] == 0.5);
  CHECK(f.state(4, 1) == u);
  CHECK(f.state(1, -2) == u);
}

TEST_CASE("mismatched periodic pairing is a config error") {
  BoundarySpec bc = BoundarySpec::all(BoundaryKind::Periodic);
  bc[Side::East].kind = BoundaryKind::Outflow;
  CHECK_THROWS_AS(bc.validate(), ConfigError);
  BoundarySpec d = BoundarySpec::all(BoundaryKind::Outflow);
  d[Side::South].kind = BoundaryKind::Dirichlet;  // no data function
  CHECK_THROWS_AS(d.validate(), ConfigError);
}

TEST_CASE("jet bottom boundary injects the inflow state on |x| <= 0.05") {
  const ProblemSpec& jet = find_problem("jet");
  const IdealEos eos{jet.gamma};
  const Grid2D g = make_grid(jet, 40, 120, 5);  // dx = 0.0125: cells 0..3 lie inside the jet
  CellField f = init_cell_averages(jet, g);
  fill_ghosts(f, jet.boundary(eos), 0.0);
  PrimitiveState in;
  in.rho = jet.gamma;
  in.v = {0, 800, 0};
  in.B = {0, std::sqrt(200.0), 0};
  in.p = 1.0;
  const ConservedState inflow = to_conserved(in, eos);
  for (int layer = 1; layer <= g.ghost; ++layer) {
    for (int i = 0; i < 4; ++i) CHECK(f.state(i, -layer) == inflow);
    for (int i = 4; i < g.nx; ++i) CHECK(f.state(i, -layer) == f.state(i, 0));
    // reflected copies of the jet cells appear in the west ghost layers
    CHECK(f.state(-1, -layer)[kMy] == doctest::Approx(inflow[kMy]));
  }
}

TEST_CASE("quiet cells need a uniform neighbourhood") {
  const Grid2D g(10, 8, 0.0, 1.0, 0.0, 1.0, 4);
  CellField f(g);
  for (int j = -4; j < g.ny + 4; ++j)
    for (int i = -4; i < g.nx + 4; ++i) f.set_state(i, j, StateVector{1, 0, 0, 0, 0, 0, 0, 2});
  f(kRho, 5, 4) = 1.5;
  const CellMask m = quiet_cells(f, 3);
  for (int j = -1; j <= g.ny; ++j)
    for (int i = -1; i <= g.nx; ++i) {
      const bool near = std::abs(i - 5) <= 3 && std::abs(j - 4) <= 3;
      CHECK(m(i, j) == !near);
    }
  CHECK_THROWS_AS(quiet_cells(f, 4), ConfigError);
}
