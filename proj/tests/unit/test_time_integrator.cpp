#include <cmath>

#include "ddfpp/problems.hpp"
#include "ddfpp/time_integrator.hpp"
#include "doctest.h"

using namespace ddfpp;

namespace {

// u' = lam * u (or a constant c) in every component; viscosities fixed so dt is known.
class StubOperator : public SemiDiscreteOperator {
 public:
  StubOperator(const Grid2D& g, double lam, double c = 0.0) : g_(g), q_(edge_quadrature(5)), lam_(lam), c_(c) {}
  const Grid2D& grid() const override { return g_; }
  const QuadratureRule& quadrature() const override { return q_; }
  StageResult evaluate(const CellField& u, double, CellField& rhs) override {
    for (int j = 0; j < g_.ny; ++j)
      for (int i = 0; i < g_.nx; ++i)
        for (int c = 0; c < kNumVars; ++c) rhs(c, i, j) = lam_ * u(c, i, j) + c_;
    StageResult r;
    r.alpha1 = r.alpha2 = 1.0;
    ++calls;
    return r;
  }
  int calls = 0;

 private:
  Grid2D g_;
  QuadratureRule q_;
  double lam_, c_;
};

RunState start(const Grid2D& g, double value) {
  RunState s;
  s.cellavg = CellField(g);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      StateVector u;
      u[kRho] = value;
      u[kEnergy] = value;  // admissible: rho > 0 and E > 0 with no momentum/field
      s.cellavg.set_state(i, j, u);
    }
  return s;
}

}  // namespace

TEST_CASE("compute_dt") {
  const Grid2D g(1, 1, 0.0, 1.0, 0.0, 1.0, 4);
  const QuadratureRule q = edge_quadrature(5);
  CHECK(compute_dt(1.0, 1.0, g, q, 0.3) == doctest::Approx(0.0125));
  CHECK_THROWS_AS(compute_dt(1.0, 1.0, g, q, 1.0), ConfigError);
  CHECK(compute_dt(1.0, 1.0, g, q, 0.99) > 0.0);
  CHECK_THROWS_AS(compute_dt(0.0, 1.0, g, q, 0.3), DomainError);
  const Grid2D h(2, 2, 0.0, 1.0, 0.0, 1.0, 4);
  CHECK(compute_dt(1.0, 1.0, h, q, 0.3) == doctest::Approx(0.5 * 0.0125));
  CHECK_FALSE(satisfies_pp_cfl(1.0 / 24.0, 1.0, 1.0, g, q));
  CHECK(satisfies_pp_cfl(0.0125, 1.0, 1.0, g, q));
  const double dc = compute_dt(1.0, 1.0, g, q, 0.3, CflConvention::Classic);
  CHECK(satisfies_pp_cfl(dc, 1.0, 1.0, g, q));
}

TEST_CASE("one RK3 step matches the stability polynomial") {
  const Grid2D g(3, 2, 0.0, 1.0, 0.0, 1.0, 4);
  for (double lam : {-3.0, -0.7, 0.5, 2.0}) {
    StubOperator op(g, lam);
    RunState s = start(g, 1.0);
    TimeStepOptions opt;
    opt.t_end = 100.0;
    opt.check_admissible = false;
    const StepStats st = ssp_rk3_step(s, op, opt);
    const double z = lam * st.dt;
    const double expect = 1.0 + z + z * z / 2.0 + z * z * z / 6.0;
    CHECK(std::abs(s.cellavg(kRho, 1, 1) - expect) < 1e-14);
    CHECK(op.calls == 3);
    CHECK(st.dt == doctest::Approx(0.3 / 12.0 / 5.0));
  }
}

TEST_CASE("zero and constant residuals; clamping to the end time") {
  const Grid2D g(2, 2, 0.0, 1.0, 0.0, 1.0, 4);
  StubOperator zero(g, 0.0);
  RunState s = start(g, 2.0);
  TimeStepOptions opt;
  opt.t_end = 1e-3;
  ssp_rk3_step(s, zero, opt);
  CHECK(s.cellavg(kRho, 0, 0) == 2.0);
  CHECK(s.t == 1e-3);  // clamped: dt would be 1/240 otherwise

  StubOperator konst(g, 0.0, 0.5);
  RunState k = start(g, 2.0);
  opt.t_end = 1.0;
  const StepStats st = ssp_rk3_step(k, konst, opt);
  CHECK(k.cellavg(kRho, 1, 0) == doctest::Approx(2.0 + 0.5 * st.dt).epsilon(1e-15));
  CHECK(k.step == 1);
  CHECK(k.stats.size() == 1);
}

TEST_CASE("vortex N=40, 10 steps: every stage admissible and deterministic") {
  const ProblemSpec& p = find_problem("vortex");
  const IdealEos eos{p.gamma};
  const Grid2D g = make_grid(p, 40, 40, 5);
  auto run = [&]() {
    DdfPpScheme scheme(g, p.boundary(eos), eos, SchemeOptions{});
    RunState s;
    s.cellavg = init_cell_averages(p, g);
    TimeStepOptions opt;
    opt.t_end = 1.0;
    for (int n = 0; n < 10; ++n) ssp_rk3_step(s, scheme, opt);  // throws on any inadmissible stage
    return s;
  };
  const RunState a = run(), b = run();
  CHECK(a.step == 10);
  bool same = true;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) same = same && a.cellavg.state(i, j) == b.cellavg.state(i, j);
  CHECK(same);
}
