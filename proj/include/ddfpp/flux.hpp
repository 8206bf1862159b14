#pragma once

#include <vector>

#include "ddfpp/grid.hpp"
#include "ddfpp/reconstruct.hpp"

namespace ddfpp {

FluxVector lax_friedrichs(const ConservedState& um, const ConservedState& up, Axis axis, double alpha,
                          const IdealEos& eos);

struct ViscosityBounds {
  double alpha_hat1 = 0.0, alpha_hat2 = 0.0;  // max pair viscosity over all pairings
  double beta1 = 0.0, beta2 = 0.0;            // normal-field jump terms
  double wave1 = 0.0, wave2 = 0.0;            // max |v_l| + c_f (usual fast speed) over the traces
  double alpha1() const { return alpha_hat1 + beta1; }
  double alpha2() const { return alpha_hat2 + beta2; }
};

// Traces of interior cells and their edge neighbours must be admissible; otherwise throws CellDomainError.
// Pairings: both traces of one cell in a direction, the two traces across a cell from its neighbours,
// and the two traces of every edge. With skip_inadmissible, pairings touching a bad trace are ignored.
//
// ws keeps per-trace wave speeds and per-cell maxima between calls. When `changed` is also given, the
// traces must equal those of the previous call on ws except in the flagged cells; only those cells and
// their neighbours are re-evaluated.
struct ViscosityWorkspace {
  struct Slot {
    SpeedInfo s{};
    double w[2] = {0.0, 0.0};  // |v_l| + c_f
    bool ok = false;
  };
  std::vector<Slot> slots;
  std::vector<ViscosityBounds> cells;
  int nx = -1, ny = -1, q = -1;
  bool valid = false;
};

ViscosityBounds global_viscosity(const InterfaceSet& t, const QuadratureRule& quad, const Grid2D& g,
                                 const IdealEos& eos, DiscriminantForm form = DiscriminantForm::Standard,
                                 bool skip_inadmissible = false, const CellMask* quiet = nullptr,
                                 ViscosityWorkspace* ws = nullptr, const CellMask* changed = nullptr);

// x-edge fluxes f1(i, j) at x = x_lo + i dx for i in [0, nx]; y-edge fluxes f2(i, j) for j in [0, ny].
struct EdgeFluxes {
  int nx = 0, ny = 0;
  std::vector<StateVector> f1, f2;
  StateVector& x(int i, int j) { return f1[static_cast<std::size_t>(j) * (nx + 1) + i]; }
  const StateVector& x(int i, int j) const { return f1[static_cast<std::size_t>(j) * (nx + 1) + i]; }
  StateVector& y(int i, int j) { return f2[static_cast<std::size_t>(j) * nx + i]; }
  const StateVector& y(int i, int j) const { return f2[static_cast<std::size_t>(j) * nx + i]; }
};

EdgeFluxes edge_flux_quadrature(const InterfaceSet& t, const QuadratureRule& quad, const Grid2D& g, double alpha1,
                                double alpha2, const IdealEos& eos, int threads = 1, const CellMask* quiet = nullptr);

// Godunov-Powell source per interior cell, row-major (j, i). Jumps are oriented right-minus-left
// (top-minus-bottom) on every edge.
std::vector<StateVector> godunov_powell_source(const InterfaceSet& t, const QuadratureRule& quad, const Grid2D& g,
                                               int threads = 1);

}  // namespace ddfpp
