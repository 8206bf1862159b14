#pragma once

#include <memory>

#include "ddfpp/flux.hpp"
#include "ddfpp/grid.hpp"
#include "ddfpp/limiter.hpp"
#include "ddfpp/projection.hpp"
#include "ddfpp/reconstruct.hpp"

namespace ddfpp {

// How the Lax-Friedrichs viscosity is chosen from the traces.
//   PositivityBound: exactly alpha_hat + beta (the lower bound of the positivity theorem).
//   Envelope: max(alpha_hat + beta, max |v| + c_f) -- also covers the usual fast magnetosonic speed.
enum class ViscosityMode { PositivityBound, Envelope };

struct SchemeOptions {
  int k = 5;
  bool ddf_projection = true;
  bool pp_limiter = true;
  bool chardecomp = true;
  DiscriminantForm discriminant = DiscriminantForm::Standard;
  ViscosityMode viscosity = ViscosityMode::Envelope;
  int threads = 1;
  // skip work on cells whose reconstruction stencil is uniform (results are bitwise unchanged)
  bool quiet_shortcut = true;
};

struct StageResult {
  double alpha1 = 0.0, alpha2 = 0.0;  // viscosity used by the fluxes (meets the positivity bound)
  ViscosityBounds bounds;             // bounds measured on the final traces
  double eps_div = 0.0;               // max |div_h B| over interior cells, final traces
  ProjectionStats projection;
  LimiterStats limiter;
  int limiter_passes = 0;
  long basis_fallbacks = 0;
  StateVector flux_sum;      // sum over cells of the flux-difference part of the residual
  StateVector flux_scale;    // sum over cells of |flux terms|, a round-off reference for flux_sum
  StateVector source_sum;    // sum over cells of the source part
  StateVector boundary_flux; // net outward flux through the domain boundary (per unit time)
};

class SemiDiscreteOperator {
 public:
  virtual ~SemiDiscreteOperator() = default;
  virtual const Grid2D& grid() const = 0;
  virtual const QuadratureRule& quadrature() const = 0;
  // Writes the residual into the interior of rhs (same grid as u).
  virtual StageResult evaluate(const CellField& u, double t, CellField& rhs) = 0;
};

class DdfPpScheme : public SemiDiscreteOperator {
 public:
  DdfPpScheme(const Grid2D& grid, BoundarySpec bc, IdealEos eos, SchemeOptions opt);

  const Grid2D& grid() const override { return grid_; }
  const QuadratureRule& quadrature() const override { return quad_; }
  const SchemeOptions& options() const { return opt_; }
  const IdealEos& eos() const { return eos_; }
  const BoundarySpec& boundary() const { return bc_; }

  StageResult evaluate(const CellField& u, double t, CellField& rhs) override;

  // Traces of the most recent evaluation (after projection and limiting).
  const InterfaceSet& last_traces() const { return traces_; }

 private:
  void reconstruct(const CellField& ug);
  Grid2D grid_;
  BoundarySpec bc_;
  IdealEos eos_;
  SchemeOptions opt_;
  QuadratureRule quad_;
  std::unique_ptr<WenoReconstructor> weno_;
  CellField work_;
  InterfaceSet traces_, projected_;
  CellMask quiet_, changed_;
  ViscosityWorkspace visc_;
};

}  // namespace ddfpp
