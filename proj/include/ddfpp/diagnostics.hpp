#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ddfpp/grid.hpp"
#include "ddfpp/problems.hpp"
#include "ddfpp/projection.hpp"
#include "ddfpp/reconstruct.hpp"

namespace ddfpp {

// Max over interior cells of |div_h B| on the given traces.
double divergence_error(const InterfaceSet& traces, const Grid2D& grid, const QuadratureRule& quad);

// Sum over interior cells of u * dx * dy.
StateVector conserved_totals(const CellField& u);

// Primitive components in the order rho, v1, v2, v3, B1, B2, B3, p.
inline constexpr std::array<const char*, kNumVars> kPrimitiveNames = {"rho", "v1", "v2", "v3", "B1", "B2", "B3", "p"};
using PrimitiveErrors = std::array<double, kNumVars>;

// Integral: sum |err| dx dy.  Mean: the integral divided by the domain area.
enum class NormKind { Integral, Mean };

// l1 errors of the primitive variables recovered from the numeric and the exact cell averages
// (exact averages use the same tensor Gauss rule as the initialisation).
PrimitiveErrors l1_errors(const CellField& numeric, const CellField& exact_averages, const IdealEos& eos,
                          NormKind norm = NormKind::Integral);
PrimitiveErrors l1_errors(const CellField& numeric, const ExactFunction& exact, double t, const IdealEos& eos,
                          NormKind norm = NormKind::Integral);

struct ConvergenceRow {
  int n = 0;  // cells per axis (nx)
  PrimitiveErrors errors{};
  std::optional<PrimitiveErrors> orders;  // log2(err_{n/2} / err_n), absent for the coarsest row
};

// Orders between consecutive resolutions; requires >= 2 entries, each nx twice the previous.
std::vector<ConvergenceRow> l1_error_and_order(const std::vector<int>& resolutions,
                                               const std::vector<PrimitiveErrors>& errors);

}  // namespace ddfpp
