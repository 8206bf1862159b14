#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "ddfpp/state.hpp"

namespace ddfpp {

// Uniform Cartesian mesh. Cells are 0-based: i in [0,nx), j in [0,ny); ghosts use negative / >= n indices.
struct Grid2D {
  int nx = 0, ny = 0;
  double x_lo = 0.0, x_hi = 1.0, y_lo = 0.0, y_hi = 1.0;
  int ghost = 0;

  Grid2D() = default;
  Grid2D(int nx_, int ny_, double xlo, double xhi, double ylo, double yhi, int ghost_);

  double dx() const { return (x_hi - x_lo) / nx; }
  double dy() const { return (y_hi - y_lo) / ny; }
  double xc(int i) const { return x_lo + (i + 0.5) * dx(); }
  double yc(int j) const { return y_lo + (j + 0.5) * dy(); }
  double xf(int i) const { return x_lo + i * dx(); }  // west face of cell i
  double yf(int j) const { return y_lo + j * dy(); }
  double cell_area() const { return dx() * dy(); }
};

// Cell averages, one contiguous plane per component, row-major over (j, i), ghosts included.
class CellField {
 public:
  CellField() = default;
  explicit CellField(const Grid2D& g);

  const Grid2D& grid() const { return grid_; }
  int nx() const { return grid_.nx; }
  int ny() const { return grid_.ny; }
  int ghost() const { return grid_.ghost; }
  int stride() const { return sx_; }

  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j + grid_.ghost) * sx_ + static_cast<std::size_t>(i + grid_.ghost);
  }
  double& operator()(int c, int i, int j) { return data_[c * plane_ + index(i, j)]; }
  double operator()(int c, int i, int j) const { return data_[c * plane_ + index(i, j)]; }
  double* plane(int c) { return data_.data() + c * plane_; }
  const double* plane(int c) const { return data_.data() + c * plane_; }

  StateVector state(int i, int j) const {
    StateVector u;
    const std::size_t k = index(i, j);
    for (int c = 0; c < kNumVars; ++c) u[c] = data_[c * plane_ + k];
    return u;
  }
  void set_state(int i, int j, const StateVector& u) {
    const std::size_t k = index(i, j);
    for (int c = 0; c < kNumVars; ++c) data_[c * plane_ + k] = u[c];
  }

  // to += a * x over interior cells only
  void axpy_interior(double a, const CellField& x);

 private:
  Grid2D grid_;
  int sx_ = 0;
  std::size_t plane_ = 0;
  std::vector<double> data_;
};

struct QuadratureRule {
  int k = 5;   // formal order of the reconstruction
  int Q = 4;   // nodes per edge
  int L = 4;   // Gauss-Lobatto point count entering w_hat1
  std::array<double, 4> nodes{};    // in [-1/2, 1/2], increasing
  std::array<double, 4> weights{};  // sum to 1
  double w_hat1 = 1.0 / 12.0;
};

QuadratureRule edge_quadrature(int k);

// Ghost depth needed by the reconstruction of order k (traces are also built on one ring of ghost cells).
int required_ghost_width(int k);

enum class Side : int { West = 0, East = 1, South = 2, North = 3 };

enum class BoundaryKind { Periodic, Outflow, Reflecting, Dirichlet };

// Dirichlet data: returns the ghost state at (x, y, t), or nullopt to fall back to outflow there.
using DirichletFunction = std::function<std::optional<ConservedState>(double x, double y, double t)>;

struct SideCondition {
  BoundaryKind kind = BoundaryKind::Outflow;
  DirichletFunction dirichlet;
};

struct BoundarySpec {
  std::array<SideCondition, 4> sides;  // indexed by Side

  static BoundarySpec all(BoundaryKind k);
  const SideCondition& operator[](Side s) const { return sides[static_cast<int>(s)]; }
  SideCondition& operator[](Side s) { return sides[static_cast<int>(s)]; }
  void validate() const;  // throws ConfigError on unmatched periodic sides
};

void fill_ghosts(CellField& field, const BoundarySpec& bc, double t);

// One flag per cell of [-1, nx] x [-1, ny] (the ring InterfaceSet stores).
struct CellMask {
  int nx = 0, ny = 0;
  std::vector<unsigned char> flag;
  bool operator()(int i, int j) const { return flag[static_cast<std::size_t>(j + 1) * (nx + 2) + (i + 1)] != 0; }
};

// Cells whose every neighbour within Chebyshev distance `radius` holds bitwise the same state.
// Needs ghost width >= radius + 1.
CellMask quiet_cells(const CellField& field, int radius);

}  // namespace ddfpp
