#pragma once

#include <atomic>
#include <vector>

#include "ddfpp/grid.hpp"
#include "ddfpp/state.hpp"

namespace ddfpp {

enum Face : int { kWest = 0, kEast = 1, kSouth = 2, kNorth = 3 };

// Inner traces of every cell at the edge quadrature nodes, for cells i in [-1, nx], j in [-1, ny]
// (interior plus one ring of ghost cells, so each interior edge sees both of its traces).
//   edge (i+1/2, j): minus trace = East face of (i, j), plus trace = West face of (i+1, j)
//   edge (i, j+1/2): minus trace = North face of (i, j), plus trace = South face of (i, j+1)
// Nodes run in increasing coordinate along the edge.
class InterfaceSet {
 public:
  InterfaceSet() = default;
  InterfaceSet(int nx, int ny, int q);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int q() const { return q_; }
  int values_per_cell() const { return 4 * q_ * kNumVars; }

  double* cell(int i, int j) { return data_.data() + cell_offset(i, j); }
  const double* cell(int i, int j) const { return data_.data() + cell_offset(i, j); }
  double* at(int i, int j, int face, int node) { return cell(i, j) + (face * q_ + node) * kNumVars; }
  const double* at(int i, int j, int face, int node) const { return cell(i, j) + (face * q_ + node) * kNumVars; }

  StateVector get(int i, int j, int face, int node) const {
    StateVector u;
    const double* p = at(i, j, face, node);
    for (int c = 0; c < kNumVars; ++c) u[c] = p[c];
    return u;
  }
  void set(int i, int j, int face, int node, const StateVector& u) {
    double* p = at(i, j, face, node);
    for (int c = 0; c < kNumVars; ++c) p[c] = u[c];
  }
  void fill_cell(int i, int j, const StateVector& u) {
    for (int f = 0; f < 4; ++f)
      for (int m = 0; m < q_; ++m) set(i, j, f, m, u);
  }

  std::vector<double>& raw() { return data_; }
  const std::vector<double>& raw() const { return data_; }

 private:
  std::size_t cell_offset(int i, int j) const {
    return (static_cast<std::size_t>(j + 1) * (nx_ + 2) + static_cast<std::size_t>(i + 1)) * values_per_cell();
  }
  int nx_ = 0, ny_ = 0, q_ = 0;
  std::vector<double> data_;
};

struct SlopePair {
  StateVector sx, sy;
};

// Slopes for cells [-1, nx] x [-1, ny], row-major with the same offset convention as InterfaceSet.
std::vector<SlopePair> van_albada_slopes(const CellField& field, const Grid2D& grid);
InterfaceSet linear_interface_values(const CellField& field, const std::vector<SlopePair>& slopes, const Grid2D& grid);

struct ReconstructStats {
  long basis_fallbacks = 0;  // stencils reconstructed componentwise because the basis was degenerate
};

InterfaceSet weno5z_interface_values(const CellField& field, const Grid2D& grid, const QuadratureRule& quad,
                                     bool chardecomp, const IdealEos& eos, ReconstructStats* stats = nullptr);

// Reusable form that keeps scratch buffers between calls.
class WenoReconstructor {
 public:
  WenoReconstructor(const IdealEos& eos, bool chardecomp, int threads = 1)
      : eos_(eos), chardecomp_(chardecomp), threads_(threads) {}
  void reconstruct(const CellField& field, InterfaceSet& out, ReconstructStats* stats = nullptr);

 private:
  void x_sweep(const CellField& f, InterfaceSet& out, bool transposed);
  IdealEos eos_;
  bool chardecomp_;
  int threads_;
  CellField transposed_;
  std::vector<double> edge_minus_, edge_plus_;
  std::atomic<long> fallbacks_{0};
};

}  // namespace ddfpp
