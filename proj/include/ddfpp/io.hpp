#pragma once

#include <fstream>
#include <string>

#include "ddfpp/grid.hpp"
#include "ddfpp/projection.hpp"
#include "ddfpp/state.hpp"

namespace ddfpp {

inline constexpr const char* kCsvHeader = "x,y,rho,m1,m2,m3,B1,B2,B3,E,p,eps_div_cell";
inline constexpr const char* kRunLogHeader = "t,dt,eps_div,mass,momx,momy,energy,limiter_hits";

// One row per interior cell, 17 significant digits. div may be null (column written as 0).
void write_csv(const std::string& path, const CellField& u, const IdealEos& eos, const DivergenceField* div = nullptr);

// Reads the conserved columns back into a field on the given grid; rows must match the grid's cell centres.
CellField read_csv(const std::string& path, const Grid2D& grid);

// Legacy ASCII STRUCTURED_POINTS, cell data: scalars rho, p, E, eps_div_cell and vectors momentum, B.
void write_vtk(const std::string& path, const CellField& u, const IdealEos& eos, const DivergenceField* div = nullptr);

class RunLog {
 public:
  RunLog() = default;
  explicit RunLog(const std::string& path);  // truncates and writes the header
  bool is_open() const { return out_.is_open(); }
  void append(double t, double dt, double eps_div, const StateVector& totals, long limiter_hits);

 private:
  std::ofstream out_;
  std::string path_;
};

}  // namespace ddfpp
