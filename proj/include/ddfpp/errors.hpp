#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ddfpp {

// Thrown when a state leaves the domain of an operation (rho <= 0, inadmissible flux input, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// DomainError raised while processing a specific cell's data.
class CellDomainError : public DomainError {
 public:
  CellDomainError(int i, int j, const std::string& what) : DomainError(what), i_(i), j_(j) {}
  int i() const { return i_; }
  int j() const { return j_; }

 private:
  int i_, j_;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A solver stage failed (positivity lost, NaN, no admissible time step).
// Carries enough context to report where it happened.
class SolverAbort : public std::runtime_error {
 public:
  SolverAbort(std::string stage, int i, int j, double t, const std::string& what)
      : std::runtime_error(format(stage, i, j, t, what)), stage_(std::move(stage)), i_(i), j_(j), t_(t) {}

  const std::string& stage() const { return stage_; }
  int i() const { return i_; }
  int j() const { return j_; }
  double time() const { return t_; }

 private:
  static std::string format(const std::string& stage, int i, int j, double t, const std::string& what) {
    return "solver abort in stage '" + stage + "' at cell (" + std::to_string(i) + "," + std::to_string(j) +
           "), t=" + std::to_string(t) + ": " + what;
  }
  std::string stage_;
  int i_, j_;
  double t_;
};

}  // namespace ddfpp
