#pragma once

#include <stdexcept>
#include <string>

namespace flowlab {

/// A kernel row that should be a point mass is not.
class NotDeterministicError : public std::runtime_error {
 public:
  NotDeterministicError(int row, std::string what)
      : std::runtime_error(std::move(what)), row_(row) {}
  int row() const { return row_; }

 private:
  int row_;
};

/// Trajectory norm exceeded the overflow guard.
class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(double escape_time, std::string what)
      : std::runtime_error(std::move(what)), escape_time_(escape_time) {}
  double escape_time() const { return escape_time_; }

 private:
  double escape_time_;
};

/// Evaluation of a restricted flow outside its domain.
class OutsideDomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A two-parameter flow family violated the cocycle law on the sample set.
class CocycleViolationError : public std::runtime_error {
 public:
  CocycleViolationError(double s, double r, double t, double defect, std::string what)
      : std::runtime_error(std::move(what)), s_(s), r_(r), t_(t), defect_(defect) {}
  double s() const { return s_; }
  double r() const { return r_; }
  double t() const { return t_; }
  double defect() const { return defect_; }

 private:
  double s_, r_, t_, defect_;
};

/// A required certificate (e.g. commutation) was not supplied or not passing.
class PreconditionUnverifiedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simulation exceeded its particle or sample budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No nonempty absorbing Dirac support could be found.
class ExtractionFailedError : public std::runtime_error {
 public:
  ExtractionFailedError(std::string diagnostics, std::string what)
      : std::runtime_error(std::move(what)), diagnostics_(std::move(diagnostics)) {}
  const std::string& diagnostics() const { return diagnostics_; }

 private:
  std::string diagnostics_;
};

}  // namespace flowlab
