#pragma once

#include <string>
#include <vector>

#include "irs_si/linalg.hpp"

namespace irs_si::sdp {

enum class Relation { LessEqual, Equal, GreaterEqual };

/// Re Tr(matrix X) + scalar_coeffs . s  (relation)  bound.
struct Constraint {
  CMatrix matrix;
  RVector scalar_coeffs;  // empty means all zero
  Relation relation = Relation::Equal;
  double bound = 0.0;
};

/// Optimizes Re Tr(objective X) + objective_scalars . s over a Hermitian PSD
/// matrix X of side `dim` and `num_scalars` nonnegative scalars s.
struct SdpProblem {
  int dim = 0;
  CMatrix objective;
  RVector objective_scalars;  // empty means all zero
  int num_scalars = 0;
  std::vector<Constraint> constraints;
  bool maximize = true;

  /// Throws ConfigError on non-Hermitian or mis-sized data.
  void validate() const;
};

enum class SolveStatus { Optimal, Infeasible, Unbounded, MaxIterations };

const char* to_string(SolveStatus status);

struct SdpSolution {
  CMatrix matrix;
  RVector scalars;
  RVector dual;
  double objective_value = 0.0;
  SolveStatus status = SolveStatus::MaxIterations;
  double duality_gap = 0.0;
  double residuals = 0.0;
  double min_eigenvalue = 0.0;
  int iterations = 0;
  std::string message;

  [[nodiscard]] bool optimal() const { return status == SolveStatus::Optimal; }
};

struct SolverConfig {
  double tolerance = 1e-8;
  int max_iterations = 200;
  double step_fraction = 0.99;
};

/// Infeasible-start primal-dual path following (HKM direction with a
/// Mehrotra predictor-corrector). Infeasibility and unboundedness are
/// reported once the iterates contain a ray certificate to tolerance.
SdpSolution solve(const SdpProblem& problem, const SolverConfig& config = {});

}  // namespace irs_si::sdp
