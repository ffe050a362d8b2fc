#pragma once

#include <optional>
#include <vector>

#include "irs_si/algorithms.hpp"
#include "irs_si/channel.hpp"
#include "irs_si/model.hpp"

namespace irs_si {

/// Uniform-search gap when the relaxation is tight, in bits.
double gap_bound_tight(double p, int n, double tr_t1, double sigma1_sq, int t_alpha);

struct GeneralGapBound {
  double general = 0.0;     // tight bound + delta_c
  double worst_case = 0.0;  // delta_c replaced by log2(4/pi)
};

GeneralGapBound gap_bound_general(double p, int n, double tr_t1, double sigma1_sq, int t_alpha,
                                  double delta_c);

struct GapBoundReport {
  double bound_tight = 0.0;
  double bound_general = 0.0;
  double bound_worst_case = 0.0;
  double delta_c = 0.0;
  int t_alpha = 0;
};

/// Bounds for one Algorithm-1 boundary point; delta_c is read off the point.
GapBoundReport gap_bound_report(const ChannelSet& ch, double p, const BoundaryPoint& point,
                                int t_alpha);

enum class Classification { Improves, Impairs, Indeterminate };

const char* to_string(Classification c);

struct EnhancementReport {
  std::vector<double> e_factors;
  double eta = 1.0;
  double alpha_with = 0.0;
  double alpha_without = 0.0;
  /// |2^{R_IRS} - eta 2^{R_non}| with both rates unclamped.
  double identity_residual = 0.0;
  /// Empty when the direct links do not support a positive secrecy rate.
  std::optional<Classification> classification;
};

/// Two-user enhancement factors at a fixed alpha. alpha_with / alpha_without
/// are the closed-form optimal splits at (p, r_m) with and without the IRS.
EnhancementReport enhancement_analysis(const ChannelSet& ch, const PhaseVector& v, double alpha,
                                       double p, double r_m = 0.0);

/// Throws PreconditionError unless K = 2 and |h_1|^2/s_1 > |h_2|^2/s_2.
Classification proposition3_classify(const ChannelSet& ch, const PhaseVector& v);

struct ComplexityEstimate {
  double n_var = 0.0;  // (N+1)^2 + 1
  double a1_1 = 0.0;
  double a1_2 = 0.0;
  double a2_2 = 0.0;
  double g = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
};

ComplexityEstimate complexity_estimate(int n, int k, int t_alpha, int t_lambda, int t_g);

struct OracleResult {
  double r_c = 0.0;
  PhaseVector v;
  double alpha = 0.0;
  bool feasible = false;
};

/// Exhaustive phase grid x alpha grid search (N <= 3 in practice).
OracleResult brute_force_oracle(const ChannelSet& ch, double p, double r_m, int phase_levels,
                                int alpha_points, double phase_offset = 0.0);

/// Best multicast rate (beta = P) on the same phase grid.
double brute_force_multicast(const ChannelSet& ch, double p, int phase_levels);

/// Enumeration budget for brute_force_oracle.
inline constexpr double kOracleMaxEvaluations = 2e9;

}  // namespace irs_si
