#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "irs_si/channel.hpp"
#include "irs_si/model.hpp"
#include "irs_si/rng.hpp"
#include "irs_si/sdp.hpp"

namespace irs_si {

enum class Scheme { Cct, Wscm, RandomIrs, NoIrs, Tdma, UpperBound, Oracle };

std::string to_string(Scheme scheme);
/// Accepts the CLI spellings: cct, wscm, random-irs, no-irs, tdma, upper-bound, oracle.
Scheme scheme_from_string(std::string_view name);

struct AlgorithmParams {
  int t_alpha = 80;
  int t_lambda = 80;
  int t_g = 1000;
  int oracle_phase_levels = 64;
  int oracle_alpha_points = 201;
  bool compute_upper_bound = true;
  sdp::SolverConfig solver;
};

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct BoundaryDiagnostics {
  /// Secrecy rate of the winning phase vector at the sampled alpha, before
  /// the multicast-floor repair.
  double unrepaired_r_c = kNaN;
  double alpha_sampled = kNaN;
  int winning_index = -1;
  int infeasible_steps = 0;
  int failed_steps = 0;
  /// log2 C(r_m, alpha) - r_c at the reported alpha.
  double delta_c = kNaN;
  bool rank_one = false;
};

struct BoundaryPoint {
  double r_m_target = 0.0;
  double r_c_achieved = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  PhaseVector phase_vector;
  /// max(log2 C(r_m, alpha), 0) at the reported alpha; NaN when not computed.
  double upper_bound = kNaN;
  bool feasible = false;
  Scheme scheme = Scheme::Cct;
  BoundaryDiagnostics diagnostics;
};

struct RegionBoundary {
  std::vector<BoundaryPoint> points;
  bool pareto_filtered = false;
  double r_m_up = 0.0;
};

struct MulticastBound {
  double r_m_up = 0.0;
  /// 2^r_m_up - 1.
  double snr = 0.0;
  CMatrix z;
};

/// max over unit-diagonal PSD Z of min_{k in users} Tr(Z T_k / sigma_k^2).
struct MaxMinGain {
  double value = 0.0;
  CMatrix z;
};

MaxMinGain max_min_normalized_gain(const std::vector<CMatrix>& forms, const std::vector<int>& users,
                                   const sdp::SolverConfig& config = {});

/// Relaxed max-min multicast SNR: r_m_up >= r_m_max.
MulticastBound multicast_upper_bound(const ChannelSet& ch, double p,
                                     const sdp::SolverConfig& config = {});

enum class CctStatus { Solved, Infeasible, SolverFailed };

struct CctResult {
  CctStatus status = CctStatus::Infeasible;
  /// C(r_m, alpha); 2^(secrecy upper bound).
  double c_value = 0.0;
  CMatrix y;
  double xi = 0.0;
  sdp::SdpSolution solution;

  [[nodiscard]] CMatrix z() const { return y / xi; }
  [[nodiscard]] double log2_bound() const;
};

/// Channel data shared by every Charnes-Cooper solve on one channel set.
class CctContext {
 public:
  CctContext(ChannelSet ch, double p, sdp::SolverConfig config = {});

  [[nodiscard]] CctResult solve(double r_m, double alpha) const;

  [[nodiscard]] const ChannelSet& channels() const { return ch_; }
  [[nodiscard]] double power() const { return p_; }
  [[nodiscard]] const std::vector<CMatrix>& forms() const { return forms_; }
  [[nodiscard]] const sdp::SolverConfig& solver() const { return config_; }
  /// max-min normalized gain over the eavesdroppers.
  [[nodiscard]] double eavesdropper_max_min() const { return eaves_max_min_; }

 private:
  ChannelSet ch_;
  double p_;
  sdp::SolverConfig config_;
  std::vector<CMatrix> forms_;
  double eaves_max_min_ = 0.0;
};

CctResult cct_fixed_alpha(const ChannelSet& ch, double p, double r_m, double alpha,
                          const sdp::SolverConfig& config = {});

BoundaryPoint algorithm1_cct(const CctContext& ctx, double r_m, const AlgorithmParams& params,
                             Rng& rng);
BoundaryPoint algorithm1_cct(const ChannelSet& ch, double p, double r_m,
                             const AlgorithmParams& params, Rng& rng);

/// Largest relaxation bound max_t log2 C(r_m, alpha_t) over the alpha grid;
/// the phase vector is read off the principal eigenvector.
BoundaryPoint upper_bound_point(const CctContext& ctx, double r_m, const AlgorithmParams& params);

/// Z_c = Y_c / xi_c from the alpha = P Charnes-Cooper program.
CMatrix secrecy_covariance(const ChannelSet& ch, double p, const sdp::SolverConfig& config = {});

/// Inputs shared by all WSCM boundary points on one channel set.
struct WscmInputs {
  CMatrix z_m;
  CMatrix z_c;
};

WscmInputs prepare_wscm(const ChannelSet& ch, double p, const sdp::SolverConfig& config = {});

BoundaryPoint algorithm2_wscm(const ChannelSet& ch, double p, double r_m, const WscmInputs& inputs,
                              const AlgorithmParams& params, Rng& rng);
BoundaryPoint algorithm2_wscm(const ChannelSet& ch, double p, double r_m,
                              const AlgorithmParams& params, Rng& rng);

BoundaryPoint baseline_random_irs(const ChannelSet& ch, double p, double r_m, Rng& rng);
BoundaryPoint baseline_no_irs(const ChannelSet& ch, double p, double r_m);

/// Time-sharing segment between (0, r_c_max) and (r_m_max, 0).
struct TdmaEndpoints {
  double r_m_max = 0.0;
  double r_c_max = 0.0;
  PhaseVector multicast_v;
  PhaseVector secrecy_v;
};

TdmaEndpoints tdma_endpoints(const ChannelSet& ch, double p, const AlgorithmParams& params,
                             Rng& rng);
RegionBoundary baseline_tdma(const ChannelSet& ch, double p, int grid_points,
                             const AlgorithmParams& params, Rng& rng);

/// Largest secrecy rate with no multicast floor: alpha = P, phases rounded
/// from the alpha = P Charnes-Cooper covariance.
BoundaryPoint max_secrecy_rate(const ChannelSet& ch, double p, const AlgorithmParams& params,
                               Rng& rng);

/// Best multicast rate of a rounded phase vector (beta = P).
struct MulticastPoint {
  double r_m = 0.0;
  PhaseVector v;
};

MulticastPoint multicast_rounded(const ChannelSet& ch, double p, const CMatrix& z_m, int t_g,
                                 Rng& rng);

/// Replaces each feasible r_c by the best r_c at any larger target, so the
/// curve becomes non-increasing; infeasible points are left untouched.
void pareto_filter(RegionBoundary& region);

struct SweepOptions {
  int grid_points = 10;
  std::uint64_t seed = 0;
  bool pareto_filter = true;
  /// 0 means IRS_SI_THREADS or the hardware concurrency.
  int threads = 0;
  /// Explicit r_m targets; when empty they are uniform on [0, r_m_up].
  std::vector<double> targets;
};

RegionBoundary sweep_region(const ChannelSet& ch, double p, Scheme scheme,
                            const AlgorithmParams& params, const SweepOptions& options);

/// Thread count from IRS_SI_THREADS, else the hardware concurrency.
int default_thread_count();

}  // namespace irs_si
