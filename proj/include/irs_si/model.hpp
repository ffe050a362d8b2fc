#pragma once

#include <optional>
#include <vector>

#include "irs_si/channel.hpp"
#include "irs_si/linalg.hpp"

namespace irs_si {

/// N unit-modulus IRS reflection coefficients v; the IRS applies diag(v*).
class PhaseVector {
 public:
  PhaseVector() = default;
  /// Throws DomainError unless every entry has modulus 1 within 1e-9.
  explicit PhaseVector(CVector entries);

  static PhaseVector from_phases(const std::vector<double>& radians);
  static PhaseVector ones(int n);

  [[nodiscard]] const CVector& entries() const { return entries_; }
  [[nodiscard]] int size() const { return static_cast<int>(entries_.size()); }
  [[nodiscard]] std::vector<double> phases() const;

 private:
  CVector entries_;
};

/// Hermitian rank-one (N+1)x(N+1) lifting of user k's effective gain.
struct QuadraticForm {
  CMatrix matrix;
  int user_index = 0;
};

/// Transmit power split in watts: alpha (confidential) and beta (multicast).
struct PowerSplit {
  double alpha = 0.0;
  double beta = 0.0;
};

struct RatePair {
  double r_m = 0.0;
  double r_c = 0.0;
};

QuadraticForm build_tk(const CVector& m_k, const CVector& g, Complex h_k, int user_index = 0);

/// T_k / sigma_k^2 for every user; the SNR-normalized forms used by the
/// relaxations.
std::vector<CMatrix> normalized_forms(const ChannelSet& ch);

/// |m_k^H diag(v*) g + h_k|^2.
double effective_gain(const PhaseVector& v, const CVector& m_k, const CVector& g, Complex h_k);

/// Effective gains divided by noise power, one per user.
std::vector<double> normalized_gains(const ChannelSet& ch, const PhaseVector& v);

/// Gains of the direct links only, divided by noise power.
std::vector<double> direct_normalized_gains(const ChannelSet& ch);

/// min_k log2(1 + beta x_k / (sigma_k^2 + alpha x_k)).
double multicast_rate(const ChannelSet& ch, const PhaseVector& v, const PowerSplit& split);
double multicast_rate_from_snr(const std::vector<double>& snr, const PowerSplit& split);

/// min over eavesdroppers of log2((1 + alpha x_1/s_1)/(1 + alpha x_k/s_k)),
/// without the clamp at zero.
double secrecy_rate_unclamped_from_snr(const std::vector<double>& snr, double alpha);
double secrecy_rate_from_snr(const std::vector<double>& snr, double alpha);
double secrecy_rate(const ChannelSet& ch, const PhaseVector& v, double alpha);

enum class Feasibility { Feasible, Infeasible, Undetermined };

struct FeasibilityResult {
  Feasibility verdict = Feasibility::Undetermined;
  /// 0-based user whose direct link certifies infeasibility.
  std::optional<int> certificate_user;
  /// (sum_i |m_k(i)||g(i)| + |h_k|)^2 for every user.
  std::vector<double> aligned_gains;
};

FeasibilityResult feasibility_check(const ChannelSet& ch);

/// x_1/sigma_1^2 > max over eavesdroppers of x_k/sigma_k^2.
bool positive_secrecy_condition(const ChannelSet& ch, const PhaseVector& v);
bool positive_secrecy_condition_from_snr(const std::vector<double>& snr);

/// Largest alpha in [0, p] meeting the multicast floor for the bottleneck user.
double alpha_opt_closed_form(double x_min, double sigma2_min, double p, double r_m);

/// Same in SNR units (x / sigma^2).
double alpha_opt_from_snr(double snr_min, double p, double r_m);

/// True when p * snr_min reaches 2^r_m - 1, i.e. some split meets the floor.
bool qoms_attainable(double snr_min, double p, double r_m);

/// Whether the split satisfies the multicast floor for every user.
bool qoms_satisfied(const std::vector<double>& snr, const PowerSplit& split, double r_m,
                    double tol = 1e-9);

double min_value(const std::vector<double>& values);

}  // namespace irs_si
