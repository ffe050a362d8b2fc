#include "irs_si/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "irs_si/errors.hpp"

namespace irs_si {

PhaseVector::PhaseVector(CVector entries) : entries_(std::move(entries)) {
  for (Eigen::Index i = 0; i < entries_.size(); ++i) {
    if (std::abs(std::abs(entries_(i)) - 1.0) > 1e-9)
      throw DomainError("IRS coefficient " + std::to_string(i) + " is not unit modulus");
  }
}

PhaseVector PhaseVector::from_phases(const std::vector<double>& radians) {
  CVector v(static_cast<Eigen::Index>(radians.size()));
  for (std::size_t i = 0; i < radians.size(); ++i) v(static_cast<Eigen::Index>(i)) = std::polar(1.0, radians[i]);
  return PhaseVector(std::move(v));
}

PhaseVector PhaseVector::ones(int n) { return PhaseVector(CVector::Ones(n)); }

std::vector<double> PhaseVector::phases() const {
  std::vector<double> out(static_cast<std::size_t>(entries_.size()));
  for (Eigen::Index i = 0; i < entries_.size(); ++i) out[static_cast<std::size_t>(i)] = std::arg(entries_(i));
  return out;
}

QuadraticForm build_tk(const CVector& m_k, const CVector& g, Complex h_k, int user_index) {
  if (m_k.size() != g.size()) throw DomainError("m_k and g lengths differ");
  const Eigen::Index n = g.size();
  // w^H [v; 1] is the conjugate of m_k^H diag(v*) g + h_k.
  CVector w(n + 1);
  w.head(n) = m_k.conjugate().cwiseProduct(g);
  w(n) = h_k;
  return {w * w.adjoint(), user_index};
}

std::vector<CMatrix> normalized_forms(const ChannelSet& ch) {
  std::vector<CMatrix> out;
  out.reserve(static_cast<std::size_t>(ch.k()));
  for (int k = 0; k < ch.k(); ++k) {
    const auto ku = static_cast<std::size_t>(k);
    out.push_back(build_tk(ch.m[ku], ch.g, ch.h[ku], k).matrix / ch.sigma2[ku]);
  }
  return out;
}

double effective_gain(const PhaseVector& v, const CVector& m_k, const CVector& g, Complex h_k) {
  if (v.size() != g.size() || m_k.size() != g.size())
    throw DomainError("phase vector length differs from N");
  const Complex s = (m_k.conjugate().cwiseProduct(v.entries().conjugate()).cwiseProduct(g)).sum() + h_k;
  return std::norm(s);
}

std::vector<double> normalized_gains(const ChannelSet& ch, const PhaseVector& v) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(ch.k()));
  for (int k = 0; k < ch.k(); ++k) {
    const auto ku = static_cast<std::size_t>(k);
    out.push_back(effective_gain(v, ch.m[ku], ch.g, ch.h[ku]) / ch.sigma2[ku]);
  }
  return out;
}

std::vector<double> direct_normalized_gains(const ChannelSet& ch) {
  std::vector<double> out;
  for (int k = 0; k < ch.k(); ++k) {
    const auto ku = static_cast<std::size_t>(k);
    out.push_back(std::norm(ch.h[ku]) / ch.sigma2[ku]);
  }
  return out;
}

double multicast_rate_from_snr(const std::vector<double>& snr, const PowerSplit& split) {
  double r = std::numeric_limits<double>::infinity();
  for (double x : snr) r = std::min(r, std::log2(1.0 + split.beta * x / (1.0 + split.alpha * x)));
  return r;
}

double multicast_rate(const ChannelSet& ch, const PhaseVector& v, const PowerSplit& split) {
  return multicast_rate_from_snr(normalized_gains(ch, v), split);
}

double secrecy_rate_unclamped_from_snr(const std::vector<double>& snr, double alpha) {
  if (snr.size() < 2) throw DomainError("secrecy rate needs at least two users");
  const double top = std::log2(1.0 + alpha * snr[0]);
  double r = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < snr.size(); ++k) r = std::min(r, top - std::log2(1.0 + alpha * snr[k]));
  return r;
}

double secrecy_rate_from_snr(const std::vector<double>& snr, double alpha) {
  return std::max(0.0, secrecy_rate_unclamped_from_snr(snr, alpha));
}

double secrecy_rate(const ChannelSet& ch, const PhaseVector& v, double alpha) {
  return secrecy_rate_from_snr(normalized_gains(ch, v), alpha);
}

FeasibilityResult feasibility_check(const ChannelSet& ch) {
  ch.validate();
  FeasibilityResult res;
  const RVector g_abs = ch.g.cwiseAbs();
  for (int k = 0; k < ch.k(); ++k) {
    const auto ku = static_cast<std::size_t>(k);
    const double a = ch.m[ku].cwiseAbs().dot(g_abs) + std::abs(ch.h[ku]);
    res.aligned_gains.push_back(a * a);
  }
  const double a1 = res.aligned_gains[0];
  const double s1 = ch.sigma2[0];
  bool dominates = true;
  for (int k = 1; k < ch.k(); ++k) {
    const auto ku = static_cast<std::size_t>(k);
    if (a1 < s1 / ch.sigma2[ku] * res.aligned_gains[ku]) dominates = false;
  }
  if (dominates) {
    res.verdict = Feasibility::Feasible;
    return res;
  }
  for (int k = 1; k < ch.k(); ++k) {
    const auto ku = static_cast<std::size_t>(k);
    if (a1 <= s1 * std::norm(ch.h[ku]) / ch.sigma2[ku]) {
      res.verdict = Feasibility::Infeasible;
      res.certificate_user = k;
      return res;
    }
  }
  res.verdict = Feasibility::Undetermined;
  return res;
}

bool positive_secrecy_condition_from_snr(const std::vector<double>& snr) {
  for (std::size_t k = 1; k < snr.size(); ++k)
    if (!(snr[0] > snr[k])) return false;
  return snr.size() >= 2;
}

bool positive_secrecy_condition(const ChannelSet& ch, const PhaseVector& v) {
  return positive_secrecy_condition_from_snr(normalized_gains(ch, v));
}

double alpha_opt_from_snr(double snr_min, double p, double r_m) {
  if (!(p >= 0.0) || !(r_m >= 0.0)) throw DomainError("power and rate must be nonnegative");
  if (!(snr_min > 0.0)) return 0.0;
  const double q = std::exp2(r_m);
  const double a = (p * snr_min - (q - 1.0)) / (q * snr_min);
  return std::clamp(std::min(p, a), 0.0, p);
}

double alpha_opt_closed_form(double x_min, double sigma2_min, double p, double r_m) {
  if (!(sigma2_min > 0.0)) throw DomainError("noise power must be positive");
  return alpha_opt_from_snr(x_min / sigma2_min, p, r_m);
}

bool qoms_attainable(double snr_min, double p, double r_m) {
  return p * snr_min >= std::exp2(r_m) - 1.0;
}

bool qoms_satisfied(const std::vector<double>& snr, const PowerSplit& split, double r_m,
                    double tol) {
  return multicast_rate_from_snr(snr, split) >= r_m - tol;
}

double min_value(const std::vector<double>& values) {
  if (values.empty()) throw DomainError("min of empty list");
  return *std::min_element(values.begin(), values.end());
}

}  // namespace irs_si
