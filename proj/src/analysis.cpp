#include "irs_si/analysis.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "irs_si/errors.hpp"

namespace irs_si {

namespace {

double sampling_term(double p, int n, double tr_t1, double sigma1_sq, int t_alpha) {
  if (t_alpha < 2) throw DomainError("t_alpha must be at least 2");
  if (!(sigma1_sq > 0.0)) throw DomainError("noise power must be positive");
  return p * (n + 1) * tr_t1 / (sigma1_sq * (t_alpha - 1));
}

}  // namespace

double gap_bound_tight(double p, int n, double tr_t1, double sigma1_sq, int t_alpha) {
  return std::log2(1.0 + sampling_term(p, n, tr_t1, sigma1_sq, t_alpha));
}

GeneralGapBound gap_bound_general(double p, int n, double tr_t1, double sigma1_sq, int t_alpha,
                                  double delta_c) {
  if (delta_c < 0.0) throw DomainError("delta_c must be nonnegative");
  const double s = sampling_term(p, n, tr_t1, sigma1_sq, t_alpha);
  GeneralGapBound out;
  out.general = std::log2(1.0 + s) + delta_c;
  out.worst_case = std::log2(4.0 / std::numbers::pi + 4.0 * s / std::numbers::pi);
  return out;
}

GapBoundReport gap_bound_report(const ChannelSet& ch, double p, const BoundaryPoint& point, int t_alpha) {
  const double tr_t1 = build_tk(ch.m[0], ch.g, ch.h[0]).matrix.trace().real();
  GapBoundReport r;
  r.t_alpha = t_alpha;
  r.bound_tight = gap_bound_tight(p, ch.n(), tr_t1, ch.sigma2[0], t_alpha);
  r.delta_c = point.diagnostics.delta_c;
  const GeneralGapBound g =
      gap_bound_general(p, ch.n(), tr_t1, ch.sigma2[0], t_alpha, std::isfinite(r.delta_c) ? std::max(0.0, r.delta_c) : 0.0);
  r.bound_general = std::isfinite(r.delta_c) ? g.general : kNaN;
  r.bound_worst_case = g.worst_case;
  return r;
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::Improves: return "Improves";
    case Classification::Impairs: return "Impairs";
    case Classification::Indeterminate: return "Indeterminate";
  }
  return "unknown";
}

namespace {

void require_two_users(const ChannelSet& ch) {
  ch.validate();
  if (ch.k() != 2) throw PreconditionError("analysis needs exactly two users");
}

}  // namespace

EnhancementReport enhancement_analysis(const ChannelSet& ch, const PhaseVector& v, double alpha, double p,
                                       double r_m) {
  require_two_users(ch);
  const std::vector<double> with = normalized_gains(ch, v);
  const std::vector<double> without = direct_normalized_gains(ch);
  EnhancementReport rep;
  for (int k = 0; k < 2; ++k)
    rep.e_factors.push_back((1.0 + alpha * with[static_cast<std::size_t>(k)]) /
                            (1.0 + alpha * without[static_cast<std::size_t>(k)]));
  rep.eta = rep.e_factors[0] / rep.e_factors[1];
  const double r_irs = secrecy_rate_unclamped_from_snr(with, alpha);
  const double r_non = secrecy_rate_unclamped_from_snr(without, alpha);
  rep.identity_residual = std::abs(std::exp2(r_irs) - rep.eta * std::exp2(r_non));
  rep.alpha_with = alpha_opt_from_snr(min_value(with), p, r_m);
  rep.alpha_without = alpha_opt_from_snr(min_value(without), p, r_m);
  try {
    rep.classification = proposition3_classify(ch, v);
  } catch (const PreconditionError&) {
    rep.classification.reset();
  }
  return rep;
}

Classification proposition3_classify(const ChannelSet& ch, const PhaseVector& v) {
  require_two_users(ch);
  const std::vector<double> direct = direct_normalized_gains(ch);
  if (!(direct[0] > direct[1]))
    throw PreconditionError("direct links give no positive secrecy rate (user 1 must be stronger)");
  const double x1 = std::sqrt(effective_gain(v, ch.m[0], ch.g, ch.h[0]));
  const double x2 = std::sqrt(effective_gain(v, ch.m[1], ch.g, ch.h[1]));
  const double h1 = std::abs(ch.h[0]);
  const double h2 = std::abs(ch.h[1]);
  if (x2 > h2 && h2 * x1 > h1 * x2) return Classification::Improves;
  if (x2 < h2 && h2 * x1 < h1 * x2) return Classification::Impairs;
  return Classification::Indeterminate;
}

ComplexityEstimate complexity_estimate(int n, int k, int t_alpha, int t_lambda, int t_g) {
  if (n < 1 || k < 1 || t_alpha < 1 || t_lambda < 1 || t_g < 1)
    throw DomainError("complexity arguments must be positive");
  const double dn = n;
  const double dk = k;
  const double s = dn + 1.0;
  const double nv = s * s + 1.0;
  const auto sdp_cost = [&](double geometric, double extra) {
    return std::sqrt(geometric) * (nv * (s * s * s + extra) + nv * nv * (s * s + extra) + nv * nv * nv);
  };
  ComplexityEstimate e;
  e.n_var = nv;
  e.a1_1 = sdp_cost(2 * dn + dk + 1, dk + dn);
  e.a1_2 = sdp_cost(2 * dn + 2 * dk + 1, 2 * dk + dn);
  e.a2_2 = sdp_cost(2 * dn + dk + 4, dk + dn + 3);
  e.g = s * s * s + 8.0 * t_g * s * s;
  e.a1 = e.a1_1 + t_alpha * (e.a1_2 + e.g);
  e.a2 = e.a1_1 + e.a2_2 + t_lambda * e.g;
  return e;
}

namespace {

// Visits every point of the phase grid.
template <class F>
void for_each_phase(int n, int levels, double offset, F&& f) {
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  std::vector<double> theta(static_cast<std::size_t>(n));
  const double step = 2.0 * std::numbers::pi / levels;
  while (true) {
    for (std::size_t i = 0; i < idx.size(); ++i) theta[i] = offset + step * idx[i];
    f(theta);
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == levels) idx[pos++] = 0;
    if (pos == idx.size()) return;
  }
}

void check_budget(int n, int levels, double per_point) {
  const double cost = std::pow(static_cast<double>(levels), n) * per_point;
  if (cost > kOracleMaxEvaluations) {
    std::ostringstream msg;
    msg << "oracle grid needs about " << cost << " evaluations (limit " << kOracleMaxEvaluations << ")";
    throw ResourceError(msg.str());
  }
}

}  // namespace

OracleResult brute_force_oracle(const ChannelSet& ch, double p, double r_m, int phase_levels,
                                int alpha_points, double phase_offset) {
  ch.validate();
  if (phase_levels < 1 || alpha_points < 2) throw DomainError("oracle grid too small");
  check_budget(ch.n(), phase_levels, alpha_points);
  OracleResult best;
  best.r_c = -1.0;
  for_each_phase(ch.n(), phase_levels, phase_offset, [&](const std::vector<double>& theta) {
    const PhaseVector v = PhaseVector::from_phases(theta);
    const std::vector<double> snr = normalized_gains(ch, v);
    for (int a = 0; a < alpha_points; ++a) {
      const double alpha = p * a / (alpha_points - 1);
      if (!qoms_satisfied(snr, {alpha, p - alpha}, r_m, 1e-12)) continue;
      const double r = secrecy_rate_from_snr(snr, alpha);
      if (r > best.r_c) {
        best.r_c = r;
        best.v = v;
        best.alpha = alpha;
        best.feasible = true;
      }
    }
  });
  if (!best.feasible) best.r_c = 0.0;
  return best;
}

double brute_force_multicast(const ChannelSet& ch, double p, int phase_levels) {
  ch.validate();
  check_budget(ch.n(), phase_levels, 1.0);
  double best = 0.0;
  for_each_phase(ch.n(), phase_levels, 0.0, [&](const std::vector<double>& theta) {
    best = std::max(best, std::log2(1.0 + p * min_value(normalized_gains(ch, PhaseVector::from_phases(theta)))));
  });
  return best;
}

}  // namespace irs_si
