#include "irs_si/algorithms.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <numbers>
#include <optional>
#include <thread>

#include "irs_si/analysis.hpp"
#include "irs_si/errors.hpp"
#include "irs_si/rounding.hpp"

namespace irs_si {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
// Relative margin kept between the multicast floor and what the relaxation
// can reach, so the fixed-alpha program keeps a strict interior.
constexpr double kQomsMargin = 1e-6;
constexpr double kXiFloor = 1e-10;

CMatrix unit_matrix(int i, int dim) {
  CMatrix e = CMatrix::Zero(dim, dim);
  e(i, i) = 1.0;
  return e;
}

std::vector<int> eavesdroppers(int k) {
  std::vector<int> out;
  for (int i = 1; i < k; ++i) out.push_back(i);
  return out;
}

// Unclamped secrecy with alpha set to min(alpha_cap, closed-form optimum);
// -inf when no split meets the multicast floor.
struct RepairedScore {
  double score = kNegInf;
  double alpha = 0.0;
};

RepairedScore repaired_secrecy(const std::vector<double>& snr, double p, double r_m,
                               double alpha_cap) {
  const double snr_min = min_value(snr);
  if (!qoms_attainable(snr_min, p, r_m)) return {};
  const double alpha = std::min(alpha_cap, alpha_opt_from_snr(snr_min, p, r_m));
  return {secrecy_rate_unclamped_from_snr(snr, alpha), alpha};
}

BoundaryPoint infeasible_point(double r_m, double p, Scheme scheme) {
  BoundaryPoint pt;
  pt.r_m_target = r_m;
  pt.r_c_achieved = 0.0;
  pt.alpha = 0.0;
  pt.beta = p;
  pt.feasible = false;
  pt.scheme = scheme;
  return pt;
}

void check_power(double p) {
  if (!(p > 0.0)) throw DomainError("transmit power must be positive");
}

}  // namespace

std::string to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::Cct: return "cct";
    case Scheme::Wscm: return "wscm";
    case Scheme::RandomIrs: return "random-irs";
    case Scheme::NoIrs: return "no-irs";
    case Scheme::Tdma: return "tdma";
    case Scheme::UpperBound: return "upper-bound";
    case Scheme::Oracle: return "oracle";
  }
  return "unknown";
}

Scheme scheme_from_string(std::string_view name) {
  for (Scheme s : {Scheme::Cct, Scheme::Wscm, Scheme::RandomIrs, Scheme::NoIrs, Scheme::Tdma,
                   Scheme::UpperBound, Scheme::Oracle})
    if (to_string(s) == name) return s;
  throw ConfigError("unknown scheme: " + std::string(name));
}

MaxMinGain max_min_normalized_gain(const std::vector<CMatrix>& forms, const std::vector<int>& users,
                                   const sdp::SolverConfig& config) {
  if (forms.empty() || users.empty()) throw DomainError("no users for max-min gain");
  const int dim = static_cast<int>(forms.front().rows());
  if (users.size() == 1) {
    // Rank-one form: the unit-modulus optimum aligns every phase.
    const CMatrix& t = forms[static_cast<std::size_t>(users.front())];
    Eigen::SelfAdjointEigenSolver<CMatrix> es(t);
    const CVector w = es.eigenvectors().col(dim - 1) * std::sqrt(std::max(0.0, es.eigenvalues()(dim - 1)));
    CVector z(dim);
    for (int i = 0; i < dim; ++i) z(i) = std::abs(w(i)) > 0.0 ? w(i) / std::abs(w(i)) : Complex(1.0);
    MaxMinGain out;
    out.value = std::pow(w.cwiseAbs().sum(), 2);
    out.z = z * z.adjoint();
    return out;
  }
  sdp::SdpProblem prob;
  prob.dim = dim;
  prob.objective = CMatrix::Zero(dim, dim);
  prob.num_scalars = 1;
  prob.objective_scalars = RVector::Ones(1);
  for (int k : users)
    prob.constraints.push_back({forms[static_cast<std::size_t>(k)], RVector::Constant(1, -1.0),
                                sdp::Relation::GreaterEqual, 0.0});
  for (int i = 0; i < dim; ++i)
    prob.constraints.push_back({unit_matrix(i, dim), {}, sdp::Relation::Equal, 1.0});
  const sdp::SdpSolution sol = sdp::solve(prob, config);
  if (!sol.optimal())
    throw SolverError(std::string("max-min gain program: ") + sdp::to_string(sol.status) + ", " + sol.message);
  return {std::max(0.0, sol.objective_value), sol.matrix};
}

MulticastBound multicast_upper_bound(const ChannelSet& ch, double p, const sdp::SolverConfig& config) {
  ch.validate();
  check_power(p);
  std::vector<int> all;
  for (int k = 0; k < ch.k(); ++k) all.push_back(k);
  const MaxMinGain mm = max_min_normalized_gain(normalized_forms(ch), all, config);
  MulticastBound out;
  out.snr = p * mm.value;
  out.r_m_up = std::log2(1.0 + out.snr);
  out.z = mm.z;
  return out;
}

double CctResult::log2_bound() const { return std::max(0.0, std::log2(c_value)); }

CctContext::CctContext(ChannelSet ch, double p, sdp::SolverConfig config)
    : ch_(std::move(ch)), p_(p), config_(config) {
  ch_.validate();
  check_power(p_);
  forms_ = normalized_forms(ch_);
  eaves_max_min_ = max_min_normalized_gain(forms_, eavesdroppers(ch_.k()), config_).value;
}

CctResult CctContext::solve(double r_m, double alpha) const {
  if (!(r_m >= 0.0)) throw DomainError("multicast target must be nonnegative");
  if (alpha < -1e-12 || alpha > p_ * (1.0 + 1e-12)) throw DomainError("alpha outside [0, P]");
  alpha = std::clamp(alpha, 0.0, p_);
  const int dim = ch_.n() + 1;
  const double q = std::exp2(r_m);
  const double qoms_coef = p_ - alpha * q;
  const bool qoms_active = r_m > 0.0;

  CctResult res;
  if (qoms_active && (qoms_coef <= 0.0 || qoms_coef * eaves_max_min_ < (q - 1.0) * (1.0 + kQomsMargin))) {
    res.status = CctStatus::Infeasible;
    return res;
  }

  const CMatrix flat = CMatrix::Identity(dim, dim) / static_cast<double>(dim);
  sdp::SdpProblem prob;
  prob.dim = dim;
  prob.objective = flat + alpha * forms_[0];
  prob.num_scalars = 1;
  for (int k = 1; k < ch_.k(); ++k) {
    const CMatrix& t = forms_[static_cast<std::size_t>(k)];
    prob.constraints.push_back({flat + alpha * t, {}, sdp::Relation::LessEqual, 1.0});
    if (qoms_active)
      prob.constraints.push_back({qoms_coef * t - (q - 1.0) * flat, {}, sdp::Relation::GreaterEqual, 0.0});
  }
  for (int i = 0; i < dim; ++i)
    prob.constraints.push_back({unit_matrix(i, dim), RVector::Constant(1, -1.0), sdp::Relation::Equal, 0.0});

  res.solution = sdp::solve(prob, config_);
  switch (res.solution.status) {
    case sdp::SolveStatus::Optimal: break;
    case sdp::SolveStatus::Infeasible: res.status = CctStatus::Infeasible; return res;
    default: res.status = CctStatus::SolverFailed; return res;
  }
  res.y = res.solution.matrix;
  res.xi = res.solution.scalars(0);
  if (!(res.xi > kXiFloor)) {
    res.status = CctStatus::SolverFailed;
    return res;
  }
  res.c_value = res.solution.objective_value;
  res.status = CctStatus::Solved;
  return res;
}

CctResult cct_fixed_alpha(const ChannelSet& ch, double p, double r_m, double alpha,
                          const sdp::SolverConfig& config) {
  return CctContext(ch, p, config).solve(r_m, alpha);
}

BoundaryPoint algorithm1_cct(const CctContext& ctx, double r_m, const AlgorithmParams& params, Rng& rng) {
  if (params.t_alpha < 2) throw ConfigError("t_alpha must be at least 2");
  const ChannelSet& ch = ctx.channels();
  const double p = ctx.power();

  BoundaryPoint best = infeasible_point(r_m, p, Scheme::Cct);
  double best_score = kNegInf;
  double best_c = kNaN;
  int solved = 0;
  BoundaryDiagnostics diag;
  for (int t = 0; t < params.t_alpha; ++t) {
    const double alpha_t = p * t / (params.t_alpha - 1);
    const CctResult res = ctx.solve(r_m, alpha_t);
    if (res.status == CctStatus::Infeasible) {
      ++diag.infeasible_steps;
      continue;
    }
    if (res.status == CctStatus::SolverFailed) {
      ++diag.failed_steps;
      continue;
    }
    ++solved;
    const auto score = [&](const PhaseVector& v) {
      return repaired_secrecy(normalized_gains(ch, v), p, r_m, alpha_t).score;
    };
    const sdp::RoundingResult r = sdp::grp_round(res.z(), params.t_g, score, rng);
    if (r.score > best_score) {
      const std::vector<double> snr = normalized_gains(ch, r.v);
      const RepairedScore rep = repaired_secrecy(snr, p, r_m, alpha_t);
      best_score = r.score;
      best_c = res.c_value;
      best.feasible = true;
      best.phase_vector = r.v;
      best.alpha = rep.alpha;
      best.beta = p - rep.alpha;
      best.r_c_achieved = std::max(0.0, r.score);
      best.diagnostics.unrepaired_r_c = secrecy_rate_from_snr(snr, alpha_t);
      best.diagnostics.alpha_sampled = alpha_t;
      best.diagnostics.winning_index = t;
      best.diagnostics.rank_one = r.rank_one;
    }
  }
  if (solved == 0 && diag.failed_steps > 0)
    throw SolverError("every fixed-alpha program failed (" + std::to_string(diag.failed_steps) + " steps)");
  best.diagnostics.infeasible_steps = diag.infeasible_steps;
  best.diagnostics.failed_steps = diag.failed_steps;
  if (!best.feasible || best_score == kNegInf) {
    BoundaryPoint out = infeasible_point(r_m, p, Scheme::Cct);
    out.diagnostics.infeasible_steps = diag.infeasible_steps;
    out.diagnostics.failed_steps = diag.failed_steps;
    return out;
  }
  if (params.compute_upper_bound) {
    double c = best_c;
    if (best.alpha != best.diagnostics.alpha_sampled) {
      const CctResult at = ctx.solve(r_m, best.alpha);
      c = at.status == CctStatus::Solved ? at.c_value : kNaN;
    }
    if (std::isfinite(c)) {
      best.upper_bound = std::max(0.0, std::log2(c));
      best.diagnostics.delta_c = best.upper_bound - best.r_c_achieved;
    }
  }
  return best;
}

BoundaryPoint algorithm1_cct(const ChannelSet& ch, double p, double r_m, const AlgorithmParams& params,
                             Rng& rng) {
  return algorithm1_cct(CctContext(ch, p, params.solver), r_m, params, rng);
}

BoundaryPoint upper_bound_point(const CctContext& ctx, double r_m, const AlgorithmParams& params) {
  if (params.t_alpha < 2) throw ConfigError("t_alpha must be at least 2");
  const double p = ctx.power();
  BoundaryPoint best = infeasible_point(r_m, p, Scheme::UpperBound);
  double best_c = kNegInf;
  int failed = 0;
  int solved = 0;
  for (int t = 0; t < params.t_alpha; ++t) {
    const double alpha_t = p * t / (params.t_alpha - 1);
    const CctResult res = ctx.solve(r_m, alpha_t);
    if (res.status == CctStatus::SolverFailed) ++failed;
    if (res.status != CctStatus::Solved) continue;
    ++solved;
    if (res.c_value > best_c) {
      best_c = res.c_value;
      Eigen::SelfAdjointEigenSolver<CMatrix> es(res.z());
      best.phase_vector = sdp::phases_from_lifted(es.eigenvectors().col(es.eigenvectors().cols() - 1));
      best.alpha = alpha_t;
      best.beta = p - alpha_t;
      best.feasible = true;
      best.diagnostics.winning_index = t;
      best.diagnostics.alpha_sampled = alpha_t;
    }
  }
  if (solved == 0 && failed > 0) throw SolverError("every fixed-alpha program failed");
  if (best.feasible) {
    best.r_c_achieved = std::max(0.0, std::log2(best_c));
    best.upper_bound = best.r_c_achieved;
  }
  best.diagnostics.failed_steps = failed;
  return best;
}

namespace {

CctResult secrecy_program(const ChannelSet& ch, double p, const sdp::SolverConfig& config) {
  const CctResult res = cct_fixed_alpha(ch, p, 0.0, p, config);
  if (res.status != CctStatus::Solved)
    throw SolverError(std::string("secrecy covariance program failed: ") + res.solution.message);
  return res;
}

}  // namespace

CMatrix secrecy_covariance(const ChannelSet& ch, double p, const sdp::SolverConfig& config) {
  return secrecy_program(ch, p, config).z();
}

WscmInputs prepare_wscm(const ChannelSet& ch, double p, const sdp::SolverConfig& config) {
  return {multicast_upper_bound(ch, p, config).z, secrecy_covariance(ch, p, config)};
}

BoundaryPoint algorithm2_wscm(const ChannelSet& ch, double p, double r_m, const WscmInputs& inputs,
                              const AlgorithmParams& params, Rng& rng) {
  if (params.t_lambda < 2) throw ConfigError("t_lambda must be at least 2");
  check_power(p);
  BoundaryPoint best = infeasible_point(r_m, p, Scheme::Wscm);
  double best_score = kNegInf;
  const auto score = [&](const PhaseVector& v) {
    return repaired_secrecy(normalized_gains(ch, v), p, r_m, p).score;
  };
  for (int t = 0; t < params.t_lambda; ++t) {
    const double lambda = static_cast<double>(t) / (params.t_lambda - 1);
    const CMatrix z = lambda * inputs.z_c + (1.0 - lambda) * inputs.z_m;
    const sdp::RoundingResult r = sdp::grp_round(z, params.t_g, score, rng);
    if (r.score > best_score) {
      const RepairedScore rep = repaired_secrecy(normalized_gains(ch, r.v), p, r_m, p);
      best_score = r.score;
      best.feasible = true;
      best.phase_vector = r.v;
      best.alpha = rep.alpha;
      best.beta = p - rep.alpha;
      best.r_c_achieved = std::max(0.0, r.score);
      best.diagnostics.winning_index = t;
      best.diagnostics.rank_one = r.rank_one;
    }
  }
  if (best_score == kNegInf) return infeasible_point(r_m, p, Scheme::Wscm);
  if (params.compute_upper_bound) {
    const CctResult at = cct_fixed_alpha(ch, p, r_m, best.alpha, params.solver);
    if (at.status == CctStatus::Solved) {
      best.upper_bound = at.log2_bound();
      best.diagnostics.delta_c = best.upper_bound - best.r_c_achieved;
    }
  }
  return best;
}

BoundaryPoint algorithm2_wscm(const ChannelSet& ch, double p, double r_m, const AlgorithmParams& params,
                              Rng& rng) {
  return algorithm2_wscm(ch, p, r_m, prepare_wscm(ch, p, params.solver), params, rng);
}

namespace {

BoundaryPoint closed_form_point(const std::vector<double>& snr, double p, double r_m, Scheme scheme,
                                PhaseVector v) {
  const RepairedScore rep = repaired_secrecy(snr, p, r_m, p);
  if (rep.score == kNegInf) return infeasible_point(r_m, p, scheme);
  BoundaryPoint pt;
  pt.r_m_target = r_m;
  pt.r_c_achieved = std::max(0.0, rep.score);
  pt.alpha = rep.alpha;
  pt.beta = p - rep.alpha;
  pt.phase_vector = std::move(v);
  pt.feasible = true;
  pt.scheme = scheme;
  return pt;
}

}  // namespace

BoundaryPoint baseline_random_irs(const ChannelSet& ch, double p, double r_m, Rng& rng) {
  ch.validate();
  check_power(p);
  std::uniform_real_distribution<double> phase(-std::numbers::pi, std::numbers::pi);
  std::vector<double> theta(static_cast<std::size_t>(ch.n()));
  for (double& t : theta) t = phase(rng);
  PhaseVector v = PhaseVector::from_phases(theta);
  const std::vector<double> snr = normalized_gains(ch, v);
  return closed_form_point(snr, p, r_m, Scheme::RandomIrs, std::move(v));
}

BoundaryPoint baseline_no_irs(const ChannelSet& ch, double p, double r_m) {
  ch.validate();
  check_power(p);
  return closed_form_point(direct_normalized_gains(ch), p, r_m, Scheme::NoIrs, PhaseVector());
}

MulticastPoint multicast_rounded(const ChannelSet& ch, double p, const CMatrix& z_m, int t_g, Rng& rng) {
  const auto score = [&](const PhaseVector& v) { return min_value(normalized_gains(ch, v)); };
  const sdp::RoundingResult r = sdp::grp_round(z_m, t_g, score, rng);
  return {std::log2(1.0 + p * std::max(0.0, r.score)), r.v};
}

TdmaEndpoints tdma_endpoints(const ChannelSet& ch, double p, const AlgorithmParams& params, Rng& rng) {
  const CctContext ctx(ch, p, params.solver);
  const BoundaryPoint top = algorithm1_cct(ctx, 0.0, params, rng);
  const MulticastBound mb = multicast_upper_bound(ch, p, params.solver);
  const MulticastPoint mp = multicast_rounded(ch, p, mb.z, params.t_g, rng);
  return {mp.r_m, top.r_c_achieved, mp.v, top.phase_vector};
}

namespace {

// Time-sharing point at multicast rate r_m; alpha/beta are time-averaged powers.
BoundaryPoint tdma_point(const TdmaEndpoints& ep, double p, double r_m) {
  if (r_m > ep.r_m_max * (1.0 + 1e-12) || ep.r_m_max <= 0.0) {
    BoundaryPoint pt = infeasible_point(r_m, p, Scheme::Tdma);
    if (r_m == 0.0) {
      pt.feasible = true;
      pt.r_c_achieved = ep.r_c_max;
      pt.alpha = p;
      pt.beta = 0.0;
      pt.phase_vector = ep.secrecy_v;
    }
    return pt;
  }
  const double share = std::min(1.0, r_m / ep.r_m_max);
  BoundaryPoint pt;
  pt.r_m_target = r_m;
  pt.r_c_achieved = (1.0 - share) * ep.r_c_max;
  pt.alpha = (1.0 - share) * p;
  pt.beta = share * p;
  pt.phase_vector = share < 0.5 ? ep.secrecy_v : ep.multicast_v;
  pt.feasible = true;
  pt.scheme = Scheme::Tdma;
  return pt;
}

}  // namespace

RegionBoundary baseline_tdma(const ChannelSet& ch, double p, int grid_points, const AlgorithmParams& params,
                             Rng& rng) {
  if (grid_points < 2) throw ConfigError("grid_points must be at least 2");
  const TdmaEndpoints ep = tdma_endpoints(ch, p, params, rng);
  RegionBoundary region;
  region.r_m_up = ep.r_m_max;
  for (int i = 0; i < grid_points; ++i)
    region.points.push_back(tdma_point(ep, p, ep.r_m_max * i / (grid_points - 1)));
  return region;
}

BoundaryPoint max_secrecy_rate(const ChannelSet& ch, double p, const AlgorithmParams& params, Rng& rng) {
  ch.validate();
  check_power(p);
  const CctResult res = secrecy_program(ch, p, params.solver);
  const auto score = [&](const PhaseVector& v) {
    return secrecy_rate_unclamped_from_snr(normalized_gains(ch, v), p);
  };
  const sdp::RoundingResult r = sdp::grp_round(res.z(), params.t_g, score, rng);
  BoundaryPoint pt;
  pt.r_m_target = 0.0;
  pt.r_c_achieved = std::max(0.0, r.score);
  pt.alpha = p;
  pt.beta = 0.0;
  pt.phase_vector = r.v;
  pt.upper_bound = res.log2_bound();
  pt.feasible = true;
  pt.scheme = Scheme::Cct;
  pt.diagnostics.rank_one = r.rank_one;
  pt.diagnostics.delta_c = pt.upper_bound - pt.r_c_achieved;
  return pt;
}

void pareto_filter(RegionBoundary& region) {
  std::sort(region.points.begin(), region.points.end(),
            [](const BoundaryPoint& a, const BoundaryPoint& b) { return a.r_m_target < b.r_m_target; });
  const BoundaryPoint* best = nullptr;
  for (auto it = region.points.rbegin(); it != region.points.rend(); ++it) {
    if (!it->feasible) continue;
    if (best && best->r_c_achieved > it->r_c_achieved) {
      // A point meeting a higher floor also meets this one.
      const double target = it->r_m_target;
      const Scheme scheme = it->scheme;
      *it = *best;
      it->r_m_target = target;
      it->scheme = scheme;
    }
    best = &*it;
  }
  region.pareto_filtered = true;
}

int default_thread_count() {
  if (const char* env = std::getenv("IRS_SI_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

RegionBoundary sweep_region(const ChannelSet& ch, double p, Scheme scheme, const AlgorithmParams& params,
                            const SweepOptions& options) {
  ch.validate();
  check_power(p);
  RegionBoundary region;
  std::vector<double> targets = options.targets;
  const MulticastBound mb = multicast_upper_bound(ch, p, params.solver);
  region.r_m_up = mb.r_m_up;
  if (targets.empty()) {
    if (options.grid_points < 2) throw ConfigError("grid_points must be at least 2");
    for (int i = 0; i < options.grid_points; ++i)
      targets.push_back(mb.r_m_up * i / (options.grid_points - 1));
  }
  std::sort(targets.begin(), targets.end());
  for (double r : targets)
    if (!(r >= 0.0)) throw ConfigError("multicast targets must be nonnegative");

  // Shared per-channel state, built once before the parallel part.
  std::optional<CctContext> ctx;
  std::optional<WscmInputs> wscm;
  std::optional<TdmaEndpoints> tdma;
  if (scheme == Scheme::Cct || scheme == Scheme::UpperBound) ctx.emplace(ch, p, params.solver);
  if (scheme == Scheme::Wscm) wscm = WscmInputs{mb.z, secrecy_covariance(ch, p, params.solver)};
  if (scheme == Scheme::Tdma) {
    Rng rng = substream(options.seed, targets.size(), 0x54444dau);
    const CctContext local(ch, p, params.solver);
    const BoundaryPoint top = algorithm1_cct(local, 0.0, params, rng);
    const MulticastPoint mp = multicast_rounded(ch, p, mb.z, params.t_g, rng);
    tdma = TdmaEndpoints{mp.r_m, top.r_c_achieved, mp.v, top.phase_vector};
  }

  const auto evaluate = [&](std::size_t index) {
    Rng rng = substream(options.seed, index);
    const double r_m = targets[index];
    switch (scheme) {
      case Scheme::Cct: return algorithm1_cct(*ctx, r_m, params, rng);
      case Scheme::Wscm: return algorithm2_wscm(ch, p, r_m, *wscm, params, rng);
      case Scheme::RandomIrs: return baseline_random_irs(ch, p, r_m, rng);
      case Scheme::NoIrs: return baseline_no_irs(ch, p, r_m);
      case Scheme::Tdma: return tdma_point(*tdma, p, r_m);
      case Scheme::UpperBound: return upper_bound_point(*ctx, r_m, params);
      case Scheme::Oracle: {
        const OracleResult o =
            brute_force_oracle(ch, p, r_m, params.oracle_phase_levels, params.oracle_alpha_points);
        BoundaryPoint pt = infeasible_point(r_m, p, Scheme::Oracle);
        if (o.feasible) {
          pt.feasible = true;
          pt.r_c_achieved = o.r_c;
          pt.alpha = o.alpha;
          pt.beta = p - o.alpha;
          pt.phase_vector = o.v;
        }
        return pt;
      }
    }
    throw ConfigError("unknown scheme");
  };

  region.points.resize(targets.size());
  const int threads = std::min<int>(options.threads > 0 ? options.threads : default_thread_count(),
                                    static_cast<int>(targets.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < targets.size(); ++i) region.points[i] = evaluate(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < targets.size(); i = next++) region.points[i] = evaluate(i);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
          next = targets.size();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  for (auto& pt : region.points) pt.scheme = scheme;
  if (options.pareto_filter) pareto_filter(region);
  return region;
}

}  // namespace irs_si
