#include "irs_si/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "irs_si/errors.hpp"

namespace irs_si::sdp {

namespace {

using Eigen::Index;

struct Entry {
  Index row;
  Index col;
  Complex value;
};

// One equality row of the internal standard form: Re Tr(A X) + a . s = b.
struct Row {
  bool dense = false;
  CMatrix matrix;              // always kept, used when dense
  std::vector<Entry> entries;  // nonzeros, used when sparse
  RVector scalars;             // length = total scalar count
  double bound = 0.0;
};

double apply_row(const Row& row, const CMatrix& x) {
  if (row.dense) return trace_inner(row.matrix, x);
  double acc = 0.0;
  for (const Entry& e : row.entries) acc += (e.value * x(e.col, e.row)).real();
  return acc;
}

void add_row_adjoint(const Row& row, double y, CMatrix& out) {
  if (row.dense) {
    out += y * row.matrix;
    return;
  }
  for (const Entry& e : row.entries) out(e.row, e.col) += y * e.value;
}

double min_eig(const CMatrix& a) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

// Largest step t with x + t dx PSD, given the Cholesky factor of x.
double max_step_psd(const Eigen::LLT<CMatrix>& chol, const CMatrix& dx) {
  const CMatrix l_inv_dx = chol.matrixL().solve(dx);
  const CMatrix m = chol.matrixL().solve(l_inv_dx.adjoint()).adjoint();
  const double lam = min_eig(hermitian_part(m));
  if (lam >= 0.0) return std::numeric_limits<double>::infinity();
  return -1.0 / lam;
}

double max_step_nonneg(const RVector& s, const RVector& ds) {
  double t = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < s.size(); ++i)
    if (ds(i) < 0.0) t = std::min(t, -s(i) / ds(i));
  return t;
}

bool is_hermitian(const CMatrix& a) {
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= 1e-10 * scale;
}

}  // namespace

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Unbounded: return "unbounded";
    case SolveStatus::MaxIterations: return "max_iterations";
  }
  return "unknown";
}

void SdpProblem::validate() const {
  if (dim < 1) throw ConfigError("SDP dimension must be positive");
  if (num_scalars < 0) throw ConfigError("negative scalar count");
  if (objective.rows() != dim || objective.cols() != dim)
    throw ConfigError("objective has wrong size");
  if (!is_hermitian(objective)) throw ConfigError("objective is not Hermitian");
  if (objective_scalars.size() != 0 && objective_scalars.size() != num_scalars)
    throw ConfigError("objective scalar coefficients have wrong length");
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const Constraint& c = constraints[i];
    const std::string tag = "constraint " + std::to_string(i);
    if (c.matrix.size() != 0 && (c.matrix.rows() != dim || c.matrix.cols() != dim))
      throw ConfigError(tag + " has wrong size");
    if (c.matrix.size() != 0 && !is_hermitian(c.matrix)) throw ConfigError(tag + " is not Hermitian");
    if (c.scalar_coeffs.size() != 0 && c.scalar_coeffs.size() != num_scalars)
      throw ConfigError(tag + " scalar coefficients have wrong length");
    const double norm = (c.matrix.size() ? c.matrix.squaredNorm() : 0.0) +
                        (c.scalar_coeffs.size() ? c.scalar_coeffs.squaredNorm() : 0.0);
    if (norm == 0.0) throw ConfigError(tag + " has no coefficients");
    if (!std::isfinite(c.bound)) throw ConfigError(tag + " bound is not finite");
  }
}

SdpSolution solve(const SdpProblem& problem, const SolverConfig& config) {
  problem.validate();
  const Index n = problem.dim;
  const Index m = static_cast<Index>(problem.constraints.size());
  const Index n_user = problem.num_scalars;
  Index n_slack = 0;
  for (const auto& c : problem.constraints)
    if (c.relation != Relation::Equal) ++n_slack;
  const Index ns = n_user + n_slack;
  const double sense = problem.maximize ? -1.0 : 1.0;

  // Internal minimization data with every row scaled to unit norm.
  RVector row_scale(m);
  std::vector<Row> rows(static_cast<std::size_t>(m));
  Index slack = n_user;
  for (Index i = 0; i < m; ++i) {
    const Constraint& c = problem.constraints[static_cast<std::size_t>(i)];
    Row& r = rows[static_cast<std::size_t>(i)];
    r.matrix = c.matrix.size() ? c.matrix : CMatrix::Zero(n, n);
    r.scalars = RVector::Zero(ns);
    if (c.scalar_coeffs.size()) r.scalars.head(n_user) = c.scalar_coeffs;
    const double norm = std::sqrt(r.matrix.squaredNorm() + r.scalars.squaredNorm());
    row_scale(i) = norm;
    r.matrix /= norm;
    r.scalars /= norm;
    r.bound = c.bound / norm;
    if (c.relation == Relation::LessEqual) r.scalars(slack++) = 1.0;
    if (c.relation == Relation::GreaterEqual) r.scalars(slack++) = -1.0;
    for (Index col = 0; col < n; ++col)
      for (Index rr = 0; rr < n; ++rr)
        if (r.matrix(rr, col) != Complex(0.0)) r.entries.push_back({rr, col, r.matrix(rr, col)});
    r.dense = static_cast<Index>(r.entries.size()) > 2 * n;
  }

  CMatrix cmat = sense * problem.objective;
  RVector cs = RVector::Zero(ns);
  if (problem.objective_scalars.size()) cs.head(n_user) = sense * problem.objective_scalars;
  const double obj_scale = std::max(1.0, std::sqrt(cmat.squaredNorm() + cs.squaredNorm()));
  cmat /= obj_scale;
  cs /= obj_scale;

  RVector b(m);
  for (Index i = 0; i < m; ++i) b(i) = rows[static_cast<std::size_t>(i)].bound;
  const double b_norm = b.size() ? b.lpNorm<Eigen::Infinity>() : 0.0;
  const double c_norm = std::sqrt(cmat.squaredNorm() + cs.squaredNorm());

  std::vector<Index> dense_rows;
  std::vector<Index> sparse_rows;
  for (Index i = 0; i < m; ++i)
    (rows[static_cast<std::size_t>(i)].dense ? dense_rows : sparse_rows).push_back(i);

  auto apply_a = [&](const CMatrix& x, const RVector& s) {
    RVector out(m);
    for (Index i = 0; i < m; ++i) {
      const Row& r = rows[static_cast<std::size_t>(i)];
      out(i) = apply_row(r, x) + (ns ? r.scalars.dot(s) : 0.0);
    }
    return out;
  };
  auto adjoint_matrix = [&](const RVector& y) {
    CMatrix out = CMatrix::Zero(n, n);
    for (Index i = 0; i < m; ++i) add_row_adjoint(rows[static_cast<std::size_t>(i)], y(i), out);
    return out;
  };
  auto adjoint_scalars = [&](const RVector& y) {
    RVector out = RVector::Zero(ns);
    for (Index i = 0; i < m; ++i) out += y(i) * rows[static_cast<std::size_t>(i)].scalars;
    return out;
  };

  // Initial point in the spirit of SDPT3: large multiples of the identity.
  const double dn = static_cast<double>(n);
  double zeta = std::max(10.0, std::sqrt(dn));
  for (Index i = 0; i < m; ++i) zeta = std::max(zeta, dn * (1.0 + std::abs(b(i))) / 2.0);
  const double eta = std::max({10.0, std::sqrt(dn), 1.0 + c_norm});
  CMatrix x = zeta * CMatrix::Identity(n, n);
  CMatrix z = eta * CMatrix::Identity(n, n);
  RVector s = RVector::Constant(ns, zeta);
  RVector zs = RVector::Constant(ns, eta);
  RVector y = RVector::Zero(m);
  const double dof = dn + static_cast<double>(ns);

  SdpSolution sol;
  auto finish = [&](SolveStatus status, int iter, double gap, double res, std::string msg) {
    sol.status = status;
    sol.iterations = iter;
    sol.matrix = hermitian_part(x);
    sol.scalars = s.head(n_user);
    // Signed so that objective_value equals dual . bound at optimality.
    sol.dual = RVector(m);
    for (Index i = 0; i < m; ++i) sol.dual(i) = sense * obj_scale * y(i) / row_scale(i);
    const double pobj = obj_scale * (trace_inner(cmat, x) + cs.dot(s));
    sol.objective_value = sense * pobj;
    sol.duality_gap = gap;
    sol.residuals = res;
    sol.min_eigenvalue = min_eig(sol.matrix);
    sol.message = std::move(msg);
    return sol;
  };

  const double tol = config.tolerance;
  double gap = 0.0;
  double res = 0.0;
  for (int iter = 0; iter <= config.max_iterations; ++iter) {
    const RVector rp = b - apply_a(x, s);
    const CMatrix rd = cmat - adjoint_matrix(y) - z;
    const RVector rds = cs - adjoint_scalars(y) - zs;
    const double pobj = trace_inner(cmat, x) + cs.dot(s);
    const double dobj = b.dot(y);
    const double mu = (trace_inner(x, z) + s.dot(zs)) / dof;
    gap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj));
    const double pinf = (m ? rp.lpNorm<Eigen::Infinity>() : 0.0) / (1.0 + b_norm);
    const double dinf = std::sqrt(rd.squaredNorm() + rds.squaredNorm()) / (1.0 + c_norm);
    res = std::max(pinf, dinf);
    if (gap <= tol && pinf <= tol && dinf <= tol)
      return finish(SolveStatus::Optimal, iter, gap, res, "converged");

    // Ray certificates.
    if (dobj > 0.0) {
      const double ray = std::sqrt((cmat - rd).squaredNorm() + (cs - rds).squaredNorm()) / dobj;
      if (ray < tol) return finish(SolveStatus::Infeasible, iter, gap, res, "primal infeasible");
    }
    if (pobj < 0.0) {
      const double ray = (m ? (b - rp).lpNorm<Eigen::Infinity>() : 0.0) / -pobj;
      if (ray < tol) return finish(SolveStatus::Unbounded, iter, gap, res, "dual infeasible");
    }
    if (iter == config.max_iterations) break;

    Eigen::LLT<CMatrix> z_chol(z);
    Eigen::LLT<CMatrix> x_chol(x);
    if (z_chol.info() != Eigen::Success || x_chol.info() != Eigen::Success)
      return finish(SolveStatus::MaxIterations, iter, gap, res, "iterate lost definiteness");
    const CMatrix z_inv = hermitian_part(z_chol.solve(CMatrix::Identity(n, n)));
    const RVector sz = s.cwiseQuotient(zs);

    // Schur complement M_ij = Re Tr(A_i X A_j Z^-1) + a_i' diag(s/z) a_j.
    RMatrix schur = RMatrix::Zero(m, m);
    for (Index j : dense_rows) {
      const CMatrix w = x * rows[static_cast<std::size_t>(j)].matrix * z_inv;
      for (Index i = 0; i < m; ++i) {
        const Row& ri = rows[static_cast<std::size_t>(i)];
        double v = 0.0;
        if (ri.dense) {
          v = trace_inner(ri.matrix, w);
        } else {
          for (const Entry& e : ri.entries) v += (e.value * w(e.col, e.row)).real();
        }
        schur(i, j) = v;
        schur(j, i) = v;
      }
    }
    for (std::size_t a = 0; a < sparse_rows.size(); ++a) {
      const Row& ri = rows[static_cast<std::size_t>(sparse_rows[a])];
      for (std::size_t bb = a; bb < sparse_rows.size(); ++bb) {
        const Row& rj = rows[static_cast<std::size_t>(sparse_rows[bb])];
        Complex acc = 0.0;
        for (const Entry& ei : ri.entries)
          for (const Entry& ej : rj.entries)
            acc += ei.value * x(ei.col, ej.row) * ej.value * z_inv(ej.col, ei.row);
        schur(sparse_rows[a], sparse_rows[bb]) = acc.real();
        schur(sparse_rows[bb], sparse_rows[a]) = acc.real();
      }
    }
    if (ns) {
      RMatrix a_s(m, ns);
      for (Index i = 0; i < m; ++i) a_s.row(i) = rows[static_cast<std::size_t>(i)].scalars.transpose();
      schur += a_s * sz.asDiagonal() * a_s.transpose();
    }
    Eigen::LLT<RMatrix> schur_chol(schur);
    if (schur_chol.info() != Eigen::Success) {
      const double reg = 1e-14 * std::max(1.0, schur.diagonal().maxCoeff());
      schur.diagonal().array() += reg;
      schur_chol.compute(schur);
      if (schur_chol.info() != Eigen::Success)
        return finish(SolveStatus::MaxIterations, iter, gap, res, "Schur complement is singular");
    }

    const CMatrix h = hermitian_part(x * rd * z_inv);
    const RVector hs = sz.cwiseProduct(rds);
    struct Direction {
      CMatrix dx, dz;
      RVector ds, dzs, dy;
    };
    auto direction = [&](double target, const CMatrix* corr_x, const RVector* corr_s) {
      CMatrix gx = target * z_inv - x;
      if (corr_x) gx -= *corr_x;
      RVector gs = (target * zs.cwiseInverse() - s);
      if (corr_s) gs -= *corr_s;
      const RVector rhs = rp - apply_a(gx - h, gs - hs);
      Direction d;
      d.dy = schur_chol.solve(rhs);
      d.dz = rd - adjoint_matrix(d.dy);
      d.dzs = rds - adjoint_scalars(d.dy);
      d.dx = hermitian_part(gx - hermitian_part(x * d.dz * z_inv));
      d.ds = gs - sz.cwiseProduct(d.dzs);
      return d;
    };
    auto steps = [&](const Direction& d) {
      double tp = std::min(max_step_psd(x_chol, d.dx), max_step_nonneg(s, d.ds));
      double td = std::min(max_step_psd(z_chol, d.dz), max_step_nonneg(zs, d.dzs));
      return std::pair{std::min(1.0, config.step_fraction * tp), std::min(1.0, config.step_fraction * td)};
    };

    const Direction pred = direction(0.0, nullptr, nullptr);
    const auto [tp_a, td_a] = steps(pred);
    const double mu_aff = (trace_inner(x + tp_a * pred.dx, z + td_a * pred.dz) +
                           (s + tp_a * pred.ds).dot(zs + td_a * pred.dzs)) / dof;
    const double sigma = std::clamp(std::pow(std::max(mu_aff, 0.0) / mu, 3.0), 0.0, 1.0);
    const CMatrix corr_x = hermitian_part(pred.dx * pred.dz * z_inv);
    const RVector corr_s = pred.ds.cwiseProduct(pred.dzs).cwiseQuotient(zs);
    const Direction d = direction(sigma * mu, &corr_x, &corr_s);
    const auto [tp, td] = steps(d);
    if (!std::isfinite(tp) || !std::isfinite(td) || (tp < 1e-12 && td < 1e-12))
      return finish(SolveStatus::MaxIterations, iter, gap, res, "step length collapsed");

    x = hermitian_part(x + tp * d.dx);
    s += tp * d.ds;
    y += td * d.dy;
    z = hermitian_part(z + td * d.dz);
    zs += td * d.dzs;
  }
  std::ostringstream msg;
  msg << "iteration limit reached (gap " << gap << ", residual " << res << ")";
  return finish(SolveStatus::MaxIterations, config.max_iterations, gap, res, msg.str());
}

}  // namespace irs_si::sdp
