#include "irs_si/rounding.hpp"

#include <cmath>
#include <limits>

#include "irs_si/errors.hpp"

namespace irs_si::sdp {

PhaseVector phases_from_lifted(const CVector& z) {
  const Eigen::Index n = z.size() - 1;
  if (n < 1) throw DomainError("lifted vector too short");
  const Complex ref = z(n);
  CVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex ratio = ref != Complex(0.0) ? z(i) / ref : z(i);
    v(i) = std::abs(ratio) > 0.0 ? ratio / std::abs(ratio) : Complex(1.0, 0.0);
  }
  return PhaseVector(std::move(v));
}

int numerical_rank(const CMatrix& z_matrix, double rank_tolerance) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(z_matrix), Eigen::EigenvaluesOnly);
  const RVector& ev = es.eigenvalues();
  const double trace = std::max(ev.sum(), 0.0);
  int rank = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev(i) > rank_tolerance * trace) ++rank;
  return rank;
}

RoundingResult grp_round(const CMatrix& z_matrix, int candidates, const ScoreFn& score, Rng& rng,
                         double rank_tolerance) {
  if (z_matrix.rows() < 2 || z_matrix.rows() != z_matrix.cols())
    throw DomainError("lifted matrix must be square with side at least 2");
  if (candidates < 1) throw DomainError("need at least one randomization candidate");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(z_matrix));
  const RVector ev = es.eigenvalues().cwiseMax(0.0);
  const CMatrix& u = es.eigenvectors();
  const Eigen::Index dim = ev.size();
  const double trace = ev.sum();

  RoundingResult best;
  best.score = -std::numeric_limits<double>::infinity();
  if (dim >= 2 && ev(dim - 2) < rank_tolerance * trace) {
    best.v = phases_from_lifted(u.col(dim - 1));
    best.score = score(best.v);
    best.rank_one = true;
    best.draws = 1;
    return best;
  }

  const CMatrix factor = u * ev.cwiseSqrt().asDiagonal();
  for (int c = 0; c < candidates; ++c) {
    CVector zt = factor * complex_normal_vector(rng, dim);
    while (zt(dim - 1) == Complex(0.0)) zt = factor * complex_normal_vector(rng, dim);
    PhaseVector v = phases_from_lifted(zt);
    const double val = score(v);
    ++best.draws;
    if (val > best.score || best.v.size() == 0) {
      best.score = val;
      best.v = std::move(v);
    }
  }
  return best;
}

}  // namespace irs_si::sdp
