#pragma once

#include <functional>

#include "irs_si/linalg.hpp"
#include "irs_si/model.hpp"
#include "irs_si/rng.hpp"

namespace irs_si::sdp {

/// Eigenvalues below this fraction of the trace count as zero.
inline constexpr double kRankTolerance = 1e-7;

using ScoreFn = std::function<double(const PhaseVector&)>;

struct RoundingResult {
  PhaseVector v;
  double score = 0.0;
  bool rank_one = false;
  int draws = 0;
};

/// Phase vector read off a lifted vector z = [v; 1] up to common phase.
PhaseVector phases_from_lifted(const CVector& z);

/// Gaussian randomization: draws z~ = U S^(1/2) r with r ~ CN(0, I), maps
/// each draw to v(i) = e^{j arg(z~(i)/z~(N+1))} and keeps the best score.
/// A rank-one input takes the principal eigenvector directly.
RoundingResult grp_round(const CMatrix& z_matrix, int candidates, const ScoreFn& score, Rng& rng,
                         double rank_tolerance = kRankTolerance);

/// Numerical rank at the given relative tolerance.
int numerical_rank(const CMatrix& z_matrix, double rank_tolerance = kRankTolerance);

}  // namespace irs_si::sdp
