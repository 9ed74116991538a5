#pragma once

#include <random>

#include "woldkit/errors.hpp"
#include "woldkit/types.hpp"

namespace woldkit {

/// Tolerance ladder shared by the numeric modules. Rank decisions are the
/// tightest, operator-identity residuals next, Gram comparisons loosest,
/// since residuals compound through restricted inverses.
struct Tolerances {
  double rank = 1e-10;
  double identity = 1e-9;
  double gram = 1e-8;
  double commute = 1e-10;
};

/// Largest singular value.
double operator_norm(const CMatrix& a);

/// Rank of a singular value profile relative to the largest value. `ambiguous`
/// is set when some singular value falls within a factor `band` of the cut,
/// i.e. the rank decision is not trustworthy.
struct RankDecision {
  Index rank = 0;
  double smax = 0.0;
  bool ambiguous = false;
};
RankDecision decide_rank(const Eigen::VectorXd& singular_values, double rel_tol,
                         double band = 10.0);

/// A linear subspace of C^d stored as an orthonormal column frame.
class Subspace {
public:
  Subspace(Index ambient, CMatrix frame);

  /// Numerical column span of `generators`; rank decided by singular values
  /// >= rank_tol * sigma_max. A zero matrix yields the zero subspace.
  static Subspace from_generators(const CMatrix& generators, double rank_tol = 1e-10);
  static Subspace full(Index d);
  static Subspace zero(Index d);

  Index ambient() const { return ambient_; }
  Index dim() const { return frame_.cols(); }
  const CMatrix& frame() const { return frame_; }

  /// frame * frame^*: the orthogonal projection onto the subspace.
  CMatrix projector() const;

  Subspace complement() const;

  bool contains(const CVector& x, double tol = 1e-9) const;

private:
  Index ambient_;
  CMatrix frame_;
};

Subspace sum(const Subspace& a, const Subspace& b, double rank_tol = 1e-10);
Subspace intersect(const Subspace& a, const Subspace& b, double rank_tol = 1e-10);

/// Largest principal angle between two subspaces of equal dimension, in
/// radians; returns pi/2 when the dimensions differ.
double max_principal_angle(const Subspace& a, const Subspace& b);

/// Inverse of A restricted to the A-invariant subspace S, extended by zero on
/// the orthogonal complement. Throws NotInvariant when ||(1-P_S) A P_S||
/// exceeds tol (relative to max(1, ||A||)) and SingularOnSubspace when the
/// compression of A to S is rank-deficient.
CMatrix restricted_inverse(const CMatrix& a, const Subspace& s, double tol = 1e-9);

CMatrix random_gaussian(Index rows, Index cols, std::mt19937_64& rng);
CMatrix random_unitary(Index d, std::mt19937_64& rng);
CVector random_unit_vector(Index d, std::mt19937_64& rng);

} // namespace woldkit
