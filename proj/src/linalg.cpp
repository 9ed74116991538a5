#include "woldkit/linalg.hpp"

#include <cmath>

#include <Eigen/SVD>

namespace woldkit {

double operator_norm(const CMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  Eigen::BDCSVD<CMatrix> svd(a);
  return svd.singularValues()(0);
}

RankDecision decide_rank(const Eigen::VectorXd& singular_values, double rel_tol, double band) {
  RankDecision d;
  if (singular_values.size() == 0) return d;
  d.smax = singular_values(0);
  if (d.smax == 0.0) return d;
  const double cut = rel_tol * d.smax;
  for (Index i = 0; i < singular_values.size(); ++i) {
    const double s = singular_values(i);
    if (s >= cut) ++d.rank;
    if (s >= cut / band && s <= cut * band) d.ambiguous = true;
  }
  return d;
}

Subspace::Subspace(Index ambient, CMatrix frame) : ambient_(ambient), frame_(std::move(frame)) {
  if (frame_.rows() != ambient_) throw Error("subspace frame has wrong ambient dimension");
}

Subspace Subspace::from_generators(const CMatrix& generators, double rank_tol) {
  if (!generators.allFinite()) throw Error("subspace generators contain non-finite entries");
  const Index d = generators.rows();
  if (generators.cols() == 0) return zero(d);
  Eigen::BDCSVD<CMatrix> svd(generators, Eigen::ComputeThinU);
  const auto rank = decide_rank(svd.singularValues(), rank_tol).rank;
  return Subspace(d, svd.matrixU().leftCols(rank));
}

Subspace Subspace::full(Index d) { return Subspace(d, CMatrix::Identity(d, d)); }

Subspace Subspace::zero(Index d) { return Subspace(d, CMatrix(d, 0)); }

CMatrix Subspace::projector() const {
  if (dim() == 0) return CMatrix::Zero(ambient_, ambient_);
  return frame_ * frame_.adjoint();
}

Subspace Subspace::complement() const {
  if (dim() == 0) return full(ambient_);
  if (dim() == ambient_) return zero(ambient_);
  // Full SVD of the frame: trailing left singular vectors span the complement.
  Eigen::JacobiSVD<CMatrix> svd(frame_, Eigen::ComputeFullU);
  return Subspace(ambient_, svd.matrixU().rightCols(ambient_ - dim()));
}

bool Subspace::contains(const CVector& x, double tol) const {
  const double nx = x.norm();
  if (nx == 0.0) return true;
  CVector residual = x - frame_ * (frame_.adjoint() * x);
  return residual.norm() <= tol * nx;
}

Subspace sum(const Subspace& a, const Subspace& b, double rank_tol) {
  if (a.ambient() != b.ambient()) throw Error("subspace sum: ambient dimensions differ");
  CMatrix gens(a.ambient(), a.dim() + b.dim());
  gens << a.frame(), b.frame();
  return Subspace::from_generators(gens, rank_tol);
}

Subspace intersect(const Subspace& a, const Subspace& b, double rank_tol) {
  if (a.ambient() != b.ambient()) throw Error("subspace intersect: ambient dimensions differ");
  const Index d = a.ambient();
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(d);
  // Kernel of the stacked complementary projections.
  CMatrix stacked(2 * d, d);
  stacked.topRows(d) = CMatrix::Identity(d, d) - a.projector();
  stacked.bottomRows(d) = CMatrix::Identity(d, d) - b.projector();
  Eigen::BDCSVD<CMatrix> svd(stacked, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  if (smax == 0.0) return Subspace::full(d); // both projections are the identity
  Index kernel_dim = 0;
  for (Index i = sv.size(); i-- > 0;) {
    if (sv(i) <= rank_tol * smax)
      ++kernel_dim;
    else
      break;
  }
  if (kernel_dim == 0) return Subspace::zero(d);
  return Subspace(d, svd.matrixV().rightCols(kernel_dim));
}

double max_principal_angle(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return std::acos(0.0);
  if (a.dim() == 0) return 0.0;
  Eigen::BDCSVD<CMatrix> svd(CMatrix(a.frame().adjoint() * b.frame()));
  const auto& cosines = svd.singularValues();
  double c = cosines(cosines.size() - 1);
  c = std::min(1.0, std::max(-1.0, c));
  return std::acos(c);
}

CMatrix restricted_inverse(const CMatrix& a, const Subspace& s, double tol) {
  if (a.rows() != a.cols() || a.rows() != s.ambient())
    throw Error("restricted_inverse: dimension mismatch");
  const Index d = a.rows();
  if (s.dim() == 0) return CMatrix::Zero(d, d);
  const CMatrix& f = s.frame();
  const CMatrix af = a * f;
  const CMatrix leakage = af - f * (f.adjoint() * af);
  const double scale = std::max(1.0, operator_norm(a));
  if (operator_norm(leakage) > tol * scale)
    throw NotInvariant("restricted_inverse: operator does not leave the subspace invariant");
  const CMatrix compressed = f.adjoint() * af;
  Eigen::JacobiSVD<CMatrix> svd(compressed, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  if (smax == 0.0 || sv(sv.size() - 1) < tol * std::max(1.0, smax))
    throw SingularOnSubspace("restricted_inverse: compression is singular on the subspace");
  CMatrix inv_compressed =
      svd.matrixV() * sv.cwiseInverse().asDiagonal().toDenseMatrix().cast<Complex>() *
      svd.matrixU().adjoint();
  return f * inv_compressed * f.adjoint();
}

CMatrix random_gaussian(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i)
      m(i, j) = Complex(normal(rng), normal(rng));
  return m;
}

CMatrix random_unitary(Index d, std::mt19937_64& rng) {
  Eigen::HouseholderQR<CMatrix> qr(random_gaussian(d, d, rng));
  CMatrix q = qr.householderQ();
  CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phases so the factorization (and thus the sample) is unique.
  for (Index i = 0; i < d; ++i) {
    Complex rii = r(i, i);
    Complex phase = rii == Complex(0, 0) ? Complex(1, 0) : rii / std::abs(rii);
    q.col(i) *= phase;
  }
  return q;
}

CVector random_unit_vector(Index d, std::mt19937_64& rng) {
  CVector v = random_gaussian(d, 1, rng);
  double n = v.norm();
  while (n == 0.0) {
    v = random_gaussian(d, 1, rng);
    n = v.norm();
  }
  return v / n;
}

} // namespace woldkit
