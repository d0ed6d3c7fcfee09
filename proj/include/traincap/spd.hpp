// SPDX-License-Identifier: Apache-2.0
//
// Dense real symmetric positive-(semi)definite matrix algebra. Everything
// here is a pure function on immutable values and safe to share across
// threads. Eigen supplies the eigendecomposition and triangular solves; the
// Cholesky factorization is written out so failures report the offending
// pivot against a caller-controlled tolerance.
#pragma once

#include <cmath>
#include <limits>
#include <utility>

#include "traincap/errors.hpp"
#include "traincap/types.hpp"

namespace traincap {

/// Square matrix that is symmetric by construction.
///
/// Construction accepts any square matrix whose asymmetry is small relative
/// to its largest entry, then stores the exactly symmetric average
/// (A + A^T)/2. Larger asymmetry is rejected as a user mistake.
template <typename Scalar>
class SymMatrix {
 public:
  static constexpr double kMaxRelativeAsymmetry = 1e-9;

  explicit SymMatrix(const Mat<Scalar>& raw) {
    if (raw.rows() == 0 || raw.cols() == 0) {
      throw InvalidMatrixError("matrix must have at least one row and column");
    }
    if (raw.rows() != raw.cols()) {
      throw NotSquareError("matrix is " + std::to_string(raw.rows()) + "x" +
                           std::to_string(raw.cols()) + ", expected square");
    }
    const Scalar scale = raw.cwiseAbs().maxCoeff();
    const Scalar asym = (raw - raw.transpose()).cwiseAbs().maxCoeff();
    if (asym > Scalar(kMaxRelativeAsymmetry) * scale) {
      throw AsymmetryError("matrix asymmetry " + detail::format_value(double(asym)) +
                           " exceeds " + detail::format_value(kMaxRelativeAsymmetry) +
                           " relative to max entry " +
                           detail::format_value(double(scale)));
    }
    entries_ = ((raw + raw.transpose()) / Scalar(2)).eval();
  }

  static SymMatrix identity(Index m) { return SymMatrix(Mat<Scalar>::Identity(m, m)); }
  static SymMatrix zero(Index m) { return SymMatrix(Mat<Scalar>::Zero(m, m)); }

  Index dim() const { return entries_.rows(); }
  const Mat<Scalar>& matrix() const { return entries_; }
  Scalar operator()(Index i, Index j) const { return entries_(i, j); }

 private:
  Mat<Scalar> entries_;
};

using SymMatrixX = SymMatrix<double>;

/// Scale-relative positive-definiteness threshold: 1e-10 times the largest
/// diagonal entry. Avoids rejecting well-scaled inputs whose pivots are small
/// only because the matrix is small.
template <typename Scalar>
Scalar default_pd_tolerance(const SymMatrix<Scalar>& a) {
  return Scalar(1e-10) * a.matrix().diagonal().maxCoeff();
}

/// Lower-triangular Cholesky factor L with L*L^T = a.
///
/// A pivot at or below `pivot_tolerance` aborts the factorization; the
/// exception carries the failing pivot index and value. Passing a negative
/// tolerance selects default_pd_tolerance(a).
template <typename Scalar>
Mat<Scalar> cholesky(const SymMatrix<Scalar>& a,
                     Scalar pivot_tolerance = Scalar(-1)) {
  using std::sqrt;
  if (pivot_tolerance < Scalar(0)) pivot_tolerance = default_pd_tolerance(a);
  const Index m = a.dim();
  const Mat<Scalar>& src = a.matrix();
  Mat<Scalar> factor = Mat<Scalar>::Zero(m, m);
  for (Index j = 0; j < m; ++j) {
    Scalar pivot = src(j, j) - factor.row(j).head(j).squaredNorm();
    if (pivot <= pivot_tolerance) {
      throw NotPositiveDefiniteError(j, double(pivot));
    }
    factor(j, j) = sqrt(pivot);
    for (Index i = j + 1; i < m; ++i) {
      factor(i, j) = (src(i, j) - factor.row(i).head(j).dot(factor.row(j).head(j))) /
                     factor(j, j);
    }
  }
  return factor;
}

/// Natural-log determinant of a positive definite matrix, 2*sum(log L_ii).
/// Callers working in bits divide by ln 2.
template <typename Scalar>
Scalar log_det(const SymMatrix<Scalar>& a) {
  using std::log;
  const Mat<Scalar> factor = cholesky(a);
  Scalar acc = Scalar(0);
  for (Index j = 0; j < a.dim(); ++j) acc += log(factor(j, j));
  return Scalar(2) * acc;
}

/// Solves a*x = b for SPD a via the Cholesky factor.
template <typename Scalar>
Mat<Scalar> solve_spd(const SymMatrix<Scalar>& a, const Mat<Scalar>& b) {
  if (b.rows() != a.dim()) {
    throw DimensionMismatchError("solve_spd: right-hand side has " +
                                 std::to_string(b.rows()) + " rows, matrix is " +
                                 std::to_string(a.dim()) + "x" +
                                 std::to_string(a.dim()));
  }
  const Mat<Scalar> factor = cholesky(a);
  Mat<Scalar> x = factor.template triangularView<Eigen::Lower>().solve(b);
  factor.transpose().template triangularView<Eigen::Upper>().solveInPlace(x);
  return x;
}

template <typename Scalar>
struct SymEigen {
  Vec<Scalar> eigenvalues;   // descending
  Mat<Scalar> eigenvectors;  // orthonormal columns, matching order
};

/// Full symmetric eigendecomposition, eigenvalues in descending order.
template <typename Scalar>
SymEigen<Scalar> sym_eigen(const SymMatrix<Scalar>& a) {
  Eigen::SelfAdjointEigenSolver<Mat<Scalar>> solver(a.matrix());
  if (solver.info() != Eigen::Success) {
    // Eigen's internal sweep budget is 30 rotations per dimension.
    throw ConvergenceError(30 * static_cast<long>(a.dim()));
  }
  SymEigen<Scalar> result;
  result.eigenvalues = solver.eigenvalues().reverse().eval();
  result.eigenvectors = solver.eigenvectors().rowwise().reverse().eval();
  return result;
}

template <typename Scalar>
struct SpdCheckReport {
  bool is_psd = false;
  bool is_pd = false;
  Scalar min_eigenvalue = std::numeric_limits<Scalar>::quiet_NaN();
};

using SpdCheckReportX = SpdCheckReport<double>;

/// Classifies a symmetric matrix by its smallest eigenvalue. Reports rather
/// than throws: a failed eigendecomposition yields a NaN all-false report.
template <typename Scalar>
SpdCheckReport<Scalar> check_spd(const SymMatrix<Scalar>& a,
                                 Scalar pd_tolerance) {
  SpdCheckReport<Scalar> report;
  try {
    report.min_eigenvalue = sym_eigen(a).eigenvalues.minCoeff();
  } catch (const ConvergenceError&) {
    return report;
  }
  report.is_psd = report.min_eigenvalue >= -pd_tolerance;
  report.is_pd = report.min_eigenvalue > pd_tolerance;
  return report;
}

template <typename Scalar>
SpdCheckReport<Scalar> check_spd(const SymMatrix<Scalar>& a) {
  return check_spd(a, default_pd_tolerance(a));
}

}  // namespace traincap
