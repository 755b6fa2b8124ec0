#include "cqh/linalg.hpp"

#include <Eigen/SVD>

#include <cmath>

namespace cqh {

Mat nullspace(const Mat& m, const Tolerance& tol, double scale) {
  if (m.size() == 0) return Mat::Identity(m.cols(), m.cols());
  Eigen::BDCSVD<Mat> svd(m, Eigen::ComputeThinU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  const double cut = tol.eps * std::max(smax, scale);
  Index rank = 0;
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++rank;
  const Index dim = m.cols() - rank;
  return svd.matrixV().rightCols(dim);
}

Index numerical_rank(const Mat& m, const Tolerance& tol, double scale) {
  if (m.size() == 0) return 0;
  Eigen::BDCSVD<Mat> svd(m);
  const auto& sv = svd.singularValues();
  const double cut =
      tol.eps * std::max(sv.size() > 0 ? sv(0) : 0.0, scale);
  Index rank = 0;
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++rank;
  return rank;
}

double hermiticity_defect(const Mat& m) {
  return rel_residual((m - m.adjoint()).norm(), m.norm());
}

Mat hermitize_checked(const Mat& m, const Tolerance& tol) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::Schema, "hermitize: matrix not square");
  const double defect = hermiticity_defect(m);
  if (defect > tol.eps)
    throw Error(ErrorCode::AxiomViolation,
                "matrix is not Hermitian within tolerance", "hermitian",
                defect);
  return 0.5 * (m + m.adjoint());
}

EigenPairs hermitian_eigs(const Mat& m, const Tolerance& tol) {
  const Mat h = hermitize_checked(m, tol);
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  if (es.info() != Eigen::Success)
    throw Error(ErrorCode::Internal, "eigendecomposition failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

namespace {

Mat power_impl(const Mat& m, Scalar t, const Tolerance& tol) {
  EigenPairs ep = hermitian_eigs(m, tol);
  const Index n = m.rows();
  const double lmax = ep.values.size() ? ep.values(n - 1) : 0.0;
  const double lmin = ep.values.size() ? ep.values(0) : 0.0;
  if (lmax <= 0.0 || lmin <= tol.eps * lmax)
    throw Error(ErrorCode::NotPositive,
                "positive_power: matrix not positive definite", "positivity",
                lmin);
  Vec powered(n);
  for (Index i = 0; i < n; ++i)
    powered(i) = std::exp(t * std::log(ep.values(i)));
  return ep.vectors * powered.asDiagonal() * ep.vectors.adjoint();
}

}  // namespace

Mat positive_power(const Mat& m, double t, const Tolerance& tol) {
  return power_impl(m, Scalar(t, 0.0), tol);
}

Mat positive_power(const Mat& m, Scalar t, const Tolerance& tol) {
  return power_impl(m, t, tol);
}

Mat gram_orthonormalize(const Mat& gram, const Tolerance& tol) {
  EigenPairs ep = hermitian_eigs(gram, tol);
  const Index n = gram.rows();
  const double lmax = ep.values.size() ? ep.values(n - 1) : 0.0;
  if (lmax <= 0.0 || ep.values(0) <= tol.eps * lmax)
    throw Error(ErrorCode::GramSingular, "gram matrix is singular or indefinite",
                "gram", ep.values.size() ? ep.values(0) : 0.0);
  Vec inv_sqrt(n);
  for (Index i = 0; i < n; ++i) inv_sqrt(i) = 1.0 / std::sqrt(ep.values(i));
  return ep.vectors * inv_sqrt.asDiagonal() * ep.vectors.adjoint();
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vec kron(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

double operator_norm(const Mat& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<Mat> svd(m);
  return svd.singularValues()(0);
}

Vec least_squares(const Mat& basis, const Vec& rhs, double* residual) {
  Eigen::ColPivHouseholderQR<Mat> qr(basis);
  Vec c = qr.solve(rhs);
  if (residual)
    *residual = rel_residual((basis * c - rhs).norm(), rhs.norm());
  return c;
}

std::vector<std::pair<Index, Index>> cluster_eigenvalues(const RealVec& values,
                                                         double gap) {
  std::vector<std::pair<Index, Index>> out;
  const Index n = values.size();
  Index begin = 0;
  for (Index i = 1; i <= n; ++i) {
    if (i == n || values(i) - values(i - 1) > gap) {
      out.emplace_back(begin, i);
      begin = i;
    }
  }
  return out;
}

}  // namespace cqh
