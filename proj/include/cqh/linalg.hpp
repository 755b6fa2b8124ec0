#ifndef CQH_LINALG_HPP_
#define CQH_LINALG_HPP_

#include <vector>

#include "cqh/types.hpp"

namespace cqh {

// Orthonormal basis of ker(m).  Rank cutoff is relative: singular values
// <= eps * max(sigma_max, scale) count as zero.  `scale` anchors the cutoff
// when the whole system is numerical dust (e.g. an identically-zero
// intertwining system evaluated in floating point).
Mat nullspace(const Mat& m, const Tolerance& tol, double scale = 0.0);

// Numerical rank with the same cutoff convention as nullspace().
Index numerical_rank(const Mat& m, const Tolerance& tol, double scale = 0.0);

// m^t for Hermitian positive m, via eigendecomposition.  Throws NotPositive
// if an eigenvalue falls below eps * max-eigenvalue, AxiomViolation if the
// asymmetry of m exceeds the tolerance.
Mat positive_power(const Mat& m, double t, const Tolerance& tol);

// As above with a complex exponent (used for sigma_z / tau_z families).
Mat positive_power(const Mat& m, Scalar t, const Tolerance& tol);

// Hermitian part of m; errors if m is farther than eps from Hermitian.
Mat hermitize_checked(const Mat& m, const Tolerance& tol);

double hermiticity_defect(const Mat& m);

// Orthonormalize the columns of basis against the Hermitian positive inner
// product x^H gram y; returns coefficients of the new columns in the old ones.
// (basis * result has gram-orthonormal columns.)
Mat gram_orthonormalize(const Mat& gram, const Tolerance& tol);

Mat kron(const Mat& a, const Mat& b);
Vec kron(const Vec& a, const Vec& b);

// Largest singular value (operator 2-norm).
double operator_norm(const Mat& m);

// Least squares coefficient solve basis * c ~= rhs (thin QR), with the
// reconstruction residual reported through *residual when non-null.
Vec least_squares(const Mat& basis, const Vec& rhs, double* residual = nullptr);

struct EigenPairs {
  RealVec values;  // ascending
  Mat vectors;     // columns
};

EigenPairs hermitian_eigs(const Mat& m, const Tolerance& tol);

// Group ascending eigenvalues into clusters separated by gaps larger than
// `gap`; returns [begin, end) column ranges.
std::vector<std::pair<Index, Index>> cluster_eigenvalues(const RealVec& values,
                                                         double gap);

}  // namespace cqh

#endif  // CQH_LINALG_HPP_
