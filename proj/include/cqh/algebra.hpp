#ifndef CQH_ALGEBRA_HPP_
#define CQH_ALGEBRA_HPP_

#include <string>
#include <vector>

#include "cqh/tensor.hpp"
#include "cqh/types.hpp"

namespace cqh {

// One evaluated identity.  Residuals are Frobenius norms relative to the
// operand scale, so they are comparable across examples of different size.
struct CheckItem {
  std::string name;
  double residual = 0.0;
  Index operands = 0;
  bool pass = true;
};

class CheckList {
 public:
  void add(std::string name, double residual, Index operands, double eps);
  void add_failure(std::string name, double residual, std::string message);
  void merge(const CheckList& other);

  bool all_pass() const;
  double residual_of(const std::string& name) const;
  const std::vector<CheckItem>& items() const { return items_; }

  // Throws AxiomViolation naming the first failed identity.
  void require(ErrorCode code = ErrorCode::AxiomViolation) const;

 private:
  std::vector<CheckItem> items_;
};

// Finite-dimensional unital *-algebra given by structure constants:
//   e_i . e_j = sum_k mult[i,j,k] e_k,
//   coords(x^*) = star . conj(coords(x)).
struct AlgebraSpec {
  Index dim = 0;
  ComplexTensor mult;  // shape {dim, dim, dim}
  Vec unit;
  Mat star;

  Scalar mult_entry(Index i, Index j, Index k) const {
    return mult.data()((i * dim + j) * dim + k);
  }

  // Product of coordinate vectors.
  Vec mul(const Vec& x, const Vec& y) const;
  Vec star_of(const Vec& x) const;

  // Left-multiplication matrix L_x with coords(x.y) = L_x coords(y).
  Mat left_mult(const Vec& x) const;

  // Matrices M_k with (M_k)_{ij} = mult[i,j,k]; phi(xy) = x^T B y with
  // B = sum_k phi_k M_k.
  Mat pairing_matrix(const Vec& phi) const;

  // Gram matrix G_{ij} = phi(e_i^* e_j).
  Mat gram(const Vec& phi) const;

  CheckList verify_axioms(const Tolerance& tol) const;
};

// phi(x) for a functional stored as a coordinate covector.
inline Scalar apply_functional(const Vec& phi, const Vec& x) {
  return (phi.transpose() * x)(0, 0);
}

// Unital algebra tensor product (Kronecker structure constants).
AlgebraSpec algebra_tensor(const AlgebraSpec& a, const AlgebraSpec& b);

// Product and star on A (x) B where elements are coefficient matrices,
// entry (i, j) = coefficient of a_i (x) b_j.  Works leg by leg so the cost
// stays polynomial in the two dimensions separately.
Mat tensor_mul(const AlgebraSpec& a, const AlgebraSpec& b, const Mat& x,
               const Mat& y);
Mat tensor_star(const AlgebraSpec& a, const AlgebraSpec& b, const Mat& x);

// Conjugate algebra: same index set, conjugated structure constants.  The
// bar map A -> Abar conjugates coordinates.
AlgebraSpec conjugate_algebra(const AlgebraSpec& a);

// KMS automorphism of a faithful functional: phi(xy) = phi(y sigma(x)).
// Works for any invertible pairing; certification happens at the call site.
Mat modular_map(const AlgebraSpec& alg, const Vec& phi, const Tolerance& tol);

// GNS data of a faithful positive functional: the matrix of left
// multiplication by x, expressed on an orthonormalized basis, is
//   T^{-1} L_x T  with  T = gram^{-1/2}.
struct GnsRep {
  Mat to_ortho;    // gram^{1/2}
  Mat from_ortho;  // gram^{-1/2}

  Mat represent(const AlgebraSpec& alg, const Vec& x) const {
    return to_ortho * alg.left_mult(x) * from_ortho;
  }
};

GnsRep gns_rep(const AlgebraSpec& alg, const Vec& phi, const Tolerance& tol);

}  // namespace cqh

#endif  // CQH_ALGEBRA_HPP_
