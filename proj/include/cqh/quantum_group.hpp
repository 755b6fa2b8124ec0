#ifndef CQH_QUANTUM_GROUP_HPP_
#define CQH_QUANTUM_GROUP_HPP_

#include <optional>
#include <string>

#include "cqh/algebra.hpp"

namespace cqh {

// Finite-dimensional Hopf *-algebra O(G) with certified Haar state.
// Coordinates: comult[i,j,k] is the coefficient of e_j (x) e_k in Delta(e_i).
struct QuantumGroupSpec {
  AlgebraSpec algebra;
  ComplexTensor comult;  // shape {n, n, n}
  Vec counit;
  Mat antipode;
};

class QuantumGroup {
 public:
  const AlgebraSpec& algebra() const { return alg_; }
  Index dim() const { return alg_.dim; }

  const Vec& haar() const { return haar_; }
  const Vec& counit() const { return counit_; }
  const Mat& antipode() const { return antipode_; }
  // KMS automorphism of the Haar state (identity in the Kac case).
  const Mat& modular() const { return sigma_; }
  // Unitary antipode; equals the antipode for Kac inputs.
  const Mat& unitary_antipode() const { return rmat_; }
  // Woronowicz character delta_G = counit . sigma_{i} as a covector.
  const Vec& woronowicz_character() const { return wor_char_; }

  // Delta(x) as a coordinate vector on A (x) A, component (j*n + k).
  Vec comultiply(const Vec& x) const { return cmat_ * x; }
  const Mat& comult_matrix() const { return cmat_; }
  const ComplexTensor& comult_tensor() const { return comult_; }

  Vec mul(const Vec& x, const Vec& y) const { return alg_.mul(x, y); }
  Vec star(const Vec& x) const { return alg_.star_of(x); }
  const Vec& unit() const { return alg_.unit; }

  // phi(xy) = x^T haar_pairing y.
  const Mat& haar_pairing() const { return bmat_; }

  // Convolution on the dual: (w * w')(e_i) = sum_{jk} C[i,j,k] w_j w'_k.
  Vec convolve(const Vec& omega, const Vec& omega_prime) const;

  const CheckList& audit() const { return audit_; }

  // Builds the structure and certifies every Hopf-*-axiom, the Haar state,
  // the modular map and the Kac certificate.  In strict mode the first
  // violated identity throws; in audit mode failures are collected and the
  // build continues best-effort (used by the fault-injection harness).
  static QuantumGroup build(const QuantumGroupSpec& spec, const Tolerance& tol,
                            bool strict = true);

 private:
  AlgebraSpec alg_;
  ComplexTensor comult_;
  Mat cmat_;  // (n^2 x n), row index j*n+k
  Vec counit_;
  Mat antipode_;
  Vec haar_;
  Mat bmat_;
  Mat sigma_;
  Mat rmat_;
  Vec wor_char_;
  CheckList audit_;
};

// The Haar state alone: unique normalized bi-invariant functional, computed
// as the joint nullspace of the two invariance systems.
Vec compute_haar(const AlgebraSpec& alg, const ComplexTensor& comult,
                 const Tolerance& tol);

// sigma with phi(ab) = phi(b sigma(a)); certified Gram-invertible.
Mat compute_modular_automorphism(const QuantumGroup& qg, const Tolerance& tol);

// R_G for Kac inputs (certifies S^2 = id first; throws NotKac otherwise).
Mat unitary_antipode(const QuantumGroup& qg, const Tolerance& tol);

}  // namespace cqh

#endif  // CQH_QUANTUM_GROUP_HPP_
