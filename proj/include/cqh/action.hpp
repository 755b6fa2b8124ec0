#ifndef CQH_ACTION_HPP_
#define CQH_ACTION_HPP_

#include <vector>

#include "cqh/corep.hpp"

namespace cqh {

// Spectral subspace G_pi of an ergodic action: solutions mu in H_pi (x) A of
// the coordinate equations alpha(x_j) = sum_k x_k (x) u_{kj}^*.  Basis
// vectors are stored as (d_pi x p) matrices, row j = coordinates of x_j;
// they are orthonormal for the canonical scalar product and diagonalize
// delta_X with the recorded eigenvalues.
struct SpectralBlock {
  Index pi = 0;
  Index m = 0;
  std::vector<Mat> basis;
  RealVec delta_eigs;
};

class ErgodicAction {
 public:
  // Certifies the coaction axioms, ergodicity, the invariant state, the
  // spectral decomposition and the modular data.  `strict` as in
  // QuantumGroup::build.  The quantum group and irrep table must outlive
  // the returned object.
  static ErgodicAction analyze(const QuantumGroup& qg, const IrrepTable& table,
                               const AlgebraSpec& algebra,
                               const ComplexTensor& alpha, const Tolerance& tol,
                               bool strict = true);

  const QuantumGroup& qg() const { return *qg_; }
  const IrrepTable& table() const { return *table_; }
  const AlgebraSpec& algebra() const { return alg_; }
  const AlgebraSpec& conjugate_algebra_spec() const { return abar_; }
  Index dim() const { return alg_.dim; }

  const Vec& invariant_state() const { return phix_; }
  Vec conjugate_state() const { return phix_.conjugate(); }
  const Mat& modular() const { return sigmax_; }
  const Mat& state_pairing() const { return bx_; }

  const std::vector<SpectralBlock>& blocks() const { return blocks_; }
  const SpectralBlock& block(Index pi) const {
    return blocks_[static_cast<size_t>(pi)];
  }

  // alpha(x) as a (p x n) coefficient matrix on A (x) O(G).
  Mat apply_alpha(const Vec& x) const;
  // bar-alpha(xbar) as an (n x p) coefficient matrix on O(G) (x) Abar.
  Mat apply_alpha_bar(const Vec& xbar) const;

  // X_pi(mu, xi) = sum_j xi_j x_j^*; antilinear in mu.
  Vec x_coeff(const Mat& mu, const Vec& xi) const;
  Vec x_coeff(const SpectralBlock& b, Index t, const Vec& xi) const;
  // Y_pi(xi, f_t) in Abar coordinates.
  Vec y_coeff(const SpectralBlock& b, const Vec& xi, Index t) const;

  // Coordinates of mu against the block basis (canonical inner product).
  Vec expand_in_block(const SpectralBlock& b, const Mat& mu) const;

  // Canonical A-valued inner product collapsed to its scalar; the residual
  // against scalarness is reported through *defect when non-null.
  Scalar scalar_inner(const Mat& mu, const Mat& nu, double* defect = nullptr) const;

  // ||(id (x) alpha)(mu) - U*_{13} mu_{12}|| relative, for any corep.
  double membership_residual(const Corep& c, const Mat& mu) const;

  const CheckList& audit() const { return audit_; }

 private:
  const QuantumGroup* qg_ = nullptr;
  const IrrepTable* table_ = nullptr;
  AlgebraSpec alg_;
  AlgebraSpec abar_;
  std::vector<Mat> slices_;       // alpha(e_i) as p x n, per i
  std::vector<Mat> bar_slices_;   // bar-alpha(ebar_i) as n x p, per i
  Vec phix_;
  Mat bx_;
  Mat sigmax_;
  std::vector<SpectralBlock> blocks_;
  CheckList audit_;
};

// phi_X alone: scalars of (id (x) phi_G) alpha(e_i); NotScalar on failure.
Vec invariant_state(const QuantumGroup& qg, const AlgebraSpec& algebra,
                    const ComplexTensor& alpha, const Tolerance& tol);

struct ActionOrthogonalityReport {
  double eq19 = 0.0, eq20 = 0.0, eq21 = 0.0, eq22 = 0.0;
  double max_residual() const {
    return std::max(std::max(eq19, eq20), std::max(eq21, eq22));
  }
};

ActionOrthogonalityReport verify_action_orthogonality(const ErgodicAction& act);

// Parseval / GNS completeness of the X- and Y-coefficient frames.
struct GnsReport {
  double x_gram_residual = 0.0;
  double y_gram_residual = 0.0;
  Index frame_count = 0;
};

GnsReport verify_gns_completeness(const ErgodicAction& act);

// Direct sums / tensor embeddings / conjugation of spectral vectors.
struct SpectralFunctorReport {
  double tensor_membership = 0.0;
  double tensor_isometry = 0.0;
  double conj_membership = 0.0;
  double conj_unitary = 0.0;
  double conj_star_identity = 0.0;
  double x_coaction = 0.0;
  double y_coaction = 0.0;
  double max_residual() const {
    double m = tensor_membership;
    for (double v : {tensor_isometry, conj_membership, conj_unitary,
                     conj_star_identity, x_coaction, y_coaction})
      m = std::max(m, v);
    return m;
  }
};

SpectralFunctorReport verify_spectral_functoriality(const ErgodicAction& act);

}  // namespace cqh

#endif  // CQH_ACTION_HPP_
