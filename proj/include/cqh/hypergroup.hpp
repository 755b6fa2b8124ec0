#ifndef CQH_HYPERGROUP_HPP_
#define CQH_HYPERGROUP_HPP_

#include <string>
#include <vector>

#include "cqh/action.hpp"

namespace cqh {

// Basis label Z_pi(f_j, f_k).
struct ZLabel {
  Index block = 0;  // index into act.blocks()
  Index j = 0;
  Index k = 0;
};

// The cotensor hypergroup O(X x_G Xbar) on its Z-basis.  The basis elements
// embed into A (x) Abar; products are computed in the ambient algebra and
// re-expanded, the expansion residual doubling as the closure certificate.
class Hypergroup {
 public:
  static Hypergroup build(const ErgodicAction& act, const Tolerance& tol,
                          bool strict = true);

  const ErgodicAction& action() const { return *act_; }
  Index size() const { return static_cast<Index>(labels_.size()); }
  const std::vector<ZLabel>& labels() const { return labels_; }
  const Mat& embeddings() const { return zmat_; }

  // The hypergroup as a structure-constant algebra on the Z-basis.
  const AlgebraSpec& z_algebra() const { return zalg_; }

  Vec embed(const Vec& zcoords) const { return zmat_ * zcoords; }
  // Ambient element expanded over the Z-basis; residual certifies membership.
  Vec expand(const Vec& ambient, double* residual = nullptr) const;

  Vec mul(const Vec& x, const Vec& y) const { return zalg_.mul(x, y); }
  Vec star(const Vec& x) const { return zalg_.star_of(x); }
  const Vec& unit_coords() const { return zalg_.unit; }

  // Delta(x) as an N x N coefficient matrix over z_c (x) z_d.
  Mat comultiply(const Vec& x) const;
  Scalar counit(const Vec& x) const { return apply_functional(counit_, x); }
  Vec antipode(const Vec& x) const { return smat_ * x; }
  Scalar integral(const Vec& x) const { return apply_functional(phi_, x); }

  const Vec& counit_covector() const { return counit_; }
  const Vec& integral_covector() const { return phi_; }
  const Mat& antipode_matrix() const { return smat_; }
  const Mat& unitary_antipode_matrix() const { return rmat_; }

  // Modular and scaling families sigma_z / tau_z (diagonal in the Z-basis)
  // and the unitary antipode R.
  Mat sigma_matrix(Scalar z) const;
  Mat tau_matrix(Scalar z) const;

  // theta(g) for g in O(G), as an ambient vector on Abar (x) A
  // (index bbar * p + a).
  Vec theta_map(const Vec& g) const;

  // Dual *-algebra: functionals as covectors on the Z-basis.
  Vec convolve_dual(const Vec& omega, const Vec& omega_prime) const;
  Vec star_dual(const Vec& omega) const;
  // theta_pi(omega) acting on G_pi, for the spectral block at `block`.
  Mat dual_rep(const Vec& omega, Index block) const;

  // delta_X eigenvalue attached to the j (resp. k) slot of basis element b.
  double lambda_j(Index b) const { return lamj_(b); }
  double lambda_k(Index b) const { return lamk_(b); }

  Index basis_index(Index block, Index j, Index k) const;

  // GNS representation of an ambient element of A (x) Abar on the
  // orthonormalized L^2(A) (x) L^2(Abar); operator norm realizes the reduced
  // norm.
  Mat gns_ambient(const Vec& ambient) const;
  Mat gns_z(const Vec& zcoords) const { return gns_ambient(embed(zcoords)); }

  const CheckList& audit() const { return audit_; }

 private:
  const ErgodicAction* act_ = nullptr;
  std::vector<ZLabel> labels_;
  Mat zmat_;  // p^2 x N
  AlgebraSpec zalg_;
  Vec counit_;
  Vec phi_;
  Mat smat_;
  Mat rmat_;
  RealVec lamj_, lamk_;
  Mat theta_mat_;  // p^2 x n, columns theta(e_g) on Abar (x) A
  Eigen::ColPivHouseholderQR<Mat> expander_;
  GnsRep gns_a_, gns_abar_;
  std::vector<Mat> gns_left_a_, gns_left_abar_;  // per basis element of A/Abar
  CheckList audit_;
};

}  // namespace cqh

#endif  // CQH_HYPERGROUP_HPP_
