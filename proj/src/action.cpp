#include "cqh/action.hpp"

#include <cmath>

#include "cqh/linalg.hpp"

namespace cqh {

namespace {

Mat star_rows(const AlgebraSpec& alg, const Mat& rows) {
  return rows.conjugate() * alg.star.transpose();
}

}  // namespace

Mat ErgodicAction::apply_alpha(const Vec& x) const {
  Mat out = Mat::Zero(alg_.dim, qg_->dim());
  for (Index i = 0; i < alg_.dim; ++i)
    if (x(i) != Scalar(0)) out += x(i) * slices_[static_cast<size_t>(i)];
  return out;
}

Mat ErgodicAction::apply_alpha_bar(const Vec& xbar) const {
  Mat out = Mat::Zero(qg_->dim(), alg_.dim);
  for (Index i = 0; i < alg_.dim; ++i)
    if (xbar(i) != Scalar(0)) out += xbar(i) * bar_slices_[static_cast<size_t>(i)];
  return out;
}

Vec ErgodicAction::x_coeff(const Mat& mu, const Vec& xi) const {
  Vec out = Vec::Zero(alg_.dim);
  for (Index j = 0; j < mu.rows(); ++j)
    if (xi(j) != Scalar(0))
      out += xi(j) * alg_.star_of(mu.row(j).transpose());
  return out;
}

Vec ErgodicAction::x_coeff(const SpectralBlock& b, Index t, const Vec& xi) const {
  return x_coeff(b.basis[static_cast<size_t>(t)], xi);
}

Vec ErgodicAction::y_coeff(const SpectralBlock& b, const Vec& xi, Index t) const {
  const Irrep& ir = table_->at(b.pi);
  const double lam = b.delta_eigs(t);
  const Vec inner = x_coeff(b, t, ir.delta_quarter * xi);
  return (std::pow(lam, -0.25) * inner).conjugate();
}

Scalar ErgodicAction::scalar_inner(const Mat& mu, const Mat& nu,
                                   double* defect) const {
  Vec acc = Vec::Zero(alg_.dim);
  for (Index j = 0; j < mu.rows(); ++j)
    acc += alg_.mul(alg_.star_of(mu.row(j).transpose()),
                    nu.row(j).transpose());
  const Vec& u = alg_.unit;
  const Scalar lambda = (u.adjoint() * acc)(0, 0) / u.squaredNorm();
  if (defect)
    *defect = rel_residual((acc - lambda * u).norm(),
                           std::max(acc.norm(), 1.0));
  return lambda;
}

Vec ErgodicAction::expand_in_block(const SpectralBlock& b, const Mat& mu) const {
  Vec c(b.m);
  for (Index t = 0; t < b.m; ++t)
    c(t) = scalar_inner(b.basis[static_cast<size_t>(t)], mu);
  return c;
}

double ErgodicAction::membership_residual(const Corep& c, const Mat& mu) const {
  const Index n = qg_->dim();
  const Mat ustar = star_rows(qg_->algebra(), c.coeff);
  double num = 0.0, den = 0.0;
  for (Index j = 0; j < c.d; ++j) {
    const Mat lhs = apply_alpha(mu.row(j).transpose());
    Mat rhs = Mat::Zero(alg_.dim, n);
    for (Index k = 0; k < c.d; ++k)
      rhs += mu.row(k).transpose() * ustar.row(k * c.d + j);
    num += (lhs - rhs).squaredNorm();
    den += std::max(lhs.squaredNorm(), rhs.squaredNorm());
  }
  return rel_residual(std::sqrt(num), std::sqrt(den));
}

Vec invariant_state(const QuantumGroup& qg, const AlgebraSpec& algebra,
                    const ComplexTensor& alpha, const Tolerance& tol) {
  const Index p = algebra.dim, n = qg.dim();
  Vec lambda(p);
  for (Index i = 0; i < p; ++i) {
    Vec v = Vec::Zero(p);
    for (Index j = 0; j < p; ++j)
      for (Index k = 0; k < n; ++k)
        v(j) += alpha.data()((i * p + j) * n + k) * qg.haar()(k);
    const Vec& u = algebra.unit;
    const Scalar lam = (u.adjoint() * v)(0, 0) / u.squaredNorm();
    const double defect =
        rel_residual((v - lam * u).norm(), std::max(1.0, v.norm()));
    if (defect > tol.eps)
      throw Error(ErrorCode::NotScalar,
                  "(id (x) phi_G) alpha(e_i) is not scalar", "invariant-state",
                  defect);
    lambda(i) = lam;
  }
  return lambda;
}

ErgodicAction ErgodicAction::analyze(const QuantumGroup& qg,
                                     const IrrepTable& table,
                                     const AlgebraSpec& algebra,
                                     const ComplexTensor& alpha,
                                     const Tolerance& tol, bool strict) {
  ErgodicAction act;
  act.qg_ = &qg;
  act.table_ = &table;
  act.alg_ = algebra;
  const Index p = algebra.dim, n = qg.dim();
  if (alpha.shape() != std::vector<Index>{p, p, n})
    throw Error(ErrorCode::Schema, "action tensor shape mismatch");

  CheckList checks = algebra.verify_axioms(tol);

  act.slices_.reserve(static_cast<size_t>(p));
  for (Index i = 0; i < p; ++i) {
    Mat s(p, n);
    for (Index j = 0; j < p; ++j)
      for (Index k = 0; k < n; ++k) s(j, k) = alpha.data()((i * p + j) * n + k);
    act.slices_.push_back(std::move(s));
  }

  // alpha is a unital *-homomorphism.
  {
    Mat unit_target = algebra.unit * qg.unit().transpose();
    checks.add("coaction-unital",
               rel_residual(act.apply_alpha(algebra.unit), unit_target), 1,
               tol.eps);
    double num = 0.0, den = 0.0;
    for (Index i = 0; i < p; ++i) {
      const Mat lhs = act.apply_alpha(algebra.star_of(Vec::Unit(p, i)));
      const Mat rhs =
          tensor_star(algebra, qg.algebra(), act.apply_alpha(Vec::Unit(p, i)));
      num += (lhs - rhs).squaredNorm();
      den += rhs.squaredNorm();
    }
    checks.add("coaction-star", rel_residual(std::sqrt(num), std::sqrt(den)),
               p, tol.eps);

    double num2 = 0.0, den2 = 0.0;
    Index count = 0;
    if (p <= 12) {
      for (Index i = 0; i < p; ++i)
        for (Index j = 0; j < p; ++j) {
          const Mat lhs = act.apply_alpha(
              algebra.mul(Vec::Unit(p, i), Vec::Unit(p, j)));
          const Mat rhs = tensor_mul(algebra, qg.algebra(),
                                     act.slices_[static_cast<size_t>(i)],
                                     act.slices_[static_cast<size_t>(j)]);
          num2 += (lhs - rhs).squaredNorm();
          den2 += rhs.squaredNorm();
          ++count;
        }
    } else {
      Rng rng(0xAC710);
      for (int probe = 0; probe < 24; ++probe) {
        const Vec x = rng.cvector(p), y = rng.cvector(p);
        const Mat lhs = act.apply_alpha(algebra.mul(x, y));
        const Mat rhs = tensor_mul(algebra, qg.algebra(), act.apply_alpha(x),
                                   act.apply_alpha(y));
        num2 += (lhs - rhs).squaredNorm();
        den2 += rhs.squaredNorm();
        ++count;
      }
    }
    checks.add("coaction-multiplicative",
               rel_residual(std::sqrt(num2), std::sqrt(den2)), count, tol.eps);
  }

  // Coaction law and counit law.
  {
    double num = 0.0, den = 0.0;
    Mat arows(p, p * n);  // (j, (l,m)) = alpha[j,l,m]
    for (Index j = 0; j < p; ++j)
      for (Index l = 0; l < p; ++l)
        for (Index m = 0; m < n; ++m)
          arows(j, l * n + m) = alpha.data()((j * p + l) * n + m);
    Mat cflat(n, n * n);  // (k, (a,b))
    for (Index k = 0; k < n; ++k)
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
          cflat(k, a * n + b) = qg.comult_tensor().data()((k * n + a) * n + b);
    for (Index i = 0; i < p; ++i) {
      const Mat& ai = act.slices_[static_cast<size_t>(i)];
      const Mat lhs = arows.transpose() * ai;  // ((l,m), k)
      const Mat rhs = ai * cflat;              // (j, (a,b))
      // flatten lhs as (l, m, k) and rhs as (j, a, b)
      Vec vl(p * n * n), vr(p * n * n);
      for (Index l = 0; l < p; ++l)
        for (Index m = 0; m < n; ++m)
          for (Index k = 0; k < n; ++k)
            vl((l * n + m) * n + k) = lhs(l * n + m, k);
      for (Index j = 0; j < p; ++j)
        for (Index a = 0; a < n; ++a)
          for (Index b = 0; b < n; ++b) vr((j * n + a) * n + b) = rhs(j, a * n + b);
      num += (vl - vr).squaredNorm();
      den += std::max(vl.squaredNorm(), vr.squaredNorm());
    }
    checks.add("coaction-law", rel_residual(std::sqrt(num), std::sqrt(den)), p,
               tol.eps);

    double cnum = 0.0;
    for (Index i = 0; i < p; ++i) {
      Vec v = act.slices_[static_cast<size_t>(i)] * qg.counit();
      v(i) -= 1.0;
      cnum += v.squaredNorm();
    }
    checks.add("coaction-counit", rel_residual(std::sqrt(cnum), std::sqrt(p)),
               p, tol.eps);
  }

  if (strict) checks.require(ErrorCode::NotCoaction);

  // Ergodicity: the fixed-point space must be C1.
  {
    Mat sys(p * n, p);
    for (Index j = 0; j < p; ++j)
      for (Index k = 0; k < n; ++k)
        for (Index a = 0; a < p; ++a)
          sys(j * n + k, a) = alpha.data()((a * p + j) * n + k) -
                              (a == j ? qg.unit()(k) : Scalar(0));
    const Mat fixed = nullspace(sys, tol, std::max(1.0, alpha.norm()));
    checks.add("ergodicity",
               fixed.cols() == 1 ? 0.0 : std::abs(double(fixed.cols() - 1)), 1,
               tol.eps);
    if (strict && fixed.cols() != 1)
      throw Error(ErrorCode::NotErgodic,
                  "fixed-point algebra has dimension " +
                      std::to_string(fixed.cols()),
                  "ergodicity", double(fixed.cols()));
  }

  // Invariant state, its positivity and faithfulness.
  try {
    act.phix_ = ::cqh::invariant_state(qg, algebra, alpha, tol);
    checks.add("invariant-state-scalar", 0.0, p, tol.eps);
  } catch (const Error& e) {
    if (strict) throw;
    checks.add_failure("invariant-state-scalar", e.residual(), e.what());
    act.phix_ = Vec::Zero(p);
    for (Index i = 0; i < p; ++i) act.phix_(i) = algebra.unit(i);
  }
  checks.add("invariant-state-unital",
             std::abs(apply_functional(act.phix_, algebra.unit) - Scalar(1.0)),
             1, tol.eps);
  {
    const Mat gram = algebra.gram(act.phix_);
    checks.add("invariant-state-gram-hermitian", hermiticity_defect(gram), p,
               tol.eps);
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (gram + gram.adjoint()));
    const double lmin = es.eigenvalues()(0), lmax = es.eigenvalues()(p - 1);
    checks.add("invariant-state-positive",
               std::max(0.0, -lmin / std::max(1.0, lmax)), p, tol.eps);
    checks.add("invariant-state-faithful",
               lmin > tol.eps * std::max(lmax, 1.0) ? 0.0 : 1.0, p, tol.eps);
  }
  if (strict) checks.require(ErrorCode::GramSingular);

  act.bx_ = algebra.pairing_matrix(act.phix_);

  // Modular automorphism of phi_X.
  try {
    act.sigmax_ = modular_map(algebra, act.phix_, tol);
  } catch (const Error& e) {
    if (strict) throw;
    checks.add_failure("state-modular-map", 1.0, e.what());
    act.sigmax_ = Mat::Identity(p, p);
  }
  checks.add("state-kms",
             rel_residual(act.bx_, act.sigmax_.transpose() * act.bx_.transpose()),
             p * p, tol.eps);
  checks.add("state-modular-invariance",
             rel_residual((act.sigmax_.transpose() * act.phix_ - act.phix_).norm(),
                          act.phix_.norm()),
             p, tol.eps);

  // Conjugate algebra and the mirrored left action
  // bar-alpha(xbar) = R_G(x_(1))^* (x) bar(x_(0)).
  act.abar_ = conjugate_algebra(algebra);
  {
    const Mat q = qg.algebra().star * qg.unitary_antipode().conjugate();
    act.bar_slices_.reserve(static_cast<size_t>(p));
    for (Index i = 0; i < p; ++i) {
      Mat s = Mat::Zero(n, p);
      for (Index j = 0; j < p; ++j)
        for (Index k = 0; k < n; ++k) {
          const Scalar c = std::conj(alpha.data()((i * p + j) * n + k));
          if (c != Scalar(0)) s.col(j) += c * q.col(k);
        }
      act.bar_slices_.push_back(std::move(s));
    }

    // Left coaction axioms for bar-alpha.
    double num = 0.0, den = 0.0, cnum = 0.0;
    Mat cflat(n, n * n);
    for (Index k = 0; k < n; ++k)
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
          cflat(k, a * n + b) = qg.comult_tensor().data()((k * n + a) * n + b);
    for (Index i = 0; i < p; ++i) {
      const Mat& bi = act.bar_slices_[static_cast<size_t>(i)];
      // (Delta (x) id) bar-alpha: (a,b,j) = sum_m C[m,a,b] bi(m,j)
      Vec vl(n * n * p), vr(n * n * p);
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
          for (Index j = 0; j < p; ++j) {
            Scalar s = 0.0;
            for (Index m = 0; m < n; ++m)
              s += cflat(m, a * n + b) * bi(m, j);
            vl((a * n + b) * p + j) = s;
          }
      // (id (x) bar-alpha) bar-alpha: (m,b,c) = sum_j bi(m,j) bar_j(b,c)
      for (Index m = 0; m < n; ++m)
        for (Index b = 0; b < n; ++b)
          for (Index c = 0; c < p; ++c) {
            Scalar s = 0.0;
            for (Index j = 0; j < p; ++j)
              s += bi(m, j) * act.bar_slices_[static_cast<size_t>(j)](b, c);
            vr((m * n + b) * p + c) = s;
          }
      num += (vl - vr).squaredNorm();
      den += std::max(vl.squaredNorm(), vr.squaredNorm());
      Vec cv = bi.transpose() * qg.counit();
      cv(i) -= 1.0;
      cnum += cv.squaredNorm();
    }
    checks.add("mirror-coaction-law", rel_residual(std::sqrt(num), std::sqrt(den)),
               p, tol.eps);
    checks.add("mirror-coaction-counit",
               rel_residual(std::sqrt(cnum), std::sqrt(p)), p, tol.eps);

    // Multiplicativity / star / unit probes for the mirror action.
    Rng rng(0xBA7);
    double mnum = 0.0, mden = 0.0, snum = 0.0, sden = 0.0;
    for (int probe = 0; probe < 12; ++probe) {
      const Vec x = rng.cvector(p), y = rng.cvector(p);
      const Mat lhs = act.apply_alpha_bar(act.abar_.mul(x, y));
      const Mat rhs = tensor_mul(qg.algebra(), act.abar_, act.apply_alpha_bar(x),
                                 act.apply_alpha_bar(y));
      mnum += (lhs - rhs).squaredNorm();
      mden += rhs.squaredNorm();
      const Mat lhs2 = act.apply_alpha_bar(act.abar_.star_of(x));
      const Mat rhs2 =
          tensor_star(qg.algebra(), act.abar_, act.apply_alpha_bar(x));
      snum += (lhs2 - rhs2).squaredNorm();
      sden += rhs2.squaredNorm();
    }
    checks.add("mirror-coaction-multiplicative",
               rel_residual(std::sqrt(mnum), std::sqrt(mden)), 12, tol.eps);
    checks.add("mirror-coaction-star",
               rel_residual(std::sqrt(snum), std::sqrt(sden)), 12, tol.eps);
    checks.add("mirror-coaction-unital",
               rel_residual(act.apply_alpha_bar(act.abar_.unit),
                            Mat(qg.unit() * act.abar_.unit.transpose())),
               1, tol.eps);
  }

  if (strict) checks.require(ErrorCode::NotCoaction);

  // Spectral subspaces per irreducible.
  Index dim_count = 0;
  double max_scalar_defect = 0.0;
  for (Index t = 0; t < table.count(); ++t) {
    const Corep& c = table.at(t).corep;
    const Index d = c.d;
    const Mat ustar = star_rows(qg.algebra(), c.coeff);
    Mat sys = Mat::Zero(d * p * n, d * p);
    for (Index j = 0; j < d; ++j)
      for (Index b = 0; b < p; ++b)
        for (Index m = 0; m < n; ++m) {
          const Index row = (j * p + b) * n + m;
          for (Index a = 0; a < p; ++a)
            sys(row, j * p + a) += alpha.data()((a * p + b) * n + m);
          for (Index k = 0; k < d; ++k)
            sys(row, k * p + b) -= ustar(k * d + j, m);
        }
    const Mat kernel =
        nullspace(sys, tol, std::max(1.0, alpha.norm() + c.coeff.norm()));
    SpectralBlock blk;
    blk.pi = t;
    blk.m = kernel.cols();
    for (Index s = 0; s < blk.m; ++s) {
      Mat mu(d, p);
      for (Index j = 0; j < d; ++j)
        for (Index a = 0; a < p; ++a) mu(j, a) = kernel(j * p + a, s);
      blk.basis.push_back(std::move(mu));
    }
    // Orthonormalize against the canonical scalar product.
    if (blk.m > 0) {
      Mat gram(blk.m, blk.m);
      for (Index s = 0; s < blk.m; ++s)
        for (Index r = 0; r < blk.m; ++r) {
          double defect = 0.0;
          gram(s, r) = act.scalar_inner(blk.basis[static_cast<size_t>(s)],
                                        blk.basis[static_cast<size_t>(r)],
                                        &defect);
          max_scalar_defect = std::max(max_scalar_defect, defect);
        }
      const Mat trans = gram_orthonormalize(gram, tol);
      std::vector<Mat> ortho;
      for (Index r = 0; r < blk.m; ++r) {
        Mat mu = Mat::Zero(d, p);
        for (Index s = 0; s < blk.m; ++s)
          mu += trans(s, r) * blk.basis[static_cast<size_t>(s)];
        ortho.push_back(std::move(mu));
      }
      blk.basis = std::move(ortho);
    }
    blk.delta_eigs = RealVec::Ones(blk.m);
    dim_count += blk.m * d;
    act.blocks_.push_back(std::move(blk));
  }
  checks.add("spectral-inner-product-scalar", max_scalar_defect, dim_count,
             tol.eps);
  if (strict && max_scalar_defect > tol.eps)
    throw Error(ErrorCode::InnerProductNotScalar,
                "canonical inner product is not scalar", "spectral",
                max_scalar_defect);
  checks.add("spectral-completeness",
             dim_count == p ? 0.0 : std::abs(double(dim_count - p)), p, tol.eps);

  // delta_X per block: expand sigma_X(X(f_t, dG^{1/2} e_k)) over X(f_s, e_k).
  double max_expand = 0.0, max_kms = 0.0;
  for (auto& blk : act.blocks_) {
    if (blk.m == 0) continue;
    const Irrep& ir = table.at(blk.pi);
    const Index d = ir.corep.d;
    Mat basis_mat(d * p, blk.m);
    for (Index s = 0; s < blk.m; ++s)
      for (Index k = 0; k < d; ++k)
        basis_mat.block(k * p, s, p, 1) =
            act.x_coeff(blk, s, Vec::Unit(d, k));
    Eigen::ColPivHouseholderQR<Mat> qr(basis_mat);
    Mat cmat(blk.m, blk.m);
    for (Index t = 0; t < blk.m; ++t) {
      Vec rhs(d * p);
      for (Index k = 0; k < d; ++k)
        rhs.segment(k * p, p) = act.sigmax_ * act.x_coeff(blk, t, ir.delta_sqrt.col(k));
      const Vec sol = qr.solve(rhs);
      max_expand = std::max(
          max_expand, rel_residual((basis_mat * sol - rhs).norm(), rhs.norm()));
      cmat.col(t) = sol.conjugate();
    }
    checks.add("delta-x-hermitian-" + ir.label, hermiticity_defect(cmat), blk.m,
               tol.eps * 100);
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (cmat + cmat.adjoint()));
    if (es.eigenvalues()(0) <= 0.0) {
      if (strict)
        throw Error(ErrorCode::DeltaNotPositive,
                    "delta_X has a non-positive eigenvalue on " + ir.label,
                    "delta-x", es.eigenvalues()(0));
      checks.add_failure("delta-x-positive-" + ir.label, es.eigenvalues()(0),
                         "non-positive");
      continue;
    }
    // c = delta_X^{-1/2}; rotate the basis to diagonalize delta_X with
    // ascending eigenvalues c^{-2}.
    std::vector<std::pair<double, Index>> order;
    for (Index r = 0; r < blk.m; ++r)
      order.emplace_back(std::pow(es.eigenvalues()(r), -2.0), r);
    std::sort(order.begin(), order.end());
    std::vector<Mat> rotated;
    RealVec eigs(blk.m);
    for (Index rnew = 0; rnew < blk.m; ++rnew) {
      const Index rold = order[static_cast<size_t>(rnew)].second;
      eigs(rnew) = order[static_cast<size_t>(rnew)].first;
      Mat mu = Mat::Zero(d, p);
      for (Index s = 0; s < blk.m; ++s)
        mu += es.eigenvectors()(s, rold) * blk.basis[static_cast<size_t>(s)];
      rotated.push_back(std::move(mu));
    }
    blk.basis = std::move(rotated);
    blk.delta_eigs = eigs;

    // Consistency: sigma_X(X(f_t, e_k)) = lambda_t^{-1/2} X(f_t, dG^{-1/2} e_k).
    for (Index t = 0; t < blk.m; ++t)
      for (Index k = 0; k < d; ++k) {
        const Vec lhs = act.sigmax_ * act.x_coeff(blk, t, Vec::Unit(d, k));
        const Vec rhs = std::pow(blk.delta_eigs(t), -0.5) *
                        act.x_coeff(blk, t, ir.delta_inv_sqrt.col(k));
        max_kms = std::max(max_kms, rel_residual(lhs, rhs));
      }
  }
  checks.add("delta-x-expansion", max_expand, dim_count, tol.eps * 100);
  checks.add("spectral-modular-consistency", max_kms, dim_count, tol.eps * 100);
  if (strict && max_expand > tol.eps * 100)
    throw Error(ErrorCode::ExtractionInconsistent,
                "delta_X expansion residual too large", "delta-x", max_expand);

  if (strict) checks.require();
  act.audit_ = checks;
  return act;
}

ActionOrthogonalityReport verify_action_orthogonality(const ErgodicAction& act) {
  ActionOrthogonalityReport rep;
  const auto& table = act.table();
  const Mat bbar = act.state_pairing().conjugate();
  const AlgebraSpec& abar = act.conjugate_algebra_spec();
  for (const auto& ba : act.blocks()) {
    const Irrep& ia = table.at(ba.pi);
    for (const auto& bb : act.blocks()) {
      const Irrep& ib = table.at(bb.pi);
      const bool same = &ba == &bb;
      for (Index s = 0; s < ba.m; ++s)
        for (Index j = 0; j < ia.corep.d; ++j)
          for (Index t = 0; t < bb.m; ++t)
            for (Index k = 0; k < ib.corep.d; ++k) {
              const Vec xa = act.x_coeff(ba, s, Vec::Unit(ia.corep.d, j));
              const Vec xb = act.x_coeff(bb, t, Vec::Unit(ib.corep.d, k));
              const Scalar v19 =
                  (xa.transpose() * act.state_pairing() *
                   act.algebra().star_of(xb))(0, 0);
              const Scalar e19 =
                  same && s == t ? ia.delta_inv_sqrt(k, j) / ia.dimq : 0.0;
              rep.eq19 = std::max(rep.eq19, std::abs(v19 - e19));
              const Scalar v20 = (act.algebra().star_of(xa).transpose() *
                                  act.state_pairing() * xb)(0, 0);
              const Scalar e20 = same && j == k && s == t
                                     ? std::pow(ba.delta_eigs(s), 0.5) / ia.dimq
                                     : 0.0;
              rep.eq20 = std::max(rep.eq20, std::abs(v20 - e20));
              const Vec ya = act.y_coeff(ba, Vec::Unit(ia.corep.d, j), s);
              const Vec yb = act.y_coeff(bb, Vec::Unit(ib.corep.d, k), t);
              const Scalar v21 =
                  (ya.transpose() * bbar * abar.star_of(yb))(0, 0);
              const Scalar e21 = same && j == k && s == t
                                     ? std::pow(ba.delta_eigs(s), -0.5) / ia.dimq
                                     : 0.0;
              rep.eq21 = std::max(rep.eq21, std::abs(v21 - e21));
              const Scalar v22 =
                  (abar.star_of(ya).transpose() * bbar * yb)(0, 0);
              const Scalar e22 =
                  same && s == t ? ia.delta_sqrt(k, j) / ia.dimq : 0.0;
              rep.eq22 = std::max(rep.eq22, std::abs(v22 - e22));
            }
    }
  }
  return rep;
}

GnsReport verify_gns_completeness(const ErgodicAction& act) {
  GnsReport rep;
  const auto& table = act.table();
  std::vector<Vec> xs, ys;
  for (const auto& blk : act.blocks()) {
    const Irrep& ir = table.at(blk.pi);
    for (Index t = 0; t < blk.m; ++t)
      for (Index k = 0; k < ir.corep.d; ++k) {
        xs.push_back(std::sqrt(ir.dimq) * std::pow(blk.delta_eigs(t), -0.25) *
                     act.x_coeff(blk, t, Vec::Unit(ir.corep.d, k)));
        ys.push_back(std::sqrt(ir.dimq) *
                     act.y_coeff(blk, ir.delta_inv_quarter.col(k), t));
      }
  }
  rep.frame_count = static_cast<Index>(xs.size());
  const Index count = rep.frame_count;
  Mat gx(count, count), gy(count, count);
  const Mat bbar = act.state_pairing().conjugate();
  for (Index a = 0; a < count; ++a)
    for (Index b = 0; b < count; ++b) {
      gx(a, b) = (act.algebra()
                      .star_of(xs[static_cast<size_t>(a)])
                      .transpose() *
                  act.state_pairing() * xs[static_cast<size_t>(b)])(0, 0);
      gy(a, b) = (act.conjugate_algebra_spec()
                      .star_of(ys[static_cast<size_t>(a)])
                      .transpose() *
                  bbar * ys[static_cast<size_t>(b)])(0, 0);
    }
  rep.x_gram_residual = rel_residual(gx, Mat::Identity(count, count));
  rep.y_gram_residual = rel_residual(gy, Mat::Identity(count, count));
  return rep;
}

SpectralFunctorReport verify_spectral_functoriality(const ErgodicAction& act) {
  SpectralFunctorReport rep;
  const auto& table = act.table();
  const QuantumGroup& qg = act.qg();

  // Tensor embeddings (mu2)_{23} (mu1)_{13} for all pairs with m > 0.
  for (const auto& b1 : act.blocks()) {
    if (b1.m == 0) continue;
    const Corep& c1 = table.at(b1.pi).corep;
    for (const auto& b2 : act.blocks()) {
      if (b2.m == 0) continue;
      const Corep& c2 = table.at(b2.pi).corep;
      const Corep prod = tensor(qg, c1, c2);
      std::vector<Mat> embedded;
      for (Index s = 0; s < b1.m; ++s)
        for (Index t = 0; t < b2.m; ++t) {
          Mat emb(c1.d * c2.d, act.dim());
          for (Index j = 0; j < c1.d; ++j)
            for (Index k = 0; k < c2.d; ++k)
              emb.row(j * c2.d + k) =
                  act.algebra()
                      .mul(b2.basis[static_cast<size_t>(t)].row(k).transpose(),
                           b1.basis[static_cast<size_t>(s)].row(j).transpose())
                      .transpose();
          rep.tensor_membership =
              std::max(rep.tensor_membership, act.membership_residual(prod, emb));
          embedded.push_back(std::move(emb));
        }
      for (size_t a = 0; a < embedded.size(); ++a)
        for (size_t b = 0; b < embedded.size(); ++b) {
          const Scalar got = act.scalar_inner(embedded[a], embedded[b]);
          const Scalar expect = a == b ? 1.0 : 0.0;
          rep.tensor_isometry =
              std::max(rep.tensor_isometry, std::abs(got - expect));
        }
    }
  }

  // Conjugation: bar(mu) = sum_j ebar_j (x) X(dX^{-1/4} mu, dG^{1/4} e_j).
  for (const auto& blk : act.blocks()) {
    if (blk.m == 0) continue;
    const Irrep& ir = table.at(blk.pi);
    const Corep conj_rep = conjugate(qg, ir.corep);
    const Index d = ir.corep.d;
    std::vector<Mat> bars;
    for (Index t = 0; t < blk.m; ++t) {
      Mat bar(d, act.dim());
      for (Index j = 0; j < d; ++j)
        bar.row(j) = (std::pow(blk.delta_eigs(t), -0.25) *
                      act.x_coeff(blk, t, ir.delta_quarter.col(j)))
                         .transpose();
      rep.conj_membership =
          std::max(rep.conj_membership, act.membership_residual(conj_rep, bar));
      bars.push_back(std::move(bar));
    }
    for (size_t a = 0; a < bars.size(); ++a)
      for (size_t b = 0; b < bars.size(); ++b) {
        const Scalar got = act.scalar_inner(bars[a], bars[b]);
        rep.conj_unitary = std::max(
            rep.conj_unitary, std::abs(got - (a == b ? Scalar(1) : Scalar(0))));
      }
    // X(mu,xi)^* = X_{bar pi}(bar(dX^{1/4} mu), conj(dG^{-1/4} xi))
    for (Index t = 0; t < blk.m; ++t)
      for (Index j = 0; j < d; ++j) {
        const Vec lhs = act.algebra().star_of(
            act.x_coeff(blk, t, Vec::Unit(d, j)));
        const Vec xi_bar = ir.delta_inv_quarter.col(j).conjugate();
        const Vec rhs = std::pow(blk.delta_eigs(t), 0.25) *
                        act.x_coeff(bars[static_cast<size_t>(t)], xi_bar);
        rep.conj_star_identity =
            std::max(rep.conj_star_identity, rel_residual(lhs, rhs));
      }
  }

  // Coaction formulas for the X- and Y-coefficients.
  for (const auto& blk : act.blocks()) {
    const Irrep& ir = table.at(blk.pi);
    const Index d = ir.corep.d;
    for (Index t = 0; t < blk.m; ++t)
      for (Index l = 0; l < d; ++l) {
        const Mat lhs = act.apply_alpha(act.x_coeff(blk, t, Vec::Unit(d, l)));
        Mat rhs = Mat::Zero(act.dim(), qg.dim());
        for (Index j = 0; j < d; ++j)
          rhs += act.x_coeff(blk, t, Vec::Unit(d, j)) *
                 ir.corep.entry(j, l).transpose();
        rep.x_coaction = std::max(rep.x_coaction, rel_residual(lhs, rhs));

        const Mat lhs2 =
            act.apply_alpha_bar(act.y_coeff(blk, Vec::Unit(d, l), t));
        Mat rhs2 = Mat::Zero(qg.dim(), act.dim());
        for (Index j = 0; j < d; ++j)
          rhs2 += ir.corep.entry(l, j) *
                  act.y_coeff(blk, Vec::Unit(d, j), t).transpose();
        rep.y_coaction = std::max(rep.y_coaction, rel_residual(lhs2, rhs2));
      }
  }
  return rep;
}

}  // namespace cqh
