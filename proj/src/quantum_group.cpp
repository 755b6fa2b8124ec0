#include "cqh/quantum_group.hpp"

#include <cmath>

#include "cqh/linalg.hpp"

namespace cqh {

namespace {

Mat delta_matrix_of(const ComplexTensor& comult, Index i) {
  const Index n = comult.extent(0);
  Mat d(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index k = 0; k < n; ++k) d(j, k) = comult.data()((i * n + j) * n + k);
  return d;
}

}  // namespace

Vec compute_haar(const AlgebraSpec& alg, const ComplexTensor& comult,
                 const Tolerance& tol) {
  const Index n = alg.dim;
  // Left invariance rows (i,k): sum_j C[i,j,k] phi_j - u_k phi_i = 0
  // Right invariance rows (i,j): sum_k C[i,j,k] phi_k - u_j phi_i = 0
  Mat sys(2 * n * n, n);
  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k < n; ++k)
      for (Index j = 0; j < n; ++j)
        sys(i * n + k, j) = comult.data()((i * n + j) * n + k) -
                            (i == j ? alg.unit(k) : Scalar(0));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        sys(n * n + i * n + j, k) = comult.data()((i * n + j) * n + k) -
                                    (i == k ? alg.unit(j) : Scalar(0));
  const Mat kernel = nullspace(sys, tol, std::max(1.0, comult.norm()));
  if (kernel.cols() != 1)
    throw Error(ErrorCode::NoHaar,
                "bi-invariant functional space has dimension " +
                    std::to_string(kernel.cols()) +
                    " (expected 1); input is not a finite quantum group");
  Vec phi = kernel.col(0);
  const Scalar on_unit = apply_functional(phi, alg.unit);
  if (std::abs(on_unit) <= tol.eps)
    throw Error(ErrorCode::NoHaar, "invariant functional vanishes on the unit");
  phi /= on_unit;
  return phi;
}

QuantumGroup QuantumGroup::build(const QuantumGroupSpec& spec,
                                 const Tolerance& tol, bool strict) {
  QuantumGroup qg;
  qg.alg_ = spec.algebra;
  qg.comult_ = spec.comult;
  qg.counit_ = spec.counit;
  qg.antipode_ = spec.antipode;
  const Index n = qg.alg_.dim;
  const Vec& u = qg.alg_.unit;

  CheckList checks = qg.alg_.verify_axioms(tol);

  qg.cmat_ = Mat::Zero(n * n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        qg.cmat_(j * n + k, i) = spec.comult.data()((i * n + j) * n + k);

  // Coassociativity.
  {
    ComplexTensor l4 = contract(spec.comult, spec.comult, {{1, 0}});
    ComplexTensor lhs = l4.permuted({0, 2, 3, 1});  // [i,a,b,k]
    ComplexTensor rhs = contract(spec.comult, spec.comult, {{2, 0}});
    checks.add("coassociativity",
               rel_residual((lhs.data() - rhs.data()).norm(),
                            std::max(lhs.norm(), rhs.norm())),
               n, tol.eps);
  }

  // Counit laws (eps (x) id) Delta = id = (id (x) eps) Delta.
  {
    Mat lhs = Mat::Zero(n, n), rhs = Mat::Zero(n, n);
    for (Index i = 0; i < n; ++i) {
      const Mat d = delta_matrix_of(spec.comult, i);
      lhs.col(i) = d.transpose() * qg.counit_;
      rhs.col(i) = d * qg.counit_;
    }
    checks.add("counit-left", rel_residual(lhs, Mat::Identity(n, n)), n,
               tol.eps);
    checks.add("counit-right", rel_residual(rhs, Mat::Identity(n, n)), n,
               tol.eps);
  }

  // Delta is a unital *-homomorphism.
  {
    const Vec d1 = qg.cmat_ * u;
    checks.add("comult-unital", rel_residual((d1 - kron(u, u)).norm(), 1.0), 1,
               tol.eps);

    const Mat star2 = kron(qg.alg_.star, qg.alg_.star);
    double num = 0.0, den = 0.0;
    for (Index i = 0; i < n; ++i) {
      const Vec lhs = qg.cmat_ * qg.alg_.star_of(Vec::Unit(n, i));
      const Vec rhs = star2 * (qg.cmat_ * Vec::Unit(n, i)).conjugate();
      num += (lhs - rhs).squaredNorm();
      den += rhs.squaredNorm();
    }
    checks.add("comult-star", rel_residual(std::sqrt(num), std::sqrt(den)), n,
               tol.eps);

    // Multiplicativity: full sweep at small dimension, seeded probes above.
    double num2 = 0.0, den2 = 0.0;
    Index count = 0;
    if (n <= 12) {
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
          const Mat di = delta_matrix_of(spec.comult, i);
          const Mat dj = delta_matrix_of(spec.comult, j);
          const Mat lhs_mat = tensor_mul(qg.alg_, qg.alg_, di, dj);
          Vec prod = qg.alg_.mul(Vec::Unit(n, i), Vec::Unit(n, j));
          Vec lhs = qg.cmat_ * prod;
          Vec rhs(n * n);
          for (Index a = 0; a < n; ++a)
            rhs.segment(a * n, n) = lhs_mat.row(a).transpose();
          num2 += (lhs - rhs).squaredNorm();
          den2 += rhs.squaredNorm();
          ++count;
        }
    } else {
      Rng rng = Rng(0xD1A5ull);
      for (int probe = 0; probe < 24; ++probe) {
        const Vec x = rng.cvector(n), y = rng.cvector(n);
        Mat dx = Mat::Zero(n, n), dy = Mat::Zero(n, n);
        for (Index i = 0; i < n; ++i) {
          dx += x(i) * delta_matrix_of(spec.comult, i);
          dy += y(i) * delta_matrix_of(spec.comult, i);
        }
        const Mat lhs_mat = tensor_mul(qg.alg_, qg.alg_, dx, dy);
        Vec lhs = qg.cmat_ * qg.alg_.mul(x, y);
        Vec rhs(n * n);
        for (Index a = 0; a < n; ++a)
          rhs.segment(a * n, n) = lhs_mat.row(a).transpose();
        num2 += (lhs - rhs).squaredNorm();
        den2 += rhs.squaredNorm();
        ++count;
      }
    }
    checks.add("comult-multiplicative",
               rel_residual(std::sqrt(num2), std::sqrt(den2)), count, tol.eps);
  }

  // Antipode convolution-inverse law m(S (x) id)Delta = eps(.)1 = m(id (x) S)Delta.
  {
    using RowMat =
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    Eigen::Map<const RowMat> mflat(qg.alg_.mult.data().data(), n * n, n);
    Mat lhs = Mat::Zero(n, n), rhs = Mat::Zero(n, n), target = Mat::Zero(n, n);
    for (Index i = 0; i < n; ++i) {
      const Mat d = delta_matrix_of(spec.comult, i);
      const Mat sd = qg.antipode_ * d;          // (S (x) id)Delta(e_i)
      const Mat ds = d * qg.antipode_.transpose();  // (id (x) S)Delta(e_i)
      Vec v1(n * n), v2(n * n);
      for (Index a = 0; a < n; ++a) {
        v1.segment(a * n, n) = sd.row(a).transpose();
        v2.segment(a * n, n) = ds.row(a).transpose();
      }
      lhs.col(i) = mflat.transpose() * v1;
      rhs.col(i) = mflat.transpose() * v2;
      target.col(i) = qg.counit_(i) * u;
    }
    checks.add("antipode-left", rel_residual(lhs, target), n, tol.eps);
    checks.add("antipode-right", rel_residual(rhs, target), n, tol.eps);
    checks.add("antipode-unit",
               rel_residual((qg.antipode_ * u - u).norm(), 1.0), 1, tol.eps);
    checks.add("counit-antipode",
               rel_residual((qg.antipode_.transpose() * qg.counit_ - qg.counit_).norm(),
                            qg.counit_.norm()),
               1, tol.eps);
  }

  // Counit is a unital *-character.
  {
    const Mat eps_pairs = qg.alg_.pairing_matrix(qg.counit_);
    const Mat rank_one = qg.counit_ * qg.counit_.transpose();
    checks.add("counit-multiplicative", rel_residual(eps_pairs, rank_one),
               n * n, tol.eps);
    checks.add("counit-unital",
               rel_residual(std::abs(apply_functional(qg.counit_, u) - 1.0),
                            1.0),
               1, tol.eps);
    // eps(x^*) = conj(eps(x))  <=>  St^T eps = conj(eps)
    checks.add("counit-star",
               rel_residual((qg.alg_.star.transpose() * qg.counit_ -
                             qg.counit_.conjugate())
                                .norm(),
                            qg.counit_.norm()),
               n, tol.eps);
  }

  // Finite quantum groups are Kac: S^2 = id is required here.
  const double kac_defect =
      rel_residual(qg.antipode_ * qg.antipode_, Mat::Identity(n, n));
  checks.add("kac-antipode-involutive", kac_defect, n, tol.eps);

  if (strict) checks.require();

  // Haar state by nullspace, then positivity/faithfulness certificates.
  bool have_haar = false;
  try {
    qg.haar_ = compute_haar(qg.alg_, spec.comult, tol);
    have_haar = true;
  } catch (const Error& e) {
    if (strict) throw;
    checks.add_failure("haar-exists", 1.0, e.what());
    qg.haar_ = qg.counit_;  // audit fallback so downstream numbers exist
  }
  if (have_haar) checks.add("haar-exists", 0.0, 1, tol.eps);

  {
    const Mat gram = qg.alg_.gram(qg.haar_);
    const double herm = hermiticity_defect(gram);
    checks.add("haar-gram-hermitian", herm, n, tol.eps);
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (gram + gram.adjoint()));
    const double lmin = es.eigenvalues()(0);
    const double lmax = es.eigenvalues()(n - 1);
    checks.add("haar-positive", std::max(0.0, -lmin / std::max(1.0, lmax)), n,
               tol.eps);
    checks.add("haar-faithful",
               lmin > tol.eps * std::max(lmax, 1.0) ? 0.0 : 1.0, n, tol.eps);
    if (strict) checks.require(ErrorCode::HaarNotPositive);
  }

  qg.bmat_ = qg.alg_.pairing_matrix(qg.haar_);
  try {
    qg.sigma_ = modular_map(qg.alg_, qg.haar_, tol);
  } catch (const Error& e) {
    if (strict) throw;
    checks.add_failure("modular-map", 1.0, e.what());
    qg.sigma_ = Mat::Identity(n, n);
  }

  // KMS identity and phi . S = phi.
  checks.add("haar-kms",
             rel_residual(qg.bmat_, qg.sigma_.transpose() * qg.bmat_.transpose()),
             n * n, tol.eps);
  checks.add("haar-antipode-invariant",
             rel_residual((qg.antipode_.transpose() * qg.haar_ - qg.haar_).norm(),
                          qg.haar_.norm()),
             n, tol.eps);

  // Unitary antipode (Kac: R = S) and its certificates.
  qg.rmat_ = qg.antipode_;
  checks.add("unitary-antipode-involutive",
             rel_residual(qg.rmat_ * qg.rmat_, Mat::Identity(n, n)), n, tol.eps);
  {
    double num = 0.0, den = 0.0;
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        const Vec lhs = qg.rmat_ * qg.alg_.mul(Vec::Unit(n, i), Vec::Unit(n, j));
        const Vec rhs = qg.alg_.mul(qg.rmat_ * Vec::Unit(n, j),
                                    qg.rmat_ * Vec::Unit(n, i));
        num += (lhs - rhs).squaredNorm();
        den += rhs.squaredNorm();
      }
    checks.add("unitary-antipode-antihom",
               rel_residual(std::sqrt(num), std::sqrt(den)), n * n, tol.eps);
    // R(x^*) = R(x)^*  <=>  R St = St conj(R) on coordinates.
    checks.add("unitary-antipode-star",
               rel_residual(qg.rmat_ * qg.alg_.star,
                            qg.alg_.star * qg.rmat_.conjugate()),
               n, tol.eps);
  }

  // Woronowicz character delta_G = eps . sigma_i = eps . sigma_kms^{-1};
  // trivially eps for Kac inputs, evaluated generically.
  {
    Eigen::FullPivLU<Mat> lu(qg.sigma_);
    qg.wor_char_ = lu.isInvertible()
                       ? Vec(lu.inverse().transpose() * qg.counit_)
                       : qg.counit_;
  }

  if (strict) checks.require();
  qg.audit_ = checks;
  return qg;
}

Vec QuantumGroup::convolve(const Vec& omega, const Vec& omega_prime) const {
  const Index n = alg_.dim;
  Vec out(n);
  for (Index i = 0; i < n; ++i) {
    const Mat d = delta_matrix_of(comult_, i);
    out(i) = (omega.transpose() * d * omega_prime)(0, 0);
  }
  return out;
}

Mat compute_modular_automorphism(const QuantumGroup& qg, const Tolerance& tol) {
  return modular_map(qg.algebra(), qg.haar(), tol);
}

Mat unitary_antipode(const QuantumGroup& qg, const Tolerance& tol) {
  const Index n = qg.dim();
  const double defect = rel_residual(qg.antipode() * qg.antipode(),
                                     Mat::Identity(n, n));
  if (defect > tol.eps)
    throw Error(ErrorCode::NotKac, "antipode is not involutive", "kac", defect);
  return qg.antipode();
}

}  // namespace cqh
