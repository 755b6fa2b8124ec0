#include "cqh/hypergroup.hpp"

#include <cmath>

#include "cqh/linalg.hpp"

namespace cqh {

Index Hypergroup::basis_index(Index block, Index j, Index k) const {
  for (size_t b = 0; b < labels_.size(); ++b)
    if (labels_[b].block == block && labels_[b].j == j && labels_[b].k == k)
      return static_cast<Index>(b);
  throw Error(ErrorCode::Internal, "basis_index: no such label");
}

Vec Hypergroup::expand(const Vec& ambient, double* residual) const {
  Vec c = expander_.solve(ambient);
  if (residual)
    *residual = rel_residual((zmat_ * c - ambient).norm(),
                             std::max(ambient.norm(), 1.0));
  return c;
}

Mat Hypergroup::comultiply(const Vec& x) const {
  const Index nz = size();
  Mat out = Mat::Zero(nz, nz);
  for (Index b = 0; b < nz; ++b) {
    if (x(b) == Scalar(0)) continue;
    const ZLabel& lb = labels_[static_cast<size_t>(b)];
    const Index m = act_->block(lb.block).m;
    for (Index l = 0; l < m; ++l)
      out(basis_index(lb.block, lb.j, l), basis_index(lb.block, l, lb.k)) +=
          x(b);
  }
  return out;
}

Mat Hypergroup::sigma_matrix(Scalar z) const {
  const Index nz = size();
  Vec diag(nz);
  const Scalar e = Scalar(0, -0.5) * z;
  for (Index b = 0; b < nz; ++b)
    diag(b) = std::exp(e * std::log(lamj_(b) * lamk_(b)));
  return diag.asDiagonal();
}

Mat Hypergroup::tau_matrix(Scalar z) const {
  const Index nz = size();
  Vec diag(nz);
  const Scalar e = Scalar(0, 0.5) * z;
  for (Index b = 0; b < nz; ++b)
    diag(b) = std::exp(e * std::log(lamk_(b) / lamj_(b)));
  return diag.asDiagonal();
}

Vec Hypergroup::theta_map(const Vec& g) const { return theta_mat_ * g; }

Vec Hypergroup::convolve_dual(const Vec& omega, const Vec& omega_prime) const {
  const Index nz = size();
  Vec out(nz);
  for (Index b = 0; b < nz; ++b) {
    const Mat d = comultiply(Vec::Unit(nz, b));
    out(b) = (omega.transpose() * d * omega_prime)(0, 0);
  }
  return out;
}

Vec Hypergroup::star_dual(const Vec& omega) const {
  const Index nz = size();
  Vec out(nz);
  for (Index b = 0; b < nz; ++b) {
    const Vec w = zalg_.star_of(Vec(smat_.col(b)));
    out(b) = std::conj(apply_functional(omega, w));
  }
  return out;
}

Mat Hypergroup::dual_rep(const Vec& omega, Index block) const {
  const Index m = act_->block(block).m;
  Mat out(m, m);
  for (Index j = 0; j < m; ++j)
    for (Index k = 0; k < m; ++k)
      out(j, k) = omega(basis_index(block, j, k));
  return out;
}

Mat Hypergroup::gns_ambient(const Vec& ambient) const {
  const Index p = act_->dim();
  Mat out = Mat::Zero(p * p, p * p);
  for (Index a = 0; a < p; ++a) {
    Mat wa = Mat::Zero(p, p);
    bool nonzero = false;
    for (Index b = 0; b < p; ++b) {
      const Scalar c = ambient(a * p + b);
      if (c != Scalar(0)) {
        wa += c * gns_left_abar_[static_cast<size_t>(b)];
        nonzero = true;
      }
    }
    if (nonzero) out += kron(gns_left_a_[static_cast<size_t>(a)], wa);
  }
  return out;
}

Hypergroup Hypergroup::build(const ErgodicAction& act, const Tolerance& tol,
                             bool strict) {
  Hypergroup h;
  h.act_ = &act;
  const Index p = act.dim();
  const QuantumGroup& qg = act.qg();
  const IrrepTable& table = act.table();
  CheckList checks;

  // Z-basis embeddings z_{pi,j,k} = sum_l X(f_j, e_l) (x) Y(e_l, f_k).
  for (Index blk = 0; blk < static_cast<Index>(act.blocks().size()); ++blk) {
    const SpectralBlock& sb = act.block(blk);
    const Irrep& ir = table.at(sb.pi);
    for (Index j = 0; j < sb.m; ++j)
      for (Index k = 0; k < sb.m; ++k)
        h.labels_.push_back({blk, j, k});
    (void)ir;
  }
  const Index nz = static_cast<Index>(h.labels_.size());
  if (nz == 0) throw Error(ErrorCode::Internal, "empty hypergroup basis");

  h.zmat_ = Mat::Zero(p * p, nz);
  h.lamj_ = RealVec::Ones(nz);
  h.lamk_ = RealVec::Ones(nz);
  for (Index b = 0; b < nz; ++b) {
    const ZLabel& lb = h.labels_[static_cast<size_t>(b)];
    const SpectralBlock& sb = act.block(lb.block);
    const Irrep& ir = table.at(sb.pi);
    const Index d = ir.corep.d;
    Vec v = Vec::Zero(p * p);
    for (Index l = 0; l < d; ++l) {
      const Vec x = act.x_coeff(sb, lb.j, Vec::Unit(d, l));
      const Vec y = act.y_coeff(sb, Vec::Unit(d, l), lb.k);
      for (Index a = 0; a < p; ++a)
        if (x(a) != Scalar(0)) v.segment(a * p, p) += x(a) * y;
    }
    h.zmat_.col(b) = v;
    h.lamj_(b) = sb.delta_eigs(lb.j);
    h.lamk_(b) = sb.delta_eigs(lb.k);
  }

  // Linear independence.
  const Index rank = numerical_rank(h.zmat_, tol, 1.0);
  checks.add("z-basis-independent",
             rank == nz ? 0.0 : std::abs(double(nz - rank)), nz, tol.eps);
  h.expander_ = Eigen::ColPivHouseholderQR<Mat>(h.zmat_);

  // Cotensor membership (alpha (.) id)(z) = (id (.) bar-alpha)(z).
  {
    const Index n = qg.dim();
    double num = 0.0, den = 0.0;
    for (Index b = 0; b < nz; ++b) {
      Vec vl = Vec::Zero(p * n * p), vr = Vec::Zero(p * n * p);
      for (Index a = 0; a < p; ++a)
        for (Index bb = 0; bb < p; ++bb) {
          const Scalar c = h.zmat_(a * p + bb, b);
          if (c == Scalar(0)) continue;
          const Mat& sa = act.apply_alpha(Vec::Unit(p, a));
          for (Index a2 = 0; a2 < p; ++a2)
            for (Index m = 0; m < n; ++m)
              vl((a2 * n + m) * p + bb) += c * sa(a2, m);
          const Mat& sb2 = act.apply_alpha_bar(Vec::Unit(p, bb));
          for (Index m = 0; m < n; ++m)
            for (Index b2 = 0; b2 < p; ++b2)
              vr((a * n + m) * p + b2) += c * sb2(m, b2);
        }
      num += (vl - vr).squaredNorm();
      den += std::max(vl.squaredNorm(), vr.squaredNorm());
    }
    checks.add("cotensor-membership", rel_residual(std::sqrt(num), std::sqrt(den)),
               nz, tol.eps * 10);
  }

  // Product closure: expand every z_a z_b over the basis.
  h.zalg_.dim = nz;
  h.zalg_.mult = ComplexTensor({nz, nz, nz});
  double closure = 0.0;
  const AlgebraSpec& abar = act.conjugate_algebra_spec();
  for (Index a = 0; a < nz; ++a) {
    Mat xa(p, p);
    for (Index i = 0; i < p; ++i)
      for (Index j = 0; j < p; ++j) xa(i, j) = h.zmat_(i * p + j, a);
    for (Index b = 0; b < nz; ++b) {
      Mat xb(p, p);
      for (Index i = 0; i < p; ++i)
        for (Index j = 0; j < p; ++j) xb(i, j) = h.zmat_(i * p + j, b);
      const Mat prod = tensor_mul(act.algebra(), abar, xa, xb);
      Vec flat(p * p);
      for (Index i = 0; i < p; ++i)
        for (Index j = 0; j < p; ++j) flat(i * p + j) = prod(i, j);
      double res = 0.0;
      const Vec coeffs = h.expand(flat, &res);
      closure = std::max(closure, res);
      for (Index c = 0; c < nz; ++c)
        h.zalg_.mult.data()((a * nz + b) * nz + c) = coeffs(c);
    }
  }
  checks.add("z-product-closure", closure, nz * nz, tol.eps * 100);
  if (strict && closure > tol.eps * 100)
    throw Error(ErrorCode::ClosureFailure,
                "Z-basis product expansion residual too large", "closure",
                closure);

  // Unit and star of the ambient algebra, re-expanded.
  {
    Vec unit_ambient = kron(act.algebra().unit, abar.unit);
    double res = 0.0;
    h.zalg_.unit = h.expand(unit_ambient, &res);
    checks.add("z-unit-membership", res, 1, tol.eps * 10);

    h.zalg_.star = Mat::Zero(nz, nz);
    double star_res = 0.0;
    for (Index b = 0; b < nz; ++b) {
      Mat xb(p, p);
      for (Index i = 0; i < p; ++i)
        for (Index j = 0; j < p; ++j) xb(i, j) = h.zmat_(i * p + j, b);
      const Mat st = tensor_star(act.algebra(), abar, xb);
      Vec flat(p * p);
      for (Index i = 0; i < p; ++i)
        for (Index j = 0; j < p; ++j) flat(i * p + j) = st(i, j);
      double res2 = 0.0;
      // coords(z^*) = star * conj(coords), so column b is z_b^* expanded.
      h.zalg_.star.col(b) = h.expand(flat, &res2);
      star_res = std::max(star_res, res2);
    }
    checks.add("z-star-closure", star_res, nz, tol.eps * 10);
  }

  // Counit, antipode, integral.
  h.counit_ = Vec::Zero(nz);
  for (Index b = 0; b < nz; ++b)
    h.counit_(b) = h.labels_[static_cast<size_t>(b)].j ==
                           h.labels_[static_cast<size_t>(b)].k
                       ? 1.0
                       : 0.0;
  h.smat_ = Mat::Zero(nz, nz);
  h.rmat_ = Mat::Zero(nz, nz);
  for (Index b = 0; b < nz; ++b) {
    const ZLabel& lb = h.labels_[static_cast<size_t>(b)];
    const Index swapped = h.basis_index(lb.block, lb.k, lb.j);
    const Vec starred = h.zalg_.star_of(Vec::Unit(nz, swapped));
    h.smat_.col(b) = starred;
    // R(Z(mu,nu)) = Z(dX^{-1/4} nu, dX^{1/4} mu)^*
    h.rmat_.col(b) = std::pow(h.lamk_(b), -0.25) * std::pow(h.lamj_(b), 0.25) *
                     starred;
  }
  const Vec phibar = act.conjugate_state();
  h.phi_ = Vec::Zero(nz);
  for (Index b = 0; b < nz; ++b) {
    Scalar s = 0.0;
    for (Index i = 0; i < p; ++i)
      for (Index j = 0; j < p; ++j)
        s += h.zmat_(i * p + j, b) * act.invariant_state()(i) * phibar(j);
    h.phi_(b) = s;
  }

  // theta: expand O(G) over irreducible matrix coefficients, then
  // theta(U_pi(e_i, e_j)) = sum_l Y(e_i, f_l) (x) X(f_l, e_j) on Abar (x) A.
  {
    const Index n = qg.dim();
    Mat ucols = Mat::Zero(n, n);
    Mat theta_u = Mat::Zero(p * p, n);
    Index col = 0;
    for (Index blk = 0; blk < static_cast<Index>(act.blocks().size()); ++blk) {
      const SpectralBlock& sb = act.block(blk);
      const Irrep& ir = table.at(sb.pi);
      const Index d = ir.corep.d;
      for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j) {
          ucols.col(col) = ir.corep.entry(i, j);
          Vec th = Vec::Zero(p * p);
          for (Index l = 0; l < sb.m; ++l) {
            const Vec y = act.y_coeff(sb, Vec::Unit(d, i), l);
            const Vec x = act.x_coeff(sb, l, Vec::Unit(d, j));
            for (Index bb = 0; bb < p; ++bb)
              if (y(bb) != Scalar(0)) th.segment(bb * p, p) += y(bb) * x;
          }
          theta_u.col(col) = th;
          ++col;
        }
    }
    if (col != n)
      throw Error(ErrorCode::Internal,
                  "matrix coefficients do not span O(G): " + std::to_string(col));
    Eigen::ColPivHouseholderQR<Mat> uqr(ucols);
    const Mat to_u = uqr.inverse();
    checks.add("matrix-coefficient-basis",
               rel_residual(ucols * to_u, Mat::Identity(n, n)), n, tol.eps * 10);
    h.theta_mat_ = theta_u * to_u;
  }

  // GNS data for the reduced norm.
  h.gns_a_ = gns_rep(act.algebra(), act.invariant_state(), tol);
  h.gns_abar_ = gns_rep(abar, phibar, tol);
  for (Index a = 0; a < p; ++a) {
    h.gns_left_a_.push_back(
        h.gns_a_.represent(act.algebra(), Vec::Unit(p, a)));
    h.gns_left_abar_.push_back(h.gns_abar_.represent(abar, Vec::Unit(p, a)));
  }

  if (strict) checks.require(ErrorCode::ClosureFailure);
  h.audit_ = checks;
  return h;
}

}  // namespace cqh
