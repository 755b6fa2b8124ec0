#include "cqh/corep.hpp"

#include <algorithm>
#include <cmath>

#include "cqh/linalg.hpp"

namespace cqh {

namespace {

// mult tensor slice (M_c)_{ab} = mult[a,b,c]
Mat mult_slice(const AlgebraSpec& alg, Index c) {
  Mat m(alg.dim, alg.dim);
  for (Index a = 0; a < alg.dim; ++a)
    for (Index b = 0; b < alg.dim; ++b) m(a, b) = alg.mult_entry(a, b, c);
  return m;
}

Mat star_all_rows(const AlgebraSpec& alg, const Mat& rows) {
  return rows.conjugate() * alg.star.transpose();
}

}  // namespace

Vec Corep::character() const {
  Vec chi = Vec::Zero(coeff.cols());
  for (Index i = 0; i < d; ++i) chi += coeff.row(i * d + i).transpose();
  return chi;
}

Corep trivial_corep(const QuantumGroup& qg) {
  Corep c;
  c.d = 1;
  c.coeff = qg.unit().transpose();
  return c;
}

Corep regular_corep(const QuantumGroup& qg) {
  const Index n = qg.dim();
  const GnsRep rep = gns_rep(qg.algebra(), qg.haar(), Tolerance(1e-12));
  const Mat& p = rep.from_ortho;  // columns: orthonormal basis in e-coords
  const Mat& pinv = rep.to_ortho;
  Corep c;
  c.d = n;
  c.coeff = Mat::Zero(n * n, n);
  // Delta(f_b) = sum_a f_a (x) v_{ab};  v_{ab} = sum_{i,k} P_{ib} Pinv_{ak} C[i,k,:]
  for (Index b = 0; b < n; ++b) {
    // t_kl = sum_i P_{ib} C[i,k,l]
    Mat t = Mat::Zero(n, n);
    for (Index i = 0; i < n; ++i) {
      if (p(i, b) == Scalar(0)) continue;
      for (Index k = 0; k < n; ++k)
        for (Index l = 0; l < n; ++l)
          t(k, l) += p(i, b) * qg.comult_tensor().data()((i * n + k) * n + l);
    }
    const Mat v = pinv * t;  // v(a, l)
    for (Index a = 0; a < n; ++a) c.coeff.row(a * n + b) = v.row(a);
  }
  return c;
}

double corep_law_residual(const QuantumGroup& qg, const Corep& c) {
  const Index n = qg.dim(), d = c.d;
  double num = 0.0, den = 0.0;
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      const Vec lhs = qg.comultiply(c.entry(i, j));
      Vec rhs = Vec::Zero(n * n);
      for (Index k = 0; k < d; ++k) {
        const Vec uik = c.entry(i, k), ukj = c.entry(k, j);
        for (Index a = 0; a < n; ++a)
          if (uik(a) != Scalar(0)) rhs.segment(a * n, n) += uik(a) * ukj;
      }
      num += (lhs - rhs).squaredNorm();
      den += std::max(lhs.squaredNorm(), rhs.squaredNorm());
    }
  return rel_residual(std::sqrt(num), std::sqrt(den));
}

double unitarity_residual(const QuantumGroup& qg, const Corep& c) {
  const AlgebraSpec& alg = qg.algebra();
  const Index n = alg.dim, d = c.d;
  const Mat starred = star_all_rows(alg, c.coeff);  // row (i*d+j) = (u_ij)^*
  double num = 0.0, den = 0.0;
  // (U^*U)_{ij} = sum_k (u_{ki})^* u_{kj};  (UU^*)_{ij} = sum_k u_{ik} (u_{jk})^*
  for (Index cidx = 0; cidx < n; ++cidx) {
    const Mat mc = mult_slice(alg, cidx);
    Mat acc1 = Mat::Zero(d, d), acc2 = Mat::Zero(d, d);
    for (Index k = 0; k < d; ++k) {
      Mat sk(d, n), ck(d, n), rk(d, n), qk(d, n);
      for (Index i = 0; i < d; ++i) {
        sk.row(i) = starred.row(k * d + i);  // (u_ki)^*
        ck.row(i) = c.coeff.row(k * d + i);  // u_ki
        rk.row(i) = c.coeff.row(i * d + k);  // u_ik
        qk.row(i) = starred.row(i * d + k);  // (u_ik)^*
      }
      acc1 += sk * mc * ck.transpose();
      acc2 += rk * mc * qk.transpose();
    }
    const Mat target = Mat::Identity(d, d) * alg.unit(cidx);
    num += (acc1 - target).squaredNorm() + (acc2 - target).squaredNorm();
    den += 2.0 * std::max(1.0, target.squaredNorm());
  }
  return rel_residual(std::sqrt(num), std::sqrt(den));
}

Corep direct_sum(const QuantumGroup& qg, const Corep& a, const Corep& b) {
  const Index n = qg.dim(), d = a.d + b.d;
  Corep c;
  c.d = d;
  c.coeff = Mat::Zero(d * d, n);
  for (Index i = 0; i < a.d; ++i)
    for (Index j = 0; j < a.d; ++j) c.coeff.row(i * d + j) = a.coeff.row(i * a.d + j);
  for (Index i = 0; i < b.d; ++i)
    for (Index j = 0; j < b.d; ++j)
      c.coeff.row((a.d + i) * d + (a.d + j)) = b.coeff.row(i * b.d + j);
  return c;
}

Corep tensor(const QuantumGroup& qg, const Corep& a, const Corep& b) {
  const Index d = a.d * b.d;
  Corep c;
  c.d = d;
  c.coeff = Mat::Zero(d * d, qg.dim());
  for (Index i = 0; i < a.d; ++i)
    for (Index k = 0; k < b.d; ++k)
      for (Index j = 0; j < a.d; ++j)
        for (Index l = 0; l < b.d; ++l) {
          const Index row = (i * b.d + k) * d + (j * b.d + l);
          c.coeff.row(row) =
              qg.mul(a.entry(i, j), b.entry(k, l)).transpose();
        }
  return c;
}

Corep conjugate(const QuantumGroup& qg, const Corep& a) {
  Corep c;
  c.d = a.d;
  c.coeff = Mat::Zero(a.d * a.d, qg.dim());
  for (Index i = 0; i < a.d; ++i)
    for (Index j = 0; j < a.d; ++j)
      c.coeff.row(i * a.d + j) =
          (qg.unitary_antipode() * a.entry(j, i)).transpose();
  return c;
}

std::vector<Mat> intertwiners(const QuantumGroup& qg, const Corep& a,
                              const Corep& b, const Tolerance& tol) {
  const Index n = qg.dim();
  Mat sys = Mat::Zero(b.d * a.d * n, b.d * a.d);
  // rows ((i,j),m): sum_k u^b_{ik,m} T_{kj} - sum_k T_{ik} u^a_{kj,m}
  for (Index i = 0; i < b.d; ++i)
    for (Index j = 0; j < a.d; ++j)
      for (Index m = 0; m < n; ++m) {
        const Index row = (i * a.d + j) * n + m;
        for (Index k = 0; k < b.d; ++k)
          sys(row, k * a.d + j) += b.coeff(i * b.d + k, m);
        for (Index k = 0; k < a.d; ++k)
          sys(row, i * a.d + k) -= a.coeff(k * a.d + j, m);
      }
  const double scale = std::max(a.coeff.norm(), b.coeff.norm());
  const Mat kernel = nullspace(sys, tol, scale);
  std::vector<Mat> out;
  for (Index c = 0; c < kernel.cols(); ++c) {
    Mat t(b.d, a.d);
    for (Index i = 0; i < b.d; ++i)
      for (Index j = 0; j < a.d; ++j) t(i, j) = kernel(i * a.d + j, c);
    out.push_back(t);
  }
  return out;
}

HomProjector::HomProjector(const QuantumGroup& qg, const Corep& a,
                           const Corep& b)
    : da_(a.d), db_(b.d) {
  const Mat w = qg.haar_pairing() * star_all_rows(qg.algebra(), a.coeff).transpose();
  phi_ = b.coeff * w;  // ((ik),(jl)) = phi(u^b_{ik} (u^a_{jl})^*)
}

Mat HomProjector::apply(const Mat& t) const {
  Mat out = Mat::Zero(db_, da_);
  for (Index i = 0; i < db_; ++i)
    for (Index j = 0; j < da_; ++j) {
      Scalar s = 0.0;
      for (Index k = 0; k < db_; ++k)
        for (Index l = 0; l < da_; ++l)
          s += phi_(i * db_ + k, j * da_ + l) * t(k, l);
      out(i, j) = s;
    }
  return out;
}

double HomProjector::dim_trace() const {
  Scalar tr = 0.0;
  for (Index i = 0; i < db_; ++i)
    for (Index j = 0; j < da_; ++j) tr += phi_(i * db_ + i, j * da_ + j);
  return tr.real();
}

namespace {

Corep compress(const QuantumGroup& qg, const Corep& c, const Mat& w) {
  const Index n = qg.dim(), dd = w.cols();
  Corep out;
  out.d = dd;
  out.coeff = Mat::Zero(dd * dd, n);
  for (Index m = 0; m < n; ++m) {
    Mat um(c.d, c.d);
    for (Index i = 0; i < c.d; ++i)
      for (Index j = 0; j < c.d; ++j) um(i, j) = c.coeff(i * c.d + j, m);
    const Mat cm = w.adjoint() * um * w;
    for (Index a = 0; a < dd; ++a)
      for (Index b = 0; b < dd; ++b) out.coeff(a * dd + b, m) = cm(a, b);
  }
  return out;
}

void decompose_into(const QuantumGroup& qg, const Corep& c, const Mat& embed,
                    const Tolerance& tol, Rng& rng, int depth,
                    std::vector<DecompositionPart>& out) {
  if (depth > 16)
    throw Error(ErrorCode::DecompositionStalled,
                "decompose: recursion depth exceeded");
  HomProjector proj(qg, c, c);
  const double end_dim = proj.dim_trace();
  if (std::abs(end_dim - 1.0) < 0.1) {
    out.push_back({c, embed});
    return;
  }

  for (int attempt = 0; attempt < 8; ++attempt) {
    Mat t = proj.apply(rng.hermitian(c.d));
    t = 0.5 * (t + t.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat> es(t);
    const RealVec vals = es.eigenvalues();
    const double scale = std::max(vals.cwiseAbs().maxCoeff(), 1.0);
    const auto clusters = cluster_eigenvalues(vals, 1e-7 * scale);
    if (clusters.size() < 2) continue;  // degenerate draw; retry
    for (const auto& [b0, b1] : clusters) {
      const Mat w = es.eigenvectors().middleCols(b0, b1 - b0);
      const Corep sub = compress(qg, c, w);
      decompose_into(qg, sub, embed * w, tol, rng, depth + 1, out);
    }
    return;
  }
  throw Error(ErrorCode::DecompositionStalled,
              "decompose: no splitting self-adjoint element found",
              "decomposition", end_dim);
}

}  // namespace

std::vector<DecompositionPart> decompose(const QuantumGroup& qg,
                                         const Corep& c, const Tolerance& tol,
                                         Rng rng) {
  std::vector<DecompositionPart> parts;
  decompose_into(qg, c, Mat::Identity(c.d, c.d), tol, rng, 0, parts);
  // Completeness of the isometries: sum w w^* = 1.
  Mat resolution = Mat::Zero(c.d, c.d);
  for (const auto& p : parts) resolution += p.isometry * p.isometry.adjoint();
  if (rel_residual(resolution, Mat::Identity(c.d, c.d)) > tol.eps * 100)
    throw Error(ErrorCode::DecompositionStalled,
                "decompose: isometries do not resolve the identity");
  return parts;
}

namespace {

// Deterministic fingerprint: character coordinates rounded to 1e-9.
bool fingerprint_less(const Vec& a, const Vec& b) {
  auto rounded = [](double x) { return std::round(x * 1e9); };
  for (Index i = 0; i < a.size(); ++i) {
    const double ar = rounded(a(i).real()), br = rounded(b(i).real());
    if (ar != br) return ar < br;
    const double ai = rounded(a(i).imag()), bi = rounded(b(i).imag());
    if (ai != bi) return ai < bi;
  }
  return false;
}

}  // namespace

IrrepTable irrep_table(const QuantumGroup& qg, const Tolerance& tol, Rng rng) {
  IrrepTable table;
  const Index n = qg.dim();
  const Corep reg = regular_corep(qg);
  table.audit.add("regular-corep-law", corep_law_residual(qg, reg), n, tol.eps);
  table.audit.add("regular-corep-unitary", unitarity_residual(qg, reg), n,
                  tol.eps);

  auto parts = decompose(qg, reg, tol, rng.fork(0x5EED));

  // Group the blocks into equivalence classes via characters + Schur check.
  std::vector<Irrep> classes;
  for (auto& p : parts) {
    const Vec chi = p.block.character();
    bool matched = false;
    for (auto& cls : classes) {
      if (cls.corep.d != p.block.d) continue;
      if ((cls.character - chi).norm() >
          1e-6 * std::max(1.0, cls.character.norm()))
        continue;
      HomProjector hom(qg, p.block, cls.corep);
      if (std::abs(hom.dim_trace() - 1.0) < 0.1) {
        cls.multiplicity_in_regular += 1;
        matched = true;
        break;
      }
    }
    if (!matched) {
      Irrep ir;
      ir.corep = p.block;
      ir.character = chi;
      ir.multiplicity_in_regular = 1;
      classes.push_back(std::move(ir));
    }
  }

  std::sort(classes.begin(), classes.end(), [](const Irrep& a, const Irrep& b) {
    if (a.corep.d != b.corep.d) return a.corep.d < b.corep.d;
    return fingerprint_less(a.character, b.character);
  });

  Index dim_sum = 0;
  double max_offdiag = 0.0, max_law = 0.0, max_unit = 0.0, max_delta_id = 0.0;
  for (size_t idx = 0; idx < classes.size(); ++idx) {
    Irrep& ir = classes[idx];
    ir.label = "pi" + std::to_string(idx);
    dim_sum += ir.corep.d * ir.corep.d;
    max_law = std::max(max_law, corep_law_residual(qg, ir.corep));
    max_unit = std::max(max_unit, unitarity_residual(qg, ir.corep));

    // Woronowicz matrix and quantum dimension.
    const Index d = ir.corep.d;
    Mat delta(d, d);
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j)
        delta(i, j) = apply_functional(qg.woronowicz_character(),
                                       ir.corep.entry(i, j));
    delta = 0.5 * (delta + delta.adjoint());
    ir.delta = delta;
    ir.delta_sqrt = positive_power(delta, 0.5, tol);
    ir.delta_inv_sqrt = positive_power(delta, -0.5, tol);
    ir.delta_quarter = positive_power(delta, 0.25, tol);
    ir.delta_inv_quarter = positive_power(delta, -0.25, tol);
    ir.dimq = ir.delta_sqrt.trace().real();
    max_delta_id = std::max(
        max_delta_id, rel_residual(delta, Mat::Identity(d, d)));
  }
  for (size_t a = 0; a < classes.size(); ++a)
    for (size_t b = 0; b < classes.size(); ++b) {
      if (a == b) continue;
      HomProjector hom(qg, classes[a].corep, classes[b].corep);
      max_offdiag = std::max(max_offdiag, std::abs(hom.dim_trace()));
    }

  table.audit.add("irrep-completeness",
                  dim_sum == n ? 0.0 : std::abs(double(dim_sum - n)), n,
                  tol.eps);
  table.audit.add("irrep-schur-offdiagonal", max_offdiag,
                  static_cast<Index>(classes.size()), 0.1);
  table.audit.add("irrep-corep-law", max_law,
                  static_cast<Index>(classes.size()), tol.eps);
  table.audit.add("irrep-unitarity", max_unit,
                  static_cast<Index>(classes.size()), tol.eps);
  table.audit.add("irrep-kac-delta-trivial", max_delta_id,
                  static_cast<Index>(classes.size()), 1e-10);

  table.irreps = std::move(classes);
  return table;
}

OrthogonalityReport verify_orthogonality(const IrrepTable& table,
                                         const QuantumGroup& qg) {
  OrthogonalityReport rep;
  const Mat& b = qg.haar_pairing();
  for (const auto& pa : table.irreps)
    for (const auto& pb : table.irreps) {
      const bool same = &pa == &pb;
      const Mat starred = star_all_rows(qg.algebra(), pb.corep.coeff);
      // first relation: phi(u^a_{ij} (u^b_{kl})^*)
      const Mat phi1 = pa.corep.coeff * b * starred.transpose();
      // second relation: phi((u^a_{ij})^* u^b_{kl})
      const Mat stara = star_all_rows(qg.algebra(), pa.corep.coeff);
      const Mat phi2 = stara * b * pb.corep.coeff.transpose();
      for (Index i = 0; i < pa.corep.d; ++i)
        for (Index j = 0; j < pa.corep.d; ++j)
          for (Index k = 0; k < pb.corep.d; ++k)
            for (Index l = 0; l < pb.corep.d; ++l) {
              Scalar expect1 = 0.0, expect2 = 0.0;
              if (same) {
                expect1 = (i == k ? pa.delta_inv_sqrt(l, j) / pa.dimq : 0.0);
                expect2 = (j == l ? pa.delta_sqrt(k, i) / pa.dimq : 0.0);
              }
              rep.residual_first =
                  std::max(rep.residual_first,
                           std::abs(phi1(i * pa.corep.d + j,
                                         k * pb.corep.d + l) -
                                    expect1));
              rep.residual_second =
                  std::max(rep.residual_second,
                           std::abs(phi2(i * pa.corep.d + j,
                                         k * pb.corep.d + l) -
                                    expect2));
            }
    }
  return rep;
}

}  // namespace cqh
