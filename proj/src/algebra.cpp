#include "cqh/algebra.hpp"

#include <algorithm>

#include "cqh/linalg.hpp"

namespace cqh {

void CheckList::add(std::string name, double residual, Index operands,
                    double eps) {
  items_.push_back({std::move(name), residual, operands, residual <= eps});
}

void CheckList::add_failure(std::string name, double residual,
                            std::string message) {
  (void)message;
  items_.push_back({std::move(name), residual, 0, false});
}

void CheckList::merge(const CheckList& other) {
  items_.insert(items_.end(), other.items_.begin(), other.items_.end());
}

bool CheckList::all_pass() const {
  return std::all_of(items_.begin(), items_.end(),
                     [](const CheckItem& c) { return c.pass; });
}

double CheckList::residual_of(const std::string& name) const {
  for (const auto& c : items_)
    if (c.name == name) return c.residual;
  throw Error(ErrorCode::Internal, "no check named " + name);
}

void CheckList::require(ErrorCode code) const {
  for (const auto& c : items_)
    if (!c.pass) throw Error(code, "identity violated: " + c.name, c.name,
                             c.residual);
}

Vec AlgebraSpec::mul(const Vec& x, const Vec& y) const {
  // result_k = sum_{ij} x_i y_j mult[i,j,k]
  using RowMat =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const RowMat> mflat(mult.data().data(), dim * dim, dim);
  Vec xy(dim * dim);
  for (Index i = 0; i < dim; ++i) xy.segment(i * dim, dim) = x(i) * y;
  return mflat.transpose() * xy;
}

Vec AlgebraSpec::star_of(const Vec& x) const { return star * x.conjugate(); }

Mat AlgebraSpec::left_mult(const Vec& x) const {
  Mat l = Mat::Zero(dim, dim);
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j)
      for (Index k = 0; k < dim; ++k) l(k, j) += x(i) * mult_entry(i, j, k);
  return l;
}

Mat AlgebraSpec::pairing_matrix(const Vec& phi) const {
  Mat b = Mat::Zero(dim, dim);
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j) {
      Scalar s = 0.0;
      for (Index k = 0; k < dim; ++k) s += mult_entry(i, j, k) * phi(k);
      b(i, j) = s;
    }
  return b;
}

Mat AlgebraSpec::gram(const Vec& phi) const {
  return star.transpose() * pairing_matrix(phi);
}

CheckList AlgebraSpec::verify_axioms(const Tolerance& tol) const {
  CheckList checks;

  // Associativity: sum_p M_{ijp} M_{pkl} = sum_q M_{jkq} M_{iql}.
  ComplexTensor left4 = contract(mult, mult, {{2, 0}});   // [i,j,k,l]
  ComplexTensor right4 = contract(mult, mult, {{2, 1}});  // [j,k,i,l]
  ComplexTensor right = right4.permuted({2, 0, 1, 3});
  const double assoc = (left4.data() - right.data()).norm();
  checks.add("algebra-associativity",
             rel_residual(assoc, std::max(left4.norm(), right.norm())),
             dim * dim * dim, tol.eps);

  // Unit law.
  Mat lu = left_mult(unit);
  Mat ru = Mat::Zero(dim, dim);
  for (Index j = 0; j < dim; ++j)
    for (Index i = 0; i < dim; ++i)
      for (Index k = 0; k < dim; ++k) ru(k, i) += unit(j) * mult_entry(i, j, k);
  checks.add("algebra-unit-left", rel_residual(lu, Mat::Identity(dim, dim)),
             dim, tol.eps);
  checks.add("algebra-unit-right", rel_residual(ru, Mat::Identity(dim, dim)),
             dim, tol.eps);

  // Star: involution, unit fixed, antimultiplicative.
  const Mat inv = star * star.conjugate();
  checks.add("star-involution", rel_residual(inv, Mat::Identity(dim, dim)),
             dim, tol.eps);
  checks.add("star-unit",
             rel_residual((star_of(unit) - unit).norm(), unit.norm()), 1,
             tol.eps);
  double anti = 0.0, scale = 0.0;
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j) {
      Vec ei = Vec::Unit(dim, i), ej = Vec::Unit(dim, j);
      Vec lhs = star_of(mul(ei, ej));
      Vec rhs = mul(star_of(ej), star_of(ei));
      anti += (lhs - rhs).squaredNorm();
      scale += rhs.squaredNorm();
    }
  checks.add("star-antimultiplicative",
             rel_residual(std::sqrt(anti), std::sqrt(scale)), dim * dim,
             tol.eps);
  return checks;
}

namespace {

ComplexTensor kron_tensor3(const ComplexTensor& a, const ComplexTensor& b,
                           Index na, Index nb) {
  // (a (x) b)[(i1 i2),(j1 j2),(k1 k2)] = a[i1,j1,k1] b[i2,j2,k2]
  const Index n = na * nb;
  ComplexTensor out({n, n, n});
  for (Index i1 = 0; i1 < na; ++i1)
    for (Index j1 = 0; j1 < na; ++j1)
      for (Index k1 = 0; k1 < na; ++k1) {
        const Scalar va = a.data()((i1 * na + j1) * na + k1);
        if (va == Scalar(0)) continue;
        for (Index i2 = 0; i2 < nb; ++i2)
          for (Index j2 = 0; j2 < nb; ++j2)
            for (Index k2 = 0; k2 < nb; ++k2) {
              const Scalar vb = b.data()((i2 * nb + j2) * nb + k2);
              if (vb == Scalar(0)) continue;
              const Index i = i1 * nb + i2, j = j1 * nb + j2, k = k1 * nb + k2;
              out.data()((i * n + j) * n + k) = va * vb;
            }
      }
  return out;
}

}  // namespace

AlgebraSpec algebra_tensor(const AlgebraSpec& a, const AlgebraSpec& b) {
  AlgebraSpec out;
  out.dim = a.dim * b.dim;
  out.mult = kron_tensor3(a.mult, b.mult, a.dim, b.dim);
  out.unit = kron(a.unit, b.unit);
  out.star = kron(a.star, b.star);
  return out;
}

AlgebraSpec conjugate_algebra(const AlgebraSpec& a) {
  AlgebraSpec out;
  out.dim = a.dim;
  out.mult = ComplexTensor(a.mult.shape(), a.mult.data().conjugate());
  out.unit = a.unit.conjugate();
  out.star = a.star.conjugate();
  return out;
}

Mat tensor_mul(const AlgebraSpec& a, const AlgebraSpec& b, const Mat& x,
               const Mat& y) {
  const Index pa = a.dim, pb = b.dim;
  Mat out = Mat::Zero(pa, pb);
  Mat mz(pb, pb);
  for (Index z = 0; z < pb; ++z) {
    for (Index u = 0; u < pb; ++u)
      for (Index v = 0; v < pb; ++v) mz(u, v) = b.mult_entry(u, v, z);
    const Mat inner = x * mz * y.transpose();
    for (Index c = 0; c < pa; ++c) {
      Scalar s = 0.0;
      for (Index i = 0; i < pa; ++i)
        for (Index j = 0; j < pa; ++j) s += a.mult_entry(i, j, c) * inner(i, j);
      out(c, z) = s;
    }
  }
  return out;
}

Mat tensor_star(const AlgebraSpec& a, const AlgebraSpec& b, const Mat& x) {
  return a.star * x.conjugate() * b.star.transpose();
}

Mat modular_map(const AlgebraSpec& alg, const Vec& phi, const Tolerance& tol) {
  const Mat b = alg.pairing_matrix(phi);
  Eigen::FullPivLU<Mat> lu(b);
  lu.setThreshold(tol.eps);
  if (!lu.isInvertible())
    throw Error(ErrorCode::GramSingular,
                "modular_map: pairing matrix singular (functional not faithful)");
  // phi(ab) = phi(b sigma(a))  <=>  sigma = B^{-1} B^T on coordinates.
  return lu.solve(b.transpose());
}

GnsRep gns_rep(const AlgebraSpec& alg, const Vec& phi, const Tolerance& tol) {
  const Mat g = hermitize_checked(alg.gram(phi), tol);
  EigenPairs ep = hermitian_eigs(g, tol);
  const double lmax = ep.values(alg.dim - 1);
  if (lmax <= 0.0 || ep.values(0) <= tol.eps * lmax)
    throw Error(ErrorCode::GramSingular, "gns_rep: gram matrix singular");
  Vec sq(alg.dim), isq(alg.dim);
  for (Index i = 0; i < alg.dim; ++i) {
    sq(i) = std::sqrt(ep.values(i));
    isq(i) = 1.0 / std::sqrt(ep.values(i));
  }
  GnsRep rep;
  rep.to_ortho = ep.vectors * sq.asDiagonal() * ep.vectors.adjoint();
  rep.from_ortho = ep.vectors * isq.asDiagonal() * ep.vectors.adjoint();
  return rep;
}

}  // namespace cqh
