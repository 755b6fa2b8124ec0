#include "cqh/tensor.hpp"

#include <algorithm>
#include <cmath>

namespace cqh {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::Schema: return "SchemaError";
    case ErrorCode::AxiomViolation: return "AxiomViolation";
    case ErrorCode::NoHaar: return "NoHaar";
    case ErrorCode::HaarNotPositive: return "HaarNotPositive";
    case ErrorCode::GramSingular: return "GramSingular";
    case ErrorCode::NotKac: return "NotKac";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::NotCoaction: return "NotCoaction";
    case ErrorCode::NotErgodic: return "NotErgodic";
    case ErrorCode::NotScalar: return "NotScalar";
    case ErrorCode::InnerProductNotScalar: return "InnerProductNotScalar";
    case ErrorCode::DeltaNotPositive: return "DeltaNotPositive";
    case ErrorCode::ExtractionInconsistent: return "ExtractionInconsistent";
    case ErrorCode::ClosureFailure: return "ClosureFailure";
    case ErrorCode::DecompositionStalled: return "DecompositionStalled";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::ImageNotCoideal: return "ImageNotCoideal";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ComultMismatch: return "ComultMismatch";
    case ErrorCode::NonIntegerFusion: return "NonIntegerFusion";
    case ErrorCode::InvalidQ: return "InvalidQ";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::Internal: return "InternalError";
  }
  return "UnknownError";
}

ComplexTensor ComplexTensor::from_matrix(const Mat& m) {
  Vec data(m.rows() * m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) data(i * m.cols() + j) = m(i, j);
  return ComplexTensor({m.rows(), m.cols()}, std::move(data));
}

Mat ComplexTensor::as_matrix() const {
  if (rank() != 2)
    throw Error(ErrorCode::Schema, "ComplexTensor::as_matrix: rank != 2");
  Mat m(shape_[0], shape_[1]);
  for (Index i = 0; i < shape_[0]; ++i)
    for (Index j = 0; j < shape_[1]; ++j) m(i, j) = data_(i * shape_[1] + j);
  return m;
}

void ComplexTensor::require_finite() const {
  for (Index i = 0; i < data_.size(); ++i) {
    const Scalar v = data_(i);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw Error(ErrorCode::Schema, "ComplexTensor: non-finite entry");
  }
}

Index ComplexTensor::offset(const std::vector<Index>& idx) const {
  if (idx.size() != shape_.size())
    throw Error(ErrorCode::Schema, "ComplexTensor: index rank mismatch");
  Index off = 0;
  for (size_t a = 0; a < shape_.size(); ++a) {
    if (idx[a] < 0 || idx[a] >= shape_[a])
      throw Error(ErrorCode::Schema, "ComplexTensor: index out of range");
    off = off * shape_[a] + idx[a];
  }
  return off;
}

namespace {

std::vector<Index> strides_of(const std::vector<Index>& shape) {
  std::vector<Index> s(shape.size(), 1);
  for (Index a = static_cast<Index>(shape.size()) - 2; a >= 0; --a)
    s[static_cast<size_t>(a)] =
        s[static_cast<size_t>(a) + 1] * shape[static_cast<size_t>(a) + 1];
  return s;
}

}  // namespace

ComplexTensor ComplexTensor::permuted(const std::vector<Index>& perm) const {
  const size_t r = shape_.size();
  if (perm.size() != r)
    throw Error(ErrorCode::Schema, "ComplexTensor::permuted: bad permutation");
  std::vector<Index> nshape(r);
  for (size_t a = 0; a < r; ++a) nshape[a] = shape_[static_cast<size_t>(perm[a])];
  const std::vector<Index> ostr = strides_of(shape_);
  ComplexTensor out(nshape);
  std::vector<Index> idx(r, 0);
  for (Index lin = 0; lin < data_.size(); ++lin) {
    // idx enumerates the output tensor in row-major order.
    Index src = 0;
    for (size_t a = 0; a < r; ++a)
      src += idx[a] * ostr[static_cast<size_t>(perm[a])];
    out.data()(lin) = data_(src);
    for (Index a = static_cast<Index>(r) - 1; a >= 0; --a) {
      if (++idx[static_cast<size_t>(a)] < nshape[static_cast<size_t>(a)]) break;
      idx[static_cast<size_t>(a)] = 0;
    }
  }
  return out;
}

ComplexTensor ComplexTensor::reshaped(std::vector<Index> shape) const {
  if (size_of(shape) != data_.size())
    throw Error(ErrorCode::Schema, "ComplexTensor::reshaped: size mismatch");
  return ComplexTensor(std::move(shape), data_);
}

ComplexTensor contract(const ComplexTensor& a, const ComplexTensor& b,
                       const std::vector<AxisPair>& axes) {
  a.require_finite();
  b.require_finite();
  const Index ra = a.rank(), rb = b.rank();
  std::vector<bool> ca(static_cast<size_t>(ra), false),
      cb(static_cast<size_t>(rb), false);
  Index k = 1;
  for (const auto& [ia, ib] : axes) {
    if (ia < 0 || ia >= ra || ib < 0 || ib >= rb)
      throw Error(ErrorCode::Schema, "contract: axis out of range");
    if (ca[static_cast<size_t>(ia)] || cb[static_cast<size_t>(ib)])
      throw Error(ErrorCode::Schema, "contract: repeated axis");
    if (a.extent(ia) != b.extent(ib))
      throw Error(ErrorCode::Schema, "contract: paired extents differ");
    ca[static_cast<size_t>(ia)] = true;
    cb[static_cast<size_t>(ib)] = true;
    k *= a.extent(ia);
  }

  // Move contracted axes of `a` to the back and of `b` to the front, then one
  // GEMM does the whole contraction.
  std::vector<Index> pa, pb;
  std::vector<Index> out_shape;
  for (Index i = 0; i < ra; ++i)
    if (!ca[static_cast<size_t>(i)]) {
      pa.push_back(i);
      out_shape.push_back(a.extent(i));
    }
  for (const auto& [ia, ib] : axes) {
    pa.push_back(ia);
    (void)ib;
  }
  for (const auto& [ia, ib] : axes) {
    pb.push_back(ib);
    (void)ia;
  }
  for (Index i = 0; i < rb; ++i)
    if (!cb[static_cast<size_t>(i)]) {
      pb.push_back(i);
      out_shape.push_back(b.extent(i));
    }

  using RowMat =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const Index m = a.size() / std::max<Index>(k, 1);
  const Index n = b.size() / std::max<Index>(k, 1);
  const ComplexTensor ap = a.permuted(pa), bp = b.permuted(pb);
  Eigen::Map<const RowMat> ma(ap.data().data(), m, k);
  Eigen::Map<const RowMat> mb(bp.data().data(), k, n);
  RowMat prod = ma * mb;

  Vec out = Eigen::Map<const Vec>(prod.data(), m * n);
  if (out_shape.empty()) out_shape.push_back(1);  // scalar as a 1-tensor
  return ComplexTensor(out_shape, std::move(out));
}

}  // namespace cqh
