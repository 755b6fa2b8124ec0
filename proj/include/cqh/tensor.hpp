#ifndef CQH_TENSOR_HPP_
#define CQH_TENSOR_HPP_

#include <utility>
#include <vector>

#include "cqh/types.hpp"

namespace cqh {

// Dense multi-index array of complex scalars, row-major.  The universal
// carrier for structure constants, coefficient matrices and coaction tensors.
class ComplexTensor {
 public:
  ComplexTensor() = default;

  explicit ComplexTensor(std::vector<Index> shape)
      : shape_(std::move(shape)), data_(Vec::Zero(size_of(shape_))) {}

  ComplexTensor(std::vector<Index> shape, Vec data)
      : shape_(std::move(shape)), data_(std::move(data)) {
    if (data_.size() != size_of(shape_))
      throw Error(ErrorCode::Schema, "ComplexTensor: data/shape mismatch");
    require_finite();
  }

  static ComplexTensor from_matrix(const Mat& m);

  Index rank() const { return static_cast<Index>(shape_.size()); }
  const std::vector<Index>& shape() const { return shape_; }
  Index extent(Index axis) const { return shape_.at(static_cast<size_t>(axis)); }
  Index size() const { return data_.size(); }

  const Vec& data() const { return data_; }
  Vec& data() { return data_; }

  Scalar& at(const std::vector<Index>& idx) { return data_(offset(idx)); }
  Scalar at(const std::vector<Index>& idx) const { return data_(offset(idx)); }

  // Rank-2 view as an Eigen matrix (copies).
  Mat as_matrix() const;

  ComplexTensor permuted(const std::vector<Index>& perm) const;
  ComplexTensor reshaped(std::vector<Index> shape) const;

  double norm() const { return data_.norm(); }

  void require_finite() const;

  static Index size_of(const std::vector<Index>& shape) {
    Index s = 1;
    for (Index e : shape) s *= e;
    return s;
  }

 private:
  Index offset(const std::vector<Index>& idx) const;

  std::vector<Index> shape_;
  Vec data_;
};

using AxisPair = std::pair<Index, Index>;

// Standard tensor contraction over the given axis pairs; an empty list is the
// outer product.  Bilinear in both arguments.
ComplexTensor contract(const ComplexTensor& a, const ComplexTensor& b,
                       const std::vector<AxisPair>& axes);

}  // namespace cqh

#endif  // CQH_TENSOR_HPP_
