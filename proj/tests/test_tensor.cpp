#include "doctest.h"

#include "cqh/linalg.hpp"
#include "cqh/tensor.hpp"

using namespace cqh;

namespace {

ComplexTensor tensor_of(const Mat& m) { return ComplexTensor::from_matrix(m); }

Rng rng() { return Rng(0xC0FFEE); }

}  // namespace

TEST_CASE("contract: identity acts trivially") {
  Mat id = Mat::Identity(2, 2);
  Vec v(2);
  v << Scalar(1.0, 2.0), Scalar(-0.5, 0.25);
  ComplexTensor tv({2}, v);
  ComplexTensor out = contract(tensor_of(id), tv, {{1, 0}});
  CHECK(out.rank() == 1);
  CHECK((out.data() - v).norm() == doctest::Approx(0.0));
}

TEST_CASE("contract: empty axis list is the outer product") {
  auto r = rng();
  ComplexTensor a({2, 3}, r.cvector(6));
  ComplexTensor b({4}, r.cvector(4));
  ComplexTensor out = contract(a, b, {});
  REQUIRE(out.shape() == std::vector<Index>{2, 3, 4});
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 3; ++j)
      for (Index k = 0; k < 4; ++k)
        CHECK(out.at({i, j, k}) == a.at({i, j}) * b.at({k}));
}

TEST_CASE("contract: matrix product matches a naive triple loop") {
  auto r = rng();
  Mat a = r.cmatrix(2, 2), b = r.cmatrix(2, 2);
  ComplexTensor prod = contract(tensor_of(a), tensor_of(b), {{1, 0}});
  // brute-force oracle
  Mat expect = Mat::Zero(2, 2);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j)
      for (Index k = 0; k < 2; ++k) expect(i, j) += a(i, k) * b(k, j);
  CHECK((prod.as_matrix() - expect).norm() < 1e-14);
}

TEST_CASE("contract: associativity on random triples") {
  auto r = rng();
  for (int trial = 0; trial < 10; ++trial) {
    Mat a = r.cmatrix(3, 4), b = r.cmatrix(4, 5), c = r.cmatrix(5, 2);
    ComplexTensor ab_c = contract(contract(tensor_of(a), tensor_of(b), {{1, 0}}),
                                  tensor_of(c), {{1, 0}});
    ComplexTensor a_bc = contract(tensor_of(a),
                                  contract(tensor_of(b), tensor_of(c), {{1, 0}}),
                                  {{1, 0}});
    CHECK((ab_c.data() - a_bc.data()).norm() < 1e-12);
  }
}

TEST_CASE("contract: shape mismatch raises") {
  auto r = rng();
  ComplexTensor a({2, 3}, r.cvector(6));
  ComplexTensor b({4}, r.cvector(4));
  CHECK_THROWS_AS(contract(a, b, {{1, 0}}), Error);
}

TEST_CASE("nullspace: zero matrix has a full orthonormal kernel") {
  Mat z = Mat::Zero(3, 3);
  Mat k = nullspace(z, Tolerance(1e-9));
  REQUIRE(k.cols() == 3);
  CHECK((k.adjoint() * k - Mat::Identity(3, 3)).norm() < 1e-12);
}

TEST_CASE("nullspace: invertible matrix has empty kernel") {
  Mat m(2, 2);
  m << 1.0, 1.0, 0.0, 1.0;
  CHECK(nullspace(m, Tolerance(1e-9)).cols() == 0);
}

TEST_CASE("nullspace: rank-1 projector complement") {
  // p = v v^* / |v|^2; kernel of (1 - p) is spanned by v.
  auto r = rng();
  Vec v = r.cvector(3);
  Mat p = v * v.adjoint() / v.squaredNorm();
  Mat k = nullspace(Mat::Identity(3, 3) - p, Tolerance(1e-9));
  REQUIRE(k.cols() == 1);
  // k.col(0) parallel to v
  Scalar overlap = (v.adjoint() * k.col(0))(0, 0);
  CHECK(std::abs(std::abs(overlap) / v.norm() - 1.0) < 1e-12);
}

TEST_CASE("nullspace: vectors orthonormal and annihilated to the stated bound") {
  auto r = rng();
  Mat m = r.cmatrix(4, 6);
  m.row(3) = m.row(0) + m.row(1);  // rank 3, so the kernel has dimension 3
  Mat k = nullspace(m, Tolerance(1e-9));
  REQUIRE(k.cols() == 3);
  CHECK((k.adjoint() * k - Mat::Identity(k.cols(), k.cols())).norm() < 1e-12);
  CHECK((m * k).norm() <= 1e-9 * m.norm() * 10);
}

TEST_CASE("positive_power: identity for any exponent") {
  Mat id = Mat::Identity(3, 3);
  for (double t : {-2.0, -0.5, 0.0, 0.25, 3.0})
    CHECK((positive_power(id, t, Tolerance()) - id).norm() < 1e-13);
}

TEST_CASE("positive_power: diagonal square root") {
  Mat d = Mat::Zero(2, 2);
  d(0, 0) = 4.0;
  d(1, 1) = 9.0;
  Mat half = positive_power(d, 0.5, Tolerance());
  CHECK(std::abs(half(0, 0) - Scalar(2.0)) < 1e-13);
  CHECK(std::abs(half(1, 1) - Scalar(3.0)) < 1e-13);
}

TEST_CASE("positive_power: cube-root round trip on a random PSD matrix") {
  auto r = rng();
  Mat a = r.cmatrix(4, 4);
  Mat m = a * a.adjoint() + 0.1 * Mat::Identity(4, 4);
  Mat back = positive_power(positive_power(m, 1.0 / 3.0, Tolerance()), 3.0,
                            Tolerance());
  CHECK(rel_residual(back, m) < 1e-8);
}

TEST_CASE("positive_power: rejects non-positive input") {
  Mat d = Mat::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = -1.0;
  CHECK_THROWS_AS(positive_power(d, 0.5, Tolerance()), Error);
}

TEST_CASE("positive_power: monotone on commuting positive diagonals") {
  // a <= b implies a^t <= b^t for t in [0,1] when both are diagonal.
  Mat a = Mat::Zero(3, 3), b = Mat::Zero(3, 3);
  a.diagonal() << 1.0, 2.0, 3.0;
  b.diagonal() << 1.5, 2.5, 4.0;
  for (double t : {0.25, 0.5, 0.75}) {
    Mat diff = positive_power(b, t, Tolerance()) - positive_power(a, t, Tolerance());
    for (Index i = 0; i < 3; ++i) CHECK(diff(i, i).real() >= 0.0);
  }
}

TEST_CASE("positive_power: large asymmetry is an error, not silently fixed") {
  auto r = rng();
  Mat m = r.cmatrix(3, 3);  // generic, far from Hermitian
  CHECK_THROWS_AS(positive_power(m, 0.5, Tolerance()), Error);
}

TEST_CASE("ComplexTensor rejects non-finite entries") {
  Vec bad(2);
  bad << Scalar(1.0, 0.0), Scalar(std::numeric_limits<double>::quiet_NaN(), 0.0);
  CHECK_THROWS_AS(ComplexTensor({2}, bad), Error);
}
