#include "doctest.h"

#include "cqh/linalg.hpp"
#include "cqh/quantum_group.hpp"
#include "oracles.hpp"

using namespace cqh;

TEST_CASE("function algebra of Z_2 loads with uniform Haar") {
  auto spec = oracles::function_algebra(oracles::cyclic_group(2));
  QuantumGroup qg = QuantumGroup::build(spec, Tolerance());
  CHECK(qg.audit().all_pass());
  // uniform-measure oracle
  for (Index i = 0; i < 2; ++i)
    CHECK(std::abs(qg.haar()(i) - Scalar(0.5)) < 1e-12);
}

TEST_CASE("group algebra of Z_3 loads; Haar is the identity-coefficient") {
  auto spec = oracles::group_algebra(oracles::cyclic_group(3));
  QuantumGroup qg = QuantumGroup::build(spec, Tolerance());
  CHECK(qg.audit().all_pass());
  CHECK(std::abs(qg.haar()(0) - Scalar(1.0)) < 1e-12);
  CHECK(std::abs(qg.haar()(1)) < 1e-12);
  CHECK(std::abs(qg.haar()(2)) < 1e-12);
}

TEST_CASE("function algebra of S_3: Haar is the uniform average") {
  auto spec = oracles::function_algebra(oracles::symmetric_group(3));
  QuantumGroup qg = QuantumGroup::build(spec, Tolerance());
  CHECK(qg.audit().all_pass());
  for (Index i = 0; i < 6; ++i)
    CHECK(std::abs(qg.haar()(i) - Scalar(1.0 / 6.0)) < 1e-12);
  // uniform measure is a trace: modular automorphism is the identity
  CHECK(rel_residual(qg.modular(), Mat::Identity(6, 6)) < 1e-10);
}

TEST_CASE("trivial group: Haar equals the counit") {
  auto spec = oracles::function_algebra(oracles::cyclic_group(1));
  QuantumGroup qg = QuantumGroup::build(spec, Tolerance());
  CHECK((qg.haar() - qg.counit()).norm() < 1e-13);
  CHECK(rel_residual(qg.unitary_antipode(), Mat::Identity(1, 1)) < 1e-13);
}

TEST_CASE("broken associativity entry is reported as an axiom violation") {
  auto spec = oracles::function_algebra(oracles::cyclic_group(3));
  spec.algebra.mult.data()((1 * 3 + 2) * 3 + 0) += 0.05;
  try {
    QuantumGroup::build(spec, Tolerance());
    FAIL("expected AxiomViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AxiomViolation);
    CHECK(e.identity() == "algebra-associativity");
    CHECK(e.residual() > 1e-9);
  }
}

TEST_CASE("non-quantum-group input reports NoHaar") {
  // Valid algebra C^2 but comultiplication Delta(f) = f (x) 1 is not a
  // quantum group comultiplication (no counit law / invariant functional
  // uniqueness); the invariance nullspace is 2-dimensional.
  auto spec = oracles::function_algebra(oracles::cyclic_group(2));
  ComplexTensor bad({2, 2, 2});
  // Delta(e_a) = e_a (x) (e_0 + e_1)
  for (Index a = 0; a < 2; ++a)
    for (Index b = 0; b < 2; ++b) bad.data()((a * 2 + a) * 2 + b) = 1.0;
  CHECK_THROWS_AS(compute_haar(spec.algebra, bad, Tolerance()), Error);
}

TEST_CASE("modular map on M_2 matches the Tomita formula sigma = Ad(rho)") {
  // Kernel-level unit test of the Gram solver on a non-tracial functional
  // phi(a) = Tr(rho a) with rho = diag(1/3, 2/3) on M_2.
  AlgebraSpec m2;
  m2.dim = 4;  // basis e_{ij}, index i*2+j
  m2.mult = ComplexTensor({4, 4, 4});
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j)
      for (Index k = 0; k < 2; ++k)
        for (Index l = 0; l < 2; ++l)
          if (j == k)
            m2.mult.data()(((i * 2 + j) * 4 + (k * 2 + l)) * 4 + (i * 2 + l)) =
                1.0;
  m2.unit = Vec::Zero(4);
  m2.unit(0) = 1.0;
  m2.unit(3) = 1.0;
  m2.star = Mat::Zero(4, 4);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) m2.star(j * 2 + i, i * 2 + j) = 1.0;
  CHECK(m2.verify_axioms(Tolerance()).all_pass());

  Vec phi = Vec::Zero(4);
  phi(0) = 1.0 / 3.0;
  phi(3) = 2.0 / 3.0;
  Mat sigma = modular_map(m2, phi, Tolerance());

  // Tomita oracle: sigma(a) = rho a rho^{-1}
  Mat rho = Mat::Zero(2, 2);
  rho(0, 0) = 1.0 / 3.0;
  rho(1, 1) = 2.0 / 3.0;
  Mat rho_inv = rho.inverse();
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) {
      Mat a = Mat::Zero(2, 2);
      a(i, j) = 1.0;
      Mat expect = rho * a * rho_inv;
      Vec got = sigma * Vec::Unit(4, i * 2 + j);
      for (Index k = 0; k < 2; ++k)
        for (Index l = 0; l < 2; ++l)
          CHECK(std::abs(got(k * 2 + l) - expect(k, l)) < 1e-12);
    }
}

TEST_CASE("classical antipode is inversion; unitary antipode is involutive") {
  auto g = oracles::symmetric_group(3);
  auto spec = oracles::function_algebra(g);
  QuantumGroup qg = QuantumGroup::build(spec, Tolerance());
  Mat r = unitary_antipode(qg, Tolerance());
  for (Index a = 0; a < g.order; ++a) {
    Vec img = r * Vec::Unit(g.order, a);
    CHECK(std::abs(img(g.inverse(a)) - Scalar(1.0)) < 1e-12);
  }
  CHECK(rel_residual(r * r, Mat::Identity(g.order, g.order)) < 1e-12);
}

TEST_CASE("dual convolution is associative on random functionals") {
  auto spec = oracles::function_algebra(oracles::symmetric_group(3));
  QuantumGroup qg = QuantumGroup::build(spec, Tolerance());
  Rng rng(42);
  for (int t = 0; t < 8; ++t) {
    Vec a = rng.cvector(6), b = rng.cvector(6), c = rng.cvector(6);
    Vec lhs = qg.convolve(qg.convolve(a, b), c);
    Vec rhs = qg.convolve(a, qg.convolve(b, c));
    CHECK(rel_residual(lhs, rhs) < 1e-10);
  }
}

TEST_CASE("Haar is antipode-invariant") {
  auto spec = oracles::group_algebra(oracles::symmetric_group(3));
  QuantumGroup qg = QuantumGroup::build(spec, Tolerance());
  Vec pulled = qg.antipode().transpose() * qg.haar();
  CHECK((pulled - qg.haar()).norm() < 1e-9);
}
