// Test-side oracles: classical finite group theory computed from scratch,
// independent of the library implementation.
#ifndef CQH_TESTS_ORACLES_HPP_
#define CQH_TESTS_ORACLES_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "cqh/quantum_group.hpp"

namespace oracles {

using cqh::Index;
using cqh::Mat;
using cqh::Scalar;
using cqh::Vec;

struct FiniteGroup {
  Index order = 0;
  std::vector<std::vector<Index>> mul;  // mul[a][b] = index of a.b
  Index identity = 0;

  Index inverse(Index a) const {
    for (Index b = 0; b < order; ++b)
      if (mul[a][b] == identity) return b;
    return -1;
  }
};

inline FiniteGroup cyclic_group(Index n) {
  FiniteGroup g;
  g.order = n;
  g.mul.assign(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
  return g;
}

// Elements r^a s^b with s r s = r^{-1}; index = a * 2 + b.
inline FiniteGroup dihedral_group(Index n) {
  FiniteGroup g;
  g.order = 2 * n;
  g.mul.assign(2 * n, std::vector<Index>(2 * n));
  auto idx = [n](Index a, Index b) { return a * 2 + b; };
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < 2; ++b)
      for (Index c = 0; c < n; ++c)
        for (Index d = 0; d < 2; ++d) {
          const Index rot = b == 0 ? (a + c) % n : ((a - c) % n + n) % n;
          g.mul[idx(a, b)][idx(c, d)] = idx(rot, (b + d) % 2);
        }
  return g;
}

// (sigma . tau)(x) = sigma(tau(x)); elements sorted lexicographically.
inline FiniteGroup symmetric_group(Index n) {
  std::vector<std::vector<Index>> perms;
  std::vector<Index> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  FiniteGroup g;
  g.order = static_cast<Index>(perms.size());
  g.mul.assign(g.order, std::vector<Index>(g.order));
  auto find = [&](const std::vector<Index>& q) {
    return static_cast<Index>(
        std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  for (Index a = 0; a < g.order; ++a)
    for (Index b = 0; b < g.order; ++b) {
      std::vector<Index> comp(static_cast<size_t>(n));
      for (Index x = 0; x < n; ++x)
        comp[x] = perms[a][perms[b][x]];
      g.mul[a][b] = find(comp);
    }
  return g;
}

inline const std::vector<std::vector<Index>>& s3_perms() {
  static std::vector<std::vector<Index>> perms = [] {
    std::vector<std::vector<Index>> out;
    std::vector<Index> p = {0, 1, 2};
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return perms;
}

// Characters of S_3 from explicit irreducible matrices (not a copied table).
// 2-dim standard rep acts on {x in C^3 : sum x = 0} with basis
// f1 = e0 - e1, f2 = e1 - e2.
inline std::array<std::vector<double>, 3> s3_characters() {
  const auto& perms = s3_perms();
  std::array<std::vector<double>, 3> chi;
  for (auto& c : chi) c.assign(perms.size(), 0.0);
  for (size_t g = 0; g < perms.size(); ++g) {
    const auto& p = perms[g];
    chi[0][g] = 1.0;  // trivial
    // parity
    int inv = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (p[i] > p[j]) ++inv;
    chi[1][g] = inv % 2 == 0 ? 1.0 : -1.0;
    // standard: permutation matrix trace minus trivial part
    int fixed = 0;
    for (int i = 0; i < 3; ++i)
      if (p[i] == i) ++fixed;
    chi[2][g] = fixed - 1.0;
  }
  return chi;
}

// Fusion multiplicities N_{ij}^k = |G|^{-1} sum_g chi_i chi_j conj(chi_k).
inline Index fusion_coefficient(const std::vector<double>& ci,
                                const std::vector<double>& cj,
                                const std::vector<double>& ck) {
  double acc = 0.0;
  for (size_t g = 0; g < ci.size(); ++g) acc += ci[g] * cj[g] * ck[g];
  return static_cast<Index>(std::llround(acc / double(ci.size())));
}

// ---- quantum group fixtures (built directly from the definitions) ----

// Function algebra C^G: pointwise product, Delta f(a,b) = f(ab).
inline cqh::QuantumGroupSpec function_algebra(const FiniteGroup& g) {
  const Index n = g.order;
  cqh::QuantumGroupSpec spec;
  spec.algebra.dim = n;
  spec.algebra.mult = cqh::ComplexTensor({n, n, n});
  for (Index a = 0; a < n; ++a)
    spec.algebra.mult.data()((a * n + a) * n + a) = 1.0;
  spec.algebra.unit = Vec::Ones(n);
  spec.algebra.star = Mat::Identity(n, n);
  spec.comult = cqh::ComplexTensor({n, n, n});
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      spec.comult.data()((g.mul[a][b] * n + a) * n + b) += 1.0;
  spec.counit = Vec::Zero(n);
  spec.counit(g.identity) = 1.0;
  spec.antipode = Mat::Zero(n, n);
  for (Index a = 0; a < n; ++a) spec.antipode(g.inverse(a), a) = 1.0;
  return spec;
}

// Group algebra C[G]: convolution product, Delta u_g = u_g (x) u_g.
inline cqh::QuantumGroupSpec group_algebra(const FiniteGroup& g) {
  const Index n = g.order;
  cqh::QuantumGroupSpec spec;
  spec.algebra.dim = n;
  spec.algebra.mult = cqh::ComplexTensor({n, n, n});
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      spec.algebra.mult.data()((a * n + b) * n + g.mul[a][b]) += 1.0;
  spec.algebra.unit = Vec::Zero(n);
  spec.algebra.unit(g.identity) = 1.0;
  spec.algebra.star = Mat::Zero(n, n);
  for (Index a = 0; a < n; ++a) spec.algebra.star(g.inverse(a), a) = 1.0;
  spec.comult = cqh::ComplexTensor({n, n, n});
  for (Index a = 0; a < n; ++a)
    spec.comult.data()((a * n + a) * n + a) = 1.0;
  spec.counit = Vec::Ones(n);
  spec.antipode = Mat::Zero(n, n);
  for (Index a = 0; a < n; ++a) spec.antipode(g.inverse(a), a) = 1.0;
  return spec;
}

inline double q_integer(double q, Index n) {
  if (q == 1.0) return double(n);
  return (std::pow(q, double(n)) - std::pow(q, -double(n))) /
         (q - 1.0 / q);
}

}  // namespace oracles

#endif  // CQH_TESTS_ORACLES_HPP_
