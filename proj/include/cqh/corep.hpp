#ifndef CQH_COREP_HPP_
#define CQH_COREP_HPP_

#include <string>
#include <vector>

#include "cqh/quantum_group.hpp"

namespace cqh {

// Corepresentation U in M_d(O(G)): row (i*d + j) of coeff holds the
// coordinates of the entry u_{ij}.
struct Corep {
  Index d = 0;
  Mat coeff;  // (d*d) x n

  Vec entry(Index i, Index j) const { return coeff.row(i * d + j); }
  Vec character() const;
};

Corep trivial_corep(const QuantumGroup& qg);

// The comultiplication on O(G) itself, written on a Haar-orthonormal basis so
// that the resulting dim-n corepresentation is unitary.
Corep regular_corep(const QuantumGroup& qg);

double corep_law_residual(const QuantumGroup& qg, const Corep& c);
double unitarity_residual(const QuantumGroup& qg, const Corep& c);

Corep direct_sum(const QuantumGroup& qg, const Corep& a, const Corep& b);
Corep tensor(const QuantumGroup& qg, const Corep& a, const Corep& b);
// Conjugate corepresentation (j (.) R)(U); entrywise R on the transpose.
Corep conjugate(const QuantumGroup& qg, const Corep& a);

// Basis of Hom(a, b) = {T : U_b (T (x) 1) = (T (x) 1) U_a}, via the nullspace
// of the intertwining system.
std::vector<Mat> intertwiners(const QuantumGroup& qg, const Corep& a,
                              const Corep& b, const Tolerance& tol);

// Haar-averaging projector onto Hom(a, b); cheap route to dim Hom and to
// random intertwiners for large corepresentations.
class HomProjector {
 public:
  HomProjector(const QuantumGroup& qg, const Corep& a, const Corep& b);

  // T is d_b x d_a; the result again intertwines a -> b.
  Mat apply(const Mat& t) const;
  double dim_trace() const;  // trace of the projector = dim Hom(a,b)

 private:
  Index da_, db_;
  Mat phi_;  // (d_b^2) x (d_a^2), kernel phi(u^b_{ik} (u^a_{jl})^*)
};

struct DecompositionPart {
  Corep block;
  Mat isometry;  // columns: H_block -> H_c
};

// Splits c into irreducible blocks with isometries w_j, sum w_j w_j^* = 1.
std::vector<DecompositionPart> decompose(const QuantumGroup& qg,
                                         const Corep& c, const Tolerance& tol,
                                         Rng rng);

struct Irrep {
  std::string label;
  Corep corep;
  Index multiplicity_in_regular = 0;
  Mat delta;      // Woronowicz matrix delta_G^pi (identity at Kac)
  Mat delta_sqrt;
  Mat delta_inv_sqrt;
  Mat delta_quarter;
  Mat delta_inv_quarter;
  double dimq = 0.0;
  Vec character;
};

struct IrrepTable {
  std::vector<Irrep> irreps;
  CheckList audit;

  const Irrep& at(Index i) const { return irreps[static_cast<size_t>(i)]; }
  Index count() const { return static_cast<Index>(irreps.size()); }
};

// Enumerates Irr(G) by decomposing the regular corepresentation; canonical
// ordering by (dimension, character fingerprint).  Certifies completeness
// (sum d^2 = n), Schur's lemma on all pairs, unitarity and the corep law.
IrrepTable irrep_table(const QuantumGroup& qg, const Tolerance& tol, Rng rng);

// Max residual of the orthogonality relations over all coefficient pairs.
struct OrthogonalityReport {
  double residual_first = 0.0;   // phi(u u'^*) relation
  double residual_second = 0.0;  // phi(u^* u') relation
  double max_residual() const {
    return std::max(residual_first, residual_second);
  }
};

OrthogonalityReport verify_orthogonality(const IrrepTable& table,
                                         const QuantumGroup& qg);

}  // namespace cqh

#endif  // CQH_COREP_HPP_
