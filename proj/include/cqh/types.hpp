#ifndef CQH_TYPES_HPP_
#define CQH_TYPES_HPP_

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace cqh {

using Scalar = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealVec = Eigen::VectorXd;
using Index = Eigen::Index;

// Single knob for every approximate-equality decision in the pipeline.
struct Tolerance {
  double eps = 1e-9;

  explicit Tolerance(double e = 1e-9) : eps(e) {
    if (!(eps > 0.0)) throw std::invalid_argument("Tolerance: eps must be > 0");
  }
};

enum class ErrorCode {
  Schema,
  AxiomViolation,
  NoHaar,
  HaarNotPositive,
  GramSingular,
  NotKac,
  NotPositive,
  NotCoaction,
  NotErgodic,
  NotScalar,
  InnerProductNotScalar,
  DeltaNotPositive,
  ExtractionInconsistent,
  ClosureFailure,
  DecompositionStalled,
  NotIdempotent,
  ImageNotCoideal,
  DimensionMismatch,
  ComultMismatch,
  NonIntegerFusion,
  InvalidQ,
  VerificationFailed,
  Internal,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string what, std::string identity = {},
        double residual = 0.0)
      : std::runtime_error(std::move(what)),
        code_(code),
        identity_(std::move(identity)),
        residual_(residual) {}

  ErrorCode code() const { return code_; }
  const std::string& identity() const { return identity_; }
  double residual() const { return residual_; }

 private:
  ErrorCode code_;
  std::string identity_;
  double residual_;
};

struct RunConfig {
  Tolerance tol{1e-9};
  std::uint64_t seed = 0xC0FFEEull;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Deterministic RNG handed around explicitly; never a global.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), eng_(seed) {}

  // Independent stream for a named sub-task; reproducible across runs.
  Rng fork(std::uint64_t tag) const {
    return Rng(splitmix64(seed_ ^ splitmix64(tag)));
  }

  double gaussian() { return normal_(eng_); }
  Scalar cgaussian() { return {normal_(eng_), normal_(eng_)}; }

  Vec cvector(Index n) {
    Vec v(n);
    for (Index i = 0; i < n; ++i) v(i) = cgaussian();
    return v;
  }

  Mat cmatrix(Index r, Index c) {
    Mat m(r, c);
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < c; ++j) m(i, j) = cgaussian();
    return m;
  }

  Mat hermitian(Index n) {
    Mat m = cmatrix(n, n);
    return 0.5 * (m + m.adjoint());
  }

  std::uint64_t integer(std::uint64_t bound) {
    std::uniform_int_distribution<std::uint64_t> d(0, bound - 1);
    return d(eng_);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 eng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

inline double frob(const Mat& m) { return m.norm(); }

inline double rel_residual(double diff, double scale) {
  return diff / std::max(1.0, scale);
}

template <typename DerivedA, typename DerivedB>
double rel_residual(const Eigen::MatrixBase<DerivedA>& lhs,
                    const Eigen::MatrixBase<DerivedB>& rhs) {
  return rel_residual((lhs - rhs).norm(),
                      std::max(lhs.norm(), rhs.norm()));
}

}  // namespace cqh

#endif  // CQH_TYPES_HPP_
