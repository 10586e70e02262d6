#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace wigner {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

/// Numerical thresholds used throughout the library. All strictly positive;
/// `zero` must stay below `eq`.
struct Tolerances {
  double zero = 1e-9;    ///< modulus below which a coordinate counts as zero
  double norm = 1e-9;    ///< unit-norm slack
  double eq = 1e-7;      ///< projection equality / consistency slack
  double verify = 1e-8;  ///< witness verification threshold
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error { using Error::Error; };
struct ZeroVectorError : Error { using Error::Error; };
struct InternalError : Error { using Error::Error; };
struct ZeroPivotError : Error { using Error::Error; };
struct InconsistentProfileError : Error { using Error::Error; };
struct NotInDomainError : Error { using Error::Error; };
struct NotASymmetryError : Error { using Error::Error; };
struct ParsevalError : Error { using Error::Error; };
struct PhaseRelationError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

struct VerificationError : Error {
  VerificationError(const std::string& msg, double max_res, double mean_res)
      : Error(msg), max_residual(max_res), mean_residual(mean_res) {}
  double max_residual;
  double mean_residual;
};

class Projection;
Projection canonicalize(const Vector& v, const Tolerances& tol);

/// A point of the projective space P1, stored as its phase-canonical unit
/// representative: the first coordinate of modulus above the zero tolerance
/// is real and strictly positive. Construct via canonicalize().
class Projection {
 public:
  const Vector& rep() const { return rep_; }
  Index dim() const { return rep_.size(); }

 private:
  friend Projection canonicalize(const Vector&, const Tolerances&);
  explicit Projection(Vector rep) : rep_(std::move(rep)) {}
  Vector rep_;
};

/// Sesquilinear pairing, linear in the first slot and conjugate-linear in the
/// second.
Complex inner_product(const Vector& v, const Vector& w);

/// tr P[v] P[w] = |<v,w>|^2, clamped to [0, 1].
double transition_probability(const Projection& p, const Projection& q);

/// Operator-norm distance between the two projections,
/// sqrt(1 - |<v,w>|^2). Computed from the component of one representative
/// orthogonal to the other, which stays accurate when the projections are
/// nearly equal.
double gap_distance(const Projection& p, const Projection& q);

Projection canonicalize(const Vector& v, const Tolerances& tol = {});

/// P[e_j] in dimension n (j is zero-based).
Projection basis_projection(Index n, Index j, const Tolerances& tol = {});

}  // namespace wigner
