#include "wigner/hilbert.hpp"

#include <cmath>

namespace wigner {

namespace {

void require_same_dim(Index a, Index b) {
  if (a != b) {
    throw DimensionError("dimension mismatch: " + std::to_string(a) +
                         " vs " + std::to_string(b));
  }
}

}  // namespace

Complex inner_product(const Vector& v, const Vector& w) {
  require_same_dim(v.size(), w.size());
  // Eigen's dot conjugates its left operand, so w.dot(v) = sum v_j conj(w_j).
  return w.dot(v);
}

double transition_probability(const Projection& p, const Projection& q) {
  require_same_dim(p.dim(), q.dim());
  const double t = std::norm(inner_product(p.rep(), q.rep()));
  return t > 1.0 ? 1.0 : t;
}

double gap_distance(const Projection& p, const Projection& q) {
  require_same_dim(p.dim(), q.dim());
  const Vector& v = p.rep();
  const Vector& w = q.rep();
  // ||w - <w,v>v|| equals sqrt(1 - |<v,w>|^2) for unit vectors but does not
  // cancel when the gap is tiny.
  const Vector orth = w - inner_product(w, v) * v;
  const double d = orth.norm();
  return d > 1.0 ? 1.0 : d;
}

Projection canonicalize(const Vector& v, const Tolerances& tol) {
  const double nrm = v.norm();
  if (nrm <= tol.zero) {
    throw ZeroVectorError("cannot canonicalize a (near-)zero vector");
  }
  Vector u = v / nrm;
  Index pivot = -1;
  for (Index k = 0; k < u.size(); ++k) {
    if (std::abs(u[k]) > tol.zero) {
      pivot = k;
      break;
    }
  }
  if (pivot < 0) {
    throw InternalError("unit vector with no coordinate above zero tolerance");
  }
  const double mod = std::abs(u[pivot]);
  u *= std::conj(u[pivot]) / mod;
  u[pivot] = Complex(mod, 0.0);  // exact, no residual imaginary dust
  return Projection(std::move(u));
}

Projection basis_projection(Index n, Index j, const Tolerances& tol) {
  if (n < 1 || j < 0 || j >= n) {
    throw DimensionError("basis index out of range");
  }
  Vector e = Vector::Zero(n);
  e[j] = 1.0;
  return canonicalize(e, tol);
}

}  // namespace wigner
