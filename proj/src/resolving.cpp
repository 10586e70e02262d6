#include "wigner/resolving.hpp"

#include <cmath>

namespace wigner {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

double modulus_from_gap(double d) {
  double rad = 1.0 - d * d;
  if (rad < 0.0) rad = 0.0;
  return std::sqrt(rad);
}

}  // namespace

ResolvingSet build_resolving_set(Index n, const Tolerances& tol) {
  if (n < 1) {
    throw DimensionError("resolving set needs dimension >= 1");
  }
  ResolvingSet r;
  r.dim = n;
  r.elements.reserve(static_cast<std::size_t>(3 * n - 2));
  for (Index j = 0; j < n; ++j) {
    r.elements.push_back(basis_projection(n, j, tol));
  }
  for (Index j = 0; j + 1 < n; ++j) {
    Vector diff = Vector::Zero(n);
    diff[j] = 1.0 / kSqrt2;
    diff[j + 1] = -1.0 / kSqrt2;
    r.elements.push_back(canonicalize(diff, tol));

    Vector idiff = Vector::Zero(n);
    idiff[j] = 1.0 / kSqrt2;
    idiff[j + 1] = Complex(0.0, 1.0 / kSqrt2);
    r.elements.push_back(canonicalize(idiff, tol));
  }
  return r;
}

DistanceProfile profile_of(const Projection& p, const ResolvingSet& r) {
  if (p.dim() != r.dim) {
    throw DimensionError("projection dimension does not match resolving set");
  }
  const Index n = r.dim;
  DistanceProfile prof;
  prof.dim = n;
  prof.moduli_basis.reserve(static_cast<std::size_t>(n));
  for (Index j = 0; j < n; ++j) {
    prof.moduli_basis.push_back(
        modulus_from_gap(gap_distance(p, r.elements[static_cast<std::size_t>(j)])));
  }
  // Pair elements carry a 1/sqrt2 normalization; unscale so the stored
  // readings are exactly |v_j - v_{j+1}| and |v_j - i v_{j+1}|.
  for (Index j = 0; j + 1 < n; ++j) {
    const std::size_t base = static_cast<std::size_t>(n + 2 * j);
    prof.moduli_diff.push_back(
        kSqrt2 * modulus_from_gap(gap_distance(p, r.elements[base])));
    prof.moduli_idiff.push_back(
        kSqrt2 * modulus_from_gap(gap_distance(p, r.elements[base + 1])));
  }
  return prof;
}

Complex recover_next_coordinate(Complex v_k, double m, double m_diff,
                                double m_idiff, const Tolerances& tol) {
  const double vk2 = std::norm(v_k);
  if (std::sqrt(vk2) <= tol.zero) {
    throw ZeroPivotError("chain pivot has (near-)zero modulus");
  }
  // |v_k - b|^2  = |v_k|^2 + |b|^2 - 2 Re(v_k conj(b))
  // |v_k - ib|^2 = |v_k|^2 + |b|^2 - 2 Im(v_k conj(b))
  const double re_z = 0.5 * (vk2 + m * m - m_diff * m_diff);
  const double im_z = 0.5 * (vk2 + m * m - m_idiff * m_idiff);
  const Complex z(re_z, im_z);
  const Complex raw = std::conj(z) * v_k / vk2;
  if (std::abs(std::abs(raw) - m) > tol.eq) {
    throw InconsistentProfileError(
        "profile readings are not consistent with any complex coordinate");
  }
  // Only the phase comes from the linear solve; the modulus is measured
  // directly, so pinning it stops error growth along the chain.
  const double raw_mod = std::abs(raw);
  return raw_mod > 0.0 ? Complex(m * raw.real() / raw_mod, m * raw.imag() / raw_mod)
                       : raw;
}

Projection recover_from_profile(const DistanceProfile& profile,
                                const Tolerances& tol) {
  const Index n = profile.dim;
  if (n < 1 || profile.moduli_basis.size() != static_cast<std::size_t>(n) ||
      profile.moduli_diff.size() != static_cast<std::size_t>(n - 1) ||
      profile.moduli_idiff.size() != static_cast<std::size_t>(n - 1)) {
    throw DimensionError("malformed distance profile");
  }
  double norm2 = 0.0;
  for (double m : profile.moduli_basis) norm2 += m * m;
  if (std::abs(norm2 - 1.0) > tol.eq) {
    throw InconsistentProfileError("basis moduli are not normalized");
  }
  for (double m : profile.moduli_basis) {
    if (m <= tol.zero) {
      throw NotInDomainError(
          "a basis modulus vanishes: the projection lies outside D, where the "
          "resolving set cannot separate it (cf. the (e1+e3) vs (e1+i e3) "
          "counterexample)");
    }
  }
  Vector v(n);
  v[0] = profile.moduli_basis[0];  // global phase pinned: v_1 real positive
  for (Index k = 0; k + 1 < n; ++k) {
    const std::size_t j = static_cast<std::size_t>(k);
    v[k + 1] = recover_next_coordinate(v[k], profile.moduli_basis[j + 1],
                                       profile.moduli_diff[j],
                                       profile.moduli_idiff[j], tol);
  }
  return canonicalize(v, tol);
}

}  // namespace wigner
