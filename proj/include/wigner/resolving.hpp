#pragma once

#include <vector>

#include "wigner/hilbert.hpp"

namespace wigner {

/// The set R that resolves the dense subset D (all coordinates nonzero):
/// the n basis projections followed, for each neighbouring index pair, by
/// P[(e_j - e_{j+1})/sqrt 2] and P[(e_j + i e_{j+1})/sqrt 2]. Size 3n - 2.
struct ResolvingSet {
  Index dim = 0;
  std::vector<Projection> elements;
};

/// Gap-distance readings against R, converted back to the moduli that the
/// coordinate-chaining recovery consumes:
///   moduli_basis[j]  = |v_j|
///   moduli_diff[j]   = |v_j - v_{j+1}|      (sqrt-2 unscaled)
///   moduli_idiff[j]  = |v_j - i v_{j+1}|
struct DistanceProfile {
  Index dim = 0;
  std::vector<double> moduli_basis;
  std::vector<double> moduli_diff;
  std::vector<double> moduli_idiff;
};

ResolvingSet build_resolving_set(Index n, const Tolerances& tol = {});

DistanceProfile profile_of(const Projection& p, const ResolvingSet& r);

/// Given v_k and the readings m = |b|, m_diff = |v_k - b|, m_idiff = |v_k - ib|,
/// returns the unique b consistent with all three. Solves the two linear real
/// equations for z = v_k * conj(b), then b = conj(z) v_k / |v_k|^2.
Complex recover_next_coordinate(Complex v_k, double m, double m_diff,
                                double m_idiff, const Tolerances& tol = {});

/// Inverts a profile of an element of D back to its projection: pins v_1 real
/// positive and chains recover_next_coordinate. Left inverse of profile_of
/// on D.
Projection recover_from_profile(const DistanceProfile& profile,
                                const Tolerances& tol = {});

}  // namespace wigner
