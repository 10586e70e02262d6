#pragma once

#include <cstdint>
#include <string>

#include "wigner/reconstruct.hpp"

namespace wigner {

/// Instance factory input record: which map to build and from which seed.
struct GeneratorSpec {
  enum class Kind {
    HaarUnitary,
    HaarAntiunitary,
    RandomIsometry,
    Shift,
    PartialConjugation,
    Constant,
  };

  Kind kind = Kind::HaarUnitary;
  Index n = 0;
  Index m = 0;          ///< codomain dimension; defaults to the kind's natural value
  std::uint64_t seed = 0;
  Index j = 0;          ///< conjugation start index (partial_conjugation only)
};

GeneratorSpec::Kind generator_kind_from_string(const std::string& name);
std::string to_string(GeneratorSpec::Kind kind);

/// Seeded Haar-distributed n x n unitary with the given tag: QR of a complex
/// Gaussian matrix with the R-diagonal phases folded into Q.
IsometryWitness haar_random_witness(Index n, LinearityTag tag,
                                    std::uint64_t seed);

/// Seeded m x n matrix with orthonormal columns, m >= n.
IsometryWitness random_isometry_witness(Index n, Index m, LinearityTag tag,
                                        std::uint64_t seed);

/// The truncated coordinate shift: (n+1) x n, e_j -> e_{j+1}. A linear
/// isometry that is not unitary.
IsometryWitness shift_witness(Index n);

/// Black box P[v] -> canonicalize(mu * W v) with a fresh counter-derived unit
/// phase mu per query, so downstream code that leans on representative phases
/// instead of projections fails loudly.
SymmetryMap symmetry_from_witness(const IsometryWitness& w,
                                  std::uint64_t scramble_seed,
                                  const Tolerances& tol = {});

/// Conjugates every coordinate with one-based index >= j+1 of the
/// representative gauged so coordinate j is real positive. Fixes all basis
/// projections and all real-coefficient pair projections yet is not a Wigner
/// symmetry: it breaks the transition probability on the adversarial x, y
/// pair (sqrt2/4 vs sqrt10/4).
SymmetryMap partial_conjugation_adversary(Index n, Index j,
                                          const Tolerances& tol = {});

/// P -> P[e_1]; validator fixture that collapses orthogonality.
SymmetryMap constant_map(Index n, const Tolerances& tol = {});

/// Dispatch on the spec kind; enforces the per-kind dimension constraints.
SymmetryMap make_symmetry(const GeneratorSpec& spec, const Tolerances& tol = {});

/// The ground-truth witness behind a spec, for kinds that have one.
/// Throws DimensionError for partial_conjugation and constant.
IsometryWitness witness_of(const GeneratorSpec& spec);

}  // namespace wigner
