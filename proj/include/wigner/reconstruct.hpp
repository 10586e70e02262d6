#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "wigner/hilbert.hpp"

namespace wigner {

enum class LinearityTag { Linear, Antilinear };

/// Black-box map on projections, assumed (and later validated) to preserve
/// transition probabilities. Queries must be deterministic and safe to issue
/// concurrently.
struct SymmetryMap {
  Index domain_dim = 0;
  Index codomain_dim = 0;
  std::function<Projection(const Projection&)> query;
};

/// The orthonormal system g_j obtained as images of the basis projections;
/// spans the subspace the whole image lives in.
struct Frame {
  Index ambient_dim = 0;
  std::vector<Vector> vectors;
};

/// Unit scalars read off the images of the resolving set's pair projections.
/// delta[j] and epsilon[j] belong to coordinate j+2 (one-based); each pair
/// satisfies |1 + delta conj(epsilon)| = sqrt 2.
struct PhaseChain {
  std::vector<Complex> delta;
  std::vector<Complex> epsilon;
};

/// Matrix with orthonormal columns plus a linearity tag. A Linear witness
/// acts as v -> A v, an Antilinear one as v -> A conj(v).
struct IsometryWitness {
  Matrix a;
  LinearityTag tag = LinearityTag::Linear;

  Index domain_dim() const { return a.cols(); }
  Index codomain_dim() const { return a.rows(); }
  Vector apply(const Vector& v) const;
};

struct ReconstructionReport {
  IsometryWitness witness;
  double max_gap_residual = 0.0;
  double mean_gap_residual = 0.0;
  double parseval_residual = 0.0;
  double phase_relation_residual = 0.0;
  std::array<double, 2> classification_evidence{0.0, 0.0};
  int sample_count = 0;
};

/// g_j = canonical representative of f(P[e_j]); throws NotASymmetryError if
/// the images fail to be orthonormal in modulus.
Frame extract_frame(const SymmetryMap& f, const Tolerances& tol = {});

/// The linear isometry V with V e_j = g_j.
IsometryWitness build_v(const Frame& frame);

/// |1 - sum_j |<w, g_j>|^2|; small value certifies w lies in span(frame).
double parseval_check(const Vector& w, const Frame& frame);

/// Composes P -> canonicalize(V* rep(f(P))). Each query first checks Parseval
/// containment of the image in span(frame) and raises ParsevalError on
/// failure; the running maximum of the containment residual is accumulated
/// into *parseval_max when given.
SymmetryMap pullback(const SymmetryMap& f, const IsometryWitness& v,
                     const Frame& frame,
                     std::shared_ptr<double> parseval_max = nullptr,
                     const Tolerances& tol = {});

/// Reads the delta/epsilon unit scalars off a map that fixes every basis
/// projection, validating |1 + delta conj(epsilon)| = sqrt 2 per index.
/// When phase_relation_max is given the worst deviation from sqrt 2 is
/// accumulated there.
PhaseChain extract_phase_chain(const SymmetryMap& g,
                               std::shared_ptr<double> phase_relation_max = nullptr,
                               const Tolerances& tol = {});

/// epsilon_2 = -i delta_2 -> Linear, epsilon_2 = +i delta_2 -> Antilinear.
/// The matching modulus must be below tol.eq.
LinearityTag classify_linearity(const PhaseChain& chain,
                                const Tolerances& tol = {});

/// Diagonal witness diag(1, d2, d2 d3, ...) of cumulative phase products.
IsometryWitness build_u(const PhaseChain& chain, LinearityTag tag);

/// W = V U, carrying U's tag; antilinear action conjugates first.
IsometryWitness compose_witness(const IsometryWitness& v,
                                const IsometryWitness& u);

/// Max and mean of gap_distance(f(P[v]), P[W v]) over the samples.
std::pair<double, double> verify_witness(const SymmetryMap& f,
                                         const IsometryWitness& w,
                                         const std::vector<Vector>& samples,
                                         const Tolerances& tol = {});

/// Full pipeline: frame -> V -> pullback -> phase chain -> U -> W, then
/// verification over sample_count seeded random unit vectors plus the
/// resolving-set elements and the adversarial three-coordinate fixtures.
/// Throws VerificationError when the max residual exceeds tol.verify.
ReconstructionReport reconstruct(const SymmetryMap& f, int sample_count,
                                 std::uint64_t seed,
                                 const Tolerances& tol = {});

/// Max deviation |tr P[v]P[w] - tr f(P[v])f(P[w])| over seeded random pairs
/// plus the deterministic adversarial pair for every admissible centre index.
double validate_symmetry(const SymmetryMap& f, int pair_count,
                         std::uint64_t seed, const Tolerances& tol = {});

/// The adversarial pair x, y centred at one-based index j (2 <= j <= n-1):
/// x = -1/2 e_{j-1} + 1/2 e_j + 1/sqrt2 e_{j+1},
/// y =  i/2 e_{j-1} + 1/2 e_j + i/sqrt2 e_{j+1}.
std::pair<Vector, Vector> adversarial_pair(Index n, Index j);

}  // namespace wigner
