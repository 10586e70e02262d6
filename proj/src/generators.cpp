#include "wigner/generators.hpp"

#include <atomic>
#include <cmath>
#include <memory>
#include <numbers>
#include <random>

namespace wigner {

namespace {

Matrix complex_gaussian(Index rows, Index cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) {
      g(r, c) = Complex(gauss(rng), gauss(rng));
    }
  }
  return g;
}

// Thin QR with the R-diagonal phases folded into Q, which makes the column
// distribution Haar for square matrices.
Matrix orthonormal_columns(Index rows, Index cols, std::uint64_t seed) {
  const Matrix g = complex_gaussian(rows, cols, seed);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(rows, cols);
  const Matrix& packed = qr.matrixQR();
  for (Index c = 0; c < cols; ++c) {
    const Complex r = packed(c, c);
    const double mod = std::abs(r);
    if (mod > 0.0) q.col(c) *= r / mod;
  }
  return q;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Counter-based unit phase stream: deterministic per (seed, counter), so
// concurrent queries see a well-defined phase regardless of arrival order.
Complex scramble_phase(std::uint64_t seed, std::uint64_t counter) {
  const std::uint64_t bits = splitmix64(seed ^ splitmix64(counter));
  const double t = static_cast<double>(bits >> 11) * 0x1.0p-53;
  const double angle = 2.0 * std::numbers::pi * t;
  return Complex(std::cos(angle), std::sin(angle));
}

}  // namespace

GeneratorSpec::Kind generator_kind_from_string(const std::string& name) {
  if (name == "haar_unitary") return GeneratorSpec::Kind::HaarUnitary;
  if (name == "haar_antiunitary") return GeneratorSpec::Kind::HaarAntiunitary;
  if (name == "random_isometry") return GeneratorSpec::Kind::RandomIsometry;
  if (name == "shift") return GeneratorSpec::Kind::Shift;
  if (name == "partial_conjugation") return GeneratorSpec::Kind::PartialConjugation;
  if (name == "constant") return GeneratorSpec::Kind::Constant;
  throw IoError("unknown generator kind: " + name);
}

std::string to_string(GeneratorSpec::Kind kind) {
  switch (kind) {
    case GeneratorSpec::Kind::HaarUnitary: return "haar_unitary";
    case GeneratorSpec::Kind::HaarAntiunitary: return "haar_antiunitary";
    case GeneratorSpec::Kind::RandomIsometry: return "random_isometry";
    case GeneratorSpec::Kind::Shift: return "shift";
    case GeneratorSpec::Kind::PartialConjugation: return "partial_conjugation";
    case GeneratorSpec::Kind::Constant: return "constant";
  }
  throw InternalError("unhandled generator kind");
}

IsometryWitness haar_random_witness(Index n, LinearityTag tag,
                                    std::uint64_t seed) {
  if (n < 1) throw DimensionError("witness dimension must be >= 1");
  return {orthonormal_columns(n, n, seed), tag};
}

IsometryWitness random_isometry_witness(Index n, Index m, LinearityTag tag,
                                        std::uint64_t seed) {
  if (n < 1) throw DimensionError("witness dimension must be >= 1");
  if (m < n) {
    throw DimensionError("no isometry into a smaller space (m < n)");
  }
  return {orthonormal_columns(m, n, seed), tag};
}

IsometryWitness shift_witness(Index n) {
  if (n < 1) throw DimensionError("shift dimension must be >= 1");
  IsometryWitness w;
  w.tag = LinearityTag::Linear;
  w.a = Matrix::Zero(n + 1, n);
  for (Index j = 0; j < n; ++j) {
    w.a(j + 1, j) = 1.0;
  }
  return w;
}

SymmetryMap symmetry_from_witness(const IsometryWitness& w,
                                  std::uint64_t scramble_seed,
                                  const Tolerances& tol) {
  SymmetryMap f;
  f.domain_dim = w.domain_dim();
  f.codomain_dim = w.codomain_dim();
  auto counter = std::make_shared<std::atomic<std::uint64_t>>(0);
  f.query = [w, scramble_seed, counter, tol](const Projection& p) {
    if (p.dim() != w.domain_dim()) {
      throw DimensionError("query dimension does not match symmetry domain");
    }
    const std::uint64_t tick = counter->fetch_add(1);
    const Complex mu = scramble_phase(scramble_seed, tick);
    return canonicalize(mu * w.apply(p.rep()), tol);
  };
  return f;
}

SymmetryMap partial_conjugation_adversary(Index n, Index j,
                                          const Tolerances& tol) {
  if (n < 3 || j < 2 || j > n - 1) {
    throw DimensionError(
        "partial conjugation needs n >= 3 and 2 <= j <= n-1");
  }
  SymmetryMap f;
  f.domain_dim = n;
  f.codomain_dim = n;
  f.query = [n, j, tol](const Projection& p) {
    if (p.dim() != n) {
      throw DimensionError("query dimension does not match symmetry domain");
    }
    Vector w = p.rep();
    // Gauge at coordinate j (one-based): real positive when nonzero. The
    // conjugated suffix starts right after it, so this is the representative
    // the suffix conjugation is defined on.
    const double mod = std::abs(w[j - 1]);
    if (mod > tol.zero) {
      w *= std::conj(w[j - 1]) / mod;
    }
    for (Index k = j; k < n; ++k) {  // one-based coordinates j+1 .. n
      w[k] = std::conj(w[k]);
    }
    return canonicalize(w, tol);
  };
  return f;
}

SymmetryMap constant_map(Index n, const Tolerances& tol) {
  if (n < 1) throw DimensionError("constant map dimension must be >= 1");
  SymmetryMap f;
  f.domain_dim = n;
  f.codomain_dim = n;
  const Projection target = basis_projection(n, 0, tol);
  f.query = [target](const Projection&) { return target; };
  return f;
}

IsometryWitness witness_of(const GeneratorSpec& spec) {
  using Kind = GeneratorSpec::Kind;
  const Index m = spec.m > 0 ? spec.m : spec.n;
  switch (spec.kind) {
    case Kind::HaarUnitary:
      if (m != spec.n) throw DimensionError("haar_unitary requires m = n");
      return haar_random_witness(spec.n, LinearityTag::Linear, spec.seed);
    case Kind::HaarAntiunitary:
      if (m != spec.n) throw DimensionError("haar_antiunitary requires m = n");
      return haar_random_witness(spec.n, LinearityTag::Antilinear, spec.seed);
    case Kind::RandomIsometry:
      return random_isometry_witness(spec.n, m, LinearityTag::Linear,
                                     spec.seed);
    case Kind::Shift:
      if (spec.m > 0 && spec.m != spec.n + 1) {
        throw DimensionError("shift requires m = n + 1");
      }
      return shift_witness(spec.n);
    case Kind::PartialConjugation:
    case Kind::Constant:
      throw DimensionError("generator kind has no ground-truth witness");
  }
  throw InternalError("unhandled generator kind");
}

SymmetryMap make_symmetry(const GeneratorSpec& spec, const Tolerances& tol) {
  using Kind = GeneratorSpec::Kind;
  switch (spec.kind) {
    case Kind::PartialConjugation:
      if (spec.m > 0 && spec.m != spec.n) {
        throw DimensionError("partial_conjugation requires m = n");
      }
      return partial_conjugation_adversary(spec.n, spec.j, tol);
    case Kind::Constant:
      if (spec.m > 0 && spec.m != spec.n) {
        throw DimensionError("constant requires m = n");
      }
      return constant_map(spec.n, tol);
    default:
      return symmetry_from_witness(witness_of(spec), spec.seed, tol);
  }
}

}  // namespace wigner
