#include "wigner/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "wigner/resolving.hpp"

namespace wigner {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kInvSqrt2 = 0.7071067811865476;

Vector random_unit_vector(Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(n);
  for (Index k = 0; k < n; ++k) {
    v[k] = Complex(gauss(rng), gauss(rng));
  }
  return v / v.norm();
}

void accumulate_max(const std::shared_ptr<double>& acc, double value) {
  if (acc && value > *acc) *acc = value;
}

}  // namespace

Vector IsometryWitness::apply(const Vector& v) const {
  if (v.size() != a.cols()) {
    throw DimensionError("witness applied to vector of wrong dimension");
  }
  if (tag == LinearityTag::Antilinear) {
    return a * v.conjugate();
  }
  return a * v;
}

Frame extract_frame(const SymmetryMap& f, const Tolerances& tol) {
  const Index n = f.domain_dim;
  Frame frame;
  frame.ambient_dim = f.codomain_dim;
  frame.vectors.reserve(static_cast<std::size_t>(n));
  for (Index j = 0; j < n; ++j) {
    frame.vectors.push_back(f.query(basis_projection(n, j, tol)).rep());
  }
  // Orthonormality in modulus; representative phases are irrelevant here.
  for (std::size_t i = 0; i < frame.vectors.size(); ++i) {
    for (std::size_t j = i; j < frame.vectors.size(); ++j) {
      const double mod = std::abs(inner_product(frame.vectors[i], frame.vectors[j]));
      const double expected = (i == j) ? 1.0 : 0.0;
      if (std::abs(mod - expected) > tol.eq) {
        throw NotASymmetryError(
            "images of the basis projections are not orthonormal");
      }
    }
  }
  return frame;
}

IsometryWitness build_v(const Frame& frame) {
  IsometryWitness v;
  v.tag = LinearityTag::Linear;
  v.a.resize(frame.ambient_dim, static_cast<Index>(frame.vectors.size()));
  for (std::size_t j = 0; j < frame.vectors.size(); ++j) {
    v.a.col(static_cast<Index>(j)) = frame.vectors[j];
  }
  return v;
}

double parseval_check(const Vector& w, const Frame& frame) {
  double sum = 0.0;
  for (const Vector& g : frame.vectors) {
    sum += std::norm(inner_product(w, g));
  }
  return std::abs(1.0 - sum);
}

SymmetryMap pullback(const SymmetryMap& f, const IsometryWitness& v,
                     const Frame& frame, std::shared_ptr<double> parseval_max,
                     const Tolerances& tol) {
  SymmetryMap g;
  g.domain_dim = f.domain_dim;
  g.codomain_dim = f.domain_dim;
  const Matrix v_adj = v.a.adjoint();
  g.query = [f, v_adj, frame, parseval_max, tol](const Projection& p) {
    const Projection image = f.query(p);
    const double residual = parseval_check(image.rep(), frame);
    accumulate_max(parseval_max, residual);
    if (residual > tol.eq) {
      throw ParsevalError("image leaves the span of the frame");
    }
    return canonicalize(v_adj * image.rep(), tol);
  };
  return g;
}

namespace {

// Queries g on P[(e_j + coeff e_{j+1})/sqrt2], re-phases the returned
// representative so its e_j coordinate is real positive, and returns the
// unit scalar s with image = (e_j - s e_{j+1})/sqrt2.
Complex read_pair_phase(const SymmetryMap& g, Index j, Complex coeff,
                        const Tolerances& tol) {
  const Index n = g.domain_dim;
  Vector pair = Vector::Zero(n);
  pair[j] = kInvSqrt2;
  pair[j + 1] = coeff * kInvSqrt2;
  const Vector r = g.query(canonicalize(pair, tol)).rep();

  double off_support = 0.0;
  for (Index k = 0; k < n; ++k) {
    if (k != j && k != j + 1) off_support += std::norm(r[k]);
  }
  if (std::sqrt(off_support) > tol.eq) {
    throw NotASymmetryError("pair image has support outside its two-plane");
  }
  const double mod_j = std::abs(r[j]);
  if (std::abs(mod_j - kInvSqrt2) > tol.eq) {
    throw NotASymmetryError("pair image has wrong modulus on its base index");
  }
  const Complex rephased = r[j + 1] * std::conj(r[j]) / mod_j;
  Complex s = -kSqrt2 * rephased;
  if (std::abs(std::abs(s) - 1.0) > tol.eq) {
    throw NotASymmetryError("pair image phase is not unimodular");
  }
  return s / std::abs(s);
}

}  // namespace

PhaseChain extract_phase_chain(const SymmetryMap& g,
                               std::shared_ptr<double> phase_relation_max,
                               const Tolerances& tol) {
  const Index n = g.domain_dim;
  PhaseChain chain;
  if (n < 2) return chain;
  chain.delta.reserve(static_cast<std::size_t>(n - 1));
  chain.epsilon.reserve(static_cast<std::size_t>(n - 1));
  for (Index j = 0; j + 1 < n; ++j) {
    const Complex delta = read_pair_phase(g, j, Complex(-1.0, 0.0), tol);
    const Complex epsilon = read_pair_phase(g, j, Complex(0.0, 1.0), tol);
    const double relation =
        std::abs(std::abs(1.0 + delta * std::conj(epsilon)) - kSqrt2);
    accumulate_max(phase_relation_max, relation);
    if (relation > tol.eq) {
      throw PhaseRelationError(
          "pair phases violate |1 + delta conj(epsilon)| = sqrt 2");
    }
    chain.delta.push_back(delta);
    chain.epsilon.push_back(epsilon);
  }
  return chain;
}

LinearityTag classify_linearity(const PhaseChain& chain, const Tolerances& tol) {
  if (chain.delta.empty()) return LinearityTag::Linear;
  const Complex i(0.0, 1.0);
  const double antilinear_score = std::abs(chain.epsilon[0] - i * chain.delta[0]);
  const double linear_score = std::abs(chain.epsilon[0] + i * chain.delta[0]);
  if (std::min(antilinear_score, linear_score) > tol.eq) {
    throw PhaseRelationError("phase chain matches neither linearity branch");
  }
  return linear_score <= antilinear_score ? LinearityTag::Linear
                                          : LinearityTag::Antilinear;
}

IsometryWitness build_u(const PhaseChain& chain, LinearityTag tag) {
  const Index n = static_cast<Index>(chain.delta.size()) + 1;
  IsometryWitness u;
  u.tag = tag;
  u.a = Matrix::Zero(n, n);
  u.a(0, 0) = 1.0;
  Complex prod = 1.0;
  for (Index k = 1; k < n; ++k) {
    prod *= chain.delta[static_cast<std::size_t>(k - 1)];
    prod /= std::abs(prod);  // keep the cumulative product unimodular
    u.a(k, k) = prod;
  }
  return u;
}

IsometryWitness compose_witness(const IsometryWitness& v,
                                const IsometryWitness& u) {
  if (v.a.cols() != u.a.rows()) {
    throw DimensionError("witness composition dimension mismatch");
  }
  IsometryWitness w;
  w.tag = u.tag;
  w.a = v.a * u.a;
  return w;
}

std::pair<double, double> verify_witness(const SymmetryMap& f,
                                         const IsometryWitness& w,
                                         const std::vector<Vector>& samples,
                                         const Tolerances& tol) {
  double max_res = 0.0;
  double sum_res = 0.0;
  for (const Vector& v : samples) {
    const Projection image = f.query(canonicalize(v, tol));
    const Projection predicted = canonicalize(w.apply(v), tol);
    const double d = gap_distance(image, predicted);
    max_res = std::max(max_res, d);
    sum_res += d;
  }
  const double mean = samples.empty() ? 0.0 : sum_res / static_cast<double>(samples.size());
  return {max_res, mean};
}

std::pair<Vector, Vector> adversarial_pair(Index n, Index j) {
  if (n < 3 || j < 2 || j > n - 1) {
    throw DimensionError("adversarial pair needs n >= 3 and 2 <= j <= n-1");
  }
  Vector x = Vector::Zero(n);
  Vector y = Vector::Zero(n);
  x[j - 2] = -0.5;
  x[j - 1] = 0.5;
  x[j] = kInvSqrt2;
  y[j - 2] = Complex(0.0, 0.5);
  y[j - 1] = 0.5;
  y[j] = Complex(0.0, kInvSqrt2);
  return {x, y};
}

namespace {

// Gauge convention: the first column's leading nonzero entry is made real
// positive, so witnesses are comparable across runs.
void fix_global_phase(IsometryWitness& w, const Tolerances& tol) {
  for (Index k = 0; k < w.a.rows(); ++k) {
    const double mod = std::abs(w.a(k, 0));
    if (mod > tol.zero) {
      w.a *= std::conj(w.a(k, 0)) / mod;
      return;
    }
  }
}

std::vector<Vector> verification_samples(Index n, int sample_count,
                                         std::uint64_t seed,
                                         const Tolerances& tol) {
  std::vector<Vector> samples;
  std::mt19937_64 rng(seed);
  for (int s = 0; s < sample_count; ++s) {
    samples.push_back(random_unit_vector(n, rng));
  }
  for (const Projection& p : build_resolving_set(n, tol).elements) {
    samples.push_back(p.rep());
  }
  for (Index j = 2; n >= 3 && j <= n - 1; ++j) {
    auto [x, y] = adversarial_pair(n, j);
    samples.push_back(std::move(x));
    samples.push_back(std::move(y));
  }
  return samples;
}

}  // namespace

ReconstructionReport reconstruct(const SymmetryMap& f, int sample_count,
                                 std::uint64_t seed, const Tolerances& tol) {
  if (sample_count < 1) {
    throw DimensionError("sample_count must be >= 1");
  }
  const Index n = f.domain_dim;
  ReconstructionReport report;

  const Frame frame = extract_frame(f, tol);
  const IsometryWitness v = build_v(frame);
  auto parseval_max = std::make_shared<double>(0.0);
  auto phase_relation_max = std::make_shared<double>(0.0);
  const SymmetryMap g = pullback(f, v, frame, parseval_max, tol);

  IsometryWitness u;
  if (n >= 2) {
    const PhaseChain chain = extract_phase_chain(g, phase_relation_max, tol);
    const LinearityTag tag = classify_linearity(chain, tol);
    const Complex i(0.0, 1.0);
    report.classification_evidence = {
        std::abs(chain.epsilon[0] - i * chain.delta[0]),
        std::abs(chain.epsilon[0] + i * chain.delta[0])};
    u = build_u(chain, tag);
  } else {
    u.tag = LinearityTag::Linear;
    u.a = Matrix::Identity(1, 1);
  }

  report.witness = compose_witness(v, u);
  fix_global_phase(report.witness, tol);

  const std::vector<Vector> samples =
      verification_samples(n, sample_count, seed, tol);
  const auto [max_res, mean_res] = verify_witness(f, report.witness, samples, tol);
  report.max_gap_residual = max_res;
  report.mean_gap_residual = mean_res;
  report.parseval_residual = *parseval_max;
  report.phase_relation_residual = *phase_relation_max;
  report.sample_count = static_cast<int>(samples.size());

  if (max_res > tol.verify) {
    throw VerificationError(
        "reconstructed witness fails verification (max gap residual " +
            std::to_string(max_res) + ")",
        max_res, mean_res);
  }
  return report;
}

double validate_symmetry(const SymmetryMap& f, int pair_count,
                         std::uint64_t seed, const Tolerances& tol) {
  if (pair_count < 1) {
    throw DimensionError("pair_count must be >= 1");
  }
  const Index n = f.domain_dim;
  std::mt19937_64 rng(seed);
  double max_res = 0.0;

  auto check_pair = [&](const Vector& a, const Vector& b) {
    const Projection pa = canonicalize(a, tol);
    const Projection pb = canonicalize(b, tol);
    const double before = transition_probability(pa, pb);
    const double after = transition_probability(f.query(pa), f.query(pb));
    max_res = std::max(max_res, std::abs(before - after));
  };

  for (int s = 0; s < pair_count; ++s) {
    check_pair(random_unit_vector(n, rng), random_unit_vector(n, rng));
  }
  for (Index j = 0; j + 1 < n; ++j) {  // orthogonal fixtures
    check_pair(basis_projection(n, j, tol).rep(),
               basis_projection(n, j + 1, tol).rep());
  }
  for (Index j = 2; n >= 3 && j <= n - 1; ++j) {
    const auto [x, y] = adversarial_pair(n, j);
    check_pair(x, y);
  }
  return max_res;
}

}  // namespace wigner
