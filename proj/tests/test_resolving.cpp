#include <cmath>
#include <random>

#include <doctest.h>

#include "wigner/resolving.hpp"

using namespace wigner;

namespace {

const Complex kI(0.0, 1.0);
const double kSqrt2 = std::sqrt(2.0);

Vector make_vec(std::initializer_list<Complex> entries) {
  Vector v(static_cast<Index>(entries.size()));
  Index k = 0;
  for (const Complex& z : entries) v[k++] = z;
  return v;
}

// Random element of D: every coordinate bounded away from zero.
Vector random_in_domain(Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  Vector v(n);
  for (Index k = 0; k < n; ++k) {
    const double mod = 0.2 + std::abs(gauss(rng));
    const double a = angle(rng);
    v[k] = Complex(mod * std::cos(a), mod * std::sin(a));
  }
  return v / v.norm();
}

// Forward oracle for the chain step: evaluates the three moduli directly.
struct ChainReadings {
  double m, m_diff, m_idiff;
};

ChainReadings forward_readings(Complex v_k, Complex b) {
  return {std::abs(b), std::abs(v_k - b), std::abs(v_k - kI * b)};
}

}  // namespace

TEST_CASE("resolving set construction") {
  CHECK_THROWS_AS(build_resolving_set(0), DimensionError);

  const ResolvingSet r1 = build_resolving_set(1);
  CHECK(r1.elements.size() == 1);

  const ResolvingSet r2 = build_resolving_set(2);
  REQUIRE(r2.elements.size() == 4);
  CHECK(gap_distance(r2.elements[0], basis_projection(2, 0)) == doctest::Approx(0.0));
  CHECK(gap_distance(r2.elements[1], basis_projection(2, 1)) == doctest::Approx(0.0));
  const Projection diff = canonicalize(make_vec({1.0, -1.0}));
  const Projection idiff = canonicalize(make_vec({1.0, kI}));
  CHECK(gap_distance(r2.elements[2], diff) == doctest::Approx(0.0));
  CHECK(gap_distance(r2.elements[3], idiff) == doctest::Approx(0.0));

  CHECK(build_resolving_set(5).elements.size() == 13);
  for (const Projection& p : build_resolving_set(6).elements) {
    CHECK(p.rep().norm() == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("profile of basis and pair projections") {
  const ResolvingSet r = build_resolving_set(2);

  const DistanceProfile p1 = profile_of(basis_projection(2, 0), r);
  CHECK(p1.moduli_basis[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(p1.moduli_basis[1] == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(p1.moduli_diff[0] == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(p1.moduli_idiff[0] == doctest::Approx(1.0).epsilon(1e-7));

  const DistanceProfile p2 = profile_of(canonicalize(make_vec({1.0, 1.0})), r);
  CHECK(p2.moduli_basis[0] == doctest::Approx(1.0 / kSqrt2).epsilon(1e-14));
  CHECK(p2.moduli_basis[1] == doctest::Approx(1.0 / kSqrt2).epsilon(1e-14));
  CHECK(p2.moduli_diff[0] == doctest::Approx(0.0).epsilon(1e-7));
  CHECK(p2.moduli_idiff[0] == doctest::Approx(1.0).epsilon(1e-7));

  const DistanceProfile p3 = profile_of(canonicalize(make_vec({1.0, kI})), r);
  CHECK(p3.moduli_basis[0] == doctest::Approx(1.0 / kSqrt2).epsilon(1e-14));
  CHECK(p3.moduli_diff[0] == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(p3.moduli_idiff[0] == doctest::Approx(kSqrt2).epsilon(1e-7));

  CHECK_THROWS_AS(profile_of(basis_projection(3, 0), r), DimensionError);
}

TEST_CASE("recover_next_coordinate inverts the forward readings") {
  const Complex v_k(1.0 / kSqrt2, 0.0);
  for (const Complex b : {Complex(1.0 / kSqrt2, 0.0), kI / kSqrt2, -kI / kSqrt2}) {
    const ChainReadings r = forward_readings(v_k, b);
    const Complex got = recover_next_coordinate(v_k, r.m, r.m_diff, r.m_idiff);
    CHECK(std::abs(got - b) <= 1e-14);
  }

  CHECK_THROWS_AS(recover_next_coordinate(Complex(0.0, 0.0), 0.5, 0.5, 0.5),
                  ZeroPivotError);
  // Readings inconsistent with any complex coordinate.
  CHECK_THROWS_AS(recover_next_coordinate(v_k, 0.1, 1.4, 1.4),
                  InconsistentProfileError);
}

TEST_CASE("recover_next_coordinate is exact on noiseless inputs") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double bound = 100 * std::numeric_limits<double>::epsilon();
  for (int trial = 0; trial < 500; ++trial) {
    const Complex v_k(gauss(rng), gauss(rng));
    if (std::abs(v_k) < 0.05) continue;
    const Complex b(gauss(rng), gauss(rng));
    const ChainReadings r = forward_readings(v_k, b);
    const Complex got = recover_next_coordinate(v_k, r.m, r.m_diff, r.m_idiff);
    CHECK(std::abs(got - b) <= bound * (1.0 + std::abs(b) / std::abs(v_k)));
  }
}

TEST_CASE("profile round-trip on elements of D") {
  const ResolvingSet r3 = build_resolving_set(3);

  const Projection p = canonicalize(make_vec({1.0, 1.0, 1.0}));
  CHECK(gap_distance(recover_from_profile(profile_of(p, r3)), p) <= 1e-9);

  const Projection q =
      canonicalize(make_vec({1.0 / kSqrt2, 0.5, 0.5 * kI}));
  CHECK(gap_distance(recover_from_profile(profile_of(q, r3)), q) <= 1e-9);

  const Projection outside = canonicalize(make_vec({1.0, 0.0, 1.0}));
  CHECK_THROWS_AS(recover_from_profile(profile_of(outside, r3)), NotInDomainError);
}

TEST_CASE("round-trip law across dimensions") {
  std::mt19937_64 rng(11);
  for (Index n : {2, 3, 8, 32}) {
    const ResolvingSet r = build_resolving_set(n);
    const int trials = n <= 8 ? 250 : 100;
    for (int t = 0; t < trials; ++t) {
      const Projection p = canonicalize(random_in_domain(n, rng));
      const Projection back = recover_from_profile(profile_of(p, r));
      CHECK(gap_distance(p, back) <= 1e-6);
    }
  }
}

TEST_CASE("R resolves D but not the whole projective space") {
  const ResolvingSet r = build_resolving_set(3);
  const Projection v = canonicalize(make_vec({1.0, 0.0, 1.0}));
  const Projection w = canonicalize(make_vec({1.0, 0.0, kI}));

  const DistanceProfile pv = profile_of(v, r);
  const DistanceProfile pw = profile_of(w, r);
  for (std::size_t k = 0; k < pv.moduli_basis.size(); ++k) {
    CHECK(std::abs(pv.moduli_basis[k] - pw.moduli_basis[k]) <= 1e-15);
  }
  for (std::size_t k = 0; k < pv.moduli_diff.size(); ++k) {
    CHECK(std::abs(pv.moduli_diff[k] - pw.moduli_diff[k]) <= 1e-15);
    CHECK(std::abs(pv.moduli_idiff[k] - pw.moduli_idiff[k]) <= 1e-15);
  }
  CHECK(gap_distance(v, w) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
}

TEST_CASE("resolving property, brute force at n = 3") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  const ResolvingSet r = build_resolving_set(3);
  const double tol_eq = 1e-7;

  auto profiles_agree = [&](const DistanceProfile& a, const DistanceProfile& b) {
    for (std::size_t k = 0; k < a.moduli_basis.size(); ++k) {
      if (std::abs(a.moduli_basis[k] - b.moduli_basis[k]) > tol_eq) return false;
    }
    for (std::size_t k = 0; k < a.moduli_diff.size(); ++k) {
      if (std::abs(a.moduli_diff[k] - b.moduli_diff[k]) > tol_eq) return false;
      if (std::abs(a.moduli_idiff[k] - b.moduli_idiff[k]) > tol_eq) return false;
    }
    return true;
  };

  int agreeing = 0;
  for (int t = 0; t < 10000; ++t) {
    const Vector v = random_in_domain(3, rng);
    // Half the pairs are the same projection under a scrambled phase, so the
    // implication is exercised in the non-vacuous direction too.
    Vector w;
    if (t % 2 == 0) {
      const double a = angle(rng);
      w = Complex(std::cos(a), std::sin(a)) * v;
    } else {
      w = random_in_domain(3, rng);
    }
    const Projection pv = canonicalize(v);
    const Projection pw = canonicalize(w);
    if (profiles_agree(profile_of(pv, r), profile_of(pw, r))) {
      ++agreeing;
      CHECK(gap_distance(pv, pw) <= 10 * tol_eq);
    }
  }
  CHECK(agreeing >= 5000);
}
