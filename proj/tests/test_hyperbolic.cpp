// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "bures/errors.hpp"
#include "bures/hyperbolic.hpp"
#include "bures/measures.hpp"
#include "bures/random.hpp"
#include "oracle.hpp"

using namespace bures;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

const Regime kMixedRegimes[] = {Regime::uniform_ball, Regime::near_pure, Regime::near_mixed};

template <typename F>
void for_pairs(std::uint64_t seed, Regime ru, Regime rv, std::uint64_t n, F&& f) {
  for (std::uint64_t i = 0; i < n; ++i) {
    f(random_bloch(derive_key(seed, 2 * i), ru), random_bloch(derive_key(seed, 2 * i + 1), rv));
  }
}

bool finite_rapidity(const BlochVector& n) { return n.norm() <= kFiniteRapidityNorm; }

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

const BlochVector kHalfX{0.5, 0, 0};
const BlochVector kHalfY{0, 0.5, 0};

}  // namespace

TEST(Rapidity, examples) {
  auto r = rapidity_from_bloch({0, 0, 0});
  EXPECT_EQ(r.phi, 0.0);
  EXPECT_EQ(r.direction, (Vec3{0, 0, 1}));
  r = rapidity_from_bloch({0, 0, 0.6});
  EXPECT_NEAR(r.phi, std::log(2.0), 1e-15);
  EXPECT_NEAR(r.phi, 0.6931472, 1e-7);
  EXPECT_EQ(rapidity_from_bloch({1, 0, 0}).phi, kInf);

  EXPECT_EQ(bloch_from_rapidity({{0, 1, 0}, 0.0}).vec(), (Vec3{0, 0, 0}));
  const BlochVector b = bloch_from_rapidity({{1, 0, 0}, std::log(2.0)});
  EXPECT_NEAR(b.x(), 0.6, 1e-15);
  EXPECT_EQ(bloch_from_rapidity({{0, 1, 0}, kInf}).vec(), (Vec3{0, 1, 0}));
}

TEST(Rapidity, representation_invariants) {
  for (Regime r : {Regime::uniform_ball, Regime::near_pure, Regime::near_mixed, Regime::pure}) {
    for (std::uint64_t i = 0; i < 10000; ++i) {
      const BlochVector n = random_bloch(derive_key(30, i), r);
      const RapidityRep rep = rapidity_from_bloch(n);
      EXPECT_NEAR(norm(rep.direction), 1.0, 1e-12);
      EXPECT_GE(rep.phi, 0.0);
      if (n.is_pure()) {
        EXPECT_EQ(rep.phi, kInf);
        continue;
      }
      EXPECT_NEAR(std::tanh(rep.phi), n.norm(), 1e-12);
      const BlochVector back = bloch_from_rapidity(rep);
      EXPECT_NEAR(back.x(), n.x(), 1e-12);
      EXPECT_NEAR(back.y(), n.y(), 1e-12);
      EXPECT_NEAR(back.z(), n.z(), 1e-12);
    }
  }
}

TEST(LorentzBoost, examples) {
  EXPECT_EQ(max_abs_diff(lorentz_boost({{0, 0, 1}, 0.0}), ComplexMatrix2::identity()), 0.0);
  EXPECT_LE(max_abs_diff(lorentz_boost({{0, 0, 1}, std::log(2.0)}), ComplexMatrix2::diagonal(2, 0.5)),
            1e-15);
  EXPECT_THROW(lorentz_boost({{0, 0, 1}, kInf}), OutOfRegime);
}

TEST(LorentzBoost, density_correspondence) {
  for (Regime r : kMixedRegimes) {
    for (std::uint64_t i = 0; i < 10000; ++i) {
      const BlochVector n = random_bloch(derive_key(31, i), r);
      if (!finite_rapidity(n)) continue;
      const RapidityRep rep = rapidity_from_bloch(n);
      const ComplexMatrix2 l = lorentz_boost(rep);
      EXPECT_NEAR(l.trace().real(), 2 * std::cosh(rep.phi), 1e-12 * std::cosh(rep.phi));
      EXPECT_NEAR(l.determinant().real(), 1.0, 1e-12 * std::cosh(rep.phi) * std::cosh(rep.phi));
      const ComplexMatrix2 rho = Complex(1.0 / (2 * std::cosh(rep.phi))) * l;
      EXPECT_LE(max_abs_diff(rho, density_from_bloch(n).matrix()), 1e-12);
    }
  }
}

TEST(EinsteinAdd, examples) {
  const BlochVector v{0.1, -0.7, 0.2};
  const BlochVector w0 = einstein_add({0, 0, 0}, v);
  EXPECT_EQ(w0.vec(), v.vec());

  EXPECT_NEAR(einstein_add(kHalfX, kHalfX).x(), 0.8, 1e-15);
  EXPECT_NEAR(std::tanh(2 * std::atanh(0.5)), 0.8, 1e-15);

  const BlochVector w = einstein_add(kHalfX, kHalfY);
  EXPECT_NEAR(w.x(), 0.5, 1e-15);
  EXPECT_NEAR(w.y(), 0.5 * std::sqrt(0.75), 1e-15);
  EXPECT_NEAR(w.y(), 0.4330127, 1e-7);
  EXPECT_EQ(w.z(), 0.0);
  EXPECT_NEAR(1 / std::sqrt(1 - w.norm_squared()), 4.0 / 3, 1e-15);
}

TEST(EinsteinAdd, errors) {
  EXPECT_THROW(einstein_add({1, 0, 0}, kHalfY), OutOfRegime);
}

TEST(EinsteinAdd, pure_right_operand_stays_on_the_sphere) {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const BlochVector u = random_bloch(derive_key(43, i), Regime::uniform_ball);
    const BlochVector v = random_bloch(derive_key(44, i), Regime::pure);
    if (u.norm() > 0.99 || 1 + dot(u.vec(), v.vec()) < 1e-3) continue;
    EXPECT_NEAR(einstein_add(u, v).norm(), 1.0, 1e-12);
  }
}

TEST(EinsteinAdd, matches_four_vector_boost) {
  for_pairs(32, Regime::uniform_ball, Regime::uniform_ball, 10000,
            [](const BlochVector& u, const BlochVector& v) {
              if (u.norm() > 0.99 || v.norm() > 0.99) return;
              const Vec3 w = einstein_add(u, v).vec();
              const Vec3 ref = oracle::boosted_velocity(u.vec(), v.vec());
              EXPECT_NEAR(w.x, ref.x, 1e-12);
              EXPECT_NEAR(w.y, ref.y, 1e-12);
              EXPECT_NEAR(w.z, ref.z, 1e-12);
            });
}

TEST(EinsteinAdd, norm_symmetric_but_not_commutative) {
  bool differs = false;
  for (Regime ru : kMixedRegimes) {
    for (Regime rv : kMixedRegimes) {
      for_pairs(33, ru, rv, 5000, [&](const BlochVector& u, const BlochVector& v) {
        if (!finite_rapidity(u) || !finite_rapidity(v)) return;
        if (1 + dot(u.vec(), v.vec()) < 1e-6) return;
        const BlochVector uv = einstein_add(u, v);
        const BlochVector vu = einstein_add(v, u);
        EXPECT_NEAR(uv.norm(), vu.norm(), 1e-12);
        if (norm(uv.vec() - vu.vec()) > 1e-6) differs = true;
      });
    }
  }
  EXPECT_TRUE(differs);
}

TEST(GammaComposition, examples) {
  EXPECT_EQ(gamma_composition({0, 0, 0}, {0, 0, 0}), 1.0);
  EXPECT_NEAR(gamma_composition(kHalfX, kHalfY), 4.0 / 3, 1e-15);
  EXPECT_NEAR(std::cosh(std::atanh(0.6614378)), 1 / 0.75, 1e-6);
  for (double t : {0.1, 0.5, 0.9, 0.999}) {
    const BlochVector u{0, t, 0};
    const BlochVector minus_u{0, -t, 0};
    EXPECT_NEAR(gamma_composition(u, minus_u), 1.0, 1e-12);
  }
}

TEST(GammaComposition, composition_and_cosine_law_agree) {
  for (Regime ru : kMixedRegimes) {
    for (Regime rv : kMixedRegimes) {
      for_pairs(34, ru, rv, 10000, [](const BlochVector& u, const BlochVector& v) {
        if (!finite_rapidity(u) || !finite_rapidity(v)) return;
        const double g11 = gamma_composition(u, v);
        EXPECT_LE(rel_diff(cosine_law_cosh(u, v), g11), 1e-10);
        EXPECT_LE(rel_diff(gamma_composition(v, u), g11), 1e-12);
      });
    }
  }
}

TEST(GammaComposition, matches_composed_velocity_when_conditioned) {
  // 1/sqrt(1 - |w|^2) amplifies rounding in |w| by about gamma_w^2, so the
  // comparison is only meaningful while gamma_w stays moderate.
  std::size_t checked = 0;
  for (Regime ru : kMixedRegimes) {
    for (Regime rv : kMixedRegimes) {
      for_pairs(35, ru, rv, 10000, [&](const BlochVector& u, const BlochVector& v) {
        if (!finite_rapidity(u) || !finite_rapidity(v)) return;
        const double g11 = gamma_composition(u, v);
        if (g11 > 100 || 1 + dot(u.vec(), v.vec()) < 1e-6) return;
        const double g_w = 1 / std::sqrt(1 - einstein_add(u, v).norm_squared());
        EXPECT_LE(rel_diff(g_w, g11), 1e-10);
        ++checked;
      });
    }
  }
  EXPECT_GT(checked, 30000u);
}

TEST(FidelityHyperbolic, examples) {
  for (Regime r : kMixedRegimes) {
    for (std::uint64_t i = 0; i < 2000; ++i) {
      const BlochVector n = random_bloch(derive_key(36, i), r);
      if (!finite_rapidity(n)) continue;
      EXPECT_NEAR(fidelity_hyperbolic(n, n), 1.0, 1e-12);
    }
  }
  EXPECT_NEAR(fidelity_hyperbolic({0, 0, 0}, {0, 0, 0.8}), 0.8, 1e-15);
  EXPECT_NEAR((1 + 5.0 / 3) / (2 * 5.0 / 3), 0.8, 1e-15);
  EXPECT_NEAR(fidelity_hyperbolic(kHalfX, kHalfY), 0.875, 1e-15);
  EXPECT_NEAR((7.0 / 6) / (4.0 / 3), 0.875, 1e-15);
  EXPECT_THROW(fidelity_hyperbolic({0, 0, 1}, kHalfX), OutOfRegime);
}

TEST(FidelityHyperbolic, theorem_equivalence) {
  for (Regime ru : kMixedRegimes) {
    for (Regime rv : kMixedRegimes) {
      double worst = 0;
      for_pairs(37, ru, rv, 20000, [&](const BlochVector& u, const BlochVector& v) {
        if (!finite_rapidity(u) || !finite_rapidity(v)) return;
        const double fm = bures_fidelity_matrix(density_from_bloch(u), density_from_bloch(v));
        worst = std::max(worst, std::abs(fidelity_hyperbolic(u, v) - fm));
      });
      EXPECT_LE(worst, 1e-10) << to_string(ru) << " x " << to_string(rv);
    }
  }
}

TEST(FidelityHyperbolic, pure_limit_convergence) {
  for (double delta : {1e-4, 1e-6, 1e-8}) {
    for (std::uint64_t i = 0; i < 2000; ++i) {
      const Vec3 a = random_bloch(derive_key(38, 2 * i), Regime::pure).vec();
      const Vec3 b = random_bloch(derive_key(38, 2 * i + 1), Regime::pure).vec();
      const double r = 1 - delta;
      const double f = fidelity_hyperbolic(BlochVector(r * a), BlochVector(r * b));
      EXPECT_LE(std::abs(f - 0.5 * (1 + dot(a, b))), 10 * delta) << delta;
    }
  }
}

TEST(FidelityHyperbolic, symmetric_and_rotation_invariant) {
  std::uint64_t k = 0;
  for (Regime ru : kMixedRegimes) {
    for (Regime rv : kMixedRegimes) {
      for_pairs(39, ru, rv, 1000, [&](const BlochVector& u, const BlochVector& v) {
        if (!finite_rapidity(u) || !finite_rapidity(v)) return;
        const double f = fidelity_hyperbolic(u, v);
        EXPECT_NEAR(fidelity_hyperbolic(v, u), f, 1e-11);
        const Rotation3 rot = random_rotation(derive_key(40, k++));
        const BlochVector ru_(rot.apply(u.vec()));
        const BlochVector rv_(rot.apply(v.vec()));
        if (!finite_rapidity(ru_) || !finite_rapidity(rv_)) return;
        EXPECT_NEAR(fidelity_hyperbolic(ru_, rv_), f, 1e-11);
      });
    }
  }
}

TEST(Disk, distance_and_geodesics) {
  EXPECT_EQ(disk_distance(0.0, 0.0), 0.0);
  // radius tanh(phi/2) sits at distance phi from the origin
  EXPECT_NEAR(disk_distance(0.0, std::tanh(0.5)), 1.0, 1e-15);
  const DiskPoint p{0.3, -0.2}, q{-0.5, 0.6};
  EXPECT_NEAR(disk_distance(p, q), oracle::disk_distance(p, q), 1e-14);
  EXPECT_NEAR(disk_distance(p, q), disk_distance(q, p), 1e-15);

  const auto line = geodesic_polyline(p, q, 2);
  ASSERT_EQ(line.size(), 2u);
  EXPECT_EQ(line.front(), p);
  EXPECT_EQ(line.back(), q);
  EXPECT_THROW(geodesic_polyline(p, q, 1), std::invalid_argument);

  const double d = disk_distance(p, q);
  const auto pts = geodesic_polyline(p, q, 11);
  ASSERT_EQ(pts.size(), 11u);
  EXPECT_EQ(pts.front(), p);
  EXPECT_EQ(pts.back(), q);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double t = static_cast<double>(i) / 10;
    EXPECT_NEAR(disk_distance(p, pts[i]), t * d, 1e-12);
    EXPECT_NEAR(disk_distance(pts[i], q), (1 - t) * d, 1e-12);
  }
  const DiskPoint mid = geodesic_point(p, q, 0.5);
  const DiskPoint ref = oracle::hyperboloid_midpoint(p, q);
  EXPECT_NEAR(std::abs(mid - ref), 0.0, 1e-14);
}

TEST(Triangle, orthogonal_pair) {
  const HyperbolicTriangle t = triangle(kHalfX, kHalfY);
  EXPECT_NEAR(t.angle_A, kPi / 2, 1e-15);
  EXPECT_LE(t.law_of_cosines_residual(), 1e-12);
  EXPECT_NEAR(t.phi_u, std::atanh(0.5), 1e-15);
  EXPECT_NEAR(t.phi_v, std::atanh(0.5), 1e-15);
  EXPECT_NEAR(std::cosh(t.phi_w), 4.0 / 3, 1e-15);
  EXPECT_EQ(t.disk_A, DiskPoint(0.0, 0.0));
  EXPECT_EQ(t.disk_B.imag(), 0.0);
  EXPECT_GT(t.disk_B.real(), 0.0);
  EXPECT_NEAR(oracle::disk_distance(t.disk_B, t.disk_C), t.phi_w, 1e-9);
}

TEST(Triangle, collinear_equal_inputs) {
  const BlochVector u{0.3, 0, 0};
  const HyperbolicTriangle t = triangle(u, u);
  EXPECT_NEAR(t.angle_A, kPi, 1e-15);
  EXPECT_NEAR(t.phi_w, 2 * std::atanh(0.3), 1e-12);
  EXPECT_NEAR(t.phi_w, 2 * t.phi_u, 1e-12);
  EXPECT_LE(t.law_of_cosines_residual(), 1e-12);
  EXPECT_NEAR(oracle::disk_distance(t.disk_B, t.disk_C), t.phi_w, 1e-9);
}

TEST(Triangle, errors) {
  EXPECT_THROW(triangle({0, 0, 0}, kHalfX), Degenerate);
  EXPECT_THROW(triangle(kHalfX, {0, 0, 1e-13}), Degenerate);
  EXPECT_THROW(triangle({1, 0, 0}, kHalfY), OutOfRegime);
}

TEST(Triangle, geometry_properties) {
  std::size_t checked = 0;
  for (Regime ru : kMixedRegimes) {
    for (Regime rv : kMixedRegimes) {
      for_pairs(41, ru, rv, 3000, [&](const BlochVector& u, const BlochVector& v) {
        if (!finite_rapidity(u) || !finite_rapidity(v)) return;
        if (u.norm() <= kDirectionNorm || v.norm() <= kDirectionNorm) return;
        const HyperbolicTriangle t = triangle(u, v);
        ++checked;
        EXPECT_LE(t.law_of_cosines_residual(), 1e-10);
        EXPECT_GE(t.angle_A, 0.0);
        EXPECT_LE(t.angle_A, kPi);
        EXPECT_GE(t.phi_w, std::abs(t.phi_u - t.phi_v) - 1e-12);
        EXPECT_LE(t.phi_w, t.phi_u + t.phi_v + 1e-12);
        EXPECT_NEAR(std::tanh(t.phi_u), u.norm(), 1e-12);
        EXPECT_NEAR(std::tanh(t.phi_v), v.norm(), 1e-12);
        for (DiskPoint p : {t.disk_A, t.disk_B, t.disk_C, t.disk_D}) EXPECT_LT(std::abs(p), 1.0);

        // Side lengths from coordinates, through the independent Mobius form.
        EXPECT_NEAR(oracle::disk_distance(t.disk_A, t.disk_B), t.phi_u, 1e-9);
        EXPECT_NEAR(oracle::disk_distance(t.disk_A, t.disk_C), t.phi_v, 1e-9);
        EXPECT_NEAR(oracle::disk_distance(t.disk_B, t.disk_C), t.phi_w, 1e-9);

        // D is the midpoint of BC: equal halves that add back up to |BC|.
        EXPECT_NEAR(oracle::disk_distance(t.disk_B, t.disk_D), t.phi_w / 2, 1e-9);
        EXPECT_NEAR(oracle::disk_distance(t.disk_D, t.disk_C), t.phi_w / 2, 1e-9);
        EXPECT_NEAR(oracle::disk_distance(t.disk_A, t.disk_D), t.median_AD, 1e-9);
      });
    }
  }
  EXPECT_GT(checked, 20000u);
}

TEST(Triangle, midpoint_matches_hyperboloid_construction) {
  for_pairs(42, Regime::uniform_ball, Regime::uniform_ball, 5000,
            [](const BlochVector& u, const BlochVector& v) {
              if (u.norm() > 0.999 || v.norm() > 0.999) return;
              const HyperbolicTriangle t = triangle(u, v);
              const DiskPoint ref = oracle::hyperboloid_midpoint(t.disk_B, t.disk_C);
              EXPECT_LE(std::abs(t.disk_D - ref), 1e-12);
            });
}
