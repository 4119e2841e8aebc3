#include <gtest/gtest.h>

#include "curvelim/vessel.hpp"
#include "support.hpp"

using namespace curvelim;
using namespace testsupport;

namespace {

const Gauss kI = Gauss::i();

// A1 = [i], A2 = [2i + 1] with Φ = [1]: σ1 = 2, σ2 = 4 and
// γin = σ1·conj(A2) − σ2·conj(A1) = 2(1 − 2i) + 4i = 2.
QVessel one_dim() {
  QMatrix a1(1, 1), a2(1, 1);
  a1(0, 0) = kI;
  a2(0, 0) = kI * Gauss(2) + Gauss(1);
  return vessel_from_operators(a1, a2);
}

QPoly biv(std::initializer_list<std::pair<Exponent, long>> terms) { return poly(2, terms); }

RationalPair identity_map() { return {biv({{{0, 0, 0}, 1}}), biv({{{1, 0, 0}, 1}}), biv({{{0, 1, 0}, 1}}), 1}; }

// Bivariate power (a·y1 − y2 + b)^k.
QPoly line_power(const Rational& a, const Rational& b, std::size_t k) {
  QPoly l(2);
  l.add_term({1, 0, 0}, Gauss(a));
  l.add_term({0, 1, 0}, Gauss(-1));
  l.add_term({0, 0, 0}, Gauss(b));
  QPoly r = QPoly::constant(2, Gauss(1));
  for (std::size_t j = 0; j < k; ++j) r = r * l;
  return r;
}

}  // namespace

TEST(VesselCheck, oneDimensionalFixture) {
  const QVessel v = one_dim();
  EXPECT_EQ(v.phi, qm({{1}}));
  EXPECT_EQ(v.sigma1, qm({{2}}));
  EXPECT_EQ(v.sigma2, qm({{4}}));
  EXPECT_EQ(v.gamma_in, qm({{2}}));
  EXPECT_EQ(v.gamma_out, qm({{2}}));
  const VesselReport r = vessel_check(v);
  EXPECT_TRUE(r.ok());
  for (const auto& a : r.axioms) EXPECT_EQ(a.value, 0.0) << a.name;
}

TEST(VesselCheck, selfadjointWithZeroCoupling) {
  const QMatrix a1 = qm({{1, 2}, {2, -1}}), a2 = a1 * a1;
  const QVessel v{a1, a2, QMatrix(2, 2), QMatrix(2, 2), QMatrix(2, 2), QMatrix(2, 2), QMatrix(2, 2)};
  EXPECT_TRUE(vessel_check(v).ok());
  const QVessel z = vessel_from_operators(a1, a2);
  EXPECT_EQ(z.ext_dim(), 0u);
  EXPECT_TRUE(vessel_check(z).ok());
}

TEST(VesselCheck, perturbedGammaIn) {
  QVessel v = one_dim();
  v.gamma_in(0, 0) += Gauss(Rational(1, 1000));
  const VesselReport r = vessel_check(v);
  EXPECT_FALSE(r.ok());
  const auto failing = r.failing();
  // γin enters its own axiom and the linkage axiom.
  EXPECT_EQ(failing, (std::vector<std::string>{"gamma_in", "linkage"}));
  EXPECT_TRUE(r.axioms[0].holds);
  EXPECT_TRUE(r.axioms[1].holds);
  EXPECT_TRUE(r.axioms[3].holds);
}

TEST(VesselCheck, floatPathTolerance) {
  Rng rng(3);
  const QVessel v = random_vessel_fixture(4, 2, rng);
  CVessel c = to_complex(v);
  EXPECT_TRUE(vessel_check(c, 1e-9).ok());
  c.gamma_in(0, 0) += 1e-3;
  EXPECT_FALSE(vessel_check(c, 1e-9).ok());
}

TEST(VesselCheck, shapeMismatch) {
  QVessel v = one_dim();
  v.phi = QMatrix(2, 1);
  EXPECT_THROW(vessel_check(v), InputError);
}

TEST(VesselFixture, axiomsHoldExactly) {
  Rng rng(5);
  for (int k = 0; k < 12; ++k) {
    const QVessel v = random_vessel_fixture(1 + k % 6, 1 + k % 3, rng);
    EXPECT_TRUE(vessel_check(v).ok());
    EXPECT_LE(v.ext_dim(), static_cast<std::size_t>(1 + k % 3));
  }
}

TEST(VesselFixture, affineSecondOperator) {
  // A2 = αA1 + βI: σ2 = ασ1, γin = βσ1, Δ ∝ (αy1 − y2 + β)^dimE.
  const Rational alpha(3, 2), beta(-2);
  const FixtureSpec spec{{Rational(1), Rational(-1), Rational(1, 2)}, {Gauss(1), Gauss(2), Gauss(-1)}, {beta, alpha}};
  const QVessel v = vessel_fixture(spec);
  EXPECT_EQ(v.sigma2, v.sigma1 * Gauss(alpha));
  EXPECT_EQ(v.gamma_in, v.sigma1 * Gauss(beta));
  const Discriminant d = discriminant(v);
  EXPECT_TRUE(d.equal);
  EXPECT_TRUE(proportional(d.in, line_power(alpha, beta, v.ext_dim())));
  EXPECT_TRUE(cayley_hamilton_check(v).zero);
}

TEST(Discriminant, examples) {
  const Discriminant d = discriminant(one_dim());
  EXPECT_EQ(d.in, biv({{{1, 0, 0}, 4}, {{0, 1, 0}, -2}, {{0, 0, 0}, 2}}));
  EXPECT_TRUE(d.equal);

  const QMatrix s1 = qm({{1, 0}, {0, -1}}), s2 = qm({{0, 1}, {1, 0}});
  const QVessel z{qm({{1}}), qm({{2}}), QMatrix(2, 1), s1, s2, QMatrix(2, 2), QMatrix(2, 2)};
  // det(y1·s2 − y2·s1) = −y2² − y1².
  EXPECT_EQ(discriminant(z).in, biv({{{2, 0, 0}, -1}, {{0, 2, 0}, -1}}));
}

TEST(Discriminant, inOutEqualityOnFixtures) {
  Rng rng(7);
  for (int k = 0; k < 12; ++k) {
    const QVessel v = random_vessel_fixture(2 + k % 5, 1 + k % 3, rng);
    const Discriminant d = discriminant(v);
    EXPECT_TRUE(d.equal);
    EXPECT_EQ(d.in.total_degree(), static_cast<int>(v.ext_dim()));
  }
}

TEST(CayleyHamilton, examples) {
  QVessel v = one_dim();
  // Δ(A1, A2) = 4i − 2(2i + 1) + 2 = 0.
  EXPECT_TRUE(cayley_hamilton_check(v).zero);
  const QMatrix a1 = qm({{1, 2}, {2, -1}});
  const QVessel z{a1, a1, QMatrix(0, 2), QMatrix(0, 0), QMatrix(0, 0), QMatrix(0, 0), QMatrix(0, 0)};
  const CayleyHamilton ch = cayley_hamilton_check(z);
  EXPECT_EQ(ch.principal.dim(), 0u);
  EXPECT_TRUE(ch.zero);
}

TEST(CayleyHamilton, fixtures) {
  Rng rng(11);
  for (int k = 0; k < 10; ++k) {
    const QVessel v = random_vessel_fixture(2 + k % 6, 1 + k % 3, rng);
    const CayleyHamilton ch = cayley_hamilton_check(v);
    EXPECT_TRUE(ch.zero);
    EXPECT_GE(ch.principal.dim(), v.ext_dim() > 0 ? 1u : 0u);
  }
}

TEST(Fibers, examples) {
  const QVessel v = one_dim();
  Fibers f = fibers(v, Gauss(0), Gauss(1));
  EXPECT_TRUE(f.on_curve);
  EXPECT_EQ(f.in.dim(), 1u);
  EXPECT_EQ(f.out.dim(), 1u);
  f = fibers(v, Gauss(0), Gauss(0));
  EXPECT_FALSE(f.on_curve);
  EXPECT_EQ(f.in.dim(), 0u);
  EXPECT_EQ(f.out.dim(), 0u);

  const QMatrix s = qm({{1, 0}, {0, 2}});
  const QVessel z{qm({{1}}), qm({{1}}), QMatrix(2, 1), s, s, QMatrix(2, 2), QMatrix(2, 2)};
  f = fibers(z, Gauss(3), Gauss(3));
  EXPECT_EQ(f.in.dim(), 2u);
}

TEST(Transform, identityMapIsIdentity) {
  Rng rng(13);
  for (int k = 0; k < 6; ++k) {
    const QVessel v = random_vessel_fixture(2 + k % 4, 1 + k % 3, rng);
    const TransformedVessel t = transform_vessel(v, identity_map());
    EXPECT_TRUE(t.report.ok());
    EXPECT_EQ(t.vessel.a1, v.a1);
    EXPECT_EQ(t.vessel.a2, v.a2);
    EXPECT_EQ(t.vessel.sigma1, v.sigma1);
    EXPECT_EQ(t.vessel.sigma2, v.sigma2);
    EXPECT_EQ(t.vessel.gamma_in, v.gamma_in);
    EXPECT_EQ(t.vessel.gamma_out, v.gamma_out);
    EXPECT_EQ(t.vessel.phi, v.phi);
  }
}

TEST(Transform, quadraticMapOnAffineFixture) {
  const Rational alpha(2), beta(1);
  const FixtureSpec spec{{Rational(0), Rational(1)}, {Gauss(1), Gauss(1)}, {beta, alpha}};
  const QVessel v = vessel_fixture(spec);
  const RationalPair rp{biv({{{0, 0, 0}, 1}}), biv({{{1, 0, 0}, 1}}), biv({{{2, 0, 0}, 1}}), 2};
  const TransformedVessel t = transform_vessel(v, rp);
  EXPECT_TRUE(t.report.ok());
  EXPECT_EQ(t.vessel.a1, v.a1);
  EXPECT_EQ(t.vessel.a2, v.a1 * v.a1);
  Rng rng(17);
  const ReducedVessel red = reduce_transformed(t, rng);
  ASSERT_TRUE(red.vessel.has_value());
  EXPECT_TRUE(red.report.ok());
  const QPoly d = discriminant(*red.vessel).in;
  ASSERT_FALSE(d.is_zero());
  for (int k = -4; k <= 4; ++k) {
    const Gauss s(Rational(k, 3));
    EXPECT_EQ(d.evaluate({s, s * s}), Gauss(0));
  }
}

TEST(Transform, zeroCouplingVessel) {
  const QMatrix a1 = qm({{1, 0}, {0, 2}});
  const QMatrix s = qm({{1}});
  const QVessel v{a1, a1, QMatrix(1, 2), s, s, QMatrix(1, 1), QMatrix(1, 1)};
  ASSERT_TRUE(vessel_check(v).ok());
  const RationalPair rp{biv({{{0, 0, 0}, 1}}), biv({{{0, 1, 0}, 1}}), biv({{{1, 0, 0}, 1}}), 1};
  const TransformedVessel t = transform_vessel(v, rp);
  EXPECT_TRUE(t.vessel.phi.is_zero());
  EXPECT_TRUE(t.report.ok());
}

TEST(Transform, singularDenominatorRejected) {
  const QVessel v = one_dim();
  // p0 = y2 − 2y1 − 1 vanishes at the joint eigenvalue conj(i, 2i + 1).
  const RationalPair rp{biv({{{0, 1, 0}, 1}, {{1, 0, 0}, -2}, {{0, 0, 0}, -1}}), biv({{{1, 0, 0}, 1}}),
                        biv({{{0, 1, 0}, 1}}), 1};
  EXPECT_THROW(transform_vessel(v, rp), InputError);
}

TEST(Transform, printedSigmaOrderFails) {
  Rng rng(19);
  const QVessel v = random_vessel_fixture(3, 2, rng);
  const RationalPair rp{biv({{{0, 0, 0}, 2}, {{1, 0, 0}, 1}}), biv({{{2, 0, 0}, 1}}), biv({{{1, 1, 0}, 1}}), 2};
  EXPECT_TRUE(transform_vessel(v, rp).report.ok());
  const TransformedVessel t = transform_vessel(v, rp, SigmaOrder::Printed, false);
  EXPECT_FALSE(t.report.ok());
  EXPECT_THROW(transform_vessel(v, rp, SigmaOrder::Printed, true), TheoremCheckError);
}

TEST(Reduce, noBasepointsKeepsVessel) {
  Rng rng(23);
  const QVessel v = random_vessel_fixture(3, 2, rng);
  const TransformedVessel t = transform_vessel(v, identity_map());
  const ReducedVessel red = reduce_transformed(t, rng);
  ASSERT_TRUE(red.vessel.has_value());
  EXPECT_TRUE(red.reduction.basepoints.empty());
  EXPECT_EQ(red.vessel->ext_dim(), t.vessel.ext_dim());
  EXPECT_TRUE(red.report.ok());
  EXPECT_EQ(discriminant(*red.vessel).in, discriminant(t.vessel).in);
}

TEST(Reduce, basepointDropsOneDimension) {
  // y1·(y1 − a), y2·(y1 − a), (y1 − a) share the line y1 = a, which meets the
  // discriminant curve; the map itself is the identity away from it.
  Rng rng(29);
  int seen = 0;
  for (int k = 0; k < 8 && seen < 3; ++k) {
    FixtureSpec spec;
    const QVessel v = random_vessel_fixture(3, 1, rng, &spec);
    const Rational a = spec.alpha[0] + 5;  // off the operator spectrum
    const QPoly l = biv({{{1, 0, 0}, 1}}) - QPoly::constant(2, Gauss(a));
    const RationalPair rp{l, biv({{{1, 0, 0}, 1}}) * l, biv({{{0, 1, 0}, 1}}) * l, 2};
    const TransformedVessel t = transform_vessel(v, rp);
    const ReducedVessel red = reduce_transformed(t, rng);
    ASSERT_TRUE(red.vessel.has_value());
    EXPECT_TRUE(red.report.ok());
    const std::size_t nm = t.vessel.ext_dim();
    EXPECT_EQ(red.vessel->ext_dim(), nm - red.reduction.removed);
    EXPECT_EQ(red.reduction.removed, v.ext_dim());
    const ImageCheck ic = discriminant_image_check(red, t, 10, rng);
    EXPECT_TRUE(ic.ok());
    ++seen;
  }
  EXPECT_EQ(seen, 3);
}

TEST(ImageCheck, identityAndLineMaps) {
  Rng rng(31);
  const QVessel v = random_vessel_fixture(3, 2, rng);
  TransformedVessel t = transform_vessel(v, identity_map());
  ReducedVessel red = reduce_transformed(t, rng);
  ImageCheck ic = discriminant_image_check(red, t, 12, rng);
  EXPECT_TRUE(ic.ok());
  EXPECT_TRUE(proportional(discriminant(*red.vessel).in, discriminant(v).in));

  const QVessel w = one_dim();
  const RationalPair line{biv({{{0, 0, 0}, 1}}), biv({{{1, 0, 0}, 1}}), biv({{{1, 0, 0}, 2}, {{0, 0, 0}, 1}}), 1};
  t = transform_vessel(w, line);
  red = reduce_transformed(t, rng);
  ic = discriminant_image_check(red, t, 12, rng);
  EXPECT_TRUE(ic.ok());
  const QPoly d = discriminant(*red.vessel).in;
  for (int k = -3; k <= 3; ++k) EXPECT_EQ(d.evaluate({Gauss(k), Gauss(2 * k + 1)}), Gauss(0));
}

TEST(FiberMap, quadraticMapOnOneDimensionalFixture) {
  Rng rng(37);
  const QVessel v = one_dim();
  const RationalPair rp{biv({{{0, 0, 0}, 1}}), biv({{{1, 0, 0}, 1}}), biv({{{2, 0, 0}, 1}}), 2};
  const TransformedVessel t = transform_vessel(v, rp);
  const ReducedVessel red = reduce_transformed(t, rng);
  ASSERT_TRUE(red.vessel.has_value());
  int checked = 0;
  for (int a = -3; a <= 3; ++a) {
    for (const auto& pt : pencil_points(t.rep, Gauss(1), Gauss(a))) {
      const FiberCheck fc = fiber_isomorphism_check(t, red, pt);
      if (fc.vacuous) continue;
      EXPECT_TRUE(fc.exact);
      EXPECT_TRUE(fc.in_ok);
      EXPECT_TRUE(fc.out_ok);
      EXPECT_FALSE(fc.collision);
      ++checked;
    }
  }
  EXPECT_GE(checked, 5);
}

TEST(FiberMap, identityOnRandomFixtures) {
  Rng rng(41);
  for (int k = 0; k < 4; ++k) {
    const QVessel v = random_vessel_fixture(3 + k % 3, 2, rng);
    const TransformedVessel t = transform_vessel(v, identity_map());
    const ReducedVessel red = reduce_transformed(t, rng);
    EXPECT_TRUE(red.out_map_defined);
    for (int a = -2; a <= 2; ++a) {
      std::vector<CurvePoint> pts;
      try {
        pts = pencil_points(t.rep, Gauss(1), Gauss(a));
      } catch (const InputError&) {
        continue;
      }
      for (const auto& pt : pts) {
        const FiberCheck fc = fiber_isomorphism_check(t, red, pt);
        EXPECT_TRUE(fc.in_ok);
        EXPECT_TRUE(fc.out_ok);
        EXPECT_EQ(fc.out_outside, 0u);
      }
    }
  }
}

TEST(FiberMap, offCurveIsVacuous) {
  Rng rng(43);
  const QVessel v = one_dim();
  const TransformedVessel t = transform_vessel(v, identity_map());
  const ReducedVessel red = reduce_transformed(t, rng);
  CurvePoint p;
  p.exact = QPoint{Gauss(1), Gauss(0), Gauss(0)};  // Δ = 2 there
  p.x = {Complex(1, 0), Complex(0, 0), Complex(0, 0)};
  const FiberCheck fc = fiber_isomorphism_check(t, red, p);
  EXPECT_TRUE(fc.vacuous);
  EXPECT_FALSE(fc.basepoint);
}
