#include <gtest/gtest.h>

#include <set>

#include "curvelim/poly.hpp"
#include "support.hpp"

using namespace curvelim;
using namespace testsupport;

TEST(MultiPoly, noZeroCoefficients) {
  QPoly p = poly(2, {{{1, 0, 0}, 3}, {{0, 1, 0}, 2}});
  p.add_term({1, 0, 0}, Gauss(-3));
  EXPECT_EQ(p.size(), 1u);
  EXPECT_EQ(p.coeff({1, 0, 0}), Gauss(0));
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_THROW(p.add_term({0, 0, 1}, Gauss(1)), InputError);
}

TEST(Homogenize, examples) {
  EXPECT_EQ(homogenize(poly(2, {{{2, 0, 0}, 1}, {{0, 1, 0}, 1}}), 2),
            poly(3, {{{0, 2, 0}, 1}, {{1, 0, 1}, 1}}));
  EXPECT_EQ(homogenize(poly(2, {{{0, 0, 0}, 1}}), 3), poly(3, {{{3, 0, 0}, 1}}));
  EXPECT_EQ(homogenize(poly(2, {{{1, 1, 0}, 1}}), 2), poly(3, {{{0, 1, 1}, 1}}));
  EXPECT_THROW(homogenize(poly(2, {{{2, 1, 0}, 1}}), 2), InputError);
}

QPoly random_bivariate(Rng& rng, int deg) {
  QPoly p(2);
  for (int a = 0; a <= deg; ++a)
    for (int b = 0; a + b <= deg; ++b) p.add_term({a, b, 0}, Gauss(random_rational(rng, -4, 4, 3)));
  return p;
}

TEST(Homogenize, linearAndInvertible) {
  Rng rng(3);
  for (int k = 0; k < 30; ++k) {
    const int n = 1 + k % 4;
    const QPoly p = random_bivariate(rng, n), q = random_bivariate(rng, n - k % 2);
    const QPoly hp = homogenize(p, n);
    EXPECT_TRUE(hp.is_homogeneous(n));
    EXPECT_EQ(dehomogenize(hp), p);
    EXPECT_EQ(homogenize(p + q, n), hp + homogenize(q, n));
    for (int j = 0; j < 5; ++j) {
      const Gauss y1(random_rational(rng, -5, 5, 4)), y2(random_rational(rng, -5, 5, 4));
      EXPECT_EQ(hp.evaluate({Gauss(1), y1, y2}), p.evaluate({y1, y2}));
    }
  }
}

TEST(Evaluate, examples) {
  const QPoly conic = poly(3, {{{2, 0, 0}, 1}, {{0, 2, 0}, -1}, {{0, 0, 2}, -1}});
  EXPECT_EQ(conic.evaluate({Gauss(5), Gauss(3), Gauss(4)}), Gauss(0));
  EXPECT_EQ(poly(3, {{{1, 1, 0}, 4}, {{0, 0, 3}, 2}}).evaluate({Gauss(0), Gauss(0), Gauss(0)}), Gauss(0));
  EXPECT_EQ(x(0).evaluate({Gauss(1), Gauss(2), Gauss(3)}), Gauss(1));
  EXPECT_THROW(x(0).evaluate({Gauss(1)}), InputError);
}

TEST(Evaluate, ringHomomorphism) {
  Rng rng(5);
  for (int k = 0; k < 20; ++k) {
    const QPoly p = random_bivariate(rng, 3), q = random_bivariate(rng, 2);
    const Gauss y1(random_rational(rng, -5, 5, 4)), y2(random_rational(rng, -5, 5, 4), Rational(1));
    EXPECT_EQ((p * q).evaluate({y1, y2}), p.evaluate({y1, y2}) * q.evaluate({y1, y2}));
  }
}

TEST(MonomialIndex, examples) {
  const MonomialIndex d1(1);
  EXPECT_EQ(d1.position({1, 0, 0}), 0u);
  EXPECT_EQ(d1.position({0, 1, 0}), 1u);
  EXPECT_EQ(d1.position({0, 0, 1}), 2u);

  const MonomialIndex d2(2);
  const std::vector<Exponent> order{{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  for (std::size_t k = 0; k < order.size(); ++k) EXPECT_EQ(d2.position(order[k]), k);

  const MonomialIndex d0(0);
  EXPECT_EQ(d0.size(), 1u);
  EXPECT_EQ(d0.position({0, 0, 0}), 0u);
  EXPECT_THROW(d2.position({1, 0, 0}), InputError);
}

TEST(MonomialIndex, bijection) {
  for (int d = 0; d <= 6; ++d) {
    const MonomialIndex idx(d);
    EXPECT_EQ(idx.size(), static_cast<std::size_t>((d + 1) * (d + 2) / 2));
    std::set<Exponent> seen;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      EXPECT_EQ(degree_of(idx.at(k)), d);
      EXPECT_EQ(idx.position(idx.at(k)), k);
      seen.insert(idx.at(k));
      // Graded-lex with x0 > x1 > x2: exponent tuples strictly decrease.
      if (k > 0) {
        EXPECT_GT(idx.at(k - 1), idx.at(k));
      }
    }
    EXPECT_EQ(seen.size(), idx.size());
  }
}

TEST(PolyText, readable) {
  const QPoly p = poly(3, {{{2, 0, 0}, 1}, {{0, 1, 1}, -1}});
  EXPECT_EQ(to_string(p), "x0^2 - x1*x2");
}
