#include <gtest/gtest.h>

#include "geo/inversive.hpp"
#include "support.hpp"

namespace geo {
namespace {

constexpr double kEps = 1e-12;

void expect_point_near(Complex got, Complex want, double eps) {
    EXPECT_NEAR(got.real(), want.real(), eps) << got << " vs " << want;
    EXPECT_NEAR(got.imag(), want.imag(), eps) << got << " vs " << want;
}

// Independent inversion oracle: point on the ray at distance r^2 / |OP|.
Complex invert_oracle(Complex o, double r, Complex p) {
    double d = std::abs(p - o);
    return o + (p - o) / d * (r * r / d);
}

// Circumcenter via intersection of two perpendicular bisectors.
Circle fit_oracle(Complex a, Complex b, Complex c) {
    Complex o = intersect(perpendicular_bisector(a, b), perpendicular_bisector(b, c));
    return {o, std::abs(a - o)};
}

Cline random_cline(testing::Rng& rng) {
    if (rng.integer(0, 3) == 0) return Cline(Line::through(rng.point(5), rng.point(5)));
    return Cline(Circle{rng.point(5), rng.uniform(0.2, 5)});
}

TEST(InvertPoint, Examples) {
    expect_point_near(invert_point(kUnitCircle, ExtPoint(2.0)).value(), Complex(0.5, 0), kEps);
    Complex on = unit(0.7);
    expect_point_near(invert_point(kUnitCircle, ExtPoint(on)).value(), on, kEps);
    EXPECT_TRUE(invert_point(kUnitCircle, ExtPoint(0.0)).is_infinite());
    InversionCircle w(Complex(1, 2), 3);
    EXPECT_EQ(invert_point(w, ExtPoint::infinity()).value(), Complex(1, 2));
    expect_point_near(invert_point(w, ExtPoint(Complex(4, 6))).value(), invert_oracle(w.center, 3, Complex(4, 6)), kEps);
}

TEST(InvertPoint, InvolutionAndRayProperty) {
    testing::Rng rng(20);
    for (int i = 0; i < 1000; ++i) {
        InversionCircle w(rng.point(5), rng.uniform(0.1, 5));
        Complex p = rng.point(10);
        Complex q = invert_point(w, ExtPoint(p)).value();
        double s = scale_of({p, q, w.center});
        expect_point_near(invert_point(w, ExtPoint(q)).value(), p, 1e-12 * std::max(1.0, s) * 10);
        EXPECT_NEAR(std::abs(p - w.center) * std::abs(q - w.center), w.radius * w.radius, 1e-12 * w.radius * w.radius * 10);
        EXPECT_GT((std::conj(p - w.center) * (q - w.center)).real(), 0.0);
    }
}

TEST(ClineThrough, Examples) {
    Cline unit_c = cline_through(ExtPoint(1.0), ExtPoint(Complex(0, 1)), ExtPoint(-1.0));
    ASSERT_TRUE(unit_c.is_circle());
    Circle oracle = fit_oracle(1.0, Complex(0, 1), -1.0);
    expect_point_near(unit_c.circle().center, oracle.center, kEps);
    EXPECT_NEAR(unit_c.circle().radius, 1.0, kEps);

    EXPECT_TRUE(cline_through(ExtPoint(0.0), ExtPoint(Complex(1, 1)), ExtPoint(Complex(3, 3))).is_line());

    Cline axis = cline_through(ExtPoint(0.0), ExtPoint(1.0), ExtPoint::infinity());
    ASSERT_TRUE(axis.is_line());
    EXPECT_NEAR(axis.line().distance(Complex(7, 0)), 0.0, kEps);
    EXPECT_NEAR(std::abs(axis.line().direction.imag()), 0.0, kEps);

    EXPECT_THROW(cline_through(ExtPoint(1.0), ExtPoint(1.0), ExtPoint(2.0)), GeoError);
    EXPECT_THROW(cline_through(ExtPoint(1.0), ExtPoint::infinity(), ExtPoint::infinity()), GeoError);
}

TEST(InvertCline, LineAvoidingCenterBecomesCircleThroughCenter) {
    Cline line(Line(Complex(2, 0), Complex(0, 1)));
    Cline img = invert_cline(kUnitCircle, line);
    ASSERT_TRUE(img.is_circle());
    Circle oracle = fit_oracle(invert_oracle(0, 1, Complex(2, 0)), invert_oracle(0, 1, Complex(2, 1)),
                               invert_oracle(0, 1, Complex(2, -1)));
    expect_point_near(oracle.center, Complex(0.25, 0), kEps);
    EXPECT_NEAR(oracle.radius, 0.25, kEps);
    expect_point_near(img.circle().center, oracle.center, kEps);
    EXPECT_NEAR(img.circle().radius, oracle.radius, kEps);
}

TEST(InvertCline, CaseSplit) {
    Cline diameter(Line(Complex(0, 0), Complex(1, 1)));
    Cline same = invert_cline(kUnitCircle, diameter);
    ASSERT_TRUE(same.is_line());
    EXPECT_NEAR(same.line().distance(0), 0.0, kEps);
    EXPECT_NEAR(std::abs((std::conj(same.line().direction) * diameter.line().direction).imag()), 0.0, kEps);

    Cline through_o(Circle{Complex(0.5, 0.5), std::sqrt(0.5)});
    Cline line_img = invert_cline(kUnitCircle, through_o);
    ASSERT_TRUE(line_img.is_line());
    EXPECT_GT(line_img.line().distance(0), 0.1);

    Cline avoiding(Circle{Complex(3, 0), 1});
    Cline circ = invert_cline(kUnitCircle, avoiding);
    ASSERT_TRUE(circ.is_circle());
    // Images of the diameter endpoints 2 and 4 are 1/2 and 1/4.
    expect_point_near(circ.circle().center, Complex(0.375, 0), kEps);
    EXPECT_NEAR(circ.circle().radius, 0.125, kEps);
}

TEST(InvertCline, CommutesWithPointwiseInversion) {
    testing::Rng rng(21);
    for (int i = 0; i < 200; ++i) {
        InversionCircle w(rng.point(3), rng.uniform(0.5, 3));
        Cline g = random_cline(rng);
        Cline img = invert_cline(w, g);
        for (Complex p : g.samples(20)) {
            ExtPoint q = invert_point(w, ExtPoint(p));
            if (q.is_infinite()) continue;
            double s = std::max({img.extent(), std::abs(q.value()), 1.0});
            EXPECT_LE(img.distance(q.value()), 1e-9 * s) << "case " << i;
        }
    }
}

TEST(RealCrossRatio, Examples) {
    EXPECT_NEAR(real_cross_ratio(0, 1, 2, 3), 1.0 / 3.0, kEps);
    Complex a(0, 0), b(1, 0), c(1, 1), d(0, 1);
    EXPECT_NEAR(real_cross_ratio(a, b, c, d), 1.0, kEps);
    EXPECT_NEAR(real_cross_ratio(a, c, b, d), 2.0, kEps);
    EXPECT_THROW(real_cross_ratio(0, 1, 1, 3), GeoError);
    EXPECT_THROW(real_cross_ratio(0, 1, 2, 0), GeoError);
}

TEST(RealCrossRatio, InvariantUnderInversion) {
    testing::Rng rng(22);
    for (int i = 0; i < 1000; ++i) {
        InversionCircle w(rng.point(3), rng.uniform(0.5, 3));
        Complex p[4];
        for (auto& z : p) z = rng.point(5);
        Complex q[4];
        for (int k = 0; k < 4; ++k) q[k] = invert(w, p[k]);
        double before = real_cross_ratio(p[0], p[1], p[2], p[3]);
        double after = real_cross_ratio(q[0], q[1], q[2], q[3]);
        EXPECT_LE(testing::relative_error(after, before), 1e-9);
    }
}

TEST(ClinesPerpendicular, Examples) {
    Cline unit_c = kUnitCircle.as_cline();
    EXPECT_TRUE(clines_perpendicular(unit_c, Cline(Line(0, unit(0.4)))));
    EXPECT_TRUE(clines_perpendicular(Cline(Circle{0, 1}), Cline(Circle{Complex(std::sqrt(2.0), 0), 1})));
    EXPECT_FALSE(clines_perpendicular(Cline(Circle{0, 1}), Cline(Circle{Complex(1.9, 0), 1})));
    EXPECT_FALSE(clines_perpendicular(unit_c, Cline(Line(Complex(0.5, 0), Complex(0, 1)))));
    EXPECT_TRUE(clines_perpendicular(Cline(Line(0, 1)), Cline(Line(3, Complex(0, 1)))));
    EXPECT_THROW(clines_perpendicular(Cline(Circle{0, 1}), Cline(Circle{Complex(5, 0), 1})), GeoError);
    EXPECT_THROW(clines_perpendicular(unit_c, Cline(Line(Complex(0, 3), 1))), GeoError);
}

TEST(PerpendicularClineThrough, Examples) {
    Cline diam = perpendicular_cline_through(kUnitCircle, Complex(0.3, 0), Complex(-0.5, 0));
    ASSERT_TRUE(diam.is_line());
    EXPECT_NEAR(diam.line().distance(0), 0.0, kEps);

    Cline g = perpendicular_cline_through(kUnitCircle, Complex(0.3, 0), Complex(0, 0.3));
    ASSERT_TRUE(g.is_circle());
    Circle oracle = fit_oracle(Complex(0.3, 0), Complex(0, 0.3), Complex(10.0 / 3.0, 0));
    expect_point_near(g.circle().center, oracle.center, 1e-12);
    EXPECT_NEAR(g.circle().radius, oracle.radius, 1e-12);
    EXPECT_TRUE(clines_perpendicular(g, kUnitCircle.as_cline()));

    EXPECT_THROW(perpendicular_cline_through(kUnitCircle, 0.3, 0.3), GeoError);
    EXPECT_THROW(perpendicular_cline_through(kUnitCircle, 0.3, 1.0), GeoError);
    EXPECT_THROW(perpendicular_cline_through(kUnitCircle, 0.3, 2.0), GeoError);
}

TEST(PerpendicularClineThrough, RandomPairsArePerpendicular) {
    testing::Rng rng(23);
    for (int i = 0; i < 500; ++i) {
        InversionCircle w(rng.point(2), rng.uniform(0.5, 2));
        Complex p = w.center + rng.in_disk(0.95 * w.radius), q = w.center + rng.in_disk(0.95 * w.radius);
        Cline g = perpendicular_cline_through(w, p, q);
        EXPECT_TRUE(clines_perpendicular(g, w.as_cline()));
        EXPECT_LE(g.distance(p), 1e-9 * std::max(1.0, g.extent()));
        EXPECT_LE(g.distance(q), 1e-9 * std::max(1.0, g.extent()));
    }
}

TEST(SelfInversion, PerpendicularCirclesAreInvariant) {
    testing::Rng rng(24);
    for (int i = 0; i < 300; ++i) {
        InversionCircle w(rng.point(2), rng.uniform(0.5, 2));
        double dist = w.radius * rng.uniform(1.05, 4);
        Complex c = w.center + dist * unit(rng.uniform(-kPi, kPi));
        Circle perp{c, std::sqrt(dist * dist - w.radius * w.radius)};
        Circle oblique{c, perp.radius * rng.uniform(1.05, 1.3)};
        ASSERT_TRUE(clines_perpendicular(w.as_cline(), Cline(perp)));
        ASSERT_FALSE(clines_perpendicular(w.as_cline(), Cline(oblique)));
        Cline img = invert_cline(w, Cline(perp));
        ASSERT_TRUE(img.is_circle());
        expect_point_near(img.circle().center, perp.center, 1e-9 * dist);
        EXPECT_NEAR(img.circle().radius, perp.radius, 1e-9 * dist);
        Cline img2 = invert_cline(w, Cline(oblique));
        EXPECT_GT(std::abs(img2.circle().radius - oblique.radius) + std::abs(img2.circle().center - oblique.center), 1e-6);
    }
}

TEST(SelfInversion, ClinesThroughInversePairArePerpendicular) {
    testing::Rng rng(25);
    for (int i = 0; i < 300; ++i) {
        InversionCircle w(rng.point(2), rng.uniform(0.5, 2));
        Complex p = w.center + rng.in_disk(0.9 * w.radius);
        Complex p1 = invert(w, p);
        Complex third = rng.point(4);
        Cline g = cline_through(ExtPoint(p), ExtPoint(p1), ExtPoint(third));
        EXPECT_TRUE(clines_perpendicular(g, w.as_cline())) << i;
    }
}

TEST(InscribedCheck, Examples) {
    testing::Rng rng(26);
    for (int i = 0; i < 100; ++i) {
        Complex z[4];
        for (auto& p : z) p = unit(rng.uniform(-kPi, kPi));
        EXPECT_TRUE(inscribed_check(z[0], z[1], z[2], z[3]));
    }
    EXPECT_TRUE(inscribed_check(0, 1, 2, 5));
    // (5,5) is off the circumcircle of the first three points (center (1/2,1/2)).
    Circle c = fit_oracle(0, 1, Complex(0, 1));
    EXPECT_GT(std::abs(std::abs(Complex(5, 5) - c.center) - c.radius), 1.0);
    EXPECT_FALSE(inscribed_check(0, 1, Complex(0, 1), Complex(5, 5)));
    EXPECT_THROW(inscribed_check(0, 1, 1, 2), GeoError);
}

TEST(Ptolemy, Examples) {
    EXPECT_NEAR(ptolemy_residual(0, 1, 2, 3), 0.0, kEps);
    EXPECT_NEAR(ptolemy_residual(Complex(0, 0), Complex(1, 0), Complex(1, 1), Complex(0, 1)), 0.0, kEps);
    testing::Rng rng(27);
    for (int i = 0; i < 200; ++i) {
        double th[4];
        for (double& t : th) t = rng.uniform(-kPi, kPi);
        std::sort(th, th + 4);
        Circle c{rng.point(5), rng.uniform(0.5, 5)};
        double s = 2 * c.radius;
        EXPECT_LE(std::abs(ptolemy_residual(c.at(th[0]), c.at(th[1]), c.at(th[2]), c.at(th[3]))), 1e-9 * s * s);
    }
    // Off a circle the inequality is strict.
    EXPECT_GT(ptolemy_residual(0, 1, Complex(1, 1), Complex(0, 2)), 1e-3);
}

TEST(ArcAngles, InversionReversesAngleBetweenArcs) {
    testing::Rng rng(28);
    for (int i = 0; i < 300; ++i) {
        InversionCircle w(rng.point(1), rng.uniform(0.5, 2));
        Complex a = rng.point(3), m1 = rng.point(3), x1 = rng.point(3), m2 = rng.point(3), x2 = rng.point(3);
        auto inv = [&](Complex z) { return invert(w, z); };
        AngleValue before = normalize_angle(std::arg(arc_tangent(a, m2, x2) / arc_tangent(a, m1, x1)));
        AngleValue after = normalize_angle(
            std::arg(arc_tangent(inv(a), inv(m2), inv(x2)) / arc_tangent(inv(a), inv(m1), inv(x1))));
        EXPECT_TRUE(angles_close(after, -before, 1e-7)) << i;
    }
}

TEST(Intersect, CircleLineAndCircleCircle) {
    auto pts = intersect(Cline(Circle{0, 1}), Cline(Line(Complex(0, 0.6), 1)));
    ASSERT_EQ(pts.size(), 2u);
    for (Complex p : pts) EXPECT_NEAR(std::abs(p), 1.0, kEps);
    EXPECT_EQ(intersect(Cline(Circle{0, 1}), Cline(Line(Complex(0, 1), 1))).size(), 1u);
    EXPECT_TRUE(intersect(Cline(Circle{0, 1}), Cline(Line(Complex(0, 2), 1))).empty());
    auto cc = intersect(Cline(Circle{0, 1}), Cline(Circle{Complex(1, 0), 1}));
    ASSERT_EQ(cc.size(), 2u);
    for (Complex p : cc) {
        EXPECT_NEAR(std::abs(p), 1.0, kEps);
        EXPECT_NEAR(std::abs(p - 1.0), 1.0, kEps);
    }
    EXPECT_EQ(intersect(Cline(Circle{0, 1}), Cline(Circle{Complex(3, 0), 2})).size(), 1u);
}

} // namespace
} // namespace geo
