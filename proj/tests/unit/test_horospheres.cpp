#include <gtest/gtest.h>

#include <numbers>

#include "generators.hpp"
#include "oracles.hpp"

using namespace spinhoro;
using spinhoro::testkit::Gen;
using spinhoro::testkit::near;

namespace {

MinkowskiVector qc(Complex c) {
    const double h = 0.5 * std::norm(c);
    return {1 + h, c.real(), c.imag(), h};
}

void expect_same(const DecoratedHorosphereUHS& got, const DecoratedHorosphereUHS& want, double tol) {
    ASSERT_EQ(got.centre.is_infinity(), want.centre.is_infinity());
    if (!got.centre.is_infinity()) { EXPECT_TRUE(near(got.centre.value(), want.centre.value(), tol)) << got.centre; }
    EXPECT_TRUE(near(got.size, want.size, tol)) << got.size << " vs " << want.size;
    EXPECT_TRUE(near(got.direction, want.direction, tol)) << got.direction << " vs " << want.direction;
}

}  // namespace

TEST(Phi2, Examples) {
    EXPECT_TRUE(phi2(kNorthLightPoint).contains(kHyperboloidOrigin));
    EXPECT_FALSE(phi2({2, 0, 0, 2}).contains(kHyperboloidOrigin));
    EXPECT_TRUE(phi2(kNorthLightPoint).contains(qc({1, 1})));
}

TEST(Phi2, RejectsOffCone) {
    for (const MinkowskiVector& p : {kHyperboloidOrigin, -1.0 * kNorthLightPoint, kUnitY}) {
        try {
            phi2(p);
            FAIL();
        } catch (const GeometryError& e) {
            EXPECT_EQ(e.code(), Errc::NotFutureLightlike);
        }
    }
}

TEST(Phi2, ParabolicOrbitLiesOnHorosphere) {
    Gen g(30);
    const auto h = phi2(kNorthLightPoint);
    for (int i = 0; i < 100; ++i) {
        const Complex c = 3.0 * g.unit_square();
        const auto q = qc(c);
        EXPECT_NEAR(lorentz_inner(q, q), 1.0, 1e-9);
        EXPECT_NEAR(lorentz_inner(q, kNorthLightPoint), 1.0, 1e-9);
        EXPECT_TRUE(h.contains(q));
    }
}

TEST(Phi2, DistinctPointsGiveDistinctHorospheres) {
    Gen g(31);
    for (int i = 0; i < 100; ++i) {
        const Spinor k1 = g.spinor(), k2 = g.spinor();
        const auto p1 = phi1(k1), p2 = phi1(k2);
        // a point on the first horosphere: transport q0 along the spinor's normalizing map
        const auto x = sl2c_action_minkowski(transport_matrix(k1), kHyperboloidOrigin);
        EXPECT_TRUE(phi2(p1).contains(x));
        EXPECT_FALSE(phi2(2.0 * p1).contains(x));
        if (!near(p1, p2, 1e-6)) { EXPECT_FALSE(phi2(p2).contains(x)); }
    }
}

TEST(CentreUhs, Examples) {
    EXPECT_TRUE(centre_uhs({1.0, 0.0}).is_infinity());
    EXPECT_EQ(centre_uhs({0.0, 1.0}), BoundaryPoint::finite(0.0));
    EXPECT_TRUE(near(centre_uhs({Complex(1, 1), Complex(1, -1)}).value(), kI, 1e-15));
    EXPECT_THROW(centre_uhs({0.0, 0.0}), GeometryError);
}

TEST(HyperboloidToDisc, Examples) {
    EXPECT_EQ(hyperboloid_to_disc(kHyperboloidOrigin), (Vec3{0, 0, 0}));
    EXPECT_EQ(hyperboloid_to_disc(kNorthLightPoint), (Vec3{0, 0, 0.5}));
    EXPECT_EQ(celestial_point(kNorthLightPoint), (Vec3{0, 0, 1}));
    const auto v = hyperboloid_to_disc({3, 0, 0, 1});
    EXPECT_DOUBLE_EQ(v[2], 0.25);
    try {
        hyperboloid_to_disc({-1, 0, 0, 0});
        FAIL();
    } catch (const GeometryError& e) {
        EXPECT_EQ(e.code(), Errc::DegenerateInput);
    }
}

TEST(DiscBoundaryToUhs, Examples) {
    EXPECT_TRUE(disc_boundary_to_uhs({0, 0, 1}).is_infinity());
    EXPECT_EQ(disc_boundary_to_uhs({0, 0, -1}), BoundaryPoint::finite(0.0));
    EXPECT_EQ(disc_boundary_to_uhs({1, 0, 0}), BoundaryPoint::finite(1.0));
    try {
        disc_boundary_to_uhs({0.5, 0, 0});
        FAIL();
    } catch (const GeometryError& e) {
        EXPECT_EQ(e.code(), Errc::NotUnitVector);
    }
}

TEST(DiscBoundaryToUhs, HyperboloidRouteReproducesCentre) {
    Gen g(32);
    for (int i = 0; i < 100; ++i) {
        const Spinor k = g.spinor();
        const auto via = disc_boundary_to_uhs(celestial_point(phi1(k)));
        const auto direct = centre_uhs(k);
        ASSERT_FALSE(via.is_infinity());
        EXPECT_TRUE(near(via.value(), direct.value(), 1e-9));
    }
}

TEST(DecoratedHorosphere, Examples) {
    expect_same(decorated_horosphere_uhs({1.0, 0.0}), {BoundaryPoint::infinity(), 1.0, kI}, 1e-15);
    expect_same(decorated_horosphere_uhs({0.0, 1.0}), {BoundaryPoint::finite(0.0), 1.0, kI}, 1e-15);
    Gen g(33);
    for (int i = 0; i < 10; ++i) {
        const double r = g.uniform(0.1, 3), phi = g.uniform(0, 2 * std::numbers::pi);
        expect_same(decorated_horosphere_uhs({std::polar(r, phi), 0.0}),
                    {BoundaryPoint::infinity(), r * r, kI * std::polar(1.0, 2 * phi)}, 1e-12);
    }
    EXPECT_THROW(decorated_horosphere_uhs({0.0, 0.0}), GeometryError);
}

TEST(DecoratedHorosphere, ScalingLaw) {
    Gen g(34);
    for (int i = 0; i < 100; ++i) {
        const Spinor k = g.spinor();
        const double r = g.uniform(0.2, 3), phi = g.uniform(0, 2 * std::numbers::pi);
        const auto base = decorated_horosphere_uhs(k);
        const auto scaled = decorated_horosphere_uhs(std::polar(r, phi) * k);
        EXPECT_EQ(scaled.centre.is_infinity(), base.centre.is_infinity());
        EXPECT_TRUE(near(scaled.size, base.size * std::pow(r, base.centre.is_infinity() ? 2 : -2), 1e-12));
        // i/eta^2 turns by -2 phi, i xi^2 by +2 phi
        EXPECT_TRUE(near(scaled.direction, base.direction * std::polar(1.0, (base.centre.is_infinity() ? 2 : -2) * phi),
                         1e-12));
    }
}

TEST(DecoratedHorosphere, GeneratorEquivariance) {
    Gen g(35);
    const ComplexMatrix2 S{0.0, -1.0, 1.0, 0.0};
    for (int i = 0; i < 100; ++i) {
        const Spinor k = g.spinor();
        const auto h = decorated_horosphere_uhs(k);

        // diag(x, 1/x): z -> x^2 z
        const Complex x = g.nonzero_complex(0.3);
        expect_same(decorated_horosphere_uhs(ComplexMatrix2{x, 0.0, 0.0, 1.0 / x} * k),
                    testkit::similarity_image(h, x * x, 0.0), 1e-9);

        // [[1/e, x],[0, e]]: z -> z/e^2 + x/e
        const Complex e = g.nonzero_complex(0.3);
        expect_same(decorated_horosphere_uhs(ComplexMatrix2{1.0 / e, x, 0.0, e} * k),
                    testkit::similarity_image(h, 1.0 / (e * e), x / e), 1e-9);

        // z -> -1/z: centre and size via the Poincare extension
        const auto hs = decorated_horosphere_uhs(S * k);
        const auto [centre, size] = testkit::inversion_image(h);
        ASSERT_FALSE(hs.centre.is_infinity());
        EXPECT_TRUE(near(hs.centre.value(), centre.value(), 1e-9));
        EXPECT_TRUE(near(hs.size, size, 1e-9));
    }
}

TEST(DecoratedHorosphere, InversionSwapsInfinityAndZero) {
    Gen g(36);
    const ComplexMatrix2 S{0.0, -1.0, 1.0, 0.0};
    for (int i = 0; i < 100; ++i) {
        const Complex x = g.nonzero_complex(0.2);
        // plane at infinity -> sphere at 0 with size 1/h and direction -conj(w)
        const auto plane = decorated_horosphere_uhs({x, 0.0});
        expect_same(decorated_horosphere_uhs(S * Spinor{x, 0.0}),
                    {BoundaryPoint::finite(0.0), 1.0 / plane.size, -std::conj(plane.direction)}, 1e-12);
        // and back
        const auto sphere = decorated_horosphere_uhs({0.0, x});
        expect_same(decorated_horosphere_uhs(S * Spinor{0.0, x}),
                    {BoundaryPoint::infinity(), 1.0 / sphere.size, -std::conj(sphere.direction)}, 1e-12);
    }
}

TEST(ParabolicMatrix, Examples) {
    EXPECT_EQ(parabolic_matrix(0.0), ComplexMatrix2::identity());
    Gen g(37);
    for (int i = 0; i < 100; ++i) {
        const Complex c = 2.0 * g.unit_square(), c2 = 2.0 * g.unit_square();
        EXPECT_EQ(parabolic_matrix(c) * parabolic_matrix(c2), parabolic_matrix(c + c2));
        EXPECT_TRUE(near(sl2c_action_minkowski(parabolic_matrix(c), kHyperboloidOrigin), qc(c), 1e-12));
        EXPECT_TRUE(near(sl2c_action_minkowski(parabolic_matrix(c), kNorthLightPoint), kNorthLightPoint, 1e-12));
        EXPECT_EQ(sl2c_action_minkowski(parabolic_matrix(c), kUnitY), kUnitY + c.imag() * kNorthLightPoint);
    }
}

TEST(TransportMatrix, MapsBaseSpinor) {
    Gen g(38);
    for (int i = 0; i < 200; ++i) {
        const Spinor k = i % 10 == 0 ? Spinor{g.nonzero_complex(), 0.0} : g.spinor();
        const ComplexMatrix2 A = transport_matrix(k);
        EXPECT_TRUE(A.is_unimodular());
        const Spinor img = A * Spinor{1.0, 0.0};
        EXPECT_TRUE(near(img.xi, k.xi, 1e-12));
        EXPECT_TRUE(near(img.eta, k.eta, 1e-12));
    }
}

TEST(LineField, Examples) {
    const auto f0 = line_field_direction({1.0, 0.0}, 0.0);
    EXPECT_EQ(f0.base, kHyperboloidOrigin);
    EXPECT_EQ(f0.vector, kUnitY);
    const auto fi = line_field_direction({1.0, 0.0}, kI);
    EXPECT_TRUE(near(fi.base, MinkowskiVector{1.5, 0, 1, 0.5}, 1e-15));
    EXPECT_TRUE(near(fi.vector, MinkowskiVector{1, 0, 1, 1}, 1e-15));
    EXPECT_THROW(line_field_direction({0.0, 0.0}, 0.0), GeometryError);
}

TEST(LineField, TangentToHorosphereAndParallel) {
    Gen g(39);
    for (int i = 0; i < 20; ++i) {
        const Complex c = 2.0 * g.unit_square();
        const auto f0 = line_field_direction({1.0, 0.0}, 0.0);
        const auto fc = line_field_direction({1.0, 0.0}, c);
        const ComplexMatrix2 Ac = parabolic_matrix(c);
        EXPECT_TRUE(near(sl2c_action_minkowski(Ac, f0.base), fc.base, 1e-12));
        EXPECT_TRUE(near(sl2c_action_minkowski(Ac, f0.vector), fc.vector, 1e-12));
    }
    for (int i = 0; i < 100; ++i) {
        const Spinor k = g.spinor();
        const Complex c = 2.0 * g.unit_square();
        const auto f = line_field_direction(k, c);
        const auto p = phi1(k);
        EXPECT_TRUE(phi2(p).contains(f.base, 1e-8));
        // vector is tangent to the horosphere at base: orthogonal to base and to p
        const double scale = std::max(1.0, f.vector.max_abs() * std::max(f.base.max_abs(), p.max_abs()));
        EXPECT_NEAR(lorentz_inner(f.vector, p), 0.0, 1e-9 * scale);
        EXPECT_NEAR(lorentz_inner(f.vector, f.base), 0.0, 1e-9 * scale);
    }
}

TEST(LineField, IndependentOfTransportChoice) {
    // A and A times a parabolic both send (1,0) to k; the line fields agree as sets.
    Gen g(40);
    for (int i = 0; i < 50; ++i) {
        const Spinor k = g.spinor();
        const ComplexMatrix2 A = transport_matrix(k);
        const Complex shift = g.unit_square();
        const ComplexMatrix2 B = A * parabolic_matrix(shift);
        const Complex c = g.unit_square();
        const auto viaA = line_field_direction(k, c + shift);
        const MinkowskiVector qB = sl2c_action_minkowski(B, qc(c));
        const MinkowskiVector vB = sl2c_action_minkowski(B, c.imag() * kNorthLightPoint + kUnitY);
        EXPECT_TRUE(near(viaA.base, qB, 1e-9));
        // directions differ by a multiple of p, which is invisible on the horosphere
        const MinkowskiVector diff = viaA.vector - vB;
        const MinkowskiVector p = phi1(k);
        const double lambda = diff.t / p.t;
        EXPECT_TRUE(near(diff, lambda * p, 1e-9));
    }
}
