#pragma once

// Horospheres in the hyperboloid model, their decorations, and the explicit
// upper-half-space description of the decorated horosphere of a spinor.

#include <array>
#include <cmath>
#include <optional>
#include <ostream>

#include "spinhoro/spinor_flags.hpp"

namespace spinhoro {

using Vec3 = std::array<double, 3>;

/// Horosphere {x in H^3 : <x,p> = 1}, stored by its light-cone point p.
class HorosphereHyp {
public:
    explicit HorosphereHyp(const MinkowskiVector& p, double tol = tolerance::kIdentity) : p_(p) {
        if (!is_future_lightlike(p, tol))
            throw GeometryError(Errc::NotFutureLightlike, "horosphere point must lie on L+");
    }

    const MinkowskiVector& point() const { return p_; }

    bool contains(const MinkowskiVector& x, double tol = tolerance::kIdentity) const {
        const double scale = std::max(1.0, x.max_abs());
        return x.t > 0 && std::abs(lorentz_inner(x, x) - 1.0) <= tol * scale * scale &&
               std::abs(lorentz_inner(x, p_) - 1.0) <= tol * scale * std::max(1.0, p_.max_abs());
    }

private:
    MinkowskiVector p_;
};

inline HorosphereHyp phi2(const MinkowskiVector& p, double tol = tolerance::kIdentity) { return HorosphereHyp(p, tol); }

/// A point of the boundary C u {oo} of upper half space.
class BoundaryPoint {
public:
    static BoundaryPoint finite(Complex z) { return BoundaryPoint(z); }
    static BoundaryPoint infinity() { return BoundaryPoint(); }

    bool is_infinity() const { return !z_.has_value(); }
    /// Precondition: !is_infinity().
    Complex value() const { return *z_; }

    friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;

    friend std::ostream& operator<<(std::ostream& os, const BoundaryPoint& b) {
        if (b.is_infinity()) return os << "inf";
        return os << b.value();
    }

private:
    BoundaryPoint() = default;
    explicit BoundaryPoint(Complex z) : z_(z) {}

    std::optional<Complex> z_;
};

/// Moebius transformation z -> (a z + b)/(c z + d) on C u {oo}.
inline BoundaryPoint apply_mobius(const ComplexMatrix2& m, const BoundaryPoint& p) {
    if (p.is_infinity()) {
        if (m.c == 0.0) return BoundaryPoint::infinity();
        return BoundaryPoint::finite(m.a / m.c);
    }
    const Complex den = m.c * p.value() + m.d;
    if (den == 0.0) return BoundaryPoint::infinity();
    return BoundaryPoint::finite((m.a * p.value() + m.b) / den);
}

/// Decorated horosphere in upper half space.
///
/// `size` is the height of a horizontal plane when the centre is oo, and the
/// Euclidean diameter of a sphere tangent to C otherwise. `direction` is the unit
/// complex number specifying the decoration (at the north pole for spheres).
struct DecoratedHorosphereUHS {
    BoundaryPoint centre = BoundaryPoint::infinity();
    double size = 1.0;
    Complex direction{0.0, 1.0};

    friend bool operator==(const DecoratedHorosphereUHS&, const DecoratedHorosphereUHS&) = default;
};

/// Base point on H^3 with a unit spacelike tangent vector at it.
struct TangentFrameHyp {
    MinkowskiVector base;
    MinkowskiVector vector;
};

namespace detail {
inline bool eta_vanishes(const Spinor& k, double tol) { return std::abs(k.eta) <= tol * std::abs(k.xi); }
}  // namespace detail

inline BoundaryPoint centre_uhs(const Spinor& k, double tol = tolerance::kInfinity) {
    detail::require_nonzero(k);
    if (detail::eta_vanishes(k, tol)) return BoundaryPoint::infinity();
    return BoundaryPoint::finite(k.xi / k.eta);
}

/// (T,X,Y,Z) -> (X,Y,Z)/(1+T).
inline Vec3 hyperboloid_to_disc(const MinkowskiVector& x) {
    if (x.t <= -1.0) throw GeometryError(Errc::DegenerateInput, "T <= -1 has no disc image");
    const double s = 1.0 / (1.0 + x.t);
    return {s * x.x, s * x.y, s * x.z};
}

/// Point of the celestial sphere on the ray through p: the (X,Y,Z) of its T = 1 representative.
inline Vec3 celestial_point(const MinkowskiVector& p) {
    if (p.t <= 0.0) throw GeometryError(Errc::DegenerateInput, "ray must point to the future");
    return {p.x / p.t, p.y / p.t, p.z / p.t};
}

/// Unit sphere to C u {oo}: (x,y,z) -> (x+iy)/(1-z).
inline BoundaryPoint disc_boundary_to_uhs(const Vec3& v, double tol = tolerance::kIdentity) {
    const double len = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (std::abs(len - 1.0) > tol) throw GeometryError(Errc::NotUnitVector, "boundary point must be a unit vector");
    const double den = 1.0 - v[2];
    if (std::abs(den) <= tolerance::kInfinity) return BoundaryPoint::infinity();
    return BoundaryPoint::finite(Complex(v[0], v[1]) / den);
}

/// Upper-half-space data of the decorated horosphere of k: centre xi/eta with
/// diameter |eta|^-2 and north-pole direction i/eta^2, or for eta = 0 a plane at
/// height |xi|^2 with direction i xi^2.
inline DecoratedHorosphereUHS decorated_horosphere_uhs(const Spinor& k, double tol = tolerance::kInfinity) {
    detail::require_nonzero(k);
    if (detail::eta_vanishes(k, tol)) {
        const Complex dir = kI * k.xi * k.xi;
        return {BoundaryPoint::infinity(), std::norm(k.xi), dir / std::abs(dir)};
    }
    const Complex dir = kI / (k.eta * k.eta);
    return {BoundaryPoint::finite(k.xi / k.eta), 1.0 / std::norm(k.eta), dir / std::abs(dir)};
}

/// A_c = [[1, c], [0, 1]].
inline ComplexMatrix2 parabolic_matrix(Complex c) { return {1.0, c, 0.0, 1.0}; }

/// Unimodular A with A (1,0) = k, composed from the generators
/// [[0,-1],[1,0]], diag(xi, 1/xi) and [[1/eta, xi],[0, eta]].
inline ComplexMatrix2 transport_matrix(const Spinor& k, double tol = tolerance::kInfinity) {
    detail::require_nonzero(k);
    if (detail::eta_vanishes(k, tol)) return {k.xi, 0.0, 0.0, 1.0 / k.xi};
    const ComplexMatrix2 affine{1.0 / k.eta, k.xi, 0.0, k.eta};
    const ComplexMatrix2 swap{0.0, -1.0, 1.0, 0.0};
    return affine * swap;
}

/// Decoration line field of the horosphere of k at the point A.q_c, where A is
/// transport_matrix(k). For k = (1,0) this is q_c with direction (Im c) p0 + dY.
inline TangentFrameHyp line_field_direction(const Spinor& k, Complex c) {
    const ComplexMatrix2 a = transport_matrix(k);
    const MinkowskiVector qc = sl2c_action_minkowski(parabolic_matrix(c), kHyperboloidOrigin);
    const MinkowskiVector dir = c.imag() * kNorthLightPoint + kUnitY;
    return {sl2c_action_minkowski(a, qc), sl2c_action_minkowski(a, dir)};
}

}  // namespace spinhoro
