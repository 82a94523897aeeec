#pragma once

// Complex lambda lengths between spin-decorated horospheres, the Ptolemy relation
// and ideal-tetrahedron shape parameters.
//
// A spin-decorated horosphere is represented by its spinor. The lambda length from
// k1 to k2 is the bracket {k1, k2} = exp(d/2), where d = rho + i theta is the
// complex distance along the common perpendicular (theta taken mod 4 pi).

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "spinhoro/horospheres.hpp"

namespace spinhoro {

struct ComplexDistance {
    double rho = 0.0;    // signed translation distance
    double theta = 0.0;  // rotation angle in [0, 4 pi)

    Complex value() const { return {rho, theta}; }
    Complex lambda() const { return std::exp(0.5 * value()); }

    friend bool operator==(const ComplexDistance&, const ComplexDistance&) = default;
};

struct ShapeTriple {
    Complex z, zp, zpp;

    /// zp = 1/(1-z), zpp = (z-1)/z and z + 1/zp = 1.
    bool is_consistent(double tol = tolerance::kIdentity) const {
        const auto close = [tol](Complex u, Complex v) {
            return std::abs(u - v) <= tol * std::max(1.0, std::max(std::abs(u), std::abs(v)));
        };
        return close(zp, 1.0 / (1.0 - z)) && close(zpp, (z - 1.0) / z) && close(z + 1.0 / zp, 1.0);
    }

    /// (z, z', z'') -> (z', z'', z).
    ShapeTriple rotated() const { return {zp, zpp, z}; }

    friend bool operator==(const ShapeTriple&, const ShapeTriple&) = default;
};

namespace detail {
inline bool bracket_vanishes(const Spinor& k1, const Spinor& k2, double tol) {
    return std::abs(bracket(k1, k2)) <= tol * k1.norm() * k2.norm();
}
}  // namespace detail

inline Complex lambda_length(const Spinor& k1, const Spinor& k2) {
    detail::require_nonzero(k1);
    detail::require_nonzero(k2);
    return bracket(k1, k2);
}

/// rho = 2 log|D|, theta = 2 Arg D with Arg in [0, 2 pi), where D = {k1, k2}.
inline ComplexDistance complex_distance(const Spinor& k1, const Spinor& k2,
                                        double tol = tolerance::kDegenerate) {
    const Complex d = lambda_length(k1, k2);
    if (detail::bracket_vanishes(k1, k2, tol))
        throw GeometryError(Errc::CommonCentre, "horospheres share a centre");
    double arg = std::arg(d);
    if (arg < 0) arg += 2.0 * std::numbers::pi;
    if (arg >= 2.0 * std::numbers::pi) arg = 0.0;
    return {2.0 * std::log(std::abs(d)), 2.0 * arg};
}

/// Signed hyperbolic distance between two horospheres in upper half space, along
/// their common perpendicular; negative when the horoballs overlap.
inline double horosphere_distance(const DecoratedHorosphereUHS& h1, const DecoratedHorosphereUHS& h2,
                                  double tol = tolerance::kDegenerate) {
    if (h1.centre.is_infinity() && h2.centre.is_infinity())
        throw GeometryError(Errc::CommonCentre, "both horospheres are centred at infinity");
    if (h1.centre.is_infinity() || h2.centre.is_infinity()) {
        // vertical geodesic from the sphere's north pole up to the plane
        const double height = h1.centre.is_infinity() ? h1.size : h2.size;
        const double diameter = h1.centre.is_infinity() ? h2.size : h1.size;
        return std::log(height / diameter);
    }
    const Complex z1 = h1.centre.value();
    const Complex z2 = h2.centre.value();
    const double gap = std::abs(z1 - z2);
    if (gap <= tol * std::max({1.0, std::abs(z1), std::abs(z2)}))
        throw GeometryError(Errc::CommonCentre, "horospheres share a centre");
    return 2.0 * std::log(gap / std::sqrt(h1.size * h2.size));
}

/// exp(rho/2), computed from upper-half-space geometry alone.
inline double geometric_lambda_modulus(const DecoratedHorosphereUHS& h1, const DecoratedHorosphereUHS& h2,
                                       double tol = tolerance::kDegenerate) {
    return std::exp(0.5 * horosphere_distance(h1, h2, tol));
}

/// l01 l23 + l03 l12 - l02 l13.
inline Complex ptolemy_residual(const Spinor& k0, const Spinor& k1, const Spinor& k2, const Spinor& k3) {
    const Complex l01 = lambda_length(k0, k1), l02 = lambda_length(k0, k2), l03 = lambda_length(k0, k3);
    const Complex l12 = lambda_length(k1, k2), l13 = lambda_length(k1, k3), l23 = lambda_length(k2, k3);
    return l01 * l23 + l03 * l12 - l02 * l13;
}

/// The three products l01 l23, l03 l12, l02 l13 whose signed sum is the residual.
inline std::array<Complex, 3> ptolemy_terms(const Spinor& k0, const Spinor& k1, const Spinor& k2, const Spinor& k3) {
    return {lambda_length(k0, k1) * lambda_length(k2, k3), lambda_length(k0, k3) * lambda_length(k1, k2),
            lambda_length(k0, k2) * lambda_length(k1, k3)};
}

inline ShapeTriple shape_parameters(const Spinor& k0, const Spinor& k1, const Spinor& k2, const Spinor& k3,
                                    double tol = tolerance::kDegenerate) {
    const std::array<Spinor, 4> k{k0, k1, k2, k3};
    for (const auto& s : k) detail::require_nonzero(s);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (detail::bracket_vanishes(k[i], k[j], tol))
                throw GeometryError(Errc::DegenerateTetrahedron, "vertices " + std::to_string(i) + " and " +
                                                                     std::to_string(j) + " coincide");
    const Complex l01 = bracket(k0, k1), l02 = bracket(k0, k2), l03 = bracket(k0, k3);
    const Complex l12 = bracket(k1, k2), l13 = bracket(k1, k3), l23 = bracket(k2, k3);
    return {(l02 * l13) / (l03 * l12), -(l03 * l12) / (l01 * l23), (l01 * l23) / (l02 * l13)};
}

inline bool lambda_antisymmetry_check(const Spinor& k1, const Spinor& k2, double tol = tolerance::kIdentity) {
    return std::abs(lambda_length(k1, k2) + lambda_length(k2, k1)) <= tol * k1.norm() * k2.norm();
}

}  // namespace spinhoro
