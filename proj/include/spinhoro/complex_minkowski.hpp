#pragma once

// Complex 2x2 matrices, Minkowski space R^{1,3} and the SL(2,C) action on it.
//
// Minkowski coordinates (T,X,Y,Z) carry the form dT^2 - dX^2 - dY^2 - dZ^2 and are
// identified with Hermitian matrices by
//
//     (T,X,Y,Z) <-> 1/2 [ T+Z   X+iY ]
//                       [ X-iY  T-Z  ]
//
// so that Tr S = T and 4 det S = <x,x>.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <ostream>

#include "spinhoro/errors.hpp"

namespace spinhoro {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

struct ComplexMatrix2 {
    Complex a{}, b{}, c{}, d{};

    static constexpr ComplexMatrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Complex det() const { return a * d - b * c; }
    Complex trace() const { return a + d; }

    /// Conjugate transpose.
    ComplexMatrix2 adjoint() const { return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)}; }

    /// Inverse assuming det = 1.
    ComplexMatrix2 unimodular_inverse() const { return {d, -b, -c, a}; }

    double max_abs() const {
        return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
    }

    bool is_unimodular(double tol = tolerance::kIdentity) const { return std::abs(det() - 1.0) <= tol; }

    bool is_hermitian(double tol = tolerance::kLinear) const {
        const double scale = tol * std::max(1.0, max_abs());
        return std::abs(b - std::conj(c)) <= scale && std::abs(a.imag()) <= scale &&
               std::abs(d.imag()) <= scale;
    }

    friend ComplexMatrix2 operator*(const ComplexMatrix2& l, const ComplexMatrix2& r) {
        return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
    }
    friend ComplexMatrix2 operator*(Complex s, const ComplexMatrix2& m) {
        return {s * m.a, s * m.b, s * m.c, s * m.d};
    }
    friend ComplexMatrix2 operator+(const ComplexMatrix2& l, const ComplexMatrix2& r) {
        return {l.a + r.a, l.b + r.b, l.c + r.c, l.d + r.d};
    }
    friend ComplexMatrix2 operator-(const ComplexMatrix2& m) { return {-m.a, -m.b, -m.c, -m.d}; }
    friend bool operator==(const ComplexMatrix2&, const ComplexMatrix2&) = default;

    friend std::ostream& operator<<(std::ostream& os, const ComplexMatrix2& m) {
        return os << "[[" << m.a << ", " << m.b << "], [" << m.c << ", " << m.d << "]]";
    }
};

enum class CausalType { Timelike, Lightlike, Spacelike };

struct MinkowskiVector {
    double t = 0.0, x = 0.0, y = 0.0, z = 0.0;

    std::array<double, 4> coords() const { return {t, x, y, z}; }

    /// Largest absolute coordinate; used to scale relative tolerances.
    double max_abs() const { return std::max({std::abs(t), std::abs(x), std::abs(y), std::abs(z)}); }

    friend MinkowskiVector operator+(const MinkowskiVector& l, const MinkowskiVector& r) {
        return {l.t + r.t, l.x + r.x, l.y + r.y, l.z + r.z};
    }
    friend MinkowskiVector operator-(const MinkowskiVector& l, const MinkowskiVector& r) {
        return {l.t - r.t, l.x - r.x, l.y - r.y, l.z - r.z};
    }
    friend MinkowskiVector operator*(double s, const MinkowskiVector& v) { return {s * v.t, s * v.x, s * v.y, s * v.z}; }
    friend MinkowskiVector operator-(const MinkowskiVector& v) { return {-v.t, -v.x, -v.y, -v.z}; }
    friend bool operator==(const MinkowskiVector&, const MinkowskiVector&) = default;

    friend std::ostream& operator<<(std::ostream& os, const MinkowskiVector& v) {
        return os << "(" << v.t << ", " << v.x << ", " << v.y << ", " << v.z << ")";
    }
};

/// Origin of the hyperboloid, q0.
inline constexpr MinkowskiVector kHyperboloidOrigin{1.0, 0.0, 0.0, 0.0};
/// Light-cone point p0 = phi1(1,0).
inline constexpr MinkowskiVector kNorthLightPoint{1.0, 0.0, 0.0, 1.0};
/// Unit vector along Y.
inline constexpr MinkowskiVector kUnitY{0.0, 0.0, 1.0, 0.0};

inline double lorentz_inner(const MinkowskiVector& u, const MinkowskiVector& v) {
    return u.t * v.t - u.x * v.x - u.y * v.y - u.z * v.z;
}

/// Classifies by the sign of <x,x>; "zero" is |<x,x>| <= tol * (max |coord|)^2.
inline CausalType causal_type(const MinkowskiVector& v, double tol = tolerance::kIdentity) {
    const double q = lorentz_inner(v, v);
    const double m = v.max_abs();
    if (std::abs(q) <= tol * m * m) return CausalType::Lightlike;
    return q > 0 ? CausalType::Timelike : CausalType::Spacelike;
}

inline bool is_future_lightlike(const MinkowskiVector& v, double tol = tolerance::kIdentity) {
    return v.t > 0 && causal_type(v, tol) == CausalType::Lightlike;
}

/// Hermitian matrix to Minkowski coordinates. Throws NotHermitian.
inline MinkowskiVector herm_to_minkowski(const ComplexMatrix2& s, double tol = tolerance::kLinear) {
    if (!s.is_hermitian(tol)) throw GeometryError(Errc::NotHermitian, "matrix is not Hermitian");
    const double a = s.a.real();
    const double d = s.d.real();
    return {a + d, 2.0 * s.b.real(), 2.0 * s.b.imag(), a - d};
}

inline ComplexMatrix2 minkowski_to_herm(const MinkowskiVector& v) {
    return {Complex(0.5 * (v.t + v.z), 0.0), 0.5 * Complex(v.x, v.y), 0.5 * Complex(v.x, -v.y),
            Complex(0.5 * (v.t - v.z), 0.0)};
}

namespace detail {
inline void require_unimodular(const ComplexMatrix2& a, double tol) {
    if (!a.is_unimodular(tol)) throw GeometryError(Errc::NotUnimodular, "det A != 1");
}
}  // namespace detail

/// A.x = A S A^*. Throws NotUnimodular.
inline MinkowskiVector sl2c_action_minkowski(const ComplexMatrix2& a, const MinkowskiVector& v,
                                             double tol = tolerance::kIdentity) {
    detail::require_unimodular(a, tol);
    const ComplexMatrix2 image = a * minkowski_to_herm(v) * a.adjoint();
    // A S A^* is Hermitian up to rounding; symmetrize instead of re-checking.
    const Complex off = 0.5 * (image.b + std::conj(image.c));
    return {image.a.real() + image.d.real(), 2.0 * off.real(), 2.0 * off.imag(), image.a.real() - image.d.real()};
}

using Matrix4 = std::array<std::array<double, 4>, 4>;

inline Matrix4 operator*(const Matrix4& l, const Matrix4& r) {
    Matrix4 out{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k) out[i][j] += l[i][k] * r[k][j];
    return out;
}

inline MinkowskiVector operator*(const Matrix4& m, const MinkowskiVector& v) {
    const auto c = v.coords();
    std::array<double, 4> out{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t k = 0; k < 4; ++k) out[i] += m[i][k] * c[k];
    return {out[0], out[1], out[2], out[3]};
}

/// The SO(1,3)+ matrix of x -> A.x, built column by column from the basis images.
inline Matrix4 so13_matrix(const ComplexMatrix2& a, double tol = tolerance::kIdentity) {
    detail::require_unimodular(a, tol);
    static constexpr std::array<MinkowskiVector, 4> basis{
        MinkowskiVector{1, 0, 0, 0}, MinkowskiVector{0, 1, 0, 0}, MinkowskiVector{0, 0, 1, 0},
        MinkowskiVector{0, 0, 0, 1}};
    Matrix4 m{};
    for (std::size_t j = 0; j < 4; ++j) {
        const auto col = sl2c_action_minkowski(a, basis[j], tol).coords();
        for (std::size_t i = 0; i < 4; ++i) m[i][j] = col[i];
    }
    return m;
}

}  // namespace spinhoro
