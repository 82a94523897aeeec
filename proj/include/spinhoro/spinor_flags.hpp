#pragma once

// Spinors, the symplectic bracket, the light-cone map phi1 and pointed oriented null flags.

#include <cmath>
#include <ostream>

#include <Eigen/Dense>

#include "spinhoro/complex_minkowski.hpp"

namespace spinhoro {

struct Spinor {
    Complex xi{}, eta{};

    double norm_sq() const { return std::norm(xi) + std::norm(eta); }
    double norm() const { return std::sqrt(norm_sq()); }
    bool is_zero() const { return xi == 0.0 && eta == 0.0; }

    bool is_real(double tol = tolerance::kLinear) const {
        const double scale = tol * std::max(1.0, norm());
        return std::abs(xi.imag()) <= scale && std::abs(eta.imag()) <= scale;
    }

    friend Spinor operator+(const Spinor& l, const Spinor& r) { return {l.xi + r.xi, l.eta + r.eta}; }
    friend Spinor operator-(const Spinor& l, const Spinor& r) { return {l.xi - r.xi, l.eta - r.eta}; }
    friend Spinor operator-(const Spinor& s) { return {-s.xi, -s.eta}; }
    friend Spinor operator*(Complex c, const Spinor& s) { return {c * s.xi, c * s.eta}; }
    friend Spinor operator*(const ComplexMatrix2& m, const Spinor& s) {
        return {m.a * s.xi + m.b * s.eta, m.c * s.xi + m.d * s.eta};
    }
    friend bool operator==(const Spinor&, const Spinor&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Spinor& s) {
        return os << "(" << s.xi << ", " << s.eta << ")";
    }
};

namespace detail {
inline void require_nonzero(const Spinor& k) {
    if (k.is_zero()) throw GeometryError(Errc::ZeroSpinor, "spinor is zero");
}

/// kappa nu^* + nu kappa^* as Minkowski coordinates. The result is Hermitian by
/// construction, so the diagonal is formed from real parts directly.
inline MinkowskiVector symmetric_outer(const Spinor& k, const Spinor& nu) {
    const double top = 2.0 * (k.xi * std::conj(nu.xi)).real();
    const double bottom = 2.0 * (k.eta * std::conj(nu.eta)).real();
    const Complex off = k.xi * std::conj(nu.eta) + nu.xi * std::conj(k.eta);
    return {top + bottom, 2.0 * off.real(), 2.0 * off.imag(), top - bottom};
}
}  // namespace detail

/// {k1, k2} = xi1 eta2 - eta1 xi2.
inline Complex bracket(const Spinor& k1, const Spinor& k2) { return k1.xi * k2.eta - k1.eta * k2.xi; }

/// phi1(k) = k k^*, a point of the future light cone for nonzero k.
inline MinkowskiVector phi1(const Spinor& k) { return 0.5 * detail::symmetric_outer(k, k); }

/// Z(xi, eta) = (i conj(eta), -i conj(xi)) = J conj(k).
inline Spinor zdir(const Spinor& k) { return {kI * std::conj(k.eta), -kI * std::conj(k.xi)}; }

/// Derivative of phi1 at k in direction nu: k nu^* + nu k^*.
inline MinkowskiVector dphi1(const Spinor& k, const Spinor& nu) { return detail::symmetric_outer(k, nu); }

/// Pointed oriented null flag [[p, v]]: flagpole R p, plane span(p, v) oriented by v.
struct Flag {
    MinkowskiVector p;
    MinkowskiVector v;

    bool is_valid(double tol = tolerance::kIdentity) const {
        if (!is_future_lightlike(p, tol)) return false;
        if (std::abs(lorentz_inner(p, v)) > tol * p.max_abs() * std::max(1.0, v.max_abs())) return false;
        Eigen::Matrix<double, 4, 2> m;
        const auto pc = p.coords();
        const auto vc = v.coords();
        for (int i = 0; i < 4; ++i) {
            m(i, 0) = pc[static_cast<std::size_t>(i)];
            m(i, 1) = vc[static_cast<std::size_t>(i)];
        }
        const Eigen::Vector2d s = m.jacobiSvd().singularValues();
        return s(1) > tol * s(0);
    }
};

inline Flag make_flag(const Spinor& k) {
    detail::require_nonzero(k);
    return {phi1(k), dphi1(k, zdir(k))};
}

/// [[p, v1]] == [[p, v2]] iff a p + b v1 + c v2 = 0 for some reals with b c < 0.
/// The kernel of [p | v1 | v2] is read off an SVD with relative singular-value threshold.
inline bool flags_equal(const Flag& f1, const Flag& f2, double tol = tolerance::kIdentity) {
    if (!f1.is_valid(tol) || !f2.is_valid(tol)) throw GeometryError(Errc::InvalidFlag, "flag invariants violated");

    const double scale = std::max(f1.p.max_abs(), f2.p.max_abs());
    const auto p1 = f1.p.coords();
    const auto p2 = f2.p.coords();
    for (std::size_t i = 0; i < 4; ++i)
        if (std::abs(p1[i] - p2[i]) > tol * scale) return false;

    Eigen::Matrix<double, 4, 3> m;
    const std::array<std::array<double, 4>, 3> cols{p1, f1.v.coords(), f2.v.coords()};
    for (int j = 0; j < 3; ++j) {
        Eigen::Vector4d col;
        for (int i = 0; i < 4; ++i) col(i) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        m.col(j) = col / col.norm();
    }
    Eigen::JacobiSVD<Eigen::Matrix<double, 4, 3>> svd(m, Eigen::ComputeFullV);
    const Eigen::Vector3d s = svd.singularValues();
    if (s(2) > 1e-9 * s(0)) return false;
    const Eigen::Vector3d kernel = svd.matrixV().col(2);
    return kernel(1) * kernel(2) < 0;
}

inline Flag flag_action(const ComplexMatrix2& a, const Flag& f, double tol = tolerance::kIdentity) {
    detail::require_unimodular(a, tol);
    if (!f.is_valid(tol)) throw GeometryError(Errc::InvalidFlag, "flag invariants violated");
    return {sl2c_action_minkowski(a, f.p, tol), sl2c_action_minkowski(a, f.v, tol)};
}

}  // namespace spinhoro
