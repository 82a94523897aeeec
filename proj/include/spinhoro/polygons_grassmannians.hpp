#pragma once

// Tuples of spinors as 2 x d matrices: total positivity, ideal polygons in the
// upper half plane, Pluecker coordinates and SL(2) gauge normalization.

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinhoro/lambda_lengths.hpp"

namespace spinhoro {

enum class ScalarField { Real, Complex };

/// Ordered tuple of nonzero spinors; column j of the 2 x d matrix is spinor j.
class SpinorTuple {
public:
    explicit SpinorTuple(std::vector<Spinor> spinors) : spinors_(std::move(spinors)) {
        for (std::size_t i = 0; i < spinors_.size(); ++i)
            if (spinors_[i].is_zero()) throw GeometryError(Errc::ZeroSpinor, "spinor " + std::to_string(i) + " is zero");
    }
    SpinorTuple(std::initializer_list<Spinor> spinors) : SpinorTuple(std::vector<Spinor>(spinors)) {}

    std::size_t size() const { return spinors_.size(); }
    const Spinor& operator[](std::size_t i) const { return spinors_[i]; }
    const std::vector<Spinor>& spinors() const { return spinors_; }
    auto begin() const { return spinors_.begin(); }
    auto end() const { return spinors_.end(); }

    /// Some pairwise bracket is nonzero.
    bool is_rank2(double tol = tolerance::kDegenerate) const {
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = i + 1; j < size(); ++j)
                if (!detail::bracket_vanishes(spinors_[i], spinors_[j], tol)) return true;
        return false;
    }

    SpinorTuple transformed(const ComplexMatrix2& a) const {
        std::vector<Spinor> out;
        out.reserve(size());
        for (const auto& k : spinors_) out.push_back(a * k);
        return SpinorTuple(std::move(out));
    }

    SpinorTuple negated() const { return transformed(-ComplexMatrix2::identity()); }

    std::vector<BoundaryPoint> centres() const {
        std::vector<BoundaryPoint> out;
        out.reserve(size());
        for (const auto& k : spinors_) out.push_back(centre_uhs(k));
        return out;
    }

    friend bool operator==(const SpinorTuple&, const SpinorTuple&) = default;

private:
    std::vector<Spinor> spinors_;
};

/// The 2 x 2 column minors p_ij, i < j, stored in lexicographic pair order.
class PluckerVector {
public:
    PluckerVector(std::size_t d, std::vector<Complex> values) : d_(d), values_(std::move(values)) {
        if (values_.size() != d * (d - 1) / 2)
            throw std::invalid_argument("Pluecker vector needs d(d-1)/2 coordinates");
    }

    std::size_t dimension() const { return d_; }
    const std::vector<Complex>& values() const { return values_; }

    /// p_ij for i != j (0-based); p_ji = -p_ij.
    Complex at(std::size_t i, std::size_t j) const {
        if (i == j) return 0.0;
        if (i > j) return -at(j, i);
        return values_[index(i, j)];
    }

    /// Largest |p_ij p_kl + p_il p_jk - p_ik p_jl| / max term, over i<j<k<l.
    double max_relation_residual() const {
        double worst = 0.0;
        for (std::size_t i = 0; i < d_; ++i)
            for (std::size_t j = i + 1; j < d_; ++j)
                for (std::size_t k = j + 1; k < d_; ++k)
                    for (std::size_t l = k + 1; l < d_; ++l) {
                        const Complex t1 = at(i, j) * at(k, l), t2 = at(i, l) * at(j, k), t3 = at(i, k) * at(j, l);
                        const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3)});
                        if (scale == 0.0) continue;
                        worst = std::max(worst, std::abs(t1 + t2 - t3) / scale);
                    }
        return worst;
    }

    bool satisfies_relations(double tol = tolerance::kIdentity) const { return max_relation_residual() <= tol; }

    friend bool operator==(const PluckerVector&, const PluckerVector&) = default;

private:
    std::size_t index(std::size_t i, std::size_t j) const {
        // pairs (0,1),(0,2),...,(0,d-1),(1,2),...
        return i * d_ - i * (i + 1) / 2 + (j - i - 1);
    }

    std::size_t d_;
    std::vector<Complex> values_;
};

/// All spinors real and every bracket {k_i, k_j}, i < j, real and positive.
inline bool is_totally_positive(const SpinorTuple& t, double tol = tolerance::kDegenerate) {
    for (const auto& k : t)
        if (!k.is_real(tol)) return false;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            const Complex b = bracket(t[i], t[j]);
            const double scale = tol * t[i].norm() * t[j].norm();
            if (std::abs(b.imag()) > scale || b.real() <= scale) return false;
        }
    return true;
}

/// True iff some rotation of the centres is strictly decreasing, with oo above every
/// real number. The boundary of the upper half plane is oriented in the negative
/// real direction, so this is exactly "in order around the boundary".
inline bool cyclic_order_ok(const std::vector<BoundaryPoint>& centres, double tol = tolerance::kLinear) {
    const std::size_t d = centres.size();
    std::vector<double> keys;
    keys.reserve(d);
    bool seen_infinity = false;
    for (const auto& c : centres) {
        if (c.is_infinity()) {
            if (seen_infinity) throw GeometryError(Errc::MultipleInfinities, "more than one centre at infinity");
            seen_infinity = true;
            keys.push_back(std::numeric_limits<double>::infinity());
            continue;
        }
        const Complex z = c.value();
        if (std::abs(z.imag()) > tol * std::max(1.0, std::abs(z)))
            throw GeometryError(Errc::NonRealCentre, "centre is not on the real line");
        keys.push_back(z.real());
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            if (std::isfinite(keys[i]) && std::isfinite(keys[j]) &&
                std::abs(keys[i] - keys[j]) <= tol * std::max({1.0, std::abs(keys[i]), std::abs(keys[j])}))
                throw GeometryError(Errc::DuplicateCentre, "centres " + std::to_string(i) + " and " +
                                                               std::to_string(j) + " coincide");
    for (std::size_t start = 0; start < d; ++start) {
        bool decreasing = true;
        for (std::size_t step = 0; step + 1 < d && decreasing; ++step)
            decreasing = keys[(start + step) % d] > keys[(start + step + 1) % d];
        if (decreasing) return true;
    }
    return false;
}

inline PluckerVector plucker(const SpinorTuple& t, double tol = tolerance::kDegenerate) {
    if (!t.is_rank2(tol)) throw GeometryError(Errc::RankDeficient, "all columns are proportional");
    std::vector<Complex> values;
    values.reserve(t.size() * (t.size() - 1) / 2);
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j) values.push_back(bracket(t[i], t[j]));
    return PluckerVector(t.size(), std::move(values));
}

/// Canonical representative of the SL(2) orbit: the unique unimodular A with
/// A k1 = (1, 0) and A k2 = (0, {k1, k2}), applied to the whole tuple.
inline SpinorTuple gauge_normalize(const SpinorTuple& t, ScalarField field, double tol = tolerance::kDegenerate) {
    if (t.size() < 2) throw GeometryError(Errc::DegeneratePair, "need at least two spinors");
    if (field == ScalarField::Real && !is_totally_positive(t, tol))
        throw GeometryError(Errc::NotTotallyPositive, "real gauge requires a totally positive tuple");
    if (detail::bracket_vanishes(t[0], t[1], tol))
        throw GeometryError(Errc::DegeneratePair, "first two spinors are proportional");
    const Complex d = bracket(t[0], t[1]);
    // M = [k1 | k2/D] has det 1; A = M^{-1}.
    const ComplexMatrix2 m{t[0].xi, t[1].xi / d, t[0].eta, t[1].eta / d};
    return t.transformed(m.unimodular_inverse());
}

inline PluckerVector teichmuller_coordinates(const SpinorTuple& t, ScalarField field,
                                             double tol = tolerance::kDegenerate) {
    if (t.size() < 3) throw GeometryError(Errc::DegenerateInput, "polygons need at least three vertices");
    if (field == ScalarField::Real) {
        if (!is_totally_positive(t, tol))
            throw GeometryError(Errc::NotTotallyPositive, "tuple is not totally positive");
    } else {
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = i + 1; j < t.size(); ++j)
                if (detail::bracket_vanishes(t[i], t[j], tol))
                    throw GeometryError(Errc::ZeroPlucker, "p(" + std::to_string(i + 1) + "," +
                                                               std::to_string(j + 1) + ") vanishes");
    }
    return plucker(t, tol);
}

/// Real spinors are exactly those giving planar spin decorations on horocycles.
inline bool is_planar_real(const Spinor& k, double tol = tolerance::kLinear) {
    detail::require_nonzero(k);
    return k.is_real(tol);
}

}  // namespace spinhoro
