#pragma once

// SVG pictures of horocycles in the upper half plane, including Ford circles.
//
// A spinor with finite centre draws as a circle tangent to the real axis at
// Re(xi/eta) with diameter |eta|^-2; one centred at infinity draws as a horizontal
// line at height |xi|^2. Complex centres are projected to their real part. The
// decoration is an arrow at the north pole whose screen direction is the
// decoration's complex number, real part rightwards and imaginary part upwards.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spinhoro/horospheres.hpp"

namespace spinhoro {

struct SvgWindow {
    double xmin = -1.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
};

struct SvgOptions {
    int width = 800;
    int height = 600;
    std::optional<SvgWindow> window;  // defaults to the padded bounding box
};

struct Horocycle {
    DecoratedHorosphereUHS shape;
    std::string label;
    std::optional<std::pair<std::int64_t, std::int64_t>> fraction;  // Ford mode: p/q
};

inline std::vector<Horocycle> horocycles_from_spinors(const std::vector<Spinor>& spinors,
                                                      const std::vector<std::string>& labels = {}) {
    std::vector<Horocycle> out;
    out.reserve(spinors.size());
    for (std::size_t i = 0; i < spinors.size(); ++i) {
        if (spinors[i].is_zero()) throw GeometryError(Errc::ZeroSpinor, "spinor " + std::to_string(i + 1) + " is zero");
        out.push_back({decorated_horosphere_uhs(spinors[i]), i < labels.size() ? labels[i] : std::string{}, {}});
    }
    return out;
}

/// Reduced fractions p/q in [0, 1] with 0 < q <= qmax, in increasing order, as
/// the integer spinors (p, q).
inline std::vector<std::pair<std::int64_t, std::int64_t>> farey_fractions(std::int64_t qmax) {
    if (qmax < 1) throw GeometryError(Errc::ParseError, "qmax must be a positive integer");
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t q = 1; q <= qmax; ++q)
        for (std::int64_t p = 0; p <= q; ++p)
            if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first * r.second < r.first * l.second; });
    return out;
}

inline std::vector<Horocycle> ford_horocycles(std::int64_t qmax) {
    std::vector<Horocycle> out;
    for (const auto& [p, q] : farey_fractions(qmax)) {
        const Spinor k{Complex(static_cast<double>(p), 0.0), Complex(static_cast<double>(q), 0.0)};
        out.push_back({decorated_horosphere_uhs(k), std::to_string(p) + "/" + std::to_string(q), std::make_pair(p, q)});
    }
    return out;
}

/// Bounding box of all circles (and the heights of all lines), padded by 10%.
inline SvgWindow default_window(const std::vector<Horocycle>& shapes) {
    double xmin = 0, xmax = 0, ymax = 0;
    bool have_x = false;
    for (const auto& h : shapes) {
        if (h.shape.centre.is_infinity()) {
            ymax = std::max(ymax, h.shape.size);
            continue;
        }
        const double x = h.shape.centre.value().real();
        const double r = 0.5 * h.shape.size;
        xmin = have_x ? std::min(xmin, x - r) : x - r;
        xmax = have_x ? std::max(xmax, x + r) : x + r;
        have_x = true;
        ymax = std::max(ymax, h.shape.size);
    }
    if (!have_x) {
        xmin = -ymax;
        xmax = ymax;
    }
    if (ymax <= 0) ymax = 1.0;
    const double padx = 0.1 * (xmax - xmin);
    const double pady = 0.1 * ymax;
    return {xmin - padx, xmax + padx, -pady, ymax + pady};
}

namespace detail {
inline std::string fmt_num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

inline std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}
}  // namespace detail

/// SVG 1.1 document; elements appear in input order. Every shape carries its exact
/// geometry in data-* attributes (centre, diameter or height, direction, p/q).
inline std::string render_svg(const std::vector<Horocycle>& shapes, const SvgOptions& opts = {}) {
    const SvgWindow w = opts.window.value_or(default_window(shapes));
    if (!(w.xmax > w.xmin) || !(w.ymax > w.ymin) || opts.width <= 0 || opts.height <= 0)
        throw GeometryError(Errc::EmptyWindow, "window has no area");

    const double sx = opts.width / (w.xmax - w.xmin);
    const double sy = opts.height / (w.ymax - w.ymin);
    const auto X = [&](double x) { return (x - w.xmin) * sx; };
    const auto Y = [&](double y) { return (w.ymax - y) * sy; };  // up is up
    using detail::fmt_num;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opts.width << "\" height=\""
       << opts.height << "\" viewBox=\"0 0 " << opts.width << ' ' << opts.height << "\">\n"
       << "  <defs><marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"3\" orient=\"auto\">"
          "<path d=\"M0,0 L6,3 L0,6 z\" fill=\"#c0392b\"/></marker></defs>\n"
       << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << "  <line class=\"axis\" x1=\"0\" y1=\"" << fmt_num(Y(0)) << "\" x2=\"" << opts.width << "\" y2=\""
       << fmt_num(Y(0)) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";

    const double arrow_span = 0.07 * (w.ymax - w.ymin);  // fits in the default padding
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        const auto& h = shapes[i];
        std::ostringstream data;
        data << " data-index=\"" << i + 1 << "\"";
        if (!h.label.empty()) data << " data-label=\"" << detail::xml_escape(h.label) << "\"";
        if (h.fraction) data << " data-p=\"" << h.fraction->first << "\" data-q=\"" << h.fraction->second << "\"";
        data << " data-direction-re=\"" << fmt_num(h.shape.direction.real()) << "\" data-direction-im=\""
             << fmt_num(h.shape.direction.imag()) << "\"";

        double top_x = 0, top_y = 0, arrow_len = 0;
        if (h.shape.centre.is_infinity()) {
            top_y = h.shape.size;
            top_x = 0.5 * (w.xmin + w.xmax);
            arrow_len = arrow_span;
            os << "  <line class=\"horocycle\" x1=\"0\" y1=\"" << fmt_num(Y(top_y)) << "\" x2=\"" << opts.width
               << "\" y2=\"" << fmt_num(Y(top_y)) << "\" data-height=\"" << fmt_num(h.shape.size) << "\""
               << data.str() << " stroke=\"#2c3e80\" fill=\"none\"/>\n";
        } else {
            const Complex c = h.shape.centre.value();
            const double d = h.shape.size;
            top_x = c.real();
            top_y = d;
            arrow_len = std::min(0.3 * d, arrow_span);
            os << "  <circle class=\"horocycle\" cx=\"" << fmt_num(X(c.real())) << "\" cy=\"" << fmt_num(Y(0.5 * d))
               << "\" r=\"" << fmt_num(0.5 * d * sy) << "\" data-centre-re=\"" << fmt_num(c.real())
               << "\" data-centre-im=\"" << fmt_num(c.imag()) << "\" data-diameter=\"" << fmt_num(d) << "\""
               << data.str() << " stroke=\"#2c3e80\" fill=\"none\"/>\n";
        }
        const Complex tip = h.shape.direction * arrow_len;
        os << "  <line class=\"decoration\" data-index=\"" << i + 1 << "\" x1=\"" << fmt_num(X(top_x)) << "\" y1=\""
           << fmt_num(Y(top_y)) << "\" x2=\"" << fmt_num(X(top_x) + tip.real() * sx) << "\" y2=\""
           << fmt_num(Y(top_y) - tip.imag() * sy) << "\" stroke=\"#c0392b\" marker-end=\"url(#arrow)\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace spinhoro
