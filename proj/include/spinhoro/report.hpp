#pragma once

// Input and report documents for the command-line front end, and the commands
// that turn one into the other.
//
// Input schema (UTF-8 JSON):
//   {"spinors": [[re_xi, im_xi, re_eta, im_eta], ...], "labels": [...], "tol": 1e-10}
// Complex numbers in reports are [re, im] pairs.

#include <cmath>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "spinhoro/polygons_grassmannians.hpp"

namespace spinhoro {

struct InputDocument {
    std::vector<Spinor> spinors;
    std::vector<std::string> labels;
    std::optional<double> tol;

    double tolerance_or_default() const { return tol.value_or(tolerance::kDegenerate); }
};

namespace detail {
[[noreturn]] inline void parse_error(const std::string& what) { throw GeometryError(Errc::ParseError, what); }

inline double finite_number(const nlohmann::json& v, const std::string& where) {
    if (!v.is_number()) parse_error(where + " is not a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) parse_error(where + " is not finite");
    return x;
}
}  // namespace detail

inline void validate(const InputDocument& doc) {
    if (doc.spinors.empty()) detail::parse_error("at least one spinor is required");
    if (!doc.labels.empty() && doc.labels.size() != doc.spinors.size())
        detail::parse_error("labels must match the number of spinors");
    if (doc.tol && !(*doc.tol > 0.0 && std::isfinite(*doc.tol))) detail::parse_error("tol must be positive");
}

inline InputDocument parse_input(const std::string& text) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        detail::parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) detail::parse_error("input must be a JSON object");
    if (!root.contains("spinors") || !root["spinors"].is_array()) detail::parse_error("missing \"spinors\" array");

    InputDocument doc;
    std::size_t index = 0;
    for (const auto& entry : root["spinors"]) {
        const std::string where = "spinors[" + std::to_string(index++) + "]";
        if (!entry.is_array() || entry.size() != 4) detail::parse_error(where + " must hold four numbers");
        double q[4];
        for (std::size_t i = 0; i < 4; ++i) q[i] = detail::finite_number(entry[i], where);
        doc.spinors.push_back({Complex(q[0], q[1]), Complex(q[2], q[3])});
    }
    if (root.contains("labels")) {
        if (!root["labels"].is_array()) detail::parse_error("\"labels\" must be an array");
        for (const auto& l : root["labels"]) {
            if (!l.is_string()) detail::parse_error("labels must be strings");
            doc.labels.push_back(l.get<std::string>());
        }
    }
    if (root.contains("tol")) doc.tol = detail::finite_number(root["tol"], "tol");
    validate(doc);
    return doc;
}

/// Parses the inline form "re_xi,im_xi,re_eta,im_eta".
inline Spinor parse_inline_spinor(const std::string& text) {
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const double x = std::stod(item, &used);
            if (used != item.size() || !std::isfinite(x)) throw std::invalid_argument(item);
            parts.push_back(x);
        } catch (const std::exception&) {
            detail::parse_error("bad number '" + item + "' in --spinor " + text);
        }
    }
    if (parts.size() != 4) detail::parse_error("--spinor expects re,im,re,im; got " + text);
    return {Complex(parts[0], parts[1]), Complex(parts[2], parts[3])};
}

struct PairDistance {
    std::size_t i = 0, j = 0;
    double rho = 0.0, theta = 0.0;

    friend bool operator==(const PairDistance&, const PairDistance&) = default;
};

struct PluckerEntry {
    std::size_t i = 0, j = 0;  // 1-based, i < j
    Complex value;

    friend bool operator==(const PluckerEntry&, const PluckerEntry&) = default;
};

struct QuadrupleResidual {
    std::array<std::size_t, 4> indices{};  // 1-based
    Complex residual;

    friend bool operator==(const QuadrupleResidual&, const QuadrupleResidual&) = default;
};

struct TetraSection {
    Complex residual;
    ShapeTriple shape;
    bool complement_relation = false;  // z + 1/z' = 1
    bool product_relation = false;     // z z' z'' = -1

    friend bool operator==(const TetraSection&, const TetraSection&) = default;
};

struct GrassmannSection {
    ScalarField field = ScalarField::Complex;
    std::vector<PluckerEntry> plucker;
    std::vector<QuadrupleResidual> ptolemy;
    std::optional<bool> totally_positive;                                // real mode
    std::vector<std::pair<std::size_t, std::size_t>> zero_coordinates;  // complex mode, 1-based
    std::optional<std::vector<Spinor>> gauge_normalized;

    friend bool operator==(const GrassmannSection&, const GrassmannSection&) = default;
};

struct ReportDocument {
    std::string command;
    std::vector<std::string> labels;
    std::vector<std::vector<Complex>> lambda_matrix;
    std::vector<PairDistance> distances;
    std::vector<DecoratedHorosphereUHS> horospheres;
    std::optional<TetraSection> tetra;
    std::optional<GrassmannSection> grassmann;

    friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

// JSON mapping

namespace detail {
inline nlohmann::json complex_to_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2) parse_error("complex numbers are [re, im] pairs");
    return {finite_number(j[0], "re"), finite_number(j[1], "im")};
}

inline nlohmann::json spinor_to_json(const Spinor& k) {
    return nlohmann::json::array({k.xi.real(), k.xi.imag(), k.eta.real(), k.eta.imag()});
}

inline Spinor spinor_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 4) parse_error("spinors are [re, im, re, im] quadruples");
    return {Complex(finite_number(j[0], "re"), finite_number(j[1], "im")),
            Complex(finite_number(j[2], "re"), finite_number(j[3], "im"))};
}
}  // namespace detail

inline nlohmann::json to_json(const ReportDocument& r) {
    using nlohmann::json;
    json out;
    out["command"] = r.command;
    if (!r.labels.empty()) out["labels"] = r.labels;

    json matrix = json::array();
    for (const auto& row : r.lambda_matrix) {
        json jr = json::array();
        for (const auto& z : row) jr.push_back(detail::complex_to_json(z));
        matrix.push_back(jr);
    }
    out["lambda_matrix"] = matrix;

    json dists = json::array();
    for (const auto& d : r.distances) dists.push_back({{"i", d.i}, {"j", d.j}, {"rho", d.rho}, {"theta", d.theta}});
    out["distances"] = dists;

    json horos = json::array();
    for (const auto& h : r.horospheres) {
        json jh;
        jh["centre"] = h.centre.is_infinity() ? json(nullptr) : detail::complex_to_json(h.centre.value());
        jh[h.centre.is_infinity() ? "height" : "diameter"] = h.size;
        jh["direction"] = detail::complex_to_json(h.direction);
        horos.push_back(jh);
    }
    out["horospheres"] = horos;

    if (r.tetra) {
        const auto& t = *r.tetra;
        out["tetra"] = {{"residual", detail::complex_to_json(t.residual)},
                        {"z", detail::complex_to_json(t.shape.z)},
                        {"zp", detail::complex_to_json(t.shape.zp)},
                        {"zpp", detail::complex_to_json(t.shape.zpp)},
                        {"complement_relation", t.complement_relation},
                        {"product_relation", t.product_relation}};
    }
    if (r.grassmann) {
        const auto& g = *r.grassmann;
        json jg;
        jg["field"] = g.field == ScalarField::Real ? "real" : "complex";
        json pl = json::array();
        for (const auto& e : g.plucker) pl.push_back({{"i", e.i}, {"j", e.j}, {"value", detail::complex_to_json(e.value)}});
        jg["plucker"] = pl;
        json pt = json::array();
        for (const auto& q : g.ptolemy)
            pt.push_back({{"indices", q.indices}, {"residual", detail::complex_to_json(q.residual)}});
        jg["ptolemy"] = pt;
        if (g.totally_positive) jg["totally_positive"] = *g.totally_positive;
        json zeros = json::array();
        for (const auto& [i, j] : g.zero_coordinates) zeros.push_back({i, j});
        jg["zero_coordinates"] = zeros;
        if (g.gauge_normalized) {
            json gn = json::array();
            for (const auto& k : *g.gauge_normalized) gn.push_back(detail::spinor_to_json(k));
            jg["gauge_normalized"] = gn;
        } else {
            jg["gauge_normalized"] = nullptr;
        }
        out["grassmann"] = jg;
    }
    return out;
}

inline ReportDocument report_from_json(const nlohmann::json& j) {
    try {
        ReportDocument r;
        r.command = j.at("command").get<std::string>();
        if (j.contains("labels")) r.labels = j["labels"].get<std::vector<std::string>>();
        for (const auto& row : j.at("lambda_matrix")) {
            std::vector<Complex> out;
            for (const auto& z : row) out.push_back(detail::complex_from_json(z));
            r.lambda_matrix.push_back(std::move(out));
        }
        for (const auto& d : j.at("distances"))
            r.distances.push_back({d.at("i").get<std::size_t>(), d.at("j").get<std::size_t>(),
                                   d.at("rho").get<double>(), d.at("theta").get<double>()});
        for (const auto& h : j.at("horospheres")) {
            DecoratedHorosphereUHS out;
            if (h.at("centre").is_null()) {
                out.centre = BoundaryPoint::infinity();
                out.size = h.at("height").get<double>();
            } else {
                out.centre = BoundaryPoint::finite(detail::complex_from_json(h["centre"]));
                out.size = h.at("diameter").get<double>();
            }
            out.direction = detail::complex_from_json(h.at("direction"));
            r.horospheres.push_back(out);
        }
        if (j.contains("tetra")) {
            const auto& t = j["tetra"];
            r.tetra = TetraSection{detail::complex_from_json(t.at("residual")),
                                   {detail::complex_from_json(t.at("z")), detail::complex_from_json(t.at("zp")),
                                    detail::complex_from_json(t.at("zpp"))},
                                   t.at("complement_relation").get<bool>(),
                                   t.at("product_relation").get<bool>()};
        }
        if (j.contains("grassmann")) {
            const auto& jg = j["grassmann"];
            GrassmannSection g;
            g.field = jg.at("field").get<std::string>() == "real" ? ScalarField::Real : ScalarField::Complex;
            for (const auto& e : jg.at("plucker"))
                g.plucker.push_back({e.at("i").get<std::size_t>(), e.at("j").get<std::size_t>(),
                                     detail::complex_from_json(e.at("value"))});
            for (const auto& q : jg.at("ptolemy"))
                g.ptolemy.push_back({q.at("indices").get<std::array<std::size_t, 4>>(),
                                     detail::complex_from_json(q.at("residual"))});
            if (jg.contains("totally_positive")) g.totally_positive = jg["totally_positive"].get<bool>();
            for (const auto& z : jg.at("zero_coordinates"))
                g.zero_coordinates.emplace_back(z.at(0).get<std::size_t>(), z.at(1).get<std::size_t>());
            if (!jg.at("gauge_normalized").is_null()) {
                std::vector<Spinor> gn;
                for (const auto& k : jg["gauge_normalized"]) gn.push_back(detail::spinor_from_json(k));
                g.gauge_normalized = std::move(gn);
            }
            r.grassmann = std::move(g);
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        detail::parse_error(std::string("malformed report: ") + e.what());
    }
}

// Commands

namespace detail {
inline void require_nonzero_inputs(const InputDocument& in) {
    for (std::size_t i = 0; i < in.spinors.size(); ++i)
        if (in.spinors[i].is_zero())
            throw GeometryError(Errc::ZeroSpinor, "spinor " + std::to_string(i + 1) + " is zero");
}

/// Lambda matrix computed once for i < j and mirrored, so antisymmetry is exact.
inline std::vector<std::vector<Complex>> lambda_matrix(const std::vector<Spinor>& ks) {
    const std::size_t d = ks.size();
    std::vector<std::vector<Complex>> m(d, std::vector<Complex>(d, Complex{}));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            m[i][j] = lambda_length(ks[i], ks[j]);
            m[j][i] = Complex{} - m[i][j];  // no signed zeros
        }
    return m;
}

inline ReportDocument base_report(const std::string& command, const InputDocument& in) {
    validate(in);
    require_nonzero_inputs(in);
    const double tol = in.tolerance_or_default();
    ReportDocument r;
    r.command = command;
    r.labels = in.labels;
    r.lambda_matrix = lambda_matrix(in.spinors);
    for (std::size_t i = 0; i < in.spinors.size(); ++i) {
        r.horospheres.push_back(decorated_horosphere_uhs(in.spinors[i]));
        for (std::size_t j = i + 1; j < in.spinors.size(); ++j) {
            if (bracket_vanishes(in.spinors[i], in.spinors[j], tol)) continue;
            const auto d = complex_distance(in.spinors[i], in.spinors[j], tol);
            r.distances.push_back({i + 1, j + 1, d.rho, d.theta});
        }
    }
    return r;
}
}  // namespace detail

inline ReportDocument cmd_lambda(const InputDocument& in) { return detail::base_report("lambda", in); }

inline ReportDocument cmd_tetra(const InputDocument& in) {
    validate(in);
    if (in.spinors.size() != 4)
        throw GeometryError(Errc::WrongArity, "tetra needs exactly 4 spinors, got " + std::to_string(in.spinors.size()));
    ReportDocument r = detail::base_report("tetra", in);
    const auto& k = in.spinors;
    const double tol = in.tolerance_or_default();
    TetraSection t;
    t.shape = shape_parameters(k[0], k[1], k[2], k[3], tol);
    t.residual = ptolemy_residual(k[0], k[1], k[2], k[3]);
    const auto near = [](Complex u, Complex v) {
        return std::abs(u - v) <= tolerance::kIdentity * std::max(1.0, std::abs(v));
    };
    t.complement_relation = near(t.shape.z + 1.0 / t.shape.zp, 1.0);
    t.product_relation = near(t.shape.z * t.shape.zp * t.shape.zpp, -1.0);
    r.tetra = t;
    return r;
}

inline ReportDocument cmd_grassmann(const InputDocument& in, ScalarField field) {
    validate(in);
    if (in.spinors.size() < 3)
        throw GeometryError(Errc::WrongArity, "grassmann needs at least 3 spinors");
    ReportDocument r = detail::base_report("grassmann", in);
    const double tol = in.tolerance_or_default();
    const SpinorTuple tuple(in.spinors);
    const PluckerVector p = plucker(tuple, tol);

    GrassmannSection g;
    g.field = field;
    const std::size_t d = tuple.size();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            g.plucker.push_back({i + 1, j + 1, p.at(i, j)});
            if (detail::bracket_vanishes(tuple[i], tuple[j], tol)) g.zero_coordinates.emplace_back(i + 1, j + 1);
        }
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b)
            for (std::size_t c = b + 1; c < d; ++c)
                for (std::size_t e = c + 1; e < d; ++e)
                    g.ptolemy.push_back({{a + 1, b + 1, c + 1, e + 1},
                                         ptolemy_residual(tuple[a], tuple[b], tuple[c], tuple[e])});

    if (field == ScalarField::Real) {
        g.totally_positive = is_totally_positive(tuple, tol);
        if (*g.totally_positive) g.gauge_normalized = gauge_normalize(tuple, ScalarField::Real, tol).spinors();
    } else if (!detail::bracket_vanishes(tuple[0], tuple[1], tol)) {
        g.gauge_normalized = gauge_normalize(tuple, ScalarField::Complex, tol).spinors();
    }
    r.grassmann = std::move(g);
    return r;
}

/// Long-form CSV "i,j,re,im" (1-based) of the lambda matrix.
inline std::string lambda_matrix_csv(const ReportDocument& r) {
    std::ostringstream os;
    os.precision(17);
    os << "i,j,re,im\n";
    for (std::size_t i = 0; i < r.lambda_matrix.size(); ++i)
        for (std::size_t j = 0; j < r.lambda_matrix[i].size(); ++j)
            os << i + 1 << ',' << j + 1 << ',' << r.lambda_matrix[i][j].real() << ',' << r.lambda_matrix[i][j].imag()
               << '\n';
    return os.str();
}

/// Long-form CSV "i,j,re,im" (1-based) of the Pluecker coordinates.
inline std::string plucker_csv(const ReportDocument& r) {
    std::ostringstream os;
    os.precision(17);
    os << "i,j,re,im\n";
    if (r.grassmann)
        for (const auto& e : r.grassmann->plucker)
            os << e.i << ',' << e.j << ',' << e.value.real() << ',' << e.value.imag() << '\n';
    return os.str();
}

}  // namespace spinhoro
