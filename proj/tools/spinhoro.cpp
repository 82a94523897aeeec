// Command-line front end: lambda lengths, tetrahedra, Grassmannian data and SVG
// pictures for tuples of spinors.
//
// Exit codes: 0 success, 2 parse error, 3 domain error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "spinhoro/spinhoro.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;

struct GlobalOptions {
    std::optional<double> tol;
    std::string format = "json";
    std::string input_path;
    std::vector<std::string> inline_spinors;
};

struct SvgCliOptions {
    int width = 800;
    int height = 600;
    std::string window;
};

spinhoro::InputDocument load_input(const GlobalOptions& g) {
    spinhoro::InputDocument doc;
    if (!g.inline_spinors.empty()) {
        for (const auto& s : g.inline_spinors) doc.spinors.push_back(spinhoro::parse_inline_spinor(s));
    } else {
        std::string text;
        if (g.input_path.empty() || g.input_path == "-") {
            text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
        } else {
            std::ifstream in(g.input_path);
            if (!in) throw spinhoro::GeometryError(spinhoro::Errc::ParseError, "cannot open " + g.input_path);
            text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        }
        doc = spinhoro::parse_input(text);
    }
    if (g.tol) doc.tol = g.tol;
    spinhoro::validate(doc);
    return doc;
}

spinhoro::SvgOptions svg_options(const SvgCliOptions& o) {
    spinhoro::SvgOptions out;
    out.width = o.width;
    out.height = o.height;
    if (!o.window.empty()) {
        std::vector<double> v;
        std::stringstream ss(o.window);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                v.push_back(std::stod(item));
            } catch (const std::exception&) {
                throw spinhoro::GeometryError(spinhoro::Errc::ParseError, "bad --window value " + item);
            }
        }
        if (v.size() != 4)
            throw spinhoro::GeometryError(spinhoro::Errc::ParseError, "--window expects xmin,xmax,ymin,ymax");
        out.window = spinhoro::SvgWindow{v[0], v[1], v[2], v[3]};
    }
    return out;
}

void emit(const spinhoro::ReportDocument& r, const std::string& format) {
    if (format == "csv") {
        std::cout << (r.command == "grassmann" ? spinhoro::plucker_csv(r) : spinhoro::lambda_matrix_csv(r));
        return;
    }
    std::cout << spinhoro::to_json(r).dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spinors, spin-decorated horospheres and complex lambda lengths"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--tol", g.tol, "Degeneracy tolerance (relative)");
    app.add_option("--format", g.format, "Output format for reports")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--input", g.input_path, "Input JSON document (default: stdin)");
    app.add_option("--spinor", g.inline_spinors, "Inline spinor re_xi,im_xi,re_eta,im_eta (repeatable)")
        ->allow_extra_args(false);

    auto* lambda = app.add_subcommand("lambda", "Lambda matrix and complex distances");
    auto* tetra = app.add_subcommand("tetra", "Ptolemy residual and shape parameters of 4 spinors");

    auto* grassmann = app.add_subcommand("grassmann", "Pluecker coordinates and gauge normalization");
    bool real_mode = false;
    bool complex_mode = false;
    auto* real_flag = grassmann->add_flag("--real", real_mode, "Real spinors, totally positive verdict");
    grassmann->add_flag("--complex", complex_mode, "Complex spinors, zero-coordinate report")->excludes(real_flag);

    SvgCliOptions svg_opts;
    auto* svg = app.add_subcommand("svg", "Render the horocycles of the input spinors");
    std::int64_t qmax = 0;
    auto* ford = app.add_subcommand("ford", "Render Ford circles");
    ford->add_option("--qmax", qmax, "Largest denominator")->required();
    for (auto* sub : {svg, ford}) {
        sub->add_option("--width", svg_opts.width, "Image width in pixels");
        sub->add_option("--height", svg_opts.height, "Image height in pixels");
        sub->add_option("--window", svg_opts.window, "World window xmin,xmax,ymin,ymax");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (*ford) {
            std::cout << spinhoro::render_svg(spinhoro::ford_horocycles(qmax), svg_options(svg_opts));
            return 0;
        }
        const spinhoro::InputDocument doc = load_input(g);
        if (*lambda) {
            emit(spinhoro::cmd_lambda(doc), g.format);
        } else if (*tetra) {
            emit(spinhoro::cmd_tetra(doc), g.format);
        } else if (*grassmann) {
            emit(spinhoro::cmd_grassmann(doc, real_mode ? spinhoro::ScalarField::Real : spinhoro::ScalarField::Complex),
                 g.format);
        } else if (*svg) {
            std::cout << spinhoro::render_svg(spinhoro::horocycles_from_spinors(doc.spinors, doc.labels),
                                              svg_options(svg_opts));
        }
    } catch (const spinhoro::GeometryError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == spinhoro::Errc::ParseError ? kExitParse : kExitDomain;
    }
    return 0;
}
