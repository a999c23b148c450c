// klein: calculator and plotter for the projective model of the six
// two-dimensional homogeneous metric spaces.
//
// Exit codes: 0 success, 1 usage, 2 domain error, 3 expression parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <klein/error.hpp>
#include <klein/expr.hpp>
#include <klein/format.hpp>
#include <klein/geometry.hpp>
#include <klein/json_io.hpp>
#include <klein/plot.hpp>
#include <klein/spaces.hpp>
#include <klein/transforms.hpp>

namespace {

struct GlobalOptions {
    std::string space_name;
    bool json = false;
    int precision = 12;
};

const klein::Space& require_space(const GlobalOptions& opts) {
    if (opts.space_name.empty()) {
        std::cerr << "error: --space is required for this subcommand\n";
        std::exit(1);
    }
    const klein::Space* space = klein::space_by_name(opts.space_name);
    if (!space) {
        std::cerr << "error: unknown space '" << opts.space_name
                  << "' (expected euclidean|elliptic|hyperbolic|minkowski|desitter|antidesitter)\n";
        std::exit(1);
    }
    return *space;
}

klein::Multivector blade_argument(const std::string& text, const GlobalOptions& opts,
                                  const klein::Space& space) {
    if (opts.json) return klein::multivector_from_json(nlohmann::json::parse(text));
    return klein::evaluate(klein::parse(text), space);
}

void print_scalar(double v, const GlobalOptions& opts) {
    if (opts.json)
        std::cout << "{\"value\": " << klein::format_real(v, opts.precision) << "}\n";
    else
        std::cout << klein::format_real(v, opts.precision) << "\n";
}

nlohmann::json parse_json_argument(const std::string& arg) {
    if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return nlohmann::json::parse(arg);
    if (arg == "-") {
        std::stringstream buffer;
        buffer << std::cin.rdbuf();
        return nlohmann::json::parse(buffer.str());
    }
    std::ifstream in(arg);
    if (!in) {
        std::cerr << "error: cannot open '" << arg << "'\n";
        std::exit(1);
    }
    return nlohmann::json::parse(in);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"projective-model calculator for the six plane Cayley-Klein geometries"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions opts;
    app.add_option("--space", opts.space_name,
                   "euclidean|elliptic|hyperbolic|minkowski|desitter|antidesitter");
    app.add_flag("--json", opts.json, "JSON input and output for blades and results");
    app.add_option("--precision", opts.precision, "significant digits in output (default 12)")
        ->check(CLI::Range(1, 17));

    std::string expr_text, lhs_text, rhs_text, isometry_text, spec_text;

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a multivector expression");
    eval_cmd->add_option("expr", expr_text, "expression, e.g. \"(e0 + 3 e1 + e2) . e12\"")
        ->required();

    auto* distance_cmd = app.add_subcommand("distance", "distance between two proper points");
    distance_cmd->add_option("P", lhs_text, "first point")->required();
    distance_cmd->add_option("Q", rhs_text, "second point")->required();

    auto* angle_cmd = app.add_subcommand("angle", "angle between two proper lines");
    angle_cmd->add_option("a", lhs_text, "first line")->required();
    angle_cmd->add_option("b", rhs_text, "second line")->required();

    auto* classify_cmd = app.add_subcommand("classify", "proper/improper/null classification");
    classify_cmd->add_option("blade", lhs_text, "line or point")->required();

    auto* transform_cmd = app.add_subcommand("transform", "apply a named isometry to a blade");
    transform_cmd
        ->add_option("isometry", isometry_text,
                     "isometry JSON, e.g. {\"kind\":\"boost\",\"amount\":0.5}")
        ->required();
    transform_cmd->add_option("blade", rhs_text, "line or point expression")->required();

    auto* plot_cmd = app.add_subcommand("plot", "render a plot spec to SVG on stdout");
    plot_cmd->add_option("spec", spec_text, "plot spec: inline JSON, a file path, or - for stdin")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (eval_cmd->parsed()) {
            const klein::Space& space = require_space(opts);
            klein::Value v = klein::evaluate_value(klein::parse(expr_text), space);
            std::cout << (opts.json ? klein::value_to_json(v, opts.precision)
                                    : klein::value_to_text(v, opts.precision))
                      << "\n";
        } else if (distance_cmd->parsed()) {
            const klein::Space& space = require_space(opts);
            print_scalar(klein::distance(blade_argument(lhs_text, opts, space),
                                         blade_argument(rhs_text, opts, space), space),
                         opts);
        } else if (angle_cmd->parsed()) {
            const klein::Space& space = require_space(opts);
            print_scalar(klein::angle(blade_argument(lhs_text, opts, space),
                                      blade_argument(rhs_text, opts, space), space),
                         opts);
        } else if (classify_cmd->parsed()) {
            const klein::Space& space = require_space(opts);
            const char* name = klein::classification_name(
                klein::classify(blade_argument(lhs_text, opts, space), space));
            if (opts.json)
                std::cout << "{\"classification\": \"" << name << "\"}\n";
            else
                std::cout << name << "\n";
        } else if (transform_cmd->parsed()) {
            const klein::Space& space = require_space(opts);
            klein::IsometryParams params =
                klein::isometry_from_json(parse_json_argument(isometry_text));
            klein::Spinor spinor = klein::make_isometry(params, space);
            klein::Multivector moved =
                klein::sandwich(spinor, blade_argument(rhs_text, opts, space));
            std::cout << (opts.json ? klein::to_json(moved, opts.precision)
                                    : klein::to_text(moved, opts.precision))
                      << "\n";
        } else if (plot_cmd->parsed()) {
            klein::PlotSpec spec = klein::parse_plot_spec(parse_json_argument(spec_text));
            std::cout << klein::render_svg(spec);
        }
    } catch (const klein::SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const klein::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: invalid JSON: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
