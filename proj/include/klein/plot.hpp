#pragma once

// Null-structure diagrams as deterministic SVG: points as dots, lines
// clipped to the viewport, and per space the null locus (unit circle or
// hyperbola) plus the null lines through each drawn proper point.

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "format.hpp"
#include "geometry.hpp"
#include "multivector.hpp"
#include "spaces.hpp"

namespace klein {

struct PlotItem {
    Multivector blade;
    std::string color; // empty: per-kind default
    std::string label;
};

struct PlotSpec {
    Space space = euclidean;
    std::array<double, 4> viewport{-2, 2, -2, 2}; // xmin, xmax, ymin, ymax
    bool show_null_structure = false;
    bool shade_proper = false;
    std::vector<PlotItem> items;
};

inline PlotSpec parse_plot_spec(const nlohmann::json& j) {
    PlotSpec spec;
    const Space* space = space_by_name(j.at("space").get<std::string>());
    if (!space) throw Error(ErrorKind::UnsupportedSpace, "unknown space name in plot spec");
    spec.space = *space;
    auto vp = j.at("viewport");
    if (!vp.is_array() || vp.size() != 4)
        throw Error(ErrorKind::DegenerateInput, "viewport must be [xmin, xmax, ymin, ymax]");
    for (std::size_t i = 0; i < 4; ++i) spec.viewport[i] = vp[i].get<double>();
    if (!(spec.viewport[0] < spec.viewport[1]) || !(spec.viewport[2] < spec.viewport[3]) ||
        !std::isfinite(spec.viewport[0]) || !std::isfinite(spec.viewport[1]) ||
        !std::isfinite(spec.viewport[2]) || !std::isfinite(spec.viewport[3]))
        throw Error(ErrorKind::DegenerateInput, "viewport must be finite and non-empty");
    spec.show_null_structure = j.value("show_null_structure", false);
    spec.shade_proper = j.value("shade_proper", false);
    if (j.contains("items")) {
        for (const auto& item : j.at("items")) {
            PlotItem pi;
            auto coeffs = item.at("blade");
            if (!coeffs.is_array() || coeffs.size() != 8)
                throw Error(ErrorKind::UndrawableBlade, "item blade must be an 8-array");
            for (std::size_t i = 0; i < 8; ++i) pi.blade.c[i] = coeffs[i].get<double>();
            pi.color = item.value("color", std::string{});
            pi.label = item.value("label", std::string{});
            spec.items.push_back(std::move(pi));
        }
    }
    return spec;
}

namespace detail {

struct SvgCanvas {
    double xmin, xmax, ymin, ymax;
    double width, height;
    std::string body;

    static std::string num(double v) { return format_real(v, 8); }

    double px(double x) const { return (x - xmin) / (xmax - xmin) * width; }
    double py(double y) const { return (ymax - y) / (ymax - ymin) * height; }

    void segment(double x1, double y1, double x2, double y2, const std::string& stroke,
                 double stroke_width) {
        body += "<line x1=\"" + num(px(x1)) + "\" y1=\"" + num(py(y1)) + "\" x2=\"" +
                num(px(x2)) + "\" y2=\"" + num(py(y2)) + "\" stroke=\"" + stroke +
                "\" stroke-width=\"" + num(stroke_width) + "\"/>\n";
    }

    void dot(double x, double y, const std::string& fill) {
        body += "<circle cx=\"" + num(px(x)) + "\" cy=\"" + num(py(y)) +
                "\" r=\"4\" fill=\"" + fill + "\"/>\n";
    }

    void text(double x, double y, const std::string& content) {
        std::string escaped;
        for (char ch : content) {
            switch (ch) {
            case '&': escaped += "&amp;"; break;
            case '<': escaped += "&lt;"; break;
            case '>': escaped += "&gt;"; break;
            default: escaped += ch;
            }
        }
        body += "<text x=\"" + num(px(x) + 6) + "\" y=\"" + num(py(y) - 6) +
                "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#333\">" + escaped +
                "</text>\n";
    }

    void path(const std::vector<std::pair<double, double>>& pts, const std::string& stroke,
              bool closed, const std::string& fill = "none") {
        if (pts.size() < 2) return;
        std::string d = "M " + num(px(pts[0].first)) + " " + num(py(pts[0].second));
        for (std::size_t i = 1; i < pts.size(); ++i)
            d += " L " + num(px(pts[i].first)) + " " + num(py(pts[i].second));
        if (closed) d += " Z";
        body += "<path d=\"" + d + "\" fill=\"" + fill + "\" stroke=\"" + stroke +
                "\" stroke-width=\"1.5\"/>\n";
    }
};

// Clips the infinite line a x + b y + d = 0 to the viewport; nullopt when the
// line misses it (or is ideal).
inline std::optional<std::array<double, 4>> clip_line_to_viewport(double d, double a, double b,
                                                                  const std::array<double, 4>& vp) {
    if (a == 0.0 && b == 0.0) return std::nullopt;
    double bx = 0, by = 0;
    if (std::abs(a) >= std::abs(b)) {
        by = 0.5 * (vp[2] + vp[3]);
        bx = -(d + b * by) / a;
    } else {
        bx = 0.5 * (vp[0] + vp[1]);
        by = -(d + a * bx) / b;
    }
    double dx = -b, dy = a; // direction along the line
    double t0 = -1e300, t1 = 1e300;
    auto slab = [&](double p, double lo, double hi, double dir) {
        if (dir == 0.0) return p >= lo && p <= hi;
        double u0 = (lo - p) / dir, u1 = (hi - p) / dir;
        if (u0 > u1) std::swap(u0, u1);
        if (u0 > t0) t0 = u0;
        if (u1 < t1) t1 = u1;
        return t0 <= t1;
    };
    if (!slab(bx, vp[0], vp[1], dx)) return std::nullopt;
    if (!slab(by, vp[2], vp[3], dy)) return std::nullopt;
    if (t0 > t1) return std::nullopt;
    return std::array<double, 4>{bx + t0 * dx, by + t0 * dy, bx + t1 * dx, by + t1 * dy};
}

inline constexpr int curve_samples = 256;

} // namespace detail

/// Renders the spec to a byte-stable SVG 1.1 document.
inline std::string render_svg(const PlotSpec& spec) {
    const auto& vp = spec.viewport;
    detail::SvgCanvas canvas{vp[0], vp[1], vp[2], vp[3], 640.0, 0.0, {}};
    canvas.height = std::round(640.0 * (vp[3] - vp[2]) / (vp[1] - vp[0]));

    for (const PlotItem& item : spec.items) {
        auto grade = detail::blade_grade(item.blade);
        if (!grade || (*grade != 1 && *grade != 2))
            throw Error(ErrorKind::UndrawableBlade, "only lines and points are drawable");
    }

    // Proper region, when the space has a null locus to shade against.
    if (spec.shade_proper) {
        std::vector<std::pair<double, double>> region;
        if (spec.space.name == SpaceName::Hyperbolic) {
            for (int i = 0; i < detail::curve_samples; ++i) {
                double th = 2.0 * std::numbers::pi * i / detail::curve_samples;
                region.emplace_back(std::cos(th), std::sin(th));
            }
        } else if (spec.space.name == SpaceName::DeSitter) {
            for (int i = 0; i <= detail::curve_samples; ++i) {
                double x = vp[0] + (vp[1] - vp[0]) * i / detail::curve_samples;
                region.emplace_back(x, std::sqrt(1 + x * x));
            }
            for (int i = detail::curve_samples; i >= 0; --i) {
                double x = vp[0] + (vp[1] - vp[0]) * i / detail::curve_samples;
                region.emplace_back(x, -std::sqrt(1 + x * x));
            }
        } else if (spec.space.name == SpaceName::AntiDeSitter) {
            for (int i = 0; i <= detail::curve_samples; ++i) {
                double y = vp[2] + (vp[3] - vp[2]) * i / detail::curve_samples;
                region.emplace_back(std::sqrt(1 + y * y), y);
            }
            for (int i = detail::curve_samples; i >= 0; --i) {
                double y = vp[2] + (vp[3] - vp[2]) * i / detail::curve_samples;
                region.emplace_back(-std::sqrt(1 + y * y), y);
            }
        }
        if (!region.empty()) canvas.path(region, "none", true, "#dde8f5");
    }

    // Axes.
    if (vp[2] <= 0 && vp[3] >= 0) canvas.segment(vp[0], 0, vp[1], 0, "#9aa0a6", 1.0);
    if (vp[0] <= 0 && vp[1] >= 0) canvas.segment(0, vp[2], 0, vp[3], "#9aa0a6", 1.0);

    if (spec.show_null_structure) {
        const std::string null_color = "#c0392b";
        if (spec.space.name == SpaceName::Hyperbolic) {
            std::vector<std::pair<double, double>> circle;
            for (int i = 0; i < detail::curve_samples; ++i) {
                double th = 2.0 * std::numbers::pi * i / detail::curve_samples;
                circle.emplace_back(std::cos(th), std::sin(th));
            }
            canvas.path(circle, null_color, true);
        } else if (spec.space.name == SpaceName::DeSitter ||
                   spec.space.name == SpaceName::AntiDeSitter) {
            bool sideways = spec.space.name == SpaceName::AntiDeSitter;
            for (int branch : {-1, 1}) {
                std::vector<std::pair<double, double>> curve;
                for (int i = 0; i <= detail::curve_samples; ++i) {
                    if (sideways) {
                        double y = vp[2] + (vp[3] - vp[2]) * i / detail::curve_samples;
                        curve.emplace_back(branch * std::sqrt(1 + y * y), y);
                    } else {
                        double x = vp[0] + (vp[1] - vp[0]) * i / detail::curve_samples;
                        curve.emplace_back(x, branch * std::sqrt(1 + x * x));
                    }
                }
                canvas.path(curve, null_color, false);
            }
        }
        if (spec.space.kinematic) {
            // Two null lines through every drawable proper point item.
            for (const PlotItem& item : spec.items) {
                if (detail::blade_grade(item.blade) != 2) continue;
                try {
                    auto pair = null_lines_through(item.blade, spec.space);
                    for (const Multivector& nl : {pair.first, pair.second}) {
                        auto seg = detail::clip_line_to_viewport(
                            nl.c[slot::e0], nl.c[slot::e1], nl.c[slot::e2], vp);
                        if (seg)
                            canvas.segment((*seg)[0], (*seg)[1], (*seg)[2], (*seg)[3], null_color,
                                           1.5);
                    }
                } catch (const Error&) {
                    // no null lines through improper/ideal points
                }
            }
        }
    }

    for (const PlotItem& item : spec.items) {
        int grade = *detail::blade_grade(item.blade);
        if (grade == 1) {
            auto seg = detail::clip_line_to_viewport(item.blade.c[slot::e0],
                                                     item.blade.c[slot::e1],
                                                     item.blade.c[slot::e2], vp);
            if (!seg) continue;
            canvas.segment((*seg)[0], (*seg)[1], (*seg)[2], (*seg)[3],
                           item.color.empty() ? "#1f3d7a" : item.color, 2.0);
            if (!item.label.empty())
                canvas.text(0.5 * ((*seg)[0] + (*seg)[2]), 0.5 * ((*seg)[1] + (*seg)[3]),
                            item.label);
        } else {
            double w = item.blade.c[slot::e12];
            if (std::abs(w) < 1e-12 * max_abs_coefficient(item.blade)) continue; // ideal point
            double x = item.blade.c[slot::e20] / w, y = item.blade.c[slot::e01] / w;
            canvas.dot(x, y, item.color.empty() ? "#111111" : item.color);
            if (!item.label.empty()) canvas.text(x, y, item.label);
        }
    }

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
                      detail::SvgCanvas::num(canvas.width) + "\" height=\"" +
                      detail::SvgCanvas::num(canvas.height) + "\" viewBox=\"0 0 " +
                      detail::SvgCanvas::num(canvas.width) + " " +
                      detail::SvgCanvas::num(canvas.height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    svg += canvas.body;
    svg += "</svg>\n";
    return svg;
}

} // namespace klein
