#include <catch2/catch_amalgamated.hpp>

#include <klein/plot.hpp>

using namespace klein;

namespace {

PlotSpec minkowski_figure() {
    PlotSpec spec;
    spec.space = minkowski;
    spec.viewport = {-2, 2, -2, 2};
    spec.show_null_structure = true;
    spec.items.push_back({point(0.9, 0.2), "", "P"});
    return spec;
}

} // namespace

TEST_CASE("rendering is deterministic") {
    PlotSpec spec = minkowski_figure();
    CHECK(render_svg(spec) == render_svg(spec));
}

TEST_CASE("minkowski null structure draws the two diagonals") {
    std::string svg = render_svg(minkowski_figure());
    // Two null lines in the null-structure color plus the point dot.
    std::size_t count = 0, pos = 0;
    while ((pos = svg.find("#c0392b", pos)) != std::string::npos) {
        ++count;
        pos += 1;
    }
    CHECK(count == 2);
    CHECK(svg.find("<circle") != std::string::npos);
    CHECK(svg.find(">P</text>") != std::string::npos);
}

TEST_CASE("hyperbolic null structure is the unit circle") {
    PlotSpec spec;
    spec.space = hyperbolic;
    spec.viewport = {-2, 2, -2, 2};
    spec.show_null_structure = true;
    std::string svg = render_svg(spec);
    CHECK(svg.find("<path") != std::string::npos);
    // 256 samples on the circle: the path has 255 line-to commands.
    std::size_t count = 0, pos = 0;
    while ((pos = svg.find(" L ", pos)) != std::string::npos) {
        ++count;
        pos += 3;
    }
    CHECK(count == 255);
}

TEST_CASE("axes-only plot") {
    PlotSpec spec;
    spec.space = euclidean;
    spec.viewport = {-1, 1, -1, 1};
    std::string svg = render_svg(spec);
    std::size_t count = 0, pos = 0;
    while ((pos = svg.find("<line", pos)) != std::string::npos) {
        ++count;
        pos += 5;
    }
    CHECK(count == 2);
    CHECK(svg.find("<circle") == std::string::npos);
}

TEST_CASE("grade 0 and 3 items are undrawable") {
    PlotSpec spec;
    spec.space = euclidean;
    spec.items.push_back({scalar_mv(1), "", ""});
    CHECK_THROWS_AS(render_svg(spec), Error);
    spec.items[0].blade = pseudoscalar;
    CHECK_THROWS_AS(render_svg(spec), Error);
}

TEST_CASE("plot spec parsing") {
    nlohmann::json j = nlohmann::json::parse(R"({
        "space": "DeSitter",
        "viewport": [-2, 2, -1.5, 1.5],
        "show_null_structure": true,
        "items": [{"blade": [0,0,0,0,1,0.3,0.1,0], "label": "P", "color": "#5522aa"}]
    })");
    PlotSpec spec = parse_plot_spec(j);
    CHECK(spec.space.name == SpaceName::DeSitter);
    CHECK(spec.viewport[3] == 1.5);
    CHECK(spec.items.size() == 1);
    CHECK(spec.items[0].label == "P");
    CHECK_NOTHROW(render_svg(spec));

    CHECK_THROWS_AS(parse_plot_spec(nlohmann::json::parse(R"({"space":"flatland","viewport":[0,1,0,1]})")),
                    Error);
    CHECK_THROWS_AS(parse_plot_spec(nlohmann::json::parse(R"({"space":"euclidean","viewport":[1,0,0,1]})")),
                    Error);
}
