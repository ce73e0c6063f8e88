#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "spinring/model_config.hpp"
#include "spinring/run.hpp"

using namespace spinring;

TEST_CASE("key = value parsing with comments, blanks and repeats") {
    const auto kv = KeyValueConfig::parse_text(
        "# a comment\n"
        "\n"
        "sites = 3\n"
        "coupling = -1.5\n"
        "; another comment style\n"
        "field = 0.1 0.2\n"
        "field = 0.3\n"
        "boundary=cyclic\n");
    CHECK(kv.get_int("sites") == 3);
    CHECK(kv.get_double("coupling") == -1.5);
    CHECK(kv.get_string("boundary") == "cyclic");
    CHECK(kv.get_double_list("field") == std::vector<double>{0.1, 0.2, 0.3});
    CHECK(kv.has("sites"));
    CHECK_FALSE(kv.has("tol"));
}

TEST_CASE("last occurrence wins for scalars") {
    const auto kv = KeyValueConfig::parse_text("tol = 1e-6\ntol = 1e-7\n");
    CHECK(kv.get_double("tol") == 1e-7);
}

TEST_CASE("malformed lines are rejected with the line number") {
    CHECK_THROWS_WITH_AS(KeyValueConfig::parse_text("sites = 2\nnot a config line\n"),
                         doctest::Contains("line 2"), std::invalid_argument);
    CHECK_THROWS_AS(KeyValueConfig::parse_text("= 3\n"), std::invalid_argument);
    CHECK_THROWS_AS(KeyValueConfig::parse_text("sites = x\n").get_int("sites"),
                    std::invalid_argument);
}

TEST_CASE("model spec from a config record") {
    const auto spec = model_spec_from_config_text(
        "sites = 3\n"
        "coupling = -1\n"
        "zz-weight = 0\n"
        "field = 0, 0, 1.5\n"
        "boundary = cyclic\n");
    CHECK(spec.n_sites == 3);
    CHECK(spec.coupling == -1.0);
    CHECK(spec.zz_weight == 0.0);
    CHECK(spec.boundary == Boundary::Cyclic);
    CHECK(spec.fields == std::vector<double>{0.0, 0.0, 1.5});
}

TEST_CASE("model spec defaults") {
    const auto spec = model_spec_from_config_text("sites = 4\n");
    CHECK(spec.coupling == 1.0);
    CHECK(spec.zz_weight == 0.0);
    CHECK(spec.fields == std::vector<double>(4, 0.0));
    CHECK(spec.boundary == Boundary::Cyclic);
}

TEST_CASE("model spec config rejects unknown keys and bad values") {
    CHECK_THROWS_WITH_AS(model_spec_from_config_text("sites = 2\ncoupligg = 1\n"),
                         doctest::Contains("coupligg"), std::invalid_argument);
    CHECK_THROWS_AS(model_spec_from_config_text("sites = 1\n"), std::length_error);
    CHECK_THROWS_AS(model_spec_from_config_text("sites = 3\nfield = 0 0\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(model_spec_from_config_text("boundary = twisted\n"), std::invalid_argument);
}

TEST_CASE("model spec summary mentions every component") {
    ModelSpec spec;
    spec.n_sites = 3;
    spec.coupling = -1.0;
    spec.zz_weight = 0.5;
    spec.fields = {0.0, 0.0, 2.0};
    const auto s = model_spec_summary(spec);
    CHECK(s.find("sites=3") != std::string::npos);
    CHECK(s.find("coupling=-1") != std::string::npos);
    CHECK(s.find("zz-weight=0.5") != std::string::npos);
    CHECK(s.find("boundary=cyclic") != std::string::npos);
    CHECK(s.find("fields=0,0,2") != std::string::npos);
}

TEST_CASE("fixed decimal rendering survives a round trip within 1e-12") {
    for (double v : {0.0, 1.0 / 3.0, -2.7182818284590452, 1.13459265710123, 6.02e23, 1e-300}) {
        const double back = std::stod(format_double(v));
        CHECK(std::abs(back - v) <= 1e-12 * std::max(1.0, std::abs(v)));
    }
}

TEST_CASE("linspace spans the closed interval") {
    const auto g = linspace(0.02, 3.0, 150);
    REQUIRE(g.size() == 150);
    CHECK(g.front() == 0.02);
    CHECK(g.back() == 3.0);
    for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);
    CHECK_THROWS_AS(linspace(0.0, 1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(linspace(1.0, 0.5, 10), std::invalid_argument);
}

TEST_CASE("command and figure parsing") {
    CHECK(command_from_string("curve") == Command::Curve);
    CHECK(command_from_string("calibrate") == Command::Calibrate);
    CHECK_THROWS_AS(command_from_string("plot"), std::invalid_argument);
    CHECK(figure_from_string("fig2a") == FigureId::Fig2a);
    CHECK_THROWS_AS(figure_from_string("fig3"), std::invalid_argument);
    CHECK(format_from_string("json") == OutputFormat::Json);
    CHECK_THROWS_AS(format_from_string("xml"), std::invalid_argument);
}
