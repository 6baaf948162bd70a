#include <doctest.h>

#include <fstream>
#include <sstream>

#include "celestial/catalog.hpp"
#include "celestial/moebius.hpp"

using namespace celestial;

namespace {

std::string read_source_text() {
    std::ifstream in(CELESTIAL_SOURCE_TEXT);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// The Blum cyclide as printed, homogenized with w and with the six pencils.
const char* kBlumText = R"(name=blum
title=Blum cyclide
citation=(Blum cyclide)
equation=2*(y+3*z)*(x^2+y^2+z^2)+w*(4*(x+y+z+w)^2+2*y^2+6*z^2)
type=3,1
sng_complete=true
ci=16
ri=13
families=6
pairs=3

[pencil]
label=F1
domain=quad:6
base=y+3*z+w
direction=x-(-sqrt(6)+4)*z

[pencil]
label=F2
domain=quad:6
base=y+3*z+w
direction=x-(sqrt(6)+4)*z

[pencil]
label=F3
base=y+3*z+2*w
direction=2*x+w

[pencil]
label=F4
base=y+3*z+2*w
direction=2*z+w

[pencil]
label=F5
domain=quad:6
base=y+3*z+3*w
direction=(-4+sqrt(6))*w-x+(-4+sqrt(6))*z

[pencil]
label=F6
domain=quad:6
base=y+3*z+3*w
direction=(4+sqrt(6))*w+x+(4+sqrt(6))*z

[image]
map=mu0
target=4,2
)";

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("catalog contents") {
    auto names = catalog_names();
    for (const std::string n : {"blum", "sphere-cyclide", "two-components", "perseus", "dupin", "quartic-40",
                                "sextic-62", "septic-73", "octic-84", "eh1", "eh2", "e", "ch1", "cy"})
        CHECK_MESSAGE(std::find(names.begin(), names.end(), n) != names.end(), n);
    CHECK(names.size() == catalog().size());
}

TEST_CASE("every record survives a text round trip") {
    for (const auto& r : catalog()) {
        SurfaceRecord back = parse_surface_text(r.to_text());
        CHECK_MESSAGE(back.to_text() == r.to_text(), r.name);
        CHECK(back.surface(Domain::gaussian()) == r.surface(Domain::gaussian()));
    }
}

TEST_CASE("a transcribed Blum cyclide equals the embedded record") {
    SurfaceRecord user = parse_surface_text(kBlumText);
    const SurfaceRecord& embedded = lookup("blum");
    CHECK(user.to_text() == embedded.to_text());
    CHECK(user.surface() == embedded.surface());
    CHECK(user.pencils.size() == 6);
    // The affine printed equation, homogenized.
    MultiPoly affine = parse_expression("2*(y+3*z)*(x^2+y^2+z^2)+(4*(x+y+z+1)^2+2*y^2+6*z^2)", {"x", "y", "z", "w"});
    CHECK(affine.homogenized("w") == embedded.surface());
}

TEST_CASE("lookup errors suggest near names") {
    CHECK(lookup("dupin").name == "dupin");
    CHECK_THROWS_AS(lookup("no-such-thing"), CatalogError);
    try {
        lookup("dupn");
        FAIL("expected an error");
    } catch (const CatalogError& e) {
        CHECK(std::string(e.what()).find("dupin") != std::string::npos);
    }
}

TEST_CASE("format errors carry line and column") {
    try {
        parse_surface_text("name=bad\nequation=x+sqrt(8)*y\n");
        FAIL("expected a format error");
    } catch (const FormatError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 10);
    }
    try {
        parse_surface_text("name=bad\nequation=x+y\ncolour=blue\n");
        FAIL("expected a format error");
    } catch (const FormatError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_surface_text("name=bad\nequation=x+y\n[teapot]\n"), FormatError);
    CHECK_THROWS_AS(parse_surface_text("equation=x+y\n"), FormatError);
    CHECK_THROWS_AS(parse_surface_text("name=bad\nequation=x+*y\n"), FormatError);
    CHECK_THROWS_AS(parse_surface_text("name=bad\nequation=x+sqrt(2)*y+sqrt(3)*z\n"), FormatError);
    CHECK_THROWS_AS(parse_surface_text("name=bad\nequation=x+i*y\n"), FormatError);
    CHECK_THROWS(load_user_surface("/nonexistent/surface.txt"));
}

TEST_CASE("the erratum is recorded") {
    const SurfaceRecord& q = lookup("quartic-40");
    CHECK_FALSE(q.erratum.empty());
    CHECK(q.printed.find("-2*(w^2-y^2)") != std::string::npos);
    CHECK(q.equation.find("-4*(w^2-y^2)") != std::string::npos);
}

TEST_CASE("citation phrases occur verbatim in the source text") {
    std::string source = read_source_text();
    REQUIRE_FALSE(source.empty());
    for (const auto& [key, phrase] : expected_tables().citations)
        CHECK_MESSAGE(source.find(phrase) != std::string::npos, (key + ": " + phrase));
    for (const auto& r : catalog()) {
        if (r.citation.empty()) continue;
        std::string phrase = r.citation;
        if (phrase.front() == '(' && phrase.back() == ')') phrase = phrase.substr(1, phrase.size() - 2);
        CHECK_MESSAGE(source.find(phrase) != std::string::npos, (r.name + ": " + phrase));
    }
}

TEST_CASE("expected tables have the printed shape") {
    const auto& t = expected_tables();
    CHECK(t.c1.size() == 16);
    CHECK(t.m4.size() == 14);
    CHECK(t.m4_classes.size() == 14);
    CHECK(t.quadrics.size() == 10);
    CHECK(t.schicho.size() == 8);
    CHECK(t.real.size() == 6);
}

TEST_CASE("json output is well formed") {
    auto j = lookup("dupin").to_json();
    CHECK(j["name"] == "dupin");
    CHECK(j["pencil"].size() == 4);
}

}  // TEST_SUITE
