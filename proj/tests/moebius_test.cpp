#include <doctest.h>

#include "celestial/catalog.hpp"
#include "celestial/moebius.hpp"

using namespace celestial;

namespace {

std::vector<MultiPoly> curve(const std::vector<std::string>& comps, Domain d = Domain::rational()) {
    std::vector<MultiPoly> out;
    for (const auto& c : comps) out.push_back(parse_expression(c, curve_vars(), d));
    return out;
}

std::vector<MultiPoly> record_param(const SurfaceRecord& r) {
    return curve(r.params.at(0), r.domain);
}

const std::string kPrinted = "(x^2+y^2+z^2-2*w^2)^2-2*(w^2-y^2)*(w^2-z^2)";
const std::string kCorrected = "(x^2+y^2+z^2-2*w^2)^2-4*(w^2-y^2)*(w^2-z^2)";

}  // namespace

TEST_SUITE("moebius") {

TEST_CASE("stereographic projection") {
    RationalMap finv = stereographic_inverse();
    CHECK(substitute(sphere_equation(), finv).is_zero());
    std::vector<FieldElement> p{-1, 1, 0, 1};
    std::vector<FieldElement> expect{-2, 2, 0, 1, 3};
    for (std::size_t k = 0; k < 5; ++k) CHECK(finv.components[k].evaluate(p) == expect[k]);
    std::vector<FieldElement> unit{1, 0, 0, 1};
    std::vector<FieldElement> image{2, 0, 0, 0, 2};
    for (std::size_t k = 0; k < 5; ++k) CHECK(finv.components[k].evaluate(unit) == image[k]);
    // f after f^-1 is 2w times the identity.
    RationalMap round = compose(stereographic(), finv);
    MultiPoly two_w = parse_space("2*w");
    for (std::size_t k = 0; k < 4; ++k)
        CHECK(round.components[k] == two_w * MultiPoly::variable(space_vars(), k));
}

TEST_CASE("cyclicity and type") {
    CHECK(cyclicity(parse_space("x^2+y^2+z^2-w^2")) == 1);
    CHECK(cyclicity(parse_space("x")) == 0);
    CHECK(cyclicity(parse_space("w")) == 1);
    CHECK(cyclicity(lookup("blum").surface()) == 1);
    CHECK(cyclicity(push_surface(MoebiusMap::named("mu0"), lookup("blum").surface())) == 2);
    auto t40 = surface_type(parse_space(kCorrected));
    CHECK(t40.d == 4);
    CHECK(t40.c == 0);
    CHECK(t40.moebius_degree() == 8);
    auto persp = surface_type(lookup("perseus").surface());
    CHECK(persp.d == 3);
    CHECK(persp.c == 1);
    auto t84 = surface_type(lookup("octic-84").surface(Domain::gaussian()));
    CHECK(t84.d == 8);
    CHECK(t84.c == 4);
    CHECK(t84.moebius_degree() == 8);
}

TEST_CASE("Moebius models") {
    SphereSystem s = moebius_model(parse_space("x^2+y^2+z^2-w^2"));
    CHECK(proportional(s.model, parse_sphere("d")));
    CHECK(congruent_mod_sphere(reduce_mod_sphere(parse_sphere("a^2+b^2+c^2-(e-d)^2")), parse_sphere("2*d*(e-d)")));
    SphereSystem plane = moebius_model(parse_space("x"));
    CHECK(proportional(plane.model, parse_sphere("a")));
    SphereSystem q = moebius_model(parse_space(kCorrected, Domain::gaussian()));
    CHECK(congruent_mod_sphere(q.model, parse_sphere(lookup("quartic-40").model, Domain::gaussian())));
    SphereSystem wrong = moebius_model(parse_space(kPrinted, Domain::gaussian()));
    CHECK_FALSE(congruent_mod_sphere(wrong.model, parse_sphere(lookup("quartic-40").model, Domain::gaussian())));
}

TEST_CASE("Moebius degree equals twice the model degree across the catalog") {
    for (const auto& r : catalog()) {
        MultiPoly F = r.surface(Domain::gaussian());
        CHECK_MESSAGE(surface_type(F).moebius_degree() == 2 * moebius_model(F).model.total_degree(), r.name);
    }
}

TEST_CASE("erratum: the printed quartic fails, the corrected one passes") {
    const SurfaceRecord& r = lookup("quartic-40");
    auto gamma = record_param(r);
    auto rho_plus = curve({"0", "t", "t", "s"}), rho_minus = curve({"0", "t", "-t", "s"});
    MultiPoly printed = parse_space(kPrinted), corrected = parse_space(kCorrected);
    CHECK_FALSE(verify_param(printed, gamma));
    CHECK_FALSE(verify_singular_curve({printed}, rho_plus));
    CHECK_FALSE(verify_singular_curve({printed}, rho_minus));
    CHECK(verify_param(corrected, gamma));
    CHECK(verify_singular_curve({corrected}, rho_plus));
    CHECK(verify_singular_curve({corrected}, rho_minus));
}

TEST_CASE("singular curves are independent of the parametrization") {
    MultiPoly corrected = parse_space(kCorrected);
    auto moved = curve({"0", "s-3*t", "s-3*t", "2*s+t"});
    CHECK(verify_singular_curve({corrected}, moved));
    MultiPoly sextic = lookup("sextic-62").surface(Domain::gaussian());
    CHECK(verify_singular_curve({sextic}, curve({"0", "s", "t", "0"}, Domain::gaussian())));
    CHECK(verify_singular_curve({sextic}, curve({"0", "2*s+t", "s-t", "0"}, Domain::gaussian())));
}

TEST_CASE("singular points of a model") {
    std::vector<MultiPoly> ch1{parse_sphere("c^2+d^2-d*e"), parse_sphere("a^2+b^2+d*e-e^2")};
    CHECK(is_singular_point(ch1, {0, 0, 0, 1, 1}));
    FieldElement i = FieldElement::i_unit();
    CHECK(is_singular_point(ch1, {1, i, 0, 0, 0}));
    CHECK(is_singular_point(ch1, {1, -i, 0, 0, 0}));
    CHECK_FALSE(is_singular_point({parse_space("x^2+y^2+z^2-w^2")}, {1, 0, 0, 1}));
    CHECK_THROWS(is_singular_point({parse_space("x^2+y^2+z^2-w^2")}, {1, 1, 0, 1}));
}

TEST_CASE("parametrizations on surfaces") {
    CHECK(verify_param(parse_space("x^2+y^2+z^2-w^2"), curve({"2*s*t", "s^2-t^2", "0", "s^2+t^2"})));
    MultiPoly dupin = lookup("dupin").surface();
    CHECK(verify_param(dupin, line_param(parse_space("z"), parse_space("x+y+w"))));
    CHECK_FALSE(verify_param(dupin, line_param(parse_space("x"), parse_space("y"))));
}

TEST_CASE("pencils of circles") {
    MultiPoly sphere = parse_space("x^2+y^2+z^2-w^2");
    CHECK(pencil_circle_check(sphere, parse_space("z"), parse_space("w"), parse_space("z"), parse_space("w"), 1));
    MultiPoly dupin = lookup("dupin").surface();
    MultiPoly z = parse_space("z"), xyw = parse_space("x+y+w");
    CHECK(pencil_circle_check(dupin, z, xyw, z, xyw, 1));
    MultiPoly perseus = lookup("perseus").surface();
    CHECK(pencil_circle_check(perseus, z, xyw, z, xyw, 1));
    // Sections of the Dupin cyclide by planes through another line are not circles.
    MultiPoly x = parse_space("x"), y = parse_space("y");
    CHECK_FALSE(pencil_circle_check(parse_space("x^2+2*y^2+z^2-w^2"), x, y, x, y, 1));
}

TEST_CASE("circle parametrizations") {
    CHECK(is_circle_param(curve({"2*s*t", "s^2-t^2", "0", "s^2+t^2"})));
    CHECK_FALSE(is_circle_param(curve({"2*s*t", "2*(s^2-t^2)", "0", "s^2+t^2"})));
    CHECK(is_circle_param(curve({"s", "t", "0", "s+t"})));
}

TEST_CASE("Moebius maps") {
    MoebiusMap mu0 = MoebiusMap::named("mu0");
    CHECK(mu0.word_str() == "t(-1,-1,-1)*f*b2*finv");
    MoebiusMap inv = mu0.inverse();
    CHECK(inv.word_str() == "f*b2*finv*t(1,1,1)");
    CHECK_THROWS(MoebiusMap::named("mu10"));
    CHECK_THROWS(MoebiusMap::parse("f*q"));

    MultiPoly dupin = lookup("dupin").surface();
    MultiPoly image = push_surface(mu0, dupin);
    CHECK(surface_type(image).d == 4);
    CHECK(surface_type(image).c == 2);
    CHECK(proportional(push_surface(inv, image), dupin));

    MoebiusMap shift = MoebiusMap::parse("t(1,2,3)");
    CHECK(cyclicity(push_surface(shift, dupin)) == cyclicity(dupin));
    CHECK(proportional(push_surface(MoebiusMap({}), dupin), dupin));
}

TEST_CASE("images of the type (4,0) quartic") {
    MultiPoly q = lookup("quartic-40").surface(Domain::gaussian());
    CHECK(proportional(push_surface(MoebiusMap::named("mu6"), q), lookup("sextic-62").surface(Domain::gaussian())));
    CHECK(proportional(push_surface(MoebiusMap::named("mu5"), q), lookup("octic-84").surface(Domain::gaussian())));
}

TEST_CASE("singular budget") {
    CHECK(sng_budget_check(4, {{1, 2}, {1, 2}}));
    CHECK_FALSE(sng_budget_check(4, {{1, 2}, {1, 2}, {1, 2}}));
    CHECK(sng_budget_check(3, {}));
    CHECK_FALSE(sng_budget_check(3, {{1, 2}}));
    CHECK(sng_budget_check(8, {{2, 4}}));
    CHECK(section_genus(4, {{1, 2}, {1, 2}}) == 1);
    CHECK(section_genus(3, {}) == 1);
}

}  // TEST_SUITE
