#include <doctest.h>

#include <random>

#include "celestial/moebius.hpp"
#include "celestial/poly.hpp"

using namespace celestial;

namespace {

const std::vector<std::string> kXYZW{"x", "y", "z", "w"};

MultiPoly random_poly(std::mt19937_64& rng, int max_degree, const Domain& d) {
    std::uniform_int_distribution<int> e(0, max_degree), c(-5, 5), terms(1, 5);
    MultiPoly p(kXYZW, d);
    int n = terms(rng);
    for (int k = 0; k < n; ++k) {
        Exponents ex(4);
        int budget = max_degree;
        for (auto& v : ex) {
            v = std::min(e(rng), budget);
            budget -= v;
        }
        FieldElement coeff(c(rng));
        if (d.allows_i()) coeff += FieldElement(0, c(rng), d);
        if (d.kind == Domain::QUAD) coeff += FieldElement(c(rng)) * FieldElement::sqrt_of(d.m);
        p.add_term(ex, coeff);
    }
    return p;
}

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("parse simple quadric") {
    MultiPoly p = parse_expression("x^2+y^2+z^2-w^2", kXYZW);
    CHECK(p.size() == 4);
    CHECK(p.total_degree() == 2);
    CHECK(p.is_homogeneous());
    CHECK(p.str() == "x^2+y^2+z^2-w^2");
}

TEST_CASE("parse a pencil member with a square root coefficient") {
    std::vector<std::string> vars{"x", "y", "z", "w", "t"};
    MultiPoly p = parse_expression("(y+3*z+1)+t*(x-(-sqrt(6)+4)*z)", vars, Domain::quad(6));
    FieldElement c = p.coefficient({0, 0, 1, 0, 1});
    CHECK(c == FieldElement(-4) + FieldElement::sqrt_of(6));
    CHECK(p.coefficient({1, 0, 0, 0, 1}) == FieldElement(1));
    CHECK(p.coefficient({0, 0, 0, 0, 0}) == FieldElement(1));
    CHECK(p.size() == 5);
}

TEST_CASE("parse imaginary coefficients") {
    std::vector<std::string> st{"s", "t"};
    MultiPoly p = parse_expression("i*(s^2+t^2)", st, Domain::gaussian());
    CHECK(p.size() == 2);
    CHECK(p.coefficient({2, 0}) == FieldElement::i_unit());
    CHECK(p.coefficient({0, 2}) == FieldElement::i_unit());
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_expression("x+q", kXYZW), UnknownVariable);
    CHECK_THROWS_AS(parse_expression("i*x", kXYZW, Domain::rational()), DomainError);
    CHECK_THROWS_AS(parse_expression("sqrt(6)*x", kXYZW, Domain::gaussian()), DomainError);
    CHECK_THROWS(parse_expression("sqrt(8)*x", kXYZW, Domain::quad(2)));
    CHECK_THROWS(parse_expression("sqrt(2)*x+sqrt(3)*y", kXYZW, Domain::quad(2)));
    CHECK_THROWS_AS(parse_expression("x^y", kXYZW), ParseError);
    CHECK_THROWS_AS(parse_expression("2x", kXYZW), ParseError);
    try {
        parse_expression("x+*y", kXYZW);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
    try {
        parse_expression("(x+y", kXYZW);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("print then parse is the identity") {
    std::mt19937_64 rng(7);
    for (const auto& d : {Domain::rational(), Domain::gaussian(), Domain::quad(6)}) {
        for (int n = 0; n < 200; ++n) {
            MultiPoly p = random_poly(rng, 4, d);
            MultiPoly q = parse_expression(p.str(), kXYZW, d);
            REQUIRE(p == q);
            REQUIRE(q.str() == p.str());
        }
    }
    MultiPoly half = parse_expression("5/2*x-(1/2+3*i)*y", kXYZW, Domain::gaussian());
    CHECK(parse_expression(half.str(), kXYZW, Domain::gaussian()) == half);
}

TEST_CASE("trial division round trip") {
    std::mt19937_64 rng(11);
    for (const auto& d : {Domain::rational(), Domain::gaussian(), Domain::quad(6)}) {
        for (int n = 0; n < 200; ++n) {
            MultiPoly p = random_poly(rng, 3, d), q = random_poly(rng, 3, d);
            if (q.is_zero()) continue;
            auto r = trial_divide(p * q, q);
            REQUIRE(r.has_value());
            REQUIRE(*r == p);
        }
    }
}

TEST_CASE("trial division examples") {
    auto p = [](const std::string& s) { return parse_expression(s, kXYZW); };
    auto q = trial_divide(p("x^2-y^2"), p("x-y"));
    REQUIRE(q.has_value());
    CHECK(*q == p("x+y"));
    CHECK_FALSE(trial_divide(p("x^2+y^2"), p("x-y")).has_value());
    auto r = trial_divide(p("w*(x+y+w)^2"), p("x+y+w"));
    REQUIRE(r.has_value());
    CHECK(*r == p("w*(x+y+w)"));
}

TEST_CASE("substitution") {
    MultiPoly quadric = parse_space("x^2+y^2+z^2-w^2");
    RationalMap f = stereographic();
    CHECK(substitute(quadric, f) == parse_sphere("a^2+b^2+c^2-(e-d)^2"));
    RationalMap finv = stereographic_inverse();
    CHECK(finv.components[3] == parse_space("x^2+y^2+z^2-w^2"));
    std::vector<MultiPoly> id;
    for (const auto& v : kXYZW) id.push_back(MultiPoly::variable(kXYZW, v));
    CHECK(substitute(quadric, id) == quadric);

    std::mt19937_64 rng(3);
    for (int n = 0; n < 30; ++n) {
        MultiPoly a = random_poly(rng, 2, Domain::rational()), b = random_poly(rng, 2, Domain::rational());
        REQUIRE(substitute(a + b, f) == substitute(a, f) + substitute(b, f));
        REQUIRE(substitute(a * b, f) == substitute(a, f) * substitute(b, f));
        REQUIRE(substitute(a * b, f).total_degree() == (a * b).total_degree());
    }
}

TEST_CASE("gradients") {
    auto g = gradient(parse_sphere("c^2+d^2-d*e"));
    std::vector<std::string> expect{"0", "0", "2*c", "2*d-e", "-d"};
    for (std::size_t k = 0; k < 5; ++k) CHECK(g[k] == parse_sphere(expect[k]));
    auto h = gradient(parse_sphere("a^2+b^2+d*e-e^2"));
    std::vector<std::string> expect2{"2*a", "2*b", "0", "e", "d-2*e"};
    for (std::size_t k = 0; k < 5; ++k) CHECK(h[k] == parse_sphere(expect2[k]));
    for (const auto& c : gradient(parse_space("7"))) CHECK(c.is_zero());
}

TEST_CASE("primitive part strips known factors") {
    MultiPoly w = parse_space("w"), q = parse_space("x^2+y^2+z^2");
    MultiPoly F = parse_space("x^3+2*y*z*w-w^3");
    auto r = primitive_part(parse_space("5") * w * w * q * F, {w, q});
    CHECK(r.residue == F.monic());
    CHECK(r.multiplicities == std::vector<int>{2, 1});
    auto none = primitive_part(parse_space("3*x+y"), {w, q});
    CHECK(none.residue == parse_space("x+1/3*y"));
    CHECK(none.multiplicities == std::vector<int>{0, 0});
}

TEST_CASE("proportionality and homogenization") {
    CHECK(proportional(parse_space("2*x+4*y"), parse_space("-x-2*y")));
    CHECK_FALSE(proportional(parse_space("x+y"), parse_space("x-y")));
    MultiPoly affine = parse_space("x^2+y+1");
    CHECK(affine.homogenized("w") == parse_space("x^2+y*w+w^2"));
}

}  // TEST_SUITE
