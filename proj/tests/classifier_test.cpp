#include <doctest.h>

#include <set>

#include "celestial/classifier.hpp"

using namespace celestial;

namespace {

using LC = LinearConstraint;

std::set<std::string> coords(const LatticeSpec& L, const std::vector<DivisorClass>& v) {
    std::set<std::string> out;
    for (const auto& c : v) out.insert(coordinate_name(L, c));
    return out;
}

std::set<std::string> short_names(const LatticeSpec& L, const std::vector<DivisorClass>& v) {
    std::set<std::string> out;
    for (const auto& c : v) out.insert(class_name(L, c));
    return out;
}

ClassConstraints nef_against_lines(const LatticeSpec& L, int degree) {
    ClassConstraints c;
    for (const auto& e : one_set(L, {})) c.linear.push_back({e, LC::GE, 0});
    c.linear.push_back({L.anticanonical(), LC::EQ, degree});
    return c;
}

}  // namespace

TEST_SUITE("classifier") {

TEST_CASE("orbit census") {
    const Census& c = census();
    CHECK(c.orbits.size() == 16);
    std::size_t members = 0;
    for (const auto& o : c.orbits) members += o.members.size();
    CHECK(members == c.configurations);
    auto rows = reproduce_table_c1();
    REQUIRE(rows.size() == 16);
    CHECK(rows[12].ci == 28);
    CHECK(rows[12].classes == std::vector<std::string>{"12", "23", "34", "45"});
    CHECK(rows[12].dynkin == "A4");
    CHECK(rows[15].ci == 31);
    CHECK(rows[15].classes == std::vector<std::string>{"1123", "12", "23", "34", "45"});
    int a3 = 0;
    for (const auto& r : rows) a3 += r.dynkin == "A3";
    CHECK(a3 == 2);
}

TEST_CASE("table of real two-set sizes") {
    auto g = reproduce_table_g();
    CHECK(g.at({16, 13}) == std::set<int>{6});
    CHECK(g.at({19, 13}) == std::set<int>{3, 5});
    CHECK(g.count({28, 11}) == 0);
    CHECK(g.at({16, 10}) == std::set<int>{10});
    CHECK(g.at({17, 10}) == std::set<int>{8});
    auto detail = reproduce_table_g_detail();
    for (const auto& [cell, info] : detail) {
        CHECK(info.witnesses.size() == info.values.size());
        for (const auto& [value, w] : info.witnesses)
            CHECK(static_cast<int>(real_two_set(w, cell.second).size()) == value);
    }
}

TEST_CASE("m4 tables") {
    auto rows = reproduce_m4_tables();
    CHECK(rows.size() == 14);
    bool blum = false, dupin = false, butterfly = false;
    std::string key = m4_key(parse_configuration(LatticeSpec::b(5), {"14", "1134", "25", "1235"}), 13);
    for (const auto& r : rows) {
        if (r.row.ci == 16 && r.row.ri == 13) blum = r.row.f == 6 && r.row.p == 3;
        if (r.row.ci == 20 && r.row.ri == 13) butterfly = r.row.p == 0;
        if (r.key == key) dupin = r.row.ci == 25 && r.row.f == 4 && r.row.p == 1;
    }
    CHECK(blum);
    CHECK(dupin);
    CHECK(butterfly);
    std::set<std::string> keys;
    for (const auto& r : rows) keys.insert(r.key);
    CHECK(keys.size() == rows.size());
}

TEST_CASE("class constraints on P(0)") {
    LatticeSpec L = LatticeSpec::p(0);
    DivisorClass h{1, 0}, f{0, 1};
    ClassConstraints c{{{h, LC::GE, 0}, {f, LC::GE, 0}, {L.anticanonical(), LC::EQ, 4}}, {}};
    CHECK(coords(L, solve_class_constraints(L, c)) == std::set<std::string>{"2H", "2F", "H+F"});
    ClassConstraints open{{{f, LC::GE, 0}}, {}};
    CHECK_THROWS_AS(solve_class_constraints(L, open), InfiniteSolutionSet);
    ClassConstraints square{{{L.anticanonical(), LC::EQ, 4}}, 0};
    CHECK(coords(L, solve_class_constraints(L, square)) == std::set<std::string>{"2H", "2F"});
}

TEST_CASE("class constraints on B(2) and B(3)") {
    LatticeSpec B2 = LatticeSpec::b(2);
    CHECK(coords(B2, solve_class_constraints(B2, nef_against_lines(B2, 4))) ==
          std::set<std::string>{"2H-Q1-Q2", "2H-2Q1", "2H-2Q2"});
    CHECK(solve_class_constraints(B2, nef_against_lines(B2, -1)).empty());
    LatticeSpec B3 = LatticeSpec::b(3);
    auto c = solve_class_constraints(B3, nef_against_lines(B3, 4));
    CHECK(coords(B3, c).count("2H-2Q3") == 1);
    CHECK(coords(B3, c).count("2H-Q2-Q3") == 1);
    CHECK(coords(B3, c).count("H") == 0);
}

TEST_CASE("decompositions of the anticanonical class") {
    LatticeSpec B3 = LatticeSpec::b(3);
    auto cands = solve_class_constraints(B3, nef_against_lines(B3, 4));
    std::vector<DivisorClass> circles{parse_class(B3, "H-Q1"), parse_class(B3, "H-Q2")};
    auto smooth = solve_decomposition({B3, {}, B3.anticanonical(), cands, circles, 2, 2});
    REQUIRE(smooth.size() == 1);
    CHECK(coordinate_name(B3, smooth[0].a) == "2H-2Q3");
    auto f = solve_decomposition({B3, parse_configuration(B3, {"23"}), B3.anticanonical(), cands, circles, 2, 2});
    REQUIRE(f.size() == 1);
    CHECK(coordinate_name(B3, f[0].a) == "2H-Q2-Q3");
    for (const auto& d : {smooth[0], f[0]}) {
        DivisorClass total = add(d.a, d.f);
        for (const auto& b : d.b) total = add(total, b);
        CHECK(total == B3.anticanonical());
    }
}

TEST_CASE("multiset sums") {
    LatticeSpec B2 = LatticeSpec::b(2);
    auto lines = one_set(B2, {});
    CHECK(multiset_sums(B2, parse_class(B2, "H"), lines, 2).empty());
    auto sums = multiset_sums(B2, parse_class(B2, "H"), lines, 3);
    REQUIRE(sums.size() == 1);
    CHECK(sums[0].size() == 3);
    CHECK(multiset_sums(B2, parse_class(B2, "3H"), lines, 1).empty());
}

TEST_CASE("degree-8 data") {
    LatticeSpec B5 = LatticeSpec::b(5);
    Configuration f = parse_configuration(B5, {"14", "1134", "25", "1235"});
    CHECK(canonical_configuration(f) == 25);
    CHECK(short_names(B5, two_set(B5, f)) == std::set<std::string>{"a1", "a2", "a3", "b3"});
    Isometry s = real_structure(13);
    CHECK(s.apply(parse_class(B5, "14")) == parse_class(B5, "1235"));
    CHECK(s.apply(parse_class(B5, "25")) == parse_class(B5, "1134"));
    Report r = verify_class_sets();
    for (const auto& c : r.checks) CHECK_MESSAGE(c.ok, (c.name + ": " + c.detail));
}

TEST_CASE("admissible types") {
    AdmissibleTypes t = admissible_types();
    std::set<std::pair<int, int>> adm;
    for (const auto& r : t.all)
        if (r.status == "admissible") adm.insert({r.d, r.c});
    CHECK(adm == std::set<std::pair<int, int>>{{1, 0}, {2, 1}, {2, 0}, {3, 1}, {4, 2}, {4, 0}, {6, 2}, {7, 3}, {8, 4}});
    CHECK(t.groups.at(2) == std::vector<std::pair<int, int>>{{1, 0}, {2, 1}});
    CHECK(t.groups.at(4) == std::vector<std::pair<int, int>>{{2, 0}, {3, 1}, {4, 2}});
    CHECK(t.groups.at(8) == std::vector<std::pair<int, int>>{{4, 0}, {6, 2}, {7, 3}, {8, 4}});
    CHECK(t.max_families.at(2) == "inf");
    CHECK(t.max_families.at(4) == "10");
    CHECK(t.max_families.at(8) == "2");
    auto status = [&](int d, int c) {
        for (const auto& r : t.all)
            if (r.d == d && r.c == c) return r.status;
        return std::string("missing");
    };
    CHECK(status(4, 1) == "lattice filter");
    CHECK(status(5, 1) == "lattice filter");
    CHECK(status(3, 0) == "asserted");
    CHECK(status(5, 2) == "asserted");
    CHECK(status(6, 3) == "asserted");
    CHECK(circle_classes_against_absolute(4) < 2);
    CHECK(circle_classes_against_absolute(5) < 2);
}

TEST_CASE("conical family rows") {
    Report r = verify_schicho_rows();
    CHECK(r.ok());
    CHECK(self_intersection(LatticeSpec::p(0), {2, 2}) == 8);
    CHECK(self_intersection(LatticeSpec::b(0), {1}) == 1);
    CHECK(self_intersection(LatticeSpec::p(2), {1, 0}) == 2);
}

TEST_CASE("table diffs are empty") {
    for (const auto& t : table_names()) {
        auto d = diff_table(t);
        CHECK_MESSAGE(d.empty(), (t + ": " + (d.empty() ? "" : d.front())));
    }
}

TEST_CASE("surface verification") {
    VerifyOptions opt;
    Report dupin = verify_surface(lookup("dupin"), opt);
    CHECK(dupin.ok());
    Report q = verify_surface(lookup("quartic-40"), opt);
    CHECK(q.ok());
    bool erratum_note = false;
    for (const auto& n : q.notes) erratum_note = erratum_note || n.find("erratum") != std::string::npos;
    CHECK(erratum_note);
    SurfaceRecord bad = parse_surface_text("name=bad\nequation=x^2+y^2+z^2-w^2\ntype=4,2\n");
    CHECK_FALSE(verify_surface(bad, opt).ok());
}

TEST_CASE("parallel helper keeps indices") {
    std::vector<int> out(100, 0);
    parallel_for(out.size(), [&](std::size_t i) { out[i] = static_cast<int>(i) * 2; });
    for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == static_cast<int>(i) * 2);
    CHECK(thread_count() >= 1);
}

}  // TEST_SUITE
