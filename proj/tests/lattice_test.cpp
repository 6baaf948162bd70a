#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "celestial/lattice.hpp"

using namespace celestial;

namespace {

const LatticeSpec B5 = LatticeSpec::b(5);

Configuration cfg(const LatticeSpec& L, const std::vector<std::string>& names) {
    return parse_configuration(L, names);
}

std::set<std::string> names(const LatticeSpec& L, const std::vector<DivisorClass>& v) {
    std::set<std::string> out;
    for (const auto& c : v) out.insert(class_name(L, c));
    return out;
}

// Bareiss fraction-free determinant.
long long determinant(std::vector<std::vector<long long>> m) {
    const std::size_t n = m.size();
    long long sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("intersection products") {
    CHECK(intersect(B5, parse_class(B5, "a3"), parse_class(B5, "b3")) == 2);
    CHECK(intersect(B5, parse_class(B5, "a1"), parse_class(B5, "a2")) == 1);
    CHECK(intersect(B5, parse_class(B5, "a1"), parse_class(B5, "b2")) == 1);
    CHECK(self_intersection(B5, parse_class(B5, "a4")) == 0);
    LatticeSpec B0 = LatticeSpec::b(0);
    CHECK(self_intersection(B0, {1}) == 1);
    LatticeSpec P0 = LatticeSpec::p(0);
    CHECK(intersect(P0, {1, 0}, {0, 1}) == 1);
    CHECK(self_intersection(P0, {0, 1}) == 0);
    CHECK(self_intersection(LatticeSpec::p(3), {1, 0}) == 3);
    CHECK_THROWS(intersect(B5, {1, 0}, {1, 0, 0, 0, 0, 0}));
}

TEST_CASE("Gram matrices are unimodular and K^2 is the degree") {
    std::vector<LatticeSpec> lattices;
    for (int r = 0; r <= 8; ++r) lattices.push_back(LatticeSpec::b(r));
    for (int r = 0; r <= 6; ++r) lattices.push_back(LatticeSpec::p(r));
    for (const auto& L : lattices) {
        std::vector<std::vector<long long>> g(L.rank(), std::vector<long long>(L.rank()));
        for (std::size_t i = 0; i < L.rank(); ++i)
            for (std::size_t j = 0; j < L.rank(); ++j) g[i][j] = L.gram(i, j);
        long long det = determinant(g);
        CHECK_MESSAGE((det == 1 || det == -1), L.str());
        int k2 = self_intersection(L, L.anticanonical());
        CHECK(k2 == (L.kind == LatticeSpec::B ? 9 - L.r : 8));
    }
}

TEST_CASE("short names round trip") {
    for (const auto& [ci, row] : configuration_table())
        for (const auto& n : row) CHECK(class_name(B5, parse_class(B5, n)) == n);
    for (const std::string n : {"12", "45", "1123", "1345", "a1", "a5", "b1", "b5"})
        CHECK(class_name(B5, parse_class(B5, n)) == n);
    CHECK(parse_class(B5, "1123") == DivisorClass{1, -1, -1, -1, 0, 0});
    CHECK(parse_class(B5, "12") == DivisorClass{0, 1, -1, 0, 0, 0});
    CHECK(parse_class(B5, "a1") == DivisorClass{1, -1, 0, 0, 0, 0});
    CHECK(parse_class(B5, "2H-Q1-Q2") == DivisorClass{2, -1, -1, 0, 0, 0});
    CHECK_THROWS_AS(parse_class(B5, "zz"), LatticeError);
}

TEST_CASE("enumeration of roots, lines and conics") {
    // Independent brute force over a generous box.
    int roots = 0, shaped = 0;
    std::vector<int> v(6);
    for (v[0] = -3; v[0] <= 3; ++v[0])
        for (v[1] = -3; v[1] <= 3; ++v[1])
            for (v[2] = -3; v[2] <= 3; ++v[2])
                for (v[3] = -3; v[3] <= 3; ++v[3])
                    for (v[4] = -3; v[4] <= 3; ++v[4])
                        for (v[5] = -3; v[5] <= 3; ++v[5]) {
                            int sq = v[0] * v[0] - v[1] * v[1] - v[2] * v[2] - v[3] * v[3] - v[4] * v[4] - v[5] * v[5];
                            int k = 3 * v[0] + v[1] + v[2] + v[3] + v[4] + v[5];
                            if (sq == -2 && k == 0) ++roots;
                        }
    auto found = enumerate_classes(B5, -2, 0);
    CHECK(roots == 40);
    CHECK(found.size() == 40);
    for (const auto& c : found) {
        std::string n = class_name(B5, c);
        bool digits = std::all_of(n.begin(), n.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
        if (digits && ((n.size() == 2 && n[0] < n[1]) || (n.size() == 4 && n[0] == '1'))) ++shaped;
    }
    CHECK(shaped == 20);

    CHECK(names(LatticeSpec::b(2), enumerate_classes(LatticeSpec::b(2), -1, 1)) ==
          std::set<std::string>{"Q1", "Q2", "H-Q1-Q2"});
    CHECK(names(B5, enumerate_classes(B5, 0, 2)) ==
          std::set<std::string>{"a1", "a2", "a3", "a4", "a5", "b1", "b2", "b3", "b4", "b5"});
    CHECK(enumerate_classes(B5, -1, 1).size() == 16);
}

TEST_CASE("one and two sets") {
    CHECK(two_set(B5, {}).size() == 10);
    auto t = names(B5, two_set(B5, cfg(B5, {"45"})));
    CHECK(t.size() == 8);
    CHECK(t.count("a5") == 0);
    CHECK(t.count("b4") == 0);
    auto first = names(B5, two_set(B5, cfg(B5, {"12", "1345", "1125", "34"})));
    CHECK(first.count("a1") == 1);
    CHECK(first.count("a3") == 1);
    CHECK(first.size() == 4);
    CHECK(real_two_set(cfg(B5, {"12", "1345", "1125", "34"}), 13).size() == 2);

    CHECK(one_set(B5, {}).size() == 16);
    CHECK(one_set(LatticeSpec::b(2), {}).size() == 3);
    LatticeSpec B3 = LatticeSpec::b(3);
    CHECK(names(B3, one_set(B3, Configuration{{0, 0, 1, -1}, {1, -1, -1, -1}})) == std::set<std::string>{"Q1", "Q3"});
}

TEST_CASE("Dynkin types") {
    CHECK(dynkin_type(B5, cfg(B5, {"12", "34", "45"})).str() == "A2+A1");
    CHECK(dynkin_type(B5, cfg(B5, {"1123", "23", "34", "45"})).str() == "D4");
    CHECK(dynkin_type(B5, {}).str() == "A0");
    CHECK(dynkin_type(B5, cfg(B5, {"14", "1134", "25", "1235"})).str() == "4A1");
    CHECK(dynkin_type(B5, cfg(B5, {"12", "23", "34", "45"})).str() == "A4");
    CHECK(dynkin_type(B5, cfg(B5, {"1123", "12", "23", "34", "45"})).str() == "D5");
    CHECK_THROWS_AS(validate_configuration(B5, cfg(B5, {"12", "12"})), LatticeError);
}

TEST_CASE("Weyl group") {
    const auto& W = weyl_group(B5);
    CHECK(W.size() == 1920);
    CHECK(weyl_group(LatticeSpec::b(2)).size() == 2);
    auto K = B5.anticanonical();
    for (const auto& g : W) {
        REQUIRE(is_isometry(B5, g));
        REQUIRE(g.apply(K) == K);
    }
    for (const auto& r : enumerate_classes(B5, -2, 0)) {
        Isometry s = reflection(B5, r);
        CHECK(s.then(s) == identity_isometry(B5));
    }
    CHECK_THROWS(weyl_group(LatticeSpec::b(6)));
}

TEST_CASE("orbit classification examples") {
    CHECK(canonical_configuration(cfg(B5, {"1123"})) == 17);
    CHECK(canonical_configuration(cfg(B5, {"45"})) == 17);
    CHECK(canonical_configuration(cfg(B5, {"23", "45"})) == 18);
    CHECK(canonical_configuration(cfg(B5, {"14", "1235"})) == 19);
    CHECK(canonical_configuration(cfg(B5, {"1123", "45"})) == 19);
    CHECK(canonical_configuration(cfg(B5, {"14", "1134", "25", "1235"})) == 25);
}

TEST_CASE("dynkin type and canonical form are Weyl invariant") {
    std::mt19937_64 rng(5);
    const auto& W = weyl_group(B5);
    std::uniform_int_distribution<std::size_t> pick(0, W.size() - 1);
    for (const auto& [ci, row] : configuration_table()) {
        Configuration c = cfg(B5, row);
        std::string d = dynkin_type(B5, c).str();
        Configuration canon = canonical_form(B5, c);
        for (int n = 0; n < 40; ++n) {
            Configuration moved = image(W[pick(rng)], c);
            REQUIRE(dynkin_type(B5, moved).str() == d);
            REQUIRE(canonical_form(B5, moved) == canon);
            REQUIRE(canonical_configuration(moved) == ci);
        }
        for (int ri : real_structure_indices()) REQUIRE(dynkin_type(B5, image(real_structure(ri), c)).str() == d);
    }
}

TEST_CASE("real structures are involutive isometries") {
    CHECK(real_structure_indices() == std::vector<int>{10, 11, 12, 13, 14, 15});
    auto K = B5.anticanonical();
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> coord(-6, 6);
    for (int ri : real_structure_indices()) {
        Isometry s = real_structure(ri);
        CHECK(is_isometry(B5, s));
        CHECK(s.then(s) == identity_isometry(B5));
        CHECK(s.apply(K) == K);
        for (int n = 0; n < 50; ++n) {
            DivisorClass c(6);
            for (auto& x : c) x = coord(rng);
            REQUIRE(s.apply(s.apply(c)) == c);
        }
    }
    CHECK(real_structure(10) == identity_isometry(B5));
    Isometry s13 = real_structure(13);
    CHECK(s13.apply(parse_class(B5, "H")) == parse_class(B5, "2H-Q1-Q2-Q3"));
    CHECK(s13.apply(parse_class(B5, "Q4")) == parse_class(B5, "Q5"));
    CHECK(s13.apply(parse_class(B5, "14")) == parse_class(B5, "1235"));
    CHECK_THROWS(real_structure(9));
}

TEST_CASE("real two sets") {
    CHECK(names(B5, real_two_set(cfg(B5, {"14", "1134", "25", "1235"}), 13)) ==
          std::set<std::string>{"a1", "a2", "a3", "b3"});
    CHECK(real_two_set({}, 13).size() == 6);
    CHECK(real_two_set({}, 10).size() == 10);
    for (const auto& g : real_two_set(cfg(B5, {"12"}), 13)) CHECK(real_structure(13).apply(g) == g);
    CHECK_THROWS_AS(real_two_set(cfg(B5, {"14"}), 13), LatticeError);
    for (int ri : real_structure_indices()) {
        Isometry s = real_structure(ri);
        for (const auto& [ci, row] : configuration_table()) {
            Configuration c = cfg(B5, row);
            if (!is_stable(s, c)) continue;
            auto ts = two_set(B5, c);
            std::set<DivisorClass> a(ts.begin(), ts.end()), b;
            for (const auto& g : ts) b.insert(s.apply(g));
            CHECK(a == b);
        }
    }
}

}  // TEST_SUITE
