#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "celestial/field.hpp"
#include "celestial/poly.hpp"

namespace celestial {

// A pencil of planes base + t*direction through the line axis1 = axis2 = 0.
struct PencilSpec {
    std::string label;
    Domain domain;
    std::string axis1, axis2, base, direction;
};

// A curve given by a parametrization in (s, t).  The system is either the
// surface itself or the pair (S, model) in P^4.
struct CurveSpec {
    std::string label;
    std::string system = "surface";
    Domain domain;
    bool expect_singular = true;
    std::vector<std::string> param;
};

struct PointSpec {
    std::string label;
    std::string system = "surface";
    Domain domain;
    bool expect_singular = true;
    std::vector<std::string> coords;
};

// Circles parametrized in (s, t) for each sample value of u, optionally
// pushed through a map, each lying on a member of a pencil of spheres.
struct CircleFamilySpec {
    std::string label;
    Domain domain;
    std::vector<std::string> param;  // x, y, z, w in s, t, u
    std::vector<Rational> samples;
    std::string map;
    std::string sphere_base, sphere_direction;
};

// The image of the surface under a map: another record or just a type.
struct ImageSpec {
    std::string map;
    std::string target;  // record name, or "d,c"
    std::string note;
};

struct SurfaceRecord {
    std::string name;
    std::string title;
    std::string citation;
    Domain domain;
    std::string equation;
    std::optional<std::pair<int, int>> type;
    std::string printed;  // the equation as printed, when it is known to be wrong
    std::string erratum;
    std::string model;    // expected Moebius model in a..e, up to scalar mod S
    std::vector<std::pair<int, int>> sng;  // (degree, multiplicity) of singular curves
    bool sng_complete = false;
    int ci = 0;
    int ri = 0;
    std::vector<std::string> configuration;  // unprojected classes of the singularities
    int expected_families = -1;
    int expected_pairs = -1;
    std::vector<std::vector<std::string>> params;  // surface parametrizations in (s, t)
    std::vector<PencilSpec> pencils;
    std::vector<CurveSpec> curves;
    std::vector<PointSpec> points;
    std::vector<CircleFamilySpec> families;
    std::vector<ImageSpec> images;

    MultiPoly surface() const;
    MultiPoly surface(const Domain& d) const;
    std::string to_text() const;
    nlohmann::json to_json() const;
};

class CatalogError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class FormatError : public CatalogError {
public:
    FormatError(const std::string& msg, std::size_t line, std::size_t column);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_, column_;
};

SurfaceRecord parse_surface_text(const std::string& text);
SurfaceRecord load_user_surface(const std::string& path);

const std::vector<SurfaceRecord>& catalog();
std::vector<std::string> catalog_names();
const SurfaceRecord& lookup(const std::string& name);

// ------------------------------------------------------------ expected data

struct C1Row {
    int ci;
    std::vector<std::string> classes;
    std::string dynkin;
};

struct M4Row {
    int ci, ri;
    std::string dynkin;
    int c, r, f, p;
    std::string quadric, cubic, quartic;  // the (2,0), (3,1) and (4,2) columns
};

struct M4ClassRow {
    int ci, ri;
    std::string dynkin;
    std::vector<std::string> classes, conjugates, real_two_set;
};

struct QuadricRow {
    std::string name;
    int c, r, f, p;
};

struct SchichoRow {
    int row;
    std::string k2, name, pic, divisor;
    int d2;
    std::string n;
    std::vector<std::string> classes;  // empty for the dagger row
    int dim;
    std::string description;
};

struct TypeRow {
    int d, c;
    std::string status;  // "admissible", "lattice filter" or "asserted"
    std::string reason;
};

struct ClassSetExpectation {
    std::string key;      // e.g. "84c"
    std::string lattice;  // "P(0)", "B(2)", ...
    std::vector<std::string> classes;
    std::string citation;
};

struct ExpectedTables {
    std::vector<C1Row> c1;
    std::map<int, std::vector<std::string>> real;  // RI -> images of H, Q1..Q5
    std::map<std::pair<int, int>, std::set<int>> g;  // (CI, RI) -> cardinalities; absent = blank
    std::vector<M4Row> m4;
    std::vector<M4ClassRow> m4_classes;
    std::vector<QuadricRow> quadrics;
    std::vector<SchichoRow> schicho;
    std::vector<TypeRow> types;
    std::map<int, std::pair<std::string, int>> type_groups;  // Moebius degree -> (max, row count)
    std::vector<ClassSetExpectation> class_sets;
    std::map<std::string, std::string> citations;  // table key -> verbatim phrase
};

const ExpectedTables& expected_tables();

}  // namespace celestial
