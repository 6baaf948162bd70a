#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "celestial/poly.hpp"

namespace celestial {

// Ambient coordinates of P^3 and of P^4 (where the unit sphere S lives).
const std::vector<std::string>& space_vars();   // x, y, z, w
const std::vector<std::string>& sphere_vars();  // a, b, c, d, e
const std::vector<std::string>& curve_vars();   // s, t

MultiPoly sphere_equation();  // a^2+b^2+c^2+d^2-e^2
MultiPoly parse_space(const std::string& text, Domain dom = Domain::rational());
MultiPoly parse_sphere(const std::string& text, Domain dom = Domain::rational());

// P^3 -> P^4, (2wx : 2wy : 2wz : x^2+y^2+z^2-w^2 : x^2+y^2+z^2+w^2)
RationalMap stereographic_inverse();
// P^4 -> P^3, (a : b : c : e-d)
RationalMap stereographic();

// ---------------------------------------------------------------- maps

struct MapGenerator {
    enum Kind { F, FINV, BETA, TRANSLATE };
    Kind kind = F;
    int beta = 0;                  // 0, 1, 2 for BETA
    std::vector<Rational> shift;   // t0, t1, t2 for TRANSLATE
    MapGenerator inverse() const;
    std::string str() const;
};

class MoebiusMap {
public:
    // Generators are listed as in a composition g1*g2*...*gn, so gn acts first.
    explicit MoebiusMap(std::vector<MapGenerator> word, std::string name = "");
    static MoebiusMap named(const std::string& name);  // mu0 .. mu9
    // "mu3", or a word such as "t(0,1,1)*f*b0*finv".
    static MoebiusMap parse(const std::string& text);

    const std::string& name() const { return name_; }
    const std::vector<MapGenerator>& word() const { return word_; }
    std::string word_str() const;
    MoebiusMap inverse() const;
    const RationalMap& forward() const { return forward_; }
    // Factors that may split off when a surface is pulled back along forward().
    const std::vector<MultiPoly>& exceptional_candidates() const { return candidates_; }

private:
    std::string name_;
    std::vector<MapGenerator> word_;
    RationalMap forward_;
    std::vector<MultiPoly> candidates_;
    void compile();
};

const std::vector<std::string>& named_map_list();

// ------------------------------------------------------------ surfaces

int cyclicity(const MultiPoly& F);

struct SurfaceType {
    int d = 0;
    int c = 0;
    int moebius_degree() const { return 2 * (d - c); }
};
SurfaceType surface_type(const MultiPoly& F);

// Normal form modulo S: every e^2 replaced by a^2+b^2+c^2+d^2.
MultiPoly reduce_mod_sphere(const MultiPoly& P);

struct SphereSystem {
    MultiPoly sphere;  // S
    MultiPoly model;   // Q in normal form
    std::string str() const;
};
SphereSystem moebius_model(const MultiPoly& F);
// Q1 and Q2 agree mod S up to a nonzero scalar.
bool congruent_mod_sphere(const MultiPoly& q1, const MultiPoly& q2);

class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
MultiPoly push_surface(const MoebiusMap& map, const MultiPoly& F);

// ---------------------------------------------------------------- checks

// F(param) vanishes identically.
bool verify_param(const MultiPoly& F, const std::vector<MultiPoly>& param);
// All equations and all maximal Jacobian minors vanish along the curve.
bool verify_singular_curve(const std::vector<MultiPoly>& system, const std::vector<MultiPoly>& param);
bool is_singular_point(const std::vector<MultiPoly>& system, const std::vector<FieldElement>& point);
// Two points spanning the line {l1 = 0} and {l2 = 0}, as linear forms in (s, t).
std::vector<MultiPoly> line_param(const MultiPoly& l1, const MultiPoly& l2);

struct PlaneSection {
    bool circle = false;
    std::string reason;   // why it is not a circle, empty otherwise
    MultiPoly plane;      // the pencil member
    MultiPoly conic;      // residual conic, x/y/z/w with one variable eliminated
    int axis_factors = 0;
};

class NotAConic : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Members of the pencil base + t*direction are planes through the axis.
PlaneSection pencil_section(const MultiPoly& F, const MultiPoly& axis1, const MultiPoly& axis2,
                            const MultiPoly& base, const MultiPoly& direction, const Rational& t);
bool pencil_circle_check(const MultiPoly& F, const MultiPoly& axis1, const MultiPoly& axis2,
                         const MultiPoly& base, const MultiPoly& direction, const Rational& t);
// Common points of two plane-section conics on the line where their planes meet.
// Returns 0, 1 or 2, or -1 when a conic contains that line.
int common_points(const PlaneSection& a, const PlaneSection& b);

// Binary-form helpers on (s, t).
MultiPoly binary_gcd(const MultiPoly& a, const MultiPoly& b);
std::vector<MultiPoly> strip_common_factor(const std::vector<MultiPoly>& comps);
// A conic (degree 2) or line (degree 1) parametrization in P^3 that is a Moebius circle.
bool is_circle_param(const std::vector<MultiPoly>& comps);
// The member base + t*direction of a pencil that contains the curve, if any.
// at_infinity means only `direction` vanishes on it.
struct PencilMember {
    bool found = false;
    bool at_infinity = false;
    FieldElement t;
};
PencilMember pencil_member(const MultiPoly& base, const MultiPoly& direction, const std::vector<MultiPoly>& param);
std::vector<MultiPoly> push_curve(const MoebiusMap& map, const std::vector<MultiPoly>& param);

bool sng_budget_check(int d, const std::vector<std::pair<int, int>>& components);
int section_genus(int d, const std::vector<std::pair<int, int>>& components);

}  // namespace celestial
