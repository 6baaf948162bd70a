#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace celestial {

// B(r): basis H, Q1..Qr with H^2 = 1, Qi^2 = -1, -K = 3H - sum Qi.
// P(r): basis H, F with H^2 = r, H.F = 1, F^2 = 0, -K = 2H - (r-2)F.
struct LatticeSpec {
    enum Kind { B, P };
    Kind kind = B;
    int r = 0;

    static LatticeSpec b(int r);
    static LatticeSpec p(int r);
    std::size_t rank() const { return kind == B ? static_cast<std::size_t>(r) + 1 : 2; }
    int gram(std::size_t i, std::size_t j) const;
    std::vector<int> anticanonical() const;
    std::string str() const;
    bool operator==(const LatticeSpec& o) const { return kind == o.kind && r == o.r; }
    bool operator<(const LatticeSpec& o) const { return kind != o.kind ? kind < o.kind : r < o.r; }
};

using DivisorClass = std::vector<int>;
using Configuration = std::vector<DivisorClass>;

class LatticeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

int intersect(const LatticeSpec& L, const DivisorClass& a, const DivisorClass& b);
int self_intersection(const LatticeSpec& L, const DivisorClass& a);
int anticanonical_degree(const LatticeSpec& L, const DivisorClass& a);

DivisorClass add(const DivisorClass& a, const DivisorClass& b);
DivisorClass sub(const DivisorClass& a, const DivisorClass& b);
DivisorClass scale(int k, const DivisorClass& a);

// Short names in B(r): "12" = Q1-Q2, "1123" = H-Q1-Q2-Q3, "a1" = H-Q1,
// and in B(5) "b1" = 2H-Q2-Q3-Q4-Q5.  Everything else prints as "2H-Q1-Q2".
std::string class_name(const LatticeSpec& L, const DivisorClass& c);
std::string coordinate_name(const LatticeSpec& L, const DivisorClass& c);
DivisorClass parse_class(const LatticeSpec& L, const std::string& text);
Configuration parse_configuration(const LatticeSpec& L, const std::vector<std::string>& names);
std::string configuration_str(const LatticeSpec& L, const Configuration& c);

// All classes C with C^2 = s and (-K).C = k.  B(r) with r <= 8 or any P(r).
std::vector<DivisorClass> enumerate_classes(const LatticeSpec& L, int s, int k);

// Throws LatticeError unless every element is a (-2)-class orthogonal to K
// and pairwise products lie in {0, 1}.
void validate_configuration(const LatticeSpec& L, const Configuration& c);

std::vector<DivisorClass> two_set(const LatticeSpec& L, const Configuration& c);
std::vector<DivisorClass> one_set(const LatticeSpec& L, const Configuration& c);

struct DynkinType {
    // (letter, rank) per connected component, sorted E > D > A then by rank.
    std::vector<std::pair<char, int>> parts;
    std::vector<std::vector<std::size_t>> components;  // indices into the configuration
    std::string str() const;
};
DynkinType dynkin_type(const LatticeSpec& L, const Configuration& c);

// Isometry stored by the images of the basis vectors.
struct Isometry {
    std::vector<DivisorClass> images;
    DivisorClass apply(const DivisorClass& v) const;
    Isometry then(const Isometry& next) const;  // next after this
    bool operator<(const Isometry& o) const { return images < o.images; }
    bool operator==(const Isometry& o) const { return images == o.images; }
};
Isometry identity_isometry(const LatticeSpec& L);
Isometry reflection(const LatticeSpec& L, const DivisorClass& root);
bool is_isometry(const LatticeSpec& L, const Isometry& g);

// Closure of the reflections in the (-2)-classes orthogonal to K.  B(r), r <= 5.
const std::vector<Isometry>& weyl_group(const LatticeSpec& L);

Configuration image(const Isometry& g, const Configuration& c);
Configuration sorted_configuration(Configuration c);
// Lexicographically least image under the Weyl group.
Configuration canonical_form(const LatticeSpec& L, const Configuration& c);

// Representatives of the sixteen root-configuration classes of B(5), indexed 16..31.
const std::map<int, std::vector<std::string>>& configuration_table();
const std::map<int, std::string>& configuration_dynkin_table();
int canonical_configuration(const Configuration& c);

// Real structures 10..15 of B(5).
Isometry real_structure(int ri);
const std::vector<int>& real_structure_indices();
bool is_stable(const Isometry& sigma, const Configuration& c);
std::vector<DivisorClass> real_two_set(const Configuration& c, int ri);

}  // namespace celestial
