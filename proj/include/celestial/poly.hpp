#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "celestial/field.hpp"

namespace celestial {

using Exponents = std::vector<int>;

// Graded lex: higher total degree first, ties broken by the first variable.
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

class MultiPoly {
public:
    using TermMap = std::map<Exponents, FieldElement, GrlexGreater>;

    MultiPoly() = default;
    MultiPoly(std::vector<std::string> vars, Domain dom);

    static MultiPoly constant(const std::vector<std::string>& vars, const FieldElement& c,
                              Domain dom = Domain::rational());
    static MultiPoly variable(const std::vector<std::string>& vars, const std::string& name,
                              Domain dom = Domain::rational());
    static MultiPoly variable(const std::vector<std::string>& vars, std::size_t index,
                              Domain dom = Domain::rational());

    const std::vector<std::string>& vars() const { return vars_; }
    const Domain& domain() const { return dom_; }
    const TermMap& terms() const { return terms_; }
    std::size_t nvars() const { return vars_.size(); }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int var_index(const std::string& name) const;  // -1 if absent

    int total_degree() const;  // -1 for the zero polynomial
    int degree_in(std::size_t var) const;
    int min_degree_in(std::size_t var) const;
    bool is_homogeneous() const;

    const Exponents& leading_exponents() const;
    const FieldElement& leading_coefficient() const;
    FieldElement coefficient(const Exponents& e) const;

    void add_term(const Exponents& e, const FieldElement& c);
    void set_domain(const Domain& d);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const FieldElement& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const FieldElement& c) { return a *= c; }
    friend MultiPoly operator*(const FieldElement& c, MultiPoly a) { return a *= c; }
    MultiPoly pow(unsigned e) const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly derivative(std::size_t var) const;
    FieldElement evaluate(const std::vector<FieldElement>& point) const;
    // Leading coefficient scaled to 1 (zero stays zero).
    MultiPoly monic() const;
    // Same polynomial read over another variable list (by name).  Variables
    // that do not occur in `vars` must not appear with nonzero exponent.
    MultiPoly reembed(const std::vector<std::string>& vars) const;
    // Multiply each term by a power of `var` up to total degree `degree`.
    MultiPoly homogenized(const std::string& var, int degree = -1) const;
    // Complex conjugate of every coefficient.
    MultiPoly conj() const;

    std::string str() const;

private:
    std::vector<std::string> vars_;
    Domain dom_{};
    TermMap terms_;
    void check_compatible(const MultiPoly& o) const;
};

// True iff a = lambda*b for a nonzero scalar lambda (both zero counts as equal).
bool proportional(const MultiPoly& a, const MultiPoly& b);

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& msg, std::size_t position);
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

class UnknownVariable : public std::invalid_argument {
public:
    explicit UnknownVariable(const std::string& name);
};

MultiPoly parse_expression(const std::string& text, const std::vector<std::string>& vars,
                           Domain dom = Domain::rational());

// A polynomial map: components are polynomials in `source` variables.
struct RationalMap {
    std::vector<std::string> source;
    std::vector<std::string> target;
    std::vector<MultiPoly> components;
};

// p(components), a polynomial in the components' variables.
MultiPoly substitute(const MultiPoly& p, const std::vector<MultiPoly>& components);
MultiPoly substitute(const MultiPoly& p, const RationalMap& map);
// map_outer after map_inner: x -> outer(inner(x)).
RationalMap compose(const RationalMap& outer, const RationalMap& inner);

// Exact quotient p/d when d divides p, otherwise nothing.
std::optional<MultiPoly> trial_divide(const MultiPoly& p, const MultiPoly& d);
std::vector<MultiPoly> gradient(const MultiPoly& p);

struct PrimitiveResult {
    MultiPoly residue;                 // monic
    std::vector<int> multiplicities;   // aligned with candidates
};
PrimitiveResult primitive_part(const MultiPoly& p, const std::vector<MultiPoly>& candidates);

}  // namespace celestial
