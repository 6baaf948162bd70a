#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace celestial {

using Rational = mpq_class;

// Q, Q(i), or Q(i)(sqrt m).  Every element lives in the largest of these,
// the kind only records how much of it the context is allowed to use.
struct Domain {
    enum Kind { RATIONAL = 0, GAUSSIAN = 1, QUAD = 2 };
    Kind kind = RATIONAL;
    long m = 0;  // only meaningful for QUAD

    static Domain rational() { return {RATIONAL, 0}; }
    static Domain gaussian() { return {GAUSSIAN, 0}; }
    static Domain quad(long m);

    bool allows_i() const { return kind != RATIONAL; }
    bool operator==(const Domain& o) const { return kind == o.kind && (kind != QUAD || m == o.m); }
    bool operator!=(const Domain& o) const { return !(*this == o); }
    std::string str() const;
    // "rational", "gaussian", "quad:6"
    static Domain parse(const std::string& text);
};

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Smallest domain containing both; throws DomainError for Q(sqrt m) vs Q(sqrt m'), m != m'.
Domain join(const Domain& a, const Domain& b);

bool is_squarefree(long m);

// (re + im*i) + (sre + sim*i)*sqrt(m)
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(long v) : re_(v) {}  // NOLINT: implicit integer literals are convenient
    FieldElement(const Rational& v) : re_(v) { re_.canonicalize(); }  // NOLINT
    FieldElement(Rational re, Rational im, Domain d = Domain::gaussian());
    FieldElement(Rational re, Rational im, Rational sre, Rational sim, Domain d);

    static FieldElement i_unit();
    static FieldElement sqrt_of(long m);  // sqrt(m) in Q(i)(sqrt m)

    const Domain& domain() const { return dom_; }
    // Re-tag into a larger domain.  Throws if the value does not fit.
    FieldElement promoted(const Domain& d) const;

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    const Rational& sre() const { return sre_; }
    const Rational& sim() const { return sim_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0 && sgn(sre_) == 0 && sgn(sim_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0 && sgn(sre_) == 0 && sgn(sim_) == 0; }
    bool is_rational() const { return sgn(im_) == 0 && sgn(sre_) == 0 && sgn(sim_) == 0; }

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);
    FieldElement inverse() const;
    FieldElement pow(unsigned e) const;
    // Complex conjugation i -> -i (sqrt m is real and fixed).
    FieldElement conj() const;

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    // Canonical text: "3/2", "(1/2+3*i)", "(2+3*sqrt(6))", "((1+i)+(2-i)*sqrt(6))".
    // `bare` is true when the text carries no enclosing parentheses.
    std::string str(bool* bare = nullptr) const;

private:
    Rational re_, im_, sre_, sim_;
    Domain dom_{};
    long m() const { return dom_.kind == Domain::QUAD ? dom_.m : 0; }
    void adopt(const Domain& other);
};

std::string rational_str(const Rational& q);

}  // namespace celestial
