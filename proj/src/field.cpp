#include "celestial/field.hpp"

#include <sstream>

namespace celestial {

Domain Domain::quad(long m) {
    if (m < 2 || !is_squarefree(m))
        throw DomainError("sqrt(" + std::to_string(m) + ") needs a squarefree integer >= 2");
    return {QUAD, m};
}

std::string Domain::str() const {
    switch (kind) {
        case RATIONAL: return "rational";
        case GAUSSIAN: return "gaussian";
        default: return "quad:" + std::to_string(m);
    }
}

Domain Domain::parse(const std::string& text) {
    if (text == "rational") return rational();
    if (text == "gaussian") return gaussian();
    if (text.rfind("quad:", 0) == 0) {
        std::size_t used = 0;
        long m = 0;
        try {
            m = std::stol(text.substr(5), &used);
        } catch (const std::exception&) {
            throw DomainError("bad domain '" + text + "'");
        }
        if (used + 5 != text.size()) throw DomainError("bad domain '" + text + "'");
        return quad(m);
    }
    throw DomainError("unknown domain '" + text + "' (expected rational, gaussian or quad:m)");
}

Domain join(const Domain& a, const Domain& b) {
    if (a.kind == Domain::QUAD && b.kind == Domain::QUAD) {
        if (a.m != b.m)
            throw DomainError("cannot mix sqrt(" + std::to_string(a.m) + ") and sqrt(" +
                              std::to_string(b.m) + ")");
        return a;
    }
    if (a.kind == Domain::QUAD) return a;
    if (b.kind == Domain::QUAD) return b;
    return a.kind >= b.kind ? a : b;
}

bool is_squarefree(long m) {
    if (m < 1) return false;
    for (long p = 2; p * p <= m; ++p)
        if (m % (p * p) == 0) return false;
    return true;
}

FieldElement::FieldElement(Rational re, Rational im, Domain d)
    : re_(std::move(re)), im_(std::move(im)), dom_(d) {
    re_.canonicalize();
    im_.canonicalize();
    if (sgn(im_) != 0 && !dom_.allows_i()) throw DomainError("imaginary unit outside a Gaussian domain");
}

FieldElement::FieldElement(Rational re, Rational im, Rational sre, Rational sim, Domain d)
    : re_(std::move(re)), im_(std::move(im)), sre_(std::move(sre)), sim_(std::move(sim)), dom_(d) {
    re_.canonicalize();
    im_.canonicalize();
    sre_.canonicalize();
    sim_.canonicalize();
    if (sgn(im_) != 0 && !dom_.allows_i()) throw DomainError("imaginary unit outside a Gaussian domain");
    if ((sgn(sre_) != 0 || sgn(sim_) != 0) && dom_.kind != Domain::QUAD)
        throw DomainError("square root outside a quadratic domain");
}

FieldElement FieldElement::i_unit() { return FieldElement(0, 1, Domain::gaussian()); }

FieldElement FieldElement::sqrt_of(long m) { return FieldElement(0, 0, 1, 0, Domain::quad(m)); }

FieldElement FieldElement::promoted(const Domain& d) const {
    FieldElement r = *this;
    r.dom_ = join(dom_, d);
    if (r.dom_ != d) throw DomainError("cannot demote " + dom_.str() + " to " + d.str());
    return r;
}

void FieldElement::adopt(const Domain& other) { dom_ = join(dom_, other); }

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    r.re_ = -r.re_;
    r.im_ = -r.im_;
    r.sre_ = -r.sre_;
    r.sim_ = -r.sim_;
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    adopt(o.dom_);
    re_ += o.re_;
    im_ += o.im_;
    sre_ += o.sre_;
    sim_ += o.sim_;
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    adopt(o.dom_);
    re_ -= o.re_;
    im_ -= o.im_;
    sre_ -= o.sre_;
    sim_ -= o.sim_;
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    adopt(o.dom_);
    if (is_rational() && o.is_rational()) {
        re_ *= o.re_;
        return *this;
    }
    // (u1 + v1 r)(u2 + v2 r) = u1 u2 + m v1 v2 + (u1 v2 + v1 u2) r, with u, v Gaussian
    auto gmul = [](const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                   Rational& outr, Rational& outi) {
        outr = a * c - b * d;
        outi = a * d + b * c;
    };
    Rational uur, uui, vvr, vvi, uvr, uvi, vur, vui;
    gmul(re_, im_, o.re_, o.im_, uur, uui);
    gmul(sre_, sim_, o.sre_, o.sim_, vvr, vvi);
    gmul(re_, im_, o.sre_, o.sim_, uvr, uvi);
    gmul(sre_, sim_, o.re_, o.im_, vur, vui);
    const long mm = m();
    re_ = uur + mm * vvr;
    im_ = uui + mm * vvi;
    sre_ = uvr + vur;
    sim_ = uvi + vui;
    return *this;
}

FieldElement FieldElement::conj() const {
    FieldElement r = *this;
    r.im_ = -r.im_;
    r.sim_ = -r.sim_;
    return r;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (is_rational()) {
        FieldElement r = *this;
        r.re_ = 1 / re_;
        return r;
    }
    // Multiply by the sqrt-conjugate to land in Q(i), then by the complex conjugate to land in Q.
    FieldElement sconj = *this;
    sconj.sre_ = -sconj.sre_;
    sconj.sim_ = -sconj.sim_;
    FieldElement n = *this * sconj;  // Gaussian
    Rational norm = n.re_ * n.re_ + n.im_ * n.im_;
    FieldElement ninv(n.re_ / norm, -n.im_ / norm, Domain::gaussian());
    FieldElement r = sconj * ninv;
    r.dom_ = dom_;
    return r;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
    Domain d = join(dom_, o.dom_);
    *this *= o.inverse();
    dom_ = d;
    return *this;
}

FieldElement FieldElement::pow(unsigned e) const {
    FieldElement base = *this, acc(1);
    acc.dom_ = dom_;
    while (e) {
        if (e & 1u) acc *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (re_ != o.re_ || im_ != o.im_) return false;
    const bool s1 = sgn(sre_) != 0 || sgn(sim_) != 0;
    const bool s2 = sgn(o.sre_) != 0 || sgn(o.sim_) != 0;
    if (!s1 && !s2) return true;
    return m() == o.m() && sre_ == o.sre_ && sim_ == o.sim_;
}

std::string rational_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

// Gaussian part a + b*i.  `bare` reports whether the text is a single signed atom.
std::string gaussian_str(const Rational& a, const Rational& b, bool& bare) {
    if (sgn(b) == 0) {
        bare = true;
        return rational_str(a);
    }
    std::string imag;
    Rational ab = abs(b);
    imag = (ab == 1) ? "i" : rational_str(ab) + "*i";
    if (sgn(a) == 0) {
        bare = true;
        return (sgn(b) < 0 ? "-" : "") + imag;
    }
    bare = false;
    return "(" + rational_str(a) + (sgn(b) < 0 ? "-" : "+") + imag + ")";
}

}  // namespace

std::string FieldElement::str(bool* bare) const {
    bool ubare = true, vbare = true;
    if (sgn(sre_) == 0 && sgn(sim_) == 0) {
        std::string s = gaussian_str(re_, im_, ubare);
        if (bare) *bare = ubare;
        return s;
    }
    std::string root = "sqrt(" + std::to_string(m()) + ")";
    std::string v;
    if (sgn(sim_) == 0 && abs(sre_) == 1) {
        v = (sgn(sre_) < 0 ? "-" : "") + root;
    } else {
        v = gaussian_str(sre_, sim_, vbare) + "*" + root;
    }
    if (sgn(re_) == 0 && sgn(im_) == 0) {
        if (bare) *bare = true;
        return v;
    }
    std::string u = gaussian_str(re_, im_, ubare);
    if (bare) *bare = false;
    if (v[0] == '-') return "(" + u + v + ")";
    return "(" + u + "+" + v + ")";
}

}  // namespace celestial
