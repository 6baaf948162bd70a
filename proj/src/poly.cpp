#include "celestial/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace celestial {

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly::MultiPoly(std::vector<std::string> vars, Domain dom) : vars_(std::move(vars)), dom_(dom) {}

MultiPoly MultiPoly::constant(const std::vector<std::string>& vars, const FieldElement& c, Domain dom) {
    MultiPoly p(vars, join(dom, c.domain()));
    p.add_term(Exponents(vars.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(const std::vector<std::string>& vars, const std::string& name, Domain dom) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw UnknownVariable(name);
    return variable(vars, static_cast<std::size_t>(it - vars.begin()), dom);
}

MultiPoly MultiPoly::variable(const std::vector<std::string>& vars, std::size_t index, Domain dom) {
    MultiPoly p(vars, dom);
    Exponents e(vars.size(), 0);
    e.at(index) = 1;
    p.add_term(e, FieldElement(1));
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

int MultiPoly::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.begin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

int MultiPoly::degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

int MultiPoly::min_degree_in(std::size_t var) const {
    if (terms_.empty()) return 0;
    int d = terms_.begin()->first[var];
    for (const auto& [e, c] : terms_) d = std::min(d, e[var]);
    return d;
}

bool MultiPoly::is_homogeneous() const {
    int d = total_degree();
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
    return true;
}

const Exponents& MultiPoly::leading_exponents() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
    return terms_.begin()->first;
}

const FieldElement& MultiPoly::leading_coefficient() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
    return terms_.begin()->second;
}

FieldElement MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? FieldElement(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const FieldElement& c) {
    if (e.size() != vars_.size()) throw std::invalid_argument("exponent length does not match variables");
    if (c.is_zero()) return;
    dom_ = join(dom_, c.domain());
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::set_domain(const Domain& d) {
    for (auto& [e, c] : terms_) c = c.promoted(join(c.domain(), d));
    dom_ = join(dom_, d);
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("polynomials over different variable lists");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (vars_.empty() && terms_.empty() && !o.vars_.empty()) vars_ = o.vars_;
    check_compatible(o);
    dom_ = join(dom_, o.dom_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (vars_.empty() && terms_.empty() && !o.vars_.empty()) vars_ = o.vars_;
    check_compatible(o);
    dom_ = join(dom_, o.dom_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly r(a.vars_, join(a.dom_, b.dom_));
    Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const FieldElement& c) {
    dom_ = join(dom_, c.domain());
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, k] : terms_) k *= c;
    return *this;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly acc = constant(vars_, FieldElement(1), dom_);
    MultiPoly base = *this;
    while (e) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return acc;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (vars_ != o.vars_ || terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (const auto& [e, c] : terms_) {
        if (e != it->first || c != it->second) return false;
        ++it;
    }
    return true;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    MultiPoly r(vars_, dom_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents f = e;
        f[var] -= 1;
        r.add_term(f, c * FieldElement(e[var]));
    }
    return r;
}

FieldElement MultiPoly::evaluate(const std::vector<FieldElement>& point) const {
    if (point.size() != vars_.size()) throw std::invalid_argument("point dimension mismatch");
    FieldElement acc(0);
    for (const auto& [e, c] : terms_) {
        FieldElement t = c;
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k]) t *= point[k].pow(static_cast<unsigned>(e[k]));
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::monic() const {
    if (terms_.empty()) return *this;
    MultiPoly r = *this;
    FieldElement inv = leading_coefficient().inverse();
    r *= inv;
    r.dom_ = dom_;
    return r;
}

MultiPoly MultiPoly::reembed(const std::vector<std::string>& vars) const {
    std::vector<int> where(vars_.size(), -1);
    for (std::size_t k = 0; k < vars_.size(); ++k) {
        auto it = std::find(vars.begin(), vars.end(), vars_[k]);
        if (it != vars.end()) where[k] = static_cast<int>(it - vars.begin());
    }
    MultiPoly r(vars, dom_);
    for (const auto& [e, c] : terms_) {
        Exponents f(vars.size(), 0);
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (where[k] < 0) throw UnknownVariable(vars_[k]);
            f[where[k]] += e[k];
        }
        r.add_term(f, c);
    }
    return r;
}

MultiPoly MultiPoly::homogenized(const std::string& var, int degree) const {
    int v = var_index(var);
    std::vector<std::string> vars = vars_;
    if (v < 0) {
        vars.push_back(var);
        v = static_cast<int>(vars.size()) - 1;
    }
    MultiPoly base = v < static_cast<int>(vars_.size()) ? *this : reembed(vars);
    int d = degree < 0 ? base.total_degree() : degree;
    MultiPoly r(vars, dom_);
    for (const auto& [e, c] : base.terms_) {
        Exponents f = e;
        int td = std::accumulate(e.begin(), e.end(), 0);
        if (td > d) throw std::invalid_argument("term degree exceeds homogenization degree");
        f[v] += d - td;
        r.add_term(f, c);
    }
    return r;
}

MultiPoly MultiPoly::conj() const {
    MultiPoly r(vars_, dom_);
    for (const auto& [e, c] : terms_) r.add_term(e, c.conj());
    return r;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[k];
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        bool bare = true;
        std::string cs = c.str(&bare);
        bool negative = bare && cs[0] == '-';
        if (negative) cs = cs.substr(1);
        std::string term;
        if (mono.empty()) {
            term = cs;
        } else if (cs == "1") {
            term = mono;
        } else {
            term = cs + "*" + mono;
        }
        if (first) {
            out = (negative ? "-" : "") + term;
        } else {
            out += (negative ? "-" : "+") + term;
        }
        first = false;
    }
    return out;
}

bool proportional(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.vars() != b.vars() || a.size() != b.size()) return false;
    if (a.leading_exponents() != b.leading_exponents()) return false;
    FieldElement lambda = a.leading_coefficient() / b.leading_coefficient();
    auto it = b.terms().begin();
    for (const auto& [e, c] : a.terms()) {
        if (e != it->first || c != lambda * it->second) return false;
        ++it;
    }
    return true;
}

// ---------------------------------------------------------------- parser

ParseError::ParseError(const std::string& msg, std::size_t position)
    : std::invalid_argument("parse error at position " + std::to_string(position) + ": " + msg),
      pos_(position) {}

UnknownVariable::UnknownVariable(const std::string& name)
    : std::invalid_argument("unknown variable '" + name + "'") {}

namespace {

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& vars, Domain dom)
        : s_(text), vars_(vars), dom_(dom) {}

    MultiPoly run() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("empty expression", pos_);
        MultiPoly p = expr();
        skip();
        if (pos_ < s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return p;
    }

private:
    const std::string& s_;
    const std::vector<std::string>& vars_;
    Domain dom_;
    std::size_t pos_ = 0;

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    MultiPoly constant(const FieldElement& c) const { return MultiPoly::constant(vars_, c, dom_); }

    MultiPoly expr() {
        MultiPoly acc = term();
        for (;;) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else return acc;
        }
    }

    MultiPoly term() {
        MultiPoly acc = unary();
        for (;;) {
            skip();
            if (accept('*')) {
                acc = acc * unary();
                continue;
            }
            // Juxtaposition such as "2x" or "x y" is rejected rather than guessed.
            if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '('))
                throw ParseError("implicit multiplication is not supported, use '*'", pos_);
            return acc;
        }
    }

    MultiPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    MultiPoly power() {
        MultiPoly base = primary();
        if (accept('^')) {
            skip();
            std::size_t start = pos_;
            if (pos_ < s_.size() && s_[pos_] == '-') throw ParseError("negative exponent", pos_);
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) throw ParseError("expected a nonnegative integer exponent", start);
            unsigned long e = std::stoul(s_.substr(start, pos_ - start));
            if (e > 4096) throw ParseError("exponent too large", start);
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Rational integer_literal() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return Rational(s_.substr(start, pos_ - start));
    }

    MultiPoly primary() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char ch = s_[pos_];
        if (ch == '(') {
            ++pos_;
            MultiPoly inner = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            Rational q = integer_literal();
            // "p/q" is a literal, not a division operator.
            std::size_t save = pos_;
            skip();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                skip();
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    throw ParseError("expected an integer denominator", pos_);
                std::size_t dpos = pos_;
                Rational den = integer_literal();
                if (sgn(den) == 0) throw ParseError("zero denominator", dpos);
                q /= den;
                q.canonicalize();
            } else {
                pos_ = save;
            }
            return constant(FieldElement(q));
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (name == "i") {
                if (!dom_.allows_i()) throw DomainError("'i' is not available over the rational domain");
                return constant(FieldElement::i_unit());
            }
            if (name == "sqrt") {
                if (!accept('(')) throw ParseError("expected '(' after sqrt", pos_);
                skip();
                std::size_t apos = pos_;
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    throw ParseError("sqrt takes a positive integer literal", apos);
                Rational m = integer_literal();
                if (!accept(')')) throw ParseError("expected ')'", pos_);
                if (!m.get_num().fits_slong_p()) throw DomainError("sqrt argument too large");
                long mv = m.get_num().get_si();
                Domain need = Domain::quad(mv);  // rejects m < 2 and non-squarefree m
                if (dom_.kind != Domain::QUAD || dom_.m != mv)
                    throw DomainError("sqrt(" + std::to_string(mv) + ") is not available over " + dom_.str());
                return constant(FieldElement::sqrt_of(need.m));
            }
            auto it = std::find(vars_.begin(), vars_.end(), name);
            if (it == vars_.end()) throw UnknownVariable(name);
            return MultiPoly::variable(vars_, static_cast<std::size_t>(it - vars_.begin()), dom_);
        }
        throw ParseError(std::string("unexpected '") + ch + "'", pos_);
    }
};

}  // namespace

MultiPoly parse_expression(const std::string& text, const std::vector<std::string>& vars, Domain dom) {
    return Parser(text, vars, dom).run();
}

// ------------------------------------------------------------ operations

MultiPoly substitute(const MultiPoly& p, const std::vector<MultiPoly>& components) {
    if (components.size() != p.nvars()) throw std::invalid_argument("substitution arity mismatch");
    if (components.empty()) return p;
    const auto& tv = components.front().vars();
    Domain dom = p.domain();
    for (const auto& c : components) {
        if (c.vars() != tv) throw std::invalid_argument("substitution components over different variables");
        dom = join(dom, c.domain());
    }
    // Powers of each component are cached; the exponent range is small in practice.
    std::vector<std::vector<MultiPoly>> powers(components.size());
    for (std::size_t k = 0; k < components.size(); ++k) {
        int d = std::max(p.degree_in(k), 0);
        powers[k].reserve(d + 1);
        powers[k].push_back(MultiPoly::constant(tv, FieldElement(1), dom));
        for (int j = 1; j <= d; ++j) powers[k].push_back(powers[k].back() * components[k]);
    }
    MultiPoly out(tv, dom);
    for (const auto& [e, c] : p.terms()) {
        MultiPoly t = MultiPoly::constant(tv, c, dom);
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k]) t = t * powers[k][e[k]];
        out += t;
    }
    return out;
}

MultiPoly substitute(const MultiPoly& p, const RationalMap& map) {
    MultiPoly q = p.vars() == map.target ? p : p.reembed(map.target);
    return substitute(q, map.components);
}

RationalMap compose(const RationalMap& outer, const RationalMap& inner) {
    if (outer.source != inner.target) throw std::invalid_argument("maps do not compose");
    RationalMap r{inner.source, outer.target, {}};
    for (const auto& c : outer.components) r.components.push_back(substitute(c, inner.components));
    return r;
}

std::optional<MultiPoly> trial_divide(const MultiPoly& p, const MultiPoly& d) {
    if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (p.vars() != d.vars()) throw std::invalid_argument("polynomials over different variable lists");
    MultiPoly rem = p;
    MultiPoly quo(p.vars(), join(p.domain(), d.domain()));
    const Exponents& ld = d.leading_exponents();
    FieldElement lcinv = d.leading_coefficient().inverse();
    Exponents t(ld.size());
    while (!rem.is_zero()) {
        const Exponents& lr = rem.leading_exponents();
        for (std::size_t k = 0; k < t.size(); ++k) {
            t[k] = lr[k] - ld[k];
            // If d divides p then every intermediate remainder is a multiple of d,
            // so its leading monomial is divisible by that of d.
            if (t[k] < 0) return std::nullopt;
        }
        FieldElement c = rem.leading_coefficient() * lcinv;
        MultiPoly mono(p.vars(), quo.domain());
        mono.add_term(t, c);
        quo.add_term(t, c);
        rem -= mono * d;
    }
    return quo;
}

std::vector<MultiPoly> gradient(const MultiPoly& p) {
    std::vector<MultiPoly> g;
    g.reserve(p.nvars());
    for (std::size_t k = 0; k < p.nvars(); ++k) g.push_back(p.derivative(k));
    return g;
}

PrimitiveResult primitive_part(const MultiPoly& p, const std::vector<MultiPoly>& candidates) {
    if (p.is_zero()) throw std::domain_error("primitive part of the zero polynomial");
    PrimitiveResult r{p, std::vector<int>(candidates.size(), 0)};
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        if (candidates[k].is_constant()) continue;
        for (;;) {
            auto q = trial_divide(r.residue, candidates[k].vars() == r.residue.vars()
                                                 ? candidates[k]
                                                 : candidates[k].reembed(r.residue.vars()));
            if (!q) break;
            r.residue = std::move(*q);
            ++r.multiplicities[k];
        }
    }
    r.residue = r.residue.monic();
    return r;
}

}  // namespace celestial
