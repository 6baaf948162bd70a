#include "celestial/moebius.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "celestial/linalg.hpp"

namespace celestial {

const std::vector<std::string>& space_vars() {
    static const std::vector<std::string> v{"x", "y", "z", "w"};
    return v;
}

const std::vector<std::string>& sphere_vars() {
    static const std::vector<std::string> v{"a", "b", "c", "d", "e"};
    return v;
}

const std::vector<std::string>& curve_vars() {
    static const std::vector<std::string> v{"s", "t"};
    return v;
}

namespace {

MultiPoly sv(std::size_t k) { return MultiPoly::variable(space_vars(), k); }
MultiPoly pv(std::size_t k) { return MultiPoly::variable(sphere_vars(), k); }
MultiPoly space_sum_squares() { return sv(0) * sv(0) + sv(1) * sv(1) + sv(2) * sv(2); }

MultiPoly in_space(const MultiPoly& p) { return p.vars() == space_vars() ? p : p.reembed(space_vars()); }

FieldElement linear_coefficient(const MultiPoly& p, std::size_t k) {
    Exponents e(p.nvars(), 0);
    e[k] = 1;
    return p.coefficient(e);
}

// ---- univariate helpers for binary forms; coefficients low to high

using Uni = std::vector<FieldElement>;

void trim(Uni& u) {
    while (!u.empty() && u.back().is_zero()) u.pop_back();
}

Uni uni_mod(Uni a, const Uni& b) {
    trim(a);
    FieldElement inv = b.back().inverse();
    while (a.size() >= b.size()) {
        FieldElement q = a.back() * inv;
        std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= q * b[k];
        a.pop_back();
        trim(a);
    }
    return a;
}

Uni uni_gcd(Uni a, Uni b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Uni r = uni_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        FieldElement inv = a.back().inverse();
        for (auto& c : a) c *= inv;
    }
    return a;
}

// f(s, 1) for a binary form f in (s, t).
Uni dehomogenize(const MultiPoly& f) {
    Uni u(static_cast<std::size_t>(std::max(f.total_degree(), 0)) + 1);
    for (const auto& [e, c] : f.terms()) u[e[0]] += c;
    trim(u);
    return u;
}

MultiPoly homogenize(const Uni& u, int t_power, const std::vector<std::string>& vars, Domain dom) {
    MultiPoly out(vars, dom);
    int n = static_cast<int>(u.size()) - 1;
    for (int i = 0; i <= n; ++i)
        if (!u[i].is_zero()) out.add_term({i, n - i + t_power}, u[i]);
    return out;
}

FieldElement quad_coef(const MultiPoly& q, int i) { return q.coefficient({2 - i, i}); }

FieldElement binary_discriminant(const MultiPoly& q) {
    FieldElement A = quad_coef(q, 0), B = quad_coef(q, 1), C = quad_coef(q, 2);
    return B * B - FieldElement(4) * A * C;
}

FieldElement binary_resultant(const MultiPoly& p, const MultiPoly& q) {
    FieldElement A1 = quad_coef(p, 0), B1 = quad_coef(p, 1), C1 = quad_coef(p, 2);
    FieldElement A2 = quad_coef(q, 0), B2 = quad_coef(q, 1), C2 = quad_coef(q, 2);
    FieldElement u = A1 * C2 - A2 * C1;
    return u * u - (A1 * B2 - A2 * B1) * (B1 * C2 - B2 * C1);
}

// Coefficient matrix of binary forms of degree n (rows = forms, columns = s^(n-i) t^i).
Matrix coefficient_matrix(const std::vector<MultiPoly>& forms, int n) {
    Matrix m;
    for (const auto& f : forms) {
        std::vector<FieldElement> row;
        for (int i = 0; i <= n; ++i) row.push_back(f.coefficient({n - i, i}));
        m.push_back(std::move(row));
    }
    return m;
}

}  // namespace

MultiPoly sphere_equation() { return pv(0) * pv(0) + pv(1) * pv(1) + pv(2) * pv(2) + pv(3) * pv(3) - pv(4) * pv(4); }

MultiPoly parse_space(const std::string& text, Domain dom) { return parse_expression(text, space_vars(), dom); }
MultiPoly parse_sphere(const std::string& text, Domain dom) { return parse_expression(text, sphere_vars(), dom); }

RationalMap stereographic_inverse() {
    MultiPoly two = MultiPoly::constant(space_vars(), FieldElement(2));
    MultiPoly w = sv(3), sig = space_sum_squares();
    return {space_vars(), sphere_vars(),
            {two * w * sv(0), two * w * sv(1), two * w * sv(2), sig - w * w, sig + w * w}};
}

RationalMap stereographic() {
    return {sphere_vars(), space_vars(), {pv(0), pv(1), pv(2), pv(4) - pv(3)}};
}

// ---------------------------------------------------------------- maps

MapGenerator MapGenerator::inverse() const {
    MapGenerator g = *this;
    if (kind == F) g.kind = FINV;
    else if (kind == FINV) g.kind = F;
    else if (kind == TRANSLATE)
        for (auto& v : g.shift) v = -v;
    return g;
}

std::string MapGenerator::str() const {
    switch (kind) {
        case F: return "f";
        case FINV: return "finv";
        case BETA: return "b" + std::to_string(beta);
        case TRANSLATE: {
            std::string s = "t(";
            for (std::size_t k = 0; k < shift.size(); ++k) s += (k ? "," : "") + rational_str(shift[k]);
            return s + ")";
        }
    }
    return "?";
}

MoebiusMap::MoebiusMap(std::vector<MapGenerator> word, std::string name)
    : name_(std::move(name)), word_(std::move(word)) {
    compile();
}

namespace {

MapGenerator translate(long a, long b, long c) {
    MapGenerator g;
    g.kind = MapGenerator::TRANSLATE;
    g.shift = {Rational(a), Rational(b), Rational(c)};
    return g;
}

MapGenerator gen(MapGenerator::Kind k, int beta = 0) {
    MapGenerator g;
    g.kind = k;
    g.beta = beta;
    return g;
}

std::vector<MapGenerator> conjugated_beta(int beta) {
    return {gen(MapGenerator::F), gen(MapGenerator::BETA, beta), gen(MapGenerator::FINV)};
}

std::string trimmed(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t"), b = s.find_last_not_of(" \t");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

MapGenerator parse_generator(const std::string& raw) {
    std::string tok = trimmed(raw);
    if (tok == "f") return gen(MapGenerator::F);
    if (tok == "finv" || tok == "f^-1" || tok == "f^{-1}") return gen(MapGenerator::FINV);
    for (int b = 0; b < 3; ++b)
        if (tok == "b" + std::to_string(b) || tok == "beta" + std::to_string(b)) return gen(MapGenerator::BETA, b);
    if (tok.size() > 3 && tok[0] == 't' && tok[1] == '(' && tok.back() == ')') {
        MapGenerator g;
        g.kind = MapGenerator::TRANSLATE;
        std::stringstream ss(tok.substr(2, tok.size() - 3));
        std::string part;
        while (std::getline(ss, part, ',')) {
            Rational q;
            try {
                q = Rational(trimmed(part));
            } catch (const std::invalid_argument&) {
                throw std::invalid_argument("bad translation component '" + part + "'");
            }
            q.canonicalize();
            g.shift.push_back(q);
        }
        if (g.shift.size() != 3) throw std::invalid_argument("translation needs three components: " + tok);
        return g;
    }
    throw std::invalid_argument("unknown map generator '" + tok + "'");
}

}  // namespace

const std::vector<std::string>& named_map_list() {
    static const std::vector<std::string> v{"mu0", "mu1", "mu2", "mu3", "mu4", "mu5", "mu6", "mu7", "mu8", "mu9"};
    return v;
}

MoebiusMap MoebiusMap::named(const std::string& name) {
    auto word = [](std::vector<MapGenerator> left, std::vector<MapGenerator> right) {
        left.insert(left.end(), right.begin(), right.end());
        return left;
    };
    std::vector<MapGenerator> w;
    if (name == "mu0") w = word({translate(-1, -1, -1)}, conjugated_beta(2));
    else if (name == "mu1") w = word({translate(0, 1, 0)}, conjugated_beta(1));
    else if (name == "mu2") w = word({translate(1, 1, 0)}, conjugated_beta(1));
    else if (name == "mu3") w = word({translate(0, 1, 1)}, conjugated_beta(0));
    else if (name == "mu4") w = word({translate(0, 1, 0)}, conjugated_beta(0));
    else if (name == "mu5") w = conjugated_beta(1);
    else if (name == "mu6") w = conjugated_beta(0);
    else if (name == "mu7") w = word(conjugated_beta(0), {translate(1, 0, 0)});
    else if (name == "mu8") w = word(conjugated_beta(1), {translate(1, 0, 0)});
    else if (name == "mu9") w = word(conjugated_beta(0), {translate(1, 1, 0)});
    else throw std::invalid_argument("unknown map '" + name + "' (expected mu0 .. mu9 or a word)");
    return MoebiusMap(std::move(w), name);
}

MoebiusMap MoebiusMap::parse(const std::string& text) {
    std::string s = trimmed(text);
    if (s.size() == 3 && s.rfind("mu", 0) == 0 && std::isdigit(static_cast<unsigned char>(s[2]))) return named(s);
    // Accept the composition sign as well as '*'.
    std::string norm;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s.compare(k, 3, "\xE2\x88\x98") == 0) {
            norm += '*';
            k += 2;
        } else {
            norm += s[k];
        }
    }
    std::vector<MapGenerator> w;
    std::stringstream ss(norm);
    std::string tok;
    while (std::getline(ss, tok, '*'))
        if (!trimmed(tok).empty()) w.push_back(parse_generator(tok));
    return MoebiusMap(std::move(w), s);
}

std::string MoebiusMap::word_str() const {
    if (word_.empty()) return "id";
    std::string s;
    for (std::size_t k = 0; k < word_.size(); ++k) s += (k ? "*" : "") + word_[k].str();
    return s;
}

MoebiusMap MoebiusMap::inverse() const {
    std::vector<MapGenerator> w;
    for (auto it = word_.rbegin(); it != word_.rend(); ++it) w.push_back(it->inverse());
    return MoebiusMap(std::move(w), name_.empty() ? "" : name_ + "^-1");
}

void MoebiusMap::compile() {
    enum Space { P3, P4 };
    Space space = P3;
    std::vector<MultiPoly> comps;
    for (std::size_t k = 0; k < 4; ++k) comps.push_back(sv(k));
    MultiPoly sig = space_sum_squares(), w2 = sv(3) * sv(3);
    std::vector<MultiPoly> cands{sv(3), sig, sig + w2, sig - w2};

    auto apply = [&](const std::vector<MultiPoly>& g) {
        std::vector<MultiPoly> next;
        for (const auto& c : g) next.push_back(substitute(c, comps));
        comps = std::move(next);
    };
    for (auto it = word_.rbegin(); it != word_.rend(); ++it) {
        const MapGenerator& g = *it;
        bool wants_p3 = g.kind == MapGenerator::FINV || g.kind == MapGenerator::TRANSLATE;
        if ((space == P3) != wants_p3)
            throw std::invalid_argument("map word '" + word_str() + "' does not compose (generator " + g.str() + ")");
        switch (g.kind) {
            case MapGenerator::FINV: {
                for (const MultiPoly& base : {sv(3), sig, sig + w2, sig - w2}) cands.push_back(substitute(base, comps));
                apply(stereographic_inverse().components);
                space = P4;
                break;
            }
            case MapGenerator::F:
                apply(stereographic().components);
                space = P3;
                break;
            case MapGenerator::BETA: {
                std::vector<MultiPoly> b{pv(0), pv(1), pv(2), pv(3), pv(4)};
                if (g.beta == 0) b[4] = -pv(4);
                else if (g.beta == 1) std::swap(b[2], b[3]);
                else if (g.beta == 2) b[3] = -pv(3);
                else throw std::invalid_argument("beta index must be 0, 1 or 2");
                apply(b);
                break;
            }
            case MapGenerator::TRANSLATE: {
                if (g.shift.size() != 3) throw std::invalid_argument("translation needs three components");
                std::vector<MultiPoly> t;
                for (std::size_t k = 0; k < 3; ++k)
                    t.push_back(sv(k) - MultiPoly::constant(space_vars(), FieldElement(g.shift[k])) * sv(3));
                t.push_back(sv(3));
                apply(t);
                break;
            }
        }
    }
    if (space != P3) throw std::invalid_argument("map word '" + word_str() + "' does not end in P^3");

    // Remove factors shared by every component (for instance the 2w of f*finv).
    cands.push_back(comps[3]);
    std::vector<MultiPoly> uniq;
    for (auto& c : cands) {
        if (c.is_zero() || c.is_constant()) continue;
        c = c.monic();
        if (std::none_of(uniq.begin(), uniq.end(), [&](const MultiPoly& u) { return u == c; })) uniq.push_back(c);
    }
    for (const auto& c : uniq) {
        for (;;) {
            std::vector<MultiPoly> next;
            for (const auto& comp : comps) {
                if (comp.is_zero()) {
                    next.push_back(comp);
                    continue;
                }
                auto q = trial_divide(comp, c);
                if (!q) break;
                next.push_back(*q);
            }
            if (next.size() != comps.size()) break;
            comps = std::move(next);
        }
    }
    forward_ = {space_vars(), space_vars(), comps};
    candidates_ = std::move(uniq);
}

// ------------------------------------------------------------ surfaces

int cyclicity(const MultiPoly& F) {
    MultiPoly G = in_space(F);
    if (G.is_zero()) throw std::invalid_argument("cyclicity of the zero polynomial");
    Domain gi = Domain::gaussian();
    MultiPoly s = MultiPoly::variable(curve_vars(), 0, gi), t = MultiPoly::variable(curve_vars(), 1, gi);
    MultiPoly i = MultiPoly::constant(curve_vars(), FieldElement::i_unit(), gi);
    // The absolute conic x^2+y^2+z^2 = w = 0.
    std::vector<MultiPoly> conic{s * s - t * t, i * (s * s + t * t),
                                 MultiPoly::constant(curve_vars(), FieldElement(2), gi) * s * t,
                                 MultiPoly(curve_vars(), gi)};
    // Partial derivatives of order k, indexed by nondecreasing variable sequences.
    std::vector<std::pair<std::size_t, MultiPoly>> layer{{0, G}};
    int c = 0;
    while (c <= G.total_degree()) {
        for (const auto& [_, p] : layer)
            if (!substitute(p, conic).is_zero()) return c;
        ++c;
        std::vector<std::pair<std::size_t, MultiPoly>> next;
        for (const auto& [first, p] : layer)
            for (std::size_t k = first; k < 4; ++k) {
                MultiPoly dp = p.derivative(k);
                if (!dp.is_zero()) next.emplace_back(k, std::move(dp));
            }
        layer = std::move(next);
    }
    return c;
}

SurfaceType surface_type(const MultiPoly& F) { return {F.total_degree(), cyclicity(F)}; }

MultiPoly reduce_mod_sphere(const MultiPoly& P) {
    MultiPoly q = P.vars() == sphere_vars() ? P : P.reembed(sphere_vars());
    MultiPoly r = pv(0) * pv(0) + pv(1) * pv(1) + pv(2) * pv(2) + pv(3) * pv(3);
    std::vector<MultiPoly> rpow{MultiPoly::constant(sphere_vars(), FieldElement(1))};
    MultiPoly out(sphere_vars(), q.domain());
    for (const auto& [e, c] : q.terms()) {
        int half = e[4] / 2;
        while (static_cast<int>(rpow.size()) <= half) rpow.push_back(rpow.back() * r);
        Exponents rest = e;
        rest[4] = e[4] % 2;
        MultiPoly mono(sphere_vars(), q.domain());
        mono.add_term(rest, c);
        out += mono * rpow[half];
    }
    return out;
}

std::string SphereSystem::str() const { return "S: " + sphere.str() + " = 0\nM: " + model.str() + " = 0"; }

bool congruent_mod_sphere(const MultiPoly& q1, const MultiPoly& q2) {
    return proportional(reduce_mod_sphere(q1), reduce_mod_sphere(q2));
}

namespace {

void monomials(std::size_t nvars, int degree, Exponents& cur, std::size_t pos, std::vector<Exponents>& out) {
    if (pos + 1 == nvars) {
        cur[pos] = degree;
        out.push_back(cur);
        return;
    }
    for (int k = degree; k >= 0; --k) {
        cur[pos] = k;
        monomials(nvars, degree - k, cur, pos + 1, out);
    }
}

}  // namespace

SphereSystem moebius_model(const MultiPoly& F) {
    MultiPoly G = in_space(F);
    int d = G.total_degree(), c = cyclicity(G);
    MultiPoly p0 = reduce_mod_sphere(substitute(G, stereographic()));
    MultiPoly factor = (pv(4) - pv(3)).pow(static_cast<unsigned>(c));

    // Unknown Q spans the normal-form monomials of degree d-c (e-degree at most one).
    std::vector<Exponents> basis;
    {
        std::vector<Exponents> all;
        Exponents cur(5, 0);
        monomials(5, d - c, cur, 0, all);
        for (auto& e : all)
            if (e[4] <= 1) basis.push_back(e);
    }
    std::vector<MultiPoly> images;
    std::map<Exponents, std::size_t, GrlexGreater> rows;
    auto row_of = [&](const Exponents& e) {
        auto it = rows.find(e);
        if (it != rows.end()) return it->second;
        std::size_t r = rows.size();
        rows.emplace(e, r);
        return r;
    };
    for (const auto& e : basis) {
        MultiPoly m(sphere_vars(), Domain::rational());
        m.add_term(e, FieldElement(1));
        images.push_back(reduce_mod_sphere(factor * m));
        for (const auto& [te, _] : images.back().terms()) row_of(te);
    }
    for (const auto& [te, _] : p0.terms()) row_of(te);

    Matrix m(rows.size(), std::vector<FieldElement>(basis.size()));
    std::vector<FieldElement> rhs(rows.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (const auto& [te, tc] : images[j].terms()) m[rows[te]][j] = tc;
    for (const auto& [te, tc] : p0.terms()) rhs[rows[te]] = tc;
    auto sol = solve(m, rhs);
    if (!sol)
        throw ConsistencyError("no model: F(a,b,c,e-d) is not divisible by (e-d)^" + std::to_string(c) +
                               " modulo S for F = " + G.str());
    MultiPoly q(sphere_vars(), p0.domain());
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (!(*sol)[j].is_zero()) q.add_term(basis[j], (*sol)[j]);
    return {sphere_equation(), q};
}

MultiPoly push_surface(const MoebiusMap& map, const MultiPoly& F) {
    MultiPoly G0 = in_space(F);
    MoebiusMap inv = map.inverse();
    MultiPoly pulled = substitute(G0, inv.forward());
    if (pulled.is_zero()) throw ConsistencyError("surface vanishes under the map: " + G0.str());
    MultiPoly G = primitive_part(pulled, inv.exceptional_candidates()).residue;
    if (G.is_constant()) throw ConsistencyError("surface collapses under the map: " + G0.str());
    MultiPoly back = substitute(G, map.forward());
    if (!trial_divide(back, G0))
        throw ConsistencyError("image does not pull back to the surface\n  surface: " + G0.str() +
                               "\n  image:   " + G.str());
    return G;
}

// ---------------------------------------------------------------- checks

bool verify_param(const MultiPoly& F, const std::vector<MultiPoly>& param) {
    return substitute(F, param).is_zero();
}

bool verify_singular_curve(const std::vector<MultiPoly>& system, const std::vector<MultiPoly>& param) {
    if (system.empty() || system.size() > 2)
        throw std::invalid_argument("singular curves are checked on one or two equations");
    std::vector<std::vector<MultiPoly>> grads;
    for (const auto& eq : system) {
        if (!substitute(eq, param).is_zero()) return false;
        std::vector<MultiPoly> g;
        for (const auto& p : gradient(eq)) g.push_back(substitute(p, param));
        grads.push_back(std::move(g));
    }
    if (system.size() == 1)
        return std::all_of(grads[0].begin(), grads[0].end(), [](const MultiPoly& p) { return p.is_zero(); });
    const auto& g1 = grads[0];
    const auto& g2 = grads[1];
    for (std::size_t i = 0; i < g1.size(); ++i)
        for (std::size_t j = i + 1; j < g1.size(); ++j)
            if (!(g1[i] * g2[j] - g1[j] * g2[i]).is_zero()) return false;
    return true;
}

bool is_singular_point(const std::vector<MultiPoly>& system, const std::vector<FieldElement>& point) {
    Matrix jac;
    for (const auto& eq : system) {
        if (!eq.evaluate(point).is_zero()) throw std::invalid_argument("point is not on the variety");
        std::vector<FieldElement> row;
        for (const auto& p : gradient(eq)) row.push_back(p.evaluate(point));
        jac.push_back(std::move(row));
    }
    return rank(jac) < system.size();
}

std::vector<MultiPoly> line_param(const MultiPoly& l1, const MultiPoly& l2) {
    if (l1.vars() != l2.vars()) throw std::invalid_argument("linear forms over different variables");
    std::size_t n = l1.nvars();
    Domain dom = join(l1.domain(), l2.domain());
    Matrix m(2, std::vector<FieldElement>(n));
    for (std::size_t k = 0; k < n; ++k) {
        m[0][k] = linear_coefficient(l1, k);
        m[1][k] = linear_coefficient(l2, k);
    }
    auto ns = nullspace(m, n);
    if (ns.size() != 2) throw std::invalid_argument("the two linear forms do not cut out a line");
    std::vector<MultiPoly> out;
    for (std::size_t k = 0; k < n; ++k) {
        MultiPoly p(curve_vars(), dom);
        p.add_term({1, 0}, ns[0][k]);
        p.add_term({0, 1}, ns[1][k]);
        out.push_back(std::move(p));
    }
    return out;
}

PlaneSection pencil_section(const MultiPoly& F, const MultiPoly& axis1, const MultiPoly& axis2,
                            const MultiPoly& base, const MultiPoly& direction, const Rational& t) {
    PlaneSection out;
    MultiPoly G = in_space(F);
    out.plane = in_space(base) + in_space(direction) * FieldElement(t);

    // Solve the plane for the first of x, y, z it involves.
    int v = -1;
    for (std::size_t k = 0; k < 3 && v < 0; ++k)
        if (!linear_coefficient(out.plane, k).is_zero()) v = static_cast<int>(k);
    if (v < 0) {
        out.reason = "the plane is the plane at infinity";
        return out;
    }
    FieldElement lead = linear_coefficient(out.plane, v);
    std::vector<MultiPoly> onto;
    for (std::size_t k = 0; k < 4; ++k) {
        if (static_cast<int>(k) != v) {
            onto.push_back(sv(k));
            continue;
        }
        MultiPoly solved(space_vars(), out.plane.domain());
        for (std::size_t j = 0; j < 4; ++j)
            if (static_cast<int>(j) != v) solved += sv(j) * (-linear_coefficient(out.plane, j) / lead);
        onto.push_back(solved);
    }
    MultiPoly r = substitute(G, onto);
    if (r.is_zero()) throw NotAConic("the surface contains the plane " + out.plane.str());
    MultiPoly axis = substitute(in_space(axis1), onto);
    if (axis.is_zero()) axis = substitute(in_space(axis2), onto);
    while (r.total_degree() > 2 && !axis.is_zero()) {
        auto q = trial_divide(r, axis);
        if (!q) break;
        r = *q;
        ++out.axis_factors;
    }
    while (r.total_degree() > 2) {
        auto q = trial_divide(r, sv(3));
        if (!q) break;
        r = *q;
    }
    if (r.total_degree() != 2)
        throw NotAConic("plane section residual has degree " + std::to_string(r.total_degree()) + ": " + r.str());
    out.conic = r;

    auto at_infinity = line_param(out.plane, sv(3));
    MultiPoly rr = substitute(r, at_infinity);
    MultiPoly qq = substitute(space_sum_squares(), at_infinity);
    if (binary_discriminant(qq).is_zero()) out.reason = "the plane is tangent to the absolute conic";
    else if (rr.is_zero()) out.reason = "the conic contains the line at infinity";
    else if (!proportional(rr, qq)) out.reason = "the conic misses the absolute conic";
    else out.circle = true;
    return out;
}

bool pencil_circle_check(const MultiPoly& F, const MultiPoly& axis1, const MultiPoly& axis2,
                         const MultiPoly& base, const MultiPoly& direction, const Rational& t) {
    return pencil_section(F, axis1, axis2, base, direction, t).circle;
}

int common_points(const PlaneSection& a, const PlaneSection& b) {
    auto line = line_param(a.plane, b.plane);
    MultiPoly pa = substitute(a.conic, line), pb = substitute(b.conic, line);
    if (pa.is_zero() || pb.is_zero()) return -1;
    if (proportional(pa, pb)) return binary_discriminant(pa).is_zero() ? 1 : 2;
    return binary_resultant(pa, pb).is_zero() ? 1 : 0;
}

MultiPoly binary_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    Domain dom = join(a.domain(), b.domain());
    int ta = a.min_degree_in(1), tb = b.min_degree_in(1);
    Uni g = uni_gcd(dehomogenize(a), dehomogenize(b));
    return homogenize(g, std::min(ta, tb), a.vars(), dom);
}

std::vector<MultiPoly> strip_common_factor(const std::vector<MultiPoly>& comps) {
    MultiPoly g;
    bool first = true;
    for (const auto& c : comps) {
        if (c.is_zero()) continue;
        g = first ? c.monic() : binary_gcd(g, c);
        first = false;
    }
    if (first || g.total_degree() <= 0) return comps;
    std::vector<MultiPoly> out;
    for (const auto& c : comps) out.push_back(c.is_zero() ? c : *trial_divide(c, g));
    return out;
}

bool is_circle_param(const std::vector<MultiPoly>& comps) {
    if (comps.size() != 4) throw std::invalid_argument("a curve in P^3 needs four components");
    int n = -1;
    for (const auto& c : comps) n = std::max(n, c.total_degree());
    if (n < 1 || n > 2 || comps[3].is_zero()) return false;
    if (rank(coefficient_matrix(comps, n)) != static_cast<std::size_t>(n) + 1) return false;
    if (n == 1) return true;
    const MultiPoly& W = comps[3];
    if (binary_discriminant(W).is_zero()) return false;
    std::vector<MultiPoly> xyz(comps.begin(), comps.end());
    MultiPoly sig = substitute(space_sum_squares(), xyz);
    return trial_divide(sig, W).has_value();
}

PencilMember pencil_member(const MultiPoly& base, const MultiPoly& direction, const std::vector<MultiPoly>& param) {
    PencilMember m;
    MultiPoly B = substitute(base, param), D = substitute(direction, param);
    if (B.is_zero()) {
        m.found = true;
        m.t = FieldElement(0);
    } else if (D.is_zero()) {
        m.found = true;
        m.at_infinity = true;
    } else if (proportional(B, D)) {
        m.found = true;
        m.t = -(B.leading_coefficient() / D.coefficient(B.leading_exponents()));
    }
    return m;
}

std::vector<MultiPoly> push_curve(const MoebiusMap& map, const std::vector<MultiPoly>& param) {
    std::vector<MultiPoly> out;
    for (const auto& c : map.forward().components) out.push_back(substitute(c, param));
    return strip_common_factor(out);
}

bool sng_budget_check(int d, const std::vector<std::pair<int, int>>& components) {
    long used = 0;
    for (const auto& [di, mi] : components) used += static_cast<long>(di) * mi * (mi - 1);
    return used <= static_cast<long>(d - 1) * (d - 2) - 2;
}

int section_genus(int d, const std::vector<std::pair<int, int>>& components) {
    long g = static_cast<long>(d - 1) * (d - 2);
    for (const auto& [di, mi] : components) g -= static_cast<long>(di) * mi * (mi - 1);
    return static_cast<int>(g / 2);
}

}  // namespace celestial
