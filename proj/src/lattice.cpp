#include "celestial/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <mutex>
#include <set>

namespace celestial {

LatticeSpec LatticeSpec::b(int r) {
    if (r < 0 || r > 8) throw LatticeError("B(r) needs 0 <= r <= 8");
    return {B, r};
}

LatticeSpec LatticeSpec::p(int r) {
    if (r < 0) throw LatticeError("P(r) needs r >= 0");
    return {P, r};
}

int LatticeSpec::gram(std::size_t i, std::size_t j) const {
    if (kind == B) {
        if (i != j) return 0;
        return i == 0 ? 1 : -1;
    }
    if (i == 0 && j == 0) return r;
    if (i == 1 && j == 1) return 0;
    return 1;
}

std::vector<int> LatticeSpec::anticanonical() const {
    if (kind == B) {
        std::vector<int> v(rank(), -1);
        v[0] = 3;
        return v;
    }
    return {2, -(r - 2)};
}

std::string LatticeSpec::str() const { return std::string(kind == B ? "B(" : "P(") + std::to_string(r) + ")"; }

int intersect(const LatticeSpec& L, const DivisorClass& a, const DivisorClass& b) {
    if (a.size() != L.rank() || b.size() != L.rank()) throw LatticeError("class does not belong to " + L.str());
    if (L.kind == LatticeSpec::B) {
        int s = a[0] * b[0];
        for (std::size_t i = 1; i < a.size(); ++i) s -= a[i] * b[i];
        return s;
    }
    return L.r * a[0] * b[0] + a[0] * b[1] + a[1] * b[0];
}

int self_intersection(const LatticeSpec& L, const DivisorClass& a) { return intersect(L, a, a); }
int anticanonical_degree(const LatticeSpec& L, const DivisorClass& a) { return intersect(L, L.anticanonical(), a); }

DivisorClass add(const DivisorClass& a, const DivisorClass& b) {
    DivisorClass r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.at(i);
    return r;
}

DivisorClass sub(const DivisorClass& a, const DivisorClass& b) {
    DivisorClass r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b.at(i);
    return r;
}

DivisorClass scale(int k, const DivisorClass& a) {
    DivisorClass r = a;
    for (auto& x : r) x *= k;
    return r;
}

// ------------------------------------------------------------------ names

std::string coordinate_name(const LatticeSpec& L, const DivisorClass& c) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        std::string sym = L.kind == LatticeSpec::P ? (i == 0 ? "H" : "F") : (i == 0 ? "H" : "Q" + std::to_string(i));
        int a = std::abs(c[i]);
        std::string term = (a == 1 ? "" : std::to_string(a)) + sym;
        if (c[i] < 0) out += "-" + term;
        else out += (out.empty() ? "" : "+") + term;
    }
    return out.empty() ? "0" : out;
}

std::string class_name(const LatticeSpec& L, const DivisorClass& c) {
    if (L.kind != LatticeSpec::B) return coordinate_name(L, c);
    std::vector<int> plus, minus;
    bool other = false;
    for (std::size_t i = 1; i < c.size(); ++i) {
        if (c[i] == 1) plus.push_back(static_cast<int>(i));
        else if (c[i] == -1) minus.push_back(static_cast<int>(i));
        else if (c[i] != 0) other = true;
    }
    if (!other) {
        if (c[0] == 0 && plus.size() == 1 && minus.size() == 1)
            return std::to_string(plus[0]) + std::to_string(minus[0]);
        if (c[0] == 1 && plus.empty() && minus.size() == 3)
            return "1" + std::to_string(minus[0]) + std::to_string(minus[1]) + std::to_string(minus[2]);
        if (c[0] == 1 && plus.empty() && minus.size() == 1) return "a" + std::to_string(minus[0]);
        if (L.r == 5 && c[0] == 2 && plus.empty() && minus.size() == 4) {
            for (int i = 1; i <= 5; ++i)
                if (c[i] == 0) return "b" + std::to_string(i);
        }
    }
    return coordinate_name(L, c);
}

namespace {

int digit_index(const LatticeSpec& L, char ch, const std::string& text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw LatticeError("bad class name '" + text + "'");
    int i = ch - '0';
    if (i < 1 || i > L.r) throw LatticeError("index out of range in '" + text + "' for " + L.str());
    return i;
}

DivisorClass parse_coordinates(const LatticeSpec& L, const std::string& text) {
    DivisorClass c(L.rank(), 0);
    std::size_t pos = 0;
    bool any = false;
    while (pos < text.size()) {
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (any) {
            throw LatticeError("bad class '" + text + "'");
        }
        int coef = 1;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos > start) coef = std::stoi(text.substr(start, pos - start));
        if (pos < text.size() && text[pos] == '*') ++pos;
        if (pos >= text.size()) {
            if (pos > start && text == "0") return c;
            throw LatticeError("bad class '" + text + "'");
        }
        char sym = text[pos++];
        std::size_t idx = 0;
        if (sym == 'H') {
            idx = 0;
        } else if (sym == 'F' && L.kind == LatticeSpec::P) {
            idx = 1;
        } else if (sym == 'Q' && L.kind == LatticeSpec::B) {
            std::size_t s2 = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (s2 == pos) throw LatticeError("missing index in '" + text + "'");
            int i = std::stoi(text.substr(s2, pos - s2));
            if (i < 1 || i > L.r) throw LatticeError("index out of range in '" + text + "'");
            idx = static_cast<std::size_t>(i);
        } else {
            throw LatticeError("bad class '" + text + "' for " + L.str());
        }
        c[idx] += sign * coef;
        any = true;
    }
    if (!any) throw LatticeError("empty class name");
    return c;
}

}  // namespace

DivisorClass parse_class(const LatticeSpec& L, const std::string& raw) {
    std::string text;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
    if (text.empty()) throw LatticeError("empty class name");
    if (L.kind == LatticeSpec::B) {
        bool digits = std::all_of(text.begin(), text.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
        DivisorClass c(L.rank(), 0);
        if (digits && text.size() == 2) {
            int i = digit_index(L, text[0], text), j = digit_index(L, text[1], text);
            if (i == j) throw LatticeError("repeated index in '" + text + "'");
            c[i] = 1;
            c[j] = -1;
            return c;
        }
        if (digits && text.size() == 4 && text[0] == '1') {
            c[0] = 1;
            std::set<int> seen;
            for (std::size_t k = 1; k < 4; ++k) {
                int i = digit_index(L, text[k], text);
                if (!seen.insert(i).second) throw LatticeError("repeated index in '" + text + "'");
                c[i] = -1;
            }
            return c;
        }
        if (digits) throw LatticeError("bad class name '" + text + "'");
        if (text.size() == 2 && text[0] == 'a') {
            c[0] = 1;
            c[digit_index(L, text[1], text)] = -1;
            return c;
        }
        if (text.size() == 2 && text[0] == 'b') {
            if (L.r != 5) throw LatticeError("b-names are defined for B(5) only");
            int omit = digit_index(L, text[1], text);
            c[0] = 2;
            for (int i = 1; i <= 5; ++i)
                if (i != omit) c[i] = -1;
            return c;
        }
    }
    return parse_coordinates(L, text);
}

Configuration parse_configuration(const LatticeSpec& L, const std::vector<std::string>& names) {
    Configuration c;
    for (const auto& n : names) c.push_back(parse_class(L, n));
    return c;
}

std::string configuration_str(const LatticeSpec& L, const Configuration& c) {
    if (c.empty()) return "{}";
    std::string out = "{";
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? ", " : "") + class_name(L, c[i]);
    return out + "}";
}

// ------------------------------------------------------------ enumeration

namespace {

// y_1..y_n with sum = S, sum of squares = Q.
void enumerate_tail(std::vector<int>& y, std::size_t at, long S, long Q, std::vector<std::vector<int>>& out) {
    const std::size_t n = y.size();
    if (at == n) {
        if (S == 0 && Q == 0) out.push_back(y);
        return;
    }
    const long left = static_cast<long>(n - at);
    if (Q < 0 || S * S > left * Q) return;  // Cauchy-Schwarz on the remaining entries
    long bound = static_cast<long>(std::floor(std::sqrt(static_cast<double>(Q)))) + 1;
    for (long v = -bound; v <= bound; ++v) {
        if (v * v > Q) continue;
        y[at] = static_cast<int>(v);
        enumerate_tail(y, at + 1, S - v, Q - v * v, out);
    }
}

}  // namespace

std::vector<DivisorClass> enumerate_classes(const LatticeSpec& L, int s, int k) {
    std::vector<DivisorClass> result;
    if (L.kind == LatticeSpec::P) {
        // b = (k - a(r+2))/2 and C^2 = a k - 2 a^2.
        long lim = std::abs(k) + std::abs(s) + 2;
        for (long a = -lim; a <= lim; ++a) {
            if (a * k - 2 * a * a != s) continue;
            long twob = k - a * (L.r + 2);
            if (twob % 2) continue;
            result.push_back({static_cast<int>(a), static_cast<int>(twob / 2)});
        }
        return result;
    }
    const int r = L.r;
    // C = x0 H - sum y_i Q_i:  sum y = 3 x0 - k,  sum y^2 = x0^2 - s.
    // Cauchy-Schwarz gives (9 - r) x0^2 - 6 k x0 + k^2 + r s <= 0.
    const double A = 9.0 - r, Bq = -6.0 * k, Cq = static_cast<double>(k) * k + static_cast<double>(r) * s;
    const double disc = Bq * Bq - 4 * A * Cq;
    if (disc < 0) return result;
    const long lo = static_cast<long>(std::floor((-Bq - std::sqrt(disc)) / (2 * A))) - 1;
    const long hi = static_cast<long>(std::ceil((-Bq + std::sqrt(disc)) / (2 * A))) + 1;
    for (long x0 = lo; x0 <= hi; ++x0) {
        long Q = x0 * x0 - s, S = 3 * x0 - k;
        if (Q < 0) continue;
        std::vector<int> y(static_cast<std::size_t>(r), 0);
        std::vector<std::vector<int>> tails;
        enumerate_tail(y, 0, S, Q, tails);
        for (const auto& t : tails) {
            DivisorClass c(L.rank());
            c[0] = static_cast<int>(x0);
            for (int i = 0; i < r; ++i) c[i + 1] = -t[i];
            result.push_back(std::move(c));
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

void validate_configuration(const LatticeSpec& L, const Configuration& c) {
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].size() != L.rank()) throw LatticeError("class does not belong to " + L.str());
        if (self_intersection(L, c[i]) != -2 || anticanonical_degree(L, c[i]) != 0)
            throw LatticeError(class_name(L, c[i]) + " is not a (-2)-class orthogonal to K");
        for (std::size_t j = 0; j < i; ++j) {
            int p = intersect(L, c[i], c[j]);
            if (p != 0 && p != 1)
                throw LatticeError("classes " + class_name(L, c[j]) + " and " + class_name(L, c[i]) +
                                   " have product " + std::to_string(p));
        }
    }
}

namespace {

std::vector<DivisorClass> nonnegative_against(const LatticeSpec& L, const Configuration& c, int s, int k) {
    validate_configuration(L, c);
    std::vector<DivisorClass> out;
    for (auto& g : enumerate_classes(L, s, k)) {
        bool ok = true;
        for (const auto& f : c)
            if (intersect(L, g, f) < 0) {
                ok = false;
                break;
            }
        if (ok) out.push_back(g);
    }
    return out;
}

}  // namespace

std::vector<DivisorClass> two_set(const LatticeSpec& L, const Configuration& c) { return nonnegative_against(L, c, 0, 2); }
std::vector<DivisorClass> one_set(const LatticeSpec& L, const Configuration& c) { return nonnegative_against(L, c, -1, 1); }

// ------------------------------------------------------------------ Dynkin

std::string DynkinType::str() const {
    if (parts.empty()) return "A0";
    std::string out;
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (!out.empty()) out += "+";
        if (j - i > 1) out += std::to_string(j - i);
        out += parts[i].first + std::to_string(parts[i].second);
        i = j;
    }
    return out;
}

DynkinType dynkin_type(const LatticeSpec& L, const Configuration& c) {
    validate_configuration(L, c);
    const std::size_t n = c.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && intersect(L, c[i], c[j]) != 0) adj[i].push_back(j);
    DynkinType t;
    std::vector<bool> seen(n, false);
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> comp, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            auto a = stack.back();
            stack.pop_back();
            comp.push_back(a);
            for (auto b : adj[a])
                if (!seen[b]) {
                    seen[b] = true;
                    stack.push_back(b);
                }
        }
        std::sort(comp.begin(), comp.end());
        std::size_t edges = 0, deg3 = 0, maxdeg = 0, branch_at = 0;
        for (auto a : comp) {
            edges += adj[a].size();
            maxdeg = std::max(maxdeg, adj[a].size());
            if (adj[a].size() == 3) {
                ++deg3;
                branch_at = a;
            }
        }
        edges /= 2;
        const int size = static_cast<int>(comp.size());
        if (edges != comp.size() - 1) throw LatticeError("intersection graph has a cycle");
        if (maxdeg <= 2) {
            t.parts.push_back({'A', size});
        } else if (maxdeg == 3 && deg3 == 1) {
            std::vector<int> arms;
            for (auto b0 : adj[branch_at]) {
                int len = 1;
                std::size_t prev = branch_at, cur = b0;
                while (adj[cur].size() == 2) {
                    std::size_t nx = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                    prev = cur;
                    cur = nx;
                    ++len;
                }
                arms.push_back(len);
            }
            std::sort(arms.begin(), arms.end());
            if (arms[0] == 1 && arms[1] == 1) t.parts.push_back({'D', size});
            else if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) t.parts.push_back({'E', size});
            else throw LatticeError("intersection graph is not of ADE type");
        } else {
            throw LatticeError("intersection graph is not of ADE type");
        }
        t.components.push_back(std::move(comp));
    }
    // Sort components together with their types.
    std::vector<std::size_t> order(t.parts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    auto rankletter = [](char ch) { return ch == 'E' ? 0 : ch == 'D' ? 1 : 2; };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (t.parts[a].first != t.parts[b].first) return rankletter(t.parts[a].first) < rankletter(t.parts[b].first);
        return t.parts[a].second > t.parts[b].second;
    });
    DynkinType sorted;
    for (auto i : order) {
        sorted.parts.push_back(t.parts[i]);
        sorted.components.push_back(t.components[i]);
    }
    return sorted;
}

// -------------------------------------------------------------- isometries

DivisorClass Isometry::apply(const DivisorClass& v) const {
    DivisorClass r(images.at(0).size(), 0);
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] == 0) continue;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += v[j] * images[j][i];
    }
    return r;
}

Isometry Isometry::then(const Isometry& next) const {
    Isometry r;
    r.images.reserve(images.size());
    for (const auto& im : images) r.images.push_back(next.apply(im));
    return r;
}

Isometry identity_isometry(const LatticeSpec& L) {
    Isometry g;
    for (std::size_t i = 0; i < L.rank(); ++i) {
        DivisorClass e(L.rank(), 0);
        e[i] = 1;
        g.images.push_back(e);
    }
    return g;
}

Isometry reflection(const LatticeSpec& L, const DivisorClass& root) {
    if (self_intersection(L, root) != -2) throw LatticeError("reflection needs a (-2)-class");
    Isometry g = identity_isometry(L);
    for (auto& e : g.images) e = add(e, scale(intersect(L, e, root), root));
    return g;
}

bool is_isometry(const LatticeSpec& L, const Isometry& g) {
    for (std::size_t i = 0; i < L.rank(); ++i)
        for (std::size_t j = 0; j < L.rank(); ++j)
            if (intersect(L, g.images[i], g.images[j]) != L.gram(i, j)) return false;
    return true;
}

const std::vector<Isometry>& weyl_group(const LatticeSpec& L) {
    if (L.kind != LatticeSpec::B || L.r > 5) throw LatticeError("Weyl group closure is limited to B(r), r <= 5");
    static std::mutex mu;
    static std::map<LatticeSpec, std::vector<Isometry>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(L);
    if (it != cache.end()) return it->second;
    std::vector<Isometry> gens;
    for (const auto& rt : enumerate_classes(L, -2, 0))
        if (rt > DivisorClass(L.rank(), 0)) gens.push_back(reflection(L, rt));
    std::set<Isometry> seen{identity_isometry(L)};
    std::vector<Isometry> frontier{identity_isometry(L)};
    while (!frontier.empty()) {
        std::vector<Isometry> next;
        for (const auto& g : frontier)
            for (const auto& s : gens) {
                Isometry h = g.then(s);
                if (seen.insert(h).second) next.push_back(std::move(h));
            }
        frontier = std::move(next);
    }
    return cache[L] = std::vector<Isometry>(seen.begin(), seen.end());
}

Configuration image(const Isometry& g, const Configuration& c) {
    Configuration r;
    r.reserve(c.size());
    for (const auto& v : c) r.push_back(g.apply(v));
    return r;
}

Configuration sorted_configuration(Configuration c) {
    std::sort(c.begin(), c.end());
    return c;
}

Configuration canonical_form(const LatticeSpec& L, const Configuration& c) {
    Configuration best = sorted_configuration(c);
    for (const auto& g : weyl_group(L)) {
        Configuration im = sorted_configuration(image(g, c));
        if (im < best) best = std::move(im);
    }
    return best;
}

const std::map<int, std::vector<std::string>>& configuration_table() {
    static const std::map<int, std::vector<std::string>> table = {
        {16, {}},
        {17, {"45"}},
        {18, {"23", "45"}},
        {19, {"1123", "45"}},
        {20, {"34", "45"}},
        {21, {"1123", "23", "45"}},
        {22, {"12", "34", "45"}},
        {23, {"23", "34", "45"}},
        {24, {"1123", "34", "45"}},
        {25, {"1145", "1123", "23", "45"}},
        {26, {"1123", "12", "23", "45"}},
        {27, {"1123", "12", "34", "45"}},
        {28, {"12", "23", "34", "45"}},
        {29, {"1123", "23", "34", "45"}},
        {30, {"1145", "1123", "12", "23", "45"}},
        {31, {"1123", "12", "23", "34", "45"}},
    };
    return table;
}

const std::map<int, std::string>& configuration_dynkin_table() {
    static const std::map<int, std::string> table = {
        {16, "A0"}, {17, "A1"},    {18, "2A1"},    {19, "2A1"},   {20, "A2"}, {21, "3A1"},
        {22, "A2+A1"}, {23, "A3"}, {24, "A3"},     {25, "4A1"},   {26, "A2+2A1"},
        {27, "A3+A1"}, {28, "A4"}, {29, "D4"},     {30, "A3+2A1"}, {31, "D5"},
    };
    return table;
}

int canonical_configuration(const Configuration& c) {
    const LatticeSpec L = LatticeSpec::b(5);
    static std::once_flag once;
    static std::map<Configuration, int> forms;
    std::call_once(once, [&] {
        for (const auto& [ci, names] : configuration_table())
            forms[canonical_form(L, parse_configuration(L, names))] = ci;
    });
    validate_configuration(L, c);
    auto it = forms.find(canonical_form(L, c));
    if (it == forms.end()) throw LatticeError("configuration " + configuration_str(L, c) + " matches no known class");
    return it->second;
}

// ---------------------------------------------------------- real structures

const std::vector<int>& real_structure_indices() {
    static const std::vector<int> idx{10, 11, 12, 13, 14, 15};
    return idx;
}

Isometry real_structure(int ri) {
    const LatticeSpec L = LatticeSpec::b(5);
    static const std::map<int, std::vector<std::string>> images = {
        {10, {"H", "Q1", "Q2", "Q3", "Q4", "Q5"}},
        {11, {"H", "Q1", "Q2", "Q3", "Q5", "Q4"}},
        {12, {"H", "Q1", "Q3", "Q2", "Q5", "Q4"}},
        {13, {"2H-Q1-Q2-Q3", "H-Q2-Q3", "H-Q1-Q3", "H-Q1-Q2", "Q5", "Q4"}},
        {14, {"2H-Q1-Q2-Q3", "H-Q2-Q3", "H-Q1-Q2", "H-Q1-Q3", "Q5", "Q4"}},
        {15, {"3H-2Q1-Q2-Q3-Q4-Q5", "2H-Q1-Q2-Q3-Q4-Q5", "H-Q1-Q2", "H-Q1-Q3", "H-Q1-Q4", "H-Q1-Q5"}},
    };
    auto it = images.find(ri);
    if (it == images.end()) throw LatticeError("unknown real structure index " + std::to_string(ri));
    Isometry g;
    for (const auto& s : it->second) g.images.push_back(parse_class(L, s));
    return g;
}

bool is_stable(const Isometry& sigma, const Configuration& c) {
    return sorted_configuration(image(sigma, c)) == sorted_configuration(c);
}

std::vector<DivisorClass> real_two_set(const Configuration& c, int ri) {
    const LatticeSpec L = LatticeSpec::b(5);
    Isometry sigma = real_structure(ri);
    if (!is_stable(sigma, c)) throw LatticeError("configuration is not stable under real structure " + std::to_string(ri));
    std::vector<DivisorClass> out;
    for (auto& g : two_set(L, c))
        if (sigma.apply(g) == g) out.push_back(g);
    return out;
}

}  // namespace celestial
