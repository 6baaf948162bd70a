#include "celestial/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "celestial/moebius.hpp"

namespace celestial {

FormatError::FormatError(const std::string& msg, std::size_t line, std::size_t column)
    : CatalogError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

const std::vector<std::string>& family_vars() {
    static const std::vector<std::string> v{"s", "t", "u"};
    return v;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// Split on commas outside parentheses.
std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
    return out;
}

std::string join_list(const std::vector<std::string>& v, const std::string& sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

struct Value {
    std::string text;
    std::size_t line = 0, column = 0;
};

[[noreturn]] void fail(const Value& v, const std::string& msg, std::size_t offset = 0) {
    throw FormatError(msg, v.line, v.column + offset);
}

int to_int(const Value& v) {
    try {
        std::size_t used = 0;
        int r = std::stoi(v.text, &used);
        if (used != v.text.size()) fail(v, "expected an integer");
        return r;
    } catch (const std::logic_error&) {
        fail(v, "expected an integer");
    }
}

Domain to_domain(const Value& v) {
    try {
        return Domain::parse(v.text);
    } catch (const DomainError& e) {
        fail(v, e.what());
    }
}

// Parse once to validate, reporting the position inside the value.
void check_expression(const Value& v, const std::string& text, const std::vector<std::string>& vars,
                      const Domain& dom, std::size_t offset = 0) {
    try {
        parse_expression(text, vars, dom);
    } catch (const ParseError& e) {
        fail(v, e.what(), offset + e.position());
    } catch (const UnknownVariable& e) {
        fail(v, e.what(), offset);
    } catch (const DomainError& e) {
        fail(v, e.what(), offset);
    }
}

void check_list(const Value& v, const std::vector<std::string>& items, const std::vector<std::string>& vars,
                const Domain& dom) {
    std::size_t offset = 0;
    for (const auto& it : items) {
        std::size_t at = v.text.find(it, offset);
        if (at == std::string::npos) at = offset;
        check_expression(v, it, vars, dom, at);
        offset = at + it.size();
    }
}

std::pair<int, int> to_pair(const Value& v) {
    auto parts = split_list(v.text);
    if (parts.size() != 2) fail(v, "expected two integers 'd,c'");
    try {
        return {std::stoi(parts[0]), std::stoi(parts[1])};
    } catch (const std::logic_error&) {
        fail(v, "expected two integers 'd,c'");
    }
}

bool to_bool(const Value& v) {
    if (v.text == "true" || v.text == "yes" || v.text == "1") return true;
    if (v.text == "false" || v.text == "no" || v.text == "0") return false;
    fail(v, "expected true or false");
}

using Section = std::map<std::string, Value>;

struct RawSection {
    std::string kind;  // "" for the header
    std::size_t line = 0;
    Section keys;
};

std::vector<RawSection> split_sections(const std::string& text) {
    std::vector<RawSection> out(1);
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        std::size_t indent = raw.find_first_not_of(" \t");
        if (line.front() == '[') {
            if (line.back() != ']') throw FormatError("unterminated section header", lineno, indent + 1);
            out.push_back({line.substr(1, line.size() - 2), lineno, {}});
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) throw FormatError("expected key=value", lineno, indent + 1);
        std::string key = trim(line.substr(0, eq));
        std::string rest = line.substr(eq + 1);
        std::size_t lead = rest.find_first_not_of(" \t");
        std::string value = trim(rest);
        std::size_t col = indent + eq + 2 + (lead == std::string::npos ? 0 : lead);
        if (key.empty()) throw FormatError("empty key", lineno, indent + 1);
        if (out.back().keys.count(key)) throw FormatError("duplicate key '" + key + "'", lineno, indent + 1);
        out.back().keys[key] = {value, lineno, col};
    }
    return out;
}

class SectionReader {
public:
    SectionReader(const RawSection& s) : s_(s) {}
    const Value* get(const std::string& key) {
        used_.insert(key);
        auto it = s_.keys.find(key);
        return it == s_.keys.end() ? nullptr : &it->second;
    }
    const Value& need(const std::string& key) {
        const Value* v = get(key);
        if (!v) {
            std::string where = s_.kind.empty() ? "header" : "[" + s_.kind + "] section";
            throw FormatError("missing key '" + key + "' in " + where, s_.line ? s_.line : 1, 1);
        }
        return *v;
    }
    std::string text(const std::string& key, const std::string& fallback = "") {
        const Value* v = get(key);
        return v ? v->text : fallback;
    }
    void finish() const {
        for (const auto& [k, v] : s_.keys)
            if (!used_.count(k)) throw FormatError("unknown key '" + k + "'", v.line, 1);
    }

private:
    const RawSection& s_;
    std::set<std::string> used_;
};

std::vector<std::string> read_param(SectionReader& r, const std::vector<std::string>& coords,
                                    const std::vector<std::string>& vars, const Domain& dom) {
    std::vector<std::string> out;
    for (const auto& c : coords) {
        const Value& v = r.need("param_" + c);
        check_expression(v, v.text, vars, dom);
        out.push_back(v.text);
    }
    return out;
}

std::vector<std::string> system_coords(const std::string& system) {
    return system == "model" ? std::vector<std::string>{"a", "b", "c", "d", "e"}
                             : std::vector<std::string>{"x", "y", "z", "w"};
}

std::string expect_str(bool singular) { return singular ? "singular" : "smooth"; }

}  // namespace

// ------------------------------------------------------------------ parsing

SurfaceRecord parse_surface_text(const std::string& text) {
    auto sections = split_sections(text);
    SurfaceRecord rec;
    SectionReader head(sections[0]);
    const Value& name = head.need("name");
    if (name.text.empty()) fail(name, "empty name");
    rec.name = name.text;
    rec.title = head.text("title");
    rec.citation = head.text("citation");
    if (const Value* v = head.get("domain")) rec.domain = to_domain(*v);
    const Value& eq = head.need("equation");
    check_expression(eq, eq.text, space_vars(), rec.domain);
    rec.equation = eq.text;
    if (const Value* v = head.get("type")) rec.type = to_pair(*v);
    if (const Value* v = head.get("printed")) {
        check_expression(*v, v->text, space_vars(), rec.domain);
        rec.printed = v->text;
    }
    rec.erratum = head.text("erratum");
    if (const Value* v = head.get("model")) {
        check_expression(*v, v->text, sphere_vars(), Domain::gaussian());
        rec.model = v->text;
    }
    if (const Value* v = head.get("sng")) {
        for (const auto& item : split_list(v->text)) {
            auto colon = item.find(':');
            if (colon == std::string::npos) fail(*v, "expected degree:multiplicity");
            try {
                rec.sng.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
            } catch (const std::logic_error&) {
                fail(*v, "expected degree:multiplicity");
            }
        }
    }
    if (const Value* v = head.get("sng_complete")) rec.sng_complete = to_bool(*v);
    if (const Value* v = head.get("ci")) rec.ci = to_int(*v);
    if (const Value* v = head.get("ri")) rec.ri = to_int(*v);
    if (const Value* v = head.get("configuration")) rec.configuration = split_list(v->text);
    if (const Value* v = head.get("families")) rec.expected_families = to_int(*v);
    if (const Value* v = head.get("pairs")) rec.expected_pairs = to_int(*v);
    head.finish();

    for (std::size_t k = 1; k < sections.size(); ++k) {
        const RawSection& sec = sections[k];
        SectionReader r(sec);
        if (sec.kind == "pencil") {
            PencilSpec p;
            p.label = r.text("label", "F" + std::to_string(rec.pencils.size() + 1));
            p.domain = rec.domain;
            if (const Value* v = r.get("domain")) p.domain = to_domain(*v);
            for (auto [key, dst] : {std::pair<const char*, std::string*>{"base", &p.base}, {"direction", &p.direction}}) {
                const Value& v = r.need(key);
                check_expression(v, v.text, space_vars(), p.domain);
                *dst = v.text;
            }
            p.axis1 = p.base;
            p.axis2 = p.direction;
            for (auto [key, dst] : {std::pair<const char*, std::string*>{"axis1", &p.axis1}, {"axis2", &p.axis2}})
                if (const Value* v = r.get(key)) {
                    check_expression(*v, v->text, space_vars(), p.domain);
                    *dst = v->text;
                }
            rec.pencils.push_back(std::move(p));
        } else if (sec.kind == "singular-curve" || sec.kind == "point") {
            std::string system = r.text("system", "surface");
            if (system != "surface" && system != "model") fail(r.need("system"), "system must be surface or model");
            if (system == "model" && rec.model.empty())
                throw FormatError("a model system needs the 'model' key", sec.line, 1);
            Domain dom = rec.domain;
            if (const Value* v = r.get("domain")) dom = to_domain(*v);
            bool singular = true;
            if (const Value* v = r.get("expect")) {
                if (v->text != "singular" && v->text != "smooth") fail(*v, "expect must be singular or smooth");
                singular = v->text == "singular";
            }
            std::string label = r.text("label");
            if (sec.kind == "point") {
                const Value& v = r.need("coords");
                auto items = split_list(v.text);
                if (items.size() != system_coords(system).size()) fail(v, "wrong number of coordinates");
                check_list(v, items, {}, dom);
                rec.points.push_back({label, system, dom, singular, items});
            } else {
                auto param = read_param(r, system_coords(system), curve_vars(), dom);
                rec.curves.push_back({label, system, dom, singular, param});
            }
        } else if (sec.kind == "param") {
            rec.params.push_back(read_param(r, space_vars(), curve_vars(), rec.domain));
        } else if (sec.kind == "circle-family") {
            CircleFamilySpec f;
            f.label = r.text("label");
            f.domain = rec.domain;
            if (const Value* v = r.get("domain")) f.domain = to_domain(*v);
            f.param = read_param(r, space_vars(), family_vars(), f.domain);
            const Value& sv = r.need("samples");
            for (const auto& item : split_list(sv.text)) {
                try {
                    Rational q(item);
                    q.canonicalize();
                    f.samples.push_back(q);
                } catch (const std::invalid_argument&) {
                    fail(sv, "bad rational '" + item + "'");
                }
            }
            f.map = r.text("map");
            if (!f.map.empty()) {
                try {
                    MoebiusMap::parse(f.map);
                } catch (const std::exception& e) {
                    fail(r.need("map"), e.what());
                }
            }
            for (auto [key, dst] : {std::pair<const char*, std::string*>{"sphere_base", &f.sphere_base},
                                    {"sphere_direction", &f.sphere_direction}}) {
                const Value& v = r.need(key);
                check_expression(v, v.text, space_vars(), f.domain);
                *dst = v.text;
            }
            rec.families.push_back(std::move(f));
        } else if (sec.kind == "image") {
            ImageSpec im;
            const Value& mv = r.need("map");
            try {
                MoebiusMap::parse(mv.text);
            } catch (const std::exception& e) {
                fail(mv, e.what());
            }
            im.map = mv.text;
            im.target = r.need("target").text;
            im.note = r.text("note");
            rec.images.push_back(std::move(im));
        } else {
            throw FormatError("unknown section [" + sec.kind + "]", sec.line, 1);
        }
        r.finish();
    }
    return rec;
}

SurfaceRecord load_user_surface(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CatalogError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_surface_text(ss.str());
}

// ------------------------------------------------------------------ export

MultiPoly SurfaceRecord::surface() const { return parse_space(equation, domain); }
MultiPoly SurfaceRecord::surface(const Domain& d) const { return parse_space(equation, join(domain, d)); }

std::string SurfaceRecord::to_text() const {
    std::ostringstream o;
    auto kv = [&](const std::string& k, const std::string& v) {
        if (!v.empty()) o << k << "=" << v << "\n";
    };
    kv("name", name);
    kv("title", title);
    kv("citation", citation);
    kv("domain", domain.str());
    kv("equation", equation);
    if (type) kv("type", std::to_string(type->first) + "," + std::to_string(type->second));
    kv("printed", printed);
    kv("erratum", erratum);
    kv("model", model);
    if (!sng.empty()) {
        std::vector<std::string> items;
        for (auto [d, m] : sng) items.push_back(std::to_string(d) + ":" + std::to_string(m));
        kv("sng", join_list(items));
    }
    if (sng_complete) kv("sng_complete", "true");
    if (ci) kv("ci", std::to_string(ci));
    if (ri) kv("ri", std::to_string(ri));
    kv("configuration", join_list(configuration));
    if (expected_families >= 0) kv("families", std::to_string(expected_families));
    if (expected_pairs >= 0) kv("pairs", std::to_string(expected_pairs));
    auto params = [&](const std::vector<std::string>& coords, const std::vector<std::string>& p) {
        for (std::size_t i = 0; i < coords.size(); ++i) kv("param_" + coords[i], p[i]);
    };
    for (const auto& p : this->params) {
        o << "\n[param]\n";
        params(space_vars(), p);
    }
    for (const auto& p : pencils) {
        o << "\n[pencil]\n";
        kv("label", p.label);
        kv("domain", p.domain.str());
        kv("base", p.base);
        kv("direction", p.direction);
        if (p.axis1 != p.base) kv("axis1", p.axis1);
        if (p.axis2 != p.direction) kv("axis2", p.axis2);
    }
    for (const auto& c : curves) {
        o << "\n[singular-curve]\n";
        kv("label", c.label);
        kv("system", c.system);
        kv("domain", c.domain.str());
        kv("expect", expect_str(c.expect_singular));
        params(system_coords(c.system), c.param);
    }
    for (const auto& p : points) {
        o << "\n[point]\n";
        kv("label", p.label);
        kv("system", p.system);
        kv("domain", p.domain.str());
        kv("expect", expect_str(p.expect_singular));
        kv("coords", join_list(p.coords));
    }
    for (const auto& f : families) {
        o << "\n[circle-family]\n";
        kv("label", f.label);
        kv("domain", f.domain.str());
        params(space_vars(), f.param);
        std::vector<std::string> s;
        for (const auto& q : f.samples) s.push_back(rational_str(q));
        kv("samples", join_list(s));
        kv("map", f.map);
        kv("sphere_base", f.sphere_base);
        kv("sphere_direction", f.sphere_direction);
    }
    for (const auto& im : images) {
        o << "\n[image]\n";
        kv("map", im.map);
        kv("target", im.target);
        kv("note", im.note);
    }
    return o.str();
}

nlohmann::json SurfaceRecord::to_json() const {
    using nlohmann::json;
    json j;
    j["name"] = name;
    j["title"] = title;
    j["citation"] = citation;
    j["domain"] = domain.str();
    j["equation"] = equation;
    j["type"] = type ? json::array({type->first, type->second}) : json();
    j["printed"] = printed;
    j["erratum"] = erratum;
    j["model"] = model;
    json s = json::array();
    for (auto [d, m] : sng) s.push_back({{"degree", d}, {"multiplicity", m}});
    j["sng"] = s;
    j["sng_complete"] = sng_complete;
    j["ci"] = ci;
    j["ri"] = ri;
    j["configuration"] = configuration;
    j["families"] = expected_families;
    j["pairs"] = expected_pairs;
    j["param"] = params;
    json ps = json::array();
    for (const auto& p : pencils)
        ps.push_back({{"label", p.label}, {"domain", p.domain.str()}, {"base", p.base}, {"direction", p.direction},
                      {"axis1", p.axis1}, {"axis2", p.axis2}});
    j["pencil"] = ps;
    json cs = json::array();
    for (const auto& c : curves)
        cs.push_back({{"label", c.label}, {"system", c.system}, {"domain", c.domain.str()},
                      {"expect", expect_str(c.expect_singular)}, {"param", c.param}});
    j["singular-curve"] = cs;
    json pts = json::array();
    for (const auto& p : points)
        pts.push_back({{"label", p.label}, {"system", p.system}, {"domain", p.domain.str()},
                       {"expect", expect_str(p.expect_singular)}, {"coords", p.coords}});
    j["point"] = pts;
    json fs = json::array();
    for (const auto& f : families) {
        std::vector<std::string> samples;
        for (const auto& q : f.samples) samples.push_back(rational_str(q));
        fs.push_back({{"label", f.label}, {"domain", f.domain.str()}, {"param", f.param}, {"samples", samples},
                      {"map", f.map}, {"sphere_base", f.sphere_base}, {"sphere_direction", f.sphere_direction}});
    }
    j["circle-family"] = fs;
    json ims = json::array();
    for (const auto& im : images) ims.push_back({{"map", im.map}, {"target", im.target}, {"note", im.note}});
    j["image"] = ims;
    return j;
}

// ------------------------------------------------------------ embedded data

namespace {

// The sample circles of the two families of the type (4,0) surface, one
// circle for each value of u.
constexpr const char* kFamilies = R"(
[circle-family]
label=A
domain=gaussian
param_x=2*u*(s^2+t^2)-(t^2-s^2)*(1+u^2)
param_y=(1-u^2)*(s^2+t^2)
param_z=2*s*t*(1+u^2)
param_w=(1+u^2)*(s^2+t^2)
samples=1/2,2,3
%MAP%
sphere_base=%AB%
sphere_direction=%AD%

[circle-family]
label=B
domain=gaussian
param_x=2*s*t*(1+u^2)-(1-u^2)*(s^2+t^2)
param_y=(t^2-s^2)*(1+u^2)
param_z=2*u*(s^2+t^2)
param_w=(1+u^2)*(s^2+t^2)
samples=1/2,2,3
%MAP%
sphere_base=%BB%
sphere_direction=%BD%
)";

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
    for (std::size_t at = s.find(from); at != std::string::npos; at = s.find(from, at + to.size()))
        s.replace(at, from.size(), to);
    return s;
}

std::string families(const std::string& map, const std::string& ab, const std::string& ad, const std::string& bb,
                     const std::string& bd) {
    std::string s = replace_all(kFamilies, "%MAP%", map.empty() ? "" : "map=" + map);
    s = replace_all(s, "%AB%", ab);
    s = replace_all(s, "%AD%", ad);
    s = replace_all(s, "%BB%", bb);
    return replace_all(s, "%BD%", bd);
}

std::string quadric(const std::string& name, const std::string& title, const std::string& citation,
                    const std::string& eq, int ci, const std::string& config, int f, int p) {
    return "name=" + name + "\ntitle=" + title + "\ncitation=" + citation + "\nequation=" + eq +
           "\ntype=2,0\nci=" + std::to_string(ci) + "\nri=" + std::to_string(ci == 17 && name != "eh1" ? 14 : ci == 20 && name == "ep" ? 14 : 13) +
           "\nconfiguration=" + config + "\nfamilies=" + std::to_string(f) + "\npairs=" + std::to_string(p) + "\n";
}

std::vector<std::string> embedded_texts() {
    std::vector<std::string> t;
    t.push_back(R"(name=blum
title=Blum cyclide
citation=(Blum cyclide)
equation=2*(y+3*z)*(x^2+y^2+z^2)+w*(4*(x+y+z+w)^2+2*y^2+6*z^2)
type=3,1
sng_complete=true
ci=16
ri=13
families=6
pairs=3

[pencil]
label=F1
domain=quad:6
base=y+3*z+w
direction=x-(-sqrt(6)+4)*z

[pencil]
label=F2
domain=quad:6
base=y+3*z+w
direction=x-(sqrt(6)+4)*z

[pencil]
label=F3
base=y+3*z+2*w
direction=2*x+w

[pencil]
label=F4
base=y+3*z+2*w
direction=2*z+w

[pencil]
label=F5
domain=quad:6
base=y+3*z+3*w
direction=(-4+sqrt(6))*w-x+(-4+sqrt(6))*z

[pencil]
label=F6
domain=quad:6
base=y+3*z+3*w
direction=(4+sqrt(6))*w+x+(4+sqrt(6))*z

[image]
map=mu0
target=4,2
)");
    t.push_back(R"(name=sphere-cyclide
title=sphere cyclide
citation=(sphere cyclide)
equation=2*(y-3/2*z)*(x^2+y^2+z^2)+2*w*(x^2-3/2*y^2+2*y*z+y*w+z^2-3/2*z*w)
type=3,1
sng_complete=true
ci=16
ri=14
families=2
pairs=1

[pencil]
label=F1
domain=quad:2
base=2*y-3*z+w
direction=x+sqrt(2)*z-sqrt(2)*w

[pencil]
label=F2
domain=quad:2
base=2*y-3*z+w
direction=x-sqrt(2)*z+sqrt(2)*w

[image]
map=mu1
target=4,2
)");
    t.push_back(R"(name=two-components
title=cyclide with two components
citation=(cyclide with two components)
equation=6*(x-5/6*y+z)*(x^2+y^2+z^2)-8*w*(x^2-x*y+5/2*x*z-3/4*x*w-3/8*y^2-1/4*y*z+5/8*y*w+z^2-3/4*z*w)
type=3,1
sng_complete=true
ci=16
ri=15
families=2
pairs=1

[pencil]
label=F1
domain=quad:3
base=x-5/6*y+z
direction=y+(12/37*sqrt(3)-42/37)*z

[pencil]
label=F2
domain=quad:3
base=x-5/6*y+z
direction=y+(-12/37*sqrt(3)-42/37)*z

[image]
map=mu2
target=4,2
)");
    t.push_back(R"(name=perseus
title=Perseus cyclide
citation=(Perseus cyclide)
equation=4*w*(x+y+z+w)^2+5*(x^2+y^2+z^2)*z+5*z^2*w
type=3,1
sng_complete=true
ci=19
ri=13
configuration=14,1235
families=5
pairs=2

[pencil]
label=F1
base=z
direction=x+y+w

[pencil]
label=F2
domain=quad:15
base=z+w
direction=x+(-4+sqrt(15))*y

[pencil]
label=F3
domain=quad:15
base=z+w
direction=-x+(4+sqrt(15))*y

[pencil]
label=F4
domain=quad:3
base=5*z+2*w
direction=-6*w+2*sqrt(3)*w-5*x+(-10+5*sqrt(3))*y

[pencil]
label=F5
domain=quad:3
base=5*z+2*w
direction=6*w+2*sqrt(3)*w+5*x+(10+5*sqrt(3))*y

[image]
map=mu0
target=4,2
)");
    t.push_back(R"(name=dupin
title=Dupin cyclide
citation=(Dupin cyclide)
equation=2*z*(x^2+y^2+z^2)+w*((x+y+z+w)^2+2*z^2)
type=3,1
sng_complete=true
ci=25
ri=13
configuration=14,1134,25,1235
families=4
pairs=1

[pencil]
label=F1
base=z
direction=y+x+w

[pencil]
label=F2
base=2*z+2*w
direction=x-y

[pencil]
label=F3
base=2*z+w
direction=y-z

[pencil]
label=F4
base=2*z+w
direction=x-z

[image]
map=mu0
target=4,2
)");
    t.push_back(std::string(R"(name=quartic-40
title=celestial of type (4,0)
citation=(celestial of type (4,0))
domain=gaussian
equation=(x^2+y^2+z^2-2*w^2)^2-4*(w^2-y^2)*(w^2-z^2)
type=4,0
printed=(x^2+y^2+z^2-2*w^2)^2-2*(w^2-y^2)*(w^2-z^2)
erratum=the printed equation has coefficient 2 in front of (w^2-y^2)(w^2-z^2); only coefficient 4 vanishes on the parametrization, is singular along the double lines and matches the printed Moebius model
model=4*b^2*c^2-4*b^2*d^2+8*b^2*d*e-4*b^2*e^2-4*c^2*d^2+8*c^2*d*e-4*c^2*e^2-5*d^4+8*d^3*e+2*d^2*e^2-8*d*e^3+3*e^4
sng=1:2,1:2
sng_complete=true

[param]
param_x=2*s*(1+t^2)-(1-t^2)*(1+s^2)
param_y=(1-s^2)*(1+t^2)
param_z=2*t*(1+s^2)
param_w=(1+s^2)*(1+t^2)

[singular-curve]
label=rho+
param_x=0
param_y=t
param_z=t
param_w=s

[singular-curve]
label=rho-
param_x=0
param_y=t
param_z=-t
param_w=s

[singular-curve]
label=model rho+
system=model
param_a=s
param_b=i*s
param_c=0
param_d=t
param_e=t

[singular-curve]
label=model rho-
system=model
param_a=s
param_b=-i*s
param_c=0
param_d=t
param_e=t

[singular-curve]
label=model rho'+
system=model
param_a=s
param_b=0
param_c=i*s
param_d=t
param_e=t

[singular-curve]
label=model rho'-
system=model
param_a=s
param_b=0
param_c=-i*s
param_d=t
param_e=t

[singular-curve]
label=model C+
system=model
param_a=0
param_b=-2*s*t
param_c=2*s*t
param_d=t^2-2*s^2
param_e=t^2+2*s^2

[singular-curve]
label=model C-
system=model
param_a=0
param_b=2*s*t
param_c=2*s*t
param_d=t^2-2*s^2
param_e=t^2+2*s^2

[point]
coords=1,0,i,0

[point]
coords=1,0,-i,0

[point]
coords=1,i,0,0

[point]
coords=1,-i,0,0
)") + families("", "y", "w", "z", "w") + R"(
[image]
map=mu6
target=sextic-62

[image]
map=mu5
target=octic-84

[image]
map=f*b0*finv*t(-1,-1,0)
target=septic-73
note=the word printed for this image uses the translation (1,1,0), whose image is a different septic
)");
    t.push_back(std::string(R"(name=sextic-62
title=celestial of type (6,2)
citation=(celestial of type (6,2))
domain=gaussian
equation=w^2*(x^2+y^2+z^2-2*y*z)*(x^2+y^2+z^2+2*y*z)-4*x^2*(x^2+y^2+z^2)^2
type=6,2
sng=2:2,1:2,1:2,1:2,1:2,1:2,1:2,1:2
sng_complete=true

[singular-curve]
label=absolute conic
param_x=s^2-t^2
param_y=i*(s^2+t^2)
param_z=2*s*t
param_w=0

[singular-curve]
label=rho+
param_x=s
param_y=i*s
param_z=0
param_w=t

[singular-curve]
label=rho-
param_x=s
param_y=-i*s
param_z=0
param_w=t

[singular-curve]
label=rho'+
param_x=s
param_y=0
param_z=i*s
param_w=t

[singular-curve]
label=rho'-
param_x=s
param_y=0
param_z=-i*s
param_w=t

[singular-curve]
label=lambda+
param_x=0
param_y=s
param_z=s
param_w=t

[singular-curve]
label=lambda-
param_x=0
param_y=s
param_z=-s
param_w=t

[singular-curve]
label=kappa
param_x=0
param_y=s
param_z=t
param_w=0

[singular-curve]
label=y=w+2x=0
expect=smooth
param_x=s
param_y=0
param_z=t
param_w=-2*s

[singular-curve]
label=y=w-2x=0
expect=smooth
param_x=s
param_y=0
param_z=t
param_w=2*s

[singular-curve]
label=z=w+2x=0
expect=smooth
param_x=s
param_y=t
param_z=0
param_w=-2*s

[singular-curve]
label=z=w-2x=0
expect=smooth
param_x=s
param_y=t
param_z=0
param_w=2*s
)") + families("mu6", "x^2+y^2+z^2", "y*w", "x^2+y^2+z^2", "z*w"));
    t.push_back(std::string(R"(name=septic-73
title=celestial of type (7,3)
citation=(celestial of type (7,3))
domain=gaussian
equation=w*(4*x^6+8*x^5*y+4*x^5*w+16*x^4*y^2+4*x^4*y*w+8*x^4*z^2+x^4*w^2+16*x^3*y^3+8*x^3*y^2*w+16*x^3*y*z^2+8*x^3*z^2*w+20*x^2*y^4+8*x^2*y^3*w+24*x^2*y^2*z^2+2*x^2*y^2*w^2+4*x^2*z^4+2*x^2*z^2*w^2+8*x*y^5+4*x*y^4*w+16*x*y^3*z^2+8*x*y^2*z^2*w+8*x*y*z^4+4*x*z^4*w+8*y^6+4*y^5*w+16*y^4*z^2+y^4*w^2+8*y^2*z^4-2*y^2*z^2*w^2-4*y*z^4*w+z^4*w^2)+8*y*(x^2+y^2+z^2)^3
type=7,3
sng=2:3

[singular-curve]
label=absolute conic
param_x=s^2-t^2
param_y=i*(s^2+t^2)
param_z=2*s*t
param_w=0
)") + families("f*b0*finv*t(-1,-1,0)", "x^2+y^2+z^2", "y*w", "x^2+y^2+z^2", "z*w"));
    t.push_back(std::string(R"(name=octic-84
title=celestial of type (8,4)
citation=(celestial of type (8,4))
domain=gaussian
equation=w^2*(12*x^6+36*x^4*y^2+28*x^4*z^2-64*x^4*z*w+26*x^4*w^2+36*x^2*y^4+56*x^2*y^2*z^2-64*x^2*y^2*z*w-12*x^2*y^2*w^2+20*x^2*z^4-64*x^2*z^3*w+100*x^2*z^2*w^2-64*x^2*z*w^3+12*x^2*w^4+12*y^6+28*y^4*z^2-38*y^4*w^2+20*y^2*z^4-28*y^2*z^2*w^2+12*y^2*w^4+4*z^6-6*z^4*w^2+4*z^2*w^4-w^6)-(x^2+y^2+z^2)^4
type=8,4
sng=2:4

[singular-curve]
label=absolute conic
param_x=s^2-t^2
param_y=i*(s^2+t^2)
param_z=2*s*t
param_w=0
)") + families("mu5", "x^2+y^2+z^2-2*z*w+w^2", "-y*w", "-(x^2+y^2+z^2)+w^2", "x^2+y^2+z^2-2*z*w+w^2"));

    const std::string table = "classification of real celestials of type (2,0)";
    t.push_back(quadric("eh1", "EH1", "$\\alpha_0x^2 + \\alpha_1y^2 - z^2 - w^2=0$", "x^2+2*y^2-z^2-w^2", 17, "12", 4, 1));
    t.push_back(quadric("eh2", "EH2", "$\\alpha_0x^2 + \\alpha_1y^2 - z^2 + w^2=0$", "x^2+2*y^2-z^2+w^2", 17, "1145", 2, 1));
    t.push_back(quadric("e", "E", "$\\alpha_0x^2 + \\alpha_1y^2 + z^2 - w^2=0$", "3*x^2+2*y^2+z^2-w^2", 17, "1145", 2, 1));
    t.push_back(quadric("eo", "EO", "$\\alpha_0x^2 + \\alpha_1y^2 - z^2      =0$", "x^2+2*y^2-z^2", 19, "12,1345", 3, 1));
    t.push_back(quadric("hp", "HP", "$\\alpha_0x^2 - \\alpha_1y^2 - zw       =0$", "x^2-2*y^2-z*w", 20, "12,23", 2, 0));
    t.push_back(quadric("ep", "EP", "$\\alpha_0x^2 + \\alpha_1y^2 - zw       =0$", "x^2+2*y^2-z*w", 20, "24,1125", 2, 1));
    t.push_back(quadric("ch1", "CH1", "$\\alpha_0x^2 + \\alpha_0y^2 - z^2 - w^2=0$", "x^2+y^2-z^2-w^2", 21, "12,1125,34", 3, 0) +
                R"(model=c^2+d^2-d*e

[point]
system=model
coords=0,0,0,1,1

[point]
system=model
domain=gaussian
coords=1,i,0,0,0

[point]
system=model
domain=gaussian
coords=1,-i,0,0,0
)");
    t.push_back(quadric("ey", "EY", "$\\alpha_0x^2 + \\alpha_1y^2       - w^2=0$", "x^2+2*y^2-w^2", 24, "12,1135,24", 3, 1));
    t.push_back(quadric("co", "CO", "$\\alpha_0x^2 + \\alpha_0y^2 - z^2      =0$", "x^2+y^2-z^2", 25, "12,1345,1125,34", 2, 0));
    t.push_back(quadric("cy", "CY", "$\\alpha_0x^2 + \\alpha_0y^2       - w^2=0$", "x^2+y^2-w^2", 30, "12,35,1135,24,1124", 2, 0));
    (void)table;
    return t;
}

}  // namespace

const std::vector<SurfaceRecord>& catalog() {
    static const std::vector<SurfaceRecord> records = [] {
        std::vector<SurfaceRecord> out;
        for (const auto& text : embedded_texts()) out.push_back(parse_surface_text(text));
        return out;
    }();
    return records;
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (const auto& r : catalog()) out.push_back(r.name);
    return out;
}

namespace {

std::size_t edit_distance(const std::string& a, const std::string& b) {
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j)
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

}  // namespace

const SurfaceRecord& lookup(const std::string& name) {
    std::string key = name;
    std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });
    for (const auto& r : catalog())
        if (r.name == key) return r;
    std::string best;
    std::size_t bestd = 4;
    for (const auto& r : catalog()) {
        std::size_t d = edit_distance(key, r.name);
        if (d < bestd) {
            bestd = d;
            best = r.name;
        }
    }
    throw CatalogError("unknown surface '" + name + "'" + (best.empty() ? "" : "; did you mean '" + best + "'?"));
}

// ------------------------------------------------------------ expected tables

const ExpectedTables& expected_tables() {
    static const ExpectedTables tables = [] {
        ExpectedTables t;
        t.citations = {
            {"c1", "effective Del Pezzo zero-set of weak Del Pezzo surfaces of degree four"},
            {"real", "real structures of weak Del Pezzo surfaces of degree four"},
            {"g", "Each entry in the table denotes the possible cardinalities of $G_{\\textbf{R}}({\\textrm{Y}})$"},
            {"m4", "Up to real Cremona equivalence ${\\textrm{M}}$ is in the following table"},
            {"m4-claim", "where $\\#{\\textbf{C}}$, $\\#{\\textbf{R}}$, $\\#F$ and $\\#P$ are as in Proposition"},
            {"m4-classes", "unprojected classes of families of circles and singularities"},
            {"quadrics", "classification of real celestials of type (2,0)"},
            {"schicho", "the `classes' column denotes the divisor classes of the conical families"},
            {"types", "weak Del Pezzo surface of one of the following types"},
            {"types-lattice", "We have that $(d,c)$ is not equal to $(4,1)$ or $(5,1)$."},
            {"types-30", "We have that $(d,c)$ is not equal to $(3,0)$."},
            {"types-d3", "We have that $d-c\\neq 3$."},
        };

        t.c1 = {
            {16, {}, "A0"},
            {17, {"45"}, "A1"},
            {18, {"23", "45"}, "2A1"},
            {19, {"1123", "45"}, "2A1"},
            {20, {"34", "45"}, "A2"},
            {21, {"1123", "23", "45"}, "3A1"},
            {22, {"12", "34", "45"}, "A2+A1"},
            {23, {"23", "34", "45"}, "A3"},
            {24, {"1123", "34", "45"}, "A3"},
            {25, {"1145", "1123", "23", "45"}, "4A1"},
            {26, {"1123", "12", "23", "45"}, "A2+2A1"},
            {27, {"1123", "12", "34", "45"}, "A3+A1"},
            {28, {"12", "23", "34", "45"}, "A4"},
            {29, {"1123", "23", "34", "45"}, "D4"},
            {30, {"1145", "1123", "12", "23", "45"}, "A3+2A1"},
            {31, {"1123", "12", "23", "34", "45"}, "D5"},
        };

        t.real = {
            {10, {"H", "Q1", "Q2", "Q3", "Q4", "Q5"}},
            {11, {"H", "Q1", "Q2", "Q3", "Q5", "Q4"}},
            {12, {"H", "Q1", "Q3", "Q2", "Q5", "Q4"}},
            {13, {"2H-Q1-Q2-Q3", "H-Q2-Q3", "H-Q1-Q3", "H-Q1-Q2", "Q5", "Q4"}},
            {14, {"2H-Q1-Q2-Q3", "H-Q2-Q3", "H-Q1-Q2", "H-Q1-Q3", "Q5", "Q4"}},
            {15, {"3H-2Q1-Q2-Q3-Q4-Q5", "2H-Q1-Q2-Q3-Q4-Q5", "H-Q1-Q2", "H-Q1-Q3", "H-Q1-Q4", "H-Q1-Q5"}},
        };

        // Rows CI 16..31, columns RI 10..15; 0 marks a blank cell.
        const std::vector<std::vector<std::set<int>>> g = {
            {{10}, {6}, {2}, {6}, {2}, {2}},
            {{8}, {4, 6}, {2}, {4}, {2}, {}},
            {{6}, {4}, {2}, {}, {}, {}},
            {{7}, {3}, {}, {3, 5}, {1}, {1}},
            {{6}, {2}, {}, {2}, {2}, {}},
            {{5}, {3}, {}, {3}, {1}, {}},
            {{4}, {2}, {}, {}, {}, {}},
            {{4}, {}, {2}, {}, {}, {}},
            {{5}, {1}, {}, {1, 3}, {}, {}},
            {{4}, {}, {2}, {2, 4}, {}, {}},
            {{3}, {}, {}, {}, {1}, {}},
            {{3}, {1}, {}, {}, {}, {}},
            {{2}, {}, {}, {}, {}, {}},
            {{3}, {}, {}, {1}, {}, {}},
            {{2}, {}, {}, {2}, {}, {}},
            {{1}, {}, {}, {}, {}, {}},
        };
        for (int ci = 16; ci <= 31; ++ci)
            for (int ri = 10; ri <= 15; ++ri) {
                const auto& cell = g[static_cast<std::size_t>(ci - 16)][static_cast<std::size_t>(ri - 10)];
                if (!cell.empty()) t.g[{ci, ri}] = cell;
            }

        t.m4 = {
            {16, 13, "A0", 0, 0, 6, 3, "-", "", "Blum cyclide"},
            {16, 14, "A0", 0, 0, 2, 1, "-", "", "sphere cyclide"},
            {16, 15, "A0", 0, 0, 2, 1, "-", "", "2 components"},
            {17, 13, "A1", 1, 1, 4, 1, "EH1", "", ""},
            {17, 14, "A1", 1, 1, 2, 1, "E or EH2", "", ""},
            {19, 13, "2A1", 2, 2, 3, 1, "EO", "", ""},
            {19, 13, "2A1", 2, 0, 5, 2, "-", "", "Perseus cyclide"},
            {20, 13, "A2", 1, 1, 2, 0, "HP", "butterfly", ""},
            {20, 14, "A2", 1, 1, 2, 1, "EP", "", ""},
            {21, 13, "3A1", 3, 1, 3, 0, "CH1", "", ""},
            {24, 13, "A3", 1, 1, 3, 1, "EY", "", ""},
            {25, 13, "4A1", 4, 2, 2, 0, "CO", "", ""},
            {25, 13, "4A1", 4, 0, 4, 1, "-", "", "Dupin cyclide"},
            {30, 13, "A3+2A1", 3, 1, 2, 0, "CY", "", ""},
        };

        t.m4_classes = {
            {16, 13, "A0", {}, {}, {"a1", "a2", "a3", "b1", "b2", "b3"}},
            {16, 14, "A0", {}, {}, {"a1", "b1"}},
            {16, 15, "A0", {}, {}, {"a1", "b1"}},
            {17, 13, "A1", {"12"}, {"12"}, {"a1", "a3", "b3", "b2"}},
            {17, 14, "A1", {"1145"}, {"1145"}, {"a1", "b1"}},
            {19, 13, "2A1", {"12", "1345"}, {"12", "1345"}, {"a1", "a3", "b3"}},
            {19, 13, "2A1", {"14", "1235"}, {"1235", "14"}, {"a1", "a2", "a3", "b2", "b3"}},
            {20, 13, "A2", {"12", "23"}, {"12", "23"}, {"a1", "b3"}},
            {20, 14, "A2", {"24", "1125"}, {"1125", "24"}, {"a1", "b1"}},
            {21, 13, "3A1", {"12", "1125", "34"}, {"12", "34", "1125"}, {"a1", "a3", "b2"}},
            {24, 13, "A3", {"12", "1135", "24"}, {"12", "24", "1135"}, {"a1", "a3", "b3"}},
            {25, 13, "4A1", {"12", "1345", "1125", "34"}, {"12", "1345", "34", "1125"}, {"a1", "a3"}},
            {25, 13, "4A1", {"14", "1134", "25", "1235"}, {"1235", "25", "1134", "14"}, {"a1", "a2", "a3", "b3"}},
            {30, 13, "A3+2A1", {"12", "35", "1135", "24", "1124"}, {"12", "1124", "24", "1135", "35"}, {"a1", "a3"}},
        };

        t.quadrics = {
            {"eh1", 1, 1, 4, 1}, {"eh2", 1, 1, 2, 1}, {"e", 1, 1, 2, 1},  {"eo", 2, 2, 3, 1}, {"hp", 1, 1, 2, 0},
            {"ep", 1, 1, 2, 1},  {"ch1", 3, 1, 3, 0}, {"ey", 1, 1, 3, 1}, {"co", 4, 2, 2, 0}, {"cy", 3, 1, 2, 0},
        };

        t.schicho = {
            {1, "9", "DP", "B(0)", "H", 1, "2", {"2H"}, 5, "plane"},
            {2, "9", "DP", "B(0)", "2H", 4, "5", {"H"}, 2, "Veronese surface"},
            {3, "8", "DP", "P(0)", "H+F", 2, "3", {"H+F"}, 3, "saddle"},
            {4, "8", "DP", "P(0)", "2H+2F", 8, "8", {"H", "F"}, 1, "smooth"},
            {5, "8", "DP", "P(2)", "H", 2, "3", {"H"}, 3, "singular cone"},
            {6, "3,...,7", "DP", "B(r)", "3H-Q1-...-Qr", -1, "9-r", {}, 1, "normal"},
            {7, "8", "HZ", "P(0)", "H+2F", 4, "5", {"H"}, 1, "ruled by lines"},
            {8, "0", "HZ", "P(1)", "H+F", 3, "4", {"H"}, 2, "ruled by lines"},
        };

        t.types = {
            {1, 0, "admissible", "plane"},
            {2, 1, "admissible", "sphere"},
            {2, 0, "admissible", ""},
            {3, 1, "admissible", ""},
            {4, 2, "admissible", ""},
            {4, 0, "admissible", ""},
            {6, 2, "admissible", ""},
            {7, 3, "admissible", ""},
            {8, 4, "admissible", ""},
            {4, 1, "lattice filter", "types-lattice"},
            {5, 1, "lattice filter", "types-lattice"},
            {3, 0, "asserted", "types-30"},
            {5, 2, "asserted", "types-d3"},
            {6, 3, "asserted", "types-d3"},
        };
        t.type_groups = {{2, {"inf", 2}}, {4, {"10", 3}}, {8, {"2", 4}}};

        t.class_sets = {
            {"84c", "P(0)", {"2H", "2F", "H+F"}, "We have that $C\\in \\{ 2H, 2F, H+F \\}$."},
            {"84d", "P(0)", {"2H+2F"}, "We have that $W=2H+2F$."},
            {"84e", "P(0)", {"H", "F"}, "$G({\\textrm{Y}})=G_{circles}({\\textrm{Y}})=\\{H,F\\}$"},
            {"73c", "B(2)", {"2H-Q1-Q2", "2H-2Q1", "2H-2Q2"},
             "We have that $C\\in \\{~ 2H-Q_1-Q_2,~ 2(H-Q_1),~ 2(H-Q_2) ~\\}$."},
            {"73e", "B(2)", {"A:2H", "B:H-Q1-Q2", "F:0"}, "$A=2H$, $B=H-Q_1-Q_2$"},
            {"73e-E", "B(2)", {"Q1", "Q2", "H-Q1-Q2"}, "$E({\\textrm{Y}})=\\{~ Q_1,~ Q_2,~ H-Q_1-Q_2 ~\\}$"},
            {"73e-G", "B(2)", {"H-Q1", "H-Q2"}, "$G({\\textrm{Y}})=G_{circles}({\\textrm{Y}})=\\{~ H-Q_1,~ H-Q_2 ~\\}$"},
            {"62c", "B(3)", {"2H-Q1-Q2", "2H-Q1-Q3", "2H-Q2-Q3", "2H-2Q1", "2H-2Q2", "2H-2Q3"},
             "$C=2H-Q_i-Q_j$ or $C=2(H-Q_i)$ for some $i\\neq j\\in[1,3]$"},
            {"62e", "B(3)", {"A:2H-2Q3", "B:Q3", "B:H-Q1-Q2", "F:0"}, "$A=2(H-Q_3)$, $B=(Q_3) + (H-Q_1-Q_2)$, $F=0$"},
            {"62f", "B(3)", {"A:2H-Q2-Q3", "B:Q3", "B:H-Q1-Q2", "F:Q2-Q3"},
             "$A = 2H-Q_2-Q_3$, $B = (Q_3) + (H-Q_1-Q_2)$, $F = Q_2-Q_3$"},
            {"62g", "B(3)", {"A:2H-Q2-Q3", "B:Q3", "B:Q3", "F:H-Q1-2Q3"},
             "($A=2H-Q_2-Q_3$, $B=Q_3 + Q_3$ and $F=(Q_2-Q_3) + (H-Q_1-Q_2-Q_3)$)"},
            {"62e-E", "B(3)", {"Q1", "Q2", "Q3", "H-Q1-Q2", "H-Q1-Q3", "H-Q2-Q3"},
             "$E({\\textrm{Y}})=\\{~Q_i, H-Q_i-Q_j~~|~~i\\neq j \\in [1,3]~\\}$"},
            {"62e-G", "B(3)", {"H-Q1", "H-Q2", "H-Q3"}, "$G({\\textrm{Y}})=\\{~H-Q_i~~|~~i\\in[1,3]~\\}$"},
            {"62fg-G", "B(3)", {"H-Q1", "H-Q2"}, "$G({\\textrm{Y}})=\\{~ H-Q_1,~ H-Q_2 ~\\}$"},
            {"62-circles", "B(3)", {"H-Q1", "H-Q2"}, "$G_{circles}({\\textrm{Y}})=\\{~ H-Q_1,~ H-Q_2 ~\\}$"},
            {"62f-E", "B(3)", {"Q1", "Q3", "H-Q1-Q2", "H-Q2-Q3"},
             "$E({\\textrm{Y}})=\\{~ Q_1,~ Q_3 ,~ H-Q_1-Q_2 ,~ H-Q_2-Q_3 ~\\}$"},
            {"62g-E", "B(3)", {"Q1", "Q3"}, "$E({\\textrm{Y}})=\\{~ Q_1,~ Q_3 ~\\}$"},
            {"40b-F", "B(5)", {"14", "1134", "25", "1235"}, "$F({\\textrm{Y}})=\\{14,1134,25,1235\\}$"},
            {"40b-G", "B(5)", {"a1", "a2", "a3", "b3"}, "$G({\\textrm{Y}})=\\{a1,a2,a3,b3\\}$"},
            {"40b-circles", "B(5)", {"a1", "a2"}, "$G_{circles}=\\{a1,a2\\}$"},
            {"40c", "B(5)", {"H-Q1-Q2", "Q3", "Q4", "Q5"}, "$W=(14)+(1134)+(25)+(1235)+(H-Q_1-Q_2)+(Q_3)+(Q_4)+(Q_5)$"},
            {"m8-real", "B(5)", {"14", "1235", "25", "1134"}, "$\\sigma(14)=1235$, $\\sigma(25)=1134$"},
        };
        return t;
    }();
    return tables;
}

}  // namespace celestial
