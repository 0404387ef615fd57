#include "ndr/serialize.hpp"

#include <set>

namespace ndr {

namespace {

void require_keys(const json& j, const std::set<std::string>& allowed,
                  const std::set<std::string>& required, const std::string& what)
{
    if (!j.is_object())
        throw spec_format_error(what + ": expected a JSON object");
    for (const auto& [k, v] : j.items())
        if (!allowed.count(k))
            throw spec_format_error(what + ": unknown key '" + k + "'");
    for (const auto& k : required)
        if (!j.contains(k))
            throw spec_format_error(what + ": missing key '" + k + "'");
}

json rational_to_json(const Rational& r)
{
    if (denominator(r) == 1) {
        const Integer& n = numerator(r);
        if (n >= std::numeric_limits<std::int64_t>::min() &&
            n <= std::numeric_limits<std::int64_t>::max())
            return n.convert_to<std::int64_t>();
    }
    return rational_to_string(r);
}

Rational rational_from_json(const json& j)
{
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_number_float()) return Rational(j.get<double>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw spec_format_error("expected a number or \"p/q\" string");
}

} // namespace

json element_to_json(const Element<Rational>& e)
{
    json a = json::array();
    for (const auto& c : e.c) a.push_back(rational_to_json(c));
    return a;
}

Element<Rational> element_from_json(const json& j, Alg alg)
{
    if (!j.is_array() || static_cast<int>(j.size()) != dim_of(alg))
        throw spec_format_error("element must be an array of " + std::to_string(dim_of(alg)) +
                                " entries for algebra " + to_string(alg));
    Element<Rational> e(alg);
    for (int i = 0; i < e.dim(); ++i) e.c[i] = rational_from_json(j[i]);
    return e;
}

json coeff_fn_to_json(const CoeffFn& f)
{
    json a = json::array();
    for (const auto& t : f.terms) {
        json n;
        switch (t.kind) {
        case CoeffTerm::Kind::Constant:
            n["type"] = "constant";
            n["value"] = element_to_json(t.coeffs[0]);
            break;
        case CoeffTerm::Kind::Poly: {
            n["type"] = "poly";
            json cs = json::array();
            for (const auto& c : t.coeffs) cs.push_back(element_to_json(c));
            n["coeffs"] = cs;
            break;
        }
        case CoeffTerm::Kind::Sin:
            n["type"] = "sin";
            n["value"] = element_to_json(t.coeffs[0]);
            n["omega"] = t.omega;
            n["phi"] = t.phi;
            break;
        case CoeffTerm::Kind::Exp:
            n["type"] = "exp";
            n["value"] = element_to_json(t.coeffs[0]);
            n["kappa"] = t.kappa;
            break;
        }
        a.push_back(std::move(n));
    }
    return a;
}

CoeffFn coeff_fn_from_json(const json& j, Alg alg)
{
    if (!j.is_array())
        throw spec_format_error("coefficient function must be an array of expression nodes");
    CoeffFn f = CoeffFn::zero(alg);
    for (const auto& n : j) {
        if (!n.is_object() || !n.contains("type"))
            throw spec_format_error("expression node needs a 'type'");
        const std::string type = n.at("type").get<std::string>();
        CoeffTerm t;
        if (type == "constant") {
            require_keys(n, {"type", "value"}, {"value"}, "constant node");
            t.kind = CoeffTerm::Kind::Constant;
            t.coeffs.push_back(element_from_json(n.at("value"), alg));
        } else if (type == "poly") {
            require_keys(n, {"type", "coeffs"}, {"coeffs"}, "poly node");
            t.kind = CoeffTerm::Kind::Poly;
            for (const auto& c : n.at("coeffs"))
                t.coeffs.push_back(element_from_json(c, alg));
        } else if (type == "sin") {
            require_keys(n, {"type", "value", "omega", "phi"}, {"value", "omega"}, "sin node");
            t.kind = CoeffTerm::Kind::Sin;
            t.coeffs.push_back(element_from_json(n.at("value"), alg));
            t.omega = n.at("omega").get<double>();
            t.phi = n.value("phi", 0.0);
        } else if (type == "exp") {
            require_keys(n, {"type", "value", "kappa"}, {"value", "kappa"}, "exp node");
            t.kind = CoeffTerm::Kind::Exp;
            t.coeffs.push_back(element_from_json(n.at("value"), alg));
            t.kappa = n.at("kappa").get<double>();
        } else {
            throw spec_format_error("unknown expression node type '" + type + "'");
        }
        f.terms.push_back(std::move(t));
    }
    return f;
}

json riccati_spec_to_json(const RiccatiSpec& spec)
{
    json j;
    j["algebra"] = to_string(spec.alg);
    j["b_minus"] = coeff_fn_to_json(spec.b_minus);
    j["b_0L"] = coeff_fn_to_json(spec.b_0L);
    j["b_0R"] = coeff_fn_to_json(spec.b_0R);
    j["b_plus"] = coeff_fn_to_json(spec.b_plus);
    return j;
}

RiccatiSpec riccati_spec_from_json(const json& j)
{
    require_keys(j, {"algebra", "b_minus", "b_0L", "b_0R", "b_plus"},
                 {"algebra", "b_minus", "b_0L", "b_0R", "b_plus"}, "riccati spec");
    RiccatiSpec spec;
    spec.alg = alg_from_string(j.at("algebra").get<std::string>());
    spec.b_minus = coeff_fn_from_json(j.at("b_minus"), spec.alg);
    spec.b_0L = coeff_fn_from_json(j.at("b_0L"), spec.alg);
    spec.b_0R = coeff_fn_from_json(j.at("b_0R"), spec.alg);
    spec.b_plus = coeff_fn_from_json(j.at("b_plus"), spec.alg);
    return spec;
}

json schrodinger_spec_to_json(const SchrodingerSpec& spec)
{
    json j;
    j["hbar"] = spec.hbar;
    j["m"] = spec.m;
    j["E"] = spec.E;
    j["V"] = coeff_fn_to_json(spec.V);
    j["W"] = coeff_fn_to_json(spec.W);
    j["x0"] = spec.x0;
    j["x1"] = spec.x1;
    return j;
}

SchrodingerSpec schrodinger_spec_from_json(const json& j)
{
    require_keys(j, {"hbar", "m", "E", "V", "W", "x0", "x1"}, {"V", "W"}, "schrodinger spec");
    SchrodingerSpec spec;
    spec.hbar = j.value("hbar", 1.0);
    spec.m = j.value("m", 1.0);
    spec.E = j.value("E", 0.0);
    spec.V = coeff_fn_from_json(j.at("V"), Alg::R);
    spec.W = coeff_fn_from_json(j.at("W"), Alg::C);
    spec.x0 = j.value("x0", 0.0);
    spec.x1 = j.value("x1", 1.0);
    return spec;
}

json law_report_to_json(const LawReport& rep)
{
    json j;
    j["algebra"] = to_string(rep.alg);
    j["samples"] = rep.samples;
    j["seed"] = rep.seed;
    j["carrier"] = rep.exact ? "exact" : "float";
    json r;
    for (const auto& [name, v] : rep.residuals) r[name] = v;
    j["residuals"] = r;
    j["max_residual"] = rep.max_residual();
    return j;
}

namespace {

std::string monomial_key(const Monomial& m)
{
    if (m.degree() == 0) return "1";
    std::string s;
    for (int i = 0; i < kMaxVars; ++i) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "o" + std::to_string(i);
        if (m.e[i] > 1) s += "^" + std::to_string(static_cast<int>(m.e[i]));
    }
    return s;
}

json vfield_to_json(const VField& f)
{
    json j;
    j["name"] = f.name;
    j["degree"] = f.degree();
    json comps = json::array();
    for (const auto& p : f.comp) {
        json c = json::object();
        for (const auto& [m, coeff] : p.terms()) c[monomial_key(m)] = rational_to_json(coeff);
        comps.push_back(std::move(c));
    }
    j["components"] = comps;
    return j;
}

} // namespace

json closure_report_to_json(const ClosureReport& rep)
{
    json j;
    j["dimension"] = rep.dimension;
    j["closed"] = rep.closed;
    j["rounds"] = rep.rounds;
    json h = json::object();
    for (const auto& [deg, count] : rep.degree_histogram) h[std::to_string(deg)] = count;
    j["degree_histogram"] = h;
    json basis = json::array();
    for (const auto& f : rep.basis) basis.push_back(vfield_to_json(f));
    j["basis"] = basis;
    if (rep.offending) {
        j["offending"] = vfield_to_json(*rep.offending);
        j["offending_degree"] = rep.offending_degree;
    }
    return j;
}

} // namespace ndr
