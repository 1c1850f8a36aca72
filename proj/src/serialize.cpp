#include "bowforge/serialize.hpp"

#include "bowforge/errors.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace bowforge {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object())
        throw ParseError(std::string("expected an object with field '") + key + "'");
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

Int as_int(const Json& j, const char* what)
{
    if (!j.is_number_integer())
        throw ParseError(std::string("expected an integer for '") + what + "'");
    return j.get<Int>();
}

std::vector<Int> as_int_array(const Json& j, const char* what)
{
    if (!j.is_array())
        throw ParseError(std::string("expected an array for '") + what + "'");
    std::vector<Int> out;
    for (const auto& x : j)
        out.push_back(as_int(x, what));
    return out;
}

int as_small(const Json& j, const char* what)
{
    Int v = as_int(j, what);
    if (v < -1000000 || v > 1000000)
        throw ParseError(std::string("value out of range for '") + what + "'");
    return static_cast<int>(v);
}

} // namespace

Json load_json(const std::string& source)
{
    std::string text;
    auto first = source.find_first_not_of(" \t\r\n");
    if (source == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else if (first != std::string::npos
               && (source[first] == '{' || source[first] == '[' || source[first] == '"')) {
        text = source;
    } else {
        std::ifstream in(source);
        if (!in)
            throw ParseError("cannot open '" + source + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Rational(j.get<Int>());
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const DomainError& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("expected an integer or a \"p/q\" string");
}

Json to_json(const AffineWeight& w)
{
    return Json{{"n", w.n}, {"level", w.level}, {"profile", w.profile}, {"delta", to_json(w.delta)}};
}

AffineWeight weight_from_json(const Json& j)
{
    int n = as_small(field(j, "n"), "n");
    int level = as_small(field(j, "level"), "level");
    auto profile = as_int_array(field(j, "profile"), "profile");
    Rational delta(0);
    if (j.contains("delta"))
        delta = rational_from_json(j["delta"]);
    return AffineWeight(n, level, std::move(profile), delta);
}

Json to_json(const RootVector& v) { return v.c; }

Json to_json(const GYDiagram& d)
{
    return Json{{"rank", d.rank}, {"level", d.level}, {"entries", d.entries}};
}

GYDiagram gyd_from_json(const Json& j)
{
    return GYDiagram(as_small(field(j, "rank"), "rank"), as_small(field(j, "level"), "level"),
                     as_int_array(field(j, "entries"), "entries"));
}

Json to_json(const BowDiagram& d)
{
    Json nodes = Json::array();
    Json params = Json::array();
    for (const auto& node : d.nodes) {
        nodes.push_back(Json{{"kind", node.kind == NodeKind::X ? "x" : "o"}});
        if (node.kind == NodeKind::O)
            params.push_back(Json{{"sym", node.param.sym}, {"nu_star", node.param.nu_star}});
    }
    return Json{{"shape", d.shape == Shape::Circle ? "circle" : "line"},
                {"nodes", nodes},
                {"dims", d.dims},
                {"base", d.base},
                {"params", params}};
}

BowDiagram bow_from_json(const Json& j)
{
    BowDiagram d;
    const Json& shape = field(j, "shape");
    if (shape == "circle")
        d.shape = Shape::Circle;
    else if (shape == "line")
        d.shape = Shape::Line;
    else
        throw ParseError("shape must be \"circle\" or \"line\"");

    const Json& nodes = field(j, "nodes");
    if (!nodes.is_array())
        throw ParseError("expected an array for 'nodes'");
    for (const auto& node : nodes) {
        const Json& kind = field(node, "kind");
        BowNode b;
        if (kind == "x")
            b.kind = NodeKind::X;
        else if (kind == "o")
            b.kind = NodeKind::O;
        else
            throw ParseError("node kind must be \"x\" or \"o\"");
        d.nodes.push_back(b);
    }
    d.dims = as_int_array(field(j, "dims"), "dims");
    d.base = j.contains("base") ? as_small(j["base"], "base") : 0;

    std::vector<OParam> params;
    if (j.contains("params")) {
        const Json& ps = j["params"];
        if (!ps.is_array())
            throw ParseError("expected an array for 'params'");
        for (const auto& p : ps) {
            OParam q;
            q.sym = as_small(field(p, "sym"), "sym");
            q.nu_star = p.contains("nu_star") ? as_int(p["nu_star"], "nu_star") : 0;
            params.push_back(q);
        }
    }
    std::size_t k = 0;
    for (auto& node : d.nodes) {
        if (node.kind != NodeKind::O)
            continue;
        if (params.empty())
            node.param = OParam{static_cast<int>(k + 1), 0};
        else if (k < params.size())
            node.param = params[k];
        else
            throw ParseError("'params' needs one entry per O node");
        ++k;
    }
    if (!params.empty() && params.size() != k)
        throw ParseError("'params' needs one entry per O node");
    d.validate();
    return d;
}

Json to_json(const InvariantRecord& r)
{
    return Json{{"h_syms", r.h_syms},       {"n_h", r.n_h},       {"n_x", r.n_x},
                {"n_pair_h", r.n_pair_h}, {"n_pair_x", r.n_pair_x}, {"quad_h", r.quad_h},
                {"quad_x", r.quad_x}};
}

Json to_json(const SeparatedRecord& r)
{
    Json params = Json::array();
    for (const auto& p : r.params)
        params.push_back(Json{{"sym", p.sym}, {"nu_star", p.nu_star}});
    return Json{{"n", r.n}, {"tlambda", r.tlambda}, {"mu", r.mu}, {"v0", r.v0}, {"params", params}};
}

SeparatedRecord separated_from_json(const Json& j)
{
    SeparatedRecord r;
    r.n = as_small(field(j, "n"), "n");
    r.tlambda = as_int_array(field(j, "tlambda"), "tlambda");
    r.mu = as_int_array(field(j, "mu"), "mu");
    r.v0 = as_int(field(j, "v0"), "v0");
    if (j.contains("params")) {
        for (const auto& p : j["params"])
            r.params.push_back(OParam{as_small(field(p, "sym"), "sym"),
                                      p.contains("nu_star") ? as_int(p["nu_star"], "nu_star") : 0});
    } else {
        for (std::size_t k = 0; k < r.tlambda.size(); ++k)
            r.params.push_back(OParam{static_cast<int>(k + 1), 0});
    }
    return r;
}

Json to_json(const MayaDiagram& m)
{
    return Json{{"n", m.n}, {"l", m.l}, {"rows", m.rows}};
}

MayaDiagram maya_from_json(const Json& j)
{
    const Json& rows = field(j, "rows");
    if (!rows.is_array())
        throw ParseError("expected an array for 'rows'");
    std::vector<std::vector<Int>> rs;
    for (const auto& r : rows)
        rs.push_back(as_int_array(r, "rows"));
    return MayaDiagram(as_small(field(j, "n"), "n"), as_small(field(j, "l"), "l"), std::move(rs));
}

Json to_json(const MayaStats& s)
{
    return Json{{"row_charge", s.row_charge}, {"column_stat", s.column_stat}, {"v0", s.v0}};
}

Json to_json(const FixedPointQuery& q)
{
    return Json{{"lambda", to_json(q.lambda)},       {"mu", to_json(q.mu)},
                {"row_targets", q.row_targets},    {"column_targets", q.column_targets},
                {"v0", q.v0},                      {"empty", q.empty}};
}

Json to_json(const EnumerationResult& r)
{
    Json ds = Json::array();
    for (const auto& m : r.diagrams)
        ds.push_back(to_json(m));
    return Json{{"count", r.diagrams.size()},
                {"window", {r.window_lo, r.window_hi}},
                {"touches_bound", r.touches_bound},
                {"diagrams", ds}};
}

Json to_json(const DeformedFixedPoint& p)
{
    return Json{{"mu1", to_json(p.mu1)}, {"mu2", to_json(p.mu2)}, {"v1", p.v1.c}, {"v2", p.v2.c}};
}

Json to_json(const Sl2RestrictionData& d)
{
    Json strata = Json::array();
    for (const auto& s : d.strata)
        strata.push_back(Json{{"w", s.w}, {"v", s.v}, {"tau1", s.tau1}, {"tau2", s.tau2}});
    return Json{{"lambda_prime", d.lambda_prime}, {"mu_prime", d.mu_prime}, {"strata", strata}};
}

Json to_json(const AInfinityWeight& w)
{
    Json coeffs = Json::array();
    for (const auto& [index, c] : w.root_coeffs)
        coeffs.push_back(Json{{"index", index}, {"coeff", c}});
    return Json{{"base", "Lambda_0"}, {"minus", coeffs}};
}

Json to_json(const FockState& s) { return Json{{"flips", s.flips}}; }

FockState fock_state_from_json(const Json& j)
{
    if (j.is_array())
        return fock_state(as_int_array(j, "flips"));
    return fock_state(as_int_array(field(j, "flips"), "flips"));
}

Json to_json(const FockVector& v)
{
    Json terms = Json::array();
    for (const auto& [s, c] : v.terms)
        terms.push_back(Json{{"flips", s.flips}, {"coeff", to_json(c)}});
    return Json{{"n", v.n}, {"terms", terms}};
}

Json to_json(const CharReport& r)
{
    Json rows = Json::array();
    for (const auto& row : r.rows)
        rows.push_back(Json{{"mu", to_json(row.mu)},
                            {"fock", row.fock},
                            {"convolution", row.convolution},
                            {"ok", row.ok}});
    return Json{{"pass", r.pass}, {"rows", rows}};
}

Json to_json(const RelationReport& r)
{
    return Json{{"pass", r.pass}, {"checked", r.checked}, {"failures", r.failures}};
}

Json to_json(const CrystalReport& r)
{
    Json rows = Json::array();
    for (const auto& row : r.rows)
        rows.push_back(Json{{"mu", to_json(row.mu)}, {"crystal", row.crystal}, {"mult", row.mult}});
    return Json{{"pass", r.pass},
                {"elements", r.elements},
                {"inverse_ok", r.inverse_ok},
                {"rows", rows}};
}

} // namespace bowforge
