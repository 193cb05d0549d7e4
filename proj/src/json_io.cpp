#include "spanpoly/json_io.hpp"

#include <cmath>
#include <sstream>

#include "spanpoly/error.hpp"

namespace spanpoly {

namespace {

bool parse_rational(const std::string& text, Rational& out) {
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    if (!is_int(num) || !is_int(den)) return false;
    BigInt n(num), d(den);
    if (d == 0) return false;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    out = Rational(n, d);
    return true;
}

Json rational_or_number(const Scalar& s, bool real_part) {
    if (s.is_exact()) {
        const Rational& r = real_part ? s.exact_re() : s.exact_im();
        return Json(Scalar::rational_string(r));
    }
    return Json(real_part ? s.to_complex().real() : s.to_complex().imag());
}

}  // namespace

Scalar parse_scalar_text(const std::string& text) {
    Rational r;
    if (parse_rational(text, r)) return Scalar(std::move(r));
    try {
        std::size_t used = 0;
        double v = std::stod(text, &used);
        if (used == text.size()) return Scalar(v);
    } catch (const std::exception&) {
    }
    throw_parse("bad scalar '" + text + "' (expected \"p/q\", an integer, or a decimal)");
}

Scalar parse_scalar_json(const Json& j) {
    if (j.is_string()) {
        Rational r;
        if (!parse_rational(j.get<std::string>(), r))
            throw_parse("bad rational string '" + j.get<std::string>() + "'");
        return Scalar(std::move(r));
    }
    if (j.is_number_integer()) return Scalar(Rational(j.get<long long>()));
    if (j.is_number_float()) return Scalar(j.get<double>());
    if (j.is_object()) {
        Json re = j.value("re", Json(0));
        Json im = j.value("im", Json(0));
        bool exact = (re.is_string() || re.is_number_integer()) &&
                     (im.is_string() || im.is_number_integer());
        if (exact) {
            auto part = [](const Json& x) {
                if (x.is_number_integer()) return Rational(x.get<long long>());
                Rational r;
                if (!parse_rational(x.get<std::string>(), r))
                    throw_parse("bad rational string '" + x.get<std::string>() + "'");
                return r;
            };
            return Scalar(part(re), part(im));
        }
        return Scalar(Complex(re.get<double>(), im.get<double>()));
    }
    throw_parse("bad scalar value: " + j.dump());
}

Json scalar_to_json(const Scalar& s) {
    if (s.is_exact()) {
        if (s.exact_im() == 0) return Json(s.exact_real_string());
        return Json{{"re", Scalar::rational_string(s.exact_re())},
                    {"im", Scalar::rational_string(s.exact_im())}};
    }
    Complex z = s.to_complex();
    if (z.imag() == 0.0) return Json(z.real());
    return Json{{"re", z.real()}, {"im", z.imag()}};
}

Json unipoly_to_json(const UniPoly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(scalar_to_json(c));
    return Json{{"coeffs", coeffs}, {"degree", p.degree()}};
}

UniPoly unipoly_from_json(const Json& j) {
    const Json* arr = nullptr;
    if (j.is_array()) {
        arr = &j;
    } else if (j.is_object() && j.contains("coeffs")) {
        arr = &j.at("coeffs");
    } else {
        throw_parse("univariate polynomial: expected {\"coeffs\":[...]} or a bare array");
    }
    std::vector<Scalar> coeffs;
    for (const auto& item : *arr) coeffs.push_back(parse_scalar_json(item));
    return UniPoly(std::move(coeffs));
}

Json multipoly_to_json(const MultiPoly& p) {
    Json vars = Json::array();
    for (VertexId v : p.vars()) vars.push_back(v);
    Json terms = Json::array();
    for (const auto& t : p.terms()) {
        Json exp = Json::object();
        for (const auto& [v, e] : t.exp.entries()) exp[std::to_string(v)] = e;
        Json term{{"exp", exp}};
        term["re"] = rational_or_number(t.coeff, true);
        Json im = rational_or_number(t.coeff, false);
        bool im_zero = (im.is_string() && im.get<std::string>() == "0") ||
                       (im.is_number() && im.get<double>() == 0.0);
        if (!im_zero) term["im"] = im;
        terms.push_back(std::move(term));
    }
    return Json{{"vars", vars}, {"terms", terms}};
}

MultiPoly multipoly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
        throw_parse("multivariate polynomial: expected {\"vars\":[...],\"terms\":[...]}");
    std::vector<VertexId> vars;
    for (const auto& v : j.at("vars")) vars.push_back(v.get<VertexId>());
    TermAccumulator acc;
    for (const auto& term : j.at("terms")) {
        DegreeVector exp;
        for (const auto& [key, val] : term.at("exp").items()) {
            VertexId v;
            try {
                v = static_cast<VertexId>(std::stoul(key));
            } catch (const std::exception&) {
                throw_parse("polynomial term: bad vertex id '" + key + "'");
            }
            exp = exp.incremented(v, val.get<std::uint32_t>());
        }
        Scalar re = term.contains("re") ? parse_scalar_json(term.at("re")) : Scalar(0);
        Scalar im = term.contains("im") ? parse_scalar_json(term.at("im")) : Scalar(0);
        Scalar coeff = re;
        if (!im.is_zero()) {
            if (re.is_exact() && im.is_exact())
                coeff = Scalar(re.exact_re(), im.exact_re());
            else
                coeff = Scalar(Complex(re.to_complex().real(), im.to_complex().real()));
        }
        auto [it, inserted] = acc.emplace(std::move(exp), coeff);
        if (!inserted) it->second += coeff;
    }
    return MultiPoly::from_accumulator(std::move(vars), std::move(acc));
}

Json graph_to_json(const Graph& g) {
    Json vertices = Json::array();
    for (VertexId v : g.vertices()) vertices.push_back(v);
    Json edges = Json::array();
    for (const Edge& e : g.edges())
        edges.push_back(Json{{"u", e.u}, {"v", e.v}, {"lambda", scalar_to_json(e.lambda)}});
    return Json{{"vertices", vertices}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw_parse("graph: expected {\"vertices\":[...],\"edges\":[...]}");
    std::vector<VertexId> vertices;
    for (const auto& v : j.at("vertices")) {
        if (!v.is_number_unsigned())
            throw_parse("graph: vertex ids must be nonnegative integers, got " + v.dump());
        vertices.push_back(v.get<VertexId>());
    }
    std::vector<Edge> edges;
    std::size_t idx = 0;
    for (const auto& e : j.at("edges")) {
        if (!e.is_object() || !e.contains("u") || !e.contains("v"))
            throw_parse("graph: edge #" + std::to_string(idx) + " needs fields \"u\" and \"v\"");
        Scalar lambda(1);
        if (e.contains("lambda")) {
            try {
                lambda = parse_scalar_json(e.at("lambda"));
            } catch (const Error& err) {
                throw_parse("graph: edge #" + std::to_string(idx) + ": " + err.what());
            }
        }
        edges.push_back({e.at("u").get<VertexId>(), e.at("v").get<VertexId>(), std::move(lambda)});
        ++idx;
    }
    return Graph(std::move(vertices), std::move(edges));
}

Graph parse_graph(const std::string& text) {
    try {
        return graph_from_json(Json::parse(text));
    } catch (const Json::parse_error& e) {
        // nlohmann reports the byte offset of the failure
        throw_parse(std::string("graph: ") + e.what());
    }
}

std::string serialize_graph(const Graph& g) { return graph_to_json(g).dump(); }

ActivityTable activities_from_json(const Graph& g, const Json& j) {
    if (!j.is_object()) throw_parse("activities: expected a JSON object");
    if (j.contains("all")) {
        std::vector<Scalar> row;
        for (const auto& item : j.at("all")) row.push_back(parse_scalar_json(item));
        return ActivityTable::uniform(g, std::move(row));
    }
    if (!j.contains("activities"))
        throw_parse("activities: expected {\"activities\":{...}} or {\"all\":[...]}");
    std::vector<std::vector<Scalar>> rows(g.vertex_count());
    std::vector<bool> seen(g.vertex_count(), false);
    for (const auto& [key, val] : j.at("activities").items()) {
        VertexId v;
        try {
            v = static_cast<VertexId>(std::stoul(key));
        } catch (const std::exception&) {
            throw_parse("activities: bad vertex id '" + key + "'");
        }
        std::size_t i = g.index_of(v);
        for (const auto& item : val) rows[i].push_back(parse_scalar_json(item));
        seen[i] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i])
            throw_parse("activities: no row for vertex " + std::to_string(g.vertices()[i]));
    return ActivityTable(g, std::move(rows));
}

Json activities_to_json(const Graph& g, const ActivityTable& table) {
    Json rows = Json::object();
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        Json row = Json::array();
        for (const auto& u : table.row(i)) row.push_back(scalar_to_json(u));
        rows[std::to_string(g.vertices()[i])] = std::move(row);
    }
    return Json{{"activities", rows}};
}

Json rootset_to_json(const RootSet& roots) {
    Json arr = Json::array();
    if (roots.origin_multiplicity > 0)
        arr.push_back(Json{{"re", 0.0}, {"im", 0.0}, {"mult", roots.origin_multiplicity}});
    for (const auto& r : roots.roots)
        arr.push_back(Json{{"re", r.value.real()}, {"im", r.value.imag()}, {"mult", r.multiplicity}});
    return Json{{"roots", arr},
                {"origin_multiplicity", roots.origin_multiplicity},
                {"residual", roots.residual},
                {"verified", roots.verified}};
}

std::string rootset_to_csv(const RootSet& roots) {
    std::ostringstream os;
    os.precision(17);
    os << "re,im,mult,modulus,arg\n";
    if (roots.origin_multiplicity > 0)
        os << "0,0," << roots.origin_multiplicity << ",0,0\n";
    for (const auto& r : roots.roots) {
        os << r.value.real() << ',' << r.value.imag() << ',' << r.multiplicity << ','
           << std::abs(r.value) << ',' << std::arg(r.value) << '\n';
    }
    return os.str();
}

Json region_to_json(const Region& r) {
    const char* type = r.is_sector() ? "sector" : (r.is_disk() ? "disk" : "exterior");
    const char* param = r.is_sector() ? "theta" : "kappa";
    return Json{{"type", type}, {param, r.parameter()}, {"pretty", r.pretty()}};
}

}  // namespace spanpoly
