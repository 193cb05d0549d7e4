#include "spanpoly/keys.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <nlohmann/json.hpp>

#include "spanpoly/algebra.hpp"
#include "spanpoly/error.hpp"
#include "spanpoly/json_io.hpp"

namespace spanpoly {

namespace {
constexpr double kPi = std::numbers::pi;
}

KeyPolynomial key_from_activities(std::vector<Scalar> u, unsigned d) {
    if (u.size() != d + 1)
        throw_argument("key: activity vector has length " + std::to_string(u.size()) +
                       ", expected " + std::to_string(d + 1));
    std::vector<Scalar> coeffs(d + 1, Scalar(0));
    for (unsigned j = 0; j <= d; ++j) coeffs[j] = Scalar(Rational(binomial(d, j))) * u[j];
    return KeyPolynomial{d, std::move(u), UniPoly(std::move(coeffs))};
}

std::vector<Scalar> matching_activities(unsigned d) {
    std::vector<Scalar> u(d + 1, Scalar(0));
    u[0] = Scalar(1);
    if (d >= 1) u[1] = Scalar(1);
    return u;
}

std::vector<Scalar> interval_activities(unsigned f, unsigned g, unsigned d) {
    if (f > g) throw_argument("interval: need f <= g");
    if (f > d)
        throw_argument("interval: f = " + std::to_string(f) + " is infeasible at a degree-" +
                       std::to_string(d) + " vertex");
    std::vector<Scalar> u(d + 1, Scalar(0));
    for (unsigned k = f; k <= std::min(g, d); ++k) u[k] = Scalar(1);
    return u;
}

std::vector<Scalar> ruelle_activities(const Scalar& u, unsigned d) {
    std::vector<Scalar> a(d + 1, Scalar(0));
    a[0] = Scalar(1);
    if (d >= 1) a[1] = u;
    if (d >= 2) a[2] = Scalar(1);
    return a;
}

std::vector<Scalar> symmetric_2k_activities(const Scalar& u, unsigned k) {
    if (k < 1) throw_argument("sym2k: need k >= 1");
    std::vector<Scalar> a(2 * k + 1, Scalar(0));
    a[0] = Scalar(1);
    a[k] = Scalar(1);  // binom(2k,k) * u_k = binom(2k,k)
    a[2 * k] = u;
    return a;
}

std::vector<Scalar> reciprocal_activities(unsigned d) {
    std::vector<Scalar> u(d + 1, Scalar(0));
    for (unsigned j = 0; j <= d; ++j) u[j] = Scalar(Rational(1, binomial(d, j)));
    return u;
}

KeyPolynomial matching_key(unsigned d) { return key_from_activities(matching_activities(d), d); }
KeyPolynomial interval_key(unsigned f, unsigned g, unsigned d) {
    return key_from_activities(interval_activities(f, g, d), d);
}
KeyPolynomial ruelle_key(const Scalar& u, unsigned d) {
    return key_from_activities(ruelle_activities(u, d), d);
}
KeyPolynomial symmetric_key_2k(const Scalar& u, unsigned k) {
    return key_from_activities(symmetric_2k_activities(u, k), 2 * k);
}
KeyPolynomial reciprocal_key(unsigned d) {
    return key_from_activities(reciprocal_activities(d), d);
}

FamilySpec FamilySpec::parse(const std::string& text) {
    FamilySpec spec;
    auto colon = text.find(':');
    std::string head = text.substr(0, colon);
    std::string rest = colon == std::string::npos ? std::string() : text.substr(colon + 1);
    if (head == "matching") {
        spec.kind = Kind::Matching;
    } else if (head == "interval") {
        spec.kind = Kind::Interval;
        auto dots = rest.find("..");
        if (dots == std::string::npos)
            throw_parse("key family: interval expects 'interval:f..g', got '" + text + "'");
        try {
            spec.f = static_cast<unsigned>(std::stoul(rest.substr(0, dots)));
            spec.g = static_cast<unsigned>(std::stoul(rest.substr(dots + 2)));
        } catch (const std::exception&) {
            throw_parse("key family: bad interval bounds in '" + text + "'");
        }
        if (spec.f > spec.g) throw_parse("key family: interval needs f <= g");
    } else if (head == "ruelle") {
        spec.kind = Kind::Ruelle;
        spec.u = rest.empty() ? Scalar(1) : parse_scalar_text(rest);
    } else if (head == "sym2k") {
        spec.kind = Kind::Sym2k;
        spec.u = rest.empty() ? Scalar(1) : parse_scalar_text(rest);
    } else if (head == "reciprocal") {
        spec.kind = Kind::Reciprocal;
    } else if (head == "explicit") {
        spec.kind = Kind::Explicit;
        nlohmann::json arr = nlohmann::json::parse(rest, nullptr, false);
        if (arr.is_discarded() || !arr.is_array() || arr.empty())
            throw_parse("key family: explicit expects a JSON array of activities");
        for (const auto& item : arr) spec.values.push_back(parse_scalar_json(item));
    } else {
        throw_parse("key family: unknown family '" + head + "'");
    }
    return spec;
}

bool FamilySpec::looks_like_spec(const std::string& text) {
    auto head = text.substr(0, text.find(':'));
    return head == "matching" || head == "interval" || head == "ruelle" || head == "sym2k" ||
           head == "reciprocal" || head == "explicit";
}

std::vector<Scalar> FamilySpec::activities_for_degree(unsigned d) const {
    switch (kind) {
        case Kind::Matching: return matching_activities(d);
        case Kind::Interval: return interval_activities(f, g, d);
        case Kind::Ruelle: return ruelle_activities(u, d);
        case Kind::Sym2k:
            if (d % 2 != 0)
                throw_argument("sym2k: vertex degree " + std::to_string(d) + " is odd");
            if (d == 0) throw_argument("sym2k: vertex degree 0");
            return symmetric_2k_activities(u, d / 2);
        case Kind::Reciprocal: return reciprocal_activities(d);
        case Kind::Explicit:
            if (values.size() != d + 1)
                throw_argument("explicit activities have length " + std::to_string(values.size()) +
                               " but the vertex has degree " + std::to_string(d));
            return values;
    }
    throw_internal("unreachable family kind");
}

std::string FamilySpec::describe() const {
    switch (kind) {
        case Kind::Matching: return "matching";
        case Kind::Interval: return "interval:" + std::to_string(f) + ".." + std::to_string(g);
        case Kind::Ruelle: return "ruelle";
        case Kind::Sym2k: return "sym2k";
        case Kind::Reciprocal: return "reciprocal";
        case Kind::Explicit: return "explicit";
    }
    return "?";
}

KeyAnalysis analyze_key(const KeyPolynomial& key) {
    if (key.poly.is_zero())
        throw_argument("analyze_key: identically-zero key (annihilates Z; degenerate model)");

    KeyAnalysis a;
    a.roots = find_roots(key.poly);
    a.degree_full = !key.u.empty() && !key.u.back().is_zero();

    a.no_nonzero_roots = a.roots.roots.empty();
    a.sector_max = kPi;
    a.disk_radius = std::numeric_limits<double>::infinity();
    a.exterior_radius = 0.0;
    if (a.roots.origin_multiplicity > 0) a.disk_radius = 0.0;
    for (const auto& root : a.roots.roots) {
        double m = std::abs(root.value);
        a.disk_radius = std::min(a.disk_radius, m);
        a.exterior_radius = std::max(a.exterior_radius, m);
        double angle = std::abs(std::arg(root.value));
        if (angle >= kPi - kAngleSlack) angle = kPi;  // on the excluded ray
        a.sector_max = std::min(a.sector_max, angle);
    }
    return a;
}

}  // namespace spanpoly
