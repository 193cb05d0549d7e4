#include "spanpoly/regions.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "spanpoly/error.hpp"

namespace spanpoly {

namespace {
constexpr double kPi = std::numbers::pi;

std::string trimmed_double(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}
}  // namespace

void Region::validate() const {
    if (const Sector* s = std::get_if<Sector>(&v_)) {
        if (!(s->theta > 0.0 && s->theta <= kPi + 1e-15))
            throw_argument("sector: need 0 < theta <= pi");
    } else if (const Disk* d = std::get_if<Disk>(&v_)) {
        if (!(d->kappa > 0.0)) throw_argument("disk: need kappa > 0");
    } else if (const Exterior* e = std::get_if<Exterior>(&v_)) {
        if (!(e->kappa >= 0.0)) throw_argument("exterior: need kappa >= 0");
    }
}

double Region::parameter() const {
    if (const Sector* s = std::get_if<Sector>(&v_)) return s->theta;
    if (const Disk* d = std::get_if<Disk>(&v_)) return d->kappa;
    return std::get<Exterior>(v_).kappa;
}

bool Region::contains(Complex z) const {
    if (const Sector* s = std::get_if<Sector>(&v_)) {
        if (z == Complex(0.0, 0.0)) return false;
        return std::abs(std::arg(z)) < s->theta;
    }
    if (const Disk* d = std::get_if<Disk>(&v_)) return std::abs(z) < d->kappa;
    return std::abs(z) > std::get<Exterior>(v_).kappa;
}

double Region::signed_margin(Complex z) const {
    if (const Sector* s = std::get_if<Sector>(&v_)) {
        if (z == Complex(0.0, 0.0)) return -kPi;  // never inside
        return s->theta - std::abs(std::arg(z));
    }
    if (const Disk* d = std::get_if<Disk>(&v_)) {
        double a = std::abs(z);
        return (d->kappa - a) / d->kappa;
    }
    const Exterior& e = std::get<Exterior>(v_);
    double a = std::abs(z);
    if (e.kappa == 0.0) return a > 0.0 ? 1.0 : -1.0;
    return (a - e.kappa) / e.kappa;
}

std::string Region::pretty() const {
    if (const Sector* s = std::get_if<Sector>(&v_)) {
        // render rational multiples p/q of pi with small q
        for (unsigned q = 1; q <= 12; ++q) {
            double p = s->theta * q / kPi;
            double pr = std::round(p);
            if (pr >= 1.0 && std::abs(p - pr) < 1e-9) {
                unsigned pi_num = static_cast<unsigned>(pr);
                std::string num = pi_num == 1 ? "pi" : std::to_string(pi_num) + "pi";
                return q == 1 ? "S[" + num + "]" : "S[" + num + "/" + std::to_string(q) + "]";
            }
        }
        return "S[" + trimmed_double(s->theta) + "]";
    }
    if (const Disk* d = std::get_if<Disk>(&v_)) return "D[" + trimmed_double(d->kappa) + "]";
    return "E[" + trimmed_double(std::get<Exterior>(v_).kappa) + "]";
}

namespace {

RootStatus classify(const Region& r, Complex z) {
    if (r.is_sector()) {
        // a root within slack of arg = pi sits on the ray every admissible
        // sector excludes; see the matching snap in analyze_key
        if (z != Complex(0.0, 0.0) && std::abs(std::arg(z)) >= kPi - kAngleSlack)
            return RootStatus::Outside;
    }
    double margin = r.signed_margin(z);
    double slack = r.is_sector() ? kAngleSlack : kRadiusSlack;
    if (margin > slack) return RootStatus::Inside;
    if (margin < -slack) return RootStatus::Outside;
    return RootStatus::Boundary;
}

}  // namespace

NonvanishingReport nonvanishing_on(const RootSet& roots, const Region& r) {
    NonvanishingReport rep;
    rep.verdict = Verdict::Nonvanishing;
    // the origin behaves like a root at z = 0
    if (roots.origin_multiplicity > 0 && r.is_disk()) {
        rep.per_root.push_back({{Complex(0.0, 0.0), roots.origin_multiplicity}, RootStatus::Inside});
        rep.verdict = Verdict::Vanishing;
        rep.witness = Complex(0.0, 0.0);
    }
    for (const auto& root : roots.roots) {
        RootStatus st = classify(r, root.value);
        rep.per_root.push_back({root, st});
        if (st == RootStatus::Inside) {
            if (rep.verdict != Verdict::Vanishing ||
                r.signed_margin(root.value) > r.signed_margin(*rep.witness)) {
                rep.witness = root.value;
            }
            rep.verdict = Verdict::Vanishing;
        } else if (st == RootStatus::Boundary && rep.verdict == Verdict::Nonvanishing) {
            rep.verdict = Verdict::BoundaryInconclusive;
            rep.witness = root.value;
        }
    }
    return rep;
}

NonvanishingReport nonvanishing_on(const UniPoly& p, const Region& r) {
    if (p.is_zero()) {
        NonvanishingReport rep;
        rep.verdict = Verdict::Nonvanishing;
        rep.identically_zero = true;
        return rep;
    }
    return nonvanishing_on(find_roots(p), r);
}

}  // namespace spanpoly
