#include "spanpoly/statmech.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>

#include "spanpoly/activities.hpp"
#include "spanpoly/error.hpp"
#include "spanpoly/subgraph.hpp"

namespace spanpoly {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

unsigned require_regular(const Graph& g, const ModelParams& p, const char* what) {
    unsigned d = 0;
    if (!g.is_regular(&d))
        throw_argument(std::string(what) + ": the canonical-ensemble view needs a d-regular graph");
    if (p.mu.size() != d + 1)
        throw_argument(std::string(what) + ": mu has length " + std::to_string(p.mu.size()) +
                       " but the graph is " + std::to_string(d) + "-regular (need d + 1)");
    if (!(p.beta > 0.0)) throw_argument(std::string(what) + ": need beta > 0");
    return d;
}

// -beta U(H) for every mask, with -inf for forbidden configurations.
std::vector<double> neg_beta_energies(const Graph& g, const ModelParams& p) {
    require_regular(g, p, "partition");
    if (g.edge_count() > kEdgeCap)
        throw_resource("partition: |E| exceeds the exhaustive cap");
    std::uint64_t total = std::uint64_t(1) << g.edge_count();
    std::vector<double> out(total);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        double u = energy(g, mask, p);
        out[mask] = u == kInf ? -kInf : -p.beta * u;
    }
    return out;
}

double log_sum_exp(const std::vector<double>& xs) {
    double m = -kInf;
    for (double x : xs) m = std::max(m, x);
    if (m == -kInf) return -kInf;  // every configuration forbidden
    double acc = 0.0;
    for (double x : xs)
        if (x != -kInf) acc += std::exp(x - m);
    return m + std::log(acc);
}

ActivityTable float_activity_table(const Graph& g, const PotentialActivities& pa) {
    // mu in {0, +inf} gives exact activities 1 and 0; those cases stay exact
    std::vector<Scalar> row;
    row.reserve(pa.u.size());
    for (double uj : pa.u) {
        if (uj == 0.0)
            row.emplace_back(0);
        else if (uj == 1.0)
            row.emplace_back(1);
        else
            row.emplace_back(uj);
    }
    return ActivityTable::uniform(g, std::move(row));
}

}  // namespace

double energy(const Graph& g, SubgraphMask mask, const ModelParams& p) {
    unsigned d = require_regular(g, p, "energy");
    (void)d;
    auto degs = g.subgraph_degrees_dense(mask);
    double edges = static_cast<double>(std::popcount(mask));
    double u = p.J * edges;
    for (std::size_t i = 0; i < degs.size(); ++i) {
        double mu_j = p.mu[degs[i]];
        if (mu_j == kInf) return kInf;
        u += mu_j;
    }
    return u;
}

PotentialActivities activities_from_potentials(const ModelParams& p) {
    if (!(p.beta > 0.0)) throw_argument("activities_from_potentials: need beta > 0");
    PotentialActivities out;
    out.y = std::exp(-p.beta * p.J);
    out.u.reserve(p.mu.size());
    for (double mu_j : p.mu) out.u.push_back(mu_j == kInf ? 0.0 : std::exp(-p.beta * mu_j));
    return out;
}

double log_partition(const Graph& g, const ModelParams& p) {
    return log_sum_exp(neg_beta_energies(g, p));
}

double partition(const Graph& g, const ModelParams& p) {
    double direct = std::exp(log_partition(g, p));
    PotentialActivities pa = activities_from_potentials(p);
    UniPoly z = z_univariate(g, float_activity_table(g, pa));
    double via_poly = z.eval(Complex(pa.y, 0.0)).real();
    double scale = std::max({std::abs(direct), std::abs(via_poly), 1e-300});
    if (std::abs(direct - via_poly) > 1e-10 * scale)
        throw_numeric("partition: direct sum " + std::to_string(direct) +
                      " and polynomial route " + std::to_string(via_poly) +
                      " disagree beyond 1e-10 relative");
    return via_poly;
}

double expected_edges(const Graph& g, const ModelParams& p, bool crosscheck) {
    auto nbe = neg_beta_energies(g, p);
    double logz = log_sum_exp(nbe);
    if (logz == -kInf) throw_argument("expected_edges: every configuration is forbidden");
    double acc = 0.0;
    for (std::uint64_t mask = 0; mask < nbe.size(); ++mask) {
        if (nbe[mask] == -kInf) continue;
        acc += static_cast<double>(std::popcount(mask)) * std::exp(nbe[mask] - logz);
    }
    if (crosscheck) {
        const double h = 1e-5;
        ModelParams hi = p, lo = p;
        hi.J += h;
        lo.J -= h;
        double fd = -(log_partition(g, hi) - log_partition(g, lo)) / (2.0 * h * p.beta);
        if (std::abs(fd - acc) > 1e-6 * (1.0 + std::abs(acc)))
            throw_numeric("expected_edges: finite-difference check failed (" +
                          std::to_string(acc) + " vs " + std::to_string(fd) + ")");
    }
    return acc;
}

std::vector<double> expected_degree_counts(const Graph& g, const ModelParams& p, bool crosscheck) {
    unsigned d = require_regular(g, p, "expected_degree_counts");
    auto nbe = neg_beta_energies(g, p);
    double logz = log_sum_exp(nbe);
    if (logz == -kInf)
        throw_argument("expected_degree_counts: every configuration is forbidden");
    std::vector<double> counts(d + 1, 0.0);
    for (std::uint64_t mask = 0; mask < nbe.size(); ++mask) {
        if (nbe[mask] == -kInf) continue;
        double w = std::exp(nbe[mask] - logz);
        for (std::uint32_t deg : g.subgraph_degrees_dense(mask)) counts[deg] += w;
    }
    if (crosscheck) {
        const double h = 1e-5;
        for (unsigned j = 0; j <= d; ++j) {
            if (p.mu[j] == kInf) continue;  // no derivative at an infinite potential
            ModelParams hi = p, lo = p;
            hi.mu[j] += h;
            lo.mu[j] -= h;
            double fd = -(log_partition(g, hi) - log_partition(g, lo)) / (2.0 * h * p.beta);
            if (std::abs(fd - counts[j]) > 1e-6 * (1.0 + std::abs(counts[j])))
                throw_numeric("expected_degree_counts: finite-difference check failed at degree " +
                              std::to_string(j));
        }
    }
    return counts;
}

FreeEnergySequence free_energy_sequence(const std::string& family, const ModelParams& p,
                                        const std::vector<unsigned>& sizes) {
    FreeEnergySequence out;
    for (unsigned n : sizes) {
        try {
            Graph g = [&] {
                if (family == "cycle") return make_cycle(n);
                if (family.rfind("torus:", 0) == 0) {
                    unsigned r = static_cast<unsigned>(std::stoul(family.substr(6)));
                    return make_torus(n, r);
                }
                throw_argument("free_energy_sequence: family must be 'cycle' or 'torus:r'");
            }();
            double logz = log_partition(g, p);
            double f = -logz / (p.beta * static_cast<double>(g.vertex_count()));
            out.points.push_back({n, g.vertex_count(), f});
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Resource || e.kind() == ErrorKind::Argument) {
                out.skipped.push_back({n, e.what()});
            } else {
                throw;
            }
        }
    }
    return out;
}

AnalyticityReport analyticity_report(unsigned d, double beta, const std::vector<double>& mu) {
    if (!(beta > 0.0)) throw_argument("analyticity_report: need beta > 0");
    if (mu.size() != d + 1)
        throw_argument("analyticity_report: mu needs length d + 1 = " + std::to_string(d + 1));

    AnalyticityReport rep;
    rep.d = d;
    rep.beta = beta;
    rep.mu = mu;

    ModelParams p{beta, 0.0, mu};
    PotentialActivities pa = activities_from_potentials(p);
    std::vector<Scalar> u;
    u.reserve(pa.u.size());
    for (double uj : pa.u) {
        if (uj == 0.0)
            u.emplace_back(0);
        else if (uj == 1.0)
            u.emplace_back(1);
        else
            u.emplace_back(uj);
    }
    rep.key = key_from_activities(std::move(u), d);
    if (rep.key.poly.is_zero()) {
        rep.degenerate = true;  // every degree forbidden: no model left
        return rep;
    }

    KeyAnalysis a = analyze_key(rep.key);
    rep.analysis = a;

    constexpr double kHalfPi = std::numbers::pi / 2.0;
    if (a.sector_max > kHalfPi + kAngleSlack) {
        rep.all_J = true;
        rep.epsilon = a.sector_max - kHalfPi;
    }
    if (a.disk_radius > 0.0 && std::isfinite(a.disk_radius)) {
        rep.disk_kappa = a.disk_radius;
        rep.j_lower = -(2.0 / beta) * std::log(a.disk_radius);
    }
    if (a.degree_full && a.exterior_radius > 0.0) {
        rep.exterior_kappa = a.exterior_radius;
        rep.j_upper = -(2.0 / beta) * std::log(a.exterior_radius);
    }
    return rep;
}

}  // namespace spanpoly
