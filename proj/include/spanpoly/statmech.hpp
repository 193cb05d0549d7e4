#ifndef SPANPOLY_STATMECH_HPP
#define SPANPOLY_STATMECH_HPP

#include <optional>
#include <string>
#include <vector>

#include "spanpoly/graph.hpp"
#include "spanpoly/keys.hpp"
#include "spanpoly/regions.hpp"

namespace spanpoly {

/// Canonical-ensemble parameters with k_B = 1: beta > 0, edge energy J, and
/// per-degree chemical potentials mu_0..mu_d (+infinity forbids the degree).
struct ModelParams {
    double beta = 1.0;
    double J = 0.0;
    std::vector<double> mu;  // length d + 1 for a d-regular graph
};

/// U(H) = J |H| + sum_j mu_j |V_j(H)|; +infinity when a forbidden degree
/// occurs. The graph must be d-regular with d + 1 = mu length.
double energy(const Graph& g, SubgraphMask mask, const ModelParams& p);

struct PotentialActivities {
    double y;                // e^{-beta J}
    std::vector<double> u;   // e^{-beta mu_j}, exactly 0 for mu_j = +infinity
};
PotentialActivities activities_from_potentials(const ModelParams& p);

/// Z by two routes: the direct Boltzmann sum over all 2^|E| subgraphs
/// (log-sum-exp) and evaluation of the exact subgraph polynomial at
/// y = e^{-beta J}. The routes must agree to 1e-10 relative; the polynomial
/// value is returned.
double partition(const Graph& g, const ModelParams& p);
double log_partition(const Graph& g, const ModelParams& p);

/// <#H> as the probability-weighted sum, cross-checked against the central
/// finite difference of -(1/beta) d(log Z)/dJ (step 1e-5, 1e-6 relative).
double expected_edges(const Graph& g, const ModelParams& p, bool crosscheck = true);

/// <#V_j(H)> for j = 0..d, cross-checked against -(1/beta) d(log Z)/dmu_j
/// for every finite mu_j.
std::vector<double> expected_degree_counts(const Graph& g, const ModelParams& p,
                                           bool crosscheck = true);

struct FreeEnergyPoint {
    unsigned size;
    std::size_t vertex_count;
    double f;  // -(1 / (beta |V|)) log Z
};
struct FreeEnergySequence {
    std::vector<FreeEnergyPoint> points;
    std::vector<std::pair<unsigned, std::string>> skipped;  // (size, reason)
};

/// Finite-n free-energy sequence along a graph family ("cycle" or
/// "torus:r"); no extrapolation is attempted.
FreeEnergySequence free_energy_sequence(const std::string& family, const ModelParams& p,
                                        const std::vector<unsigned>& sizes);

struct AnalyticityReport {
    unsigned d = 0;
    double beta = 1.0;
    std::vector<double> mu;
    KeyPolynomial key;
    bool degenerate = false;       // all activities zero: K == 0
    // clause (a): sector_max > pi/2 => analytic in J on all of R
    bool all_J = false;
    double epsilon = 0.0;          // sector_max - pi/2 when positive
    // clause (b): K kappa_D-nonvanishing => analytic for J > j_lower
    std::optional<double> j_lower;
    // clause (c): K kappa_E-nonvanishing, full degree => analytic for J < j_upper
    std::optional<double> j_upper;
    std::optional<double> disk_kappa;
    std::optional<double> exterior_kappa;
    std::optional<KeyAnalysis> analysis;
};

/// Applies the free-energy analyticity clauses to the key polynomial built
/// from (beta, mu) at a degree-d vertex. When both radius clauses apply the
/// possible-transition window is [j_upper, j_lower] (it collapses to a
/// point when all key roots share one modulus).
AnalyticityReport analyticity_report(unsigned d, double beta, const std::vector<double>& mu);

}  // namespace spanpoly

#endif
