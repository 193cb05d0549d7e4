#ifndef SPANPOLY_THEOREM_HPP
#define SPANPOLY_THEOREM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "spanpoly/activities.hpp"
#include "spanpoly/graph.hpp"
#include "spanpoly/keys.hpp"
#include "spanpoly/regions.hpp"
#include "spanpoly/subgraph.hpp"

namespace spanpoly {

struct NonnegReal {};
struct BoundedModulus {
    double lambda_max;
};
struct ModulusAtLeast {
    double lambda_min;
};
using WeightClass = std::variant<NonnegReal, BoundedModulus, ModulusAtLeast>;

std::string weight_class_name(const WeightClass& wc);

struct WeightCheck {
    bool ok = true;
    std::vector<std::size_t> failing_edges;
    std::string detail;
};

/// NonnegReal demands exactly-real weights >= 0; the modulus classes compare
/// |lambda_e| against the bound with relative slack.
WeightCheck check_weight_class(const Graph& g, const WeightClass& wc);

struct VertexHypothesis {
    VertexId vertex;
    double required;  // demanded angle (sector) or radius (disk/exterior)
    double actual;    // the key's sector_max / disk_radius / exterior_radius
    enum class Status { Pass, Inconclusive, Fail } status;
    std::string note;
};

struct Conclusion {
    bool hypotheses_ok = false;
    std::optional<Region> multivariate_region;
    std::optional<Region> univariate_region;
    std::optional<double> alpha;  // sector clause
    std::optional<double> kappa;  // disk/exterior clauses
    WeightCheck weight_check;
    std::vector<VertexHypothesis> diagnostics;
    std::string failure_reason;
};

/// Zero-free regions for Z from the per-vertex key analyses:
///   nonneg weights  -> multivariate S[pi/2 - alpha], univariate S[pi - 2 alpha]
///   |lambda| <= M   -> (kappa/sqrt(M)) D, (kappa^2/M) D
///   |lambda| >= m   -> (kappa/sqrt(m)) E, (kappa^2/m) E, all keys full degree
/// With alpha_or_kappa omitted the best admissible value is selected:
/// alpha = max(0, pi - min_v sector_max), kappa = min_v disk_radius or
/// max_v exterior_radius. Hypothesis comparisons are non-strict (a root on a
/// region boundary does not obstruct the open region); requirements inside
/// the numeric slack band are surfaced as Inconclusive, never auto-passed.
Conclusion conclude(const Graph& g, const WeightClass& wc,
                    const std::vector<KeyAnalysis>& analyses,
                    std::optional<double> alpha_or_kappa = std::nullopt);

struct CertifyReport {
    enum class Verdict { Pass, Fail, Degenerate } verdict;
    UniPoly polynomial;
    RootSet roots;                // empty for the degenerate Z == 0 case
    NonvanishingReport check;
    Region region;
    std::size_t boundary_roots = 0;
};

/// Computes Z(y), finds its roots, and tests them against the conclusion's
/// univariate region. Z == 0 passes with the degenerate flag.
CertifyReport certify_univariate(const Graph& g, const ActivityTable& table,
                                 const Conclusion& concl);

struct FalsifyReport {
    std::size_t samples = 0;
    double min_normalized = std::numeric_limits<double>::infinity();
    std::unordered_map<VertexId, Complex> argmin;
    bool counterexample_candidate = false;  // normalized minimum below 1e-12
    bool identically_zero = false;
};

/// Random probe of the multivariate claim: n points with every coordinate
/// drawn from the region (sector: log-uniform radius over [1e-2, 1e2];
/// disk/exterior: uniform modulus in range, exterior capped at 10 kappa).
/// Sampling can only refute, never certify. Per-trial seeds derive from the
/// master seed by index, so the result is worker-count invariant.
FalsifyReport falsify_multivariate(const Graph& g, const ActivityTable& table, const Region& region,
                                   std::size_t n, std::uint64_t seed, unsigned threads = 0);

struct LogccVerdict {
    enum class Status { Pass, Fail, NotApplicable } status;
    std::optional<std::size_t> index;  // first violating position
    std::string reason;
};

/// Exact check of N_j^2 >= N_{j+1} N_{j-1} plus "no internal zeros" on a
/// nonnegative rational sequence.
LogccVerdict logconcavity_check(std::span<const Scalar> seq);

struct ScanOptions {
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    unsigned max_vertices = 8;
    unsigned max_edges = 10;
    std::optional<unsigned> width;  // g(v) - f(v) cap; nullopt = unrestricted
    unsigned threads = 0;
};

struct ScanViolation {
    std::size_t trial;
    std::string graph_json;
    std::string activities_json;
    std::vector<std::string> coefficients;
    std::size_t index;
    std::string reason;
};

struct ScanReport {
    ScanOptions options;
    std::size_t completed = 0;
    std::size_t skipped = 0;
    std::vector<ScanViolation> violations;
};

/// Random graphs x random degree intervals f <= g, lambda == 1, exact
/// z_univariate coefficients run through logconcavity_check. Deterministic
/// under the seed.
ScanReport conjecture_scan(const ScanOptions& options);

}  // namespace spanpoly

#endif
