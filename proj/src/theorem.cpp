#include "spanpoly/theorem.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <mutex>
#include <numbers>
#include <random>
#include <thread>

#include "spanpoly/error.hpp"
#include "spanpoly/json_io.hpp"

namespace spanpoly {

namespace {
constexpr double kPi = std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
    return splitmix64(master ^ splitmix64(trial + 1));
}

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace

std::string weight_class_name(const WeightClass& wc) {
    if (std::holds_alternative<NonnegReal>(wc)) return "nonneg";
    if (const auto* b = std::get_if<BoundedModulus>(&wc))
        return "bounded:" + std::to_string(b->lambda_max);
    return "atleast:" + std::to_string(std::get<ModulusAtLeast>(wc).lambda_min);
}

WeightCheck check_weight_class(const Graph& g, const WeightClass& wc) {
    WeightCheck out;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Scalar& lambda = g.edges()[i].lambda;
        bool ok = true;
        if (std::holds_alternative<NonnegReal>(wc)) {
            ok = lambda.is_nonneg_real();
        } else if (const auto* b = std::get_if<BoundedModulus>(&wc)) {
            ok = lambda.abs() <= b->lambda_max * (1.0 + kRadiusSlack);
        } else {
            const auto& m = std::get<ModulusAtLeast>(wc);
            ok = lambda.abs() >= m.lambda_min * (1.0 - kRadiusSlack);
        }
        if (!ok) out.failing_edges.push_back(i);
    }
    out.ok = out.failing_edges.empty();
    if (!out.ok)
        out.detail = "edge #" + std::to_string(out.failing_edges.front()) +
                     " violates weight class " + weight_class_name(wc);
    return out;
}

Conclusion conclude(const Graph& g, const WeightClass& wc,
                    const std::vector<KeyAnalysis>& analyses,
                    std::optional<double> alpha_or_kappa) {
    if (analyses.size() != g.vertex_count())
        throw_argument("conclude: expected one key analysis per vertex");

    Conclusion out;
    out.weight_check = check_weight_class(g, wc);
    if (!out.weight_check.ok) {
        out.failure_reason = out.weight_check.detail;
        return out;
    }

    auto status_of = [](double actual, double required, bool at_least,
                        double slack) -> VertexHypothesis::Status {
        // at_least: actual must reach required (sector angle, disk radius);
        // otherwise actual must stay below required (exterior radius).
        // Non-strict comparison: boundary roots never obstruct open regions.
        double margin = at_least ? actual - required : required - actual;
        if (margin >= 0.0) return VertexHypothesis::Status::Pass;
        if (margin >= -slack) return VertexHypothesis::Status::Inconclusive;
        return VertexHypothesis::Status::Fail;
    };

    if (std::holds_alternative<NonnegReal>(wc)) {
        double sector_min = kPi;
        for (const auto& a : analyses) sector_min = std::min(sector_min, a.sector_max);
        double alpha;
        if (alpha_or_kappa) {
            alpha = *alpha_or_kappa;
            if (alpha < 0.0 || alpha >= kPi / 2.0)
                throw_argument("conclude: need 0 <= alpha < pi/2");
        } else {
            alpha = std::max(0.0, kPi - sector_min);
            if (alpha >= kPi / 2.0) {
                out.failure_reason =
                    "keys admit no alpha < pi/2: a key has sector_max below pi/2";
                for (std::size_t i = 0; i < analyses.size(); ++i)
                    out.diagnostics.push_back({g.vertices()[i], kPi / 2.0,
                                               analyses[i].sector_max,
                                               analyses[i].sector_max > kPi / 2.0
                                                   ? VertexHypothesis::Status::Pass
                                                   : VertexHypothesis::Status::Fail,
                                               "auto alpha infeasible"});
                return out;
            }
        }
        double theta_req = kPi - alpha;
        bool all_ok = true;
        for (std::size_t i = 0; i < analyses.size(); ++i) {
            auto st = status_of(analyses[i].sector_max, theta_req, true, kAngleSlack);
            out.diagnostics.push_back(
                {g.vertices()[i], theta_req, analyses[i].sector_max, st,
                 st == VertexHypothesis::Status::Pass ? "" : "key not S[pi - alpha]-nonvanishing"});
            all_ok = all_ok && st == VertexHypothesis::Status::Pass;
        }
        if (!all_ok) {
            out.failure_reason = "a key fails the S[pi - alpha]-nonvanishing hypothesis";
            return out;
        }
        out.hypotheses_ok = true;
        out.alpha = alpha;
        out.multivariate_region = Region::sector(kPi / 2.0 - alpha);
        out.univariate_region = Region::sector(kPi - 2.0 * alpha);
        return out;
    }

    if (const auto* b = std::get_if<BoundedModulus>(&wc)) {
        double kappa;
        if (alpha_or_kappa) {
            kappa = *alpha_or_kappa;
            if (kappa <= 0.0) throw_argument("conclude: need kappa > 0");
        } else {
            kappa = std::numeric_limits<double>::infinity();
            for (const auto& a : analyses) kappa = std::min(kappa, a.disk_radius);
        }
        bool all_ok = true;
        for (std::size_t i = 0; i < analyses.size(); ++i) {
            VertexHypothesis::Status st;
            if (analyses[i].disk_radius == 0.0) {
                st = VertexHypothesis::Status::Fail;
            } else {
                st = status_of(analyses[i].disk_radius, kappa, true, kRadiusSlack * kappa);
            }
            out.diagnostics.push_back(
                {g.vertices()[i], kappa, analyses[i].disk_radius, st,
                 st == VertexHypothesis::Status::Pass ? "" : "key has a root inside kappa D"});
            all_ok = all_ok && st == VertexHypothesis::Status::Pass;
        }
        if (!all_ok || kappa <= 0.0 || std::isnan(kappa)) {
            out.failure_reason = "a key fails the kappa D-nonvanishing hypothesis";
            return out;
        }
        out.hypotheses_ok = true;
        out.kappa = kappa;
        out.multivariate_region = Region::disk(kappa / std::sqrt(b->lambda_max));
        out.univariate_region = Region::disk(kappa * kappa / b->lambda_max);
        return out;
    }

    const auto& m = std::get<ModulusAtLeast>(wc);
    double kappa;
    if (alpha_or_kappa) {
        kappa = *alpha_or_kappa;
        if (kappa < 0.0) throw_argument("conclude: need kappa >= 0");
    } else {
        kappa = 0.0;
        for (const auto& a : analyses) kappa = std::max(kappa, a.exterior_radius);
    }
    bool all_ok = true;
    for (std::size_t i = 0; i < analyses.size(); ++i) {
        VertexHypothesis::Status st;
        std::string note;
        if (!analyses[i].degree_full) {
            st = VertexHypothesis::Status::Fail;
            note = "deg K < deg(G,v): the top activity u_d is zero";
        } else {
            st = status_of(analyses[i].exterior_radius, kappa, false, kRadiusSlack * std::max(kappa, 1e-300));
            if (st != VertexHypothesis::Status::Pass) note = "key has a root outside kappa E";
        }
        out.diagnostics.push_back({g.vertices()[i], kappa, analyses[i].exterior_radius, st, note});
        all_ok = all_ok && st == VertexHypothesis::Status::Pass;
    }
    if (!all_ok) {
        out.failure_reason = "a key fails the kappa E-nonvanishing / full-degree hypothesis";
        return out;
    }
    out.hypotheses_ok = true;
    out.kappa = kappa;
    out.multivariate_region = Region::exterior(kappa / std::sqrt(m.lambda_min));
    out.univariate_region = Region::exterior(kappa * kappa / m.lambda_min);
    return out;
}

CertifyReport certify_univariate(const Graph& g, const ActivityTable& table,
                                 const Conclusion& concl) {
    if (!concl.hypotheses_ok || !concl.univariate_region)
        throw_argument("certify_univariate: conclusion has no verified hypotheses");
    UniPoly z = z_univariate(g, table);
    CertifyReport rep{CertifyReport::Verdict::Pass, z, RootSet{}, NonvanishingReport{},
                      *concl.univariate_region, 0};
    if (z.is_zero()) {
        rep.verdict = CertifyReport::Verdict::Degenerate;
        rep.check.verdict = Verdict::Nonvanishing;
        rep.check.identically_zero = true;
        return rep;
    }
    rep.roots = find_roots(z);
    rep.check = nonvanishing_on(rep.roots, *concl.univariate_region);
    for (const auto& [root, st] : rep.check.per_root)
        if (st == RootStatus::Boundary) ++rep.boundary_roots;
    rep.verdict = rep.check.verdict == Verdict::Vanishing ? CertifyReport::Verdict::Fail
                                                          : CertifyReport::Verdict::Pass;
    return rep;
}

FalsifyReport falsify_multivariate(const Graph& g, const ActivityTable& table,
                                   const Region& region, std::size_t n, std::uint64_t seed,
                                   unsigned threads) {
    FalsifyReport rep;
    rep.samples = n;
    if (n == 0) return rep;

    MultiPoly z = z_compose(g, table);
    if (z.is_zero()) {
        rep.identically_zero = true;
        rep.min_normalized = 0.0;
        return rep;
    }

    auto sample_coord = [&](std::mt19937_64& rng) -> Complex {
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        double radius, angle;
        if (region.is_sector()) {
            double theta = region.parameter();
            radius = std::pow(10.0, -2.0 + 4.0 * unit(rng));
            angle = (2.0 * unit(rng) - 1.0) * theta;
        } else if (region.is_disk()) {
            double kappa = region.parameter();
            radius = unit(rng) * kappa;
            angle = (2.0 * unit(rng) - 1.0) * kPi;
        } else {
            double kappa = region.parameter();
            double lo = kappa, hi = 10.0 * std::max(kappa, 1e-3);
            radius = lo + unit(rng) * (hi - lo);
            angle = (2.0 * unit(rng) - 1.0) * kPi;
        }
        return std::polar(radius, angle);
    };

    struct Best {
        double value = std::numeric_limits<double>::infinity();
        std::size_t trial = 0;
        std::unordered_map<VertexId, Complex> point;
    };

    auto run_chunk = [&](std::size_t begin, std::size_t end) {
        Best best;
        for (std::size_t t = begin; t < end; ++t) {
            std::mt19937_64 rng(trial_seed(seed, t));
            std::unordered_map<VertexId, Complex> point;
            for (VertexId v : g.vertices()) point[v] = sample_coord(rng);
            auto ev = z.eval(point);
            double normalized =
                ev.max_term_magnitude == 0.0 ? 0.0 : std::abs(ev.value) / ev.max_term_magnitude;
            if (normalized < best.value || (normalized == best.value && t < best.trial)) {
                best = {normalized, t, std::move(point)};
            }
        }
        return best;
    };

    unsigned nthreads = std::min<std::size_t>(resolve_threads(threads), n);
    std::vector<std::future<Best>> futures;
    std::size_t chunk = (n + nthreads - 1) / nthreads;
    for (unsigned w = 0; w < nthreads; ++w) {
        std::size_t begin = w * chunk;
        std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        futures.push_back(std::async(std::launch::async, run_chunk, begin, end));
    }
    Best best;
    for (auto& f : futures) {
        Best b = f.get();
        if (b.value < best.value || (b.value == best.value && b.trial < best.trial)) best = b;
    }
    rep.min_normalized = best.value;
    rep.argmin = std::move(best.point);
    rep.counterexample_candidate = best.value < 1e-12;
    return rep;
}

LogccVerdict logconcavity_check(std::span<const Scalar> seq) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (!seq[i].is_exact() || seq[i].exact_im() != 0 || seq[i].exact_re() < 0) {
            return {LogccVerdict::Status::NotApplicable, i,
                    "conditions presuppose a nonnegative exact sequence"};
        }
    }
    // no internal zeros: no zero strictly between nonzero entries
    std::size_t first = seq.size(), last = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (!seq[i].is_zero()) {
            first = std::min(first, i);
            last = i;
        }
    }
    for (std::size_t i = first; i < last && i < seq.size(); ++i) {
        if (seq[i].is_zero())
            return {LogccVerdict::Status::Fail, i, "internal zero"};
    }
    for (std::size_t j = 1; j + 1 < seq.size(); ++j) {
        const Rational& a = seq[j - 1].exact_re();
        const Rational& b = seq[j].exact_re();
        const Rational& c = seq[j + 1].exact_re();
        if (b * b < a * c)
            return {LogccVerdict::Status::Fail, j, "N_j^2 < N_{j+1} N_{j-1}"};
    }
    return {LogccVerdict::Status::Pass, std::nullopt, ""};
}

ScanReport conjecture_scan(const ScanOptions& options) {
    if (options.max_edges > kEdgeCap)
        throw_resource("conjecture_scan: max_edges exceeds the exhaustive cap of " +
                       std::to_string(kEdgeCap));
    ScanReport rep;
    rep.options = options;

    struct TrialOutcome {
        bool skipped = false;
        std::optional<ScanViolation> violation;
    };

    auto run_trial = [&](std::size_t t) -> TrialOutcome {
        std::uint64_t s = trial_seed(options.seed, t);
        Graph g = make_random_multigraph(options.max_vertices, options.max_edges, s);
        std::mt19937_64 rng(splitmix64(s));
        std::vector<std::vector<Scalar>> rows;
        rows.reserve(g.vertex_count());
        for (std::size_t i = 0; i < g.vertex_count(); ++i) {
            unsigned d = g.degrees_by_index()[i];
            unsigned f = static_cast<unsigned>(rng() % (d + 1));
            unsigned gg;
            if (options.width) {
                gg = std::min(d, f + static_cast<unsigned>(rng() % (*options.width + 1)));
            } else {
                gg = f + static_cast<unsigned>(rng() % (d - f + 1));
            }
            rows.push_back(interval_activities(f, gg, d));
        }
        ActivityTable table(g, std::move(rows));
        TrialOutcome outcome;
        try {
            UniPoly z = z_univariate(g, table);
            auto verdict = logconcavity_check(z.coeffs());
            if (verdict.status == LogccVerdict::Status::Fail) {
                ScanViolation v;
                v.trial = t;
                v.graph_json = graph_to_json(g).dump();
                v.activities_json = activities_to_json(g, table).dump();
                for (const auto& c : z.coeffs()) v.coefficients.push_back(c.exact_real_string());
                v.index = verdict.index.value_or(0);
                v.reason = verdict.reason;
                outcome.violation = std::move(v);
            }
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Resource) {
                outcome.skipped = true;
            } else {
                throw;
            }
        }
        return outcome;
    };

    unsigned nthreads = static_cast<unsigned>(
        std::min<std::size_t>(resolve_threads(options.threads), std::max<std::size_t>(1, options.trials)));
    std::vector<TrialOutcome> outcomes(options.trials);
    if (nthreads <= 1) {
        for (std::size_t t = 0; t < options.trials; ++t) outcomes[t] = run_trial(t);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&]() {
            for (;;) {
                std::size_t t = next.fetch_add(1);
                if (t >= options.trials) return;
                try {
                    outcomes[t] = run_trial(t);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < nthreads; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }
    for (std::size_t t = 0; t < options.trials; ++t) {
        if (outcomes[t].skipped) {
            ++rep.skipped;
            continue;
        }
        ++rep.completed;
        if (outcomes[t].violation) rep.violations.push_back(std::move(*outcomes[t].violation));
    }
    return rep;
}

}  // namespace spanpoly
