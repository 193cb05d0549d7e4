// Acceptance suite: every criterion below runs at its stated tolerance and
// prints exactly one [PASS]/[FAIL] line. The process exits nonzero if any
// criterion fails.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "spanpoly/algebra.hpp"
#include "spanpoly/error.hpp"
#include "spanpoly/json_io.hpp"
#include "spanpoly/keys.hpp"
#include "spanpoly/regions.hpp"
#include "spanpoly/roots.hpp"
#include "spanpoly/statmech.hpp"
#include "spanpoly/subgraph.hpp"
#include "spanpoly/theorem.hpp"

using namespace spanpoly;

namespace {

constexpr double kPi = std::numbers::pi;

struct Harness {
    int failures = 0;

    void run(const std::string& name, const std::function<std::string()>& criterion) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            detail = criterion();
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), secs,
                    detail.empty() ? "" : ": ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
};

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

Scalar random_positive_rational(std::mt19937_64& rng) {
    return Scalar(Rational(1 + static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 9)));
}

Scalar random_nonneg_rational(std::mt19937_64& rng) {
    return Scalar(Rational(static_cast<long>(rng() % 10), 1 + static_cast<long>(rng() % 9)));
}

Graph randomize_weights(const Graph& g, std::mt19937_64& rng, bool allow_zero) {
    std::vector<Scalar> lambdas;
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        lambdas.push_back(allow_zero ? random_nonneg_rational(rng) : random_positive_rational(rng));
    return g.with_weights(lambdas);
}

std::vector<Graph> base_corpus() {
    std::vector<Graph> corpus;
    for (unsigned n = 2; n <= 12; ++n) corpus.push_back(make_path(n));    // 11
    for (unsigned n = 3; n <= 8; ++n) corpus.push_back(make_cycle(n));    // 6
    corpus.push_back(make_complete(4));
    corpus.push_back(make_complete(5));
    corpus.push_back(make_petersen());
    for (std::uint64_t s = 1; s <= 10; ++s)
        corpus.push_back(make_random_multigraph(7, 12, s));               // 10, <= 12 edges
    return corpus;
}

ActivityTable random_interval_table(const Graph& g, unsigned width, std::mt19937_64& rng) {
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        unsigned d = g.degrees_by_index()[i];
        unsigned f = static_cast<unsigned>(rng() % (d + 1));
        rows.push_back(interval_activities(f, std::min(d, f + width), d));
    }
    return ActivityTable(g, rows);
}

// random multigraph with at least two edges, so Z(y) has substance
Graph random_substantial_graph(unsigned max_v, unsigned max_e, std::mt19937_64& rng) {
    for (;;) {
        Graph g = make_random_multigraph(max_v, max_e, rng());
        if (g.edge_count() >= 2) return g;
    }
}

UniPoly z_for(const Graph& g, const std::string& family) {
    return z_univariate(g, ActivityTable::from_family(g, FamilySpec::parse(family)));
}

// ---------------------------------------------------------------------------

std::string criterion1_oracle_equivalence() {
    auto start = std::chrono::steady_clock::now();
    std::vector<Graph> corpus = base_corpus();
    if (corpus.size() < 30) fail("corpus too small");

    struct Task {
        std::size_t graph;
        int family;
        int draw;
    };
    std::vector<Task> tasks;
    for (std::size_t gi = 0; gi < corpus.size(); ++gi)
        for (int family = 0; family < 6; ++family)
            for (int draw = 0; draw < 20; ++draw) tasks.push_back({gi, family, draw});

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> mismatches{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t t = next.fetch_add(1);
            if (t >= tasks.size()) return;
            const Task& task = tasks[t];
            // one private stream per task, so the result is independent of
            // worker count and scheduling
            std::mt19937_64 rng(101 + task.graph * 1000003 + task.family * 131 + task.draw);
            Graph g = randomize_weights(corpus[task.graph], rng, false);
            ActivityTable table = [&]() -> ActivityTable {
                switch (task.family) {
                    case 0: return ActivityTable::from_family(g, FamilySpec::parse("matching"));
                    case 1: return random_interval_table(g, 0, rng);
                    case 2: return random_interval_table(g, 1, rng);
                    case 3: return random_interval_table(g, 2, rng);
                    case 4: return random_interval_table(g, 3, rng);
                    default: return ActivityTable::from_family(g, FamilySpec::parse("reciprocal"));
                }
            }();
            if (!(z_compose(g, table) == z_bruteforce(g, table))) mismatches.fetch_add(1);
        }
    };
    unsigned nthreads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < nthreads; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (mismatches.load() != 0)
        fail(std::to_string(mismatches.load()) + " route mismatches");

    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > 60.0) fail("runtime " + std::to_string(secs) + "s exceeds the 60s budget");
    std::ostringstream os;
    os << corpus.size() << " graphs x 6 families x 20 draws, " << tasks.size()
       << " exact comparisons";
    return os.str();
}

std::string criterion2_heilmann_lieb() {
    std::mt19937_64 rng(202);
    std::size_t roots_checked = 0;
    for (int mode = 0; mode < 2; ++mode) {
        for (int instance = 0; instance < 200; ++instance) {
            Graph g = randomize_weights(random_substantial_graph(8, 12, rng), rng, true);
            ActivityTable table =
                mode == 0 ? ActivityTable::from_family(g, FamilySpec::parse("matching"))
                          : random_interval_table(g, 1, rng);
            UniPoly z = z_univariate(g, table);
            if (z.is_zero() || z.degree() == 0) continue;
            RootSet roots = find_roots(z);
            for (const auto& r : roots.roots) {
                double tol = 1e-8 * (1.0 + std::abs(r.value));
                if (std::abs(r.value.imag()) > tol)
                    fail("non-real root " + std::to_string(r.value.real()) + " + " +
                         std::to_string(r.value.imag()) + "i");
                if (r.value.real() > 1e-8) fail("positive real root");
                ++roots_checked;
            }
        }
    }
    return "400 instances, " + std::to_string(roots_checked) + " roots real and nonpositive";
}

std::string criterion3_sector_certifications() {
    std::mt19937_64 rng(303);
    std::size_t checked = 0;

    auto analyses_of = [](const Graph& g, const ActivityTable& t) {
        std::vector<KeyAnalysis> out;
        for (const auto& key : t.keys(g)) out.push_back(analyze_key(key));
        return out;
    };

    // (a) Ruelle u=1: |arg y| >= pi/2 - 1e-8
    for (int instance = 0; instance < 100; ++instance) {
        Graph g = randomize_weights(random_substantial_graph(7, 12, rng), rng, false);
        ActivityTable table = ActivityTable::from_family(g, FamilySpec::parse("ruelle:1"));
        UniPoly z = z_univariate(g, table);
        if (z.is_zero() || z.degree() == 0) continue;
        for (const auto& r : find_roots(z).roots) {
            if (std::abs(std::arg(r.value)) < kPi / 2.0 - 1e-8)
                fail("ruelle root inside S[pi/2]");
            ++checked;
        }
    }

    // (b) interval width <= 2: |arg y| >= pi/3 - 1e-8
    for (int instance = 0; instance < 100; ++instance) {
        Graph g = randomize_weights(random_substantial_graph(7, 12, rng), rng, false);
        ActivityTable table = random_interval_table(g, 2, rng);
        UniPoly z = z_univariate(g, table);
        if (z.is_zero() || z.degree() == 0) continue;
        for (const auto& r : find_roots(z).roots) {
            if (std::abs(std::arg(r.value)) < kPi / 3.0 - 1e-8)
                fail("width-2 interval root inside S[pi/3]");
            ++checked;
        }
    }

    // (c) interval width <= 3 on max-degree <= 6 graphs: |arg y| >= 2 eps - 1e-8
    for (int instance = 0; instance < 100; ++instance) {
        Graph g = random_substantial_graph(7, 12, rng);
        while (g.max_degree() > 6) g = random_substantial_graph(7, 12, rng);
        g = randomize_weights(g, rng, false);
        ActivityTable table = random_interval_table(g, 3, rng);
        UniPoly z = z_univariate(g, table);
        if (z.is_zero() || z.degree() == 0) continue;
        double sector_min = kPi;
        for (const auto& a : analyses_of(g, table)) sector_min = std::min(sector_min, a.sector_max);
        double eps = sector_min - kPi / 2.0;
        if (eps <= 0.0) fail("width-3 key failed to clear pi/2");
        for (const auto& r : find_roots(z).roots) {
            if (std::abs(std::arg(r.value)) < 2.0 * eps - 1e-8)
                fail("width-3 interval root inside S[2 eps]");
            ++checked;
        }
    }
    return "300 instances, " + std::to_string(checked) + " roots outside certified sectors";
}

std::string criterion4_modulus_certifications() {
    std::size_t checked = 0;

    // Example 4.8, k = 1 on cycles: roots of Z(y) on |y| = 1/u
    for (unsigned n = 3; n <= 8; ++n) {
        for (long u : {1L, 4L, 9L}) {
            Graph g = make_cycle(n);
            ActivityTable table =
                ActivityTable::from_family(g, FamilySpec::parse("sym2k:" + std::to_string(u)));
            UniPoly z = z_univariate(g, table);
            double expected = 1.0 / static_cast<double>(u);
            for (const auto& r : find_roots(z).roots) {
                if (std::abs(std::abs(r.value) - expected) > 1e-8)
                    fail("cycle sym2k root off the circle |y| = 1/u");
                ++checked;
            }
        }
    }

    // Example 4.8, k = 2 on K5 and the 3x3 torus: u >= binom(4,2)^2 / 4 = 9
    for (long u : {9L, 16L}) {
        for (const Graph& g : {make_complete(5), make_torus(3, 2)}) {
            ActivityTable table =
                ActivityTable::from_family(g, FamilySpec::parse("sym2k:" + std::to_string(u)));
            UniPoly z = z_univariate(g, table);
            double expected = std::pow(static_cast<double>(u), -0.5);
            for (const auto& r : find_roots(z).roots) {
                if (std::abs(std::abs(r.value) - expected) > 1e-8)
                    fail("k=2 sym2k root off the circle |y| = u^{-1/2}");
                ++checked;
            }
        }
    }

    // Example 4.9: reciprocal keys put every root on the unit circle
    std::vector<Graph> recips;
    for (unsigned n = 3; n <= 8; ++n) recips.push_back(make_cycle(n));
    recips.push_back(make_complete(4));
    recips.push_back(make_petersen());
    for (const Graph& g : recips) {
        UniPoly z = z_for(g, "reciprocal");
        for (const auto& r : find_roots(z).roots) {
            if (std::abs(std::abs(r.value) - 1.0) > 1e-8)
                fail("reciprocal root off the unit circle");
            ++checked;
        }
    }

    // the K3 instance reproduces (1, 3/4, 3/4, 1) exactly
    UniPoly k3 = z_for(make_cycle(3), "reciprocal");
    UniPoly expected{Scalar(1), Scalar(Rational(3, 4)), Scalar(Rational(3, 4)), Scalar(1)};
    if (!(k3 == expected)) fail("K3 reciprocal coefficients are not (1, 3/4, 3/4, 1)");

    return std::to_string(checked) + " root moduli pinned";
}

std::string criterion5_section2_properties() {
    std::mt19937_64 rng(505);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    // polarization round trip, 500 exact instances with d <= 8
    for (int instance = 0; instance < 500; ++instance) {
        unsigned d = 1 + static_cast<unsigned>(rng() % 8);
        unsigned deg = static_cast<unsigned>(rng() % (d + 1));
        std::vector<Scalar> coeffs;
        for (unsigned j = 0; j <= deg; ++j) {
            long num = static_cast<long>(rng() % 19) - 9;
            coeffs.push_back(Scalar(Rational(num, 1 + static_cast<long>(rng() % 9))));
        }
        UniPoly p(coeffs);
        MultiPoly tilde = polarize(p, d);
        std::vector<Scalar> diag(d + 1, Scalar(0));
        for (const auto& t : tilde.terms()) diag[t.exp.total_degree()] += t.coeff;
        if (!(UniPoly(diag) == p)) fail("polarization round trip broke");
    }

    auto build = [](const std::vector<Complex>& roots) {
        std::vector<Complex> mono{Complex(1.0, 0.0)};
        for (Complex r : roots) {
            mono.push_back(mono.back());
            for (std::size_t j = mono.size() - 2; j >= 1; --j) mono[j] = mono[j - 1] - r * mono[j];
            mono[0] = -r * mono[0];
        }
        std::vector<Scalar> coeffs;
        for (Complex c : mono) coeffs.emplace_back(c);
        return UniPoly(coeffs);
    };

    // Grace-Szego-Walsh sampling: 100 instances x 200 points
    for (int instance = 0; instance < 100; ++instance) {
        unsigned d = 2 + static_cast<unsigned>(rng() % 7);
        std::vector<Complex> roots;
        while (roots.size() < d) {
            double re = -3.0 * unit(rng);
            double im = 2.0 * unit(rng) - 1.0;
            if (roots.size() + 2 <= d && std::abs(im) > 1e-3) {
                roots.emplace_back(re, im);
                roots.emplace_back(re, -im);
            } else {
                roots.emplace_back(re, 0.0);
            }
        }
        MultiPoly tilde = polarize(build(roots), d);
        for (int k = 0; k < 200; ++k) {
            std::unordered_map<VertexId, Complex> point;
            for (unsigned v = 0; v < d; ++v) {
                double r = std::pow(10.0, -1.0 + 2.0 * unit(rng));
                double a = (kPi / 2.0) * (2.0 * unit(rng) - 1.0) * 0.9999;
                point[v] = std::polar(r, a);
            }
            auto ev = tilde.eval(point);
            if (!(std::abs(ev.value) > 1e-12 * ev.max_term_magnitude))
                fail("GSW sampling found a zero inside S[pi/2]");
        }
    }

    // Schur-Szego region containment, 100 instances per clause
    auto random_moduli_roots = [&](unsigned n, double rmin, double rmax) {
        std::vector<Complex> roots;
        while (roots.size() < n) {
            double r = rmin + (rmax - rmin) * unit(rng);
            double a = kPi * (2.0 * unit(rng) - 1.0);
            Complex z = std::polar(r, a);
            if (roots.size() + 2 <= n && std::abs(z.imag()) > 1e-6) {
                roots.push_back(z);
                roots.push_back(std::conj(z));
            } else {
                roots.push_back(Complex(z.real(), z.imag()));
            }
        }
        return roots;
    };
    auto left_half_roots = [&](unsigned n) {
        std::vector<Complex> roots;
        while (roots.size() < n) {
            double re = -0.2 - 2.8 * unit(rng);
            double im = 2.0 * unit(rng) - 1.0;
            if (roots.size() + 2 <= n && std::abs(im) > 1e-3) {
                roots.emplace_back(re, im);
                roots.emplace_back(re, -im);
            } else {
                roots.emplace_back(re, 0.0);
            }
        }
        return roots;
    };

    for (int instance = 0; instance < 100; ++instance) {
        unsigned d = 2 + static_cast<unsigned>(rng() % 4);
        std::vector<Scalar> u(d + 1, Scalar(0));

        // (a) P S[pi/2]-nonvanishing, K S[pi]-nonvanishing with nonnegative
        // coefficients -> Q roots outside S[pi/2]
        UniPoly p = build(left_half_roots(d));
        UniPoly k{Scalar(1)};
        for (unsigned i = 0; i < d; ++i)
            k = k * UniPoly{Scalar(1), Scalar(2.0 * unit(rng))};
        for (unsigned j = 0; j <= d; ++j)
            u[j] = Scalar(k.coeff(j).to_complex() / binomial(d, j).convert_to<double>());
        UniPoly q = schur_szego(p, u, d);
        if (q.degree() >= 1) {
            for (const auto& r : find_roots(q).roots)
                if (std::abs(std::arg(r.value)) < kPi / 2.0 - 1e-8)
                    fail("Prop 2.5(a): Q root inside S[pi/2]");
        }

        // (b) root moduli >= rho and >= kappa -> Q roots moduli >= kappa rho
        double rho = 0.3 + unit(rng), kappa = 0.3 + unit(rng);
        UniPoly pb = build(random_moduli_roots(d, rho, rho * 4.0));
        UniPoly kb = build(random_moduli_roots(d, kappa, kappa * 4.0));
        for (unsigned j = 0; j <= d; ++j)
            u[j] = Scalar(kb.coeff(j).to_complex() / binomial(d, j).convert_to<double>());
        UniPoly qb = schur_szego(pb, u, d);
        if (qb.degree() >= 1) {
            for (const auto& r : find_roots(qb).roots)
                if (std::abs(r.value) < kappa * rho * (1.0 - 1e-8))
                    fail("Prop 2.5(b): Q root inside kappa rho D");
        }

        // (c) root moduli <= rho and <= kappa with deg K = d -> moduli <= kappa rho
        UniPoly pc = build(random_moduli_roots(d, rho * 0.1, rho));
        UniPoly kc = build(random_moduli_roots(d, kappa * 0.1, kappa));
        for (unsigned j = 0; j <= d; ++j)
            u[j] = Scalar(kc.coeff(j).to_complex() / binomial(d, j).convert_to<double>());
        UniPoly qc = schur_szego(pc, u, d);
        if (qc.degree() >= 1) {
            for (const auto& r : find_roots(qc).roots)
                if (std::abs(r.value) > kappa * rho * (1.0 + 1e-8))
                    fail("Prop 2.5(c): Q root outside kappa rho E");
        }
    }
    return "500 polarization round trips, 20000 GSW points, 300 composition instances";
}

std::string criterion6_statmech_consistency() {
    std::mt19937_64 rng(606);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    // double-route agreement across the regular corpus (partition throws
    // beyond 1e-10 relative)
    std::vector<Graph> corpus;
    for (unsigned n = 3; n <= 8; ++n) corpus.push_back(make_cycle(n));
    corpus.push_back(make_complete(4));
    corpus.push_back(make_complete(5));
    for (const Graph& g : corpus) {
        unsigned d = 0;
        g.is_regular(&d);
        for (int draw = 0; draw < 5; ++draw) {
            ModelParams p;
            p.beta = 0.2 + 2.0 * unit(rng);
            p.J = 2.0 * unit(rng) - 1.0;
            p.mu.assign(d + 1, 0.0);
            for (auto& m : p.mu) m = unit(rng) < 0.15 ? std::numeric_limits<double>::infinity()
                                                      : 1.4 * unit(rng) - 0.7;
            p.mu[0] = 0.0;  // keep the empty configuration allowed so Z > 0
            partition(g, p);
        }
    }

    // 50 random parameter draws with the finite-difference crosschecks armed
    std::vector<Graph> fd_corpus{make_cycle(3), make_cycle(4), make_cycle(5), make_cycle(6),
                                 make_complete(4)};
    for (int draw = 0; draw < 50; ++draw) {
        const Graph& g = fd_corpus[draw % fd_corpus.size()];
        unsigned d = 0;
        g.is_regular(&d);
        ModelParams p;
        p.beta = 0.3 + 1.5 * unit(rng);
        p.J = 1.6 * unit(rng) - 0.8;
        p.mu.assign(d + 1, 0.0);
        for (auto& m : p.mu) m = 1.2 * unit(rng) - 0.6;
        expected_edges(g, p, true);
        expected_degree_counts(g, p, true);
    }

    // the frozen C3 point
    Graph c3 = make_cycle(3);
    ModelParams p{1.0, 0.0, {0.0, 0.0, 0.0}};
    if (std::abs(partition(c3, p) - 8.0) > 1e-12) fail("Z(C3) != 8");
    if (std::abs(expected_edges(c3, p) - 1.5) > 1e-12) fail("<#H> != 3/2");
    auto counts = expected_degree_counts(c3, p);
    if (std::abs(counts[0] - 0.75) > 1e-12 || std::abs(counts[1] - 1.5) > 1e-12 ||
        std::abs(counts[2] - 0.75) > 1e-12)
        fail("<#V_j> != (3/4, 3/2, 3/4)");
    return "8 graphs x 5 draws double-route, 50 finite-difference draws, C3 point exact";
}

std::string criterion7_analyticity_reports() {
    constexpr double kInf = std::numeric_limits<double>::infinity();

    // d = 4 Ruelle with u = 0: analytic for J > (1/beta) log 6
    for (double beta : {0.4, 1.0, 3.7}) {
        AnalyticityReport rep = analyticity_report(4, beta, {0.0, kInf, 0.0, kInf, kInf});
        if (!rep.j_lower) fail("Ruelle u=0: disk clause missing");
        if (std::abs(*rep.j_lower - std::log(6.0) / beta) > 1e-10)
            fail("Ruelle u=0 threshold off: " + std::to_string(*rep.j_lower));
        if (rep.all_J || rep.j_upper) fail("Ruelle u=0: spurious clauses");
    }

    // unit-modulus reciprocal-type keys: the window collapses to beta J = 0
    for (unsigned d : {2u, 3u, 5u}) {
        double beta = 1.3;
        std::vector<double> mu;
        for (unsigned j = 0; j <= d; ++j)
            mu.push_back(std::log(binomial(d, j).convert_to<double>()) / beta);
        AnalyticityReport rep = analyticity_report(d, beta, mu);
        if (!rep.j_lower || !rep.j_upper) fail("unit-modulus: missing clause");
        if (std::abs(*rep.j_lower) > 1e-10 || std::abs(*rep.j_upper) > 1e-10)
            fail("unit-modulus window is not {0}");
    }

    // Example 5.4 window J = -mu/k for k = 1, 2 under condition (5.8)
    for (unsigned k : {1u, 2u}) {
        double beta = 2.0;
        double b2k = binomial(2 * k, k).convert_to<double>();
        // -beta mu > 2 log binom - log 4, taken with a margin
        double mu_top = -(2.0 * std::log(b2k) - std::log(4.0) + 0.5) / beta;
        for (double mu : {mu_top, mu_top - 0.7}) {
            std::vector<double> muv(2 * k + 1, kInf);
            muv[0] = 0.0;
            muv[k] = 0.0;
            muv[2 * k] = mu;
            AnalyticityReport rep = analyticity_report(2 * k, beta, muv);
            if (!rep.j_lower || !rep.j_upper) fail("Example 5.4: missing clause");
            double expected = -mu / static_cast<double>(k);
            if (std::abs(*rep.j_lower - expected) > 1e-10 ||
                std::abs(*rep.j_upper - expected) > 1e-10)
                fail("Example 5.4 window is not J = -mu/k");
        }
    }
    return "thresholds reproduced to 1e-10";
}

std::string criterion8_conjecture_harness() {
    ScanOptions narrow;
    narrow.trials = 500;
    narrow.seed = 808;
    narrow.max_vertices = 8;
    narrow.max_edges = 10;
    narrow.width = 1;
    ScanReport narrow_rep = conjecture_scan(narrow);
    if (!narrow_rep.violations.empty()) fail("width <= 1 scan reported a violation");
    if (narrow_rep.completed + narrow_rep.skipped != 500) fail("width <= 1 scan lost trials");

    ScanOptions open;
    open.trials = 500;
    open.seed = 809;
    open.max_vertices = 8;
    open.max_edges = 10;
    ScanReport a = conjecture_scan(open);
    ScanReport b = conjecture_scan(open);
    if (a.completed != b.completed || a.violations.size() != b.violations.size())
        fail("unrestricted scan is not reproducible under its seed");
    std::ostringstream os;
    os << "width<=1: 0 violations in 500; unrestricted: " << a.violations.size()
       << " violations in 500 (reproducible)";
    return os.str();
}

}  // namespace

int main() {
    Harness h;
    h.run("1. oracle equivalence z_compose == z_bruteforce", criterion1_oracle_equivalence);
    h.run("2. Heilmann-Lieb real-rootedness (matching + width-1 intervals)",
          criterion2_heilmann_lieb);
    h.run("3. sector certifications (ruelle, width-2, width-3 intervals)",
          criterion3_sector_certifications);
    h.run("4. modulus certifications (symmetric and reciprocal keys)",
          criterion4_modulus_certifications);
    h.run("5. polarization / GSW / composition property suites", criterion5_section2_properties);
    h.run("6. statmech double-route and derivative consistency", criterion6_statmech_consistency);
    h.run("7. free-energy analyticity thresholds", criterion7_analyticity_reports);
    h.run("8. log-concavity conjecture harness", criterion8_conjecture_harness);
    if (h.failures == 0) {
        std::printf("acceptance: all 8 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", h.failures);
    return 1;
}
