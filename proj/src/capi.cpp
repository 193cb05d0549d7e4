#include "spanpoly.h"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <mutex>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>

#include "spanpoly/activities.hpp"
#include "spanpoly/error.hpp"
#include "spanpoly/graph.hpp"
#include "spanpoly/json_io.hpp"
#include "spanpoly/keys.hpp"
#include "spanpoly/regions.hpp"
#include "spanpoly/roots.hpp"
#include "spanpoly/statmech.hpp"
#include "spanpoly/subgraph.hpp"
#include "spanpoly/theorem.hpp"

using namespace spanpoly;

struct spz_graph {
    Graph g;
};
struct spz_activities {
    ActivityTable table;
};

namespace {

thread_local std::string g_last_error;

spz_status status_of(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Argument: return SPZ_ERR_ARGUMENT;
        case ErrorKind::Parse: return SPZ_ERR_PARSE;
        case ErrorKind::Resource: return SPZ_ERR_RESOURCE;
        case ErrorKind::Numeric: return SPZ_ERR_NUMERIC;
        case ErrorKind::Internal: return SPZ_ERR_INTERNAL;
    }
    return SPZ_ERR_INTERNAL;
}

template <typename Fn>
spz_status guarded(Fn&& fn) {
    try {
        fn();
        return SPZ_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.kind());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SPZ_ERR_INTERNAL;
    }
}

char* alloc_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(bool ok, const char* what) {
    if (!ok) throw_argument(what);
}

Json parse_json(const char* text, const char* what) {
    Json j = Json::parse(text == nullptr ? "" : text, nullptr, false);
    if (j.is_discarded()) throw_parse(std::string(what) + ": malformed JSON");
    return j;
}

Json options_json(const char* text) {
    if (text == nullptr || *text == '\0') return Json::object();
    return parse_json(text, "options");
}

WeightClass parse_weight_class(const std::string& spec, const Graph& g) {
    if (spec == "nonneg") return NonnegReal{};
    auto parse_bound = [&](const std::string& rest, bool is_max) -> double {
        if (!rest.empty()) return std::stod(rest);
        double extreme = is_max ? 0.0 : std::numeric_limits<double>::infinity();
        for (const Edge& e : g.edges()) {
            double m = e.lambda.abs();
            extreme = is_max ? std::max(extreme, m) : std::min(extreme, m);
        }
        if (g.edges().empty()) extreme = 1.0;
        return extreme;
    };
    if (spec.rfind("bounded", 0) == 0) {
        std::string rest = spec.size() > 7 && spec[7] == ':' ? spec.substr(8) : "";
        double b = parse_bound(rest, true);
        if (!(b > 0.0)) throw_argument("weight class: need lambda_max > 0");
        return BoundedModulus{b};
    }
    if (spec.rfind("atleast", 0) == 0) {
        std::string rest = spec.size() > 7 && spec[7] == ':' ? spec.substr(8) : "";
        double b = parse_bound(rest, false);
        if (!(b > 0.0)) throw_argument("weight class: need lambda_min > 0");
        return ModulusAtLeast{b};
    }
    throw_parse("weight class: expected nonneg | bounded[:x] | atleast[:x], got '" + spec + "'");
}

Region parse_region_spec(const std::string& spec) {
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon);
    if (colon == std::string::npos) throw_parse("region: expected '<kind>:<value>'");
    double v = std::stod(spec.substr(colon + 1));
    if (head == "sector" || head == "S") return Region::sector(v);
    if (head == "disk" || head == "D") return Region::disk(v);
    if (head == "exterior" || head == "E") return Region::exterior(v);
    throw_parse("region: unknown kind '" + head + "'");
}

Json key_analysis_json(const KeyPolynomial& key, const KeyAnalysis& a) {
    Json coeffs = Json::array();
    for (const auto& c : key.poly.coeffs()) coeffs.push_back(scalar_to_json(c));
    Json activities = Json::array();
    for (const auto& u : key.u) activities.push_back(scalar_to_json(u));
    Json j{{"degree", key.d},
           {"activities", activities},
           {"coeffs", coeffs},
           {"roots", rootset_to_json(a.roots)},
           {"sector_max", a.no_nonzero_roots ? Json("all") : Json(a.sector_max)},
           {"disk_radius", std::isinf(a.disk_radius) ? Json("inf") : Json(a.disk_radius)},
           {"exterior_radius", a.exterior_radius},
           {"degree_full", a.degree_full}};
    return j;
}

const char* verdict_name(CertifyReport::Verdict v) {
    switch (v) {
        case CertifyReport::Verdict::Pass: return "pass";
        case CertifyReport::Verdict::Fail: return "fail";
        case CertifyReport::Verdict::Degenerate: return "pass";
    }
    return "?";
}

Json conclusion_json(const Conclusion& c) {
    Json diag = Json::array();
    for (const auto& d : c.diagnostics) {
        const char* st = d.status == VertexHypothesis::Status::Pass
                             ? "pass"
                             : (d.status == VertexHypothesis::Status::Inconclusive ? "inconclusive"
                                                                                   : "fail");
        Json entry{{"vertex", d.vertex}, {"required", d.required}, {"actual", d.actual}, {"status", st}};
        if (!d.note.empty()) entry["note"] = d.note;
        diag.push_back(std::move(entry));
    }
    Json j{{"hypotheses_ok", c.hypotheses_ok}, {"diagnostics", diag}};
    if (c.alpha) j["alpha"] = *c.alpha;
    if (c.kappa) j["kappa"] = *c.kappa;
    if (c.multivariate_region) j["multivariate_region"] = region_to_json(*c.multivariate_region);
    if (c.univariate_region) j["univariate_region"] = region_to_json(*c.univariate_region);
    if (!c.hypotheses_ok) j["failure"] = c.failure_reason;
    if (!c.weight_check.ok) {
        j["weight_check"] = Json{{"ok", false}, {"detail", c.weight_check.detail}};
    }
    return j;
}

std::vector<double> parse_mu(const Json& j) {
    std::vector<double> mu;
    for (const auto& item : j) {
        if (item.is_string()) {
            std::string s = item.get<std::string>();
            if (s == "inf" || s == "+inf" || s == "infinity")
                mu.push_back(std::numeric_limits<double>::infinity());
            else
                mu.push_back(std::stod(s));
        } else {
            mu.push_back(item.get<double>());
        }
    }
    return mu;
}

}  // namespace

extern "C" {

const char* spz_version(void) { return "0.1.0"; }

const char* spz_last_error(void) { return g_last_error.c_str(); }

void spz_string_free(char* s) { std::free(s); }

spz_status spz_graph_parse(const char* json, spz_graph** out) {
    return guarded([&] {
        require(json && out, "spz_graph_parse: null argument");
        *out = new spz_graph{spanpoly::parse_graph(json)};
    });
}

spz_status spz_graph_generate(const char* kind, spz_graph** out) {
    return guarded([&] {
        require(kind && out, "spz_graph_generate: null argument");
        *out = new spz_graph{generate_graph(kind)};
    });
}

spz_status spz_graph_to_json(const spz_graph* g, char** json_out) {
    return guarded([&] {
        require(g && json_out, "spz_graph_to_json: null argument");
        *json_out = alloc_string(graph_to_json(g->g).dump());
    });
}

void spz_graph_free(spz_graph* g) { delete g; }

spz_status spz_activities_parse(const spz_graph* g, const char* json, spz_activities** out) {
    return guarded([&] {
        require(g && json && out, "spz_activities_parse: null argument");
        *out = new spz_activities{activities_from_json(g->g, parse_json(json, "activities"))};
    });
}

spz_status spz_activities_from_family(const spz_graph* g, const char* family,
                                      spz_activities** out) {
    return guarded([&] {
        require(g && family && out, "spz_activities_from_family: null argument");
        *out = new spz_activities{ActivityTable::from_family(g->g, FamilySpec::parse(family))};
    });
}

spz_status spz_activities_to_json(const spz_graph* g, const spz_activities* a, char** json_out) {
    return guarded([&] {
        require(g && a && json_out, "spz_activities_to_json: null argument");
        *json_out = alloc_string(activities_to_json(g->g, a->table).dump());
    });
}

void spz_activities_free(spz_activities* a) { delete a; }

spz_status spz_poly_omega(const spz_graph* g, char** json_out) {
    return guarded([&] {
        require(g && json_out, "spz_poly_omega: null argument");
        *json_out = alloc_string(multipoly_to_json(omega(g->g)).dump());
    });
}

spz_status spz_poly_z(const spz_graph* g, const spz_activities* a, char** json_out) {
    return guarded([&] {
        require(g && a && json_out, "spz_poly_z: null argument");
        *json_out = alloc_string(multipoly_to_json(z_compose(g->g, a->table)).dump());
    });
}

spz_status spz_poly_z_univariate(const spz_graph* g, const spz_activities* a, char** json_out) {
    return guarded([&] {
        require(g && a && json_out, "spz_poly_z_univariate: null argument");
        *json_out = alloc_string(unipoly_to_json(z_univariate(g->g, a->table)).dump());
    });
}

spz_status spz_unipoly_roots(const char* unipoly_json, int as_csv, char** out) {
    return guarded([&] {
        require(unipoly_json && out, "spz_unipoly_roots: null argument");
        UniPoly p = unipoly_from_json(parse_json(unipoly_json, "polynomial"));
        RootSet roots = find_roots(p);
        *out = alloc_string(as_csv ? rootset_to_csv(roots) : rootset_to_json(roots).dump());
    });
}

spz_status spz_key_analysis(const char* family, unsigned degree, char** json_out) {
    return guarded([&] {
        require(family && json_out, "spz_key_analysis: null argument");
        FamilySpec spec = FamilySpec::parse(family);
        KeyPolynomial key = key_from_activities(spec.activities_for_degree(degree), degree);
        KeyAnalysis a = analyze_key(key);
        Json j = key_analysis_json(key, a);
        j["family"] = spec.describe();
        *json_out = alloc_string(j.dump());
    });
}

spz_status spz_certify(const spz_graph* g, const spz_activities* a, const char* options_json_text,
                       char** report_out, int* verdict) {
    return guarded([&] {
        require(g && a && report_out && verdict, "spz_certify: null argument");
        Json opts = options_json(options_json_text);

        Json report = Json::object();
        report["graph"] = Json{{"vertices", g->g.vertex_count()}, {"edges", g->g.edge_count()}};

        if (a->table.any_zero_row()) {
            report["verdict"] = "pass";
            report["degenerate"] = "identically zero";
            *report_out = alloc_string(report.dump());
            *verdict = 0;
            return;
        }

        std::vector<KeyPolynomial> keys = a->table.keys(g->g);
        std::vector<KeyAnalysis> analyses;
        analyses.reserve(keys.size());
        Json keys_json = Json::array();
        for (const auto& key : keys) {
            analyses.push_back(analyze_key(key));
            keys_json.push_back(key_analysis_json(key, analyses.back()));
        }
        report["keys"] = keys_json;

        std::vector<std::string> class_specs;
        if (opts.contains("weight_classes"))
            for (const auto& c : opts.at("weight_classes")) class_specs.push_back(c.get<std::string>());
        if (class_specs.empty()) class_specs.push_back("nonneg");

        std::optional<double> param;
        if (opts.contains("alpha")) param = opts.at("alpha").get<double>();
        if (opts.contains("kappa")) param = opts.at("kappa").get<double>();

        bool all_pass = true;
        Json results = Json::array();
        for (const auto& spec : class_specs) {
            WeightClass wc = parse_weight_class(spec, g->g);
            Conclusion concl = conclude(g->g, wc, analyses, param);
            Json entry{{"weight_class", weight_class_name(wc)}, {"conclusion", conclusion_json(concl)}};
            if (concl.hypotheses_ok) {
                CertifyReport cert = certify_univariate(g->g, a->table, concl);
                entry["polynomial"] = unipoly_to_json(cert.polynomial);
                entry["region"] = region_to_json(cert.region);
                if (cert.verdict == CertifyReport::Verdict::Degenerate) {
                    entry["degenerate"] = "identically zero";
                } else {
                    entry["roots"] = rootset_to_json(cert.roots);
                    entry["boundary_roots"] = cert.boundary_roots;
                    if (cert.check.witness)
                        entry["witness"] = Json{{"re", cert.check.witness->real()},
                                                {"im", cert.check.witness->imag()}};
                }
                entry["verdict"] = verdict_name(cert.verdict);
                all_pass = all_pass && cert.verdict != CertifyReport::Verdict::Fail;
            } else {
                entry["verdict"] = "hypotheses_failed";
                all_pass = false;
            }
            results.push_back(std::move(entry));
        }
        report["results"] = results;
        report["verdict"] = all_pass ? "pass" : "fail";
        *report_out = alloc_string(report.dump());
        *verdict = all_pass ? 0 : 1;
    });
}

spz_status spz_falsify(const spz_graph* g, const spz_activities* a, const char* options_json_text,
                       char** report_out, int* verdict) {
    return guarded([&] {
        require(g && a && report_out && verdict, "spz_falsify: null argument");
        Json opts = options_json(options_json_text);
        std::size_t samples = opts.value("samples", std::size_t(10000));
        std::uint64_t seed = opts.value("seed", std::uint64_t(0));
        unsigned threads = opts.value("threads", 0u);

        std::string region_spec = opts.value("region", std::string("auto"));
        Region region = Region::sector(std::numbers::pi / 2.0);
        Json conclusion;
        if (region_spec == "auto") {
            WeightClass wc = parse_weight_class(opts.value("weight_class", std::string("nonneg")), g->g);
            std::vector<KeyAnalysis> analyses;
            for (const auto& key : a->table.keys(g->g)) analyses.push_back(analyze_key(key));
            Conclusion concl = conclude(g->g, wc, analyses, std::nullopt);
            if (!concl.hypotheses_ok)
                throw_argument("falsify: auto region unavailable, hypotheses fail: " +
                               concl.failure_reason);
            region = *concl.multivariate_region;
            conclusion = conclusion_json(concl);
        } else {
            region = parse_region_spec(region_spec);
        }

        FalsifyReport rep = falsify_multivariate(g->g, a->table, region, samples, seed, threads);
        Json j{{"region", region_to_json(region)},
               {"samples", rep.samples},
               {"seed", seed},
               {"min_normalized", rep.min_normalized},
               {"counterexample_candidate", rep.counterexample_candidate},
               {"identically_zero", rep.identically_zero}};
        if (!conclusion.is_null()) j["conclusion"] = conclusion;
        if (!rep.argmin.empty()) {
            Json point = Json::object();
            for (const auto& [v, z] : rep.argmin)
                point[std::to_string(v)] = Json{{"re", z.real()}, {"im", z.imag()}};
            j["argmin"] = point;
        }
        *report_out = alloc_string(j.dump());
        *verdict = rep.counterexample_candidate ? 1 : 0;
    });
}

spz_status spz_logcc(const char* sequence_json, char** report_out, int* verdict) {
    return guarded([&] {
        require(sequence_json && report_out && verdict, "spz_logcc: null argument");
        Json j = parse_json(sequence_json, "sequence");
        const Json* arr = j.is_array() ? &j : (j.contains("seq") ? &j.at("seq") : nullptr);
        if (arr == nullptr) throw_parse("logcc: expected a JSON array (or {\"seq\":[...]})");
        std::vector<Scalar> seq;
        for (const auto& item : *arr) seq.push_back(parse_scalar_json(item));
        LogccVerdict v = logconcavity_check(seq);
        Json rep{{"status", v.status == LogccVerdict::Status::Pass
                                ? "pass"
                                : (v.status == LogccVerdict::Status::Fail ? "fail"
                                                                          : "not_applicable")}};
        if (v.index) rep["index"] = *v.index;
        if (!v.reason.empty()) rep["reason"] = v.reason;
        *report_out = alloc_string(rep.dump());
        *verdict = v.status == LogccVerdict::Status::Fail ? 1 : 0;
    });
}

spz_status spz_scan(const char* options_json_text, char** report_out, int* verdict) {
    return guarded([&] {
        require(report_out && verdict, "spz_scan: null argument");
        Json opts = options_json(options_json_text);
        ScanOptions so;
        so.trials = opts.value("trials", std::size_t(100));
        so.seed = opts.value("seed", std::uint64_t(0));
        so.max_vertices = opts.value("max_vertices", 8u);
        so.max_edges = opts.value("max_edges", 10u);
        so.threads = opts.value("threads", 0u);
        if (opts.contains("width") && !opts.at("width").is_null())
            so.width = opts.at("width").get<unsigned>();

        ScanReport rep = conjecture_scan(so);
        Json violations = Json::array();
        for (const auto& v : rep.violations) {
            violations.push_back(Json{{"trial", v.trial},
                                      {"graph", Json::parse(v.graph_json)},
                                      {"activities", Json::parse(v.activities_json)},
                                      {"coefficients", v.coefficients},
                                      {"index", v.index},
                                      {"reason", v.reason},
                                      {"seed", so.seed}});
        }
        Json j{{"trials", so.trials},
               {"seed", so.seed},
               {"max_vertices", so.max_vertices},
               {"max_edges", so.max_edges},
               {"completed", rep.completed},
               {"skipped", rep.skipped},
               {"violations", violations}};
        if (so.width) j["width"] = *so.width;
        *report_out = alloc_string(j.dump());
        *verdict = rep.violations.empty() ? 0 : 1;
    });
}

spz_status spz_statmech(const spz_graph* g_or_null, const char* options_json_text,
                        char** report_out) {
    return guarded([&] {
        require(report_out, "spz_statmech: null argument");
        Json opts = options_json(options_json_text);
        ModelParams p;
        p.beta = opts.value("beta", 1.0);
        p.J = opts.value("J", 0.0);
        if (!opts.contains("mu")) throw_argument("statmech: missing \"mu\"");
        p.mu = parse_mu(opts.at("mu"));

        Json report = Json::object();
        Json rows = Json::array();
        unsigned d = static_cast<unsigned>(p.mu.size()) - 1;

        auto observable_row = [&](const Graph& graph, const ModelParams& params) {
            double logz = log_partition(graph, params);
            double z = partition(graph, params);
            double ee = expected_edges(graph, params);
            auto counts = expected_degree_counts(graph, params);
            Json row{{"beta", params.beta},
                     {"J", params.J},
                     {"Z", z},
                     {"log_Z", logz},
                     {"expected_edges", ee},
                     {"expected_degree_counts", counts},
                     {"free_energy_per_vertex",
                      -logz / (params.beta * static_cast<double>(graph.vertex_count()))}};
            return row;
        };

        if (g_or_null != nullptr) {
            const Graph& graph = g_or_null->g;
            unsigned dg = 0;
            if (!graph.is_regular(&dg))
                throw_argument("statmech: the graph must be d-regular");
            if (dg != d)
                throw_argument("statmech: mu has length " + std::to_string(p.mu.size()) +
                               " but the graph is " + std::to_string(dg) + "-regular");
            if (opts.contains("sweep")) {
                const Json& sw = opts.at("sweep");
                std::string param = sw.value("param", std::string("J"));
                double from = sw.at("from").get<double>();
                double to = sw.at("to").get<double>();
                unsigned steps = sw.value("steps", 11u);
                if (steps < 1) throw_argument("statmech: sweep needs steps >= 1");
                if (param != "J" && param != "beta")
                    throw_argument("statmech: sweep param must be \"J\" or \"beta\"");
                // grid points are independent; run them on the worker pool
                // and emit in grid order
                unsigned threads = opts.value("threads", 0u);
                if (threads == 0) threads = std::thread::hardware_concurrency();
                threads = std::max(1u, std::min(threads, steps));
                std::vector<Json> sweep_rows(steps);
                std::atomic<unsigned> next{0};
                std::exception_ptr failure;
                std::mutex failure_mutex;
                auto worker = [&]() {
                    for (;;) {
                        unsigned i = next.fetch_add(1);
                        if (i >= steps) return;
                        try {
                            double x = steps == 1 ? from : from + (to - from) * i / (steps - 1);
                            ModelParams q = p;
                            (param == "J" ? q.J : q.beta) = x;
                            sweep_rows[i] = observable_row(graph, q);
                        } catch (...) {
                            std::lock_guard<std::mutex> lock(failure_mutex);
                            if (!failure) failure = std::current_exception();
                            return;
                        }
                    }
                };
                std::vector<std::thread> pool;
                for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
                for (auto& th : pool) th.join();
                if (failure) std::rethrow_exception(failure);
                for (auto& row : sweep_rows) rows.push_back(std::move(row));
            } else {
                rows.push_back(observable_row(graph, p));
            }
        }

        if (opts.contains("family")) {
            std::string family = opts.at("family").get<std::string>();
            std::vector<unsigned> sizes;
            if (opts.contains("sizes"))
                for (const auto& s : opts.at("sizes")) sizes.push_back(s.get<unsigned>());
            FreeEnergySequence seq = free_energy_sequence(family, p, sizes);
            Json pts = Json::array();
            for (const auto& pt : seq.points)
                pts.push_back(Json{{"n", pt.size}, {"vertices", pt.vertex_count}, {"f", pt.f}});
            Json skipped = Json::array();
            for (const auto& [n, reason] : seq.skipped)
                skipped.push_back(Json{{"n", n}, {"reason", reason}});
            report["free_energy_sequence"] = Json{{"family", family}, {"points", pts}, {"skipped", skipped}};
        }

        report["rows"] = rows;

        AnalyticityReport ar = analyticity_report(d, p.beta, p.mu);
        Json aj{{"d", ar.d}, {"beta", ar.beta}, {"degenerate", ar.degenerate}};
        if (!ar.degenerate) {
            Json clauses = Json::array();
            if (ar.all_J)
                clauses.push_back(Json{{"clause", "sector"},
                                       {"analytic", "all J"},
                                       {"epsilon", ar.epsilon}});
            if (ar.j_lower)
                clauses.push_back(Json{{"clause", "disk"},
                                       {"kappa", *ar.disk_kappa},
                                       {"analytic_for_J_above", *ar.j_lower}});
            if (ar.j_upper)
                clauses.push_back(Json{{"clause", "exterior"},
                                       {"kappa", *ar.exterior_kappa},
                                       {"analytic_for_J_below", *ar.j_upper}});
            aj["clauses"] = clauses;
            if (ar.j_lower && ar.j_upper)
                aj["possible_transition_window"] = Json{{"from", *ar.j_upper}, {"to", *ar.j_lower}};
            if (ar.analysis) aj["key"] = key_analysis_json(ar.key, *ar.analysis);
        }
        report["analyticity"] = aj;

        if (opts.value("csv", false)) {
            std::ostringstream csv;
            csv.precision(17);
            csv << "beta,J,Z,log_Z,expected_edges";
            for (unsigned j = 0; j <= d; ++j) csv << ",V" << j;
            csv << ",free_energy_per_vertex\n";
            for (const auto& row : rows) {
                csv << row.at("beta").get<double>() << ',' << row.at("J").get<double>() << ','
                    << row.at("Z").get<double>() << ',' << row.at("log_Z").get<double>() << ','
                    << row.at("expected_edges").get<double>();
                for (const auto& c : row.at("expected_degree_counts")) csv << ',' << c.get<double>();
                csv << ',' << row.at("free_energy_per_vertex").get<double>() << '\n';
            }
            report["csv"] = csv.str();
        }

        *report_out = alloc_string(report.dump());
    });
}

}  // extern "C"
