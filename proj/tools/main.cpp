// spanpoly command-line interface. All computation happens behind the
// extern-C library surface in spanpoly.h; this binary only parses flags,
// shuttles JSON, and maps statuses to exit codes:
//   0 success / pass, 1 certified failure or counterexample,
//   2 usage error, 3 numerical or resource error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "spanpoly.h"

namespace {

using Json = nlohmann::json;

int exit_code_for(spz_status status) {
    switch (status) {
        case SPZ_OK: return 0;
        case SPZ_ERR_ARGUMENT:
        case SPZ_ERR_PARSE: return 2;
        default: return 3;
    }
}

const char* status_kind(spz_status status) {
    switch (status) {
        case SPZ_OK: return "ok";
        case SPZ_ERR_ARGUMENT: return "argument";
        case SPZ_ERR_PARSE: return "parse";
        case SPZ_ERR_RESOURCE: return "resource";
        case SPZ_ERR_NUMERIC: return "numeric";
        default: return "internal";
    }
}

[[noreturn]] void fail(spz_status status) {
    Json err{{"error", {{"kind", status_kind(status)}, {"detail", spz_last_error()}}}};
    std::cout << err.dump() << "\n";
    std::exit(exit_code_for(status));
}

void check(spz_status status) {
    if (status != SPZ_OK) fail(status);
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) {
        Json err{{"error", {{"kind", "argument"}, {"detail", "cannot open '" + path + "'"}}}};
        std::cout << err.dump() << "\n";
        std::exit(2);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(out_path);
    out << text;
}

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { spz_string_free(ptr); }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

struct GraphHandle {
    spz_graph* g = nullptr;
    ~GraphHandle() { spz_graph_free(g); }
};

struct ActivitiesHandle {
    spz_activities* a = nullptr;
    ~ActivitiesHandle() { spz_activities_free(a); }
};

void load_graph(const std::string& path_or_kind, bool is_kind, GraphHandle& out) {
    if (is_kind) {
        check(spz_graph_generate(path_or_kind.c_str(), &out.g));
    } else {
        check(spz_graph_parse(read_input(path_or_kind).c_str(), &out.g));
    }
}

void load_activities(const GraphHandle& g, const std::string& keys_arg, ActivitiesHandle& out) {
    // family specs are recognized by their prefix; anything else is a file
    static const char* kFamilies[] = {"matching", "interval", "ruelle", "sym2k", "reciprocal",
                                      "explicit"};
    std::string head = keys_arg.substr(0, keys_arg.find(':'));
    for (const char* f : kFamilies) {
        if (head == f) {
            check(spz_activities_from_family(g.g, keys_arg.c_str(), &out.a));
            return;
        }
    }
    check(spz_activities_parse(g.g, read_input(keys_arg).c_str(), &out.a));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spanpoly: spanning-subgraph polynomials, zero-free regions, and "
                 "partition-function observables"};
    app.require_subcommand(1);

    std::string graph_arg, keys_arg = "matching", out_path, kind_spec, poly_arg = "-";
    std::string region_spec = "auto", weight_class = "nonneg", seq_arg, mu_arg = "0";
    std::string family_arg, sizes_arg, sweep_arg;
    bool univariate = false, want_omega = false, csv = false;
    double alpha = -1.0, kappa = -1.0, beta = 1.0, bigJ = 0.0;
    std::uint64_t seed = 12345;
    unsigned threads = 0, degree = 2, samples = 10000, trials = 500;
    unsigned max_vertices = 8, max_edges = 10;
    int width = -1;

    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("-o,--output", out_path, "Output path ('-' = stdout)");
    };

    auto* cmd_generate = app.add_subcommand("generate", "Emit a generated graph as JSON");
    cmd_generate->add_option("--kind", kind_spec,
                             "path:n | cycle:n | complete:n | torus:n,r | petersen | "
                             "random_regular:n,d,seed")
        ->required();
    add_output(cmd_generate);

    auto* cmd_poly = app.add_subcommand("poly", "Build omega / Z / univariate Z polynomials");
    cmd_poly->add_option("--graph", graph_arg, "Graph JSON path ('-' = stdin)")->required();
    cmd_poly->add_option("--keys", keys_arg, "Key family spec or activities JSON path");
    cmd_poly->add_flag("--univariate", univariate, "Emit Z(y^{1/2} 1) coefficients");
    cmd_poly->add_flag("--omega", want_omega, "Emit the unweighted subgraph polynomial");
    add_output(cmd_poly);

    auto* cmd_roots = app.add_subcommand("roots", "Roots of a univariate polynomial");
    cmd_roots->add_option("--poly", poly_arg, "Polynomial JSON path ('-' = stdin)");
    cmd_roots->add_flag("--csv", csv, "CSV output (re,im,mult,modulus,arg)");
    add_output(cmd_roots);

    auto* cmd_keys = app.add_subcommand("keys", "Analyze one key polynomial");
    cmd_keys->add_option("--family", keys_arg, "Key family spec")->required();
    cmd_keys->add_option("--degree", degree, "Vertex degree d")->required();
    add_output(cmd_keys);

    auto* cmd_certify =
        app.add_subcommand("certify", "Conclude zero-free regions and certify Z(y) roots");
    cmd_certify->add_option("--graph", graph_arg, "Graph JSON path ('-' = stdin)")->required();
    cmd_certify->add_option("--keys", keys_arg, "Key family spec or activities JSON path");
    cmd_certify->add_option("--weight-class", weight_class,
                            "Comma list of nonneg | bounded[:x] | atleast[:x]");
    cmd_certify->add_option("--alpha", alpha, "Explicit sector parameter (default: auto)");
    cmd_certify->add_option("--kappa", kappa, "Explicit radius parameter (default: auto)");
    add_output(cmd_certify);

    auto* cmd_falsify =
        app.add_subcommand("falsify", "Random sampling probe of the multivariate claim");
    cmd_falsify->add_option("--graph", graph_arg, "Graph JSON path ('-' = stdin)")->required();
    cmd_falsify->add_option("--keys", keys_arg, "Key family spec or activities JSON path");
    cmd_falsify->add_option("--region", region_spec, "sector:t | disk:k | exterior:k | auto");
    cmd_falsify->add_option("--weight-class", weight_class, "Class used when region is auto");
    cmd_falsify->add_option("-n,--samples", samples, "Sample count");
    cmd_falsify->add_option("--seed", seed, "Master seed");
    cmd_falsify->add_option("--threads", threads, "Worker count (0 = hardware)");
    add_output(cmd_falsify);

    auto* cmd_logcc = app.add_subcommand("logcc", "Log-concavity check of a sequence");
    cmd_logcc->add_option("--seq", seq_arg, "Comma list, e.g. 1,6,3 or 1,3/4,3/4,1");
    cmd_logcc->add_option("--poly", poly_arg, "Or a polynomial JSON path ('-' = stdin)");
    add_output(cmd_logcc);

    auto* cmd_scan = app.add_subcommand("scan", "Random search for log-concavity violations");
    cmd_scan->add_option("--trials", trials, "Trial count");
    cmd_scan->add_option("--seed", seed, "Master seed");
    cmd_scan->add_option("--max-vertices", max_vertices, "Vertex cap per sampled graph");
    cmd_scan->add_option("--max-edges", max_edges, "Edge cap per sampled graph");
    cmd_scan->add_option("--width", width, "Interval width cap (omit for unrestricted)");
    cmd_scan->add_option("--threads", threads, "Worker count (0 = hardware)");
    add_output(cmd_scan);

    auto* cmd_statmech = app.add_subcommand("statmech", "Partition function and observables");
    cmd_statmech->add_option("--graph", graph_arg, "d-regular graph JSON path ('-' = stdin)");
    cmd_statmech->add_option("--beta", beta, "Inverse temperature (k_B = 1)");
    cmd_statmech->add_option("--J", bigJ, "Edge energy");
    cmd_statmech->add_option("--mu", mu_arg, "Comma list of mu_0..mu_d ('inf' allowed)")
        ->required();
    cmd_statmech->add_option("--family", family_arg, "cycle | torus:r (free-energy sequence)");
    cmd_statmech->add_option("--sizes", sizes_arg, "Comma list of family sizes");
    cmd_statmech->add_option("--sweep", sweep_arg, "param=from:to:steps (param J or beta)");
    cmd_statmech->add_option("--threads", threads, "Worker count for sweeps (0 = hardware)");
    cmd_statmech->add_flag("--csv", csv, "Also render observable rows as CSV");
    add_output(cmd_statmech);

    CLI11_PARSE(app, argc, argv);

    if (threads == 0) {
        // SPANPOLY_THREADS only sets the default worker count; results are
        // worker-count invariant either way
        if (const char* env = std::getenv("SPANPOLY_THREADS")) {
            char* end = nullptr;
            unsigned long v = std::strtoul(env, &end, 10);
            if (end && *end == '\0') threads = static_cast<unsigned>(v);
        }
    }

    auto split_list = [](const std::string& text) {
        std::vector<std::string> out;
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) out.push_back(tok);
        return out;
    };

    if (cmd_generate->parsed()) {
        GraphHandle g;
        load_graph(kind_spec, true, g);
        OwnedString json;
        check(spz_graph_to_json(g.g, &json.ptr));
        emit(json.str(), out_path);
        return 0;
    }

    if (cmd_poly->parsed()) {
        GraphHandle g;
        load_graph(graph_arg, false, g);
        OwnedString json;
        if (want_omega) {
            check(spz_poly_omega(g.g, &json.ptr));
        } else {
            ActivitiesHandle a;
            load_activities(g, keys_arg, a);
            if (univariate)
                check(spz_poly_z_univariate(g.g, a.a, &json.ptr));
            else
                check(spz_poly_z(g.g, a.a, &json.ptr));
        }
        emit(json.str(), out_path);
        return 0;
    }

    if (cmd_roots->parsed()) {
        OwnedString out;
        check(spz_unipoly_roots(read_input(poly_arg).c_str(), csv ? 1 : 0, &out.ptr));
        emit(out.str(), out_path);
        return 0;
    }

    if (cmd_keys->parsed()) {
        OwnedString out;
        check(spz_key_analysis(keys_arg.c_str(), degree, &out.ptr));
        emit(out.str(), out_path);
        return 0;
    }

    if (cmd_certify->parsed()) {
        GraphHandle g;
        load_graph(graph_arg, false, g);
        ActivitiesHandle a;
        load_activities(g, keys_arg, a);
        Json opts;
        opts["weight_classes"] = split_list(weight_class);
        if (alpha >= 0.0) opts["alpha"] = alpha;
        if (kappa >= 0.0) opts["kappa"] = kappa;
        OwnedString report;
        int verdict = 0;
        check(spz_certify(g.g, a.a, opts.dump().c_str(), &report.ptr, &verdict));
        emit(report.str(), out_path);
        return verdict == 0 ? 0 : 1;
    }

    if (cmd_falsify->parsed()) {
        GraphHandle g;
        load_graph(graph_arg, false, g);
        ActivitiesHandle a;
        load_activities(g, keys_arg, a);
        Json opts{{"region", region_spec},
                  {"weight_class", weight_class},
                  {"samples", samples},
                  {"seed", seed},
                  {"threads", threads}};
        OwnedString report;
        int verdict = 0;
        check(spz_falsify(g.g, a.a, opts.dump().c_str(), &report.ptr, &verdict));
        emit(report.str(), out_path);
        return verdict == 0 ? 0 : 1;
    }

    if (cmd_logcc->parsed()) {
        Json seq = Json::array();
        if (!seq_arg.empty()) {
            for (const auto& tok : split_list(seq_arg)) seq.push_back(tok);
        } else {
            Json poly = Json::parse(read_input(poly_arg), nullptr, false);
            if (poly.is_discarded() || !poly.contains("coeffs")) {
                Json err{{"error",
                          {{"kind", "parse"}, {"detail", "logcc: need --seq or a {\"coeffs\":[...]} input"}}}};
                std::cout << err.dump() << "\n";
                return 2;
            }
            seq = poly.at("coeffs");
        }
        OwnedString report;
        int verdict = 0;
        check(spz_logcc(seq.dump().c_str(), &report.ptr, &verdict));
        emit(report.str(), out_path);
        return verdict == 0 ? 0 : 1;
    }

    if (cmd_scan->parsed()) {
        Json opts{{"trials", trials},
                  {"seed", seed},
                  {"max_vertices", max_vertices},
                  {"max_edges", max_edges},
                  {"threads", threads}};
        if (width >= 0) opts["width"] = width;
        OwnedString report;
        int verdict = 0;
        check(spz_scan(opts.dump().c_str(), &report.ptr, &verdict));
        emit(report.str(), out_path);
        return verdict == 0 ? 0 : 1;
    }

    if (cmd_statmech->parsed()) {
        Json mu = Json::array();
        for (const auto& tok : split_list(mu_arg)) {
            if (tok == "inf" || tok == "+inf" || tok == "infinity")
                mu.push_back("inf");
            else
                mu.push_back(std::stod(tok));
        }
        Json opts{{"beta", beta}, {"J", bigJ}, {"mu", mu}, {"csv", csv}, {"threads", threads}};
        if (!family_arg.empty()) {
            opts["family"] = family_arg;
            Json sizes = Json::array();
            for (const auto& tok : split_list(sizes_arg)) sizes.push_back(std::stoul(tok));
            opts["sizes"] = sizes;
        }
        if (!sweep_arg.empty()) {
            auto eq = sweep_arg.find('=');
            auto c1 = sweep_arg.find(':', eq);
            auto c2 = sweep_arg.find(':', c1 + 1);
            if (eq == std::string::npos || c1 == std::string::npos || c2 == std::string::npos) {
                Json err{{"error",
                          {{"kind", "parse"}, {"detail", "sweep: expected param=from:to:steps"}}}};
                std::cout << err.dump() << "\n";
                return 2;
            }
            opts["sweep"] = Json{{"param", sweep_arg.substr(0, eq)},
                                 {"from", std::stod(sweep_arg.substr(eq + 1, c1 - eq - 1))},
                                 {"to", std::stod(sweep_arg.substr(c1 + 1, c2 - c1 - 1))},
                                 {"steps", std::stoul(sweep_arg.substr(c2 + 1))}};
        }
        GraphHandle g;
        bool have_graph = !graph_arg.empty();
        if (have_graph) load_graph(graph_arg, false, g);
        OwnedString report;
        check(spz_statmech(have_graph ? g.g : nullptr, opts.dump().c_str(), &report.ptr));
        if (csv) {
            Json rep = Json::parse(report.str());
            emit(rep.value("csv", std::string()), out_path);
        } else {
            emit(report.str(), out_path);
        }
        return 0;
    }

    return 2;
}
