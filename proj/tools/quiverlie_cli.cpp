// Verification CLI: runs the identity suites over graded pieces and emits
// dimension, stratum, component and operator-matrix tables.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "quiverlie/quiverlie.hpp"
#include "quiverlie/tables.hpp"

using namespace quiverlie;

namespace {

struct GlobalOpts {
    int n = 2;
    std::string params_file;
    long long max_degree = 4;
    std::string format = "json";
    int workers = 1;
    uint64_t seed = 20240;
};

ModuleParams load_params(const GlobalOpts& g) {
    if (g.params_file.empty()) {
        // default geometry: rational curve with normal bundle degree 1
        Geometry geom{0, 1, std::vector<long long>(static_cast<size_t>(g.n), 0)};
        return ModuleParams::from_geometry(g.n, geom);
    }
    std::ifstream in(g.params_file);
    if (!in) throw CLI::ValidationError("--params", "cannot open " + g.params_file);
    Json j = Json::parse(in);
    return params_from_json(g.n, j);
}

DimensionVector parse_alpha(int n, const std::vector<long long>& raw) {
    if (raw.size() != static_cast<size_t>(n))
        throw CLI::ValidationError("--alpha", "need exactly n entries");
    DimensionVector d(n);
    for (int r = 0; r < n; ++r) d.at(r) = raw[static_cast<size_t>(r)];
    if (!d.nonnegative()) throw CLI::ValidationError("--alpha", "entries must be nonnegative");
    return d;
}

void print_table(const Json& j, const std::string& format) {
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else if (format == "csv")
        std::cout << table_csv(j);
    else
        std::cout << j.dump(2) << "\n";
}

int print_report(const Report& rep, const std::string& format) {
    if (format == "json")
        std::cout << report_json(rep).dump(2) << "\n";
    else if (format == "csv")
        std::cout << report_csv(rep);
    else
        std::cout << report_text(rep);
    return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of the Kostant-partition module of the cyclic quiver"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may appear after the subcommand

    GlobalOpts g;
    app.add_option("--n", g.n, "quiver rank (>= 2)")->capture_default_str();
    app.add_option("--params", g.params_file,
                   "JSON params file: {\"c\":[rationals]} or {\"genus\",\"d\",\"degL\"}");
    app.add_option("--max-degree", g.max_degree, "bound on |alpha| for graded pieces")
        ->capture_default_str();
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--workers", g.workers, "worker threads")->capture_default_str();
    app.add_option("--seed", g.seed, "seed for randomized recovery trials")
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::vector<std::string> suite_names;
    long long pmax = 2, trials = 200;
    verify->add_option("--suites", suite_names, "subset of suites to run")
        ->delimiter(',')
        ->check(CLI::IsMember(known_suites()));
    verify->add_option("--pmax", pmax, "Heisenberg index bound")->capture_default_str();
    verify->add_option("--trials", trials, "recovery trial count")->capture_default_str();

    auto* dims = app.add_subcommand("dims", "weight-space dimension table");

    auto* matrix = app.add_subcommand("matrix", "matrix of an operator on one graded piece");
    std::string op_kind = "e";
    long long op_index = 0;
    std::vector<long long> alpha_raw;
    matrix->add_option("--op", op_kind, "operator: e, f, h, or a (Heisenberg)")
        ->check(CLI::IsMember({"e", "f", "h", "a"}))
        ->capture_default_str();
    matrix->add_option("--i", op_index, "vertex index (for a: the Heisenberg index p)")
        ->capture_default_str();
    matrix->add_option("--alpha", alpha_raw, "weight of the source piece")
        ->delimiter(',')
        ->required();

    auto* strata = app.add_subcommand("strata", "stratum dimensions for one weight");
    std::vector<long long> strata_alpha;
    strata->add_option("--alpha", strata_alpha, "weight")->delimiter(',')->required();

    auto* components = app.add_subcommand("components", "correspondence component catalog");
    std::vector<long long> comp_alpha;
    long long comp_i = 0;
    components->add_option("--alpha", comp_alpha, "weight of the source")
        ->delimiter(',')
        ->required();
    components->add_option("--i", comp_i, "vertex index")->capture_default_str();

    auto* heis = app.add_subcommand("heis", "Heisenberg relation suite");
    long long heis_pmax = 2;
    heis->add_option("--pmax", heis_pmax, "index bound")->capture_default_str();

    try {
        app.parse(argc, argv);

        ModuleParams params = load_params(g);
        auto started = std::chrono::steady_clock::now();
        int code = 0;

        if (*verify) {
            RunConfig cfg{g.n,   params,   g.max_degree, pmax, g.seed,
                          trials, suite_names.empty() ? RunConfig{}.suites : suite_names,
                          g.workers};
            code = print_report(run_suites(cfg), g.format);
        } else if (*dims) {
            print_table(emit_dims(params, g.max_degree), g.format);
        } else if (*matrix) {
            DimensionVector alpha = parse_alpha(g.n, alpha_raw);
            LinOp op = op_kind == "a"
                           ? heis_a(op_index, params)
                           : chevalley(op_kind == "e"   ? Chevalley::E
                                       : op_kind == "f" ? Chevalley::F
                                                        : Chevalley::H,
                                       Residue(g.n, op_index), params);
            if (op_kind == "a" && op_index == 0)
                throw CLI::ValidationError("--i", "Heisenberg index must be nonzero");
            print_table(emit_matrix(op, op_kind + "_" + std::to_string(op_index), alpha),
                        g.format);
        } else if (*strata) {
            print_table(emit_strata(g.n, parse_alpha(g.n, strata_alpha)), g.format);
        } else if (*components) {
            print_table(
                emit_components(params, parse_alpha(g.n, comp_alpha), Residue(g.n, comp_i)),
                g.format);
        } else if (*heis) {
            RunConfig cfg;
            cfg.n = g.n;
            cfg.params = params;
            cfg.max_degree = g.max_degree;
            cfg.pmax = heis_pmax;
            cfg.seed = g.seed;
            cfg.suites = {"heisenberg"};
            cfg.workers = g.workers;
            code = print_report(run_suites(cfg), g.format);
        }

        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - started);
        std::cerr << "wall time: " << elapsed.count() << " ms\n";
        return code;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // usage problems exit 2, --help exits 0
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
