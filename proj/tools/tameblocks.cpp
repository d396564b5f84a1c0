// Command line driver: parses a group-spec document and runs the level-0
// decomposition pipelines (decompose, coherence, fibers, classical, dual).
// Exit codes: 0 checks pass, 1 a check failed, 2 invalid input, 3 a size
// bound was exceeded.

#include "tameblocks/errors.hpp"
#include "tameblocks/reports.hpp"
#include "tameblocks/version.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct CommonOptions {
    std::string spec_path;
    long long order_bound = 0;
    std::string lambda;
    long long ell = 0;
    std::string out;
    std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_bound) {
    cmd->add_option("spec", opt.spec_path, "group-spec JSON file")->required();
    if (with_bound)
        cmd->add_option("--order-bound", opt.order_bound, "order bound N (divisor semantics)")
            ->required();
    cmd->add_option("--lambda", opt.lambda, "coefficient ring: qlbar or zlbar");
    cmd->add_option("--ell", opt.ell, "banal prime ell");
    cmd->add_option("--out", opt.out, "output file (default: stdout)");
}

tameblocks::GroupSpec load(const CommonOptions& opt) {
    tameblocks::GroupSpec spec = tameblocks::load_group_spec(opt.spec_path);
    if (!opt.lambda.empty()) {
        if (opt.lambda == "qlbar")
            spec.frob.lambda = tameblocks::Lambda::Qlbar;
        else if (opt.lambda == "zlbar")
            spec.frob.lambda = tameblocks::Lambda::Zlbar;
        else
            throw tameblocks::validation_error("--lambda must be qlbar or zlbar");
    }
    if (opt.ell != 0)
        spec.frob.ell = opt.ell;
    tameblocks::validate_frobenius(spec.frob);
    return spec;
}

int emit(const tameblocks::RunResult& result, const CommonOptions& opt) {
    if (opt.out.empty()) {
        std::cout << result.output;
    } else {
        std::ofstream out(opt.out, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write '" << opt.out << "'\n";
            return 2;
        }
        out << result.output;
    }
    return result.exit_code;
}

std::vector<int> parse_levi(const std::string& text) {
    std::vector<int> positions;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            positions.push_back(std::stoi(item));
    return positions;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"level-0 block combinatorics of p-adic groups"};
    app.set_version_flag("--version", tameblocks::library_version);
    app.require_subcommand(1);

    CommonOptions opt;
    std::string levi_arg;

    auto* decompose = app.add_subcommand(
        "decompose", "inertial parameters, class systems, partition check");
    add_common(decompose, opt, true);
    decompose->add_option("--format", opt.format, "json or csv");

    auto* coherence =
        app.add_subcommand("coherence", "0-coherence and composition law for every fiber system");
    add_common(coherence, opt, true);

    auto* fibers = app.add_subcommand("fibers", "Levi restriction fibers and discreteness");
    add_common(fibers, opt, true);
    fibers->add_option("--levi", levi_arg,
                       "comma separated simple positions of the Levi (empty: torus)");

    auto* classical =
        app.add_subcommand("classical", "characteristic-polynomial compatibility grid");
    add_common(classical, opt, true);

    auto* dual = app.add_subcommand("dual", "emit the dual group-spec");
    add_common(dual, opt, false);

    CLI11_PARSE(app, argc, argv);

    try {
        tameblocks::GroupSpec spec = load(opt);
        tameblocks::RunResult result;
        if (decompose->parsed()) {
            if (opt.format != "json" && opt.format != "csv")
                throw tameblocks::validation_error("--format must be json or csv");
            result = tameblocks::run_decompose(spec, opt.order_bound,
                                               opt.format == "csv"
                                                   ? tameblocks::ReportFormat::Csv
                                                   : tameblocks::ReportFormat::Json);
        } else if (coherence->parsed()) {
            result = tameblocks::run_coherence(spec, opt.order_bound);
        } else if (fibers->parsed()) {
            result = tameblocks::run_fibers(spec, parse_levi(levi_arg), opt.order_bound);
        } else if (classical->parsed()) {
            result = tameblocks::run_classical(spec, opt.order_bound);
        } else if (dual->parsed()) {
            result = tameblocks::run_dual(spec);
        }
        return emit(result, opt);
    } catch (const tameblocks::bound_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const tameblocks::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
