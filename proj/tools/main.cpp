// Command-line front end: catalogs of Bernstein components and extended
// quotients, parameter evaluation, the tempered retraction, and the seeded
// property-check suites. All reports are canonical JSON, newline-terminated.
// Exit codes: 0 success, 1 validation error, 2 property-check failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "smoothdual/checks.hpp"
#include "smoothdual/errors.hpp"
#include "smoothdual/json_io.hpp"
#include "smoothdual/reports.hpp"
#include "smoothdual/tempered.hpp"

namespace {

using smoothdual::json;

void emit(const json& report, const std::string& json_out) {
    const std::string text = smoothdual::render_report(report);
    if (json_out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(json_out, std::ios::binary);
    if (!out) throw smoothdual::ValidationError("cannot write file: " + json_out);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact models of the smooth dual of GL(n) over a p-adic field"};
    app.require_subcommand(1);

    std::string inventory_path;
    std::string param_path;
    std::string json_out;
    std::string t_text = "1";
    int n = 1;
    int q = 0;
    std::uint64_t seed = 1;
    std::int64_t samples = 10000;

    CLI::App* catalog = app.add_subcommand(
        "catalog", "list inertial classes, extended-quotient components and HP dimensions");
    catalog->add_option("--inventory", inventory_path, "inventory JSON file")->required();
    catalog->add_option("--n", n, "total GL(n) size")->required();
    catalog->add_option("--json-out", json_out, "write the report to a file instead of stdout");

    CLI::App* param = app.add_subcommand("param", "evaluate or transform a parameter file");
    param->require_subcommand(1);
    CLI::App* eval = param->add_subcommand(
        "eval", "alpha, beta of alpha, infinitesimal character, Langlands order, stratum");
    CLI::App* do_retract = param->add_subcommand("retract", "project onto the tempered locus");
    CLI::App* do_homotopy =
        param->add_subcommand("homotopy", "evaluate the retraction path at time --t");
    for (CLI::App* sub : {eval, do_retract, do_homotopy}) {
        sub->add_option("file", param_path, "parameter JSON file")->required();
        sub->add_option("--inventory", inventory_path, "inventory JSON file")->required();
        sub->add_option("--json-out", json_out, "write the report to a file instead of stdout");
    }
    eval->add_option("--q", q, "residue cardinality; renders twists numerically")
        ->check(CLI::Range(2, 1 << 30));
    do_homotopy->add_option("--t", t_text, "exact rational time in [0,1], e.g. 1/2")->required();

    CLI::App* check = app.add_subcommand("check", "run a seeded property suite");
    check->require_subcommand(1);
    CLI::App* diagram = check->add_subcommand(
        "diagram", "beta(alpha(p)) equals the infinitesimal character of p");
    CLI::App* injectivity =
        check->add_subcommand("injectivity", "beta separates points on every component");
    CLI::App* retraction =
        check->add_subcommand("retraction", "retraction and homotopy properties");
    for (CLI::App* sub : {diagram, injectivity, retraction}) {
        sub->add_option("--seed", seed, "RNG seed");
        sub->add_option("--samples", samples, "instances to draw")->check(CLI::PositiveNumber);
        sub->add_option("--json-out", json_out, "write the report to a file instead of stdout");
    }
    injectivity->add_option("--inventory", inventory_path,
                            "inventory to build classes from (default: built-in two labels)");

    try {
        app.parse(argc, argv);

        if (*catalog) {
            const smoothdual::Inventory inv = smoothdual::load_inventory(inventory_path);
            if (n < 1) throw smoothdual::ValidationError("--n must be >= 1");
            emit(smoothdual::catalog_report(inv, n), json_out);
            return 0;
        }

        if (*param) {
            const smoothdual::Inventory inv = smoothdual::load_inventory(inventory_path);
            const smoothdual::WDParam p =
                smoothdual::validated(smoothdual::load_param(param_path), inv);
            if (*eval) {
                std::optional<int> q_opt;
                if (q >= 2) q_opt = q;
                emit(smoothdual::param_eval_report(p, inv, q_opt), json_out);
            } else if (*do_retract) {
                emit(smoothdual::to_json(smoothdual::retract(p)), json_out);
            } else {
                smoothdual::Rational t;
                try {
                    t = smoothdual::Rational::parse(t_text);
                } catch (const std::invalid_argument& e) {
                    throw smoothdual::ValidationError(std::string("--t: ") + e.what());
                }
                emit(smoothdual::to_json(smoothdual::homotopy(p, t)), json_out);
            }
            return 0;
        }

        smoothdual::CheckReport report;
        if (*diagram) {
            report = smoothdual::run_diagram_check(seed, samples);
        } else if (*injectivity) {
            const smoothdual::Inventory inv = inventory_path.empty()
                                                  ? smoothdual::default_injectivity_inventory()
                                                  : smoothdual::load_inventory(inventory_path);
            report = smoothdual::run_injectivity_check(inv, 4, seed, samples);
        } else {
            report = smoothdual::run_retraction_check(seed, samples);
        }
        emit(report.to_json(), json_out);
        return report.passed() ? 0 : 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help, --version
        app.exit(e);
        return 1;
    } catch (const smoothdual::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
