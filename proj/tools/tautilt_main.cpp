// Command-line front end: wall-and-chamber structure, tau-tilting fan,
// exchange graph and green sequences of a finite-dimensional quiver algebra.

#include <iostream>

#include "CLI11.hpp"
#include "tautilt/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "tautilt: exact wall-and-chamber structure of a quiver algebra kQ/I"};
    app.require_subcommand(1);

    tautilt::CommandRequest req;

    auto add_common = [&](CLI::App* cmd, bool with_format) {
        cmd->add_option("spec", req.spec_path, "algebra spec document (JSON)")
            ->required();
        cmd->add_option("--field", req.field, "field kind: rational or fp");
        cmd->add_option("--prime", req.prime, "prime p for F_p (default: from the spec document)");
        cmd->add_option("--dim-bound", req.dim_bound,
                        "per-vertex dimension bound for module enumeration");
        cmd->add_option("--sub-dim-budget", req.sub_dim_budget,
                        "total-dimension budget for submodule enumeration");
        cmd->add_option("--out", req.out_path, "output path (default: stdout)");
        if (with_format)
            cmd->add_option("--format", req.format, "output format: doc, dot or svg");
    };

    add_common(app.add_subcommand("catalog",
                                  "indecomposable modules and the tau-rigid sublist"),
               false);
    add_common(app.add_subcommand("pairs", "all tau-tilting pairs with their g-vectors"),
               false);
    add_common(app.add_subcommand("fan", "the g-vector fan, its facets and walls"), true);
    add_common(app.add_subcommand("graph", "the exchange graph with brick labels"), true);
    add_common(app.add_subcommand("mgs",
                                  "maximal green sequences and their wall-crossing paths"),
               false);
    auto* markoff = app.add_subcommand(
        "markoff", "doubled-3-cycle obstruction report (no-green-sequence verdict)");
    add_common(markoff, false);
    markoff->add_option("--family-n", req.family_n_max,
                        "verify the closed-form walls up to this family index");
    markoff->add_option("--separation-walls", req.separation_walls,
                        "number of separating walls to certify");

    CLI11_PARSE(app, argc, argv);
    req.subcommand = app.get_subcommands().front()->get_name();
    return tautilt::run_command(req, std::cout, std::cerr);
}
