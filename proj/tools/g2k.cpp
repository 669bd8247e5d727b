#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

#ifndef G2K_DATA_DIR
#define G2K_DATA_DIR "data"
#endif

int main(int argc, char** argv) {
    using namespace g2k::cli;
    CLI::App app{"Counting and verification reports for associatives in generalized Kummer constructions"};
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.data_dir = G2K_DATA_DIR;
    std::string data_dir = cfg.data_dir.string(), out;
    std::vector<std::string> tolerances;

    for (const auto& name : command_names()) {
        static const std::map<std::string, std::string> about{
            {"enumerate-bieberbach", "flat 3-manifold classes, torsion checks and base orbifolds"},
            {"singular-set", "singular components of T^7/G with strata and symmetry action"},
            {"fixed-locus", "rho-fixed locus in the ALE deformation space"},
            {"verify-gh", "Gibbons-Hawking harmonicity, decay and closedness checks"},
            {"count-associatives", "guaranteed associative counts with per-certificate checklists"},
            {"fueter-demo", "finite-dimensional model of d_t + A and the contraction scheme"},
            {"list-examples", "catalog of shipped fixtures"}};
        CLI::App* sub = app.add_subcommand(name, about.count(name) ? about.at(name) : "");
        sub->add_option("--data-dir", data_dir, "Directory holding fixtures/");
        sub->add_option("--out", out, "Write <command>.json (and .csv) here instead of stdout");
        sub->add_flag("--csv", cfg.csv, "Also write numeric tables as CSV");
        sub->add_option("--seed", cfg.seed, "Random seed");
        sub->add_option("--tolerance", tolerances, "Override a tolerance, key=value")->take_all();
        if (name != "list-examples") sub->add_option("--fixture", cfg.fixtures, "Fixture path or tag (ex42, ...)")->take_all();
        if (name == "count-associatives") {
            sub->add_option("--orbifold", cfg.orbifold, "Orbifold JSON")->check(CLI::ExistingFile);
            sub->add_option("--resolution", cfg.resolution, "Resolution JSON")->check(CLI::ExistingFile);
        }
        if (name == "enumerate-bieberbach") sub->add_option("--height", cfg.height, "Max coordinate of searched axes");
        if (name == "fixed-locus") {
            sub->add_option("--ade", cfg.ade, "Root system, e.g. A2 or D4");
            sub->add_option("--rotations", cfg.rotations, "Rotations, e.g. R+,R-")->delimiter(',');
        }
        if (name == "fueter-demo") sub->add_option("--trials", cfg.trials, "Random sections per L");
        sub->callback([&cfg, name] { cfg.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    cfg.data_dir = data_dir;
    cfg.out_dir = out;
    try {
        for (const auto& t : tolerances) cfg.tolerances.set(t);
    } catch (const InputError& e) {
        std::cerr << "g2k: error: " << e.what() << "\n";
        return 2;
    }
    return run_and_emit(cfg);
}
