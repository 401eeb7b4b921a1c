#include <iostream>

#include "CLI11.hpp"

#include "holonomy/cli.hpp"

int main(int argc, char** argv) {
    using holonomy::cli::RunConfig;
    CLI::App app{"Holonomy groups, cubical curvature and Hom complexes"};
    app.require_subcommand(1);
    RunConfig config;

    for (const auto& name : holonomy::cli::commands()) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("inputs", config.inputs, "complex files or gen:<family>:<k>=<v>,...")->required();
        sub->add_option("--base", config.base, "base facet as a comma list");
        sub->add_option("--path", config.path, "facet path, facets separated by ';'");
        sub->add_option("--involution", config.involution, "vertex map file for phi-check");
        sub->add_option("--sigma", config.sigma, "invariant simplex as a comma list");
        sub->add_option("--k", config.k, "connectivity degree for hom");
        sub->add_flag("--homology", config.homology, "compute reduced homology");
        sub->add_flag("--cells", config.cells, "list all cells");
        sub->add_option("--seed", config.seed, "seed for random generator families");
        sub->add_option("--out", config.out, "write the JSON report to this file");
        sub->callback([&config, name] { config.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : holonomy::cli::kExitValidation;
    }
    return holonomy::cli::run(config, std::cout, std::cerr);
}
