// partlayers: dataset driver for the simplex-layer stratification of
// partition graphs.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "partlayers/atlas.hpp"

namespace {

constexpr int kVerifyFailed = 1;
constexpr int kIoFailed = 2;
constexpr int kBadConfig = 3;

struct Flags {
    std::optional<int> n_min;
    std::optional<int> n_max;
    std::optional<int> r_max;
    std::optional<int> oracle_n_max;
    std::vector<std::string> regions;
    std::vector<int> fixed_r;
    std::optional<std::string> out;
    std::optional<std::string> format;
    std::optional<unsigned> jobs;
    std::optional<std::string> config;
};

partlayers::AtlasConfig resolve(const Flags& f)
{
    partlayers::AtlasConfig c;
    if (const char* env = std::getenv("PARTLAYERS_OUT_DIR"); env && *env)
        c.output_dir = env;
    if (f.config)
        c = partlayers::load_config_file(*f.config, c);
    if (f.n_min)
        c.n_min = *f.n_min;
    if (f.n_max)
        c.n_max = *f.n_max;
    if (f.r_max)
        c.r_max = *f.r_max;
    if (f.oracle_n_max)
        c.oracle_n_max = *f.oracle_n_max;
    if (!f.regions.empty())
        c.regions = f.regions;
    if (!f.fixed_r.empty())
        c.fixed_r = f.fixed_r;
    if (f.out)
        c.output_dir = *f.out;
    if (f.format)
        c.format = partlayers::parse_format(*f.format);
    if (f.jobs)
        c.parallelism = *f.jobs;
    c.validate();
    return c;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact simplex-layer stratification of partition graphs"};
    app.require_subcommand(1);
    app.fallthrough();

    Flags flags;
    app.add_option("--n-min", flags.n_min, "Smallest n in the window (default 1)");
    app.add_option("--n-max", flags.n_max, "Largest n in the window (default 20)");
    app.add_option("--r-max", flags.r_max, "Largest layer value for first-occurrence scans (default 7)");
    app.add_option("--oracle-n-max", flags.oracle_n_max, "Largest n checked by the clique oracle (default n-max)");
    app.add_option("--region", flags.regions, "Region name or region file (repeatable)");
    app.add_option("--out", flags.out, "Output directory (default $PARTLAYERS_OUT_DIR or .)");
    app.add_option("--format", flags.format, "csv, json or both")->check(CLI::IsMember({"csv", "json", "both"}));
    app.add_option("--jobs", flags.jobs, "Worker count, 0 = auto");
    app.add_option("--config", flags.config, "JSON config file; flags override it")->check(CLI::ExistingFile);

    auto* profile = app.add_subcommand("profile", "Layer profile array and per-n summary");
    auto* layers = app.add_subcommand("layers", "Per-partition capacities and layer values");
    auto* boundaries = app.add_subcommand("boundaries", "Adjacent-layer boundary counts, cross edges, jumps");
    auto* first = app.add_subcommand("first-occurrence", "First occurrence of each layer value");
    auto* verify = app.add_subcommand("verify-oracle", "Check max(s,t) against brute-force clique search");
    auto* sequences = app.add_subcommand("sequences", "Emit index,value sequence files");
    sequences->add_option("--fixed-r", flags.fixed_r, "Layer values for a_r and b_r (default 0..r-max)");
    auto* restricted = app.add_subcommand("restricted", "Layer and boundary counts inside regions");
    auto* graph = app.add_subcommand("graph-export", "Vertex and edge lists of G_n");

    CLI11_PARSE(app, argc, argv);

    partlayers::AtlasConfig config;
    try {
        config = resolve(flags);
    } catch (const std::exception& e) {
        std::cerr << "partlayers: " << e.what() << '\n';
        return kBadConfig;
    }

    try {
        if (profile->parsed())
            partlayers::cmd_profile(config);
        else if (layers->parsed())
            partlayers::cmd_layers(config);
        else if (boundaries->parsed())
            partlayers::cmd_boundaries(config);
        else if (first->parsed())
            partlayers::cmd_first_occurrence(config);
        else if (sequences->parsed())
            partlayers::cmd_sequences(config);
        else if (restricted->parsed())
            partlayers::cmd_restricted(config);
        else if (graph->parsed())
            partlayers::cmd_graph_export(config);
        else if (verify->parsed())
            return partlayers::cmd_verify(config, std::cout).passed() ? 0 : kVerifyFailed;
    } catch (const partlayers::AtlasIoError& e) {
        std::cerr << "partlayers: " << e.what() << '\n';
        return kIoFailed;
    } catch (const std::exception& e) {
        std::cerr << "partlayers: " << e.what() << '\n';
        return kBadConfig;
    }
    return 0;
}
