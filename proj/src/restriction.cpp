#include "partlayers/restriction.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

#include "partlayers/boundary.hpp"

namespace partlayers {

namespace {

// Membership per vertex id, with the declared-invariance check applied.
std::vector<bool> membership(const LayerAssignment& layers, const RegionPredicate& region)
{
    std::vector<bool> in(layers.vertex_count());
    for (VertexId v = 0; v < in.size(); ++v) {
        const Partition& lambda = layers.vertex(v);
        in[v] = region.test(lambda);
        if (region.conj_invariant_declared && in[v] != region.test(conjugate(lambda)))
            throw std::runtime_error("region '" + region.name + "' is declared conjugation-invariant but separates " +
                                     lambda.to_string() + " from its conjugate");
    }
    return in;
}

} // namespace

std::vector<RegionPredicate> builtin_regions()
{
    return {{"self-conjugate-axis", [](const Partition& p) { return is_self_conjugate(p); }, true}};
}

RegionPredicate full_region()
{
    return {"full", [](const Partition&) { return true; }, true};
}

RegionPredicate load_region_file(const std::filesystem::path& path, std::string name)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read region file " + path.string());

    std::map<int, std::set<Partition>> sections;
    int current = 0;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos)
            continue;
        if (line.starts_with("#")) {
            auto eq = line.find("n=");
            if (eq == std::string::npos)
                throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": expected '# n=K'");
            current = std::stoi(line.substr(eq + 2));
            continue;
        }
        Partition p;
        try {
            p = Partition::parse(line);
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
        }
        if (current == 0 || p.size() != current)
            throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": " + p.to_string() +
                                     " is not under a matching '# n=K' header");
        sections[current].insert(std::move(p));
    }

    if (name.empty())
        name = path.stem().string();
    return {std::move(name),
            [sections = std::move(sections)](const Partition& p) {
                auto it = sections.find(p.size());
                return it != sections.end() && it->second.contains(p);
            },
            false};
}

RegionPredicate resolve_region(const std::string& name_or_path)
{
    for (auto& region : builtin_regions())
        if (region.name == name_or_path)
            return region;
    if (std::filesystem::is_regular_file(name_or_path))
        return load_region_file(name_or_path);
    throw std::invalid_argument("unknown region '" + name_or_path + "' (not built in and not a readable file)");
}

std::vector<Partition> region_members(const LayerAssignment& layers, const RegionPredicate& region)
{
    const auto in = membership(layers, region);
    std::vector<Partition> out;
    for (VertexId v = 0; v < in.size(); ++v)
        if (in[v])
            out.push_back(layers.vertex(v));
    return out;
}

std::map<int, std::size_t> restricted_layer_counts(const LayerAssignment& layers, const RegionPredicate& region)
{
    const auto in = membership(layers, region);
    std::map<int, std::size_t> counts;
    for (VertexId v = 0; v < in.size(); ++v)
        if (in[v])
            ++counts[layers.dim_of(v)];
    return counts;
}

std::map<int, std::size_t> restricted_layer_counts(int n, const RegionPredicate& region)
{
    return restricted_layer_counts(layer_assignment(n), region);
}

std::vector<Partition> restricted_layer(const LayerAssignment& layers, int r, const RegionPredicate& region)
{
    const auto in = membership(layers, region);
    std::vector<Partition> out;
    for (VertexId v = 0; v < in.size(); ++v)
        if (in[v] && layers.dim_of(v) == r)
            out.push_back(layers.vertex(v));
    return out;
}

std::vector<Edge> restricted_boundary_edges(const Stratification& st, int r, const RegionPredicate& region)
{
    const auto in = membership(st.layers, region);
    std::vector<Edge> out;
    for (const Edge& e : cross_layer_edges(st, r, r + 1))
        if (in[e.lo] && in[e.hi])
            out.push_back(e);
    return out;
}

std::size_t restricted_boundary_count(const Stratification& st, int r, const RegionPredicate& region)
{
    return restricted_boundary_edges(st, r, region).size();
}

std::size_t restricted_boundary_count(int n, int r, const RegionPredicate& region)
{
    return restricted_boundary_count(stratify(n), r, region);
}

} // namespace partlayers
