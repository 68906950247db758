#include "partlayers/atlas.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "partlayers/boundary.hpp"
#include "partlayers/clique_oracle.hpp"
#include "partlayers/first_occurrence.hpp"
#include "partlayers/parallel.hpp"
#include "partlayers/reference_data.hpp"
#include "partlayers/restriction.hpp"

namespace partlayers {

void AtlasConfig::validate() const
{
    if (n_min < 1)
        throw std::invalid_argument("n_min must be >= 1");
    if (n_min > n_max)
        throw std::invalid_argument("n_min must not exceed n_max");
    if (r_max < 0)
        throw std::invalid_argument("r_max must be >= 0");
    if (oracle_n_max && (*oracle_n_max < 1 || *oracle_n_max > n_max))
        throw std::invalid_argument("oracle_n_max must lie in [1, n_max]");
    for (int r : fixed_r)
        if (r < 0)
            throw std::invalid_argument("fixed r values must be >= 0");
}

OutputFormat parse_format(const std::string& text)
{
    if (text == "csv")
        return OutputFormat::csv;
    if (text == "json")
        return OutputFormat::json;
    if (text == "both")
        return OutputFormat::both;
    throw std::invalid_argument("format must be csv, json or both, got '" + text + "'");
}

AtlasConfig load_config_file(const std::filesystem::path& path, AtlasConfig base)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read config file " + path.string());
    nlohmann::json j;
    try {
        in >> j;
        if (j.contains("n_min"))
            base.n_min = j.at("n_min").get<int>();
        if (j.contains("n_max"))
            base.n_max = j.at("n_max").get<int>();
        if (j.contains("r_max"))
            base.r_max = j.at("r_max").get<int>();
        if (j.contains("oracle_n_max"))
            base.oracle_n_max = j.at("oracle_n_max").get<int>();
        if (j.contains("regions"))
            base.regions = j.at("regions").get<std::vector<std::string>>();
        if (j.contains("fixed_r"))
            base.fixed_r = j.at("fixed_r").get<std::vector<int>>();
        if (j.contains("output_dir"))
            base.output_dir = j.at("output_dir").get<std::string>();
        if (j.contains("format"))
            base.format = parse_format(j.at("format").get<std::string>());
        if (j.contains("parallelism"))
            base.parallelism = j.at("parallelism").get<unsigned>();
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("bad config file " + path.string() + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error("bad config file " + path.string() + ": " + e.what());
    }
    return base;
}

Table SequenceFile::to_table() const
{
    Table t{name, {"index", "value"}, {}};
    for (std::size_t i = 0; i < values.size(); ++i)
        t.add(offset + static_cast<std::int64_t>(i), values[i]);
    return t;
}

namespace {

std::size_t window_size(const AtlasConfig& c)
{
    return static_cast<std::size_t>(c.n_max - c.n_min + 1);
}

std::vector<Stratification> stratify_window(const AtlasConfig& c)
{
    std::vector<Stratification> out(window_size(c));
    parallel_for(out.size(), c.parallelism, [&](std::size_t i) { out[i] = stratify(c.n_min + static_cast<int>(i)); });
    return out;
}

std::vector<LayerAssignment> layers_window(const AtlasConfig& c)
{
    std::vector<LayerAssignment> out(window_size(c));
    parallel_for(out.size(), c.parallelism,
                 [&](std::size_t i) { out[i] = layer_assignment(c.n_min + static_cast<int>(i)); });
    return out;
}

std::string join_ints(const std::vector<int>& xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out += ';';
        out += std::to_string(xs[i]);
    }
    return out;
}

std::vector<int> requested_fixed_r(const AtlasConfig& c)
{
    if (!c.fixed_r.empty()) {
        std::set<int> unique(c.fixed_r.begin(), c.fixed_r.end());
        return {unique.begin(), unique.end()};
    }
    std::vector<int> out;
    for (int r = 0; r <= c.r_max; ++r)
        out.push_back(r);
    return out;
}

std::vector<RegionPredicate> requested_regions(const AtlasConfig& c)
{
    if (c.regions.empty())
        return builtin_regions();
    std::vector<RegionPredicate> out;
    for (const auto& name : c.regions)
        out.push_back(resolve_region(name));
    return out;
}

void write_all(const AtlasConfig& c, const std::vector<Table>& tables)
{
    std::error_code ec;
    std::filesystem::create_directories(c.output_dir, ec);
    if (ec || !std::filesystem::is_directory(c.output_dir))
        throw AtlasIoError("cannot create output directory " + c.output_dir.string() +
                           (ec ? ": " + ec.message() : std::string{}));
    try {
        for (const auto& t : tables)
            write_table(t, c.output_dir, c.format);
    } catch (const std::runtime_error& e) {
        throw AtlasIoError(e.what());
    }
}

} // namespace

std::vector<Table> profile_tables(const AtlasConfig& c)
{
    c.validate();
    Table rows{"profiles", {"n", "r", "count"}, {}};
    Table summary{"profile_summary", {"n", "delta_min", "delta_max", "top_size", "p_n", "is_interval", "gaps"}, {}};
    for (const LayerProfile& p : profile_sweep(c.n_min, c.n_max, c.parallelism)) {
        for (const auto& [r, count] : p.counts)
            rows.add(p.n, r, count);
        summary.add(p.n, p.delta_min, p.delta_max, p.top_size, p.p_n, p.is_interval, join_ints(p.gaps));
    }
    return {rows, summary};
}

std::vector<Table> layer_tables(const AtlasConfig& c)
{
    c.validate();
    Table caps{"capacities", {"n", "partition", "s", "t", "dim_loc"}, {}};
    for (const LayerAssignment& layers : layers_window(c))
        for (const CapacityRecord& rec : layers.records)
            caps.add(layers.n, rec.partition.to_string(), rec.s, rec.t, rec.dim_loc);
    return {caps};
}

std::vector<Table> boundary_tables(const AtlasConfig& c)
{
    c.validate();
    Table rows{"boundaries", {"n", "r", "b_E", "b_lower", "b_upper", "b_V"}, {}};
    Table cross{"cross_edges", {"n", "r", "s", "count"}, {}};
    Table jumps{"jumps", {"n", "max_jump"}, {}};
    const auto strata = stratify_window(c);
    std::vector<BoundaryTable> tables(strata.size());
    parallel_for(strata.size(), c.parallelism, [&](std::size_t i) { tables[i] = boundary_table(strata[i]); });
    for (const BoundaryTable& bt : tables) {
        for (const BoundaryRow& row : bt.rows)
            rows.add(bt.n, row.r, row.b_edges, row.b_lower, row.b_upper, row.b_vertices);
        for (const auto& [key, count] : bt.cross_counts)
            cross.add(bt.n, key.first, key.second, count);
        jumps.add(bt.n, bt.max_jump);
    }
    return {rows, cross, jumps};
}

std::vector<Table> first_occurrence_tables(const AtlasConfig& c)
{
    c.validate();
    Table summary{"first_occurrence", {"r", "n_first", "size_F", "staircase_match", "representatives"}, {}};
    Table members{"first_occurrence_members", {"r", "n_first", "partition", "s", "t"}, {}};
    for (const FirstOccurrenceRecord& rec : first_occurrence_scan(c.r_max, c.n_max, c.parallelism)) {
        if (!rec.found()) {
            summary.add(rec.r, std::monostate{}, 0, false, "");
            continue;
        }
        const auto reps = representatives_up_to_conjugation(rec.member_partitions());
        summary.add(rec.r, *rec.n_first, rec.members.size(), rec.staircase_match, join_partitions(reps));
        for (const CapacityRecord& m : rec.members)
            members.add(rec.r, *rec.n_first, m.partition.to_string(), m.s, m.t);
    }
    return {summary, members};
}

std::vector<Table> restricted_tables(const AtlasConfig& c)
{
    c.validate();
    const auto regions = requested_regions(c);
    Table counts{"restricted", {"n", "region", "r", "count"}, {}};
    Table edges{"restricted_boundaries", {"n", "region", "r", "b_E"}, {}};
    const auto strata = stratify_window(c);
    for (const Stratification& st : strata) {
        const BoundaryTable bt = boundary_table(st);
        for (const RegionPredicate& region : regions) {
            for (const auto& [r, count] : restricted_layer_counts(st.layers, region))
                counts.add(st.n(), region.name, r, count);
            for (const BoundaryRow& row : bt.rows)
                edges.add(st.n(), region.name, row.r, restricted_boundary_count(st, row.r, region));
        }
    }
    return {counts, edges};
}

std::vector<Table> graph_tables(const AtlasConfig& c)
{
    c.validate();
    Table vertices{"graph", {"n", "vertex_id", "partition", "neighbor_ids"}, {}};
    Table edges{"edges", {"n", "src_id", "dst_id"}, {}};
    std::vector<PartitionGraph> graphs(window_size(c));
    parallel_for(graphs.size(), c.parallelism,
                 [&](std::size_t i) { graphs[i] = build_graph(c.n_min + static_cast<int>(i)); });
    for (const PartitionGraph& g : graphs) {
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            std::string ids;
            for (VertexId w : g.adjacency[v]) {
                if (!ids.empty())
                    ids += ';';
                ids += std::to_string(w);
            }
            vertices.add(g.n, v, g.vertices[v].to_string(), ids);
        }
        for (const Edge& e : g.edges)
            edges.add(g.n, e.lo, e.hi);
    }
    return {vertices, edges};
}

std::vector<SequenceFile> sequence_files(const AtlasConfig& c)
{
    c.validate();
    const auto strata = stratify_window(c);
    std::vector<LayerProfile> profiles(strata.size());
    std::vector<BoundaryTable> bounds(strata.size());
    parallel_for(strata.size(), c.parallelism, [&](std::size_t i) {
        profiles[i] = profile(strata[i].layers);
        bounds[i] = boundary_table(strata[i]);
    });

    std::vector<SequenceFile> out;
    SequenceFile delta{"delta_loc", c.n_min, {}};
    SequenceFile tau{"tau_top", c.n_min, {}};
    for (const auto& p : profiles) {
        delta.values.push_back(p.delta_max);
        tau.values.push_back(static_cast<std::int64_t>(p.top_size));
    }
    out.push_back(std::move(delta));
    out.push_back(std::move(tau));

    // Stops at the first layer value not realized within the window.
    SequenceFile first{"n_first", 0, {}};
    for (const auto& rec : first_occurrence_scan(c.r_max, c.n_max, c.parallelism)) {
        if (!rec.found())
            break;
        first.values.push_back(*rec.n_first);
    }
    out.push_back(std::move(first));

    for (int r : requested_fixed_r(c)) {
        SequenceFile a{"a_" + std::to_string(r), c.n_min, {}};
        SequenceFile b{"b_" + std::to_string(r), c.n_min, {}};
        for (std::size_t i = 0; i < profiles.size(); ++i) {
            a.values.push_back(static_cast<std::int64_t>(profiles[i].count(r)));
            b.values.push_back(static_cast<std::int64_t>(bounds[i].cross_count(r, r + 1)));
        }
        out.push_back(std::move(a));
        out.push_back(std::move(b));
    }
    return out;
}

void cmd_profile(const AtlasConfig& c) { write_all(c, profile_tables(c)); }
void cmd_layers(const AtlasConfig& c) { write_all(c, layer_tables(c)); }
void cmd_boundaries(const AtlasConfig& c) { write_all(c, boundary_tables(c)); }
void cmd_first_occurrence(const AtlasConfig& c) { write_all(c, first_occurrence_tables(c)); }
void cmd_restricted(const AtlasConfig& c) { write_all(c, restricted_tables(c)); }
void cmd_graph_export(const AtlasConfig& c) { write_all(c, graph_tables(c)); }

void cmd_sequences(const AtlasConfig& c)
{
    std::vector<Table> tables;
    for (const auto& seq : sequence_files(c))
        tables.push_back(seq.to_table());
    write_all(c, tables);
}

VerifyOutcome cmd_verify(const AtlasConfig& c, std::ostream& log, const CapacityFn& capacities)
{
    c.validate();
    VerifyOutcome outcome;

    for (int n = 1; n <= c.oracle_ceiling(); ++n) {
        const OracleReport report = verify_dimension_formula(n, capacities, c.parallelism);
        const CapacitySymmetry sym = capacity_symmetry(layer_assignment(n));
        outcome.oracle_checked += report.checked;
        outcome.oracle_mismatches += report.mismatches.size();
        log << "n=" << n << " checked=" << report.checked << " mismatches=" << report.mismatches.size()
            << " s_conj_invariant=" << (sym.star_invariant ? "true" : "false")
            << " t_conj_invariant=" << (sym.top_invariant ? "true" : "false")
            << " elapsed_ms=" << report.elapsed.count() << '\n';
        for (const auto& m : report.mismatches)
            log << "  mismatch " << m.partition.to_string() << " max(s,t)=" << m.formula_dim
                << " omega_loc-1=" << m.oracle_dim << '\n';
    }

    for (const auto& row : small_capacity_reference()) {
        const Partition lambda = make_partition(row.parts);
        const CapacityRecord rec = capacities(lambda);
        ++outcome.reference_checked;
        const int dim = std::max(rec.s, rec.t);
        if (rec.s != row.s || rec.t != row.t || dim != row.dim_loc) {
            ++outcome.reference_mismatches;
            log << "  reference mismatch " << lambda.to_string() << " got (s,t,dim)=(" << rec.s << ',' << rec.t << ','
                << dim << ") expected (" << row.s << ',' << row.t << ',' << row.dim_loc << ")\n";
        }
    }
    log << "reference capacities n<=7: checked=" << outcome.reference_checked
        << " mismatches=" << outcome.reference_mismatches << '\n';

    // Exact first occurrences, recomputed with the injected capacities.
    const auto& expected = exact_first_occurrence_sets();
    outcome.first_occurrence_ok = true;
    for (int r = 0; r < static_cast<int>(expected.size()); ++r) {
        const int n_first = 1 + r * (r + 1) / 2;
        for (int m = 1; m <= n_first; ++m) {
            std::vector<Partition> found;
            for (const Partition& lambda : enumerate_partitions(m)) {
                const CapacityRecord rec = capacities(lambda);
                if (std::max(rec.s, rec.t) == r)
                    found.push_back(lambda);
            }
            std::vector<Partition> want;
            if (m == n_first)
                for (const auto& parts : expected[static_cast<std::size_t>(r)])
                    want.push_back(make_partition(parts));
            std::ranges::sort(want, EnumerationOrder{});
            if (found != want) {
                outcome.first_occurrence_ok = false;
                log << "  first occurrence mismatch r=" << r << " n=" << m << " got {" << join_partitions(found)
                    << "} expected {" << join_partitions(want) << "}\n";
            }
        }
    }
    log << "exact first occurrences r<=3: " << (outcome.first_occurrence_ok ? "ok" : "FAILED") << '\n';
    log << "verify: " << (outcome.passed() ? "PASS" : "FAIL") << '\n';
    return outcome;
}

} // namespace partlayers
