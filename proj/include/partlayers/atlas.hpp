#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "partlayers/capacity.hpp"
#include "partlayers/table.hpp"

namespace partlayers {

/// Run configuration shared by every dataset command.
struct AtlasConfig {
    int n_min = 1;
    int n_max = 20;
    int r_max = 7;
    std::optional<int> oracle_n_max; ///< defaults to n_max
    std::vector<std::string> regions; ///< empty: all built-in regions
    std::vector<int> fixed_r;         ///< a_r / b_r sequences; empty: 0..r_max
    std::filesystem::path output_dir = ".";
    OutputFormat format = OutputFormat::csv;
    unsigned parallelism = 0; ///< 0 = hardware concurrency

    int oracle_ceiling() const { return oracle_n_max.value_or(n_max); }

    /// Throws std::invalid_argument unless 1 <= n_min <= n_max,
    /// oracle_n_max <= n_max and r_max >= 0.
    void validate() const;
};

/// Applies keys from a JSON config file on top of `base`. Keys match the
/// field names above; `format` is "csv", "json" or "both". Throws
/// std::runtime_error on unreadable or malformed files.
AtlasConfig load_config_file(const std::filesystem::path& path, AtlasConfig base = {});

OutputFormat parse_format(const std::string& text);

/// Plain `index,value` sequence, e.g. delta_loc starting at n = 1.
struct SequenceFile {
    std::string name;
    std::int64_t offset = 0;
    std::vector<std::int64_t> values;

    Table to_table() const;
};

/// I/O failure while writing datasets.
struct AtlasIoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Each command computes its datasets over the config window and writes them
// into output_dir, creating it if needed. I/O failures throw AtlasIoError.
std::vector<Table> profile_tables(const AtlasConfig& config);
std::vector<Table> layer_tables(const AtlasConfig& config);
std::vector<Table> boundary_tables(const AtlasConfig& config);
std::vector<Table> first_occurrence_tables(const AtlasConfig& config);
std::vector<Table> restricted_tables(const AtlasConfig& config);
std::vector<Table> graph_tables(const AtlasConfig& config);
std::vector<SequenceFile> sequence_files(const AtlasConfig& config);

void cmd_profile(const AtlasConfig& config);
void cmd_layers(const AtlasConfig& config);
void cmd_boundaries(const AtlasConfig& config);
void cmd_first_occurrence(const AtlasConfig& config);
void cmd_restricted(const AtlasConfig& config);
void cmd_graph_export(const AtlasConfig& config);
void cmd_sequences(const AtlasConfig& config);

struct VerifyOutcome {
    std::size_t oracle_checked = 0;
    std::size_t oracle_mismatches = 0;
    std::size_t reference_checked = 0;
    std::size_t reference_mismatches = 0;
    bool first_occurrence_ok = false;

    bool passed() const { return oracle_mismatches == 0 && reference_mismatches == 0 && first_occurrence_ok; }
};

/// Oracle comparison for n <= oracle_n_max plus the published small-size
/// capacities and exact first occurrences. Writes one summary line per n and
/// a dump of every mismatch to `log`.
VerifyOutcome cmd_verify(const AtlasConfig& config, std::ostream& log, const CapacityFn& capacities = capacity_record);

} // namespace partlayers
