#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "partlayers/strata.hpp"

namespace partlayers {

/// A distinguished vertex subset X_n given by a membership test.
struct RegionPredicate {
    std::string name;
    std::function<bool(const Partition&)> test;
    bool conj_invariant_declared = false;
};

/// Ships `self-conjugate-axis` only.
std::vector<RegionPredicate> builtin_regions();

/// Always-true region; restricting by it is the identity.
RegionPredicate full_region();

/// Region from explicit partition lists. File format: `# n=K` section
/// headers, one partition text per line, blank lines ignored. Throws
/// std::runtime_error on unreadable files or malformed lines.
RegionPredicate load_region_file(const std::filesystem::path& path, std::string name = {});

/// Built-in name, or a path to a region file. Throws std::invalid_argument
/// for an unknown name that is not a readable file.
RegionPredicate resolve_region(const std::string& name_or_path);

/// Members of Par(n) in X. For regions declared conjugation-invariant every
/// evaluated vertex is checked against its conjugate; a violation throws
/// std::runtime_error.
std::vector<Partition> region_members(const LayerAssignment& layers, const RegionPredicate& region);

/// |L_r(n) ∩ X| per realized r; omitted keys are zero.
std::map<int, std::size_t> restricted_layer_counts(const LayerAssignment& layers, const RegionPredicate& region);
std::map<int, std::size_t> restricted_layer_counts(int n, const RegionPredicate& region);

std::vector<Partition> restricted_layer(const LayerAssignment& layers, int r, const RegionPredicate& region);

/// Adjacent-layer boundary edges with both endpoints in X.
std::vector<Edge> restricted_boundary_edges(const Stratification& st, int r, const RegionPredicate& region);
std::size_t restricted_boundary_count(const Stratification& st, int r, const RegionPredicate& region);
std::size_t restricted_boundary_count(int n, int r, const RegionPredicate& region);

} // namespace partlayers
