#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace partlayers {

/// Integer partition stored as a weakly decreasing list of positive parts.
///
/// The empty partition exists only as the zero staircase; every vertex of a
/// partition graph has size at least one.
class Partition {
public:
    Partition() = default;

    /// Sorts `raw` into canonical order. Throws std::invalid_argument on an
    /// empty list or a non-positive entry.
    static Partition from_parts(std::vector<int> raw);

    /// Parses the text form "(4,2,1)".
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Part in 1-based row `row`; 0 beyond the last row.
    int part(std::size_t row) const noexcept
    {
        return row >= 1 && row <= parts_.size() ? parts_[row - 1] : 0;
    }

    /// Number of distinct part values (equals the removable-corner count).
    std::size_t distinct_parts() const noexcept;

    std::string to_string() const;

    bool operator==(const Partition& other) const noexcept { return parts_ == other.parts_; }

    /// Lexicographic on part lists. Enumeration order is the reverse of this.
    std::strong_ordering operator<=>(const Partition& other) const noexcept
    {
        return parts_ <=> other.parts_;
    }

private:
    struct canonical_tag {};
    Partition(canonical_tag, std::vector<int> parts);

    std::vector<int> parts_;
    int size_ = 0;

    friend Partition canonical_unchecked(std::vector<int>);
};

/// Wraps parts already known to be weakly decreasing and positive.
Partition canonical_unchecked(std::vector<int> parts);

inline Partition make_partition(std::vector<int> raw) { return Partition::from_parts(std::move(raw)); }

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

/// Descending-lexicographic comparator; the vertex order of every graph.
struct EnumerationOrder {
    bool operator()(const Partition& a, const Partition& b) const noexcept { return a > b; }
};

enum class CornerKind { removable, addable };

/// Diagram cell, 1-based (row, col).
struct Corner {
    int row = 0;
    int col = 0;
    CornerKind kind = CornerKind::removable;

    bool operator==(const Corner&) const = default;
};

std::string to_string(const Corner& c);

/// All partitions of n in descending lexicographic order.
std::vector<Partition> enumerate_partitions(int n);

/// p(n) via the enumeration count; see tests for the independent recurrence.
std::size_t partition_count(int n);

Partition conjugate(const Partition& lambda);

inline bool is_self_conjugate(const Partition& lambda) { return conjugate(lambda) == lambda; }

std::vector<Corner> removable_corners(const Partition& lambda);
std::vector<Corner> addable_corners(const Partition& lambda);

/// (r, r-1, ..., 1); r = 0 gives the empty partition.
Partition staircase(int r);

struct StaircaseFamily {
    int r = 0;
    Partition base;
    std::vector<Partition> members; ///< descending lexicographic
};

/// One-cell extensions of staircase(r). The r = 0 family is {(1)}.
StaircaseFamily staircase_family(int r);

/// "(4,2,1);(3,3,1)" style list.
std::string join_partitions(std::span<const Partition> list, char sep = ';');

} // namespace partlayers
