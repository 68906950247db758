#include "partlayers/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace partlayers {

Partition::Partition(canonical_tag, std::vector<int> parts)
    : parts_(std::move(parts))
    , size_(std::accumulate(parts_.begin(), parts_.end(), 0))
{
}

Partition canonical_unchecked(std::vector<int> parts)
{
    return Partition(Partition::canonical_tag{}, std::move(parts));
}

Partition Partition::from_parts(std::vector<int> raw)
{
    if (raw.empty())
        throw std::invalid_argument("partition needs at least one part");
    for (int x : raw)
        if (x < 1)
            throw std::invalid_argument("partition parts must be positive, got " + std::to_string(x));
    std::ranges::sort(raw, std::greater<>{});
    return Partition(canonical_tag{}, std::move(raw));
}

Partition Partition::parse(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ')
            s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ')
            s.remove_suffix(1);
        return s;
    };
    std::string_view body = trim(text);
    if (body.size() < 2 || body.front() != '(' || body.back() != ')')
        throw std::invalid_argument("partition text must look like (4,2,1): '" + std::string(text) + "'");
    body = body.substr(1, body.size() - 2);

    std::vector<int> raw;
    while (true) {
        auto comma = body.find(',');
        std::string_view field = trim(body.substr(0, comma));
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty())
            throw std::invalid_argument("bad part '" + std::string(field) + "' in '" + std::string(text) + "'");
        raw.push_back(value);
        if (comma == std::string_view::npos)
            break;
        body.remove_prefix(comma + 1);
    }
    return from_parts(std::move(raw));
}

std::size_t Partition::distinct_parts() const noexcept
{
    std::size_t d = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i)
        if (i + 1 == parts_.size() || parts_[i] != parts_[i + 1])
            ++d;
    return d;
}

std::string Partition::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ')';
    return out;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : p.parts()) {
        h ^= static_cast<std::size_t>(x);
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string to_string(const Corner& c)
{
    return (c.kind == CornerKind::removable ? "r(" : "a(") + std::to_string(c.row) + "," +
        std::to_string(c.col) + ")";
}

std::vector<Partition> enumerate_partitions(int n)
{
    if (n < 1)
        throw std::invalid_argument("enumerate_partitions: n must be >= 1");

    std::vector<Partition> out;
    std::vector<int> cur{n};
    while (true) {
        out.push_back(canonical_unchecked(cur));

        // Drop trailing ones, then decrement the last part > 1 and refill
        // greedily with copies of the new value.
        int rem = 0;
        while (!cur.empty() && cur.back() == 1) {
            rem += 1;
            cur.pop_back();
        }
        if (cur.empty())
            break;
        int k = --cur.back();
        rem += 1;
        while (rem > k) {
            cur.push_back(k);
            rem -= k;
        }
        if (rem > 0)
            cur.push_back(rem);
    }
    return out;
}

std::size_t partition_count(int n)
{
    return enumerate_partitions(n).size();
}

Partition conjugate(const Partition& lambda)
{
    const auto& parts = lambda.parts();
    if (parts.empty())
        return {};
    std::vector<int> cols(static_cast<std::size_t>(parts.front()), 0);
    for (int p : parts)
        for (int j = 0; j < p; ++j)
            ++cols[static_cast<std::size_t>(j)];
    return canonical_unchecked(std::move(cols));
}

std::vector<Corner> removable_corners(const Partition& lambda)
{
    std::vector<Corner> out;
    const auto len = lambda.length();
    for (std::size_t row = 1; row <= len; ++row)
        if (lambda.part(row) > lambda.part(row + 1))
            out.push_back({static_cast<int>(row), lambda.part(row), CornerKind::removable});
    return out;
}

std::vector<Corner> addable_corners(const Partition& lambda)
{
    std::vector<Corner> out;
    const auto len = lambda.length();
    for (std::size_t row = 1; row <= len + 1; ++row)
        if (row == 1 || lambda.part(row - 1) > lambda.part(row))
            out.push_back({static_cast<int>(row), lambda.part(row) + 1, CornerKind::addable});
    return out;
}

Partition staircase(int r)
{
    if (r < 0)
        throw std::invalid_argument("staircase: r must be >= 0");
    std::vector<int> parts;
    for (int k = r; k >= 1; --k)
        parts.push_back(k);
    return canonical_unchecked(std::move(parts));
}

StaircaseFamily staircase_family(int r)
{
    StaircaseFamily family{r, staircase(r), {}};
    if (r == 0) {
        family.members.push_back(canonical_unchecked({1}));
        return family;
    }
    for (const Corner& a : addable_corners(family.base)) {
        std::vector<int> parts = family.base.parts();
        if (static_cast<std::size_t>(a.row) > parts.size())
            parts.push_back(1);
        else
            ++parts[static_cast<std::size_t>(a.row) - 1];
        family.members.push_back(canonical_unchecked(std::move(parts)));
    }
    std::ranges::sort(family.members, EnumerationOrder{});
    return family;
}

std::string join_partitions(std::span<const Partition> list, char sep)
{
    std::string out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i)
            out += sep;
        out += list[i].to_string();
    }
    return out;
}

} // namespace partlayers
