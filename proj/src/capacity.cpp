#include "partlayers/capacity.hpp"

#include <algorithm>
#include <stdexcept>

#include "partlayers/transfer_graph.hpp"

namespace partlayers {

std::vector<Corner> a_max_set(const Partition& lambda, const Corner& c)
{
    const auto removable = removable_corners(lambda);
    if (c.kind != CornerKind::removable || std::ranges::find(removable, c) == removable.end())
        throw std::invalid_argument("a_max_set: " + to_string(c) + " is not a removable corner of " + lambda.to_string());
    std::vector<Corner> out;
    for (const Transfer& t : admissible_transfers(lambda))
        if (t.c == c)
            out.push_back(t.a);
    return out;
}

std::vector<Corner> c_max_set(const Partition& lambda, const Corner& a)
{
    const auto addable = addable_corners(lambda);
    if (a.kind != CornerKind::addable || std::ranges::find(addable, a) == addable.end())
        throw std::invalid_argument("c_max_set: " + to_string(a) + " is not an addable corner of " + lambda.to_string());
    std::vector<Corner> out;
    for (const Transfer& t : admissible_transfers(lambda))
        if (t.a == a)
            out.push_back(t.c);
    return out;
}

CapacityRecord capacity_record(const Partition& lambda)
{
    // Corner rows index the tallies directly; both lists are short.
    const std::size_t rows = lambda.length() + 2;
    std::vector<int> per_c(rows, 0);
    std::vector<int> per_a(rows, 0);
    for (const Transfer& t : admissible_transfers(lambda)) {
        ++per_c[static_cast<std::size_t>(t.c.row)];
        ++per_a[static_cast<std::size_t>(t.a.row)];
    }
    CapacityRecord rec{lambda, std::ranges::max(per_c), std::ranges::max(per_a), 0};
    rec.dim_loc = std::max(rec.s, rec.t);
    return rec;
}

int star_capacity(const Partition& lambda) { return capacity_record(lambda).s; }
int top_capacity(const Partition& lambda) { return capacity_record(lambda).t; }
int local_dim(const Partition& lambda) { return capacity_record(lambda).dim_loc; }

} // namespace partlayers
