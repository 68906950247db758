#include "partlayers/first_occurrence.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace partlayers {

namespace {

bool closed_under_conjugation(const std::vector<Partition>& members)
{
    const std::set<Partition> lookup(members.begin(), members.end());
    return std::ranges::all_of(members, [&](const Partition& p) { return lookup.contains(conjugate(p)); });
}

} // namespace

std::vector<Partition> FirstOccurrenceRecord::member_partitions() const
{
    std::vector<Partition> out;
    for (const auto& rec : members)
        out.push_back(rec.partition);
    return out;
}

std::vector<FirstOccurrenceRecord> first_occurrence_scan(int r_max, int n_max, unsigned jobs)
{
    if (r_max < 0 || n_max < 1)
        throw std::invalid_argument("first_occurrence_scan: need r_max >= 0 and n_max >= 1");

    std::vector<FirstOccurrenceRecord> out(static_cast<std::size_t>(r_max) + 1);
    for (int r = 0; r <= r_max; ++r)
        out[static_cast<std::size_t>(r)].r = r;

    std::size_t remaining = out.size();
    int n = 1;
    for (; n <= n_max && remaining > 0; ++n) {
        const LayerAssignment layers = layer_assignment(n, jobs);
        for (auto& record : out) {
            if (record.found())
                continue;
            for (const auto& rec : layers.records)
                if (rec.dim_loc == record.r)
                    record.members.push_back(rec);
            if (!record.members.empty()) {
                record.n_first = n;
                --remaining;
            }
        }
    }
    const int scanned = n - 1;

    for (auto& record : out) {
        record.scanned_to = record.found() ? *record.n_first : scanned;
        if (!record.found())
            continue;
        record.conjugation_closed = closed_under_conjugation(record.member_partitions());
        record.staircase_match = check_staircase_pattern(record);
    }
    return out;
}

bool check_staircase_pattern(const FirstOccurrenceRecord& record)
{
    if (!record.found())
        throw std::invalid_argument("check_staircase_pattern: layer " + std::to_string(record.r) + " was not found");
    const int r = record.r;
    if (*record.n_first != 1 + r * (r + 1) / 2)
        return false;
    std::vector<Partition> members = record.member_partitions();
    std::ranges::sort(members, EnumerationOrder{});
    return members == staircase_family(r).members;
}

std::vector<Partition> representatives_up_to_conjugation(const std::vector<Partition>& members)
{
    if (!closed_under_conjugation(members))
        throw std::invalid_argument("representatives_up_to_conjugation: set is not closed under conjugation");
    std::set<Partition, EnumerationOrder> reps;
    for (const Partition& p : members)
        reps.insert(std::max(p, conjugate(p)));
    return {reps.begin(), reps.end()};
}

} // namespace partlayers
