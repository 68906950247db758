#include "partlayers/reference_data.hpp"

namespace partlayers {

const std::vector<CapacityReferenceRow>& small_capacity_reference()
{
    static const std::vector<CapacityReferenceRow> rows{
        {1, {1}, 0, 0, 0},
        {2, {2}, 1, 1, 1},
        {2, {1,1}, 1, 1, 1},
        {3, {3}, 1, 1, 1},
        {3, {2,1}, 1, 1, 1},
        {3, {1,1,1}, 1, 1, 1},
        {4, {4}, 1, 1, 1},
        {4, {3,1}, 2, 1, 2},
        {4, {2,2}, 2, 1, 2},
        {4, {2,1,1}, 2, 1, 2},
        {4, {1,1,1,1}, 1, 1, 1},
        {5, {5}, 1, 1, 1},
        {5, {4,1}, 2, 1, 2},
        {5, {3,2}, 2, 2, 2},
        {5, {3,1,1}, 2, 2, 2},
        {5, {2,2,1}, 2, 2, 2},
        {5, {2,1,1,1}, 2, 1, 2},
        {5, {1,1,1,1,1}, 1, 1, 1},
        {6, {6}, 1, 1, 1},
        {6, {5,1}, 2, 1, 2},
        {6, {4,2}, 2, 2, 2},
        {6, {4,1,1}, 2, 2, 2},
        {6, {3,3}, 2, 1, 2},
        {6, {3,2,1}, 2, 2, 2},
        {6, {3,1,1,1}, 2, 2, 2},
        {6, {2,2,2}, 2, 1, 2},
        {6, {2,2,1,1}, 2, 2, 2},
        {6, {2,1,1,1,1}, 2, 1, 2},
        {6, {1,1,1,1,1,1}, 1, 1, 1},
        {7, {7}, 1, 1, 1},
        {7, {6,1}, 2, 1, 2},
        {7, {5,2}, 2, 2, 2},
        {7, {5,1,1}, 2, 2, 2},
        {7, {4,3}, 2, 2, 2},
        {7, {4,2,1}, 3, 2, 3},
        {7, {4,1,1,1}, 2, 2, 2},
        {7, {3,3,1}, 3, 2, 3},
        {7, {3,2,2}, 3, 2, 3},
        {7, {3,2,1,1}, 3, 2, 3},
        {7, {3,1,1,1,1}, 2, 2, 2},
        {7, {2,2,2,1}, 2, 2, 2},
        {7, {2,2,1,1,1}, 2, 2, 2},
        {7, {2,1,1,1,1,1}, 2, 1, 2},
        {7, {1,1,1,1,1,1,1}, 1, 1, 1},
    };
    return rows;
}

const std::vector<FirstOccurrenceReference>& first_occurrence_reference()
{
    static const std::vector<FirstOccurrenceReference> rows{
        {0, 1, 1, {{1}}, true},
        {1, 2, 2, {{2}}, true},
        {2, 4, 3, {{3, 1}, {2, 2}}, true},
        {3, 7, 4, {{4, 2, 1}, {3, 3, 1}}, true},
        {4, 11, 5, {{5, 3, 2, 1}, {4, 4, 2, 1}, {4, 3, 3, 1}}, false},
        {5, 16, 6, {{6, 4, 3, 2, 1}, {5, 5, 3, 2, 1}, {5, 4, 4, 2, 1}}, false},
        {6, 22, 7, {{7, 5, 4, 3, 2, 1}, {6, 6, 4, 3, 2, 1}, {6, 5, 5, 3, 2, 1}, {6, 5, 4, 4, 2, 1}}, false},
        {7, 29, 8, {{8, 6, 5, 4, 3, 2, 1}, {7, 7, 5, 4, 3, 2, 1}, {7, 6, 6, 4, 3, 2, 1}, {7, 6, 5, 5, 3, 2, 1}}, false},
    };
    return rows;
}

const std::vector<std::vector<std::vector<int>>>& exact_first_occurrence_sets()
{
    static const std::vector<std::vector<std::vector<int>>> sets{
        {{1}},
        {{2}, {1, 1}},
        {{3, 1}, {2, 2}, {2, 1, 1}},
        {{4, 2, 1}, {3, 3, 1}, {3, 2, 2}, {3, 2, 1, 1}},
    };
    return sets;
}

} // namespace partlayers
