#pragma once

// Shared test fixture: the 4-object covering and its two-object,
// two-element immigration batch used across the suites, together with
// independently recomputed expected matrices.

#include "dcas/covering.hpp"
#include "dcas/incremental.hpp"

namespace fixtures {

inline dcas::CoveringSpace base_space() {
    dcas::CoveringSpace space({"x1", "x2", "x3", "x4"});
    space.add_element("C1", {"x1", "x4"});
    space.add_element("C2", {"x1", "x2", "x4"});
    space.add_element("C3", {"x3", "x4"});
    return space;
}

inline dcas::UpdateBatch base_batch() {
    dcas::UpdateBatch batch;
    batch.new_objects = {"x5", "x6"};
    batch.extensions = {{"C1", {"x5"}}, {"C2", {"x5"}}};
    batch.new_elements = {{"C4", {"x3", "x5", "x6"}}, {"C5", {"x1", "x6"}}};
    return batch;
}

inline dcas::BoolMatrix base_m() {
    return dcas::BoolMatrix::from_rows({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
}

inline dcas::BoolMatrix base_gamma() {
    return dcas::BoolMatrix::from_rows(
        {{1, 1, 0, 1}, {1, 1, 0, 1}, {0, 0, 1, 1}, {1, 1, 1, 1}});
}

inline dcas::BoolMatrix base_pi() {
    return dcas::BoolMatrix::from_rows(
        {{1, 0, 0, 1}, {1, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}});
}

// Updated 6x6 matrices, recomputed from the merged element lists. The
// row for x6 is (0,0,0,1,1) across C1..C5; gamma entries (4,6), (5,6),
// (6,4), (6,5) are 0,1,0,1.
inline dcas::BoolMatrix updated_m() {
    return dcas::BoolMatrix::from_rows({{1, 1, 0, 0, 1},
                                        {0, 1, 0, 0, 0},
                                        {0, 0, 1, 1, 0},
                                        {1, 1, 1, 0, 0},
                                        {1, 1, 0, 1, 0},
                                        {0, 0, 0, 1, 1}});
}

inline dcas::BoolMatrix updated_gamma() {
    return dcas::BoolMatrix::from_rows({{1, 1, 0, 1, 1, 1},
                                        {1, 1, 0, 1, 1, 0},
                                        {0, 0, 1, 1, 1, 1},
                                        {1, 1, 1, 1, 1, 0},
                                        {1, 1, 1, 1, 1, 1},
                                        {1, 0, 1, 0, 1, 1}});
}

inline dcas::BoolMatrix updated_pi() {
    return dcas::BoolMatrix::from_rows({{1, 0, 0, 0, 0, 0},
                                        {1, 1, 0, 1, 1, 0},
                                        {0, 0, 1, 0, 0, 0},
                                        {0, 0, 0, 1, 0, 0},
                                        {0, 0, 0, 0, 1, 0},
                                        {0, 0, 0, 0, 0, 1}});
}

} // namespace fixtures
