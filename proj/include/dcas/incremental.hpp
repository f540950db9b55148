#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dcas/characteristic.hpp"

namespace dcas {

/// An immigration batch: fresh objects, extensions of existing elements
/// (with new objects only), and fresh elements. Applying it enlarges the
/// space without touching any old-object/old-element membership.
struct UpdateBatch {
    std::vector<std::string> new_objects;
    std::map<std::string, std::vector<std::string>> extensions;
    std::vector<std::pair<std::string, std::vector<std::string>>> new_elements;

    /// Text format: optional `add-objects:` line, then any number of
    /// `extend NAME: ...` / `new NAME: ...` lines; '#' comments.
    static UpdateBatch parse(std::istream& in);
    static UpdateBatch parse_file(const std::string& path);

    std::size_t object_delta() const { return new_objects.size(); }
    std::size_t element_delta() const { return new_elements.size(); }
};

/// Corner blocks of the updated type-1 matrix:
/// gamma+ = [[gamma OR d1, d2^T], [d2, d3]].
struct GammaDeltas {
    BoolMatrix d1; // n x n, from the new-element columns of old rows
    BoolMatrix d2; // t x n, new rows against old rows
    BoolMatrix d3; // t x t, new rows against themselves
};

/// Corner blocks of the updated type-2 matrix:
/// pi+ = [[pi AND d1, d3], [d2, d4]]. d3 != d2^T in general because the
/// implication product is not symmetric.
struct PiDeltas {
    BoolMatrix d1; // n x n
    BoolMatrix d2; // t x n
    BoolMatrix d3; // n x t
    BoolMatrix d4; // t x t
};

/// Batch invariants against a state. Strict mode additionally requires
/// t >= 2, l >= 2, and every new object covered by the new elements alone.
ValidationReport validate_batch(const CharState& state, const UpdateBatch& batch,
                                bool strict = false);

/// The merged (U+, C+) space.
CoveringSpace merge_space(const CoveringSpace& space, const UpdateBatch& batch);

/// (n+t) x (m+l) membership matrix; the top-left n x m block equals the
/// stored M bitwise.
BoolMatrix extend_matrix_rep(const CharState& state, const UpdateBatch& batch);

GammaDeltas gamma_deltas(const CharState& state, const UpdateBatch& batch);
BoolMatrix update_gamma(const BoolMatrix& gamma, const GammaDeltas& deltas);

PiDeltas pi_deltas(const CharState& state, const UpdateBatch& batch);
BoolMatrix update_pi(const BoolMatrix& pi, const PiDeltas& deltas);

/// Pure state transition: the old n x n blocks of gamma/pi are reused
/// through the delta joins/meets, never recomputed from M.
CharState apply_update(const CharState& state, const UpdateBatch& batch,
                       bool strict = false);

} // namespace dcas
