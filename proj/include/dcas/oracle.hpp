#pragma once

#include <cstdint>
#include <set>
#include <utility>

#include "dcas/boolmat.hpp"
#include "dcas/covering.hpp"

// Set-theoretic reference implementations of the three approximation
// pairs, written with deliberately naive loops over plain sets. These
// are the ground truth the matrix path is checked against; they must
// stay independent of BoolMatrix products.

namespace dcas::oracle {

using ObjectSet = std::set<std::uint32_t>;

/// SH = union of elements meeting X; SL = complement of SH(complement X).
std::pair<ObjectSet, ObjectSet> oracle_second(const CoveringSpace& space,
                                              const QuerySet& x);

/// IH = union of neighborhoods meeting X; IL = union of neighborhoods
/// contained in X.
std::pair<ObjectSet, ObjectSet> oracle_fifth(const CoveringSpace& space,
                                             const QuerySet& x);

/// XH = objects whose neighborhood meets X; XL = those whose
/// neighborhood is contained in X.
std::pair<ObjectSet, ObjectSet> oracle_sixth(const CoveringSpace& space,
                                             const QuerySet& x);

/// Entrywise reference for the characteristic matrices:
/// gamma(i,j) = 1 iff some element contains both objects,
/// pi(i,j) = 1 iff object j lies in the neighborhood of object i.
std::pair<BoolMatrix, BoolMatrix> oracle_char_matrices(const CoveringSpace& space);

} // namespace dcas::oracle
