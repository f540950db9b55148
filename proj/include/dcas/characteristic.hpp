#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dcas/boolmat.hpp"
#include "dcas/covering.hpp"

namespace dcas {

enum class ApproxOp { SH, SL, XH, XL, IH, IL };

const char* approx_op_name(ApproxOp op);

/// One approximation operator applied to one query set: the raw 0/1
/// membership column plus the resolved object names.
struct ApproxResult {
    ApproxOp op;
    BoolMatrix vector; // n x 1
    std::vector<std::string> members;
};

ApproxResult make_approx_result(const CoveringSpace& space, ApproxOp op,
                                BoolMatrix vec);

/// A covering space together with its membership matrix M and both
/// characteristic matrices. gamma = M * M^T (Boolean product),
/// pi = M (*) M^T (implication product); both re-derivable from M.
struct CharState {
    CoveringSpace space;
    BoolMatrix m;     // n x m
    BoolMatrix gamma; // n x n
    BoolMatrix pi;    // n x n
};

CharState build_char_state(const CoveringSpace& space);

/// Upper/lower second approximations in matrix form:
/// SH vector = gamma . X, SL vector = gamma (*) X.
std::pair<ApproxResult, ApproxResult> second_approx(const CharState& state,
                                                    const QuerySet& x);

/// Upper/lower sixth approximations: same shapes against pi.
std::pair<ApproxResult, ApproxResult> sixth_approx(const CharState& state,
                                                   const QuerySet& x);

} // namespace dcas
