#include "dcas/characteristic.hpp"

namespace dcas {

const char* approx_op_name(ApproxOp op) {
    switch (op) {
    case ApproxOp::SH: return "SH";
    case ApproxOp::SL: return "SL";
    case ApproxOp::XH: return "XH";
    case ApproxOp::XL: return "XL";
    case ApproxOp::IH: return "IH";
    case ApproxOp::IL: return "IL";
    }
    return "?";
}

ApproxResult make_approx_result(const CoveringSpace& space, ApproxOp op,
                                BoolMatrix vec) {
    ApproxResult r{op, std::move(vec), {}};
    for (std::size_t i = 0; i < space.object_count(); ++i)
        if (r.vector.get(i, 0))
            r.members.push_back(space.object_name(static_cast<std::uint32_t>(i)));
    return r;
}

CharState build_char_state(const CoveringSpace& space) {
    BoolMatrix m = space.matrix_rep(); // validates
    BoolMatrix mt = m.transpose();
    BoolMatrix gamma = bool_product(m, mt);
    BoolMatrix pi = odot_product(m, mt);
    return {space, std::move(m), std::move(gamma), std::move(pi)};
}

std::pair<ApproxResult, ApproxResult> second_approx(const CharState& state,
                                                    const QuerySet& x) {
    BoolMatrix xv = char_vector(state.space, x);
    return {make_approx_result(state.space, ApproxOp::SH, bool_product(state.gamma, xv)),
            make_approx_result(state.space, ApproxOp::SL, odot_product(state.gamma, xv))};
}

std::pair<ApproxResult, ApproxResult> sixth_approx(const CharState& state,
                                                   const QuerySet& x) {
    BoolMatrix xv = char_vector(state.space, x);
    return {make_approx_result(state.space, ApproxOp::XH, bool_product(state.pi, xv)),
            make_approx_result(state.space, ApproxOp::XL, odot_product(state.pi, xv))};
}

} // namespace dcas
