#include "dcas/kernels.hpp"

namespace dcas::kern {

namespace {

void scalar_or_into(Word* dst, const Word* src, std::size_t nw) {
    for (std::size_t i = 0; i < nw; ++i)
        dst[i] |= src[i];
}

void scalar_and_into(Word* dst, const Word* src, std::size_t nw) {
    for (std::size_t i = 0; i < nw; ++i)
        dst[i] &= src[i];
}

bool scalar_any_and(const Word* a, const Word* b, std::size_t nw) {
    for (std::size_t i = 0; i < nw; ++i)
        if (a[i] & b[i])
            return true;
    return false;
}

bool scalar_implies(const Word* a, const Word* b, std::size_t nw) {
    for (std::size_t i = 0; i < nw; ++i)
        if (a[i] & ~b[i])
            return false;
    return true;
}

} // namespace

const KernelTable& scalar_table() {
    static const KernelTable t{scalar_or_into, scalar_and_into,
                               scalar_any_and, scalar_implies, "scalar"};
    return t;
}

} // namespace dcas::kern
