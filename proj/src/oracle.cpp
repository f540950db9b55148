#include "dcas/oracle.hpp"

#include <algorithm>

#include "dcas/errors.hpp"

namespace dcas::oracle {

namespace {

ObjectSet to_set(const QuerySet& x) {
    return ObjectSet(x.members.begin(), x.members.end());
}

bool meets(const std::vector<std::uint32_t>& c, const ObjectSet& x) {
    for (auto i : c)
        if (x.count(i))
            return true;
    return false;
}

bool contained(const std::vector<std::uint32_t>& c, const ObjectSet& x) {
    for (auto i : c)
        if (!x.count(i))
            return false;
    return true;
}

ObjectSet upper_second(const CoveringSpace& space, const ObjectSet& x) {
    ObjectSet sh;
    for (const auto& el : space.elements())
        if (meets(el.members, x))
            sh.insert(el.members.begin(), el.members.end());
    return sh;
}

void check_query(const CoveringSpace& space, const QuerySet& x) {
    for (auto i : x.members)
        if (i >= space.object_count())
            throw NameError("query index outside the universe");
}

} // namespace

std::pair<ObjectSet, ObjectSet> oracle_second(const CoveringSpace& space,
                                              const QuerySet& x) {
    check_query(space, x);
    ObjectSet xs = to_set(x);
    ObjectSet sh = upper_second(space, xs);
    // SL(X) = [SH(X^c)]^c
    ObjectSet xc;
    for (std::uint32_t i = 0; i < space.object_count(); ++i)
        if (!xs.count(i))
            xc.insert(i);
    ObjectSet sh_xc = upper_second(space, xc);
    ObjectSet sl;
    for (std::uint32_t i = 0; i < space.object_count(); ++i)
        if (!sh_xc.count(i))
            sl.insert(i);
    return {sh, sl};
}

std::pair<ObjectSet, ObjectSet> oracle_fifth(const CoveringSpace& space,
                                             const QuerySet& x) {
    check_query(space, x);
    ObjectSet xs = to_set(x);
    ObjectSet ih, il;
    for (std::uint32_t i = 0; i < space.object_count(); ++i) {
        auto nb = space.neighborhood(i);
        if (meets(nb, xs))
            ih.insert(nb.begin(), nb.end());
        if (contained(nb, xs))
            il.insert(nb.begin(), nb.end());
    }
    return {ih, il};
}

std::pair<ObjectSet, ObjectSet> oracle_sixth(const CoveringSpace& space,
                                             const QuerySet& x) {
    check_query(space, x);
    ObjectSet xs = to_set(x);
    ObjectSet xh, xl;
    for (std::uint32_t i = 0; i < space.object_count(); ++i) {
        auto nb = space.neighborhood(i);
        if (meets(nb, xs))
            xh.insert(i);
        if (contained(nb, xs))
            xl.insert(i);
    }
    return {xh, xl};
}

std::pair<BoolMatrix, BoolMatrix> oracle_char_matrices(const CoveringSpace& space) {
    auto rep = space.validate();
    if (!rep.ok())
        throw ValidationError("oracle_char_matrices: invalid covering");
    std::size_t n = space.object_count();
    BoolMatrix gamma(n, n), pi(n, n);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
            bool shared = false;
            for (const auto& el : space.elements()) {
                if (std::binary_search(el.members.begin(), el.members.end(), i) &&
                    std::binary_search(el.members.begin(), el.members.end(), j)) {
                    shared = true;
                    break;
                }
            }
            if (shared)
                gamma.set(i, j, true);
        }
        auto nb = space.neighborhood(i);
        for (auto j : nb)
            pi.set(i, j, true);
    }
    return {gamma, pi};
}

} // namespace dcas::oracle
