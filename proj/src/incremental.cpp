#include "dcas/incremental.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include <fmt/core.h>

#include "dcas/errors.hpp"

namespace dcas {

namespace {

std::vector<std::string> split_tokens(const std::string& s) {
    std::istringstream iss(s);
    std::vector<std::string> out;
    std::string tok;
    while (iss >> tok)
        out.push_back(tok);
    return out;
}

void throw_on_violations(const ValidationReport& rep, const char* what) {
    if (rep.ok())
        return;
    std::string msg = fmt::format("invalid {}:", what);
    for (const auto& v : rep.violations)
        msg += " " + v + ";";
    throw ValidationError(msg);
}

} // namespace

UpdateBatch UpdateBatch::parse(std::istream& in) {
    UpdateBatch batch;
    std::string line;
    std::size_t line_no = 0;
    bool saw_add = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto pos = line.find('#'); pos != std::string::npos)
            line.erase(pos);
        auto toks = split_tokens(line);
        if (toks.empty())
            continue;
        if (toks[0] == "add-objects:") {
            if (saw_add)
                throw ParseError(fmt::format("line {}: duplicate 'add-objects:'", line_no));
            saw_add = true;
            for (std::size_t i = 1; i < toks.size(); ++i)
                batch.new_objects.push_back(toks[i]);
            continue;
        }
        if ((toks[0] != "extend" && toks[0] != "new") || toks.size() < 2 ||
            toks[1].back() != ':')
            throw ParseError(fmt::format(
                "line {}: expected 'add-objects:', 'extend NAME: ...' or 'new NAME: ...'",
                line_no));
        std::string name = toks[1].substr(0, toks[1].size() - 1);
        if (name.empty())
            throw ParseError(fmt::format("line {}: empty name", line_no));
        std::vector<std::string> members(toks.begin() + 2, toks.end());
        if (toks[0] == "extend") {
            auto& dst = batch.extensions[name];
            dst.insert(dst.end(), members.begin(), members.end());
        } else {
            batch.new_elements.emplace_back(name, members);
        }
    }
    return batch;
}

UpdateBatch UpdateBatch::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(fmt::format("cannot open '{}'", path));
    return UpdateBatch::parse(in);
}

ValidationReport validate_batch(const CharState& state, const UpdateBatch& batch,
                                bool strict) {
    ValidationReport rep;
    const CoveringSpace& space = state.space;

    std::set<std::string> new_obj_set;
    for (const auto& o : batch.new_objects) {
        if (space.has_object(o))
            rep.violations.push_back(fmt::format("new object '{}' already exists", o));
        if (!new_obj_set.insert(o).second)
            rep.violations.push_back(fmt::format("duplicate new object '{}'", o));
    }

    std::set<std::string> covered_by_new, covered_by_ext;
    for (const auto& [name, ext] : batch.extensions) {
        if (!space.has_element(name))
            rep.violations.push_back(fmt::format("extension of unknown element '{}'", name));
        if (ext.empty())
            rep.violations.push_back(fmt::format("empty extension of '{}'", name));
        for (const auto& o : ext) {
            if (!new_obj_set.count(o))
                rep.violations.push_back(fmt::format(
                    "extension of '{}' must contain only new objects, got '{}'", name, o));
            else
                covered_by_ext.insert(o);
        }
    }

    std::set<std::string> new_el_names;
    for (const auto& [name, members] : batch.new_elements) {
        if (space.has_element(name))
            rep.violations.push_back(fmt::format("new element '{}' already exists", name));
        if (!new_el_names.insert(name).second)
            rep.violations.push_back(fmt::format("duplicate new element '{}'", name));
        if (members.empty())
            rep.violations.push_back(fmt::format("new element '{}' is empty", name));
        for (const auto& o : members) {
            if (new_obj_set.count(o))
                covered_by_new.insert(o);
            else if (!space.has_object(o))
                rep.violations.push_back(fmt::format(
                    "new element '{}' references unknown object '{}'", name, o));
        }
    }

    for (const auto& o : batch.new_objects) {
        if (strict) {
            if (!covered_by_new.count(o))
                rep.violations.push_back(fmt::format(
                    "strict: new object '{}' not covered by any new element", o));
        } else if (!covered_by_new.count(o) && !covered_by_ext.count(o)) {
            rep.violations.push_back(fmt::format("uncovered new object '{}'", o));
        }
    }

    if (strict) {
        if (batch.new_objects.size() < 2)
            rep.violations.push_back(fmt::format(
                "strict: t >= 2 required, got t = {}", batch.new_objects.size()));
        if (batch.new_elements.size() < 2)
            rep.violations.push_back(fmt::format(
                "strict: l >= 2 required, got l = {}", batch.new_elements.size()));
    }
    return rep;
}

CoveringSpace merge_space(const CoveringSpace& space, const UpdateBatch& batch) {
    CoveringSpace merged = space;
    for (const auto& o : batch.new_objects)
        merged.add_object(o);
    for (const auto& [name, ext] : batch.extensions) {
        std::vector<std::uint32_t> idx;
        idx.reserve(ext.size());
        for (const auto& o : ext)
            idx.push_back(merged.object_index(o));
        merged.extend_element(name, idx);
    }
    for (const auto& [name, members] : batch.new_elements)
        merged.add_element(name, members);
    return merged;
}

BoolMatrix extend_matrix_rep(const CharState& state, const UpdateBatch& batch) {
    throw_on_violations(validate_batch(state, batch), "batch");
    std::size_t n = state.m.rows(), m = state.m.cols();
    std::size_t t = batch.object_delta(), l = batch.element_delta();
    CoveringSpace merged = merge_space(state.space, batch);

    BoolMatrix mp(n + t, m + l);
    // old block is carried over bitwise; extensions touch only new rows
    for (std::size_t i = 0; i < n; ++i) {
        auto src = state.m.row(i);
        auto dst = mp.row(i);
        std::copy(src.begin(), src.end(), dst.begin());
    }
    for (std::size_t j = 0; j < m + l; ++j)
        for (auto i : merged.elements()[j].members)
            if (i >= n || j >= m)
                mp.set(i, j, true);
    return mp;
}

namespace {

struct Slices {
    BoolMatrix new_cols; // n x l
    BoolMatrix new_rows; // t x (m+l)
    BoolMatrix old_rows; // n x (m+l)
};

Slices slice_extended(const BoolMatrix& mp, std::size_t n, std::size_t m,
                      std::size_t t, std::size_t l) {
    return {mp.submatrix(0, n, m, m + l),
            mp.submatrix(n, n + t, 0, m + l),
            mp.submatrix(0, n, 0, m + l)};
}

GammaDeltas gamma_deltas_from(const Slices& s) {
    GammaDeltas d;
    d.d1 = bool_product(s.new_cols, s.new_cols.transpose());
    d.d2 = bool_product(s.new_rows, s.old_rows.transpose());
    d.d3 = bool_product(s.new_rows, s.new_rows.transpose());
    return d;
}

PiDeltas pi_deltas_from(const Slices& s) {
    PiDeltas d;
    d.d1 = odot_product(s.new_cols, s.new_cols.transpose());
    d.d2 = odot_product(s.new_rows, s.old_rows.transpose());
    d.d3 = odot_product(s.old_rows, s.new_rows.transpose());
    d.d4 = odot_product(s.new_rows, s.new_rows.transpose());
    return d;
}

} // namespace

GammaDeltas gamma_deltas(const CharState& state, const UpdateBatch& batch) {
    BoolMatrix mp = extend_matrix_rep(state, batch);
    return gamma_deltas_from(slice_extended(mp, state.m.rows(), state.m.cols(),
                                            batch.object_delta(),
                                            batch.element_delta()));
}

BoolMatrix update_gamma(const BoolMatrix& gamma, const GammaDeltas& deltas) {
    if (deltas.d1.rows() != gamma.rows() || deltas.d1.cols() != gamma.cols() ||
        deltas.d2.cols() != gamma.rows() || deltas.d3.rows() != deltas.d2.rows() ||
        deltas.d3.cols() != deltas.d2.rows())
        throw DimensionError(fmt::format(
            "update_gamma: non-conformal deltas for gamma {}x{}: d1 {}x{}, d2 {}x{}, d3 {}x{}",
            gamma.rows(), gamma.cols(), deltas.d1.rows(), deltas.d1.cols(),
            deltas.d2.rows(), deltas.d2.cols(), deltas.d3.rows(), deltas.d3.cols()));
    // border blocks of the padded matrix are zero, so the join keeps the
    // delta blocks verbatim; only the old block needs the elementwise OR
    return block_compose(elementwise_or(gamma, deltas.d1), deltas.d2.transpose(),
                         deltas.d2, deltas.d3);
}

PiDeltas pi_deltas(const CharState& state, const UpdateBatch& batch) {
    BoolMatrix mp = extend_matrix_rep(state, batch);
    return pi_deltas_from(slice_extended(mp, state.m.rows(), state.m.cols(),
                                         batch.object_delta(),
                                         batch.element_delta()));
}

BoolMatrix update_pi(const BoolMatrix& pi, const PiDeltas& deltas) {
    if (deltas.d1.rows() != pi.rows() || deltas.d1.cols() != pi.cols() ||
        deltas.d2.cols() != pi.rows() || deltas.d3.rows() != pi.rows() ||
        deltas.d3.cols() != deltas.d2.rows() ||
        deltas.d4.rows() != deltas.d2.rows() || deltas.d4.cols() != deltas.d2.rows())
        throw DimensionError(fmt::format(
            "update_pi: non-conformal deltas for pi {}x{}: d1 {}x{}, d2 {}x{}, d3 {}x{}, d4 {}x{}",
            pi.rows(), pi.cols(), deltas.d1.rows(), deltas.d1.cols(),
            deltas.d2.rows(), deltas.d2.cols(), deltas.d3.rows(), deltas.d3.cols(),
            deltas.d4.rows(), deltas.d4.cols()));
    // border blocks of the padded matrix are all-ones, so the meet keeps
    // the delta blocks verbatim
    return block_compose(elementwise_and(pi, deltas.d1), deltas.d3,
                         deltas.d2, deltas.d4);
}

CharState apply_update(const CharState& state, const UpdateBatch& batch,
                       bool strict) {
    throw_on_violations(validate_batch(state, batch, strict), "batch");
    BoolMatrix mp = extend_matrix_rep(state, batch);
    Slices s = slice_extended(mp, state.m.rows(), state.m.cols(),
                              batch.object_delta(), batch.element_delta());
    BoolMatrix gamma = update_gamma(state.gamma, gamma_deltas_from(s));
    BoolMatrix pi = update_pi(state.pi, pi_deltas_from(s));
    CoveringSpace merged = merge_space(state.space, batch);
    return {std::move(merged), std::move(mp), std::move(gamma), std::move(pi)};
}

} // namespace dcas
