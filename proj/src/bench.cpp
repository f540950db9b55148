#include "dcas/bench.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

#include <fmt/core.h>

#include "dcas/errors.hpp"
#include "dcas/kernels.hpp"

namespace dcas::bench {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t nanos_since(Clock::time_point start) {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start)
            .count());
}

bool chance(std::mt19937_64& rng, double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

std::uint32_t pick(std::mt19937_64& rng, std::uint32_t bound) {
    return std::uniform_int_distribution<std::uint32_t>(0, bound - 1)(rng);
}

QuerySet random_query(const CoveringSpace& space, std::size_t size,
                      std::mt19937_64& rng) {
    std::vector<std::uint32_t> all(space.object_count());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = static_cast<std::uint32_t>(i);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min(size, all.size()));
    std::sort(all.begin(), all.end());
    return QuerySet{std::move(all)};
}

std::string diff_dump(const BoolMatrix& a, const BoolMatrix& b, const char* what) {
    std::string msg = fmt::format("{} mismatch ({}x{}):", what, a.rows(), a.cols());
    int shown = 0;
    for (std::size_t i = 0; i < a.rows() && shown < 8; ++i)
        for (std::size_t j = 0; j < a.cols() && shown < 8; ++j)
            if (a.get(i, j) != b.get(i, j)) {
                msg += fmt::format(" ({},{}): {} vs {};", i, j,
                                   int(a.get(i, j)), int(b.get(i, j)));
                ++shown;
            }
    return msg;
}

void tripwire_equal(const BoolMatrix& a, const BoolMatrix& b, const char* what) {
    if (a != b)
        throw TripwireError(diff_dump(a, b, what));
}

} // namespace

const char* algo_name(Algo a) {
    switch (a) {
    case Algo::NCS: return "NCS";
    case Algo::ICS: return "ICS";
    case Algo::NCX: return "NCX";
    case Algo::ICX: return "ICX";
    }
    return "?";
}

std::uint64_t BenchRecord::total_ops() const {
    std::uint64_t sum = 0;
    for (const auto& p : phases)
        sum += p.ops;
    return sum;
}

CoveringSpace gen_space(const GenParams& params, std::mt19937_64& rng) {
    std::vector<std::string> names;
    names.reserve(params.n);
    for (std::uint32_t i = 1; i <= params.n; ++i)
        names.push_back(fmt::format("x{}", i));
    CoveringSpace space(std::move(names));

    std::vector<std::vector<std::uint32_t>> members(params.m);
    for (std::uint32_t j = 0; j < params.m; ++j)
        for (std::uint32_t i = 0; i < params.n; ++i)
            if (chance(rng, params.density))
                members[j].push_back(i);

    // repair: no empty elements, no uncovered objects
    std::vector<bool> covered(params.n, false);
    for (auto& mem : members) {
        if (mem.empty())
            mem.push_back(pick(rng, params.n));
        for (auto i : mem)
            covered[i] = true;
    }
    for (std::uint32_t i = 0; i < params.n; ++i)
        if (!covered[i])
            members[pick(rng, params.m)].push_back(i);

    for (std::uint32_t j = 0; j < params.m; ++j)
        space.add_element_by_index(fmt::format("C{}", j + 1), std::move(members[j]));
    return space;
}

UpdateBatch gen_batch(const CoveringSpace& space, const GenParams& params,
                      std::mt19937_64& rng) {
    UpdateBatch batch;
    std::size_t base_n = space.object_count();
    for (std::uint32_t k = 0; k < params.t; ++k)
        batch.new_objects.push_back(fmt::format("x{}", base_n + k + 1));

    if (params.t > 0) {
        for (const auto& el : space.elements()) {
            if (!chance(rng, params.ext_prob))
                continue;
            std::vector<std::string> ext;
            for (const auto& o : batch.new_objects)
                if (chance(rng, params.density))
                    ext.push_back(o);
            if (ext.empty())
                ext.push_back(batch.new_objects[pick(rng, params.t)]);
            batch.extensions[el.name] = std::move(ext);
        }
    }

    std::size_t base_m = space.element_count();
    std::vector<bool> covered(params.t, false);
    for (std::uint32_t j = 0; j < params.l; ++j) {
        std::vector<std::string> mem;
        for (std::uint32_t i = 0; i < base_n; ++i)
            if (chance(rng, params.density))
                mem.push_back(space.object_name(i));
        for (std::uint32_t k = 0; k < params.t; ++k)
            if (chance(rng, params.density)) {
                mem.push_back(batch.new_objects[k]);
                covered[k] = true;
            }
        if (mem.empty()) {
            std::uint32_t i = pick(rng, static_cast<std::uint32_t>(base_n));
            mem.push_back(space.object_name(i));
        }
        batch.new_elements.emplace_back(fmt::format("C{}", base_m + j + 1),
                                        std::move(mem));
    }

    // repair: every new object covered by a new element or an extension
    for (std::uint32_t k = 0; k < params.t; ++k) {
        if (covered[k])
            continue;
        const std::string& obj = batch.new_objects[k];
        bool in_ext = false;
        for (const auto& [name, ext] : batch.extensions)
            for (const auto& o : ext)
                if (o == obj)
                    in_ext = true;
        if (in_ext)
            continue;
        if (params.l > 0) {
            batch.new_elements[pick(rng, params.l)].second.push_back(obj);
        } else {
            const auto& el = space.elements()[pick(rng, static_cast<std::uint32_t>(
                                                            space.element_count()))];
            batch.extensions[el.name].push_back(obj);
        }
    }
    return batch;
}

std::vector<BenchRecord> run_suite(const GenParams& params) {
    std::mt19937_64 rng(params.seed);
    CoveringSpace space = gen_space(params, rng);
    CharState state = build_char_state(space);

    std::vector<BenchRecord> records;
    for (std::uint32_t b = 0; b < params.batches; ++b) {
        UpdateBatch batch = gen_batch(state.space, params, rng);
        CoveringSpace merged = merge_space(state.space, batch);
        std::uint32_t n = static_cast<std::uint32_t>(state.space.object_count());
        std::uint32_t m = static_cast<std::uint32_t>(state.space.element_count());
        QuerySet x = random_query(merged, merged.object_count() / 2, rng);
        BoolMatrix xv = char_vector(merged, x);

        auto timed = [&](auto&& fn) -> std::pair<PhaseTiming, decltype(fn())> {
            kern::reset_op_count();
            auto start = Clock::now();
            auto result = fn();
            PhaseTiming pt{"", kern::op_count(), nanos_since(start)};
            return {pt, std::move(result)};
        };

        auto make_record = [&](Algo algo) {
            return BenchRecord{algo, n, m, params.t, params.l, {}};
        };

        // NCS: full rebuild of gamma from the merged space
        BenchRecord ncs = make_record(Algo::NCS);
        auto [ncs_build, gamma_full] = timed([&] {
            BoolMatrix mp = merged.matrix_rep();
            return bool_product(mp, mp.transpose());
        });
        ncs_build.phase = "matrix_build";
        ncs.phases.push_back(ncs_build);
        auto [ncs_approx, sh_full] = timed([&] {
            return std::pair{bool_product(gamma_full, xv), odot_product(gamma_full, xv)};
        });
        ncs_approx.phase = "approx";
        ncs.phases.push_back(ncs_approx);

        // ICS: delta blocks joined onto the stored gamma
        BenchRecord ics = make_record(Algo::ICS);
        auto [ics_build, gamma_incr] = timed([&] {
            return update_gamma(state.gamma, gamma_deltas(state, batch));
        });
        ics_build.phase = "delta_build";
        ics.phases.push_back(ics_build);
        auto [ics_approx, sh_incr] = timed([&] {
            return std::pair{bool_product(gamma_incr, xv), odot_product(gamma_incr, xv)};
        });
        ics_approx.phase = "approx";
        ics.phases.push_back(ics_approx);

        tripwire_equal(gamma_full, gamma_incr, "NCS/ICS gamma");
        tripwire_equal(sh_full.first, sh_incr.first, "NCS/ICS SH vector");
        tripwire_equal(sh_full.second, sh_incr.second, "NCS/ICS SL vector");

        // NCX: full rebuild of pi
        BenchRecord ncx = make_record(Algo::NCX);
        auto [ncx_build, pi_full] = timed([&] {
            BoolMatrix mp = merged.matrix_rep();
            return odot_product(mp, mp.transpose());
        });
        ncx_build.phase = "matrix_build";
        ncx.phases.push_back(ncx_build);
        auto [ncx_approx, xh_full] = timed([&] {
            return std::pair{bool_product(pi_full, xv), odot_product(pi_full, xv)};
        });
        ncx_approx.phase = "approx";
        ncx.phases.push_back(ncx_approx);

        // ICX: delta blocks met onto the stored pi
        BenchRecord icx = make_record(Algo::ICX);
        auto [icx_build, pi_incr] = timed([&] {
            return update_pi(state.pi, pi_deltas(state, batch));
        });
        icx_build.phase = "delta_build";
        icx.phases.push_back(icx_build);
        auto [icx_approx, xh_incr] = timed([&] {
            return std::pair{bool_product(pi_incr, xv), odot_product(pi_incr, xv)};
        });
        icx_approx.phase = "approx";
        icx.phases.push_back(icx_approx);

        tripwire_equal(pi_full, pi_incr, "NCX/ICX pi");
        tripwire_equal(xh_full.first, xh_incr.first, "NCX/ICX XH vector");
        tripwire_equal(xh_full.second, xh_incr.second, "NCX/ICX XL vector");

        records.push_back(std::move(ncs));
        records.push_back(std::move(ics));
        records.push_back(std::move(ncx));
        records.push_back(std::move(icx));

        state = apply_update(state, batch);
    }
    return records;
}

void write_csv(const std::vector<BenchRecord>& records, std::ostream& out) {
    out << "algo,n,m,t,l,phase,ops,nanos\n";
    for (const auto& r : records)
        for (const auto& p : r.phases)
            out << algo_name(r.algo) << ',' << r.n << ',' << r.m << ',' << r.t
                << ',' << r.l << ',' << p.phase << ',' << p.ops << ','
                << p.nanos << '\n';
}

} // namespace dcas::bench
