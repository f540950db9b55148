#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "dcas/incremental.hpp"

namespace dcas::bench {

/// Parameters for random dynamic-covering generation. Output is fully
/// deterministic for a fixed seed.
struct GenParams {
    std::uint32_t n = 100;       // initial objects
    std::uint32_t m = 20;        // initial elements
    double density = 0.3;        // membership probability
    std::uint32_t t = 2;         // new objects per batch
    std::uint32_t l = 2;         // new elements per batch
    double ext_prob = 0.2;       // chance an old element is extended
    std::uint32_t batches = 1;
    std::uint64_t seed = 1;
};

/// Random covering; a repair pass adds each uncovered object to one
/// uniformly chosen element, so validate() always passes.
CoveringSpace gen_space(const GenParams& params, std::mt19937_64& rng);

/// Random batch against a space; repair covers stray new objects with a
/// new element (or an extension when l = 0).
UpdateBatch gen_batch(const CoveringSpace& space, const GenParams& params,
                      std::mt19937_64& rng);

enum class Algo { NCS, ICS, NCX, ICX };
const char* algo_name(Algo a);

struct PhaseTiming {
    std::string phase; // "matrix_build", "delta_build", "approx"
    std::uint64_t ops = 0;
    std::uint64_t nanos = 0;
};

struct BenchRecord {
    Algo algo;
    std::uint32_t n, m, t, l;
    std::vector<PhaseTiming> phases;

    std::uint64_t total_ops() const;
};

/// Runs every batch through all four pipelines, asserting bitwise-equal
/// matrices and identical approximation answers between the incremental
/// and non-incremental routes. A mismatch throws TripwireError.
std::vector<BenchRecord> run_suite(const GenParams& params);

/// CSV with header `algo,n,m,t,l,phase,ops,nanos`.
void write_csv(const std::vector<BenchRecord>& records, std::ostream& out);

} // namespace dcas::bench
