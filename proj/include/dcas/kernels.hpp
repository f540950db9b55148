#pragma once

#include <cstddef>
#include <cstdint>

// Word-level kernels behind BoolMatrix. Scalar reference versions always
// exist; an AVX2 variant is selected at runtime when the CPU supports it.
// All variants are bit-exact; the equivalence tests compare them directly.
//
// Every call bumps a thread-local word-operation counter by the number of
// words spanned. The counter is variant-independent (it counts logical
// word operations, not vector instructions), so benchmark op counts are
// deterministic across machines.

namespace dcas::kern {

using Word = std::uint64_t;

struct KernelTable {
    void (*or_into)(Word* dst, const Word* src, std::size_t nw);
    void (*and_into)(Word* dst, const Word* src, std::size_t nw);
    bool (*any_and)(const Word* a, const Word* b, std::size_t nw);
    // implies: true iff (a & ~b) == 0 over the span
    bool (*implies)(const Word* a, const Word* b, std::size_t nw);
    const char* name;
};

const KernelTable& scalar_table();
bool avx2_available();
const KernelTable& avx2_table(); // valid only if avx2_available()

enum class Variant { Auto, Scalar, Avx2 };

/// Force a variant (tests) or restore runtime selection with Auto.
void set_variant(Variant v);
const KernelTable& active_table();
const char* active_name();

std::uint64_t op_count();
void reset_op_count();

// Counted entry points used by BoolMatrix.
void or_into(Word* dst, const Word* src, std::size_t nw);
void and_into(Word* dst, const Word* src, std::size_t nw);
bool any_and(const Word* a, const Word* b, std::size_t nw);
bool implies(const Word* a, const Word* b, std::size_t nw);

} // namespace dcas::kern
