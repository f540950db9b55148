#include "dcas/kernels.hpp"

namespace dcas::kern {

namespace {

thread_local std::uint64_t g_op_count = 0;
Variant g_variant = Variant::Auto;

const KernelTable* runtime_table() {
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2_available())
        return &avx2_table();
#endif
    return &scalar_table();
}

const KernelTable* resolve() {
    switch (g_variant) {
    case Variant::Scalar: return &scalar_table();
    case Variant::Avx2: return &avx2_table();
    case Variant::Auto: break;
    }
    static const KernelTable* auto_table = runtime_table();
    return auto_table;
}

} // namespace

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

void set_variant(Variant v) {
    g_variant = v;
}

const KernelTable& active_table() {
    return *resolve();
}

const char* active_name() {
    return resolve()->name;
}

std::uint64_t op_count() {
    return g_op_count;
}

void reset_op_count() {
    g_op_count = 0;
}

void or_into(Word* dst, const Word* src, std::size_t nw) {
    g_op_count += nw;
    resolve()->or_into(dst, src, nw);
}

void and_into(Word* dst, const Word* src, std::size_t nw) {
    g_op_count += nw;
    resolve()->and_into(dst, src, nw);
}

bool any_and(const Word* a, const Word* b, std::size_t nw) {
    g_op_count += nw;
    return resolve()->any_and(a, b, nw);
}

bool implies(const Word* a, const Word* b, std::size_t nw) {
    g_op_count += nw;
    return resolve()->implies(a, b, nw);
}

} // namespace dcas::kern
