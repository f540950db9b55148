// AVX2 variants of the word kernels. Compiled with -mavx2; only reached
// after the runtime CPU check in kernels.cpp.

#include "dcas/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

namespace dcas::kern {

namespace {

constexpr std::size_t kLanes = 4; // 64-bit words per __m256i

void avx2_or_into(Word* dst, const Word* src, std::size_t nw) {
    std::size_t i = 0;
    for (; i + kLanes <= nw; i += kLanes) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                            _mm256_or_si256(d, s));
    }
    for (; i < nw; ++i)
        dst[i] |= src[i];
}

void avx2_and_into(Word* dst, const Word* src, std::size_t nw) {
    std::size_t i = 0;
    for (; i + kLanes <= nw; i += kLanes) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                            _mm256_and_si256(d, s));
    }
    for (; i < nw; ++i)
        dst[i] &= src[i];
}

bool avx2_any_and(const Word* a, const Word* b, std::size_t nw) {
    std::size_t i = 0;
    for (; i + kLanes <= nw; i += kLanes) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        if (!_mm256_testz_si256(va, vb))
            return true;
    }
    for (; i < nw; ++i)
        if (a[i] & b[i])
            return true;
    return false;
}

bool avx2_implies(const Word* a, const Word* b, std::size_t nw) {
    std::size_t i = 0;
    for (; i + kLanes <= nw; i += kLanes) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        // testc(b, a): (~b & a) == 0
        if (!_mm256_testc_si256(vb, va))
            return false;
    }
    for (; i < nw; ++i)
        if (a[i] & ~b[i])
            return false;
    return true;
}

} // namespace

const KernelTable& avx2_table() {
    static const KernelTable t{avx2_or_into, avx2_and_into,
                               avx2_any_and, avx2_implies, "avx2"};
    return t;
}

} // namespace dcas::kern

#else

namespace dcas::kern {

const KernelTable& avx2_table() {
    return scalar_table();
}

} // namespace dcas::kern

#endif
