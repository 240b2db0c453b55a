// AVX2 kernel variants. The convolution and walk kernels perform the exact
// scalar operation sequence per output (gathers replace indexed loads, no
// FMA contraction), so their results are bit-identical to the scalar
// reference; the reductions reassociate and agree only to rounding.

#if defined(SQWALK_HAVE_AVX2)

#include <immintrin.h>

#include <cstring>

#include "kernels_detail.hpp"
#include "sqwalk/kernels.hpp"

namespace sqwalk::kernels::avx2 {

void convolve(double* out, const double* p, const double* q, const int32_t* mul,
              const int32_t* inv, int order) {
    std::memset(out, 0, sizeof(double) * static_cast<std::size_t>(order));
    for (int g = 0; g < order; ++g) {
        const double pg = p[g];
        if (pg == 0.0)
            continue;
        const int32_t* row = mul + static_cast<std::size_t>(inv[g]) * order;
        const __m256d pgv = _mm256_set1_pd(pg);
        int h = 0;
        for (; h + 4 <= order; h += 4) {
            __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(row + h));
            __m256d qv = _mm256_i32gather_pd(q, idx, 8);
            __m256d acc = _mm256_loadu_pd(out + h);
            acc = _mm256_add_pd(acc, _mm256_mul_pd(pgv, qv));
            _mm256_storeu_pd(out + h, acc);
        }
        for (; h < order; ++h)
            out[h] += pg * q[row[h]];
    }
}

double sum(const double* x, int n) {
    __m256d acc = _mm256_setzero_pd();
    int i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i)
        s += x[i];
    return s;
}

double sum_sq_dev(const double* x, int n, double c) {
    const __m256d cv = _mm256_set1_pd(c);
    __m256d acc = _mm256_setzero_pd();
    int i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), cv);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) {
        double d = x[i] - c;
        s += d * d;
    }
    return s;
}

namespace {

// Exact u64 -> [0,1) conversion matching detail::u01 bit-for-bit: mantissas
// below 2^52 convert exactly via the exponent-bias trick.
inline __m256d u01x4(__m256i bits) {
    const __m256i magic = _mm256_set1_epi64x(0x4330000000000000LL); // bits of 2^52
    __m256i mant = _mm256_srli_epi64(bits, 12);
    __m256d d = _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(mant, magic)),
                              _mm256_set1_pd(0x1.0p52));
    return _mm256_mul_pd(d, _mm256_set1_pd(0x1.0p-52));
}

inline __m256i xorshift128plus_x4(__m256i& s0, __m256i& s1) {
    __m256i x = s0;
    const __m256i y = s1;
    const __m256i result = _mm256_add_epi64(x, y);
    s0 = y;
    x = _mm256_xor_si256(x, _mm256_slli_epi64(x, 23));
    s1 = _mm256_xor_si256(_mm256_xor_si256(x, y),
                          _mm256_xor_si256(_mm256_srli_epi64(x, 17), _mm256_srli_epi64(y, 26)));
    return result;
}

// detail::upper_index across four lanes; the halving schedule depends only
// on support_len, so all lanes run the same iterations.
inline __m256i upper_index_x4(const double* cum, int len, __m256d u) {
    __m256i lo = _mm256_setzero_si256();
    int n = len;
    while (n > 1) {
        int half = n >> 1;
        __m256i idx = _mm256_add_epi64(lo, _mm256_set1_epi64x(half - 1));
        __m256d c = _mm256_i64gather_pd(cum, idx, 8);
        __m256d le = _mm256_cmp_pd(c, u, _CMP_LE_OQ);
        lo = _mm256_add_epi64(lo, _mm256_and_si256(_mm256_castpd_si256(le),
                                                   _mm256_set1_epi64x(half)));
        n -= half;
    }
    return lo;
}

} // namespace

void walk_endpoints(uint64_t* counts, const double* cum, const int32_t* support,
                    int support_len, const int32_t* mul, int order, int steps,
                    uint64_t chains, uint64_t seed) {
    const __m128i order_v = _mm_set1_epi32(order);
    uint64_t chain = 0;
    for (; chain + 4 <= chains; chain += 4) {
        alignas(32) uint64_t s0l[4], s1l[4];
        for (int lane = 0; lane < 4; ++lane)
            detail::seed_chain(seed, chain + lane, s0l[lane], s1l[lane]);
        __m256i s0 = _mm256_load_si256(reinterpret_cast<const __m256i*>(s0l));
        __m256i s1 = _mm256_load_si256(reinterpret_cast<const __m256i*>(s1l));

        __m128i x = _mm_setzero_si128();
        for (int step = 0; step < steps; ++step) {
            __m256d u = u01x4(xorshift128plus_x4(s0, s1));
            __m256i k = upper_index_x4(cum, support_len, u);
            __m128i g = _mm256_i64gather_epi32(support, k, 4);
            __m128i idx = _mm_add_epi32(_mm_mullo_epi32(g, order_v), x);
            x = _mm_i32gather_epi32(mul, idx, 4);
        }

        alignas(16) int32_t xs[4];
        _mm_store_si128(reinterpret_cast<__m128i*>(xs), x);
        for (int lane = 0; lane < 4; ++lane)
            ++counts[xs[lane]];
    }
    // Tail chains keep their global index so the per-chain streams match the
    // scalar backend exactly.
    for (; chain < chains; ++chain) {
        uint64_t a, b;
        detail::seed_chain(seed, chain, a, b);
        int32_t x = 0;
        for (int step = 0; step < steps; ++step) {
            double u = detail::u01(detail::xorshift128plus(a, b));
            int32_t g = support[detail::upper_index(cum, support_len, u)];
            x = mul[static_cast<std::size_t>(g) * order + x];
        }
        ++counts[x];
    }
}

} // namespace sqwalk::kernels::avx2

#endif // SQWALK_HAVE_AVX2
