#pragma once

#include <cstddef>
#include <cstdint>

// Numeric inner loops shared by the oracle and the sampler: group-algebra
// convolution, reductions, and batched random-walk stepping. Each kernel has
// a scalar reference implementation and an AVX2 variant; the active backend
// is picked at runtime (cpuid) and can be forced for testing. The AVX2
// convolution and walk kernels are bit-identical to the scalar reference;
// the reductions agree to rounding.

namespace sqwalk::kernels {

enum class Backend { Scalar, Avx2 };

bool available(Backend b);
Backend active();
void set_active(Backend b); // throws std::invalid_argument if unavailable
const char* name(Backend b);

// out[h] = sum_g p[g] * q[mul[inv[g]*order + h]]   (convolution (p*q)(h))
void convolve(double* out, const double* p, const double* q, const int32_t* mul,
              const int32_t* inv, int order);

double sum(const double* x, int n);

// sum_i (x[i] - c)^2
double sum_sq_dev(const double* x, int n, double c);

// Runs `chains` independent walks of `steps` left-multiplication steps from
// the identity and accumulates endpoint counts (counts has `order` slots,
// not cleared here). Steps draw from the distribution given by the strictly
// increasing cumulative array `cum` over `support` (element indices).
// Each chain owns an RNG stream derived from (seed, chain), so the result is
// independent of backend, chunking, and execution order.
void walk_endpoints(uint64_t* counts, const double* cum, const int32_t* support,
                    int support_len, const int32_t* mul, int order, int steps,
                    uint64_t chains, uint64_t seed);

// Identifier of the sampling RNG scheme, for report metadata.
inline constexpr const char* kWalkRngId = "xorshift128plus(per-chain, splitmix64-seeded)";

// Direct entry points, used by the equivalence tests.
namespace scalar {
void convolve(double* out, const double* p, const double* q, const int32_t* mul,
              const int32_t* inv, int order);
double sum(const double* x, int n);
double sum_sq_dev(const double* x, int n, double c);
void walk_endpoints(uint64_t* counts, const double* cum, const int32_t* support,
                    int support_len, const int32_t* mul, int order, int steps,
                    uint64_t chains, uint64_t seed);
} // namespace scalar

#if defined(SQWALK_HAVE_AVX2)
namespace avx2 {
void convolve(double* out, const double* p, const double* q, const int32_t* mul,
              const int32_t* inv, int order);
double sum(const double* x, int n);
double sum_sq_dev(const double* x, int n, double c);
void walk_endpoints(uint64_t* counts, const double* cum, const int32_t* support,
                    int support_len, const int32_t* mul, int order, int steps,
                    uint64_t chains, uint64_t seed);
} // namespace avx2
#endif

} // namespace sqwalk::kernels
