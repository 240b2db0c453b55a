#include "sqwalk/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "kernels_detail.hpp"

namespace sqwalk::kernels {

namespace scalar {

void convolve(double* out, const double* p, const double* q, const int32_t* mul,
              const int32_t* inv, int order) {
    std::memset(out, 0, sizeof(double) * static_cast<std::size_t>(order));
    for (int g = 0; g < order; ++g) {
        const double pg = p[g];
        if (pg == 0.0)
            continue;
        const int32_t* row = mul + static_cast<std::size_t>(inv[g]) * order;
        for (int h = 0; h < order; ++h)
            out[h] += pg * q[row[h]];
    }
}

double sum(const double* x, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        s += x[i];
    return s;
}

double sum_sq_dev(const double* x, int n, double c) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        double d = x[i] - c;
        s += d * d;
    }
    return s;
}

void walk_endpoints(uint64_t* counts, const double* cum, const int32_t* support,
                    int support_len, const int32_t* mul, int order, int steps,
                    uint64_t chains, uint64_t seed) {
    for (uint64_t chain = 0; chain < chains; ++chain) {
        uint64_t s0, s1;
        detail::seed_chain(seed, chain, s0, s1);
        int32_t x = 0;
        for (int step = 0; step < steps; ++step) {
            double u = detail::u01(detail::xorshift128plus(s0, s1));
            int32_t g = support[detail::upper_index(cum, support_len, u)];
            x = mul[static_cast<std::size_t>(g) * order + x];
        }
        ++counts[x];
    }
}

} // namespace scalar

namespace {

bool cpu_has_avx2() {
#if defined(SQWALK_HAVE_AVX2)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend pick_default() {
    if (const char* env = std::getenv("SQWALK_KERNELS")) {
        std::string v(env);
        if (v == "scalar")
            return Backend::Scalar;
        if (v == "avx2" && cpu_has_avx2())
            return Backend::Avx2;
    }
    return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

Backend g_active = pick_default();

} // namespace

bool available(Backend b) {
    switch (b) {
    case Backend::Scalar:
        return true;
    case Backend::Avx2:
        return cpu_has_avx2();
    }
    return false;
}

Backend active() { return g_active; }

void set_active(Backend b) {
    if (!available(b))
        throw std::invalid_argument(std::string("kernel backend unavailable: ") + name(b));
    g_active = b;
}

const char* name(Backend b) {
    switch (b) {
    case Backend::Scalar:
        return "scalar";
    case Backend::Avx2:
        return "avx2";
    }
    return "?";
}

void convolve(double* out, const double* p, const double* q, const int32_t* mul,
              const int32_t* inv, int order) {
#if defined(SQWALK_HAVE_AVX2)
    if (g_active == Backend::Avx2)
        return avx2::convolve(out, p, q, mul, inv, order);
#endif
    scalar::convolve(out, p, q, mul, inv, order);
}

double sum(const double* x, int n) {
#if defined(SQWALK_HAVE_AVX2)
    if (g_active == Backend::Avx2)
        return avx2::sum(x, n);
#endif
    return scalar::sum(x, n);
}

double sum_sq_dev(const double* x, int n, double c) {
#if defined(SQWALK_HAVE_AVX2)
    if (g_active == Backend::Avx2)
        return avx2::sum_sq_dev(x, n, c);
#endif
    return scalar::sum_sq_dev(x, n, c);
}

void walk_endpoints(uint64_t* counts, const double* cum, const int32_t* support,
                    int support_len, const int32_t* mul, int order, int steps,
                    uint64_t chains, uint64_t seed) {
#if defined(SQWALK_HAVE_AVX2)
    if (g_active == Backend::Avx2)
        return avx2::walk_endpoints(counts, cum, support, support_len, mul, order, steps,
                                    chains, seed);
#endif
    scalar::walk_endpoints(counts, cum, support, support_len, mul, order, steps, chains, seed);
}

} // namespace sqwalk::kernels
