#include "vtrlab/vec/ops.hpp"

#include <cmath>
#include <stdexcept>

namespace vtrlab::vec {

namespace scalar {

double dot(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double sum(const double* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i];
    return acc;
}

double sum_sq_diff(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

double abs_diff_sum(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += std::abs(a[i] - b[i]);
    return acc;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double max_abs(const double* a, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(a[i]));
    return m;
}

} // namespace scalar

namespace {

constexpr Ops kScalarOps{scalar::dot,          scalar::sum,  scalar::sum_sq_diff,
                         scalar::abs_diff_sum, scalar::axpy, scalar::max_abs};

constexpr Ops kAvx2Ops{avx2::dot,          avx2::sum,  avx2::sum_sq_diff,
                       avx2::abs_diff_sum, avx2::axpy, avx2::max_abs};

struct Dispatch {
    const Ops* ops;
    Backend backend;
    Dispatch() {
        if (avx2::supported()) {
            ops = &kAvx2Ops;
            backend = Backend::avx2;
        } else {
            ops = &kScalarOps;
            backend = Backend::scalar;
        }
    }
};

Dispatch& dispatch() {
    static Dispatch d;
    return d;
}

} // namespace

const Ops& active() { return *dispatch().ops; }

Backend active_backend() { return dispatch().backend; }

std::string_view backend_name() {
    return dispatch().backend == Backend::avx2 ? "avx2" : "scalar";
}

void force_backend(Backend b) {
    if (b == Backend::avx2) {
        if (!avx2::supported()) throw std::runtime_error("avx2 backend not supported on this CPU");
        dispatch().ops = &kAvx2Ops;
    } else {
        dispatch().ops = &kScalarOps;
    }
    dispatch().backend = b;
}

} // namespace vtrlab::vec
