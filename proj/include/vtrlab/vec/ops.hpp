#pragma once

// Dense double-precision kernels used by the inner loops (row/value dot
// products, squared prediction gaps, gram accumulation).  A scalar reference
// implementation always exists; an AVX2+FMA variant is selected at runtime
// when the CPU supports it.  Both lanes are exposed so tests can check them
// against each other.

#include <cstddef>
#include <span>
#include <string_view>

namespace vtrlab::vec {

enum class Backend { scalar, avx2 };

struct Ops {
    double (*dot)(const double*, const double*, std::size_t);
    double (*sum)(const double*, std::size_t);
    double (*sum_sq_diff)(const double*, const double*, std::size_t);
    double (*abs_diff_sum)(const double*, const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
    double (*max_abs)(const double*, std::size_t);
};

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
double sum(const double* a, std::size_t n);
double sum_sq_diff(const double* a, const double* b, std::size_t n);
double abs_diff_sum(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
double max_abs(const double* a, std::size_t n);
} // namespace scalar

namespace avx2 {
bool supported();
double dot(const double* a, const double* b, std::size_t n);
double sum(const double* a, std::size_t n);
double sum_sq_diff(const double* a, const double* b, std::size_t n);
double abs_diff_sum(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
double max_abs(const double* a, std::size_t n);
} // namespace avx2

const Ops& active();
Backend active_backend();
std::string_view backend_name();

/// Force a backend (tests / benchmarking). Throws if unsupported on this CPU.
void force_backend(Backend b);

inline double dot(std::span<const double> a, std::span<const double> b) {
    return active().dot(a.data(), b.data(), a.size());
}
inline double sum(std::span<const double> a) { return active().sum(a.data(), a.size()); }
inline double sum_sq_diff(std::span<const double> a, std::span<const double> b) {
    return active().sum_sq_diff(a.data(), b.data(), a.size());
}
inline double abs_diff_sum(std::span<const double> a, std::span<const double> b) {
    return active().abs_diff_sum(a.data(), b.data(), a.size());
}
inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    active().axpy(alpha, x.data(), y.data(), x.size());
}
inline double max_abs(std::span<const double> a) { return active().max_abs(a.data(), a.size()); }

} // namespace vtrlab::vec
