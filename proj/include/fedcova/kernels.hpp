#pragma once

#include <cstddef>

// Data-parallel inner loops shared by the whole library.
//
// Every kernel has a scalar reference implementation and, on hosts that
// support it, a SIMD variant selected once at startup.  The SIMD variants are
// equivalence-tested against the scalar references; they may reassociate
// floating-point sums, so results agree to tolerance rather than bit-for-bit.
// On a given host the selected variant is stable, which keeps whole-run
// determinism intact.

namespace fedcova::kernels {

enum class Backend { Scalar, Avx2, Neon };

// Backend chosen for this process (auto-detected on first use).
Backend active_backend();
const char* backend_name(Backend b);

bool backend_supported(Backend b);

// Override the dispatch table; used by the equivalence tests.
// Throws fedcova::Error if the backend is not supported on this host.
void force_backend(Backend b);

double dot(const double* a, const double* b, std::size_t n);

// y += alpha * x
void axpy(double alpha, const double* x, double* y, std::size_t n);

// x *= alpha
void scal(double alpha, double* x, std::size_t n);

inline double norm_sq(const double* x, std::size_t n) { return dot(x, x, n); }

// Scalar references, always available.
namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scal(double alpha, double* x, std::size_t n);
}  // namespace scalar

}  // namespace fedcova::kernels
