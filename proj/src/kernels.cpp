#include "fedcova/kernels.hpp"

#include "fedcova/errors.hpp"

namespace fedcova::kernels {

namespace scalar {

double dot(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scal(double alpha, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

}  // namespace scalar

#if defined(FEDCOVA_HAVE_AVX2_TU)
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scal(double alpha, double* x, std::size_t n);
}  // namespace avx2
#endif

#if defined(FEDCOVA_HAVE_NEON_TU)
namespace neon {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scal(double alpha, double* x, std::size_t n);
}  // namespace neon
#endif

namespace {

struct DispatchTable {
  Backend which;
  double (*dot)(const double*, const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*scal)(double, double*, std::size_t);
};

DispatchTable make_table(Backend b) {
  switch (b) {
#if defined(FEDCOVA_HAVE_AVX2_TU)
    case Backend::Avx2:
      return {Backend::Avx2, &avx2::dot, &avx2::axpy, &avx2::scal};
#endif
#if defined(FEDCOVA_HAVE_NEON_TU)
    case Backend::Neon:
      return {Backend::Neon, &neon::dot, &neon::axpy, &neon::scal};
#endif
    default:
      return {Backend::Scalar, &scalar::dot, &scalar::axpy, &scalar::scal};
  }
}

Backend detect_backend() {
#if defined(FEDCOVA_HAVE_AVX2_TU)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
    return Backend::Avx2;
#endif
#if defined(FEDCOVA_HAVE_NEON_TU)
  return Backend::Neon;  // baseline on aarch64
#endif
  return Backend::Scalar;
}

DispatchTable& table() {
  static DispatchTable t = make_table(detect_backend());
  return t;
}

}  // namespace

Backend active_backend() { return table().which; }

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
    default: return "scalar";
  }
}

bool backend_supported(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
#if defined(FEDCOVA_HAVE_AVX2_TU)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Backend::Neon:
#if defined(FEDCOVA_HAVE_NEON_TU)
      return true;
#else
      return false;
#endif
  }
  return false;
}

void force_backend(Backend b) {
  if (!backend_supported(b))
    throw Error(std::string("kernel backend not supported on this host: ") +
                backend_name(b));
  table() = make_table(b);
}

double dot(const double* a, const double* b, std::size_t n) {
  return table().dot(a, b, n);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  table().axpy(alpha, x, y, n);
}

void scal(double alpha, double* x, std::size_t n) {
  table().scal(alpha, x, n);
}

}  // namespace fedcova::kernels
