// Benchmark: OpenMP kernels against the serial reference implementations.
// Exact arithmetic makes row elimination and matrix products the hot spots
// of the invariant pipeline, so those are what we time.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hopfint/linalg.hpp"

using namespace hopfint;

namespace {

// deterministic xorshift; small entries keep rationals realistic
struct Rng {
  unsigned long long s = 0x9e3779b97f4a7c15ull;
  unsigned long long next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
};

Matrix random_matrix(const FieldPtr& f, std::size_t n, Rng& rng) {
  Matrix m(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m.at(r, c) = Scalar::from_int(f, (long)(rng.next() % 19) - 9);
  return m;
}

template <class F>
double time_ms(F&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void bench_field(const char* name, const FieldPtr& f, std::size_t n) {
  Rng rng;
  Matrix a = random_matrix(f, n, rng);
  Matrix b = random_matrix(f, n, rng);

  Matrix r1(f, 0, 0), r2(f, 0, 0);
  double mm_par = time_ms([&] { r1 = matmul(a, b); });
  double mm_ser = time_ms([&] { r2 = matmul_serial(a, b); });
  bool mm_ok = r1 == r2;

  Matrix e1 = a, e2 = a;
  double rr_par = time_ms([&] { rref_in_place(e1); });
  double rr_ser = time_ms([&] { rref_in_place_serial(e2); });
  bool rr_ok = e1 == e2;

  Matrix k1(f, 0, 0), k2(f, 0, 0);
  std::size_t kn = n / 4 + 2;
  Matrix ka = random_matrix(f, kn, rng);
  Matrix kb = random_matrix(f, kn, rng);
  double kr_par = time_ms([&] { k1 = kronecker(ka, kb); });
  double kr_ser = time_ms([&] { k2 = kronecker_serial(ka, kb); });
  bool kr_ok = k1 == k2;

  std::printf("%-8s n=%-4zu matmul %8.1f / %8.1f ms (x%.2f) %s\n", name, n,
              mm_par, mm_ser, mm_ser / mm_par, mm_ok ? "" : "MISMATCH");
  std::printf("%-8s n=%-4zu rref   %8.1f / %8.1f ms (x%.2f) %s\n", name, n,
              rr_par, rr_ser, rr_ser / rr_par, rr_ok ? "" : "MISMATCH");
  std::printf("%-8s n=%-4zu kron   %8.1f / %8.1f ms (x%.2f) %s\n", name, kn,
              kr_par, kr_ser, kr_ser / kr_par, kr_ok ? "" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
  std::size_t n = argc > 1 ? (std::size_t)std::stoul(argv[1]) : 96;
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp: disabled at build time\n");
#endif
  std::printf("%-8s %-6s %-6s parallel / serial\n", "field", "", "");
  bench_field("Q", FieldSpec::rationals(), n);
  bench_field("F10007", FieldSpec::prime(10007), n * 2);
  bench_field("Q(z4)", FieldSpec::cyclotomic(FieldSpec::rationals(), 4), n / 2);
  return 0;
}
