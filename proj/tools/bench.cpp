// Compares the OpenMP kernels against their serial reference implementations
// and checks that both produce identical results while timing them.

#include <chrono>
#include <cstdio>
#include <vector>

#include "bergman/commutativity.hpp"
#include "bergman/matrix.hpp"
#include "bergman/rng.hpp"
#include "bergman/symbol.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

template <typename F>
double time_ms(F&& f) {
  double t0 = now_ms();
  f();
  return now_ms() - t0;
}

bergman::HarmonicSymbol dense_symbol(int degree, std::uint64_t seed) {
  bergman::SplitMix64 rng(seed);
  bergman::HarmonicSymbol s;
  for (int j = 0; j <= degree; ++j)
    s.set_anti(j, bergman::ExactComplex(bergman::make_rational(rng.uniform_int(-9, 9), 4),
                                        bergman::make_rational(rng.uniform_int(-9, 9), 4)));
  return s;
}

void row(const char* name, double serial_ms, double parallel_ms, bool equal) {
  std::printf("%-34s %10.1f ms %10.1f ms   x%5.2f   %s\n", name, serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, equal ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  int dim = argc > 1 ? std::atoi(argv[1]) : 1536;
  int k = 2;
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; both columns run serially\n");
#endif
  std::printf("%-34s %13s %13s %8s\n", "kernel", "serial", "parallel", "speedup");

  bergman::HarmonicSymbol phi = dense_symbol(2 * dim, 12345);

  {
    bergman::ComplexMatrix a, b;
    double ts = time_ms([&] { a = bergman::hankel_matrix_serial(phi, dim); });
    double tp = time_ms([&] { b = bergman::hankel_matrix(phi, dim); });
    row("hankel_matrix", ts, tp, a.entries == b.entries);
  }
  {
    bergman::ComplexMatrix a, b;
    double ts = time_ms([&] { a = bergman::slant_matrix_serial(phi, k, dim); });
    double tp = time_ms([&] { b = bergman::slant_matrix(phi, k, dim); });
    row("slant_matrix", ts, tp, a.entries == b.entries);
  }
  {
    std::vector<double> a, b;
    double ts = time_ms([&] { a = bergman::w_row_singular_values_serial(6, 4096); });
    double tp = time_ms([&] { b = bergman::w_row_singular_values(6, 4096); });
    row("w_row_singular_values (k=6,4096)", ts, tp, a == b);
  }
  {
    // Commutator batch: decide_commute over 64 seeded pairs of degree 6.
    std::vector<bergman::HarmonicSymbol> pairs;
    for (int t = 0; t < 128; ++t) pairs.push_back(dense_symbol(6, 777 + t));
    std::vector<char> serial_out(64), parallel_out(64);
    double ts = time_ms([&] {
      for (int t = 0; t < 64; ++t)
        serial_out[t] = bergman::decide_commute(pairs[2 * t], pairs[2 * t + 1], k).commute;
    });
    double tp = time_ms([&] {
#pragma omp parallel for schedule(dynamic)
      for (int t = 0; t < 64; ++t)
        parallel_out[t] = bergman::decide_commute(pairs[2 * t], pairs[2 * t + 1], k).commute;
    });
    row("decide_commute batch (64 pairs)", ts, tp, serial_out == parallel_out);
  }
  return 0;
}
