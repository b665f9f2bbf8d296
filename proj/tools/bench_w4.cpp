// Times the OpenMP search kernel against the bignum serial reference on the
// x^2 + (x+1)^2 = w^4 search and checks that both return the same solutions.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "fermat/triples.hpp"

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::uint64_t> bounds;
  for (int i = 1; i < argc; ++i) {
    bounds.push_back(std::strtoull(argv[i], nullptr, 10));
  }
  if (bounds.empty()) {
    bounds = {100000, 1000000};
  }

  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%12s %14s %14s %9s %s\n", "bound", "serial (s)", "kernel (s)",
              "speedup", "solutions");
  for (std::uint64_t bound : bounds) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<fermat::W4Solution> reference =
        fermat::brute_force_w4_serial(bound);
    auto t1 = std::chrono::steady_clock::now();
    std::vector<fermat::W4Solution> fast = fermat::brute_force_w4(bound);
    auto t2 = std::chrono::steady_clock::now();

    if (reference != fast) {
      std::fprintf(stderr, "MISMATCH at bound %llu\n",
                   static_cast<unsigned long long>(bound));
      return 1;
    }
    double serial = seconds(t0, t1);
    double kernel = seconds(t1, t2);
    std::printf("%12llu %14.3f %14.3f %8.1fx %zu\n",
                static_cast<unsigned long long>(bound), serial, kernel,
                kernel > 0 ? serial / kernel : 0.0, fast.size());
  }
  return 0;
}
