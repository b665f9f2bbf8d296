#include <omp.h>

#include <algorithm>

#include "fermat/triples.hpp"

// Exhaustive search for x^2 + (x+1)^2 = w^4. The per-candidate test is two
// exact floor square roots: the sum must be a perfect square whose root is
// again a perfect square. The kernel runs the loop over 128-bit lanes under
// OpenMP; the serial reference walks the same range through the bignum
// primitives and must agree exactly.

namespace fermat {

namespace {

using u128 = unsigned __int128;

// Floor square root by pure-integer Newton iteration with a monotone
// decreasing guard.
std::uint64_t isqrt_u128(u128 n) {
  if (n == 0) return 0;
  int bits = 0;
  for (u128 t = n; t != 0; t >>= 1) ++bits;
  u128 x = u128(1) << ((bits + 1) / 2);  // x >= sqrt(n)
  for (;;) {
    u128 y = (x + n / x) >> 1;
    if (y >= x) break;
    x = y;
  }
  return static_cast<std::uint64_t>(x);
}

bool check_fast(std::uint64_t x, std::uint64_t& w_out) {
  u128 xx = u128(x) * x;
  u128 x1 = u128(x) + 1;
  u128 s = xx + x1 * x1;
  std::uint64_t r = isqrt_u128(s);
  if (u128(r) * r != s) return false;
  std::uint64_t w = isqrt_u128(r);
  if (u128(w) * w != u128(r)) return false;
  w_out = w;
  return true;
}

bool check_big(std::uint64_t x, std::uint64_t& w_out) {
  Integer bx(static_cast<unsigned long>(x));
  Integer s = bx * bx + (bx + 1) * (bx + 1);
  IsqrtResult r = isqrt(s);
  if (!r.exact) return false;
  IsqrtResult w = isqrt(r.root);
  if (!w.exact) return false;
  w_out = w.root.get_ui();
  return true;
}

// 2 (x+1)^2 stays below 2^128 for every x under this limit.
constexpr std::uint64_t kFastLimit = std::uint64_t(1) << 62;

}  // namespace

std::vector<W4Solution> brute_force_w4(std::uint64_t bound) {
  bound = std::min(bound, ~std::uint64_t(0) - 1);
  const bool fast = bound < kFastLimit;
  std::vector<W4Solution> found;
#pragma omp parallel
  {
    std::vector<W4Solution> local;
#pragma omp for schedule(static) nowait
    for (std::uint64_t x = 0; x <= bound; ++x) {
      std::uint64_t w = 0;
      const bool hit = fast ? check_fast(x, w) : check_big(x, w);
      if (hit) local.push_back({x, w});
    }
#pragma omp critical
    found.insert(found.end(), local.begin(), local.end());
  }
  std::sort(found.begin(), found.end(),
            [](const W4Solution& a, const W4Solution& b) { return a.x < b.x; });
  return found;
}

std::vector<W4Solution> brute_force_w4_serial(std::uint64_t bound) {
  bound = std::min(bound, ~std::uint64_t(0) - 1);
  std::vector<W4Solution> found;
  for (std::uint64_t x = 0; x <= bound; ++x) {
    std::uint64_t w = 0;
    if (check_big(x, w)) found.push_back({x, w});
  }
  return found;
}

}  // namespace fermat
