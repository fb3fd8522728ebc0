#include <bit>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nilclean/kernels.hpp"

namespace nilclean::kernels {

Index nilpotency_index(const FiniteRing& ring, Index x) {
  const Index zero = ring.zero_index();
  if (x == zero) return 1;
  // A nilpotent index never exceeds the order, so 2^m >= order suffices.
  const std::uint64_t top = std::bit_ceil(std::uint64_t{ring.order()});
  Index p = x;
  for (std::uint64_t k = 1; k < top; k <<= 1) p = ring.mul(p, p);
  if (p != zero) return 0;
  // x^k = 0 is monotone in k; find the least such k in [2, top].
  std::uint64_t lo = 1, hi = top;  // x^lo != 0, x^hi == 0
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (ring.pow(x, mid) == zero) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return static_cast<Index>(hi);
}

void set_thread_limit(int n) {
#ifdef _OPENMP
  if (n > 0) {
    omp_set_num_threads(n);
  } else {
    omp_set_num_threads(omp_get_num_procs());
  }
#else
  (void)n;
#endif
}

int apply_thread_limit_from_env() {
  const char* raw = std::getenv("NILCLEAN_THREADS");
  if (!raw || !*raw) return 0;
  char* end = nullptr;
  const long n = std::strtol(raw, &end, 10);
  if (*end != '\0' || n <= 0) return 0;
  set_thread_limit(static_cast<int>(n));
  return static_cast<int>(n);
}

bool openmp_enabled() noexcept {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

}  // namespace nilclean::kernels
