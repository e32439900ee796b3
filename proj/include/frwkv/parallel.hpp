#pragma once

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace frwkv::par {

inline int max_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int n) {
#if defined(_OPENMP)
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

// Work threshold below which kernels stay serial. Every parallel loop in the
// library assigns each output element to exactly one iteration, so results
// are bit-identical for any thread count; the threshold only affects speed.
inline constexpr long long kMinParallelWork = 1 << 14;

}  // namespace frwkv::par
