#include "sgh/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sgh {

namespace {
int g_max_threads = 0;
}

void set_max_threads(int n) {
  g_max_threads = n > 0 ? n : 0;
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#endif
}

int max_threads() { return g_max_threads; }

}  // namespace sgh
