#include "liederiv/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace liederiv {

void parallel_for_each(const std::vector<std::function<void()>>& jobs, ExecMode mode) {
#ifdef _OPENMP
  if (mode == ExecMode::openmp) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < (long long)jobs.size(); ++i) jobs[i]();
    return;
  }
#endif
  (void)mode;
  for (auto& j : jobs) j();
}

int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace liederiv
