#pragma once
// OpenMP-parallel evaluation of independent cells, with a serial reference
// path kept for testing and benchmarking.

#include <functional>
#include <vector>

namespace liederiv {

enum class ExecMode { serial, openmp };

// Runs jobs[i]() for every i; OpenMP mode uses a dynamic schedule. Results
// are deterministic either way (jobs write to disjoint slots).
void parallel_for_each(const std::vector<std::function<void()>>& jobs, ExecMode mode);

int hardware_threads();

}  // namespace liederiv
