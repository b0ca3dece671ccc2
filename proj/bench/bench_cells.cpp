// Serial vs OpenMP cell evaluation on the golden-table workload. Each mode
// gets a fresh engine so memoization does not bleed between runs.

#include <chrono>
#include <iostream>

#include "liederiv/glrs.hpp"
#include "liederiv/tables.hpp"

using namespace liederiv;

namespace {

double run_batch(ExecMode mode) {
  // independent homology jobs: weight-9 free-DGLS complexes over a spread of
  // multiplication constants (no shared state between jobs)
  std::vector<GradedAbGroup> results(48);
  std::vector<std::function<void()>> jobs;
  for (int i = 0; i < (int)results.size(); ++i)
    jobs.push_back([i, &results] {
      results[i] = two_term_dgls(2 + i, i % 2).component(9).all_homology();
    });
  auto t0 = std::chrono::steady_clock::now();
  parallel_for_each(jobs, mode);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  long long blocks = 0;
  for (auto& g : results)
    for (auto& [d, comp] : g.components()) blocks += comp.torsion_blocks();
  std::cout << "  48 complexes, " << blocks << " torsion blocks, " << secs << "s\n";
  return secs;
}

double run_all(ExecMode mode) {
  Engine eng;
  auto t0 = std::chrono::steady_clock::now();
  long long cells = 0, bad = 0;
  for (auto& name : table_names()) {
    TableReport r = run_table(eng, name, mode);
    cells += (long long)r.rows.size();
    bad += r.failures();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << "  " << cells << " cells, " << bad << " failures, " << secs << "s\n";
  return secs;
}

}  // namespace

int main() {
  std::cout << "threads available: " << hardware_threads() << "\n";
  std::cout << "golden-table cells, serial reference:\n";
  double serial = run_all(ExecMode::serial);
  std::cout << "golden-table cells, openmp:\n";
  double par = run_all(ExecMode::openmp);
  std::cout << "table speedup: " << (par > 0 ? serial / par : 0.0) << "x\n";
  std::cout << "batched weight-9 homology, serial reference:\n";
  double bs = run_batch(ExecMode::serial);
  std::cout << "batched weight-9 homology, openmp:\n";
  double bp = run_batch(ExecMode::openmp);
  std::cout << "batch speedup: " << (bp > 0 ? bs / bp : 0.0) << "x\n";
  return 0;
}
