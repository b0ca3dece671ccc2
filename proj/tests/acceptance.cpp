// Acceptance suite: one pass/fail line per criterion, exit nonzero on failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "liederiv/curtis.hpp"
#include "liederiv/oracle.hpp"
#include "liederiv/tables.hpp"
#include "liederiv/words.hpp"
#include "liederiv/zbase.hpp"

using namespace liederiv;

namespace {

int failures = 0;

void criterion(int number, const std::string& what, const std::function<bool()>& run) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string err;
  try {
    ok = run();
  } catch (const std::exception& e) {
    err = e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream line;
  line << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << what << " ("
       << secs << "s)";
  if (!err.empty()) line << " [" << err << "]";
  std::cout << line.str() << std::endl;
  if (!ok) ++failures;
}

FgAbGroup zp(long long p, long long c = 1) {
  FgAbGroup g;
  g.add_block(p, 1, c);
  return g;
}

}  // namespace

int main() {
  Engine eng;

  criterion(1, "word sets of section 4 reproduced exactly", [] {
    auto w23 = enumerate_w(2, 2, 3);
    long long l2 = 0, l3 = 0;
    for (auto& w : w23) {
      l2 += filtration_level(w, 2, 2);
      l3 += filtration_level(w, 2, 3);
    }
    bool has247 = false;
    for (auto& w : w23)
      has247 |= w.entries.size() == 3 && w.entries[0].index == 2 && w.entries[1].index == 4 &&
                w.entries[2].index == 7;
    return w23.size() == 13 && l2 == 10 && l3 == 4 && has247 &&
           enumerate_w(3, 2, 2).size() == 5 && enumerate_w(3, 4, 2).size() == 16;
  });

  criterion(2, "derived functors at Z match the closed forms", [] {
    GradedAbGroup g8 = lie_z(8, 2);
    bool ok = true;
    for (int d : {6, 8, 9}) ok = ok && g8.at(d) == zp(2, 2);
    for (int d : {5, 7, 10, 11, 12, 13, 15}) ok = ok && g8.at(d) == zp(2);
    ok = ok && g8.components().size() == 10;
    GradedAbGroup g9 = lie_z(9, 2);
    for (int d : {8, 9, 12, 13, 17}) ok = ok && g9.at(d) == zp(3);
    ok = ok && g9.components().size() == 5;
    GradedAbGroup s9 = superlie_z(9, 2);
    for (int d : {4, 5, 9}) ok = ok && s9.at(d) == zp(3);
    ok = ok && s9.components().size() == 3;
    for (long long m : {6LL, 10LL, 12LL})
      for (int n = 2; n <= 6; n += 2) ok = ok && lie_z(m, n).is_zero();
    return ok;
  });

  criterion(3, "tables of L_i L^m(Z/k) and L_i L_s^m(Z/k), k in {2,3,4,5,6,9,12}",
            [&] {
              TableReport a = run_table(eng, "lie-zk", ExecMode::openmp);
              TableReport b = run_table(eng, "superlie-zk", ExecMode::openmp);
              if (a.failures() || b.failures()) {
                std::cout << a.str(true) << b.str(true);
                return false;
              }
              return true;
            });

  criterion(4, "oracle SNF homology = closed-form homology = engine values", [&] {
    for (long long m : {2LL, 3LL, 4LL})
      for (long long k : {2LL, 3LL, 4LL, 6LL, 9LL}) {
        DObject x = parse_dobject("Z/" + std::to_string(k));
        GradedAbGroup unsh = build_dgls(m, TwoTermMap::multiplication(k), false).all_homology();
        GradedAbGroup sh = build_dgls(m, TwoTermMap::multiplication(k), true).all_homology();
        GradedAbGroup lie = eng.derive_lie(m, x);
        GradedAbGroup sup = eng.derive_superlie(m, x);
        DObject pair = parse_dobject("Z + Z[1]");
        for (long long p : {2LL, 3LL}) {
          if (k % p) continue;
          auto [pp, e] = prime_power_of(p == 2 ? (k % 4 == 0 ? 4LL : 2LL)
                                               : (k % 9 == 0 ? 9LL : 3LL));
          DglsHomQuery q{m, 0, p, e};
          if (dgls_homology(q, eng.dk()).p_primary(p) != unsh.p_primary(p)) return false;
          DglsHomQuery qs{m, 1, p, e};
          if (dgls_homology(qs, eng.dk()).p_primary(p) != sh.p_primary(p)) return false;
          GradedAbGroup pi = eng.derive_lie(m, pair).p_primary(p);
          if (direct_sum(pi, unsh.p_primary(p)) != lie.p_primary(p)) return false;
          GradedAbGroup pis = eng.derive_superlie(m, pair).p_primary(p);
          if (direct_sum(pis, sh.p_primary(p).shifted(-(int)m)) != sup.p_primary(p))
            return false;
        }
      }
    return true;
  });

  criterion(5, "special functors: (lc1)/(lc2) at rank 1 and the hierarchy dimension",
            [&] {
              for (long long d = 1; d <= 4; ++d)
                for (long long p : {2LL, 3LL}) {
                  long long t = d;
                  while (t % p == 0) t /= p;
                  if (special_n_kernel(d, p, 1, false) != (t == 1 ? 1 : 0)) return false;
                  long long want = d == 1 ? 1 : 0;
                  if (d % 2 == 0) {
                    long long u = d / 2;
                    while (u % p == 0) u /= p;
                    if (u == 1) want = 1;
                  }
                  if (special_n_kernel(d, p, 1, true) != want) return false;
                }
              for (long long r = 1; r <= 3; ++r) {
                long long witt = (r * r * r - r) / 3;
                if (eng.special_n_dim(3, 3, r) != witt + r) return false;
                if (special_n_kernel(3, 3, r) != witt + r) return false;
              }
              return true;
            });

  criterion(6, "E-complex homotopy = derived functors (Z for m <= 9, torsion for m <= 4)",
            [&] {
              for (long long m = 1; m <= 9; ++m)
                for (int l = 0; l <= 4; ++l)
                  if (eng.e_complex_homotopy(m, {{0, 0}}, l) !=
                      lie_z(m, l).truncated(eng.max_degree()))
                    return false;
              for (long long m : {2LL, 3LL, 4LL})
                for (long long q : {2LL, 3LL, 4LL, 9LL})
                  for (int l = 0; l <= 3; ++l) {
                    DObject x = parse_dobject("Z/" + std::to_string(q));
                    if (eng.e_complex_homotopy(m, x, l) != eng.derive_lie(m, x, l))
                      return false;
                  }
              return true;
            });

  criterion(7, "appendix tables reproduced symbolically (with pinned misprints)", [&] {
    TableReport a = run_table(eng, "appendixA", ExecMode::openmp);
    TableReport b = run_table(eng, "3torsion", ExecMode::openmp);
    if (a.failures() || b.failures()) {
      std::cout << a.str(true) << b.str(true);
      return false;
    }
    // the words columns: degrees of L^{2^k}(A,2) match the word sets
    for (long long m : {4LL, 8LL}) {
      int k = m == 4 ? 2 : 3;
      std::map<int, int> by_degree;
      for (auto& w : enumerate_w(2, 2, k)) by_degree[2 + w.d()] += 1;
      FunctorExprGraded ec = eng.e_complex(m, 2).symbolic;
      for (auto& [deg, count] : by_degree) {
        long long dim = 0;
        FunctorExprGraded cell = ec.at_degree(deg);
        for (auto& [t, c] : cell.terms()) dim += c * atom_dim_free(t.atom, 1);
        if (dim != count) return false;
      }
    }
    return true;
  });

  criterion(8, "Curtis pages: SigmaRP^2, M(A,3) and the 3-torsion Moore tables", [&] {
    for (const char* name : {"srp2", "moore3", "moore-3t"}) {
      TableReport r = run_table(eng, name, ExecMode::openmp);
      if (r.failures()) {
        std::cout << r.str(true);
        return false;
      }
    }
    return true;
  });

  criterion(9, "generating function equals brute-force counts", [] {
    for (int d : {2, 3})
      for (int m = 1; m <= 6; ++m) {
        auto h = tangora_gf(d, m, 30);
        for (int n = 1; n <= 30; ++n)
          if (h[n - 1] != brute_count(d, m, n)) return false;
      }
    return true;
  });

  criterion(10, "property suites: decalage, additivity, de Rham, d o d = 0", [&] {
    std::vector<std::string> objs = {"Z",       "Z/9",        "Z[2]",     "Z/2 + Z[1]",
                                     "Z/4",     "Z/3 + Z/3",  "Z/5[1]",   "Z + Z/2",
                                     "Z/8[2]",  "Z/27",       "Z/2 + Z/4", "Z[1] + Z[3]",
                                     "Z/6",     "Z/12",       "Z/9[1]",   "Z/2[1] + Z/2",
                                     "Z/25",    "Z + Z + Z/3", "Z/16",    "Z/3[2] + Z"};
    for (long long p : {2LL, 3LL, 5LL})
      for (auto& s : objs)
        if (!eng.decalage_check(p, parse_dobject(s))) return false;
    // cross-effect additivity: free values match the Theta/top dimension counts
    for (long long m = 2; m <= 6; ++m)
      for (int n = 1; n <= 3; ++n)
        for (long long r = 1; r <= 3; ++r) {
          DObject x((size_t)r, DSummand{0, 0});
          GradedAbGroup v = eng.derive_lie(m, x, n);
          for (long long p : {2LL, 3LL, 5LL}) {
            auto dims = eng.theta_dims(m, n, r, p);
            for (int d = 1; d < (int)(n * m); ++d)
              if (v.at(d).p_rank(p) != (dims.count(d) ? dims[d] : 0)) return false;
          }
        }
    // dual de Rham acyclicity holds at prime n (and is tested as such; the
    // composite case genuinely fails, see the n = 4 counterexample test)
    for (int n : {2, 3, 5})
      for (long long r = 1; r <= 3; ++r) {
        GradedAbGroup h = dual_de_rham(n, r).all_homology();
        for (auto& [d, g] : h.components())
          if (d > 0 && !g.is_zero()) return false;
      }
    // d o d = 0 is a construction-time assertion; exercise a spread of builds
    for (long long m = 2; m <= 6; ++m)
      for (long long k : {1LL, 2LL, 3LL})
        for (int low : {0, 1}) build_dgls(m, TwoTermMap::multiplication(k), low == 1);
    for (int n = 2; n <= 5; ++n) koszul_complex(n, 3);
    return true;
  });

  std::cout << (failures == 0 ? "acceptance: all criteria passed"
                              : "acceptance: FAILURES PRESENT")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
