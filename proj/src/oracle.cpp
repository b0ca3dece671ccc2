#include "liederiv/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace liederiv {

TwoTermMap TwoTermMap::multiplication(long long k) {
  TwoTermMap c;
  c.rank_b = c.rank_a = 1;
  c.f = IntMatrix(1, 1);
  c.f.at(0, 0) = (long)k;
  return c;
}

namespace {

FreeDgls dgls_of(const TwoTermMap& c, bool shifted) {
  int low = shifted ? 1 : 0;
  long long n = c.rank_b + c.rank_a;
  std::vector<int> degs((size_t)n);
  std::vector<std::vector<long long>> d((size_t)n, std::vector<long long>((size_t)n, 0));
  std::vector<std::string> names;
  for (long long i = 0; i < c.rank_b; ++i) {
    degs[i] = low + 1;
    names.push_back(c.rank_b == 1 ? "b" : "b" + std::to_string(i + 1));
  }
  for (long long j = 0; j < c.rank_a; ++j) {
    degs[c.rank_b + j] = low;
    names.push_back(c.rank_a == 1 ? "a" : "a" + std::to_string(j + 1));
  }
  for (long long i = 0; i < c.rank_b; ++i)
    for (long long j = 0; j < c.rank_a; ++j) d[i][c.rank_b + j] = c.f.at(j, i).get_si();
  return FreeDgls(degs, d, names);
}

}  // namespace

ChainComplex build_dgls(long long m, const TwoTermMap& c, bool shifted) {
  if (m < 2 || m > 7) throw std::invalid_argument("build_dgls supports 2 <= m <= 7");
  return dgls_of(c, shifted).component(m);
}

namespace {

// bases for the handwritten complexes
struct PairBasis {  // gamma_2 / sp2-style basis of pairs i <= j, plus wedges i < j
  static std::vector<std::pair<int, int>> sym(long long n) {
    std::vector<std::pair<int, int>> b;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) b.push_back({i, j});
    return b;
  }
  static std::vector<std::pair<int, int>> wedge(long long n) {
    std::vector<std::pair<int, int>> b;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) b.push_back({i, j});
    return b;
  }
};

long long find_pair(const std::vector<std::pair<int, int>>& basis, int i, int j) {
  auto key = std::make_pair(std::min(i, j), std::max(i, j));
  for (size_t t = 0; t < basis.size(); ++t)
    if (basis[t] == key) return (long long)t;
  throw std::logic_error("pair not in basis");
}

}  // namespace

ChainComplex build_dgls_paper(long long m, const TwoTermMap& c, bool shifted) {
  long long rb = c.rank_b, ra = c.rank_a;
  const IntMatrix& f = c.f;
  if (m == 2 && !shifted) {
    // Gamma_2(B) -> A (x) B -> Lambda^2(A), degrees 2,1,0
    auto gb = PairBasis::sym(rb);
    auto wa = PairBasis::wedge(ra);
    long long mid = ra * rb;
    IntMatrix d2(mid, (long long)gb.size());
    for (size_t t = 0; t < gb.size(); ++t) {
      auto [i, j] = gb[t];
      // gamma_2(b_i): f(b_i) (x) b_i; b_i b_j: f(b_i) (x) b_j + f(b_j) (x) b_i
      for (long long x = 0; x < ra; ++x) {
        if (i == j) d2.at(x * rb + i, (long long)t) += f.at(x, i);
        else {
          d2.at(x * rb + j, (long long)t) += f.at(x, i);
          d2.at(x * rb + i, (long long)t) += f.at(x, j);
        }
      }
    }
    IntMatrix d1((long long)wa.size(), mid);
    for (long long x = 0; x < ra; ++x)
      for (long long bI = 0; bI < rb; ++bI)
        for (long long y = 0; y < ra; ++y) {
          if (f.at(y, bI) == 0 || x == y) continue;
          long long w = find_pair(wa, (int)x, (int)y);
          Int sgn = x < y ? 1 : -1;
          d1.at(w, x * rb + bI) += sgn * f.at(y, bI);
        }
    return ChainComplex(0, {(long long)wa.size(), mid, (long long)gb.size()},
                        {IntMatrix(), d1, d2});
  }
  if (m == 2 && shifted) {
    // Lambda^2(B) -> B (x) A -> Gamma_2(A), degrees 4,3,2
    auto wb = PairBasis::wedge(rb);
    auto ga = PairBasis::sym(ra);
    long long mid = rb * ra;
    IntMatrix d4(mid, (long long)wb.size());
    for (size_t t = 0; t < wb.size(); ++t) {
      auto [i, j] = wb[t];
      for (long long x = 0; x < ra; ++x) {
        d4.at((long long)i * ra + x, (long long)t) += f.at(x, j);
        d4.at((long long)j * ra + x, (long long)t) -= f.at(x, i);
      }
    }
    IntMatrix d3((long long)ga.size(), mid);
    for (long long bI = 0; bI < rb; ++bI)
      for (long long x = 0; x < ra; ++x)
        for (long long y = 0; y < ra; ++y) {
          if (f.at(y, bI) == 0) continue;
          long long g = find_pair(ga, (int)x, (int)y);
          // a_x * a_y in gamma coordinates: a_x a_x = 2 gamma_2(a_x)
          d3.at(g, bI * ra + x) += (x == y ? 2 : 1) * f.at(y, bI);
        }
    return ChainComplex(2, {(long long)ga.size(), mid, (long long)wb.size()},
                        {IntMatrix(), d3, d4});
  }
  if (rb != 1 || ra != 1)
    throw std::invalid_argument("printed m in {3,4} complexes: rank-1 inputs only");
  long long k = f.at(0, 0).get_si();
  if (m == 3 && !shifted) {
    // 0 -> B(x)A(x)B -delta-> B(x)A(x)A -> 0 at rank 1, degrees 2,1 + zero ends
    IntMatrix delta(1, 1);
    delta.at(0, 0) = (long)k;  // b(x)a(x)f(b2) + b2(x)f(b1)(x)a - b1(x)f(b2)(x)a
    return ChainComplex(0, {0, 1, 1, 0}, {IntMatrix(), IntMatrix(0, 1), delta, IntMatrix(0, 0)});
  }
  if (m == 3 && shifted) {
    // (L^3(B) -> B(x)A(x)B -delta'-> B(x)A(x)A -> Ls^3(A))[3]: rank 1 ends vanish
    IntMatrix dp(1, 1);
    dp.at(0, 0) = (long)(3 * k);
    return ChainComplex(3, {0, 1, 1, 0}, {IntMatrix(), IntMatrix(0, 1), dp, IntMatrix(0, 0)});
  }
  if (m == 4 && !shifted) {
    // B(x)A(x)B(x)B -delta2-> B(x)A(x)A(x)B (+) Gamma_2(B(x)A) -delta1-> B(x)A^3
    IntMatrix d3(2, 1), d2(1, 2);
    d3.at(0, 0) = 0L;     // tensor part cancels at rank 1
    d3.at(1, 0) = (long)(2 * k);  // (b (x) f(b))(b (x) a) = 2k gamma_2(b (x) a)
    d2.at(0, 0) = (long)-k;     // five tensor terms: k(1-1-1+1-1)
    d2.at(0, 1) = 0L;      // gamma_2(b (x) a) -> k - k
    return ChainComplex(0, {0, 1, 2, 1, 0},
                        {IntMatrix(), IntMatrix(0, 1), d2, d3, IntMatrix(0, 0)});
  }
  throw std::invalid_argument("unsupported (m, shifted) combination");
}

ChainComplex build_prime_truncated(long long p, const TwoTermMap& pq) {
  if (!is_prime(p) || p > 5) throw std::invalid_argument("p in {2,3,5}");
  ChainComplex full = build_dgls(p, pq, false);
  // good truncation below degree p: keep the displayed terms in degrees
  // 0..p-1 and present im(d_p) by a free module of relations on top, so the
  // homology in degrees <= p-1 is that of the full complex
  std::vector<long long> ranks;
  std::vector<IntMatrix> diffs;
  std::vector<std::vector<std::string>> labels;
  for (int d = 0; d <= (int)p - 1; ++d) {
    ranks.push_back(full.rank(d));
    diffs.push_back(d == 0 ? IntMatrix() : full.differential(d));
    labels.push_back(full.labels(d));
  }
  const IntMatrix& dp = full.differential((int)p);
  if (dp.cols() > 0 && dp.rows() > 0) {
    auto s = smith_normal_form(dp);
    long long r = 0;
    for (long long i = 0; i < std::min(dp.rows(), dp.cols()); ++i)
      if (s.d.at(i, i) != 0) ++r;
    if (r > 0) {
      IntMatrix dv = dp * s.v;  // columns span im(d_p); first r are a basis
      IntMatrix basis(dp.rows(), r);
      for (long long i = 0; i < dp.rows(); ++i)
        for (long long j = 0; j < r; ++j) basis.at(i, j) = dv.at(i, j);
      ranks.push_back(r);
      diffs.push_back(basis);
      std::vector<std::string> rel;
      for (long long j = 0; j < r; ++j) rel.push_back("rel" + std::to_string(j + 1));
      labels.push_back(rel);
    }
  }
  return ChainComplex(0, ranks, diffs, labels);
}

long long special_n_kernel(long long d, long long p, long long r, bool super_) {
  if (d < 1 || d > 4) throw std::invalid_argument("special_n_kernel supports d <= 4");
  if (!is_prime(p)) throw std::invalid_argument("not a prime");
  if (d == 1) return r;
  // free DGLS on (Z^r -id-> Z^r), shifted for N, unshifted for Ns
  int low = super_ ? 0 : 1;
  std::vector<int> degs((size_t)(2 * r));
  std::vector<std::vector<long long>> dm((size_t)(2 * r),
                                         std::vector<long long>((size_t)(2 * r), 0));
  for (long long i = 0; i < r; ++i) {
    degs[i] = low + 1;
    degs[r + i] = low;
    dm[i][r + i] = 1;
  }
  ChainComplex comp = FreeDgls(degs, dm).component(d);
  int hi = super_ ? (int)d - 1 : (int)(2 * d - 1);
  long long rank_hi = comp.rank(hi);
  if (rank_hi == 0) return 0;
  if (comp.rank(hi - 1) == 0) return rank_hi;
  // mod-p kernel dimension of d_hi
  const IntMatrix& mtx = comp.differential(hi);
  long long rows = mtx.rows(), cols = mtx.cols();
  std::vector<std::vector<long long>> a((size_t)rows, std::vector<long long>((size_t)cols));
  for (long long i = 0; i < rows; ++i)
    for (long long j = 0; j < cols; ++j) {
      Int v = mtx.at(i, j) % Int((long)p);
      if (v < 0) v += Int((long)p);
      a[i][j] = v.get_si();
    }
  long long rk = 0;
  for (long long c = 0; c < cols && rk < rows; ++c) {
    long long pr = -1;
    for (long long i = rk; i < rows; ++i)
      if (a[i][c] % p) { pr = i; break; }
    if (pr < 0) continue;
    std::swap(a[rk], a[pr]);
    long long inv = 1;
    for (long long t = 1; t < p; ++t)
      if (a[rk][c] * t % p == 1) { inv = t; break; }
    for (long long j = 0; j < cols; ++j) a[rk][j] = a[rk][j] * inv % p;
    for (long long i = 0; i < rows; ++i) {
      if (i == rk || a[i][c] == 0) continue;
      long long fct = a[i][c];
      for (long long j = 0; j < cols; ++j)
        a[i][j] = ((a[i][j] - fct * a[rk][j]) % p + p) % p;
    }
    ++rk;
  }
  return rank_hi - rk;
}

namespace {

// multi-exponent bases
std::vector<std::vector<int>> exponents(long long r, int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur((size_t)r, 0);
  std::function<void(long long, int)> rec = [&](long long pos, int left) {
    if (pos == r - 1) {
      cur[(size_t)pos] = left;
      out.push_back(cur);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      cur[(size_t)pos] = a;
      rec(pos + 1, left - a);
    }
  };
  if (r >= 1) rec(0, total);
  return out;
}

std::vector<std::vector<int>> subsets(long long r, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if ((int)cur.size() == size) { out.push_back(cur); return; }
    for (int i = start; i < (int)r; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

long long index_of(const std::vector<std::vector<int>>& basis, const std::vector<int>& v) {
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == v) return (long long)i;
  throw std::logic_error("basis lookup");
}

// shared builder: degree i holds Lambda^i (x) G_{n-i} where G is SP (koszul)
// or Gamma (de Rham); the contraction differential moves one wedge factor in.
ChainComplex contraction_complex(int n, long long r, bool divided) {
  std::vector<long long> ranks(n + 1);
  std::vector<std::vector<std::vector<int>>> wbases(n + 1), ebases(n + 1);
  for (int i = 0; i <= n; ++i) {
    wbases[i] = subsets(r, i);
    ebases[i] = exponents(r, n - i);
    ranks[i] = (long long)(wbases[i].size() * ebases[i].size());
  }
  std::vector<IntMatrix> diffs(n + 1);
  for (int i = 1; i <= n; ++i) {
    IntMatrix m(ranks[i - 1], ranks[i]);
    for (size_t wi = 0; wi < wbases[i].size(); ++wi)
      for (size_t ei = 0; ei < ebases[i].size(); ++ei) {
        long long col = (long long)(wi * ebases[i].size() + ei);
        const auto& w = wbases[i][wi];
        for (size_t t = 0; t < w.size(); ++t) {
          std::vector<int> w2 = w;
          w2.erase(w2.begin() + t);
          std::vector<int> e2 = ebases[i][ei];
          long long coeff = divided ? e2[w[t]] + 1 : 1;
          e2[w[t]] += 1;
          long long row = index_of(wbases[i - 1], w2) * (long long)ebases[i - 1].size() +
                          index_of(ebases[i - 1], e2);
          int sgn = t % 2 == 0 ? 1 : -1;
          m.at(row, col) += (long)(sgn * coeff);
        }
      }
    diffs[i] = m;
  }
  return ChainComplex(0, ranks, diffs);
}

}  // namespace

ChainComplex koszul_complex(int n, long long r) {
  if (n > 6 || r > 4) throw std::invalid_argument("koszul size guard");
  return contraction_complex(n, r, false);
}

ChainComplex dual_de_rham(int n, long long r) {
  if (n > 6 || r > 4) throw std::invalid_argument("de Rham size guard");
  return contraction_complex(n, r, true);
}

long long v_functor_dim(int p, int k, long long r) {
  if (k < 1 || k > p - 1) throw std::invalid_argument("v_functor 1 <= k <= p-1");
  ChainComplex kz = koszul_complex(p, r);
  // V_{p,k} = ker{Lambda^{p-k} (x) SP^k -> Lambda^{p-k-1} (x) SP^{k+1}}
  const IntMatrix& d = kz.differential(p - k);
  return kernel_basis(d).cols();
}

// ---------------------------------------------------------------------------
// truncated Dold-Kan simplicial model

namespace {

using Surj = std::vector<int>;  // values of an order-preserving surjection [q] ->> [j]

std::vector<Surj> surjections(int q, int j) {
  std::vector<Surj> out;
  if (j > q || j < 0) return out;
  // choose the j ascent positions among 1..q
  std::vector<int> cuts;
  std::function<void(int)> rec = [&](int start) {
    if ((int)cuts.size() == j) {
      Surj v(q + 1);
      int val = 0;
      size_t ci = 0;
      for (int i = 0; i <= q; ++i) {
        if (ci < cuts.size() && i == cuts[ci]) { ++val; ++ci; }
        v[i] = val;
      }
      out.push_back(v);
      return;
    }
    for (int i = start; i <= q; ++i) {
      cuts.push_back(i);
      rec(i + 1);
      cuts.pop_back();
    }
  };
  rec(1);
  return out;
}

struct DoldKanModel {
  int n;               // M sits in chain degree n, L in n+1
  long long rm, rl;
  IntMatrix f;         // d: L -> M, rm x rl

  struct Level {
    std::vector<std::pair<char, Surj>> gens;  // ('M' or 'L', surjection)
    long long dim = 0;
  };

  Level level(int q) const {
    Level lv;
    for (auto& s : surjections(q, n)) { lv.gens.push_back({'M', s}); lv.dim += rm; }
    for (auto& s : surjections(q, n + 1)) { lv.gens.push_back({'L', s}); lv.dim += rl; }
    return lv;
  }

  // matrix of face d_i: K_q -> K_{q-1}
  IntMatrix face(int q, int i) const {
    Level src = level(q), dst = level(q - 1);
    std::map<std::pair<char, Surj>, long long> off;
    long long o = 0;
    for (auto& g : dst.gens) { off[g] = o; o += g.first == 'M' ? rm : rl; }
    IntMatrix m(dst.dim, src.dim);
    long long co = 0;
    for (auto& [w, s] : src.gens) {
      long long rk = w == 'M' ? rm : rl;
      int j = w == 'M' ? n : n + 1;
      Surj comp(q);
      for (int t = 0; t < q; ++t) comp[t] = s[t < i ? t : t + 1];
      int mx = *std::max_element(comp.begin(), comp.end());
      std::vector<char> present(j + 1, 0);
      for (int v : comp) present[v] = 1;
      bool surj = mx == j && std::all_of(present.begin(), present.end(), [](char c) { return c; });
      if (surj) {
        long long ro = off.at({w, comp});
        for (long long t = 0; t < rk; ++t) m.at(ro + t, co + t) += 1;
      } else {
        int missing = -1, cnt = 0;
        for (int v = 0; v <= j; ++v)
          if (!present[v]) { missing = v; ++cnt; }
        if (cnt == 1 && missing == j && j - 1 >= 0) {
          Surj tau = comp;  // values < j unchanged (missing value is the top)
          if (w == 'L') {
            long long ro = off.at({'M', tau});
            for (long long x = 0; x < rm; ++x)
              for (long long y = 0; y < rl; ++y) m.at(ro + x, co + y) += f.at(x, y);
          }
          // w == 'M': the complex ends at M, differential is zero
        }
      }
      co += rk;
    }
    return m;
  }
};

struct QuadF {
  QuadraticFunctor kind;
  long long dim(long long n) const {
    switch (kind) {
      case QuadraticFunctor::lambda2: return n * (n - 1) / 2;
      case QuadraticFunctor::gamma2:
      case QuadraticFunctor::sp2: return n * (n + 1) / 2;
      case QuadraticFunctor::tensor2: return n * n;
    }
    return 0;
  }
  IntMatrix map(const IntMatrix& a) const {
    long long m = a.rows(), n = a.cols();
    IntMatrix out(dim(m), dim(n));
    auto widx = [&](long long x, long long y, long long sz) {  // x < y
      // wedge pairs in lex order
      return x * sz - x * (x + 1) / 2 + (y - x - 1);
    };
    auto sidx = [&](long long x, long long y, long long sz) {  // x <= y
      return x * sz - x * (x - 1) / 2 + (y - x);
    };
    switch (kind) {
      case QuadraticFunctor::lambda2: {
        long long cI = 0;
        for (long long p = 0; p < n; ++p)
          for (long long q = p + 1; q < n; ++q, ++cI)
            for (long long x = 0; x < m; ++x)
              for (long long y = x + 1; y < m; ++y)
                out.at(widx(x, y, m), cI) += a.at(x, p) * a.at(y, q) - a.at(x, q) * a.at(y, p);
        break;
      }
      case QuadraticFunctor::sp2: {
        long long cI = 0;
        for (long long p = 0; p < n; ++p)
          for (long long q = p; q < n; ++q, ++cI)
            for (long long x = 0; x < m; ++x)
              for (long long y = 0; y < m; ++y) {
                Int coef = a.at(x, p) * a.at(y, q);
                if (coef == 0) continue;
                out.at(sidx(std::min(x, y), std::max(x, y), m), cI) += coef;
              }
        break;
      }
      case QuadraticFunctor::gamma2: {
        // basis: gamma_2(e_x) = (x,x), e_x e_y = (x,y) x<y, in sidx order
        long long cI = 0;
        for (long long p = 0; p < n; ++p)
          for (long long q = p; q < n; ++q, ++cI) {
            if (p == q) {
              // gamma_2(col p)
              for (long long x = 0; x < m; ++x) {
                out.at(sidx(x, x, m), cI) += a.at(x, p) * a.at(x, p);
                for (long long y = x + 1; y < m; ++y)
                  out.at(sidx(x, y, m), cI) += a.at(x, p) * a.at(y, p);
              }
            } else {
              // (col p)(col q); e_x e_x = 2 gamma_2(e_x)
              for (long long x = 0; x < m; ++x)
                for (long long y = 0; y < m; ++y) {
                  Int coef = a.at(x, p) * a.at(y, q);
                  if (coef == 0) continue;
                  out.at(sidx(std::min(x, y), std::max(x, y), m), cI) +=
                      (x == y ? 2 : 1) * coef;
                }
            }
          }
        break;
      }
      case QuadraticFunctor::tensor2: {
        for (long long p = 0; p < n; ++p)
          for (long long q = 0; q < n; ++q)
            for (long long x = 0; x < m; ++x)
              for (long long y = 0; y < m; ++y)
                out.at(x * m + y, p * n + q) += a.at(x, p) * a.at(y, q);
        break;
      }
    }
    return out;
  }
};

}  // namespace

GradedAbGroup simplicial_derived(QuadraticFunctor fk, const TwoTermMap& res, int n, int cap) {
  if (cap > 8) throw std::invalid_argument("degree cap exceeded");
  if (n > 2) throw std::invalid_argument("dimension n <= 2");
  DoldKanModel mdl{n, res.rank_a, res.rank_b, res.f};
  QuadF F{fk};
  // Moore complex: N_q = intersection of ker F(d_i), i = 0..q-1; differential
  // F(d_q) restricted.
  std::vector<IntMatrix> nbases(cap + 2);
  std::vector<long long> fdim(cap + 2);
  for (int q = 0; q <= cap + 1; ++q) {
    long long kdim = mdl.level(q).dim;
    fdim[q] = F.dim(kdim);
    if (q == 0) {
      nbases[0] = IntMatrix::identity(fdim[0]);
      continue;
    }
    IntMatrix stacked(fdim[q - 1] * q, fdim[q]);
    long long ro = 0;
    for (int i = 0; i < q; ++i) {
      IntMatrix fi = F.map(mdl.face(q, i));
      for (long long r = 0; r < fi.rows(); ++r)
        for (long long c = 0; c < fi.cols(); ++c) stacked.at(ro + r, c) = fi.at(r, c);
      ro += fi.rows();
    }
    nbases[q] = kernel_basis(stacked);
  }
  std::vector<long long> ranks(cap + 2);
  for (int q = 0; q <= cap + 1; ++q) ranks[q] = nbases[q].cols();
  std::vector<IntMatrix> diffs(cap + 2);
  for (int q = 1; q <= cap + 1; ++q) {
    IntMatrix m(ranks[q - 1], ranks[q]);
    if (ranks[q] && ranks[q - 1]) {
      IntMatrix fq = F.map(mdl.face(q, q));
      for (long long c = 0; c < ranks[q]; ++c) {
        std::vector<Int> img((size_t)fdim[q - 1], Int(0));
        for (long long r = 0; r < fq.rows(); ++r)
          for (long long t = 0; t < fq.cols(); ++t)
            if (fq.at(r, t) != 0 && nbases[q].at(t, c) != 0)
              img[r] += fq.at(r, t) * nbases[q].at(t, c);
        auto x = solve_in_lattice(nbases[q - 1], img);
        for (long long r = 0; r < ranks[q - 1]; ++r) m.at(r, c) = x[r];
      }
    }
    diffs[q] = m;
  }
  ChainComplex moore(0, ranks, diffs);
  GradedAbGroup out;
  for (int q = 0; q <= cap; ++q) out.add(q, moore.homology(q));
  return out;
}

std::vector<long long> free_glrs_rank1_table(int maxdeg) {
  if (maxdeg > 8) throw std::invalid_argument("maxdeg <= 8");
  FreeDgls L({1}, {{0}});
  std::vector<long long> out(maxdeg + 1, 0);
  for (int w = 1; w <= maxdeg; ++w) {
    auto ranks = L.component_ranks(w);
    for (int d = 0; d < (int)ranks.size() && d <= maxdeg; ++d) out[d] += ranks[d];
  }
  return std::vector<long long>(out.begin() + 1, out.end());
}

}  // namespace liederiv
