#include "liederiv/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace liederiv {

IntMatrix IntMatrix::identity(long long n) {
  IntMatrix m(n, n);
  for (long long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (long long r = 0; r < rows_; ++r)
    for (long long c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  for (long long r = 0; r < rows_; ++r) {
    os << (r ? "; " : "[");
    for (long long c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c).get_str();
  }
  os << "]";
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul shape");
  IntMatrix out(a.rows(), b.cols());
  for (long long i = 0; i < a.rows(); ++i)
    for (long long k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (long long j = 0; j < b.cols(); ++j)
        if (b.at(k, j) != 0) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

SnfResult smith_normal_form(const IntMatrix& m) {
  long long rows = m.rows(), cols = m.cols();
  SnfResult r{m, IntMatrix::identity(rows), IntMatrix::identity(cols)};
  IntMatrix& d = r.d;
  IntMatrix& u = r.u;
  IntMatrix& v = r.v;

  auto swap_rows = [&](long long i, long long j) {
    if (i == j) return;
    for (long long c = 0; c < cols; ++c) std::swap(d.at(i, c), d.at(j, c));
    for (long long c = 0; c < rows; ++c) std::swap(u.at(i, c), u.at(j, c));
  };
  auto swap_cols = [&](long long i, long long j) {
    if (i == j) return;
    for (long long rr = 0; rr < rows; ++rr) std::swap(d.at(rr, i), d.at(rr, j));
    for (long long rr = 0; rr < cols; ++rr) std::swap(v.at(rr, i), v.at(rr, j));
  };
  auto addmul_row = [&](long long dst, long long src, const Int& f) {
    if (f == 0) return;
    for (long long c = 0; c < cols; ++c) d.at(dst, c) += f * d.at(src, c);
    for (long long c = 0; c < rows; ++c) u.at(dst, c) += f * u.at(src, c);
  };
  auto addmul_col = [&](long long dst, long long src, const Int& f) {
    if (f == 0) return;
    for (long long rr = 0; rr < rows; ++rr) d.at(rr, dst) += f * d.at(rr, src);
    for (long long rr = 0; rr < cols; ++rr) v.at(rr, dst) += f * v.at(rr, src);
  };
  auto negate_row = [&](long long i) {
    for (long long c = 0; c < cols; ++c) d.at(i, c) = -d.at(i, c);
    for (long long c = 0; c < rows; ++c) u.at(i, c) = -u.at(i, c);
  };

  long long t = 0;
  long long nmin = std::min(rows, cols);
  while (t < nmin) {
    // smallest |entry| != 0 in the trailing submatrix; first position wins ties
    long long pr = -1, pc = -1;
    for (long long i = t; i < rows; ++i)
      for (long long j = t; j < cols; ++j) {
        const Int& x = d.at(i, j);
        if (x == 0) continue;
        if (pr < 0 || mpz_cmpabs(x.get_mpz_t(), d.at(pr, pc).get_mpz_t()) < 0) { pr = i; pc = j; }
      }
    if (pr < 0) break;
    swap_rows(t, pr);
    swap_cols(t, pc);
    if (d.at(t, t) < 0) negate_row(t);

    bool again = false;
    for (long long i = t + 1; i < rows; ++i) {
      if (d.at(i, t) == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), d.at(i, t).get_mpz_t(), d.at(t, t).get_mpz_t());
      addmul_row(i, t, -q);
      if (d.at(i, t) != 0) again = true;
    }
    for (long long j = t + 1; j < cols; ++j) {
      if (d.at(t, j) == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), d.at(t, j).get_mpz_t(), d.at(t, t).get_mpz_t());
      addmul_col(j, t, -q);
      if (d.at(t, j) != 0) again = true;
    }
    if (again) continue;

    long long bad = -1;
    for (long long i = t + 1; i < rows && bad < 0; ++i)
      for (long long j = t + 1; j < cols; ++j)
        if (d.at(i, j) % d.at(t, t) != 0) { bad = i; break; }
    if (bad >= 0) {
      addmul_row(t, bad, 1);
      continue;
    }
    ++t;
  }
  return r;
}

bool is_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  auto s = smith_normal_form(m);
  for (long long i = 0; i < m.rows(); ++i)
    if (s.d.at(i, i) != 1) return false;
  return true;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  if (m.rows() == 0) return IntMatrix::identity(m.cols());
  auto s = smith_normal_form(m);
  long long rank = 0;
  for (long long i = 0; i < std::min(m.rows(), m.cols()); ++i)
    if (s.d.at(i, i) != 0) ++rank;
  IntMatrix out(m.cols(), m.cols() - rank);
  for (long long j = rank; j < m.cols(); ++j)
    for (long long i = 0; i < m.cols(); ++i) out.at(i, j - rank) = s.v.at(i, j);
  return out;
}

std::vector<Int> solve_in_lattice(const IntMatrix& basis, const std::vector<Int>& v) {
  long long d = basis.rows(), k = basis.cols();
  if ((long long)v.size() != d) throw std::invalid_argument("solve shape");
  if (k == 0) {
    for (auto& x : v)
      if (x != 0) throw std::invalid_argument("not in span");
    return {};
  }
  // fraction-free Gaussian elimination on [basis | v] tracking denominators
  std::vector<std::vector<Int>> M(d, std::vector<Int>(k + 1));
  for (long long i = 0; i < d; ++i) {
    for (long long j = 0; j < k; ++j) M[i][j] = basis.at(i, j);
    M[i][k] = v[i];
  }
  std::vector<long long> piv;
  long long r = 0;
  for (long long c = 0; c < k && r < d; ++c) {
    long long pr = -1;
    for (long long i = r; i < d; ++i)
      if (M[i][c] != 0) { pr = i; break; }
    if (pr < 0) continue;
    std::swap(M[r], M[pr]);
    for (long long i = 0; i < d; ++i) {
      if (i == r || M[i][c] == 0) continue;
      Int a = M[r][c], b = M[i][c];
      Int g = gcd(a, b);
      Int fa = a / g, fb = b / g;
      // row_i := fa*row_i - fb*row_r clears column c
      for (long long j = 0; j <= k; ++j) M[i][j] = fa * M[i][j] - fb * M[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  std::vector<Int> x(k, Int(0));
  for (long long i = 0; i < (long long)piv.size(); ++i) {
    Int num = M[i][k], den = M[i][piv[i]];
    if (den == 0 || num % den != 0) throw std::invalid_argument("non-integral coordinate");
    x[piv[i]] = num / den;
  }
  for (long long i = piv.size(); i < d; ++i)
    if (M[i][k] != 0) throw std::invalid_argument("not in span");
  // verify (guards against dependent basis columns)
  for (long long i = 0; i < d; ++i) {
    Int s = 0;
    for (long long j = 0; j < k; ++j) s += basis.at(i, j) * x[j];
    if (s != v[i]) throw std::invalid_argument("solve verification failed");
  }
  return x;
}

}  // namespace liederiv
