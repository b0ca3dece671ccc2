#pragma once
// Dense arbitrary-precision integer matrices, Smith normal form, kernels.

#include <vector>

#include "liederiv/abelian.hpp"

namespace liederiv {

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(long long rows, long long cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
  static IntMatrix identity(long long n);

  long long rows() const { return rows_; }
  long long cols() const { return cols_; }
  Int& at(long long r, long long c) { return a_[r * cols_ + c]; }
  const Int& at(long long r, long long c) const { return a_[r * cols_ + c]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  IntMatrix transposed() const;
  std::string str() const;

private:
  long long rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

struct SnfResult {
  IntMatrix d, u, v;  // u * input * v = d
};

// Fraction-free SNF over Z; d diagonal with d1 | d2 | ... >= 0, u and v
// unimodular. Deterministic for a fixed input.
SnfResult smith_normal_form(const IntMatrix& m);

// Determinant of a square matrix is +-1?
bool is_unimodular(const IntMatrix& m);

// Basis of the integer kernel lattice of m, as columns of the result.
IntMatrix kernel_basis(const IntMatrix& m);

// Solve basis * x = v with integer x; basis columns must be Z-linearly
// independent and v in their Q-span with integral coordinates. Throws
// otherwise.
std::vector<Int> solve_in_lattice(const IntMatrix& basis, const std::vector<Int>& v);

}  // namespace liederiv
