#include "liederiv/chain.hpp"

#include <stdexcept>

namespace liederiv {

ChainComplex::ChainComplex(int bottom, std::vector<long long> ranks,
                           std::vector<IntMatrix> differentials,
                           std::vector<std::vector<std::string>> labels)
    : bottom_(bottom), ranks_(std::move(ranks)), diffs_(std::move(differentials)),
      labels_(std::move(labels)) {
  if (diffs_.size() != ranks_.size())
    diffs_.resize(ranks_.size());
  for (size_t i = 0; i < ranks_.size(); ++i) {
    long long lower = i == 0 ? 0 : ranks_[i - 1];
    if (diffs_[i].rows() == 0 && diffs_[i].cols() == 0)
      diffs_[i] = IntMatrix(lower, ranks_[i]);
    if (diffs_[i].rows() != lower || diffs_[i].cols() != ranks_[i])
      throw std::invalid_argument("differential shape mismatch");
  }
  // d o d = 0
  for (size_t i = 1; i + 1 < diffs_.size(); ++i) {
    IntMatrix prod = diffs_[i] * diffs_[i + 1];
    for (long long r = 0; r < prod.rows(); ++r)
      for (long long c = 0; c < prod.cols(); ++c)
        if (prod.at(r, c) != 0) throw std::invalid_argument("d o d != 0");
  }
}

long long ChainComplex::rank(int degree) const {
  int i = degree - bottom_;
  if (i < 0 || i >= (int)ranks_.size()) return 0;
  return ranks_[i];
}

const IntMatrix& ChainComplex::differential(int degree) const {
  static const IntMatrix empty;
  int i = degree - bottom_;
  if (i < 0 || i >= (int)diffs_.size()) return empty;
  return diffs_[i];
}

const std::vector<std::string>& ChainComplex::labels(int degree) const {
  static const std::vector<std::string> none;
  int i = degree - bottom_;
  if (i < 0 || i >= (int)labels_.size()) return none;
  return labels_[i];
}

FgAbGroup ChainComplex::homology(int degree) const {
  int i = degree - bottom_;
  if (i < 0 || i >= (int)ranks_.size() || ranks_[i] == 0) return {};
  // cycles
  IntMatrix K = i == 0 ? IntMatrix::identity(ranks_[0]) : kernel_basis(diffs_[i]);
  if (K.cols() == 0) return {};
  // boundaries in coordinates of K
  long long nb = (i + 1 < (int)ranks_.size()) ? ranks_[i + 1] : 0;
  if (nb == 0) return FgAbGroup::free_of_rank(K.cols());
  const IntMatrix& dup = diffs_[i + 1];
  IntMatrix C(K.cols(), nb);
  for (long long c = 0; c < nb; ++c) {
    std::vector<Int> col((size_t)ranks_[i]);
    for (long long r = 0; r < ranks_[i]; ++r) col[r] = dup.at(r, c);
    auto x = solve_in_lattice(K, col);
    for (long long r = 0; r < K.cols(); ++r) C.at(r, c) = x[r];
  }
  auto s = smith_normal_form(C);
  long long rank = 0;
  std::vector<Int> orders;
  for (long long j = 0; j < std::min(C.rows(), C.cols()); ++j) {
    if (s.d.at(j, j) != 0) {
      ++rank;
      if (s.d.at(j, j) > 1) orders.push_back(s.d.at(j, j));
    }
  }
  return FgAbGroup::from_orders(K.cols() - rank, orders);
}

GradedAbGroup ChainComplex::all_homology() const {
  GradedAbGroup out;
  for (int d = bottom_; d <= top_degree(); ++d) out.add(d, homology(d));
  return out;
}

ChainComplex identity_cone(const ChainComplex& c) {
  // cone(id_C)_n = C_{n-1} (+) C_n, d(x, y) = (-dx, x + dy)
  int bottom = c.bottom_degree();
  int n = c.top_degree() - bottom + 2;
  std::vector<long long> ranks(n);
  for (int i = 0; i < n; ++i)
    ranks[i] = c.rank(bottom + i - 1) + c.rank(bottom + i);
  std::vector<IntMatrix> diffs(n);
  for (int i = 1; i < n; ++i) {
    int deg = bottom + i;
    long long ra1 = c.rank(deg - 1), rb1 = c.rank(deg);   // source: C_{deg-1} (+) C_deg
    long long ra0 = c.rank(deg - 2), rb0 = c.rank(deg - 1);
    IntMatrix m(ra0 + rb0, ra1 + rb1);
    const IntMatrix& d1 = c.differential(deg - 1);
    const IntMatrix& d0 = c.differential(deg);
    for (long long r = 0; r < ra0; ++r)
      for (long long cc = 0; cc < ra1; ++cc) m.at(r, cc) = -d1.at(r, cc);
    for (long long r = 0; r < rb0; ++r)
      for (long long cc = 0; cc < ra1; ++cc) m.at(ra0 + r, cc) = (r == cc) ? 1 : 0;
    for (long long r = 0; r < rb0; ++r)
      for (long long cc = 0; cc < rb1; ++cc) m.at(ra0 + r, ra1 + cc) = d0.at(r, cc);
    diffs[i] = m;
  }
  return ChainComplex(bottom, ranks, diffs);
}

}  // namespace liederiv
