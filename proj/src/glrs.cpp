#include "liederiv/glrs.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace liederiv {

namespace {

using Word = std::vector<uint8_t>;
using Elem = std::map<Word, long long>;  // tensor-algebra element, sparse

bool is_lyndon(const Word& w) {
  size_t n = w.size();
  for (size_t i = 1; i < n; ++i) {
    Word rot(w.begin() + i, w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + i);
    if (rot <= w) return false;
  }
  return true;
}

std::vector<Word> lyndon_of_length(int s, int len) {
  std::vector<Word> out;
  std::vector<int> w{-1};
  while (!w.empty()) {
    ++w.back();
    if (w.back() < s) {
      size_t m = w.size();
      if ((int)m == len) out.emplace_back(w.begin(), w.end());
      while ((int)w.size() < len) w.push_back(w[w.size() - m]);
      while (!w.empty() && w.back() == s - 1) w.pop_back();
    } else {
      w.pop_back();
    }
  }
  std::vector<Word> uniq;
  std::sort(out.begin(), out.end());
  for (auto& x : out)
    if (uniq.empty() || uniq.back() != x) uniq.push_back(x);
  return uniq;
}

// standard factorization: w = u v with v the longest proper Lyndon suffix
std::pair<Word, Word> std_factor(const Word& w) {
  for (size_t i = 1; i < w.size(); ++i) {
    Word v(w.begin() + i, w.end());
    if (is_lyndon(v)) return {Word(w.begin(), w.begin() + i), v};
  }
  throw std::logic_error("std_factor on non-Lyndon word");
}

}  // namespace

FreeDgls::FreeDgls(std::vector<int> degrees, std::vector<std::vector<long long>> d,
                   std::vector<std::string> names)
    : degs_(std::move(degrees)), dmat_(std::move(d)), names_(std::move(names)) {
  if (dmat_.size() != degs_.size()) throw std::invalid_argument("dgls d shape");
  if (names_.empty()) {
    for (size_t i = 0; i < degs_.size(); ++i) names_.push_back("g" + std::to_string(i));
  }
}

int FreeDgls::degree_of_word(const Word& w) const {
  int d = 0;
  for (auto c : w) d += degs_[c];
  return d;
}

namespace {

struct Builder {
  const std::vector<int>& degs;
  const std::vector<std::vector<long long>>& dmat;
  std::map<Word, Elem> cache;

  int wdeg(const Word& w) const {
    int d = 0;
    for (auto c : w) d += degs[c];
    return d;
  }

  const Elem& bracket(const Word& w) {
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
    Elem r;
    if (w.size() == 1) {
      r[w] = 1;
    } else {
      auto [u, v] = std_factor(w);
      const Elem eu = bracket(u);  // copies: recursion may invalidate refs
      const Elem ev = bracket(v);
      long long sgn = (wdeg(u) * wdeg(v)) % 2 ? -1 : 1;
      for (auto& [a, ca] : eu)
        for (auto& [b, cb] : ev) {
          Word ab = a; ab.insert(ab.end(), b.begin(), b.end());
          Word ba = b; ba.insert(ba.end(), a.begin(), a.end());
          r[ab] += ca * cb;
          r[ba] -= sgn * ca * cb;
        }
      for (auto it2 = r.begin(); it2 != r.end();)
        it2 = it2->second == 0 ? r.erase(it2) : std::next(it2);
    }
    return cache.emplace(w, std::move(r)).first->second;
  }

  Elem square(const Word& w) {
    const Elem e = bracket(w);
    Elem r;
    for (auto& [a, ca] : e)
      for (auto& [b, cb] : e) {
        Word ab = a; ab.insert(ab.end(), b.begin(), b.end());
        r[ab] += ca * cb;
      }
    for (auto it = r.begin(); it != r.end();)
      it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
  }

  Elem tensor_d(const Elem& e) {
    Elem out;
    for (auto& [w, c] : e) {
      long long sgn = 1;
      for (size_t i = 0; i < w.size(); ++i) {
        for (size_t j = 0; j < dmat[w[i]].size(); ++j) {
          long long cij = dmat[w[i]][j];
          if (!cij) continue;
          Word w2 = w;
          w2[i] = (uint8_t)j;
          out[w2] += sgn * c * cij;
        }
        if (degs[w[i]] % 2) sgn = -sgn;
      }
    }
    for (auto it = out.begin(); it != out.end();)
      it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
  }
};

struct BasisItem {
  bool square = false;
  Word w;
  int degree = 0;
};

}  // namespace

std::vector<long long> FreeDgls::component_ranks(long long m) const {
  std::vector<long long> ranks;
  auto bump = [&](int d) {
    if ((int)ranks.size() <= d) ranks.resize(d + 1, 0);
    ++ranks[d];
  };
  for (auto& w : lyndon_of_length(generators(), (int)m)) bump(degree_of_word(w));
  if (m % 2 == 0)
    for (auto& w : lyndon_of_length(generators(), (int)(m / 2)))
      if (degree_of_word(w) % 2 == 1) bump(2 * degree_of_word(w));
  return ranks;
}

ChainComplex FreeDgls::component(long long m) const {
  Builder bld{degs_, dmat_, {}};
  std::vector<BasisItem> items;
  for (auto& w : lyndon_of_length(generators(), (int)m))
    items.push_back({false, w, degree_of_word(w)});
  if (m % 2 == 0)
    for (auto& w : lyndon_of_length(generators(), (int)(m / 2)))
      if (degree_of_word(w) % 2 == 1) items.push_back({true, w, 2 * degree_of_word(w)});
  int maxdeg = 0;
  for (auto& it : items) maxdeg = std::max(maxdeg, it.degree);
  std::vector<std::vector<BasisItem>> by_deg(maxdeg + 1);
  for (auto& it : items) by_deg[it.degree].push_back(it);

  auto expand = [&](const BasisItem& it) {
    return it.square ? bld.square(it.w) : Elem(bld.bracket(it.w));
  };
  auto label = [&](const BasisItem& it) {
    std::ostringstream os;
    os << (it.square ? "sq[" : "[");
    for (size_t i = 0; i < it.w.size(); ++i) os << (i ? "," : "") << names_[it.w[i]];
    os << "]";
    return os.str();
  };

  std::vector<long long> ranks(maxdeg + 1);
  std::vector<std::vector<std::string>> labels(maxdeg + 1);
  for (int d = 0; d <= maxdeg; ++d) {
    ranks[d] = (long long)by_deg[d].size();
    for (auto& it : by_deg[d]) labels[d].push_back(label(it));
  }
  std::vector<IntMatrix> diffs(maxdeg + 1);
  for (int d = 1; d <= maxdeg; ++d) {
    IntMatrix mtx(ranks[d - 1], ranks[d]);
    if (ranks[d] && ranks[d - 1]) {
      // pivot of each target basis vector: its lex-least word, coefficient 1
      std::map<Word, size_t> pivot;
      std::vector<Elem> tgt;
      for (auto& it : by_deg[d - 1]) tgt.push_back(expand(it));
      for (size_t r = 0; r < tgt.size(); ++r) {
        const Word& pw = tgt[r].begin()->first;
        if (tgt[r].begin()->second != 1) throw std::logic_error("pivot coeff != 1");
        pivot[pw] = r;
      }
      for (long long c = 0; c < ranks[d]; ++c) {
        Elem v = bld.tensor_d(expand(by_deg[d][c]));
        while (!v.empty()) {
          auto [u, coef] = *v.begin();
          auto pit = pivot.find(u);
          if (pit == pivot.end()) throw std::logic_error("image not in basis span");
          size_t r = pit->second;
          for (auto& [w2, c2] : tgt[r]) {
            auto vit = v.find(w2);
            long long nv = (vit == v.end() ? 0 : vit->second) - coef * c2;
            if (nv == 0) { if (vit != v.end()) v.erase(vit); }
            else v[w2] = nv;
          }
          mtx.at((long long)r, c) = (long)coef;
        }
      }
    } else if (ranks[d]) {
      // target degree empty: differential must vanish identically
      for (long long c = 0; c < ranks[d]; ++c)
        if (!bld.tensor_d(expand(by_deg[d][c])).empty())
          throw std::logic_error("nonzero differential into empty degree");
      mtx = IntMatrix(0, ranks[d]);
    }
    diffs[d] = mtx;
  }
  return ChainComplex(0, ranks, diffs, labels);
}

FreeDgls two_term_dgls(long long k, int low) {
  return FreeDgls({low + 1, low}, {{0, k}, {0, 0}}, {"b", "a"});
}

}  // namespace liederiv
