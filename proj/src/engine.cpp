#include "liederiv/engine.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "liederiv/witt.hpp"
#include "liederiv/words.hpp"
#include "liederiv/zbase.hpp"

namespace liederiv {

long long special_n_dim_free(long long d, long long p, long long rank, bool super_);

DObject canonical_dobject(DObject x) {
  std::sort(x.begin(), x.end());
  return x;
}

DObject parse_dobject(const std::string& s) {
  DObject out;
  std::string tok;
  auto flush = [&] {
    std::string t = tok;
    tok.clear();
    t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return isspace((unsigned char)c); }),
            t.end());
    if (t.empty()) return;
    int shift = 0;
    auto lb = t.find('[');
    if (lb != std::string::npos) {
      auto rb = t.find(']', lb);
      shift = std::stoi(t.substr(lb + 1, rb - lb - 1));
      t = t.substr(0, lb);
    }
    if (t == "0") return;
    if (t == "Z") { out.push_back({0, shift}); return; }
    if (t.rfind("Z/", 0) != 0) throw std::invalid_argument("bad summand: " + t);
    long long q = std::stoll(t.substr(2));
    if (q == 0) throw std::invalid_argument("Z/0 is Z; write Z");
    if (q == 1) return;
    // split into prime powers
    for (long long d = 2; d * d <= q; ++d) {
      if (q % d == 0) {
        long long pe = 1;
        while (q % d == 0) { q /= d; pe *= d; }
        out.push_back({pe, shift});
      }
    }
    if (q > 1) out.push_back({q, shift});
  };
  for (char c : s) {
    if (c == '+') flush();
    else tok += c;
  }
  flush();
  return canonical_dobject(out);
}

std::string dobject_str(const DObject& x) {
  if (x.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < x.size(); ++i) {
    if (i) os << " + ";
    if (x[i].q == 0) os << "Z";
    else os << "Z/" << x[i].q;
    if (x[i].shift) os << "[" << x[i].shift << "]";
  }
  return os.str();
}

namespace {

// derived tensor of two cyclic summands
DObject tensor_summands(const DSummand& a, const DSummand& b) {
  if (a.q == 0 && b.q == 0) return {{0, a.shift + b.shift}};
  if (a.q == 0) return {{b.q, a.shift + b.shift}};
  if (b.q == 0) return {{a.q, a.shift + b.shift}};
  long long g = std::gcd(a.q, b.q);
  if (g == 1) return {};
  return {{g, a.shift + b.shift}, {g, a.shift + b.shift + 1}};
}

}  // namespace

DObject dobject_tensor(const DObject& a, const DObject& b) {
  DObject out;
  for (auto& x : a)
    for (auto& y : b)
      for (auto& z : tensor_summands(x, y)) out.push_back(z);
  return canonical_dobject(out);
}

Engine::Engine(std::shared_ptr<DkProvider> dk, int max_degree)
    : dk_(std::move(dk)), max_degree_(max_degree) {}

GradedAbGroup Engine::derive_lie(long long m, const DObject& x, int n) const {
  DObject y = x;
  for (auto& s : y) s.shift += n;
  return derive(false, m, canonical_dobject(y));
}

GradedAbGroup Engine::derive_superlie(long long m, const DObject& x, int n) const {
  DObject y = x;
  for (auto& s : y) s.shift += n;
  return derive(true, m, canonical_dobject(y));
}

GradedAbGroup Engine::derive(bool superlie, long long m, const DObject& x) const {
  {
    std::lock_guard lk(mu_);
    auto it = memo_.find({superlie, m, x});
    if (it != memo_.end()) return it->second;
  }
  GradedAbGroup g = derive_uncached(superlie, m, x);
  std::lock_guard lk(mu_);
  memo_.try_emplace({superlie, m, x}, g);
  return g;
}

GradedAbGroup Engine::derive_uncached(bool superlie, long long m, const DObject& x) const {
  if (m < 1) throw std::invalid_argument("degree must be >= 1");
  GradedAbGroup out;
  if (x.empty()) return out;
  if (m == 1) {
    for (auto& s : x) {
      if (s.shift > max_degree_) continue;
      out.add(s.shift, s.q == 0 ? FgAbGroup::free_of_rank(1) : FgAbGroup::cyclic(Int((long)s.q)));
    }
    return out;
  }
  if (x.size() == 1) {
    auto [q, sh] = x[0];
    if (sh < 0) throw std::invalid_argument("negative shifts not supported");
    if (q == 0)
      return (superlie ? superlie_z(m, sh) : lie_z(m, sh)).truncated(max_degree_);
    auto [p, e] = prime_power_of(q);
    if (p == 0) throw std::logic_error("non prime power summand");
    DObject pair{{0, sh}, {0, sh + 1}};
    GradedAbGroup pi = derive(superlie, m, pair).p_primary(p);
    GradedAbGroup h;
    // the L-part starts in degree m*sh + 1; skip it (and the provider) above
    // the degree window
    if (m * sh + 1 <= max_degree_) {
      if (!superlie) {
        h = dgls_homology({m, sh, p, e}, *dk_).p_primary(p);
      } else {
        h = dgls_homology({m, sh + 1, p, e}, *dk_).p_primary(p).shifted(-(int)m);
      }
    }
    return direct_sum(pi, h).truncated(max_degree_);
  }
  // cross effects over the summands as letters
  int s = (int)x.size();
  for (int i = 0; i < s; ++i) out = direct_sum(out, derive(superlie, m, {x[i]}));
  for (long long d : divisors(m)) {
    long long t = m / d;
    if (t < 2) continue;
    bool inner_super = superlie && (t % 2 == 1);
    // compositions of t into s nonnegative parts
    std::vector<long long> content(s, 0);
    content[0] = t;
    while (true) {
      long long cnt = moebius_multicount(content).get_si();
      if (cnt != 0) {
        DObject prod{{0, 0}};
        bool dead = false;
        for (int i = 0; i < s && !dead; ++i)
          for (long long j = 0; j < content[i] && !dead; ++j) {
            prod = dobject_tensor(prod, {x[i]});
            dead = prod.empty();
          }
        if (!dead) {
          int minsh = prod[0].shift;
          for (auto& ss : prod) minsh = std::min(minsh, ss.shift);
          if (minsh <= max_degree_) {
            GradedAbGroup sub = derive(inner_super, d, prod);
            out = direct_sum(out, scale(sub, cnt));
          }
        }
      }
      // next composition
      int i = 0;
      while (i < s - 1 && content[i] == 0) ++i;
      if (i == s - 1) break;
      long long v = content[i];
      content[i] = 0;
      content[0] = v - 1;
      content[i + 1] += 1;
    }
  }
  return out.truncated(max_degree_);
}

FunctorExprGraded Engine::cross_effect_expand(bool superlie, long long m, int letters) const {
  if (m < 2) throw std::invalid_argument("m >= 2");
  FunctorExprGraded out;
  for (int i = 0; i < letters; ++i) {
    std::vector<long long> arg(i + 1, 0);
    arg[i] = 1;
    Atom a{superlie ? AtomKind::SuperLie : AtomKind::Lie, m, 0, AtomMod::none, 0};
    out.add(ExprTerm{0, a, arg});
  }
  for (long long d : divisors(m)) {
    long long t = m / d;
    if (t < 2) continue;
    bool inner_super = superlie && (t % 2 == 1);
    std::vector<long long> content(letters, 0);
    content[0] = t;
    while (true) {
      long long cnt = moebius_multicount(content).get_si();
      if (cnt) {
        AtomKind k = d == 1 ? AtomKind::Id : (inner_super ? AtomKind::SuperLie : AtomKind::Lie);
        Atom a{k, d == 1 ? 1 : d, 0, AtomMod::none, 0};
        out.add(ExprTerm{0, a, content}, cnt);
      }
      int i = 0;
      while (i < letters - 1 && content[i] == 0) ++i;
      if (i == letters - 1) break;
      long long v = content[i];
      content[i] = 0;
      content[0] = v - 1;
      content[i + 1] += 1;
    }
  }
  return out;
}

namespace {

std::vector<std::pair<long long, int>> prime_valuations(long long m) {
  std::vector<std::pair<long long, int>> out;
  for (long long d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      int k = 0;
      while (m % d == 0) { m /= d; ++k; }
      out.push_back({d, k});
    }
  }
  if (m > 1) out.push_back({m, 1});
  return out;
}

}  // namespace

FunctorExprGraded Engine::theta(long long m, int n) const {
  FunctorExprGraded out;
  bool super_ = n % 2 == 1;
  for (auto [p, k] : prime_valuations(m)) {
    long long pi = 1;
    for (int i = 1; i <= k; ++i) {
      pi *= p;
      long long base = (long long)n * m / pi;
      for (auto& w : overline_set(p, (int)base, i)) {
        Atom a{super_ ? AtomKind::SpecialNs : AtomKind::SpecialN, m / pi, p, AtomMod::none, 0};
        out.add(ExprTerm{(int)(base + w.d()), a, {1}});
      }
    }
  }
  return out;
}

std::map<int, long long> Engine::theta_dims(long long m, int n, long long rank,
                                            long long p) const {
  std::map<int, long long> out;
  FunctorExprGraded th = theta(m, n);
  for (auto& [t, c] : th.terms()) {
    Atom a = canonical_atom(t.atom);
    long long q = a.mod != AtomMod::none ? a.mod_p : a.prime;
    if (q != p) continue;
    out[t.shift] += c * atom_dim_free(t.atom, rank);
  }
  return out;
}

long long Engine::special_n_dim(long long d, long long p, long long rank, bool super_) const {
  if (!is_prime(p)) throw std::invalid_argument("not a prime");
  return special_n_dim_free(d, p, rank, super_);
}

EComplex Engine::e_complex(long long m, int n, bool tilde) const {
  EComplex ec;
  ec.unvalidated = tilde;
  bool lead_super = tilde ? n % 2 == 0 : n % 2 == 1;
  Atom lead{lead_super ? AtomKind::SuperLie : AtomKind::Lie, m, 0, AtomMod::none, 0};
  if (m == 1) lead = Atom{AtomKind::Id, 1, 0, AtomMod::none, 0};
  ec.symbolic.add(ExprTerm{(int)(n * m), lead, {1}});
  if (!tilde) {
    ec.symbolic.add(theta(m, n));
    return ec;
  }
  // tilde variant: N-family of the opposite parity, base (n+1)m/p^i, shifted
  // down by m, last index in the tilde range of the full valuation k
  bool fam_super = n % 2 == 0;
  for (auto [p, k] : prime_valuations(m)) {
    long long u_num = 1;
    for (int i = 0; i < k - 1; ++i) u_num *= p;
    long long pi = 1;
    for (int i = 1; i <= k; ++i) {
      pi *= p;
      long long base = (long long)(n + 1) * m / pi;
      for (auto& w : overline_set(p, (int)base, i)) {
        long long last = w.entries.back().index;
        bool keep = p == 2 ? last >= u_num : last > (u_num - 1) / 2;
        if (!keep) continue;
        Atom a{fam_super ? AtomKind::SpecialNs : AtomKind::SpecialN, m / pi, p, AtomMod::none, 0};
        ec.symbolic.add(ExprTerm{(int)(base + w.d() - m), a, {1}});
      }
    }
  }
  return ec;
}

GradedAbGroup Engine::n_atom_homotopy(const Atom& a0, const DObject& x) const {
  Atom a = canonical_atom(a0);
  // purely free input: (lc1)/(lc2) atom values
  bool all_free = true;
  for (auto& s : x) all_free = all_free && s.q == 0;
  auto devalue = [&](bool super_, long long d) {
    return super_ ? derive_superlie(d, x) : derive_lie(d, x);
  };
  switch (a.kind) {
    case AtomKind::Id: {
      GradedAbGroup g = derive_lie(1, x);
      if (a.mod == AtomMod::tensor_p) return mod_p_homotopy(g, a.mod_p);
      if (a.mod == AtomMod::tor_p) throw UnsupportedDegreeError("Tor atom on object");
      return g;
    }
    case AtomKind::Lie:
    case AtomKind::SuperLie: {
      GradedAbGroup g = devalue(a.kind == AtomKind::SuperLie, a.degree);
      if (a.mod == AtomMod::tensor_p) return mod_p_homotopy(g, a.mod_p);
      if (a.mod == AtomMod::none) return g;
      throw UnsupportedDegreeError("Tor atom on object");
    }
    case AtomKind::SpecialN:
    case AtomKind::SpecialNs: {
      // canonical forms were handled above; p | degree remains
      if (all_free) {
        // L N^{s;p}(Z[l]-sums): nonzero only on the Z[0]-part via (lc1)/(lc2)
        GradedAbGroup out;
        long long s = a.degree, p = a.prime;
        bool lc;
        if (a.kind == AtomKind::SpecialN) {
          long long t = s;
          while (t % p == 0) t /= p;
          lc = t == 1;
        } else {
          long long t = s;
          lc = false;
          if (t % 2 == 0) {
            t /= 2;
            while (t % p == 0) t /= p;
            lc = t == 1;
          }
        }
        if (lc) {
          FgAbGroup zp;
          zp.add_block(p, 1, 1);
          for (auto& ss : x)
            if (ss.shift == 0) out.add(0, zp);
          // nonzero shifts: L N(Z[l]) is unknown for l > 0 unless zero input
          for (auto& ss : x)
            if (ss.shift != 0)
              throw UnsupportedDegreeError("L N^{s;p} on shifted free summand");
        }
        return out;
      }
      throw UnsupportedDegreeError("special functor not evaluable on this object: N^{" +
                                   std::to_string(a.degree) + ";" + std::to_string(a.prime) +
                                   "}");
    }
    default:
      throw UnsupportedDegreeError("atom not evaluable");
  }
}

GradedAbGroup Engine::e_complex_homotopy(long long m, const DObject& x, int n,
                                         bool tilde) const {
  EComplex ec = e_complex(m, n, tilde);
  GradedAbGroup out;
  for (auto& [t, c] : ec.symbolic.terms()) {
    Atom a = canonical_atom(t.atom);
    GradedAbGroup g;
    if (a.kind == AtomKind::Lie || a.kind == AtomKind::SuperLie || a.kind == AtomKind::Id) {
      g = n_atom_homotopy(a, x);
    } else {
      g = n_atom_homotopy(a, x);
    }
    out = direct_sum(out, scale(g.shifted(t.shift), c));
  }
  return out.truncated(max_degree_);
}

FunctorExprGraded Engine::intro_prime_formula(long long p, int dim) const {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("odd prime required");
  FunctorExprGraded out;
  int n = dim / 2;
  if (dim % 2 == 0) {
    // L^p(A) (+) Tor(A, Z/p) at 2np; L_j L^p(A) at 2np+j (j=1..p-1);
    // A (x) Z/p at 2n+2j(p-1)-1 (j=1..n); Tor(A, Z/p) at 2n+2j(p-1) (j=1..n-1)
    out.add(ExprTerm{(int)(2 * n * p), Atom{AtomKind::Lie, p, 0, AtomMod::none, 0}, {1}});
    out.add(ExprTerm{(int)(2 * n * p), Atom{AtomKind::Id, 1, 0, AtomMod::tor_p, p}, {1}});
    for (long long j = 1; j <= p - 1; ++j) {
      Atom a{AtomKind::Lie, p, 0, AtomMod::none, 0};
      a.derived_level = (int)j;
      out.add(ExprTerm{(int)(2 * n * p + j), a, {1}});
    }
    for (int j = 1; j <= n; ++j)
      out.add(ExprTerm{(int)(2 * n + 2 * j * (p - 1) - 1),
                       Atom{AtomKind::Id, 1, 0, AtomMod::tensor_p, p}, {1}});
    for (int j = 1; j <= n - 1; ++j)
      out.add(ExprTerm{(int)(2 * n + 2 * j * (p - 1)),
                       Atom{AtomKind::Id, 1, 0, AtomMod::tor_p, p}, {1}});
  } else {
    // L_j L_s^p(A) at 2np+j (j=0..p-1); A (x) Z/p at 2n+2j(p-1) (j=1..n);
    // Tor(A, Z/p) at 2n+2j(p-1)+1 (j=1..n)
    for (long long j = 0; j <= p - 1; ++j) {
      Atom a{AtomKind::SuperLie, p, 0, AtomMod::none, 0};
      a.derived_level = (int)j;
      out.add(ExprTerm{(int)(2 * n * p + j), a, {1}});
    }
    for (int j = 1; j <= n; ++j)
      out.add(ExprTerm{(int)(2 * n + 2 * j * (p - 1)),
                       Atom{AtomKind::Id, 1, 0, AtomMod::tensor_p, p}, {1}});
    for (int j = 1; j <= n; ++j)
      out.add(ExprTerm{(int)(2 * n + 2 * j * (p - 1) + 1),
                       Atom{AtomKind::Id, 1, 0, AtomMod::tor_p, p}, {1}});
  }
  return out;
}

FunctorExprGraded Engine::squarefree_formula(long long m, int dim2n) const {
  if (m < 2) throw std::invalid_argument("m >= 2");
  for (auto [p, k] : prime_valuations(m))
    if (k > 1) throw std::invalid_argument("m must be squarefree");
  if (dim2n % 2 != 0) throw std::invalid_argument("even dimension required");
  int n = dim2n / 2;
  FunctorExprGraded out;
  out.add(ExprTerm{(int)(2 * n * m), Atom{AtomKind::Lie, m, 0, AtomMod::none, 0}, {1}});
  for (auto [p, k] : prime_valuations(m)) {
    for (long long i = 1; i <= m * n / p; ++i) {
      Atom a{m / p == 1 ? AtomKind::Id : AtomKind::Lie, m / p == 1 ? 1 : m / p, 0,
             AtomMod::tensor_p, p};
      out.add(ExprTerm{(int)(2 * m * n / p + (2 * p - 2) * i - 1), a, {1}});
    }
  }
  return out;
}

FunctorExprGraded Engine::specialize_free(const FunctorExprGraded& e) {
  FunctorExprGraded out;
  for (auto& [t, c] : e.terms()) {
    Atom a = canonical_atom(t.atom);
    if (a.derived_level > 0) continue;
    if (a.mod == AtomMod::tor_p &&
        (a.kind == AtomKind::Id || a.kind == AtomKind::Lie || a.kind == AtomKind::SuperLie ||
         a.kind == AtomKind::SP))
      continue;  // torsion-free values have no Tor
    ExprTerm t2 = t;
    t2.atom.derived_level = 0;
    out.add(t2, c);
  }
  return out;
}

FunctorExprGraded Engine::symbolic_derived_free(bool superlie, long long d,
                                                const std::vector<long long>& arg,
                                                int nu) const {
  FunctorExprGraded out;
  // top value at degree d*nu with the parity flip at odd dimensions
  bool top_super = superlie == (nu % 2 == 0);
  AtomKind top = d == 1 ? AtomKind::Id : (top_super ? AtomKind::SuperLie : AtomKind::Lie);
  out.add(ExprTerm{(int)(d * nu), Atom{top, d == 1 ? 1 : d, 0, AtomMod::none, 0}, arg});
  if (d == 1 || nu == 0) return out;
  if (!superlie) {
    // Theta_d(arg, nu) below the top
    FunctorExprGraded th = theta(d, nu);
    for (auto& [t, c] : th.terms()) {
      ExprTerm t2 = t;
      t2.arg = arg;
      out.add(t2, c);
    }
    return out;
  }
  // super: tilde-Theta (the tilde-E N-family)
  bool fam_super = nu % 2 == 0;
  for (auto [p, k] : prime_valuations(d)) {
    long long u_num = 1;
    for (int i = 0; i < k - 1; ++i) u_num *= p;
    long long pi = 1;
    for (int i = 1; i <= k; ++i) {
      pi *= p;
      long long base = (long long)(nu + 1) * d / pi;
      for (auto& w : overline_set(p, (int)base, i)) {
        long long last = w.entries.back().index;
        bool keep = p == 2 ? last >= u_num : last > (u_num - 1) / 2;
        if (!keep) continue;
        Atom a{fam_super ? AtomKind::SpecialNs : AtomKind::SpecialN, d / pi, p, AtomMod::none, 0};
        out.add(ExprTerm{(int)(base + w.d() - d), a, arg});
      }
    }
  }
  return out;
}

std::map<std::pair<int, int>, FunctorExprGraded> Engine::filtration_e1(bool superlie,
                                                                       long long m,
                                                                       int n) const {
  std::map<std::pair<int, int>, FunctorExprGraded> page;
  for (long long l = 0; l <= m; ++l) {
    int i = (int)(m * n + m - l);
    for (long long d : divisors(m)) {
      if (l % d != 0) continue;
      long long na = l / d, nb = (m - l) / d;  // letter counts: A's, B's
      if (na + nb == 0) continue;
      long long cnt = moebius_multicount({na, nb}).get_si();
      if (cnt == 0) continue;
      int nu = (int)((m * n + m - l) / d);
      FunctorExprGraded vals = symbolic_derived_free(superlie, d, {na, nb}, nu);
      for (auto& [t, c] : vals.terms()) {
        int j = t.shift;
        ExprTerm cell = t;
        cell.shift = 0;
        page[{i, j - i}].add(cell, c * cnt);
      }
    }
  }
  return page;
}

bool Engine::decalage_check(long long p, const DObject& x, int l) const {
  GradedAbGroup lhs = derive_lie(p, x, l + 1).truncated(max_degree_ - (int)p);
  GradedAbGroup rhs = derive_superlie(p, x, l).shifted((int)p).truncated(max_degree_ - (int)p);
  return lhs == rhs;
}

std::vector<int> Engine::tilde_mismatch_degrees(long long m, int n) const {
  GradedAbGroup a = e_complex_homotopy(m, {{0, 0}}, n, true);
  GradedAbGroup b = derive_superlie(m, {{0, 0}}, n);
  std::vector<int> out;
  for (int d = 0; d <= max_degree_; ++d)
    if (a.at(d) != b.at(d)) out.push_back(d);
  return out;
}

}  // namespace liederiv
