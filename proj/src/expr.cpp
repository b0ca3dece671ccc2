#include "liederiv/expr.hpp"

#include <sstream>
#include <stdexcept>

#include "liederiv/witt.hpp"
#include "liederiv/words.hpp"

namespace liederiv {

namespace {
const char* kTensor = "⊗";  // (x)
const char* kOPlus = "⊕";   // (+)
}  // namespace

Atom canonical_atom(Atom a) {
  if (a.degree == 1 &&
      (a.kind == AtomKind::Lie || a.kind == AtomKind::SuperLie || a.kind == AtomKind::SP))
    a.kind = AtomKind::Id;
  if ((a.kind == AtomKind::SpecialN || a.kind == AtomKind::SpecialNs)) {
    if (a.degree == 1) {
      a = Atom{AtomKind::Id, 1, 0, AtomMod::tensor_p, a.prime};
    } else if (a.degree == 2 && a.prime == 2) {
      a = Atom{AtomKind::SuperLie, 2, 0, AtomMod::tensor_p, 2};
    } else if (a.degree % a.prime != 0) {
      a = Atom{a.kind == AtomKind::SpecialN ? AtomKind::Lie : AtomKind::SuperLie,
               a.degree, 0, AtomMod::tensor_p, a.prime};
    }
  }
  return a;
}

void FunctorExprGraded::add(const ExprTerm& t, long long mult) {
  if (mult == 0) return;
  ExprTerm c = t;
  c.atom = canonical_atom(c.atom);
  while (!c.arg.empty() && c.arg.back() == 0) c.arg.pop_back();
  auto& v = terms_[c];
  v += mult;
  if (v == 0) terms_.erase(c);
}

void FunctorExprGraded::add(const FunctorExprGraded& other, long long mult) {
  for (auto& [t, c] : other.terms_) add(t, c * mult);
}

FunctorExprGraded FunctorExprGraded::shifted(int s) const {
  FunctorExprGraded out;
  for (auto& [t, c] : terms_) {
    ExprTerm t2 = t;
    t2.shift += s;
    out.add(t2, c);
  }
  return out;
}

FunctorExprGraded FunctorExprGraded::at_degree(int shift) const {
  FunctorExprGraded out;
  for (auto& [t, c] : terms_)
    if (t.shift == shift) out.add(t, c);
  return out;
}

std::string render_term(const ExprTerm& t) {
  std::ostringstream os;
  if (t.atom.derived_level > 0) os << "L" << t.atom.derived_level << ":";
  switch (t.atom.kind) {
    case AtomKind::Id: os << "Id"; break;
    case AtomKind::Lie: os << "L^" << t.atom.degree; break;
    case AtomKind::SuperLie: os << "Ls^" << t.atom.degree; break;
    case AtomKind::SP: os << "SP^" << t.atom.degree; break;
    case AtomKind::SpecialN: os << "N^{" << t.atom.degree << ";" << t.atom.prime << "}"; break;
    case AtomKind::SpecialNs: os << "Ns^{" << t.atom.degree << ";" << t.atom.prime << "}"; break;
  }
  if (t.atom.mod == AtomMod::tensor_p) os << kTensor << "Z/" << t.atom.mod_p;
  if (t.atom.mod == AtomMod::tor_p) os << kTensor << "Tor[Z/" << t.atom.mod_p << "]";
  os << "(";
  bool first = true;
  for (size_t i = 0; i < t.arg.size(); ++i)
    for (long long j = 0; j < t.arg[i]; ++j) {
      if (!first) os << kTensor;
      first = false;
      os << (char)('A' + i);
    }
  if (first) os << "A";  // empty word defaults to one letter
  os << ")[" << t.shift << "]";
  return os.str();
}

std::string FunctorExprGraded::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [t, c] : terms_) {
    if (!first) os << " " << kOPlus << " ";
    first = false;
    if (c != 1) os << c << "*";
    os << render_term(t);
  }
  return os.str();
}

namespace {

void strip(std::string& s) {
  while (!s.empty() && isspace((unsigned char)s.front())) s.erase(s.begin());
  while (!s.empty() && isspace((unsigned char)s.back())) s.pop_back();
}

}  // namespace

ExprTerm parse_term(const std::string& input) {
  std::string s = input;
  strip(s);
  ExprTerm t;
  if (s.size() > 1 && s[0] == 'L' && isdigit((unsigned char)s[1])) {
    auto colon = s.find(':');
    if (colon != std::string::npos && s.find('(') > colon) {
      t.atom.derived_level = std::stoi(s.substr(1, colon - 1));
      s = s.substr(colon + 1);
    }
  }
  auto lb = s.rfind('[');
  auto rb = s.rfind(']');
  if (lb == std::string::npos || rb == std::string::npos || rb < lb)
    throw std::invalid_argument("term missing [shift]: " + input);
  t.shift = std::stoi(s.substr(lb + 1, rb - lb - 1));
  s = s.substr(0, lb);
  auto lp = s.find('(');
  auto rp = s.rfind(')');
  if (lp == std::string::npos || rp == std::string::npos || rp < lp)
    throw std::invalid_argument("term missing (arg): " + input);
  std::string arg = s.substr(lp + 1, rp - lp - 1);
  std::string head = s.substr(0, lp);
  for (char c : arg) {
    if (c >= 'A' && c <= 'Z') {
      size_t i = c - 'A';
      if (t.arg.size() <= i) t.arg.resize(i + 1, 0);
      ++t.arg[i];
    }
  }
  // modifier
  auto modpos = head.find(kTensor);
  if (modpos != std::string::npos) {
    std::string mod = head.substr(modpos + std::string(kTensor).size());
    head = head.substr(0, modpos);
    if (mod.rfind("Tor[Z/", 0) == 0) {
      t.atom.mod = AtomMod::tor_p;
      t.atom.mod_p = std::stoll(mod.substr(6));
    } else if (mod.rfind("Z/", 0) == 0) {
      t.atom.mod = AtomMod::tensor_p;
      t.atom.mod_p = std::stoll(mod.substr(2));
    } else {
      throw std::invalid_argument("bad modifier: " + mod);
    }
  }
  strip(head);
  auto parse_np = [&](const std::string& braces) {
    auto semi = braces.find(';');
    t.atom.degree = std::stoll(braces.substr(0, semi));
    t.atom.prime = std::stoll(braces.substr(semi + 1));
  };
  if (head == "Id") { t.atom.kind = AtomKind::Id; t.atom.degree = 1; t.atom.prime = 0; }
  else if (head.rfind("Ls^", 0) == 0) { t.atom.kind = AtomKind::SuperLie; t.atom.degree = std::stoll(head.substr(3)); }
  else if (head.rfind("L^", 0) == 0) { t.atom.kind = AtomKind::Lie; t.atom.degree = std::stoll(head.substr(2)); }
  else if (head.rfind("SP^", 0) == 0) { t.atom.kind = AtomKind::SP; t.atom.degree = std::stoll(head.substr(3)); }
  else if (head.rfind("Ns^{", 0) == 0) { t.atom.kind = AtomKind::SpecialNs; parse_np(head.substr(4, head.size() - 5)); }
  else if (head.rfind("N^{", 0) == 0) { t.atom.kind = AtomKind::SpecialN; parse_np(head.substr(3, head.size() - 4)); }
  else if (head == "Lam2" || head == "Lambda2") { t.atom.kind = AtomKind::Lie; t.atom.degree = 2; }
  else if (head == "G2" || head == "Gamma2") { t.atom.kind = AtomKind::SuperLie; t.atom.degree = 2; }
  else throw std::invalid_argument("bad atom: " + head);
  return t;
}

FunctorExprGraded parse_expr(const std::string& input) {
  FunctorExprGraded out;
  std::string s = input;
  strip(s);
  if (s == "0" || s.empty()) return out;
  size_t pos = 0;
  std::string sep = std::string(kOPlus);
  while (pos <= s.size()) {
    size_t next = s.find(sep, pos);
    std::string piece = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    strip(piece);
    long long mult = 1;
    auto star = piece.find('*');
    if (star != std::string::npos && piece.find_first_not_of("0123456789") == star) {
      mult = std::stoll(piece.substr(0, star));
      piece = piece.substr(star + 1);
    }
    if (!piece.empty()) out.add(parse_term(piece), mult);
    if (next == std::string::npos) break;
    pos = next + sep.size();
  }
  return out;
}

long long special_n_dim_free(long long d, long long p, long long rank, bool super_);

namespace {

long long lie_rank_free(long long d, long long rank) {
  if (d == 1) return rank;
  return moebius_count(rank, d).get_si();
}

long long superlie_rank_free(long long d, long long rank) {
  long long base = lie_rank_free(d, rank);
  if (d % 4 == 2) base += lie_rank_free(d / 2, rank);
  return base;
}

long long sp_rank_free(long long d, long long rank) {
  // C(rank + d - 1, d)
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), (unsigned long)(rank + d - 1), (unsigned long)d);
  return b.get_si();
}

}  // namespace

// dim_{F_p} N^{d;p}(Z^r) resp. Ns^{d;p}(Z^r), by the hierarchy recursions.
long long special_n_dim_free(long long d, long long p, long long rank, bool super_) {
  if (d == 1) return rank;
  if (!super_) {
    long long base = lie_rank_free(d, rank);
    return base + (d % p == 0 ? special_n_dim_free(d / p, p, rank, false) : 0);
  }
  long long base = superlie_rank_free(d, rank);
  // + p-rank of L_{d-1} L^d(Z^r, 1), read off Theta_d(-, 1)
  long long extra = 0;
  for (long long q = 2; q <= d; ++q) {
    if (!is_prime(q) || d % q != 0) continue;
    if (q != p) continue;
    long long dd = d;
    int k = 0;
    while (dd % q == 0) { dd /= q; ++k; }
    long long qi = 1;
    for (int i = 1; i <= k; ++i) {
      qi *= q;
      int base_w = (int)(d / qi);
      for (auto& w : overline_set(q, base_w, i))
        if (base_w + w.d() == d - 1)
          extra += special_n_dim_free(d / qi, q, rank, true);
    }
  }
  return base + extra;
}

long long atom_dim_free(const Atom& a0, long long rank) {
  Atom a = canonical_atom(a0);
  long long base = 0;
  switch (a.kind) {
    case AtomKind::Id: base = rank; break;
    case AtomKind::Lie: base = lie_rank_free(a.degree, rank); break;
    case AtomKind::SuperLie: base = superlie_rank_free(a.degree, rank); break;
    case AtomKind::SP: base = sp_rank_free(a.degree, rank); break;
    case AtomKind::SpecialN: base = special_n_dim_free(a.degree, a.prime, rank, false); break;
    case AtomKind::SpecialNs: base = special_n_dim_free(a.degree, a.prime, rank, true); break;
  }
  if (a.mod == AtomMod::tor_p) {
    // free-group values have no Tor; special functors are F_p-spaces already
    if (a.kind == AtomKind::SpecialN || a.kind == AtomKind::SpecialNs) return base;
    return 0;
  }
  return base;
}

GradedAbGroup evaluate_free(const FunctorExprGraded& e, const std::vector<long long>& ranks) {
  GradedAbGroup out;
  for (auto& [t, c] : e.terms()) {
    long long rank = 1;
    for (size_t i = 0; i < t.arg.size(); ++i) {
      long long r = i < ranks.size() ? ranks[i] : 0;
      for (long long j = 0; j < t.arg[i]; ++j) rank *= r;
    }
    if (t.arg.empty()) rank = ranks.empty() ? 0 : ranks[0];
    Atom a = canonical_atom(t.atom);
    FgAbGroup g;
    long long dim = atom_dim_free(a, rank);
    bool fp_valued = a.mod != AtomMod::none || a.kind == AtomKind::SpecialN ||
                     a.kind == AtomKind::SpecialNs;
    if (fp_valued) {
      long long p = a.mod != AtomMod::none ? a.mod_p : a.prime;
      g.add_block(p, 1, dim);
    } else {
      g = FgAbGroup::free_of_rank(dim);
    }
    out.add(t.shift, scale(g, c));
  }
  return out;
}

}  // namespace liederiv
