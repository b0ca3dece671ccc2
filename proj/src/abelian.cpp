#include "liederiv/abelian.hpp"

#include <sstream>
#include <stdexcept>

namespace liederiv {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

FgAbGroup FgAbGroup::free_of_rank(long long r) {
  FgAbGroup g;
  g.free_rank_ = r;
  return g;
}

FgAbGroup FgAbGroup::cyclic(const Int& order) {
  return from_orders(0, {order});
}

FgAbGroup FgAbGroup::from_orders(long long free_rank, const std::vector<Int>& orders) {
  FgAbGroup g;
  g.free_rank_ = free_rank;
  for (Int o : orders) {
    o = abs(o);
    if (o <= 1) continue;
    // trial division; diagonal entries at desk scale stay small
    for (Int d = 2; d * d <= o; ++d) {
      if (o % d == 0) {
        int e = 0;
        while (o % d == 0) { o /= d; ++e; }
        g.add_block(d.get_si(), e);
      }
    }
    if (o > 1) g.add_block(o.get_si(), 1);
  }
  return g;
}

void FgAbGroup::add_block(long long p, int e, long long count) {
  if (count == 0 || e == 0) return;
  auto& c = torsion_[{p, e}];
  c += count;
  if (c == 0) torsion_.erase({p, e});
}

long long FgAbGroup::torsion_blocks() const {
  long long n = 0;
  for (auto& [pp, c] : torsion_) n += c;
  return n;
}

long long FgAbGroup::mod_p_dim(long long p) const {
  return free_rank_ + p_rank(p);
}

long long FgAbGroup::p_rank(long long p) const {
  long long n = 0;
  for (auto& [pp, c] : torsion_)
    if (pp.p == p) n += c;
  return n;
}

std::string FgAbGroup::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto sep = [&] { if (!first) os << "+"; first = false; };
  if (free_rank_ == 1) { sep(); os << "Z"; }
  else if (free_rank_ > 1) { sep(); os << "Z^" << free_rank_; }
  for (auto& [pp, c] : torsion_) {
    Int q = 1;
    for (int i = 0; i < pp.e; ++i) q *= Int((long)pp.p);
    for (long long i = 0; i < c; ++i) { sep(); os << "Z/" << q.get_str(); }
  }
  return os.str();
}

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
  FgAbGroup g = a;
  g.add_free(b.free_rank());
  for (auto& [pp, c] : b.torsion()) g.add_block(pp.p, pp.e, c);
  return g;
}

FgAbGroup direct_sum(const std::vector<FgAbGroup>& gs) {
  FgAbGroup g;
  for (auto& x : gs) g = direct_sum(g, x);
  return g;
}

FgAbGroup scale(const FgAbGroup& g, long long n) {
  FgAbGroup out;
  if (n == 0) return out;
  out.add_free(g.free_rank() * n);
  for (auto& [pp, c] : g.torsion()) out.add_block(pp.p, pp.e, c * n);
  return out;
}

FgAbGroup tensor(const FgAbGroup& a, const FgAbGroup& b) {
  FgAbGroup out;
  out.add_free(a.free_rank() * b.free_rank());
  for (auto& [pp, c] : b.torsion()) out.add_block(pp.p, pp.e, c * a.free_rank());
  for (auto& [pp, c] : a.torsion()) out.add_block(pp.p, pp.e, c * b.free_rank());
  for (auto& [pa, ca] : a.torsion())
    for (auto& [pb, cb] : b.torsion())
      if (pa.p == pb.p) out.add_block(pa.p, std::min(pa.e, pb.e), ca * cb);
  return out;
}

FgAbGroup tor(const FgAbGroup& a, const FgAbGroup& b) {
  FgAbGroup out;
  for (auto& [pa, ca] : a.torsion())
    for (auto& [pb, cb] : b.torsion())
      if (pa.p == pb.p) out.add_block(pa.p, std::min(pa.e, pb.e), ca * cb);
  return out;
}

FgAbGroup p_part(const FgAbGroup& g, long long p) {
  if (!is_prime(p)) throw std::invalid_argument("not a prime");
  FgAbGroup out;
  for (auto& [pp, c] : g.torsion())
    if (pp.p == p) out.add_block(pp.p, pp.e, c);
  return out;
}

FgAbGroup mod_p(const FgAbGroup& g, long long p) {
  if (!is_prime(p)) throw std::invalid_argument("not a prime");
  FgAbGroup out;
  out.add_block(p, 1, g.mod_p_dim(p));
  return out;
}

FgAbGroup GradedAbGroup::at(int degree) const {
  auto it = comps_.find(degree);
  return it == comps_.end() ? FgAbGroup{} : it->second;
}

void GradedAbGroup::add(int degree, const FgAbGroup& g) {
  if (g.is_zero()) return;
  auto it = comps_.find(degree);
  if (it == comps_.end()) comps_[degree] = g;
  else it->second = direct_sum(it->second, g);
}

GradedAbGroup GradedAbGroup::shifted(int s) const {
  GradedAbGroup out;
  for (auto& [d, g] : comps_) out.comps_[d + s] = g;
  return out;
}

GradedAbGroup GradedAbGroup::p_primary(long long p) const {
  GradedAbGroup out;
  for (auto& [d, g] : comps_) out.add(d, p_part(g, p));
  return out;
}

GradedAbGroup GradedAbGroup::truncated(int max_degree) const {
  GradedAbGroup out;
  for (auto& [d, g] : comps_)
    if (d <= max_degree) out.add(d, g);
  return out;
}

std::string GradedAbGroup::str() const {
  if (comps_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [d, g] : comps_) {
    if (!first) os << "; ";
    first = false;
    os << d << ": " << g.str();
  }
  return os.str();
}

GradedAbGroup direct_sum(const GradedAbGroup& a, const GradedAbGroup& b) {
  GradedAbGroup out = a;
  for (auto& [d, g] : b.components()) out.add(d, g);
  return out;
}

GradedAbGroup scale(const GradedAbGroup& g, long long n) {
  GradedAbGroup out;
  if (n == 0) return out;
  for (auto& [d, c] : g.components()) out.add(d, scale(c, n));
  return out;
}

GradedAbGroup mod_p_homotopy(const GradedAbGroup& g, long long p) {
  GradedAbGroup out;
  for (auto& [d, c] : g.components()) {
    out.add(d, mod_p(c, p));
    // Tor(pi_{d}, Z/p) lands in degree d+1
    FgAbGroup t;
    t.add_block(p, 1, c.p_rank(p));
    out.add(d + 1, t);
  }
  return out;
}

FgAbGroup parse_group(const std::string& s) {
  FgAbGroup g;
  if (s == "0" || s.empty()) return g;
  size_t i = 0;
  while (i < s.size()) {
    size_t j = s.find('+', i);
    if (j == std::string::npos) j = s.size();
    std::string tok = s.substr(i, j - i);
    long long reps = 1;
    if (!tok.empty() && tok.front() == '(') {
      auto close = tok.rfind(')');
      auto caret = tok.find('^', close);
      if (caret != std::string::npos) reps = std::stoll(tok.substr(caret + 1));
      tok = tok.substr(1, close - 1);
    }
    for (long long r = 0; r < reps; ++r) {
      if (tok == "Z") g.add_free(1);
      else if (tok.rfind("Z^", 0) == 0) g.add_free(std::stoll(tok.substr(2)));
      else if (tok.rfind("Z/", 0) == 0) {
        Int q(tok.substr(2));
        g = direct_sum(g, FgAbGroup::cyclic(q));
      } else {
        throw std::invalid_argument("bad group token: " + tok);
      }
    }
    i = j + 1;
  }
  return g;
}

}  // namespace liederiv
