#include "newton_sobolev/unipoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace newton_sobolev {

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat UniPoly::evaluate(const Rat& y) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * y + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return *this * (Rat(1) / leading());
}

UniPoly operator+(const UniPoly& p, const UniPoly& q) {
  std::vector<Rat> out(std::max(p.c_.size(), q.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.coeff(i) + q.coeff(i);
  return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& p, const UniPoly& q) {
  std::vector<Rat> out(std::max(p.c_.size(), q.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.coeff(i) - q.coeff(i);
  return UniPoly(std::move(out));
}

UniPoly operator*(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Rat> out(p.c_.size() + q.c_.size() - 1);
  for (std::size_t i = 0; i < p.c_.size(); ++i)
    for (std::size_t j = 0; j < q.c_.size(); ++j) out[i + j] += p.c_[i] * q.c_[j];
  return UniPoly(std::move(out));
}

UniPoly operator*(const UniPoly& p, const Rat& c) {
  std::vector<Rat> out = p.c_;
  for (auto& v : out) v *= c;
  return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& p, const UniPoly& d) {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (p.degree() < d.degree()) return {UniPoly{}, p};
  std::vector<Rat> rem = p.coeffs();
  std::vector<Rat> quot(p.degree() - d.degree() + 1);
  const Rat& lead = d.leading();
  for (int k = p.degree() - d.degree(); k >= 0; --k) {
    Rat q = rem[k + d.degree()] / lead;
    quot[k] = q;
    if (q == 0) continue;
    for (int j = 0; j <= d.degree(); ++j) rem[k + j] -= q * d.coeffs()[j];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& p, const UniPoly& q) {
  UniPoly a = p, b = q;
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::pair<unsigned, UniPoly> strip_zero_root(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("strip_zero_root of the zero polynomial");
  const auto& c = p.coeffs();
  unsigned k = 0;
  while (c[k] == 0) ++k;
  return {k, UniPoly(std::vector<Rat>(c.begin() + k, c.end()))};
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("square-free decomposition of the zero polynomial");
  std::vector<UniPoly> factors;
  if (p.degree() == 0) return factors;
  UniPoly dp = p.derivative();
  UniPoly a = gcd(p, dp);
  UniPoly b = divmod(p, a).first;
  UniPoly c = divmod(dp, a).first;
  UniPoly d = c - b.derivative();
  for (;;) {
    UniPoly f = gcd(b, d);
    factors.push_back(f);
    b = divmod(b, f).first;
    if (b.degree() <= 0) break;
    c = divmod(d, f).first;
    d = c - b.derivative();
  }
  // drop trailing constant classes
  while (!factors.empty() && factors.back().degree() <= 0) factors.pop_back();
  return factors;
}

namespace {

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    UniPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(r * Rat(-1));
  }
  return seq;
}

int sign_at(const UniPoly& p, const Bound& at, bool at_minus_inf) {
  if (p.is_zero()) return 0;
  if (at) return sgn(p.evaluate(*at));
  int s = sgn(p.leading());
  if (at_minus_inf && p.degree() % 2 == 1) s = -s;
  return s;
}

int variations(const std::vector<UniPoly>& seq, const Bound& at, bool at_minus_inf) {
  int count = 0, prev = 0;
  for (const auto& q : seq) {
    int s = sign_at(q, at, at_minus_inf);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

// Divisors of |n| for n != 0, or nullopt when n is too large to factor by
// trial division.
std::optional<std::vector<BigInt>> divisors(const BigInt& n) {
  BigInt m = abs(n);
  if (m > BigInt("1000000000000")) return std::nullopt;
  unsigned long v = m.get_ui();
  std::vector<std::pair<unsigned long, unsigned>> primes;
  for (unsigned long f = 2; f * f <= v; ++f) {
    unsigned e = 0;
    while (v % f == 0) {
      v /= f;
      ++e;
    }
    if (e) primes.emplace_back(f, e);
  }
  if (v > 1) primes.emplace_back(v, 1);
  std::vector<BigInt> out{1};
  for (auto [prime, e] : primes) {
    std::size_t n0 = out.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= prime;
      for (std::size_t i = 0; i < n0; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

}  // namespace

int real_root_count(const UniPoly& p, const Bound& lo, const Bound& hi) {
  if (p.is_zero()) throw std::domain_error("real_root_count of the zero polynomial");
  if (gcd(p, p.derivative()).degree() > 0)
    throw NotSquareFree("real_root_count requires a square-free polynomial: " + to_string(p));
  if (lo && hi && *lo >= *hi) return 0;
  auto seq = sturm_sequence(p);
  return variations(seq, lo, true) - variations(seq, hi, false);
}

std::optional<std::vector<Rat>> rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("rational_roots of the zero polynomial");
  std::vector<Rat> roots;
  auto [k, q] = strip_zero_root(p);
  if (k > 0) roots.push_back(0);
  if (q.degree() >= 1) {
    // scale to a primitive integer polynomial
    BigInt l = 1;
    for (const auto& c : q.coeffs()) l = lcm(l, c.get_den());
    std::vector<BigInt> ints;
    for (const auto& c : q.coeffs()) ints.push_back(BigInt(c * l));
    auto lead_div = divisors(ints.back());
    auto const_div = divisors(ints.front());
    if (!lead_div || !const_div) return std::nullopt;
    std::set<Rat> found;
    for (const auto& num : *const_div)
      for (const auto& den : *lead_div)
        for (int s : {1, -1}) {
          Rat r = make_rat(BigInt(num * s), den);
          if (q.evaluate(r) == 0) found.insert(r);
        }
    roots.insert(roots.end(), found.begin(), found.end());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

unsigned root_multiplicity(const UniPoly& p, const Rat& r) {
  if (p.is_zero()) throw std::domain_error("root_multiplicity of the zero polynomial");
  UniPoly lin(std::vector<Rat>{-r, Rat(1)});
  UniPoly cur = p;
  unsigned k = 0;
  for (;;) {
    auto [quot, rem] = divmod(cur, lin);
    if (!rem.is_zero()) return k;
    ++k;
    cur = std::move(quot);
  }
}

std::string to_string(const UniPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rat& c = p.coeffs()[i];
    if (c == 0) continue;
    Rat mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (mag != 1 || i == 0) {
      os << to_string(mag);
      if (i > 0) os << '*';
    }
    if (i > 0) os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

}  // namespace newton_sobolev
