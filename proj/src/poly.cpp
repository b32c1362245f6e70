#include "newton_sobolev/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace newton_sobolev {

Poly2::Poly2(const Rat& constant) { add_term({0, 0}, constant); }

Poly2 Poly2::monomial(const Rat& coeff, std::uint32_t a, std::uint32_t b) {
  Poly2 p;
  p.add_term({a, b}, coeff);
  return p;
}

Poly2 Poly2::variable(Var v) {
  return v == Var::x ? monomial(1, 1, 0) : monomial(1, 0, 1);
}

void Poly2::add_term(const Exponent& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat Poly2::coeff(std::uint32_t a, std::uint32_t b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Rat(0) : it->second;
}

std::vector<Exponent> Poly2::support() const {
  std::vector<Exponent> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

std::uint32_t Poly2::min_total_degree() const {
  if (is_zero()) throw std::domain_error("min_total_degree of the zero polynomial");
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  for (const auto& [e, c] : terms_) best = std::min(best, e.a + e.b);
  return best;
}

std::uint32_t Poly2::max_degree(Var v) const {
  std::uint32_t best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, v == Var::x ? e.a : e.b);
  return best;
}

Poly2& Poly2::operator+=(const Poly2& q) {
  for (const auto& [e, c] : q.terms_) add_term(e, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& q) {
  for (const auto& [e, c] : q.terms_) add_term(e, -c);
  return *this;
}

Poly2& Poly2::operator*=(const Poly2& q) {
  Poly2 out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : q.terms_) out.add_term({e1.a + e2.a, e1.b + e2.b}, c1 * c2);
  *this = std::move(out);
  return *this;
}

Poly2& Poly2::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly2 Poly2::operator-() const {
  Poly2 out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

Poly2 Poly2::pow(unsigned n) const {
  Poly2 result(Rat(1));
  Poly2 base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

namespace {

// Sparse Horner: terms arrive sorted by (a, b) ascending, so walk them
// backwards grouping by a, and within a group by b.
template <typename T>
T ipow(T base, std::uint32_t n) {
  T result(1);
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

template <typename T, typename CoeffFn>
T horner(const Poly2::Terms& terms, const T& x, const T& y, CoeffFn&& coeff_of) {
  if (terms.empty()) return T(0);
  T acc(0);
  auto it = terms.rbegin();
  std::uint32_t prev_a = it->first.a;
  while (it != terms.rend()) {
    const std::uint32_t a = it->first.a;
    acc *= ipow(x, prev_a - a);
    // inner Horner in y for this a-group
    T inner(0);
    std::uint32_t prev_b = it->first.b;
    for (; it != terms.rend() && it->first.a == a; ++it) {
      inner *= ipow(y, prev_b - it->first.b);
      inner += coeff_of(it->second);
      prev_b = it->first.b;
    }
    inner *= ipow(y, prev_b);
    acc += inner;
    prev_a = a;
  }
  acc *= ipow(x, prev_a);
  return acc;
}

}  // namespace

Rat Poly2::evaluate(const Rat& x, const Rat& y) const {
  return horner<Rat>(terms_, x, y, [](const Rat& c) { return c; });
}

double Poly2::evaluate(double x, double y) const {
  return horner<double>(terms_, x, y, [](const Rat& c) { return c.get_d(); });
}

Poly2 arith(const Poly2& p, const Poly2& q, ArithOp op) {
  switch (op) {
    case ArithOp::add: return p + q;
    case ArithOp::sub: return p - q;
    case ArithOp::mul: return p * q;
  }
  throw std::logic_error("unknown ArithOp");
}

Poly2 partial(const Poly2& p, Var v, unsigned order) {
  Poly2 out;
  for (const auto& [e, c] : p.terms()) {
    std::uint32_t k = v == Var::x ? e.a : e.b;
    if (k < order) continue;
    Rat factor = c;
    for (unsigned i = 0; i < order; ++i) factor *= static_cast<long>(k - i);
    Exponent ne = e;
    (v == Var::x ? ne.a : ne.b) -= order;
    out += Poly2::monomial(factor, ne.a, ne.b);
  }
  return out;
}

Poly2 hessian_det(const Poly2& p) {
  Poly2 pxx = partial(p, Var::x, 2);
  Poly2 pyy = partial(p, Var::y, 2);
  Poly2 pxy = partial(partial(p, Var::x, 1), Var::y, 1);
  return pxx * pyy - pxy * pxy;
}

Poly2 shear(const Poly2& p, const Rat& c, unsigned m, ShearAxis axis) {
  if (c == 0) return p;
  Poly2 out;
  for (const auto& [e, coeff] : p.terms()) {
    // The sheared variable carries exponent n; expand (v + c w^m)^n.
    const std::uint32_t n = axis == ShearAxis::y_by_x ? e.b : e.a;
    BigInt binom = 1;
    Rat cpow = 1;
    for (std::uint32_t k = 0; k <= n; ++k) {
      Rat term = coeff * Rat(binom) * cpow;
      if (axis == ShearAxis::y_by_x)
        out += Poly2::monomial(term, e.a + m * k, n - k);
      else
        out += Poly2::monomial(term, n - k, e.b + m * k);
      binom = binom * (n - k) / (k + 1);
      cpow *= c;
    }
  }
  return out;
}

Poly2 swap_xy(const Poly2& p) {
  Poly2 out;
  for (const auto& [e, c] : p.terms()) out += Poly2::monomial(c, e.b, e.a);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Poly2 parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    Poly2 result = term();
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = s_[pos_];
      if (c != '+' && c != '-') throw ParseError(std::string("unexpected '") + c + "'", pos_);
      ++pos_;
      Poly2 t = term();
      if (c == '+')
        result += t;
      else
        result -= t;
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return !at_end() && s_[pos_] == c;
  }
  bool peek_digit() {
    skip_ws();
    return !at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  BigInt integer() {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  Poly2 term() {
    skip_ws();
    Rat sign = 1;
    if (!at_end() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      if (s_[pos_] == '-') sign = -1;
      ++pos_;
    }
    if (peek_digit()) {
      Rat c = coeff();
      if (peek('*')) {
        ++pos_;
        return monos() * (sign * c);
      }
      return Poly2(sign * c);
    }
    return monos() * sign;
  }

  Rat coeff() {
    BigInt num = integer();
    BigInt den = 1;
    if (peek('/')) {
      ++pos_;
      std::size_t at = pos_;
      den = integer();
      if (den == 0) throw ParseError("zero denominator", at);
    }
    return make_rat(num, den);
  }

  Poly2 monos() {
    Poly2 p = mono();
    while (peek('*')) {
      ++pos_;
      p *= mono();
    }
    return p;
  }

  Poly2 mono() {
    skip_ws();
    std::size_t start = pos_;
    Var v;
    if (s_.substr(pos_, 2) == "t1") {
      v = Var::x;
      pos_ += 2;
    } else if (s_.substr(pos_, 2) == "t2") {
      v = Var::y;
      pos_ += 2;
    } else if (!at_end() && s_[pos_] == 'x') {
      v = Var::x;
      ++pos_;
    } else if (!at_end() && s_[pos_] == 'y') {
      v = Var::y;
      ++pos_;
    } else {
      throw ParseError("expected variable x, y, t1 or t2", start);
    }
    std::uint32_t e = 1;
    if (peek('^')) {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      if (!at_end() && (s_[pos_] == '-' || s_[pos_] == '+')) {
        if (s_[pos_] == '-') throw ExponentError("negative exponent", at);
        ++pos_;
      }
      BigInt n = integer();
      skip_ws();
      if (!at_end() && (s_[pos_] == '/' || s_[pos_] == '.'))
        throw ExponentError("fractional exponent", at);
      if (!n.fits_uint_p() || n > 100000) throw ExponentError("exponent too large", at);
      e = static_cast<std::uint32_t>(n.get_ui());
    }
    return v == Var::x ? Poly2::monomial(1, e, 0) : Poly2::monomial(1, 0, e);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

void append_mono(std::ostringstream& os, const char* name, std::uint32_t e, bool& first) {
  if (e == 0) return;
  if (!first) os << '*';
  os << name;
  if (e > 1) os << '^' << e;
  first = false;
}

}  // namespace

Poly2 parse_poly(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Poly2& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool leading = true;
  for (const auto& [e, c] : p.terms()) {
    Rat mag = abs(c);
    if (leading) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    leading = false;
    bool first = true;
    const bool constant = e.a == 0 && e.b == 0;
    if (mag != 1 || constant) {
      os << to_string(mag);
      first = false;
    }
    append_mono(os, "x", e.a, first);
    append_mono(os, "y", e.b, first);
  }
  return os.str();
}

}  // namespace newton_sobolev
