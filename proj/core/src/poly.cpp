#include "ihara_towers/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ihara_towers {

namespace {

const BigInt& zero_int() {
  static const BigInt z = 0;
  return z;
}

const Rational& zero_rat() {
  static const Rational z = 0;
  return z;
}

void append_term(std::ostringstream& os, bool first, const BigInt& c, long exponent, const std::string& var) {
  BigInt mag = abs(c);
  if (first) {
    if (sgn(c) < 0) os << "-";
  } else {
    os << (sgn(c) < 0 ? " - " : " + ");
  }
  if (exponent == 0) {
    os << mag.get_str();
    return;
  }
  if (mag != 1) os << mag.get_str() << "*";
  os << var;
  if (exponent != 1) os << "^" << exponent;
}

}  // namespace

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t exponent) {
  std::vector<BigInt> v(exponent + 1);
  v[exponent] = c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const BigInt& IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : zero_int(); }

const BigInt& IntPoly::lead() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

BigInt IntPoly::operator()(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const BigInt& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (sgn(lead()) < 0) g = -g;
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(out));
}

IntPoly IntPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<BigInt> out(k + coeffs_.size());
  std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + static_cast<std::ptrdiff_t>(k));
  return IntPoly(std::move(out));
}

IntPoly IntPoly::reciprocal() const {
  std::vector<BigInt> out(coeffs_.rbegin(), coeffs_.rend());
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (BigInt& c : out.coeffs_) c = -c;
  return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& c) {
  for (BigInt& x : coeffs_) x *= c;
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  for (const BigInt& c : out) check_bit_cap(c);
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (sgn(coeffs_[i]) == 0) continue;
    append_term(os, first, coeffs_[i], static_cast<long>(i), var);
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

RatPoly::RatPoly(const IntPoly& p) {
  coeffs_.reserve(p.coeffs().size());
  for (const BigInt& c : p.coeffs()) coeffs_.emplace_back(c);
}

void RatPoly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const Rational& RatPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : zero_rat(); }

const Rational& RatPoly::lead() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational RatPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<unsigned long>(i));
  return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  RatPoly out = *this;
  Rational inv = 1 / lead();
  for (Rational& c : out.coeffs_) c *= inv;
  return out;
}

IntPoly RatPoly::to_primitive_int() const {
  if (is_zero()) return {};
  BigInt den = 1;
  for (const Rational& c : coeffs_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    BigInt q = den / coeffs_[i].get_den();
    out[i] = coeffs_[i].get_num() * q;
  }
  return IntPoly(std::move(out)).primitive_part();
}

RatPoly RatPoly::operator-() const {
  RatPoly out = *this;
  for (Rational& c : out.coeffs_) c = -c;
  return out;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& c) {
  for (Rational& x : coeffs_) x *= c;
  normalize();
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RatPoly(std::move(out));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& f, const RatPoly& g) {
  if (g.is_zero()) throw std::domain_error("polynomial division by zero");
  if (f.degree() < g.degree()) return {RatPoly{}, f};
  std::vector<Rational> rem(f.coeffs().begin(), f.coeffs().end());
  const std::size_t dg = static_cast<std::size_t>(g.degree());
  std::vector<Rational> quo(rem.size() - dg);
  const Rational inv = 1 / g.lead();
  for (std::size_t k = rem.size(); k-- > dg;) {
    if (sgn(rem[k]) == 0) continue;
    Rational c = rem[k] * inv;
    quo[k - dg] = c;
    for (std::size_t j = 0; j <= dg; ++j) rem[k - dg + j] -= c * g.coeff(j);
  }
  rem.resize(dg);
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly operator%(const RatPoly& f, const RatPoly& g) { return divmod(f, g).second; }

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  RatPoly g = gcd(RatPoly(a), RatPoly(b));
  return g.to_primitive_int();
}

RatPoly pow_t_mod(std::uint64_t n, const RatPoly& f) {
  if (f.is_zero()) throw std::domain_error("reduction modulo the zero polynomial");
  RatPoly result(std::vector<Rational>{Rational(1)});
  result = result % f;
  if (n == 0) return result;
  RatPoly t(std::vector<Rational>{Rational(0), Rational(1)});
  int top = 63;
  while (!((n >> top) & 1U)) --top;
  for (int bit = top; bit >= 0; --bit) {
    result = (result * result) % f;
    if ((n >> bit) & 1U) result = (result * t) % f;
  }
  return result;
}

std::vector<SquarefreeFactor> squarefree_decomposition(const IntPoly& f) {
  if (f.is_zero()) throw std::domain_error("square-free decomposition of the zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (f.degree() == 0) return out;
  RatPoly p(f);
  RatPoly dp = p.derivative();
  RatPoly a = gcd(p, dp);
  RatPoly b = divmod(p, a).first;
  RatPoly c = divmod(dp, a).first;
  RatPoly d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    RatPoly ai = gcd(b, d);
    b = divmod(b, ai).first;
    c = divmod(d, ai).first;
    if (ai.degree() > 0) out.push_back({ai.to_primitive_int(), i});
    d = c - b.derivative();
    ++i;
  }
  return out;
}

IntPoly divide_exact(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw std::domain_error("exact division by the zero polynomial");
  if (f.is_zero()) return {};
  if (f.degree() < g.degree()) throw std::logic_error("inexact polynomial division");
  std::vector<BigInt> rem(f.coeffs().begin(), f.coeffs().end());
  const std::size_t dg = static_cast<std::size_t>(g.degree());
  std::vector<BigInt> quo(rem.size() - dg);
  const BigInt& lg = g.lead();
  BigInt c;
  for (std::size_t k = rem.size(); k-- > dg;) {
    if (sgn(rem[k]) == 0) continue;
    if (!mpz_divisible_p(rem[k].get_mpz_t(), lg.get_mpz_t())) throw std::logic_error("inexact polynomial division");
    mpz_divexact(c.get_mpz_t(), rem[k].get_mpz_t(), lg.get_mpz_t());
    for (std::size_t j = 0; j <= dg; ++j) {
      const BigInt& gj = g.coeff(j);
      if (sgn(gj) != 0) mpz_submul(rem[k - dg + j].get_mpz_t(), c.get_mpz_t(), gj.get_mpz_t());
    }
    quo[k - dg] = c;
  }
  for (std::size_t j = 0; j < dg; ++j)
    if (sgn(rem[j]) != 0) throw std::logic_error("inexact polynomial division");
  return IntPoly(std::move(quo));
}

unsigned ord_at(const IntPoly& f, int point) {
  if (f.is_zero()) throw std::domain_error("order of the zero polynomial");
  if (point == 0) {
    unsigned k = 0;
    while (sgn(f.coeff(k)) == 0) ++k;
    return k;
  }
  if (point != 1) throw std::invalid_argument("ord_at supports the points 0 and 1");
  // Synthetic division by (t - 1).
  unsigned k = 0;
  std::vector<BigInt> c(f.coeffs().begin(), f.coeffs().end());
  while (c.size() > 1) {
    BigInt sum = 0;
    for (const BigInt& x : c) sum += x;
    if (sgn(sum) != 0) break;
    std::vector<BigInt> q(c.size() - 1);
    BigInt carry = 0;
    for (std::size_t i = c.size(); i-- > 1;) {
      carry += c[i];
      q[i - 1] = carry;
    }
    c = std::move(q);
    ++k;
  }
  return k;
}

IntPoly geometric_quotient(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("geometric quotient needs n >= 1");
  return IntPoly(std::vector<BigInt>(n, BigInt(1)));
}

IntPoly cyclotomic_polynomial(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("cyclotomic index must be >= 1");
  IntPoly out = IntPoly::monomial(1, n) - IntPoly::constant(1);
  for (std::uint64_t d = 1; d < n; ++d)
    if (n % d == 0) out = divide_exact(out, cyclotomic_polynomial(d));
  return out;
}

IntMatrix sylvester_matrix(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) throw std::domain_error("resultant of the zero polynomial");
  const std::size_t m = static_cast<std::size_t>(p.degree());
  const std::size_t n = static_cast<std::size_t>(q.degree());
  IntMatrix s(m + n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) s(r, r + i) = p.coeff(m - i);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) s(n + r, r + i) = q.coeff(n - i);
  return s;
}

BigInt resultant_sylvester(const IntPoly& p, const IntPoly& q) {
  IntMatrix s = sylvester_matrix(p, q);
  return determinant(std::move(s));
}

Rational resultant(const RatPoly& p0, const RatPoly& q0) {
  if (p0.is_zero() || q0.is_zero()) throw std::domain_error("resultant of the zero polynomial");
  RatPoly p = p0;
  RatPoly q = q0;
  Rational acc = 1;
  for (;;) {
    const long m = p.degree();
    const long n = q.degree();
    if (m == 0) {
      Rational out;
      mpz_pow_ui(out.get_num_mpz_t(), p.lead().get_num_mpz_t(), static_cast<unsigned long>(n));
      mpz_pow_ui(out.get_den_mpz_t(), p.lead().get_den_mpz_t(), static_cast<unsigned long>(n));
      out.canonicalize();
      return acc * out;
    }
    if (n < m) {
      if ((m * n) % 2 != 0) acc = -acc;
      std::swap(p, q);
      continue;
    }
    RatPoly r = q % p;
    if (r.is_zero()) return 0;
    Rational scale;
    const unsigned long e = static_cast<unsigned long>(n - r.degree());
    mpz_pow_ui(scale.get_num_mpz_t(), p.lead().get_num_mpz_t(), e);
    mpz_pow_ui(scale.get_den_mpz_t(), p.lead().get_den_mpz_t(), e);
    scale.canonicalize();
    acc *= scale;
    q = std::move(r);
  }
}

BigInt resultant_euclidean(const IntPoly& p, const IntPoly& q) {
  Rational r = resultant(RatPoly(p), RatPoly(q));
  if (r.get_den() != 1) throw std::logic_error("non-integral resultant of integer polynomials");
  return r.get_num();
}

BigInt resultant(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) throw std::domain_error("resultant of the zero polynomial");
  if (p.degree() + q.degree() <= 24) return resultant_sylvester(p, q);
  return resultant_euclidean(p, q);
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long low, IntPoly body) : low_(low), body_(std::move(body)) {
  if (body_.is_zero()) {
    low_ = 0;
    return;
  }
  unsigned k = ord_at(body_, 0);
  if (k > 0) {
    std::vector<BigInt> c(body_.coeffs().begin() + k, body_.coeffs().end());
    body_ = IntPoly(std::move(c));
    low_ += static_cast<long>(k);
  }
}

LaurentPoly LaurentPoly::monomial(const BigInt& c, long exponent) {
  if (sgn(c) == 0) return {};
  return LaurentPoly(exponent, IntPoly::constant(c));
}

BigInt LaurentPoly::coeff(long k) const {
  if (is_zero() || k < low_ || k > high()) return 0;
  return body_.coeff(static_cast<std::size_t>(k - low_));
}

LaurentPoly LaurentPoly::inverted() const {
  if (is_zero()) return {};
  return LaurentPoly(-high(), body_.reciprocal());
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  out.body_ = -out.body_;
  return out;
}

namespace {

// Brings both operands to the common base exponent min(low).
std::pair<IntPoly, IntPoly> align(const LaurentPoly& a, const LaurentPoly& b, long& base) {
  base = std::min(a.low(), b.low());
  return {a.body().shifted(static_cast<std::size_t>(a.low() - base)),
          b.body().shifted(static_cast<std::size_t>(b.low() - base))};
}

}  // namespace

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long base = 0;
  auto [x, y] = align(a, b, base);
  return LaurentPoly(base, x + y);
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return LaurentPoly(a.low_ + b.low_, a.body_ * b.body_);
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long k = high(); k >= low_; --k) {
    const BigInt& c = body_.coeff(static_cast<std::size_t>(k - low_));
    if (sgn(c) == 0) continue;
    append_term(os, first, c, k, var);
    first = false;
  }
  return os.str();
}

unsigned ord_at(const LaurentPoly& f, int point) {
  if (f.is_zero()) throw std::domain_error("order of the zero polynomial");
  return ord_at(f.body(), point);
}

bool is_self_reciprocal(const LaurentPoly& f) { return f.inverted() == f; }

LaurentPoly poly_matrix_det(const LaurentMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly::constant(1);

  std::vector<IntPoly> a(n * n);
  long shift_total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool any = false;
    long lo = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const LaurentPoly& x = m(i, j);
      if (x.is_zero()) continue;
      lo = any ? std::min(lo, x.low()) : x.low();
      any = true;
    }
    if (!any) return {};
    shift_total += lo;
    for (std::size_t j = 0; j < n; ++j) {
      const LaurentPoly& x = m(i, j);
      if (!x.is_zero()) a[i * n + j] = x.body().shifted(static_cast<std::size_t>(x.low() - lo));
    }
  }

  auto at = [&](std::size_t i, std::size_t j) -> IntPoly& { return a[i * n + j]; };
  int sign = 1;
  IntPoly prev = IntPoly::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t r = k;
    while (r < n && at(r, k).is_zero()) ++r;
    if (r == n) return {};
    if (r != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
      sign = -sign;
    }
    const IntPoly pivot = at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const IntPoly aik = at(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        IntPoly num = pivot * at(i, j) - aik * at(k, j);
        at(i, j) = divide_exact(num, prev);
      }
      at(i, k) = IntPoly();
    }
    prev = pivot;
  }
  IntPoly det = at(n - 1, n - 1);
  if (sign < 0) det = -det;
  return LaurentPoly(shift_total, std::move(det));
}

}  // namespace ihara_towers
