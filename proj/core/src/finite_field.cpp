#include "ihara_towers/finite_field.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ihara_towers/modular.hpp"

namespace ihara_towers {

namespace m = modular;

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (p < 2) throw std::invalid_argument("FpPoly needs a prime modulus");
  for (auto& x : c_) x %= p_;
  normalize();
}

FpPoly FpPoly::reduce(const IntPoly& f, std::uint64_t p) {
  std::vector<std::uint64_t> c(f.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = m::reduce(f.coeffs()[i], p);
  return FpPoly(p, std::move(c));
}

void FpPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint64_t FpPoly::lead() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return c_.back();
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(m::inv(lead(), p_));
}

FpPoly FpPoly::scaled(std::uint64_t c) const {
  FpPoly out(p_);
  out.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = m::mul(c_[i], c, p_);
  out.normalize();
  return out;
}

FpPoly FpPoly::derivative() const {
  FpPoly out(p_);
  if (c_.size() <= 1) return out;
  out.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out.c_[i - 1] = m::mul(c_[i], i % p_, p_);
  out.normalize();
  return out;
}

std::uint64_t FpPoly::operator()(std::uint64_t x) const {
  std::uint64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = m::add(m::mul(acc, x, p_), *it, p_);
  return acc;
}

IntPoly FpPoly::lift() const {
  std::vector<BigInt> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) mpz_set_ui(c[i].get_mpz_t(), c_[i]);
  return IntPoly(std::move(c));
}

FpPoly FpPoly::operator-() const { return scaled(p_ - 1); }

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  FpPoly out(a.p_);
  out.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = m::add(a.coeff(i), b.coeff(i), a.p_);
  out.normalize();
  return out;
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  FpPoly out(a.p_);
  out.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = m::sub(a.coeff(i), b.coeff(i), a.p_);
  out.normalize();
  return out;
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  FpPoly out(a.p_);
  if (a.is_zero() || b.is_zero()) return out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      out.c_[i + j] = m::add(out.c_[i + j], m::mul(a.c_[i], b.c_[j], a.p_), a.p_);
  }
  out.normalize();
  return out;
}

bool operator<(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

std::string FpPoly::to_string(const std::string& var) const {
  return lift().to_string(var);
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& f, const FpPoly& g) {
  if (g.is_zero()) throw std::domain_error("polynomial division by zero");
  const std::uint64_t p = f.prime();
  if (f.degree() < g.degree()) return {FpPoly(p), f};
  std::vector<std::uint64_t> r = f.coeffs();
  const std::size_t dg = static_cast<std::size_t>(g.degree());
  std::vector<std::uint64_t> q(r.size() - dg, 0);
  const std::uint64_t inv = m::inv(g.lead(), p);
  for (std::size_t k = r.size(); k-- > dg;) {
    if (r[k] == 0) continue;
    const std::uint64_t c = m::mul(r[k], inv, p);
    q[k - dg] = c;
    for (std::size_t j = 0; j <= dg; ++j) r[k - dg + j] = m::sub(r[k - dg + j], m::mul(c, g.coeff(j), p), p);
  }
  r.resize(dg);
  return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
}

FpPoly operator%(const FpPoly& f, const FpPoly& g) { return divmod(f, g).second; }

FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly mul_mod(const FpPoly& a, const FpPoly& b, const FpPoly& mod) { return (a * b) % mod; }

FpPoly pow_mod(const FpPoly& base, const BigInt& exponent, const FpPoly& mod) {
  if (sgn(exponent) < 0) throw std::invalid_argument("negative exponent");
  FpPoly result = FpPoly::constant(mod.prime(), 1) % mod;
  FpPoly b = base % mod;
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  if (sgn(exponent) == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = mul_mod(result, result, mod);
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = mul_mod(result, b, mod);
  }
  return result;
}

FpPoly inverse_mod(const FpPoly& a, const FpPoly& mod) {
  const std::uint64_t p = mod.prime();
  FpPoly r0 = mod, r1 = a % mod;
  FpPoly s0(p), s1 = FpPoly::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    FpPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw std::domain_error("element is not invertible");
  return (s0.scaled(m::inv(r0.lead(), p))) % mod;
}

namespace {

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// x^{p^k} mod g by repeated p-th powering.
FpPoly frobenius_power(const FpPoly& g, unsigned k) {
  const BigInt p(std::to_string(g.prime()));
  FpPoly h = FpPoly::x(g.prime()) % g;
  for (unsigned i = 0; i < k; ++i) h = pow_mod(h, p, g);
  return h;
}

FpPoly pth_root(const FpPoly& f) {
  const std::uint64_t p = f.prime();
  std::vector<std::uint64_t> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i]);
  return FpPoly(p, std::move(c));
}

void squarefree_parts(const FpPoly& f, unsigned scale, std::vector<FpFactor>& out) {
  if (f.degree() <= 0) return;
  FpPoly d = f.derivative();
  if (d.is_zero()) {
    squarefree_parts(pth_root(f), scale * static_cast<unsigned>(f.prime()), out);
    return;
  }
  FpPoly c = gcd(f, d);
  FpPoly w = divmod(f, c).first.monic();
  unsigned i = 1;
  while (w.degree() > 0) {
    FpPoly y = gcd(w, c);
    FpPoly fac = divmod(w, y).first.monic();
    if (fac.degree() > 0) out.push_back({fac, i * scale});
    w = y;
    c = divmod(c, y).first.monic();
    ++i;
  }
  if (c.degree() > 0) squarefree_parts(pth_root(c), scale * static_cast<unsigned>(f.prime()), out);
}

FpPoly random_poly(std::uint64_t p, int below_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  std::vector<std::uint64_t> c(static_cast<std::size_t>(below_degree));
  for (auto& x : c) x = dist(rng);
  return FpPoly(p, std::move(c));
}

void equal_degree_split(const FpPoly& g, unsigned d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (g.degree() == static_cast<int>(d)) {
    out.push_back(g.monic());
    return;
  }
  const std::uint64_t p = g.prime();
  for (;;) {
    FpPoly a = random_poly(p, g.degree(), rng);
    if (a.degree() <= 0) continue;
    FpPoly b(p);
    if (p == 2) {
      FpPoly term = a;
      b = a;
      for (unsigned i = 1; i < d; ++i) {
        term = mul_mod(term, term, g);
        b = b + term;
      }
    } else {
      BigInt e = (pow(BigInt(std::to_string(p)), d) - 1) / 2;
      b = pow_mod(a, e, g) - FpPoly::constant(p, 1);
    }
    FpPoly h = gcd(g, b);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree_split(h, d, rng, out);
      equal_degree_split(divmod(g, h).first.monic(), d, rng, out);
      return;
    }
  }
}

// Irreducible factors of a monic square-free polynomial.
std::vector<FpPoly> split_squarefree(const FpPoly& f, std::mt19937_64& rng) {
  std::vector<FpPoly> out;
  const std::uint64_t p = f.prime();
  const BigInt pb(std::to_string(p));
  FpPoly rest = f;
  FpPoly h = FpPoly::x(p) % rest;
  for (unsigned d = 1; rest.degree() > 0; ++d) {
    if (2 * static_cast<int>(d) > rest.degree()) {
      out.push_back(rest.monic());
      break;
    }
    h = pow_mod(h, pb, rest);
    FpPoly g = gcd(rest, h - FpPoly::x(p));
    if (g.degree() > 0) {
      equal_degree_split(g, d, rng, out);
      rest = divmod(rest, g).first.monic();
      h = h % rest;
    }
  }
  return out;
}

}  // namespace

bool is_irreducible(const FpPoly& g) {
  if (g.degree() < 1) return false;
  const unsigned n = static_cast<unsigned>(g.degree());
  FpPoly gm = g.monic();
  FpPoly x = FpPoly::x(g.prime()) % gm;
  if (!(frobenius_power(gm, n) == x)) return false;
  for (unsigned q : prime_divisors(n)) {
    FpPoly h = frobenius_power(gm, n / q) - x;
    if (gcd(gm, h).degree() != 0) return false;
  }
  return true;
}

std::vector<FpFactor> factor_mod_p(const FpPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw std::domain_error("factorization of the zero polynomial mod p");
  std::vector<FpFactor> parts;
  squarefree_parts(f.monic(), 1, parts);
  std::mt19937_64 rng(seed);
  std::vector<FpFactor> out;
  for (const FpFactor& part : parts) {
    for (FpPoly& irr : split_squarefree(part.factor, rng)) out.push_back({std::move(irr), part.multiplicity});
  }
  std::sort(out.begin(), out.end(), [](const FpFactor& a, const FpFactor& b) {
    if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
    return a.factor < b.factor;
  });
  // Identical irreducibles can only come from distinct square-free levels of
  // an inseparable input; fold them together.
  std::vector<FpFactor> folded;
  for (FpFactor& fac : out) {
    if (!folded.empty() && folded.back().factor == fac.factor) {
      folded.back().multiplicity += fac.multiplicity;
    } else {
      folded.push_back(std::move(fac));
    }
  }
  return folded;
}

std::vector<FpFactor> factor_mod_p(const IntPoly& f, std::uint64_t p, std::uint64_t seed) {
  if (!is_probable_prime(BigInt(std::to_string(p)))) throw std::invalid_argument("modulus is not prime");
  FpPoly fp = FpPoly::reduce(f, p);
  if (fp.is_zero()) throw std::domain_error("polynomial vanishes mod p");
  return factor_mod_p(fp, seed);
}

Fq::Fq(FpPoly modulus) : modulus_(modulus.monic()) {
  if (!is_irreducible(modulus_)) throw std::invalid_argument("Fq modulus is not irreducible");
}

BigInt Fq::cardinality() const { return ihara_towers::pow(BigInt(std::to_string(characteristic())), degree()); }

// ---------------------------------------------------------------- integers

namespace {

struct BigLess {
  bool operator()(const BigInt& a, const BigInt& b) const { return cmp(a, b) < 0; }
};
using PrimeMap = std::map<BigInt, unsigned, BigLess>;

void add_prime(PrimeMap& acc, const BigInt& q, unsigned k) { acc[q] += k; }

// Brent's variant of Pollard rho; returns a nontrivial factor or 0.
BigInt pollard_brent(const BigInt& n, std::uint64_t& budget, std::uint64_t c_seed) {
  BigInt y = 2, c = BigInt(std::to_string(c_seed)), g = 1, q = 1, x, ys;
  const std::uint64_t block = 128;
  std::uint64_t r = 1;
  auto f = [&](BigInt& v) {
    v = v * v + c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) f(y);
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      const std::uint64_t lim = std::min(block, r - k);
      for (std::uint64_t i = 0; i < lim; ++i) {
        f(y);
        BigInt diff = abs(x - y);
        q = q * diff;
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += lim;
      if (budget <= lim) return 0;
      budget -= lim;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      f(ys);
      BigInt diff = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      if (budget-- == 0) return 0;
    } while (g == 1);
  }
  return g == n ? BigInt(0) : g;
}

void factor_rest(const BigInt& n, std::uint64_t& budget, PrimeMap& acc, bool& complete) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    add_prime(acc, n, 1);
    return;
  }
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long k = mpz_sizeinbase(n.get_mpz_t(), 2); k >= 2; --k) {
      BigInt root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        PrimeMap sub;
        factor_rest(root, budget, sub, complete);
        for (auto& [q, e] : sub) add_prime(acc, q, e * static_cast<unsigned>(k));
        return;
      }
    }
  }
  for (std::uint64_t c = 1; c < 20; ++c) {
    BigInt d = pollard_brent(n, budget, c);
    if (d != 0) {
      factor_rest(d, budget, acc, complete);
      factor_rest(n / d, budget, acc, complete);
      return;
    }
    if (budget == 0) break;
  }
  complete = false;
}

}  // namespace

IntegerFactorization factor_integer(const BigInt& n_in, const FactorBudget& budget) {
  if (sgn(n_in) <= 0) throw std::invalid_argument("factor_integer needs a positive integer");
  PrimeMap acc;
  BigInt n = n_in;
  for (std::uint64_t d = 2; d <= budget.trial_bound && d * d <= n; ++d) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      unsigned k = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
        ++k;
      }
      acc[BigInt(std::to_string(d))] += k;
    }
  }
  IntegerFactorization out;
  std::uint64_t rho = budget.rho_iterations;
  factor_rest(n, rho, acc, out.complete);
  for (auto& [q, e] : acc) out.factors.emplace_back(q, e);
  return out;
}

IntegerFactorization factor_prime_power_minus_one(std::uint64_t p, unsigned f, const FactorBudget& budget) {
  if (f == 0) throw std::invalid_argument("extension degree must be >= 1");
  PrimeMap acc;
  IntegerFactorization out;
  const BigInt pb(std::to_string(p));
  for (unsigned d = 1; d <= f; ++d) {
    if (f % d) continue;
    BigInt piece = cyclotomic_polynomial(d)(pb);
    IntegerFactorization part = factor_integer(piece, budget);
    out.complete = out.complete && part.complete;
    for (auto& [q, e] : part.factors) acc[q] += e;
  }
  for (auto& [q, e] : acc) out.factors.emplace_back(q, e);
  return out;
}

bool power_is_one(const FpPoly& g, const BigInt& n) {
  return pow_mod(FpPoly::x(g.prime()), n, g).is_one();
}

std::optional<BigInt> multiplicative_order(const FpPoly& g, const FactorBudget& budget) {
  if (g.degree() < 1) throw std::invalid_argument("order modulo a constant");
  if (g.coeff(0) == 0) throw std::invalid_argument("t is not a unit modulo g");
  const unsigned f = static_cast<unsigned>(g.degree());
  IntegerFactorization fac = factor_prime_power_minus_one(g.prime(), f, budget);
  if (!fac.complete) return std::nullopt;
  BigInt n = pow(BigInt(std::to_string(g.prime())), f) - 1;
  for (const auto& [q, e] : fac.factors) {
    for (unsigned i = 0; i < e; ++i) {
      BigInt candidate = n / q;
      if (!power_is_one(g, candidate)) break;
      n = candidate;
    }
  }
  return n;
}

}  // namespace ihara_towers
