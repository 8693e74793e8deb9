#include "ihara_towers/mahler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "ihara_towers/padic.hpp"

namespace ihara_towers {

namespace {

using Complex = std::complex<double>;

void require_prime(const BigInt& p) {
  if (p < 2 || !is_probable_prime(p)) throw std::invalid_argument(to_string(p) + " is not prime");
}

std::uint64_t small_prime(const BigInt& p) {
  require_prime(p);
  if (!p.fits_ulong_p()) throw std::invalid_argument("prime exceeds 64 bits");
  return p.get_ui();
}

IntPoly strip_t_power(const IntPoly& f) {
  std::size_t low = 0;
  while (sgn(f.coeff(low)) == 0) ++low;
  std::vector<BigInt> body(f.coeffs().begin() + static_cast<std::ptrdiff_t>(low), f.coeffs().end());
  return IntPoly(std::move(body));
}

unsigned strip_root(IntPoly& h, long root) {
  const IntPoly linear{-root, 1};
  unsigned count = 0;
  while (h.degree() > 0 && sgn(h(BigInt(root))) == 0) {
    h = divide_exact(h, linear);
    ++count;
  }
  return count;
}

Complex horner(const std::vector<double>& c, Complex z) {
  Complex acc = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  return acc;
}

bool aberth_attempt(const std::vector<double>& c, const std::vector<double>& dc, double tol, std::mt19937_64& rng,
                    std::vector<Complex>& z) {
  const std::size_t d = c.size() - 1;
  double bound = 0.0;
  for (std::size_t i = 0; i < d; ++i) bound = std::max(bound, std::abs(c[i] / c[d]));
  const double radius = 1.0 + bound;
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  const double offset = phase(rng);
  z.resize(d);
  for (std::size_t k = 0; k < d; ++k)
    z[k] = std::polar(radius, offset + 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d));

  for (int iter = 0; iter < 1000; ++iter) {
    double worst = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      const Complex value = horner(c, z[k]);
      if (value == 0.0) continue;
      const Complex ratio = value / horner(dc, z[k]);
      Complex repulsion = 0.0;
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      const Complex step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) return false;
      z[k] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[k])));
    }
    if (worst < tol) return true;
  }
  return false;
}

}  // namespace

double PadicMeasure::log_measure() const { return -static_cast<double>(exponent) * log_abs(prime); }

PadicMeasure mahler_padic(const IntPoly& f, const BigInt& p) {
  if (f.is_zero()) throw std::domain_error("p-adic measure of the zero polynomial");
  require_prime(p);
  PadicMeasure out;
  out.prime = p;
  out.exponent = std::numeric_limits<long>::max();
  for (const BigInt& c : f.coeffs())
    if (sgn(c) != 0) out.exponent = std::min(out.exponent, valuation(c, p));
  return out;
}

std::vector<Complex> aberth_roots(const IntPoly& f, double tol, std::uint64_t seed) {
  if (f.is_zero()) throw std::domain_error("roots of the zero polynomial");
  if (f.degree() == 0) return {};
  if (sgn(f.coeff(0)) == 0) throw std::invalid_argument("aberth_roots needs a nonzero constant term");
  std::vector<double> c;
  for (const BigInt& x : f.coeffs()) c.push_back(x.get_d());
  if (f.degree() == 1) return {Complex(-c[0] / c[1], 0.0)};
  std::vector<double> dc;
  for (std::size_t i = 1; i < c.size(); ++i) dc.push_back(static_cast<double>(i) * c[i]);

  std::mt19937_64 rng(seed);
  std::vector<Complex> roots;
  for (int attempt = 0; attempt <= 10; ++attempt)
    if (aberth_attempt(c, dc, tol, rng, roots)) return roots;
  throw std::runtime_error("Aberth iteration did not converge for " + f.to_string());
}

ArchMeasure mahler_archimedean(const IntPoly& f, double tol, std::uint64_t seed) {
  if (f.is_zero()) throw std::domain_error("Mahler measure of the zero polynomial");
  ArchMeasure out;
  out.log_value = log_abs(f.lead());
  IntPoly h = strip_t_power(f);
  strip_root(h, 1);
  strip_root(h, -1);
  if (h.degree() > 0) {
    for (const SquarefreeFactor& sf : squarefree_decomposition(h)) {
      double sum = 0.0;
      for (const Complex& z : aberth_roots(sf.factor, tol, seed)) sum += std::log(std::max(1.0, std::abs(z)));
      out.log_value += static_cast<double>(sf.multiplicity) * sum;
    }
  }
  out.value = std::exp(out.log_value);
  out.certified_no_unit_roots = count_unit_circle_roots(f) == 0;
  return out;
}

IntPoly reciprocal_trace_polynomial(const IntPoly& f) {
  if (f.is_zero() || f.degree() % 2 != 0 || f.reciprocal() != f)
    throw std::invalid_argument("not palindromic of even degree: " + f.to_string());
  const std::size_t m = static_cast<std::size_t>(f.degree()) / 2;
  IntPoly prev = IntPoly::constant(2);
  IntPoly cur{0, 1};
  IntPoly out = IntPoly::constant(f.coeff(m));
  const IntPoly x{0, 1};
  for (std::size_t k = 1; k <= m; ++k) {
    out += cur * f.coeff(m + k);
    IntPoly next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return out;
}

unsigned sturm_count(const IntPoly& q, const Rational& lo, const Rational& hi) {
  if (q.is_zero()) throw std::domain_error("Sturm count of the zero polynomial");
  if (q.degree() == 0) return 0;
  std::vector<RatPoly> seq{RatPoly(q), RatPoly(q).derivative()};
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    RatPoly r = -(seq[seq.size() - 2] % seq.back());
    if (r.is_zero()) break;
    seq.push_back(std::move(r));
  }
  auto variations = [&](const Rational& x) {
    unsigned changes = 0;
    int last = 0;
    for (const RatPoly& p : seq) {
      const int s = sgn(p(x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  };
  if (sgn(RatPoly(q)(lo)) == 0 || sgn(RatPoly(q)(hi)) == 0)
    throw std::invalid_argument("Sturm interval endpoint is a root");
  const unsigned a = variations(lo);
  const unsigned b = variations(hi);
  return a >= b ? a - b : 0;
}

unsigned count_unit_circle_roots(const IntPoly& f) {
  if (f.is_zero()) throw std::domain_error("unit-circle count of the zero polynomial");
  IntPoly h = strip_t_power(f);
  unsigned total = strip_root(h, 1) + strip_root(h, -1);
  if (h.degree() <= 0) return total;
  const IntPoly g = gcd(h, h.reciprocal());
  if (g.degree() <= 0) return total;
  for (const SquarefreeFactor& sf : squarefree_decomposition(g)) {
    IntPoly palin = sf.factor;
    if (palin.reciprocal() != palin) {
      if (palin.reciprocal() == -palin) throw std::logic_error("anti-palindromic factor without root at ±1");
      continue;
    }
    const IntPoly q = reciprocal_trace_polynomial(palin);
    total += 2 * sf.multiplicity * sturm_count(q, Rational(-2), Rational(2));
  }
  return total;
}

double ArchimedeanAsymptotic::predicted_log_kappa(std::uint64_t n) const {
  const double x = static_cast<double>(n);
  return rate * x + static_cast<double>(poly_order) * std::log(x) + constant;
}

ArchimedeanAsymptotic archimedean_asymptotic(const TowerAnalysis& ta) {
  ArchimedeanAsymptotic out;
  out.rate = mahler_archimedean(ta.j_poly).log_value;
  out.poly_order = ta.e - 1;
  out.constant = log_abs(ta.kappa_base) - log_abs(ta.delta1);
  out.applicable = count_unit_circle_roots(ta.j_poly) == 0;
  return out;
}

long PadicAffineLaw::predicted_ord(std::uint64_t n) const {
  return static_cast<long>(poly_order) * valuation(BigInt(static_cast<unsigned long>(n)), prime) +
         mu * static_cast<long>(n) + c;
}

PadicAffineLaw padic_asymptotic_no_unit_roots(const TowerAnalysis& ta, const BigInt& p) {
  const std::uint64_t prime = small_prime(p);
  PadicAffineLaw out;
  out.prime = p;
  out.mu = mahler_padic(ta.j_poly, p).exponent;
  out.poly_order = ta.e - 1;
  out.c = valuation(ta.kappa_base, p) - valuation(ta.delta1, p);
  out.applicable = newton_polygon(ta.j_poly, prime).slope_zero_length() == 0;
  return out;
}

}  // namespace ihara_towers
