#include "ihara_towers/padic.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "ihara_towers/errors.hpp"
#include "ihara_towers/mahler.hpp"
#include "ihara_towers/modular.hpp"

namespace ihara_towers {

namespace {

BigInt big(std::uint64_t x) {
  BigInt out;
  mpz_set_ui(out.get_mpz_t(), x);
  return out;
}

unsigned ord_small(std::uint64_t n, std::uint64_t p) {
  unsigned k = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned k) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / base) throw ResourceError("index overflows 64 bits");
    out *= base;
  }
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) throw ResourceError("index overflows 64 bits");
  return a * b;
}

void require_prime(std::uint64_t p) {
  if (!is_probable_prime(big(p))) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

// (Z/p^K)[x]/(g) for a monic g irreducible mod p.
class UnramifiedRing {
 public:
  using Elem = std::vector<BigInt>;

  UnramifiedRing(std::uint64_t p, unsigned precision, const FpPoly& g)
      : p_(p), precision_(precision), modulus_(ihara_towers::pow(big(p), precision)), g_(g.monic().lift()),
        f_(static_cast<std::size_t>(g.degree())) {}

  Elem zero() const { return Elem(f_); }
  Elem constant(const BigInt& c) const {
    Elem out = zero();
    out[0] = c;
    normalize(out);
    return out;
  }
  Elem x() const {
    if (f_ == 1) return constant(-g_.coeff(0));
    Elem out = zero();
    out[1] = 1;
    return out;
  }

  Elem add(const Elem& a, const Elem& b) const {
    Elem out(f_);
    for (std::size_t i = 0; i < f_; ++i) out[i] = a[i] + b[i];
    normalize(out);
    return out;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem out(f_);
    for (std::size_t i = 0; i < f_; ++i) out[i] = a[i] - b[i];
    normalize(out);
    return out;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    std::vector<BigInt> prod(2 * f_ - 1);
    for (std::size_t i = 0; i < f_; ++i) {
      if (sgn(a[i]) == 0) continue;
      for (std::size_t j = 0; j < f_; ++j) mpz_addmul(prod[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    for (std::size_t k = prod.size(); k-- > f_;) {
      if (sgn(prod[k]) == 0) continue;
      mpz_mod(prod[k].get_mpz_t(), prod[k].get_mpz_t(), modulus_.get_mpz_t());
      for (std::size_t i = 0; i < f_; ++i)
        mpz_submul(prod[k - f_ + i].get_mpz_t(), prod[k].get_mpz_t(), g_.coeff(i).get_mpz_t());
    }
    prod.resize(f_);
    normalize(prod);
    return prod;
  }
  Elem pow(Elem base, const BigInt& e) const {
    Elem out = constant(1);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (sgn(e) == 0) return out;
    for (std::size_t i = bits; i-- > 0;) {
      out = mul(out, out);
      if (mpz_tstbit(e.get_mpz_t(), i)) out = mul(out, base);
    }
    return out;
  }
  Elem eval(const IntPoly& poly, const Elem& y) const {
    Elem acc = zero();
    for (std::size_t i = poly.coeffs().size(); i-- > 0;) acc = add(mul(acc, y), constant(poly.coeffs()[i]));
    return acc;
  }
  // Inverse of a unit: invert mod p, then Newton w <- w (2 - u w).
  Elem inverse(const Elem& u) const {
    std::vector<std::uint64_t> residues(f_);
    for (std::size_t i = 0; i < f_; ++i) residues[i] = modular::reduce(u[i], p_);
    FpPoly gbar = FpPoly::reduce(g_, p_);
    FpPoly wbar = inverse_mod(FpPoly(p_, residues), gbar);
    Elem w = zero();
    for (std::size_t i = 0; i < f_; ++i) w[i] = big(wbar.coeff(i));
    const Elem two = constant(2);
    for (unsigned iter = 0; iter < 64; ++iter) {
      Elem uw = mul(u, w);
      if (uw == constant(1)) return w;
      w = mul(w, sub(two, uw));
    }
    throw std::logic_error("unit inverse did not converge");
  }
  // min ord_p of the coordinates; precision_ when the element vanishes.
  long valuation(const Elem& a) const {
    long best = static_cast<long>(precision_);
    for (const BigInt& c : a)
      if (sgn(c) != 0) best = std::min(best, valuation_of(c));
    return best;
  }
  bool is_zero(const Elem& a) const {
    return std::all_of(a.begin(), a.end(), [](const BigInt& c) { return sgn(c) == 0; });
  }
  unsigned precision() const { return precision_; }

 private:
  long valuation_of(const BigInt& c) const { return ihara_towers::valuation(c, big(p_)); }
  void normalize(Elem& a) const {
    for (BigInt& c : a) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), modulus_.get_mpz_t());
  }

  std::uint64_t p_;
  unsigned precision_;
  BigInt modulus_;
  IntPoly g_;
  std::size_t f_;
};

struct LiftAttempt {
  bool ok = false;
  SimpleRootLift data;
};

LiftAttempt try_lift(const IntPoly& unit_poly, const FpPoly& g, std::uint64_t p, unsigned precision) {
  UnramifiedRing ring(p, precision, g);
  const IntPoly deriv = unit_poly.derivative();

  UnramifiedRing::Elem beta = ring.x();
  bool converged = false;
  for (unsigned iter = 0; iter < 64; ++iter) {
    UnramifiedRing::Elem value = ring.eval(unit_poly, beta);
    if (ring.is_zero(value)) {
      converged = true;
      break;
    }
    beta = ring.sub(beta, ring.mul(value, ring.inverse(ring.eval(deriv, beta))));
  }
  if (!converged) throw std::logic_error("Hensel iteration did not converge");

  const BigInt frobenius = pow(big(p), static_cast<unsigned long>(g.degree()));
  UnramifiedRing::Elem xi = ring.x();
  converged = false;
  for (unsigned iter = 0; iter <= precision + 2; ++iter) {
    UnramifiedRing::Elem next = ring.pow(xi, frobenius);
    if (next == xi) {
      converged = true;
      break;
    }
    xi = std::move(next);
  }
  if (!converged) throw std::logic_error("Teichmüller iteration did not converge");

  LiftAttempt out;
  const long ord0 = ring.valuation(ring.sub(beta, xi));
  if (ord0 >= static_cast<long>(precision)) return out;
  out.data.ord_difference = ord0;
  out.data.s = (p == 2 && ord0 == 1) ? 1 : 0;
  out.data.ord_at_s = ord0;
  if (out.data.s == 1) {
    const long ord1 = ring.valuation(ring.sub(ring.mul(beta, beta), ring.mul(xi, xi)));
    if (ord1 >= static_cast<long>(precision)) return out;
    out.data.ord_at_s = ord1;
  }
  out.data.precision = precision;
  out.ok = true;
  return out;
}

SimpleRootLift compute_lift(const IntPoly& unit_poly, const FpPoly& g, std::uint64_t p, const PadicOptions& options) {
  unsigned precision = std::max(2U, options.precision);
  for (;;) {
    LiftAttempt attempt = try_lift(unit_poly, g, p, precision);
    if (attempt.ok) return attempt.data;
    if (precision >= options.precision_cap)
      throw ResourceError("p-adic precision cap of " + std::to_string(options.precision_cap) + " digits reached");
    precision = std::min(2 * precision, options.precision_cap);
  }
}

// Smallest k with t^{base * ell^k} = 1 mod g, provided t^{base * ell^max_k} = 1.
std::optional<unsigned> minimal_ell_exponent(const FpPoly& g, const BigInt& base, std::uint64_t ell, unsigned max_k) {
  const BigInt l = big(ell);
  if (!power_is_one(g, base * pow(l, max_k))) return std::nullopt;
  for (unsigned k = 0; k <= max_k; ++k)
    if (power_is_one(g, base * pow(l, k))) return k;
  return max_k;
}

unsigned ell_valuation_of_group_order(std::uint64_t p, unsigned f, std::uint64_t ell) {
  BigInt q = pow(big(p), f) - 1;
  return static_cast<unsigned>(valuation(q, big(ell)));
}

BigInt lcm_of(const std::vector<BigInt>& xs) {
  BigInt out = 1;
  for (const BigInt& x : xs) mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), x.get_mpz_t());
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Newton polygon

unsigned NewtonPolygon::slope_zero_length() const {
  unsigned total = 0;
  for (const NewtonSegment& s : segments)
    if (sgn(s.slope) == 0) total += s.length;
  return total;
}

NewtonPolygon newton_polygon(const IntPoly& f, std::uint64_t p) {
  if (f.is_zero()) throw std::domain_error("Newton polygon of the zero polynomial");
  require_prime(p);
  struct Pt {
    long x, y;
  };
  std::vector<Pt> hull;
  const BigInt pb = big(p);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (sgn(f.coeffs()[i]) == 0) continue;
    Pt b{static_cast<long>(i), valuation(f.coeffs()[i], pb)};
    while (hull.size() >= 2) {
      const Pt& o = hull[hull.size() - 2];
      const Pt& a = hull.back();
      const long cross = (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(b);
  }
  NewtonPolygon out;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    Rational slope(hull[i].y - hull[i - 1].y, hull[i].x - hull[i - 1].x);
    slope.canonicalize();
    out.segments.push_back({slope, static_cast<unsigned>(hull[i].x - hull[i - 1].x)});
  }
  return out;
}

// ---------------------------------------------------------------- unit roots

bool UnitFactor::order_divides(const BigInt& n) const {
  if (order) return mpz_divisible_p(n.get_mpz_t(), order->get_mpz_t()) != 0;
  return power_is_one(factor, n);
}

bool UnitFactor::order_divides(std::uint64_t n) const { return order_divides(big(n)); }

unsigned UnitRootStructure::unit_root_count() const {
  unsigned total = 0;
  for (const UnitFactor& f : factors) total += f.root_count();
  return total;
}

bool UnitRootStructure::orders_available() const {
  return std::all_of(factors.begin(), factors.end(), [](const UnitFactor& f) { return f.order.has_value(); });
}

std::vector<BigInt> UnitRootStructure::order_set() const {
  std::vector<BigInt> out;
  for (const UnitFactor& f : factors) {
    if (!f.order) throw ResourceError("multiplicative order unavailable for " + f.factor.to_string());
    if (std::find(out.begin(), out.end(), *f.order) == out.end()) out.push_back(*f.order);
  }
  std::sort(out.begin(), out.end());
  return out;
}

UnitRootStructure unit_root_structure(const IntPoly& j, std::uint64_t p, const PadicOptions& options) {
  if (j.is_zero()) throw std::domain_error("unit roots of the zero polynomial");
  require_prime(p);
  UnitRootStructure s;
  s.prime = p;
  s.content_valuation = mahler_padic(j, big(p)).exponent;
  const BigInt scale = pow(big(p), static_cast<unsigned long>(s.content_valuation));
  std::vector<BigInt> coeffs(j.coeffs().begin(), j.coeffs().end());
  for (BigInt& c : coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), scale.get_mpz_t());
  s.unit_poly = IntPoly(std::move(coeffs));

  FpPoly reduced = FpPoly::reduce(s.unit_poly, p);
  std::size_t low = 0;
  while (reduced.coeff(low) == 0) ++low;
  std::vector<std::uint64_t> body(reduced.coeffs().begin() + static_cast<std::ptrdiff_t>(low), reduced.coeffs().end());
  s.unit_part = FpPoly(p, std::move(body));

  if (s.unit_part.degree() > 0) {
    for (FpFactor& fac : factor_mod_p(s.unit_part, options.seed)) {
      UnitFactor u;
      u.degree = static_cast<unsigned>(fac.factor.degree());
      u.multiplicity = fac.multiplicity;
      u.order = multiplicative_order(fac.factor, options.budget);
      u.factor = std::move(fac.factor);
      s.ramified = s.ramified || u.multiplicity > 1;
      s.factors.push_back(std::move(u));
    }
  }
  if (s.unit_root_count() != newton_polygon(j, p).slope_zero_length())
    throw std::logic_error("unit part disagrees with the Newton polygon");
  return s;
}

UnitRootStructure unit_root_structure_with_lifts(const IntPoly& j, std::uint64_t p, const PadicOptions& options) {
  UnitRootStructure s = unit_root_structure(j, p, options);
  for (UnitFactor& f : s.factors)
    if (f.multiplicity == 1) f.lift = compute_lift(s.unit_poly, f.factor, p, options);
  return s;
}

long ord_delta_exact(const IntPoly& j, std::uint64_t p, std::uint64_t n) {
  BigInt d = pierce_lehmer(j, n);
  if (sgn(d) == 0) throw std::domain_error("Δ_" + std::to_string(n) + " vanishes");
  return valuation(d, big(p));
}

unsigned lambda_poly(const UnitRootStructure& s, std::uint64_t n) {
  unsigned total = 0;
  for (const UnitFactor& f : s.factors)
    if (f.order_divides(n)) total += f.root_count();
  return total;
}

unsigned lambda_for_n(const UnitRootStructure& s, std::uint64_t n, unsigned e) {
  if (e == 0) throw std::invalid_argument("tower exponent e must be >= 1");
  return lambda_poly(s, n) + e - 1;
}

unsigned s_bound(const UnitRootStructure& s) {
  const unsigned d = s.unit_root_count();
  if (d == 0) return 0;
  unsigned k = 0;
  BigInt pk = 1;
  while (pk * big(s.prime - 1) <= big(d)) {
    pk *= big(s.prime);
    ++k;
  }
  return k;
}

SaturationIndex saturation_index(const UnitRootStructure& s) {
  SaturationIndex out;
  for (const UnitFactor& f : s.factors) {
    if (!f.lift) {
      out.value = std::max(out.value, s_bound(s));
      out.is_bound = true;
    } else {
      out.value = std::max(out.value, f.lift->s);
    }
  }
  return out;
}

std::optional<Rational> nu_structural(const UnitRootStructure& s, std::uint64_t n) {
  const unsigned k = ord_small(n, s.prime);
  Rational total = 0;
  for (const UnitFactor& f : s.factors) {
    if (!f.order_divides(n)) continue;
    if (!f.lift) return std::nullopt;
    const unsigned r = std::min(k, f.lift->s);
    const long value = (r == 0 ? f.lift->ord_difference : f.lift->ord_at_s) - static_cast<long>(r);
    total += Rational(static_cast<long>(f.degree) * value);
  }
  return total;
}

Rational nu_from_oracle(long ord_delta, std::uint64_t p, std::uint64_t n, long mu, unsigned lambda) {
  const long k = static_cast<long>(ord_small(n, p));
  BigInt mu_term = big(n) * mu;
  BigInt out = BigInt(ord_delta) - mu_term - BigInt(static_cast<long>(lambda) * k);
  return Rational(out);
}

Rational nu_from_oracle(const IntPoly& j, std::uint64_t p, std::uint64_t n, long mu, unsigned lambda) {
  return nu_from_oracle(ord_delta_exact(j, p, n), p, n, mu, lambda);
}

const char* to_string(NuSource source) { return source == NuSource::kStructural ? "structural" : "oracle"; }

// ---------------------------------------------------------------- report

PadicReport padic_report(const TowerAnalysis& ta, std::uint64_t p, std::uint64_t n_max, const PadicOptions& options) {
  PadicReport rep;
  rep.prime = p;
  rep.structure = unit_root_structure_with_lifts(ta.j_poly, p, options);
  rep.mu = rep.structure.content_valuation;
  rep.c = valuation(ta.kappa_base, big(p)) - valuation(ta.delta1, big(p));
  rep.saturation = saturation_index(rep.structure);

  const std::vector<BigInt> deltas = pierce_lehmer_range(ta.j_poly, n_max);
  rep.rows.reserve(n_max);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const BigInt& delta = deltas[n - 1];
    if (sgn(delta) == 0) throw std::domain_error("Δ_" + std::to_string(n) + " vanishes");
    PadicRow row;
    row.n = n;
    row.ord = valuation(kappa_via_formula(ta, n, delta), big(p));
    row.mu_term = rep.mu * static_cast<long>(n);
    const unsigned lam = lambda_poly(rep.structure, n);
    row.lambda = lam + ta.e - 1;
    row.nu_oracle = nu_from_oracle(valuation(delta, big(p)), p, n, rep.mu, lam);
    row.nu_structural = nu_structural(rep.structure, n);
    row.source = row.nu_structural ? NuSource::kStructural : NuSource::kOracle;
    row.nu = row.nu_structural ? *row.nu_structural : row.nu_oracle;

    const Rational total = Rational(row.mu_term) + Rational(static_cast<long>(row.lambda * ord_small(n, p))) + row.nu +
                           Rational(rep.c);
    if (total != Rational(row.ord))
      throw std::logic_error("p-adic identity fails at p = " + std::to_string(p) + ", n = " + std::to_string(n));
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

// ---------------------------------------------------------------- Iwasawa / Washington

IwasawaInvariants iwasawa_invariants(const IntPoly& j, std::uint64_t p, const PadicOptions& options) {
  const UnitRootStructure s = unit_root_structure_with_lifts(j, p, options);
  IwasawaInvariants out;
  out.mu = s.content_valuation;
  out.lambda = lambda_poly(s, 1);

  unsigned k_max = 0;
  bool simple = true;
  for (const UnitFactor& f : s.factors) {
    if (!f.order_divides(1)) continue;
    if (f.lift) {
      k_max = std::max(k_max, f.lift->s);
    } else {
      simple = false;
    }
  }
  if (!simple) k_max = std::max(k_max, s_bound(s));

  const std::uint64_t n_max = checked_pow(p, k_max);
  if (simple) {
    out.nu = *nu_structural(s, n_max);
    out.source = NuSource::kStructural;
  } else {
    out.nu = nu_from_oracle(j, p, n_max, out.mu, out.lambda);
    out.source = NuSource::kOracle;
  }
  auto law = [&](unsigned k) -> Rational {
    return Rational(big(checked_pow(p, k)) * out.mu) + Rational(static_cast<long>(out.lambda * k)) + out.nu;
  };
  out.k0 = k_max;
  while (out.k0 > 0 && Rational(ord_delta_exact(j, p, checked_pow(p, out.k0 - 1))) == law(out.k0 - 1)) --out.k0;
  for (unsigned k = out.k0; k <= out.k0 + 2; ++k)
    if (Rational(ord_delta_exact(j, p, checked_pow(p, k))) != law(k))
      throw std::logic_error("Iwasawa law fails at k = " + std::to_string(k));
  return out;
}

WashingtonInvariants washington_invariants(const IntPoly& j, std::uint64_t p, std::uint64_t ell,
                                           const PadicOptions& options) {
  require_prime(ell);
  if (ell == p) throw std::invalid_argument("Washington invariants need ℓ != p");
  const UnitRootStructure s = unit_root_structure_with_lifts(j, p, options);
  WashingtonInvariants out;
  out.mu = s.content_valuation;

  bool simple = true;
  for (const UnitFactor& f : s.factors) {
    const unsigned a = ell_valuation_of_group_order(p, f.degree, ell);
    std::optional<unsigned> k = minimal_ell_exponent(f.factor, 1, ell, a);
    if (!k) continue;
    out.k0 = std::max(out.k0, *k);
  }
  const std::uint64_t n0 = checked_pow(ell, out.k0);
  for (const UnitFactor& f : s.factors)
    if (f.order_divides(n0) && !f.lift) simple = false;
  if (simple) {
    out.nu = *nu_structural(s, n0);
    out.source = NuSource::kStructural;
  } else {
    out.nu = nu_from_oracle(j, p, n0, out.mu, 0);
    out.source = NuSource::kOracle;
  }
  for (unsigned k = out.k0; k <= out.k0 + 2; ++k) {
    const std::uint64_t n = checked_pow(ell, k);
    if (Rational(ord_delta_exact(j, p, n)) != Rational(big(n) * out.mu) + out.nu)
      throw std::logic_error("Washington law fails at k = " + std::to_string(k));
  }
  return out;
}

// ---------------------------------------------------------------- sequence classes

std::size_t SequenceClassification::class_of(std::uint64_t n) const {
  std::vector<BigInt> divides;
  for (const BigInt& N : order_set)
    if (mpz_divisible_p(big(n).get_mpz_t(), N.get_mpz_t())) divides.push_back(N);
  const unsigned r = std::min(ord_small(n, prime), saturation.value);
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].r == r && classes[i].orders == divides) return i;
  throw std::logic_error("no sequence class contains n = " + std::to_string(n));
}

SequenceClassification sequence_classes(const TowerAnalysis& ta, std::uint64_t p, const PadicOptions& options,
                                         std::uint64_t check_n_max) {
  const UnitRootStructure s = unit_root_structure_with_lifts(ta.j_poly, p, options);
  SequenceClassification out;
  out.prime = p;
  out.mu = s.content_valuation;
  out.c = valuation(ta.kappa_base, big(p)) - valuation(ta.delta1, big(p));
  out.order_set = s.order_set();
  out.saturation = saturation_index(s);
  if (out.order_set.size() > 20) throw ResourceError("too many distinct unit-root orders to enumerate classes");

  const std::size_t m = out.order_set.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<BigInt> subset;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1U) subset.push_back(out.order_set[i]);
    const BigInt l = lcm_of(subset);
    bool feasible = true;
    for (std::size_t i = 0; i < m && feasible; ++i)
      if (!(mask >> i & 1U) && mpz_divisible_p(l.get_mpz_t(), out.order_set[i].get_mpz_t())) feasible = false;
    if (!feasible) continue;

    unsigned lam = 0;
    bool simple = true;
    for (const UnitFactor& f : s.factors) {
      if (std::find(subset.begin(), subset.end(), *f.order) == subset.end()) continue;
      lam += f.root_count();
      if (!f.lift) simple = false;
    }
    for (unsigned r = 0; r <= out.saturation.value; ++r) {
      SequenceClass cls;
      cls.orders = subset;
      cls.r = r;
      cls.lambda = lam + ta.e - 1;
      cls.representative = l * pow(big(p), r);
      if (simple) {
        Rational nu = 0;
        for (const UnitFactor& f : s.factors) {
          if (std::find(subset.begin(), subset.end(), *f.order) == subset.end()) continue;
          const unsigned rb = std::min(r, f.lift->s);
          nu += Rational(static_cast<long>(f.degree) *
                         ((rb == 0 ? f.lift->ord_difference : f.lift->ord_at_s) - static_cast<long>(rb)));
        }
        cls.nu = nu + Rational(out.c);
        cls.source = NuSource::kStructural;
      } else if (cls.representative <= big(options.oracle_cap)) {
        const std::uint64_t rep = cls.representative.get_ui();
        cls.nu = nu_from_oracle(ta.j_poly, p, rep, out.mu, lam) + Rational(out.c);
        cls.source = NuSource::kOracle;
      }
      out.classes.push_back(std::move(cls));
    }
  }

  if (check_n_max > 0) {
    const std::vector<BigInt> deltas = pierce_lehmer_range(ta.j_poly, check_n_max);
    for (std::uint64_t n = 1; n <= check_n_max; ++n) {
      const SequenceClass& cls = out.classes[out.class_of(n)];
      if (!cls.nu) continue;
      const long ord = valuation(kappa_via_formula(ta, n, deltas[n - 1]), big(p));
      const Rational law = Rational(big(n) * out.mu) + Rational(static_cast<long>(cls.lambda * ord_small(n, p))) + *cls.nu;
      if (law != Rational(ord))
        throw std::logic_error("sequence class law fails at p = " + std::to_string(p) + ", n = " + std::to_string(n));
    }
  }
  return out;
}

// ---------------------------------------------------------------- Friedman

std::vector<FriedmanLaw> friedman_laws(const IntPoly& j, std::uint64_t p, const std::vector<std::uint64_t>& primes,
                                       const PadicOptions& options, std::uint64_t verify_bound) {
  if (primes.empty()) throw std::invalid_argument("Friedman laws need at least one generator");
  std::vector<std::uint64_t> gens(primes.begin(), primes.end());
  std::sort(gens.begin(), gens.end());
  if (std::adjacent_find(gens.begin(), gens.end()) != gens.end())
    throw std::invalid_argument("generators must be distinct primes");
  for (std::uint64_t l : gens) require_prime(l);
  require_prime(p);

  std::vector<std::uint64_t> targets = gens;
  if (!std::binary_search(gens.begin(), gens.end(), p)) targets.push_back(p);

  std::vector<FriedmanLaw> laws;
  for (std::uint64_t q : targets) {
    const UnitRootStructure s = unit_root_structure_with_lifts(j, q, options);
    FriedmanLaw law;
    law.prime = q;
    law.in_semigroup = std::binary_search(gens.begin(), gens.end(), q);
    law.mu = s.content_valuation;
    for (std::uint64_t l : gens) law.thresholds[l] = 0;

    bool simple = true;
    unsigned lam = 0;
    unsigned q_threshold = 0;
    for (const UnitFactor& f : s.factors) {
      BigInt group = 1;
      std::map<std::uint64_t, unsigned> a;
      for (std::uint64_t l : gens) {
        if (l == q) continue;
        a[l] = ell_valuation_of_group_order(q, f.degree, l);
        group *= pow(big(l), a[l]);
      }
      if (!power_is_one(f.factor, group)) continue;
      lam += f.root_count();
      for (auto& [l, al] : a) {
        const BigInt rest = group / pow(big(l), al);
        law.thresholds[l] = std::max(law.thresholds[l], *minimal_ell_exponent(f.factor, rest, l, al));
      }
      if (f.lift) {
        q_threshold = std::max(q_threshold, f.lift->s);
      } else {
        simple = false;
      }
    }
    if (!simple) q_threshold = std::max(q_threshold, s_bound(s));
    if (law.in_semigroup) {
      law.thresholds[q] = q_threshold;
      law.lambda = lam;
    }

    std::uint64_t n0 = 1;
    for (auto& [l, k] : law.thresholds) n0 = checked_mul(n0, checked_pow(l, k));
    if (simple) {
      law.nu = *nu_structural(s, n0);
      law.source = NuSource::kStructural;
    } else if (n0 <= options.oracle_cap) {
      law.nu = nu_from_oracle(j, q, n0, law.mu, law.lambda);
      law.source = NuSource::kOracle;
    }

    if (law.nu) {
      // Depth-first walk over exponent vectors meeting the thresholds.
      std::vector<std::uint64_t> ls;
      for (auto& [l, k] : law.thresholds) ls.push_back(l);
      std::vector<std::uint64_t> stack_n{n0};
      auto walk = [&](auto&& self, std::size_t idx, std::uint64_t n) -> void {
        if (idx == ls.size()) {
          const long expected_k = law.in_semigroup ? static_cast<long>(ord_small(n, q)) : 0;
          const Rational expected = Rational(big(n) * law.mu) + Rational(static_cast<long>(law.lambda) * expected_k) + *law.nu;
          if (Rational(ord_delta_exact(j, q, n)) != expected)
            throw std::logic_error("Friedman law fails at q = " + std::to_string(q) + ", n = " + std::to_string(n));
          ++law.verified;
          return;
        }
        for (std::uint64_t m = n; m <= verify_bound; m *= ls[idx]) {
          self(self, idx + 1, m);
          if (m > verify_bound / ls[idx]) break;
        }
      };
      if (n0 <= verify_bound) walk(walk, 0, n0);
    }
    laws.push_back(std::move(law));
  }
  return laws;
}

}  // namespace ihara_towers
