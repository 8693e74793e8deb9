#include "ihara_towers/ihara.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "ihara_towers/errors.hpp"
#include "ihara_towers/graph.hpp"
#include "ihara_towers/modular.hpp"

namespace ihara_towers {

namespace {

using modular::u64;
using ModPoly = std::vector<u64>;

void trim(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ModPoly reduce_poly(const IntPoly& f, u64 q) {
  ModPoly out(f.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = modular::reduce(f.coeffs()[i], q);
  trim(out);
  return out;
}

// r <- r mod p over F_q; p nonzero.
void rem_in_place(ModPoly& r, const ModPoly& p, u64 q) {
  const std::size_t dp = p.size() - 1;
  const u64 inv_lead = modular::inv(p.back(), q);
  while (r.size() > dp && !r.empty()) {
    const std::size_t k = r.size() - 1;
    const u64 c = modular::mul(r[k], inv_lead, q);
    if (c != 0) {
      for (std::size_t j = 0; j <= dp; ++j) r[k - dp + j] = modular::sub(r[k - dp + j], modular::mul(c, p[j], q), q);
    }
    r.pop_back();
    trim(r);
  }
}

// Res(p, r) over F_q by the Euclidean recursion; p, r nonzero and trimmed.
u64 resultant_mod(ModPoly p, ModPoly r, u64 q) {
  u64 acc = 1;
  for (;;) {
    const std::size_t m = p.size() - 1;
    const std::size_t n = r.size() - 1;
    if (m == 0) return modular::mul(acc, modular::pow(p[0], n, q), q);
    if (n < m) {
      if ((m * n) % 2 == 1) acc = acc == 0 ? 0 : q - acc;
      std::swap(p, r);
      continue;
    }
    rem_in_place(r, p, q);
    if (r.empty()) return 0;
    acc = modular::mul(acc, modular::pow(p.back(), n - (r.size() - 1), q), q);
  }
}

ModPoly gcd_mod(ModPoly a, ModPoly b, u64 q) {
  while (!b.empty()) {
    rem_in_place(a, b, q);
    std::swap(a, b);
  }
  return a;
}

// Walks x_k = t^k mod f over F_q for k = 1, 2, ...; f has degree >= 1.
class PowerWalker {
 public:
  PowerWalker(const ModPoly& f, u64 q) : q_(q), d_(f.size() - 1), monic_(f.size()), x_(d_, 0) {
    const u64 inv_lead = modular::inv(f.back(), q);
    for (std::size_t i = 0; i < f.size(); ++i) monic_[i] = modular::mul(f[i], inv_lead, q);
    x_[0] = 1;
  }

  // Advances to the next power and returns it (length d, not trimmed).
  const ModPoly& step() {
    const u64 top = x_[d_ - 1];
    for (std::size_t i = d_ - 1; i > 0; --i) x_[i] = modular::sub(x_[i - 1], modular::mul(top, monic_[i], q_), q_);
    x_[0] = modular::sub(0, modular::mul(top, monic_[0], q_), q_);
    return x_;
  }

 private:
  u64 q_;
  std::size_t d_;
  ModPoly monic_;
  ModPoly x_;
};

// Δ_n mod q given x = t^n mod f (untrimmed, length d).
u64 delta_from_power(const ModPoly& f, ModPoly x, std::uint64_t n, u64 q) {
  x[0] = modular::sub(x[0], 1, q);
  trim(x);
  if (x.empty()) return 0;
  const u64 scale = modular::pow(f.back(), n - (x.size() - 1), q);
  return modular::mul(scale, resultant_mod(f, std::move(x), q), q);
}

std::vector<u64> primes_avoiding(const BigInt& lead, std::size_t count) {
  std::vector<u64> out;
  std::size_t ask = count + 4;
  while (out.size() < count) {
    out.clear();
    for (u64 q : modular::large_primes(ask)) {
      if (modular::reduce(lead, q) != 0) out.push_back(q);
      if (out.size() == count) break;
    }
    ask *= 2;
  }
  return out;
}

double log2_norm(const IntPoly& f) {
  // log2 of the Euclidean norm, computed through logs to avoid overflow.
  double top = 0.0;
  std::vector<double> logs;
  for (const BigInt& c : f.coeffs()) {
    if (sgn(c) == 0) continue;
    double l = log_abs(c) / std::log(2.0);
    logs.push_back(l);
    top = std::max(top, l);
  }
  double sum = 0.0;
  for (double l : logs) sum += std::exp2(2.0 * (l - top));
  return top + 0.5 * std::log2(sum);
}

}  // namespace

LaurentPoly ihara_polynomial(const VoltagedGraph& vg) {
  const SerreGraph& g = vg.base();
  if (g.vertex_count() == 0 || !is_connected(g))
    throw HypothesisError(HypothesisError::Kind::kDisconnectedBase, "base graph is not connected");
  const std::size_t n = g.vertex_count();
  LaurentMatrix m(n);
  for (std::size_t v = 0; v < n; ++v) m(v, v) = LaurentPoly::constant(static_cast<unsigned long>(g.valency(v)));
  for (const EdgePair& e : g.edge_pairs()) {
    const long a = static_cast<long>(vg.voltages()[e.id]);
    LaurentPoly fwd = LaurentPoly::monomial(1, a);
    LaurentPoly back = LaurentPoly::monomial(1, -a);
    if (e.is_loop()) {
      m(e.origin, e.origin) = m(e.origin, e.origin) - fwd - back;
    } else {
      m(e.origin, e.terminus) = m(e.origin, e.terminus) - fwd;
      m(e.terminus, e.origin) = m(e.terminus, e.origin) - back;
    }
  }
  return poly_matrix_det(m);
}

bool vanishes_at_root_of_unity(const IntPoly& f) {
  if (f.is_zero()) throw std::domain_error("root-of-unity test on the zero polynomial");
  if (f.degree() == 0) return false;
  const std::uint64_t d = static_cast<std::uint64_t>(f.degree());
  const std::uint64_t k_max = std::max<std::uint64_t>(d * d, 2);
  const u64 q = primes_avoiding(f.lead(), 1).front();
  const ModPoly fq = reduce_poly(f, q);
  PowerWalker walker(fq, q);
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    ModPoly x = walker.step();
    x[0] = modular::sub(x[0], 1, q);
    trim(x);
    bool candidate = x.empty() || gcd_mod(fq, x, q).size() > 1;
    if (candidate && sgn(pierce_lehmer(f, k)) == 0) return true;
  }
  return false;
}

TowerAnalysis analyze(const VoltagedGraph& vg) {
  const SerreGraph& g = vg.base();
  if (g.vertex_count() == 0 || !is_connected(g))
    throw HypothesisError(HypothesisError::Kind::kDisconnectedBase, "base graph is not connected");
  TowerAnalysis ta;
  ta.chi = euler_characteristic(g);
  if (ta.chi == 0)
    throw HypothesisError(HypothesisError::Kind::kZeroEulerCharacteristic, "Euler characteristic is 0");
  const std::uint64_t d = monodromy_index(vg);
  if (d != 1)
    throw HypothesisError(HypothesisError::Kind::kMonodromy,
                          "monodromy index is " + std::to_string(d) + ", the tower is not connected");

  ta.ihara = ihara_polynomial(vg);
  if (ta.ihara.is_zero()) throw std::logic_error("Ihara polynomial vanished identically");
  ta.b = ta.ihara.low() < 0 ? static_cast<unsigned>(-ta.ihara.low()) : 0;
  ta.i_poly = ta.ihara.body().shifted(static_cast<std::size_t>(ta.ihara.low() + static_cast<long>(ta.b)));

  const IntPoly t_minus_one{-1, 1};
  ta.j_poly = ta.i_poly;
  while (sgn(ta.j_poly(BigInt(1))) == 0) {
    ta.j_poly = divide_exact(ta.j_poly, t_minus_one);
    ++ta.e;
  }
  if (ta.e == 0) throw std::logic_error("Ihara polynomial does not vanish at t = 1");
  ta.delta1 = resultant(ta.j_poly, t_minus_one);
  ta.kappa_base = spanning_tree_count(g);
  if (vanishes_at_root_of_unity(ta.j_poly))
    throw HypothesisError(HypothesisError::Kind::kRootOfUnity, "J vanishes at a root of unity");
  return ta;
}

BigInt pierce_lehmer_sylvester(const IntPoly& f, std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("Pierce-Lehmer index must be >= 1");
  IntPoly g = IntPoly::monomial(1, n) - IntPoly::constant(1);
  return resultant_sylvester(f, g);
}

BigInt pierce_lehmer(const IntPoly& f, std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("Pierce-Lehmer index must be >= 1");
  if (f.is_zero()) throw std::domain_error("resultant of the zero polynomial");
  if (f.degree() == 0) return pow(f.lead(), n);
  if (static_cast<std::uint64_t>(f.degree()) + n <= 24) return pierce_lehmer_sylvester(f, n);
  RatPoly fr(f);
  RatPoly x = pow_t_mod(n, fr);
  std::vector<Rational> c(x.coeffs().begin(), x.coeffs().end());
  if (c.empty()) c.emplace_back(0);
  c[0] -= 1;
  RatPoly r(std::move(c));
  if (r.is_zero()) return 0;
  Rational out = resultant(fr, r) * Rational(pow(f.lead(), n - static_cast<std::uint64_t>(r.degree())));
  if (out.get_den() != 1) throw std::logic_error("non-integral Pierce-Lehmer value");
  check_bit_cap(out.get_num());
  return out.get_num();
}

std::vector<BigInt> pierce_lehmer_range(const IntPoly& f, std::uint64_t n_max) {
  if (f.is_zero()) throw std::domain_error("resultant of the zero polynomial");
  std::vector<BigInt> out;
  out.reserve(n_max);
  if (f.degree() == 0) {
    for (std::uint64_t n = 1; n <= n_max; ++n) out.push_back(pow(f.lead(), n));
    return out;
  }
  if (n_max == 0) return out;

  const double d = static_cast<double>(f.degree());
  const double per_n = std::max(0.0, log2_norm(f));
  auto bits_for = [&](std::uint64_t n) { return d + static_cast<double>(n) * per_n + 2.0; };
  const std::size_t prime_count = static_cast<std::size_t>(std::ceil(bits_for(n_max) / 61.0)) + 1;
  const std::vector<u64> primes = primes_avoiding(f.lead(), prime_count);

  std::vector<std::vector<u64>> residues(n_max, std::vector<u64>(primes.size()));
  for (std::size_t pi = 0; pi < primes.size(); ++pi) {
    const u64 q = primes[pi];
    const ModPoly fq = reduce_poly(f, q);
    PowerWalker walker(fq, q);
    for (std::uint64_t n = 1; n <= n_max; ++n) residues[n - 1][pi] = delta_from_power(fq, walker.step(), n, q);
  }
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const std::size_t need = std::min(primes.size(), static_cast<std::size_t>(std::ceil(bits_for(n) / 61.0)) + 1);
    modular::CrtAccumulator crt;
    for (std::size_t pi = 0; pi < need; ++pi) crt.add(residues[n - 1][pi], primes[pi]);
    out.push_back(crt.symmetric_value());
    check_bit_cap(out.back());
  }
  return out;
}

BigInt kappa_via_formula(const TowerAnalysis& ta, std::uint64_t n, const BigInt& delta_n) {
  if (n < 1) throw std::invalid_argument("layer index must be >= 1");
  if (sgn(ta.delta1) == 0) throw std::logic_error("Δ_1 vanishes");
  BigInt num = ta.kappa_base * pow(BigInt(std::to_string(n)), ta.e - 1) * delta_n;
  if (!mpz_divisible_p(num.get_mpz_t(), ta.delta1.get_mpz_t()))
    throw std::logic_error("κ formula: Δ_1 does not divide the numerator at n = " + std::to_string(n));
  BigInt out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), ta.delta1.get_mpz_t());
  if ((static_cast<std::uint64_t>(ta.b) * (n - 1)) % 2 == 1) out = -out;
  return out;
}

BigInt kappa_via_formula(const TowerAnalysis& ta, std::uint64_t n) {
  return kappa_via_formula(ta, n, pierce_lehmer(ta.j_poly, n));
}

BigInt resultant_row(const TowerAnalysis& ta, std::uint64_t n) {
  return resultant(ta.i_poly, geometric_quotient(n));
}

TowerVerification verify_tower(const VoltagedGraph& vg, std::uint64_t n_max, unsigned jobs, OracleMode mode) {
  return verify_tower(vg, analyze(vg), n_max, jobs, mode);
}

TowerVerification verify_tower(const VoltagedGraph& vg, const TowerAnalysis& ta, std::uint64_t n_max,
                               unsigned jobs, OracleMode mode) {
  TowerVerification report;
  const std::vector<BigInt> deltas = pierce_lehmer_range(ta.j_poly, n_max);
  report.layers.resize(n_max);

  auto check_layer = [&](std::uint64_t n) {
    LayerCheck& row = report.layers[n - 1];
    row.n = n;
    row.formula = kappa_via_formula(ta, n, deltas[n - 1]);
    SerreGraph layer = derived_graph(vg, n);
    if (mode == OracleMode::kBruteForceSmall && layer.edge_pair_count() <= kBruteForceEdgeLimit) {
      row.oracle = spanning_tree_count_bruteforce(layer);
      row.oracle_kind = "bruteforce";
    } else {
      row.oracle = spanning_tree_count(layer);
      row.oracle_kind = "matrix-tree";
    }
    row.match = row.formula == row.oracle;
  };

  std::atomic<std::uint64_t> next{1};
  std::mutex error_mu;
  std::exception_ptr error;
  auto worker = [&] {
    try {
      for (std::uint64_t n = next++; n <= n_max; n = next++) check_layer(n);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mu);
      if (!error) error = std::current_exception();
      next = n_max + 1;
    }
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(n_max)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  for (const LayerCheck& row : report.layers) {
    if (!row.match) {
      report.first_mismatch = row.n;
      break;
    }
  }
  return report;
}

}  // namespace ihara_towers
