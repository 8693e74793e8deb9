#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "ihara_towers/bigint.hpp"
#include "ihara_towers/ihara.hpp"
#include "ihara_towers/poly.hpp"

namespace ihara_towers {

/// M_p(f) = p^{-exponent}; the log measure is -exponent * log p.
struct PadicMeasure {
  BigInt prime;
  long exponent = 0;

  double log_measure() const;
};

/// exponent = min_i ord_p(c_i). Throws std::domain_error on the zero
/// polynomial and std::invalid_argument if p is not prime.
PadicMeasure mahler_padic(const IntPoly& f, const BigInt& p);

struct ArchMeasure {
  double value = 1.0;
  double log_value = 0.0;
  bool certified_no_unit_roots = false;
};

inline constexpr double kDefaultRootTolerance = 1e-12;
inline constexpr std::uint64_t kDefaultRootSeed = 0x5eed'1234'abcdULL;

/// Complex roots of a polynomial with nonzero constant term and no repeated
/// roots, by Aberth-Ehrlich iteration from a seeded circle of Cauchy-bound
/// radius. Throws std::runtime_error after 10 failed restarts.
std::vector<std::complex<double>> aberth_roots(const IntPoly& f, double tol = kDefaultRootTolerance,
                                               std::uint64_t seed = kDefaultRootSeed);

/// |a_d| prod max(1, |α_i|). Factors t, t - 1, t + 1 are removed exactly and
/// the rest is split square-free before root finding.
ArchMeasure mahler_archimedean(const IntPoly& f, double tol = kDefaultRootTolerance,
                               std::uint64_t seed = kDefaultRootSeed);

/// Exact number of roots on |z| = 1, with multiplicity.
unsigned count_unit_circle_roots(const IntPoly& f);

/// q with f(t) = t^m q(t + 1/t) for a palindromic f of degree 2m.
/// Throws std::invalid_argument if f is not palindromic of even degree.
IntPoly reciprocal_trace_polynomial(const IntPoly& f);

/// Number of distinct real roots of a square-free q in the open interval
/// (lo, hi), by a Sturm sequence over Q. Endpoints must not be roots.
unsigned sturm_count(const IntPoly& q, const Rational& lo, const Rational& hi);

struct ArchimedeanAsymptotic {
  double rate = 0.0;        // m_∞(I_α)
  unsigned poly_order = 0;  // e - 1
  double constant = 0.0;    // log(κ(X) / |Δ_1|)
  bool applicable = false;  // J has no root on the unit circle

  double predicted_log_kappa(std::uint64_t n) const;
};

ArchimedeanAsymptotic archimedean_asymptotic(const TowerAnalysis& ta);

/// ord_p κ(X_n) = (e - 1) ord_p(n) + μ_p n + c_p, valid when J has no p-adic
/// unit root.
struct PadicAffineLaw {
  BigInt prime;
  bool applicable = false;
  long mu = 0;
  unsigned poly_order = 0;
  long c = 0;

  long predicted_ord(std::uint64_t n) const;
};

PadicAffineLaw padic_asymptotic_no_unit_roots(const TowerAnalysis& ta, const BigInt& p);

}  // namespace ihara_towers
