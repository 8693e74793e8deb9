#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ihara_towers/bigint.hpp"
#include "ihara_towers/finite_field.hpp"
#include "ihara_towers/ihara.hpp"
#include "ihara_towers/poly.hpp"

namespace ihara_towers {

struct NewtonSegment {
  Rational slope;
  unsigned length = 0;
  friend bool operator==(const NewtonSegment&, const NewtonSegment&) = default;
};

/// Lower convex hull of (i, ord_p c_i); a segment of slope s and length L
/// accounts for L roots of valuation -s.
struct NewtonPolygon {
  std::vector<NewtonSegment> segments;
  unsigned slope_zero_length() const;
};

NewtonPolygon newton_polygon(const IntPoly& f, std::uint64_t p);

struct PadicOptions {
  std::uint64_t seed = kDefaultFactorSeed;
  unsigned precision = 32;       // initial p-adic working precision
  unsigned precision_cap = 512;  // doubling stops here (ResourceError)
  FactorBudget budget;
  std::uint64_t oracle_cap = 200000;  // largest n for which Δ_n is evaluated on demand
};

/// Valuation data of the root β lifting a simple unit factor, measured in the
/// unramified ring Z_p[x]/(g) against its Teichmüller representative ξ.
struct SimpleRootLift {
  long ord_difference = 0;  // ord_p(β - ξ)
  unsigned s = 0;           // min{s : p^s (p - 1) ord_p(β - ξ) > 1}
  long ord_at_s = 0;        // ord_p(β^{p^s} - ξ^{p^s})
  unsigned precision = 0;   // digits that sufficed
};

struct UnitFactor {
  FpPoly factor;  // monic irreducible mod p
  unsigned multiplicity = 0;
  unsigned degree = 0;
  std::optional<BigInt> order;          // multiplicative order of a root, if p^deg - 1 factored
  std::optional<SimpleRootLift> lift;   // present for simple factors

  unsigned root_count() const { return multiplicity * degree; }
  /// N | n, through the order when known and a direct power test otherwise.
  bool order_divides(const BigInt& n) const;
  bool order_divides(std::uint64_t n) const;
};

/// Reduction data of the roots of j with |β|_p = 1.
struct UnitRootStructure {
  std::uint64_t prime = 2;
  long content_valuation = 0;  // μ_p
  IntPoly unit_poly;           // j / p^μ over Z
  FpPoly unit_part;            // its reduction with the t-power removed
  std::vector<UnitFactor> factors;
  bool ramified = false;       // some unit factor is repeated

  unsigned unit_root_count() const;
  bool orders_available() const;
  /// Distinct known orders, ascending. Throws ResourceError if any is missing.
  std::vector<BigInt> order_set() const;
};

UnitRootStructure unit_root_structure(const IntPoly& j, std::uint64_t p, const PadicOptions& options = {});

/// Structure plus Hensel/Teichmüller data for every simple factor.
UnitRootStructure unit_root_structure_with_lifts(const IntPoly& j, std::uint64_t p, const PadicOptions& options = {});

/// ord_p Δ_n(j). Throws std::domain_error if Δ_n(j) = 0.
long ord_delta_exact(const IntPoly& j, std::uint64_t p, std::uint64_t n);

/// #{unit roots β : N(β) | n}, with multiplicity.
unsigned lambda_poly(const UnitRootStructure& s, std::uint64_t n);
/// Tower level: lambda_poly + e - 1.
unsigned lambda_for_n(const UnitRootStructure& s, std::uint64_t n, unsigned e);

/// min{s : p^s (p - 1) / D > 1} with D the number of unit roots; bounds s_p(β)
/// for every unit root, ramified or not.
unsigned s_bound(const UnitRootStructure& s);

/// R_p: the largest s_p(β) over unit roots. Exact when unramified; otherwise
/// the bound above, with `is_bound` set.
struct SaturationIndex {
  unsigned value = 0;
  bool is_bound = false;
};
SaturationIndex saturation_index(const UnitRootStructure& s);

/// Σ over β in B_{p,n} of ord_p(β^{p^r} - ξ^{p^r}) - r, r = min(ord_p n, s_p(β)).
/// Empty if some root in B_{p,n} belongs to a repeated factor.
std::optional<Rational> nu_structural(const UnitRootStructure& s, std::uint64_t n);

/// ord_p Δ_n - μ n - λ ord_p(n).
Rational nu_from_oracle(const IntPoly& j, std::uint64_t p, std::uint64_t n, long mu, unsigned lambda_poly);
Rational nu_from_oracle(long ord_delta, std::uint64_t p, std::uint64_t n, long mu, unsigned lambda_poly);

enum class NuSource { kStructural, kOracle };
const char* to_string(NuSource source);

struct PadicRow {
  std::uint64_t n = 0;
  long ord = 0;          // ord_p κ(X_n)
  long mu_term = 0;      // μ_p n
  unsigned lambda = 0;   // tower λ_{p,n}
  Rational nu;           // the value used in the identity
  NuSource source = NuSource::kOracle;
  Rational nu_oracle;
  std::optional<Rational> nu_structural;
};

struct PadicReport {
  std::uint64_t prime = 2;
  long mu = 0;
  long c = 0;  // ord_p κ(X) - ord_p Δ_1
  UnitRootStructure structure;
  SaturationIndex saturation;
  std::vector<PadicRow> rows;
};

/// Rows n = 1..n_max. Throws std::logic_error if μ n + λ ord_p(n) + ν + c
/// differs from ord_p κ(X_n) for any row.
PadicReport padic_report(const TowerAnalysis& ta, std::uint64_t p, std::uint64_t n_max,
                         const PadicOptions& options = {});

/// ord_p Δ_{p^k} = μ p^k + λ k + ν for k >= k0.
struct IwasawaInvariants {
  long mu = 0;
  unsigned lambda = 0;
  Rational nu;
  unsigned k0 = 0;
  NuSource source = NuSource::kOracle;
};
IwasawaInvariants iwasawa_invariants(const IntPoly& j, std::uint64_t p, const PadicOptions& options = {});

/// ord_p Δ_{ℓ^k} = μ ℓ^k + ν for k >= k0, ℓ != p.
struct WashingtonInvariants {
  long mu = 0;
  Rational nu;
  unsigned k0 = 0;
  NuSource source = NuSource::kOracle;
};
WashingtonInvariants washington_invariants(const IntPoly& j, std::uint64_t p, std::uint64_t ell,
                                           const PadicOptions& options = {});

/// One class 𝒮_p(𝔫, r): the n with {N ∈ 𝒩_p : N | n} = 𝔫 and
/// min(ord_p n, R_p) = r. On it ord_p κ(X_n) = μ n + λ ord_p(n) + ν.
struct SequenceClass {
  std::vector<BigInt> orders;  // 𝔫
  unsigned r = 0;
  unsigned lambda = 0;         // tower level
  std::optional<Rational> nu;  // includes c_p; empty if not computable
  NuSource source = NuSource::kOracle;
  BigInt representative;       // lcm(𝔫) p^r
};

struct SequenceClassification {
  std::uint64_t prime = 2;
  long mu = 0;
  long c = 0;
  std::vector<BigInt> order_set;  // 𝒩_p
  SaturationIndex saturation;     // R_p
  std::vector<SequenceClass> classes;

  /// Index of the class containing n.
  std::size_t class_of(std::uint64_t n) const;
};

/// Enumerates feasible (𝔫, r). When check_n_max > 0 every n up to it is
/// assigned a class and the class law is checked against ord_p κ(X_n).
SequenceClassification sequence_classes(const TowerAnalysis& ta, std::uint64_t p, const PadicOptions& options = {},
                                         std::uint64_t check_n_max = 0);

/// For n in the semigroup generated by `primes`, with every exponent at
/// least its threshold: ord_q Δ_n = μ_q n + λ k_q + ν, k_q = ord_q(n)
/// (λ = 0 when q is not a generator).
struct FriedmanLaw {
  std::uint64_t prime = 2;  // q
  bool in_semigroup = false;
  long mu = 0;
  unsigned lambda = 0;
  std::optional<Rational> nu;
  NuSource source = NuSource::kOracle;
  std::map<std::uint64_t, unsigned> thresholds;
  std::size_t verified = 0;  // semigroup elements checked
};

/// One law per generator, plus one for p when p is not a generator. Each law
/// is checked on all admissible semigroup elements up to verify_bound.
std::vector<FriedmanLaw> friedman_laws(const IntPoly& j, std::uint64_t p, const std::vector<std::uint64_t>& primes,
                                       const PadicOptions& options = {}, std::uint64_t verify_bound = 10000);

}  // namespace ihara_towers
