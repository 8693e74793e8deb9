#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ihara_towers/bigint.hpp"
#include "ihara_towers/poly.hpp"
#include "ihara_towers/voltage.hpp"

namespace ihara_towers {

/// Invariants of a Z-tower read off from its Ihara polynomial.
struct TowerAnalysis {
  LaurentPoly ihara;   // det(D - A_α(t))
  unsigned b = 0;      // -ord_{t=0}
  unsigned e = 0;      // ord_{t=1}
  IntPoly i_poly;      // t^b * ihara
  IntPoly j_poly;      // i_poly / (t - 1)^e
  BigInt delta1;       // Res(j_poly, t - 1)
  BigInt kappa_base;   // spanning trees of the base
  long chi = 0;        // Euler characteristic of the base
};

/// A_α(t) carries t^α(e) at (o(e), t(e)) for every directed edge; the result
/// is det(D - A_α(t)). Throws HypothesisError on a disconnected base.
LaurentPoly ihara_polynomial(const VoltagedGraph& vg);

/// Throws HypothesisError for χ = 0, monodromy index != 1, or a Ihara
/// polynomial vanishing at a root of unity other than 1.
TowerAnalysis analyze(const VoltagedGraph& vg);

/// Δ_n(f) = Res(f, t^n - 1). Small cases go through the Sylvester determinant;
/// larger ones reduce t^n modulo f first and finish with the Euclidean
/// resultant. Throws std::invalid_argument for n < 1.
BigInt pierce_lehmer(const IntPoly& f, std::uint64_t n);

/// Reference path: Sylvester determinant of f and t^n - 1.
BigInt pierce_lehmer_sylvester(const IntPoly& f, std::uint64_t n);

/// Δ_1..Δ_{n_max} by multimodular evaluation and Chinese remaindering;
/// element i holds Δ_{i+1}.
std::vector<BigInt> pierce_lehmer_range(const IntPoly& f, std::uint64_t n_max);

/// True iff f(ζ) = 0 for some root of unity ζ of order k <= max(deg(f)^2, 2).
/// A modular gcd screens each order; hits are confirmed by Δ_k(f) = 0.
bool vanishes_at_root_of_unity(const IntPoly& f);

/// (-1)^{b(n-1)} κ(X) n^{e-1} Δ_n / Δ_1. Throws std::logic_error if the
/// division is inexact.
BigInt kappa_via_formula(const TowerAnalysis& ta, std::uint64_t n);
BigInt kappa_via_formula(const TowerAnalysis& ta, std::uint64_t n, const BigInt& delta_n);

/// Res(I_α, 1 + t + ... + t^{n-1}).
BigInt resultant_row(const TowerAnalysis& ta, std::uint64_t n);

enum class OracleMode { kMatrixTree, kBruteForceSmall };

struct LayerCheck {
  std::uint64_t n = 0;
  BigInt formula;
  BigInt oracle;
  std::string oracle_kind;
  bool match = false;
};

struct TowerVerification {
  std::vector<LayerCheck> layers;
  std::optional<std::uint64_t> first_mismatch;
  bool ok() const { return !first_mismatch.has_value(); }
};

/// Compares the formula path with an independent spanning-tree count of each
/// derived graph for n = 1..n_max. Layers are spread over `jobs` threads;
/// results are ordered by n. In kBruteForceSmall mode layers within the
/// brute-force guard use enumeration, the rest use the matrix-tree count.
TowerVerification verify_tower(const VoltagedGraph& vg, std::uint64_t n_max, unsigned jobs = 1,
                               OracleMode mode = OracleMode::kMatrixTree);
TowerVerification verify_tower(const VoltagedGraph& vg, const TowerAnalysis& ta, std::uint64_t n_max,
                               unsigned jobs = 1, OracleMode mode = OracleMode::kMatrixTree);

}  // namespace ihara_towers
