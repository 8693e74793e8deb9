#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ihara_towers/bigint.hpp"
#include "ihara_towers/matrix.hpp"

namespace ihara_towers {

/// Dense univariate polynomial over Z; coefficient i multiplies t^i. The
/// leading coefficient is nonzero unless the polynomial is zero.
class IntPoly {
 public:
  static constexpr int kZeroDegree = -1;

  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, std::size_t exponent);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Coefficient of t^i; zero past the degree.
  const BigInt& coeff(std::size_t i) const;
  const BigInt& lead() const;
  std::span<const BigInt> coeffs() const noexcept { return coeffs_; }

  BigInt operator()(const BigInt& x) const;
  Rational operator()(const Rational& x) const;

  IntPoly derivative() const;
  /// Non-negative gcd of the coefficients (0 for the zero polynomial).
  BigInt content() const;
  /// f / content, with positive leading coefficient.
  IntPoly primitive_part() const;
  /// t^k * f.
  IntPoly shifted(std::size_t k) const;
  /// f*(t) = t^deg(f) f(1/t).
  IntPoly reciprocal() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const BigInt& c);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& c) { return a *= c; }
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

/// Polynomial over Q, same conventions as IntPoly. Working type for Euclidean
/// algorithms (gcd, resultants, Sturm sequences, reductions modulo f).
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  explicit RatPoly(const IntPoly& p);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const Rational& coeff(std::size_t i) const;
  const Rational& lead() const;
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  Rational operator()(const Rational& x) const;
  RatPoly derivative() const;
  RatPoly monic() const;
  /// Scales by a positive rational to a primitive integer polynomial.
  IntPoly to_primitive_int() const;

  RatPoly operator-() const;
  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const Rational& c);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const RatPoly&, const RatPoly&) = default;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder over Q; throws std::domain_error on a zero divisor.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& f, const RatPoly& g);
RatPoly operator%(const RatPoly& f, const RatPoly& g);
/// Monic gcd (zero if both inputs are zero).
RatPoly gcd(RatPoly a, RatPoly b);
/// Primitive gcd with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);
/// t^n mod f over Q.
RatPoly pow_t_mod(std::uint64_t n, const RatPoly& f);

/// Square-free decomposition over Q: f = c * prod(factor^multiplicity) with
/// primitive, pairwise coprime, square-free factors of positive degree.
struct SquarefreeFactor {
  IntPoly factor;
  unsigned multiplicity = 0;
};
std::vector<SquarefreeFactor> squarefree_decomposition(const IntPoly& f);

/// Exact quotient f / g over Z. Throws std::logic_error if g does not divide f
/// (or the quotient leaves Z), std::domain_error if g is zero.
IntPoly divide_exact(const IntPoly& f, const IntPoly& g);

/// Multiplicity of t = point as a root of f, point in {0, 1}. Throws
/// std::domain_error on the zero polynomial, std::invalid_argument otherwise.
unsigned ord_at(const IntPoly& f, int point);

/// 1 + t + ... + t^{n-1} = (t^n - 1)/(t - 1).
IntPoly geometric_quotient(std::uint64_t n);

/// n-th cyclotomic polynomial Φ_n, n >= 1.
IntPoly cyclotomic_polynomial(std::uint64_t n);

/// Sylvester matrix of p (degree m) and q (degree n), size m + n.
IntMatrix sylvester_matrix(const IntPoly& p, const IntPoly& q);

/// Res(p, q) = a_m^n b_n^m prod(α_i - β_j): Bareiss determinant of the
/// Sylvester matrix. Reference path. Throws std::domain_error on zero input.
BigInt resultant_sylvester(const IntPoly& p, const IntPoly& q);

/// Same quantity by the Euclidean recursion Res(p, q) = a^{n - deg r} Res(p, r)
/// with r = q mod p over Q.
Rational resultant(const RatPoly& p, const RatPoly& q);
BigInt resultant_euclidean(const IntPoly& p, const IntPoly& q);

/// Dispatches to the Sylvester path for small degree sums and to the
/// Euclidean path otherwise.
BigInt resultant(const IntPoly& p, const IntPoly& q);

/// Element of Z[t, 1/t], stored as t^low * body(t) with body(0) != 0 unless
/// the polynomial is zero (then low = 0).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long low, IntPoly body);
  explicit LaurentPoly(const IntPoly& p) : LaurentPoly(0, p) {}

  static LaurentPoly monomial(const BigInt& c, long exponent);
  static LaurentPoly constant(const BigInt& c) { return monomial(c, 0); }

  bool is_zero() const noexcept { return body_.is_zero(); }
  long low() const noexcept { return low_; }
  /// Largest exponent present (low for the zero polynomial).
  long high() const noexcept { return low_ + (body_.is_zero() ? 0 : body_.degree()); }
  const IntPoly& body() const noexcept { return body_; }
  /// Coefficient of t^k.
  BigInt coeff(long k) const;

  /// f(1/t).
  LaurentPoly inverted() const;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  long low_ = 0;
  IntPoly body_;
};

/// Multiplicity of t = 1 as a root of the body (the t-power is a unit there).
unsigned ord_at(const LaurentPoly& f, int point);

/// f(1/t) == f(t).
bool is_self_reciprocal(const LaurentPoly& f);

/// Row-major square matrix of Laurent polynomials.
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  explicit LaurentMatrix(std::size_t n) : n_(n), data_(n * n) {}
  std::size_t size() const noexcept { return n_; }
  LaurentPoly& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

 private:
  std::size_t n_ = 0;
  std::vector<LaurentPoly> data_;
};

/// Exact determinant: each row is multiplied by a power of t to clear negative
/// exponents, Bareiss runs over Z[t] with exact polynomial division, and the
/// accumulated t-power is divided out at the end.
LaurentPoly poly_matrix_det(const LaurentMatrix& m);

}  // namespace ihara_towers
