#include "ihara_towers/bigint.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "ihara_towers/errors.hpp"

namespace ihara_towers {

namespace {

std::size_t read_env_cap() {
  const char* raw = std::getenv("IHARA_TOWERS_MAX_BITS");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw) return 0;
  return static_cast<std::size_t>(v);
}

std::atomic<std::size_t>& cap_storage() {
  static std::atomic<std::size_t> cap{read_env_cap()};
  return cap;
}

}  // namespace

std::string to_string(const BigInt& x) { return x.get_str(10); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str(10);
  return x.get_num().get_str(10) + "/" + x.get_den().get_str(10);
}

BigInt parse_bigint(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("not an integer: '" + text + "'");
  }
  BigInt out(text[0] == '+' ? text.substr(1) : text, 10);
  return out;
}

long valuation(const BigInt& x, const BigInt& p) {
  if (x == 0) throw std::domain_error("valuation of zero");
  if (p < 2) throw std::invalid_argument("valuation base must be >= 2");
  BigInt rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

long valuation(long long x, long long p) { return valuation(BigInt(std::to_string(x)), BigInt(std::to_string(p))); }

long valuation(const Rational& x, const BigInt& p) {
  if (x == 0) throw std::domain_error("valuation of zero");
  return valuation(BigInt(x.get_num()), p) - valuation(BigInt(x.get_den()), p);
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

bool is_probable_prime(const BigInt& n) { return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

std::size_t bit_cap() { return cap_storage().load(); }

void set_bit_cap(std::size_t bits) { cap_storage().store(bits); }

void check_bit_cap(const BigInt& x) {
  std::size_t cap = bit_cap();
  if (cap == 0) return;
  std::size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
  if (bits > cap) {
    throw ResourceError("integer of " + std::to_string(bits) + " bits exceeds IHARA_TOWERS_MAX_BITS=" +
                        std::to_string(cap));
  }
}

double log_abs(const BigInt& x) {
  if (x == 0) throw std::domain_error("log of zero");
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace ihara_towers
