#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <variant>

namespace wordlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;
// 100 decimal digits; plenty of slack over the 50 significant digits the
// log-domain values are specified to carry.
using HighFloat = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<100>>;

// Exact arbitrary-precision integer when the formula is integral,
// otherwise a base-10 logarithm of the value.
class BoundValue {
 public:
  static BoundValue exact(BigInt v) { return BoundValue(std::move(v)); }
  static BoundValue from_log10(HighFloat lg) { return BoundValue(std::move(lg)); }

  bool is_exact() const { return std::holds_alternative<BigInt>(v_); }
  const BigInt& exact_value() const { return std::get<BigInt>(v_); }
  HighFloat log10() const;

  // Exact digits, or "10^<log10>" with a scientific-notation hint.
  std::string to_string() const;

 private:
  explicit BoundValue(BigInt v) : v_(std::move(v)) {}
  explicit BoundValue(HighFloat v) : v_(std::move(v)) {}
  std::variant<BigInt, HighFloat> v_;
};

// log10 of the dichotomy bound 2^27 l (nd)^(3 log3(nd) + 9 log3 log3(nd) + 36).
BoundValue psi(int n, int d, int l);

// log10 of the height bound 2^96 l n^(12 log3 n + 36 log3 log3 n + 91).
BoundValue phi(int n, int l);

// 2 n^(3 ceil(log3 n) + 4) l, exact.
BoundValue upsilon(int n, int l);

// 8 (l+1)^n n^5 (n-1), exact.
BigInt upsilon_prime(int n, int l);

// Selective-height bounds for period lengths 2, 3 and n-1.
BigInt beth(int period_len, int l, int n);

// (l - 2^(n-1)) (n-2) (n-3) / 2; requires l > 2^(n-1), n >= 4.
BigInt alpha_lower(int n, int l);

// ceil(3/2 (n+1) d (log3(nd) + 2)), with the ceiling decided by exact
// integer power comparisons (never by rounded floating point).
BigInt p_nd(int n, int d);

struct ClassicLowerBounds {
  BigInt kuzmin;      // (n^2 + n - 2) / 2
  BigRat gk_height;   // (l-1) n^2 / 4 + 1, exact rational
};
ClassicLowerBounds classic_lower_bounds(int n, int l);

// k^(2n) / ((k-1)!)^2, exact rational.
BigRat xi_upper(int k, int n);

// min{ k^(2n) / (k!)^2, (n-k+1)^(2n) / ((n-k)!)^2 }, exact rational.
BigRat epsilon_upper(int k, int n);

// Comparison row only: 4 * 2^(n/2) * l (exact for even n, log10 otherwise).
BoundValue lopatin_cnl(int n, int l);

BigInt factorial(int n);
BigInt binomial(int n, int k);
BigInt int_pow(const BigInt& base, int exp);

// Smallest e >= 0 with 3^e >= n (exact integer arithmetic).
int ceil_log3(int n);

HighFloat high_log10(const BigInt& v);
std::string rational_to_string(const BigRat& r);

}  // namespace wordlab
