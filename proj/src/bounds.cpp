#include "wordlab/bounds.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace wordlab {

namespace {

HighFloat hf_log10(HighFloat x) { return log10(x); }

HighFloat log3_of(HighFloat x) {
  static const HighFloat log10_3 = hf_log10(HighFloat(3));
  return hf_log10(x) / log10_3;
}

}  // namespace

HighFloat BoundValue::log10() const {
  if (is_exact()) return high_log10(exact_value());
  return std::get<HighFloat>(v_);
}

std::string BoundValue::to_string() const {
  if (is_exact()) return exact_value().str();
  HighFloat lg = std::get<HighFloat>(v_);
  HighFloat ip = floor(lg);
  HighFloat mantissa = pow(HighFloat(10), lg - ip);
  std::ostringstream out;
  out << "10^" << std::setprecision(50) << lg << " (~" << std::setprecision(4)
      << mantissa << "e+" << ip << ")";
  return out.str();
}

HighFloat high_log10(const BigInt& v) {
  if (v <= 0) throw std::domain_error("log10 of non-positive value");
  return hf_log10(HighFloat(v));
}

std::string rational_to_string(const BigRat& r) {
  BigInt num = numerator(r), den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of negative value");
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // exact at every step
  }
  return r;
}

BigInt int_pow(const BigInt& base, int exp) {
  if (exp < 0) throw std::domain_error("negative integer exponent");
  BigInt r = 1, b = base;
  while (exp > 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

int ceil_log3(int n) {
  if (n < 1) throw std::domain_error("log3 of non-positive value");
  int e = 0;
  BigInt p = 1;
  while (p < n) {
    p *= 3;
    ++e;
  }
  return e;
}

BoundValue psi(int n, int d, int l) {
  if (n < 2 || d < 2 || l < 1)
    throw std::domain_error("psi requires n >= 2, d >= 2, l >= 1");
  HighFloat nd(BigInt(n) * d);
  HighFloat exponent = 3 * log3_of(nd) + 9 * log3_of(log3_of(nd)) + 36;
  HighFloat lg = 27 * hf_log10(HighFloat(2)) + hf_log10(HighFloat(l)) +
                 exponent * hf_log10(nd);
  return BoundValue::from_log10(lg);
}

BoundValue phi(int n, int l) {
  if (n < 3 || l < 1) throw std::domain_error("phi requires n >= 3, l >= 1");
  HighFloat hn(n);
  HighFloat exponent = 12 * log3_of(hn) + 36 * log3_of(log3_of(hn)) + 91;
  HighFloat lg = 96 * hf_log10(HighFloat(2)) + hf_log10(HighFloat(l)) +
                 exponent * hf_log10(hn);
  return BoundValue::from_log10(lg);
}

BoundValue upsilon(int n, int l) {
  if (n < 2 || l < 1) throw std::domain_error("upsilon requires n >= 2, l >= 1");
  BigInt v = 2 * int_pow(BigInt(n), 3 * ceil_log3(n) + 4) * l;
  return BoundValue::exact(v);
}

BigInt upsilon_prime(int n, int l) {
  if (n < 2 || l < 1)
    throw std::domain_error("upsilon_prime requires n >= 2, l >= 1");
  return 8 * int_pow(BigInt(l) + 1, n) * int_pow(BigInt(n), 5) * (n - 1);
}

BigInt beth(int period_len, int l, int n) {
  if (n < 3 || l < 1) throw std::domain_error("beth requires n >= 3, l >= 1");
  if (period_len == 2) return BigInt(2 * l - 1) * (n - 1) * (n - 2) / 2;
  if (period_len == 3) return BigInt(2 * l - 1) * (n - 1) * (n - 2);
  if (period_len == n - 1) {
    if (l < 2) throw std::domain_error("beth(n-1, l, n) requires l >= 2");
    return BigInt(l - 2) * (n - 1);
  }
  throw std::domain_error("unsupported period length for beth");
}

BigInt alpha_lower(int n, int l) {
  if (n < 4) throw std::domain_error("alpha requires n >= 4");
  BigInt threshold = int_pow(BigInt(2), n - 1);
  if (l <= threshold)
    throw std::domain_error("alpha requires l > 2^(n-1)");
  return (BigInt(l) - threshold) * (n - 2) * (n - 3) / 2;
}

BigInt p_nd(int n, int d) {
  if (n < 1 || d < 1) throw std::domain_error("p_nd requires n, d >= 1");
  // v = (A/2)(log3(nd) + 2) with A = 3(n+1)d. For integers m,
  //   m >= v  <=>  3^(2m - 2A) >= (nd)^A,
  // so the ceiling is decided exactly.
  BigInt A = BigInt(3) * (n + 1) * d;
  BigInt nd = BigInt(n) * d;
  double estimate =
      1.5 * (n + 1) * d * (std::log(static_cast<double>(n) * d) / std::log(3.0) + 2.0);
  BigInt m = static_cast<long long>(std::ceil(estimate));
  BigInt nd_pow_A = int_pow(nd, static_cast<int>(A));
  auto at_least_v = [&](const BigInt& candidate) {
    BigInt e = 2 * candidate - 2 * A;
    if (e < 0) return false;
    return int_pow(BigInt(3), static_cast<int>(e)) >= nd_pow_A;
  };
  while (!at_least_v(m)) ++m;
  while (m > A && at_least_v(m - 1)) --m;
  return m;
}

ClassicLowerBounds classic_lower_bounds(int n, int l) {
  if (n < 2 || l < 2)
    throw std::domain_error("classic bounds require n >= 2, l >= 2");
  ClassicLowerBounds bounds;
  bounds.kuzmin = (BigInt(n) * n + n - 2) / 2;
  bounds.gk_height = BigRat(BigInt(l - 1) * n * n, 4) + 1;
  return bounds;
}

BigRat xi_upper(int k, int n) {
  if (k < 1 || k > n) throw std::domain_error("xi_upper requires 1 <= k <= n");
  BigInt f = factorial(k - 1);
  return BigRat(int_pow(BigInt(k), 2 * n), f * f);
}

BigRat epsilon_upper(int k, int n) {
  if (k < 1 || k > n) throw std::domain_error("epsilon_upper requires 1 <= k <= n");
  BigInt fk = factorial(k);
  BigRat first(int_pow(BigInt(k), 2 * n), fk * fk);
  BigInt fnk = factorial(n - k);
  BigRat second(int_pow(BigInt(n - k + 1), 2 * n), fnk * fnk);
  return std::min(first, second);
}

BoundValue lopatin_cnl(int n, int l) {
  if (n < 1 || l < 1) throw std::domain_error("lopatin requires n >= 1, l >= 1");
  if (n % 2 == 0)
    return BoundValue::exact(4 * int_pow(BigInt(2), n / 2) * l);
  HighFloat lg = hf_log10(HighFloat(4)) +
                 HighFloat(n) / 2 * hf_log10(HighFloat(2)) + hf_log10(HighFloat(l));
  return BoundValue::from_log10(lg);
}

}  // namespace wordlab
