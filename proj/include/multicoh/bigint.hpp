#ifndef MULTICOH_BIGINT_HPP
#define MULTICOH_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace multicoh {

/// Exact arbitrary-precision integer. All cohomology dimensions, ranks and
/// Euler characteristics are computed in this type; nothing in the engine
/// touches floating point.
using BigInt = boost::multiprecision::cpp_int;

/// Binomial coefficient with the dimension-formula convention:
/// C(x, k) = 0 whenever k < 0 or x < k, and the usual value for x >= k >= 0.
inline BigInt binomial(long long x, long long k) {
  if (k < 0 || x < k) return 0;
  if (k == 0 || k == x) return 1;
  // C(x, k) = C(x, x-k); keep the smaller k.
  if (k > x - k) k = x - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (x - k + i);
    r /= i;  // exact at every step
  }
  return r;
}

/// chi of O(a) on P^n as the integer-valued polynomial
/// (a+1)(a+2)...(a+n)/n!, defined for every integer a (signed, unlike the
/// dimension-formula binomial above).
inline BigInt chi_line_poly(int n, long long a) {
  if (n < 1) throw std::domain_error("chi_line_poly: n must be >= 1");
  BigInt num = 1;
  for (int i = 1; i <= n; ++i) num *= (a + i);
  BigInt fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  BigInt q, r;
  boost::multiprecision::divide_qr(num, fact, q, r);
  if (r != 0) throw std::logic_error("chi_line_poly: inexact division");
  return q;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace multicoh

#endif  // MULTICOH_BIGINT_HPP
