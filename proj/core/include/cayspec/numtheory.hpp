#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cayspec::numtheory {

// Everything here is trial-division desk scale; inputs above this are rejected.
inline constexpr std::int64_t kMaxInput = 2147483647;  // 2^31 - 1

/// Prime factorization as (prime, exponent) pairs in ascending prime order.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// Count of 1 <= k <= n with gcd(k, n) = 1.
std::int64_t euler_phi(std::int64_t n);

/// 1 at n = 1; 0 when a prime square divides n; (-1)^k for square-free n
/// with k prime factors.
int moebius(std::int64_t n);

/// All divisors of n, ascending (first 1, last n).
std::vector<std::int64_t> divisors(std::int64_t n);

/// Number of distinct primes dividing n (0 for n = 1).
int prime_omega(std::int64_t n);

/// Residue class B(d, n) = {t : 1 <= t <= n, gcd(t, n) = d}, ascending.
/// Requires d | n; the class has euler_phi(n / d) members.
std::vector<std::int64_t> residue_class(std::int64_t d, std::int64_t n);

/// Ramanujan sum C(r, n) in the Hoelder closed form
///     phi(n) / phi(n / g) * moebius(n / g),   g = gcd(r, n),
/// with gcd(0, n) taken as n so that C(0, n) = phi(n). Always an exact
/// integer; r is reduced mod n first.
std::int64_t ramanujan_hoelder(std::int64_t r, std::int64_t n);

/// C(r, n) evaluated directly as the sum of exp(2*pi*i*k*r/n) over the
/// primitive residues k in B(1, n), accumulated in ascending k order.
/// The imaginary part must cancel to below tol, otherwise
/// InternalInconsistency is thrown; returns the real part.
double ramanujan_direct(std::int64_t r, std::int64_t n, double tol = 1e-8);

// A Ramanujan sum validated through both routes: value is the integer
// Hoelder form and must agree with the direct primitive-root summation
// within tol.
struct RamanujanValue {
    std::int64_t r = 0;
    std::int64_t n = 1;
    std::int64_t value = 1;
};

RamanujanValue ramanujan_value(std::int64_t r, std::int64_t n, double tol = 1e-9);

}  // namespace cayspec::numtheory
