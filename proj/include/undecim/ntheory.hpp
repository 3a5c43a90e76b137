#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace undecim {

using BigInt = mpz_class;

namespace ntheory {

// Floor of the square root, n >= 0. Newton iteration with a final
// correction step so the result is exact for all inputs.
BigInt isqrt(const BigInt& n);

// base^e by binary exponentiation (e = 0 gives 1).
BigInt pow_u(const BigInt& base, unsigned long e);

struct PowerDecomposition {
  BigInt base;
  unsigned exponent;  // maximal: base is not itself a perfect power
  bool operator==(const PowerDecomposition&) const = default;
};

// Writes n = base^exponent with the largest possible exponent >= 2, or
// nothing if n is not a perfect power. Requires n >= 2. With the exponent
// maximal, n is an m-th power exactly when m divides the exponent.
std::optional<PowerDecomposition> perfect_power(const BigInt& n);

// Legendre symbol (a|p) in {-1, 0, +1} by Euler's criterion
// a^((p-1)/2) mod p. Requires p an odd prime.
int legendre(const BigInt& a, const BigInt& p);

// Deterministic for n < 3.3 * 10^24 (Miller-Rabin, bases 2..37); larger
// inputs fall back to a high-repetition probabilistic test.
bool is_prime(const BigInt& n);

struct Factorization {
  std::vector<std::pair<BigInt, unsigned>> factors;  // ascending primes
  std::optional<BigInt> cofactor;                    // composite, factors > bound

  BigInt recombine() const;
};

// Trial division by 2 and odd d <= bound. A residual that is provably prime
// (certified by the division bound or the primality test) joins the factor
// list; a residual that is composite with all prime factors > bound is
// returned as the unfactored cofactor. Requires n >= 2, bound >= 2.
Factorization trial_factor(const BigInt& n, std::uint64_t bound);

// Exponent e >= 0 with n = p^e, or nothing. Requires n >= 1 and p prime.
std::optional<unsigned> is_power_of(const BigInt& n, const BigInt& p);

}  // namespace ntheory
}  // namespace undecim
