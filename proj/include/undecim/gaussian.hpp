#pragma once

#include <iosfwd>
#include <optional>
#include <utility>

#include "undecim/ntheory.hpp"

namespace undecim::gaussian {

struct GaussianInteger {
  BigInt re;
  BigInt im;

  GaussianInteger() : re(0), im(0) {}
  GaussianInteger(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}
  bool operator==(const GaussianInteger&) const = default;
};

GaussianInteger operator+(const GaussianInteger& a, const GaussianInteger& b);
GaussianInteger operator-(const GaussianInteger& a, const GaussianInteger& b);
GaussianInteger operator-(const GaussianInteger& a);
GaussianInteger operator*(const GaussianInteger& a, const GaussianInteger& b);
std::ostream& operator<<(std::ostream& os, const GaussianInteger& z);

GaussianInteger conj(const GaussianInteger& z);
BigInt norm(const GaussianInteger& z);  // re^2 + im^2
bool is_zero(const GaussianInteger& z);
bool is_unit(const GaussianInteger& z);  // one of 1, -1, i, -i

// The unique associate u*z (u a unit) with re > 0 and im >= 0; units map
// to 1 and zero to zero. Pins gcd and root results to one representative.
GaussianInteger canonical_associate(const GaussianInteger& z);

// True when a and b are associates (a = u*b for a unit u).
bool associates(const GaussianInteger& a, const GaussianInteger& b);

// Euclidean division: q minimizes norm(a - q*b) by rounding each coordinate
// of a*conj(b)/norm(b) to the nearest integer (ties to even). The remainder
// satisfies norm(r) <= norm(b)/2. Requires b != 0.
std::pair<GaussianInteger, GaussianInteger> divmod(const GaussianInteger& a,
                                                   const GaussianInteger& b);

bool divides(const GaussianInteger& d, const GaussianInteger& z);

// z / d when the division is exact; throws std::domain_error otherwise.
GaussianInteger exact_div(const GaussianInteger& z, const GaussianInteger& d);

// Euclidean algorithm; result is the canonical associate. gcd(0, 0) is a
// domain error.
GaussianInteger gcd(GaussianInteger a, GaussianInteger b);

GaussianInteger pow(const GaussianInteger& z, unsigned long e);

// A root beta with beta^n an associate of target, as the canonical
// associate, or nothing when no such root exists. Found by exhausting
// lattice points on the circle norm(beta) = norm(target)^(1/n); if that
// norm is not an exact n-th power there is no root. Requires n >= 2,
// target != 0.
std::optional<GaussianInteger> nth_root(const GaussianInteger& target,
                                        unsigned n);

// v*(3u^2 - v^2): the imaginary part of (u + iv)^3. Cube extractions
// reduce the exponential equation to this expression equaling 11^k.
BigInt imag_identity_rhs(const BigInt& u, const BigInt& v);

}  // namespace undecim::gaussian
