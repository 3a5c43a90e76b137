#include "undecim/gaussian.hpp"

#include <array>
#include <ostream>
#include <stdexcept>

#include "undecim/errors.hpp"

namespace undecim::gaussian {

GaussianInteger operator+(const GaussianInteger& a, const GaussianInteger& b) {
  return {a.re + b.re, a.im + b.im};
}

GaussianInteger operator-(const GaussianInteger& a, const GaussianInteger& b) {
  return {a.re - b.re, a.im - b.im};
}

GaussianInteger operator-(const GaussianInteger& a) { return {-a.re, -a.im}; }

GaussianInteger operator*(const GaussianInteger& a, const GaussianInteger& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

std::ostream& operator<<(std::ostream& os, const GaussianInteger& z) {
  os << z.re;
  if (z.im >= 0) os << "+";
  return os << z.im << "i";
}

GaussianInteger conj(const GaussianInteger& z) { return {z.re, -z.im}; }

BigInt norm(const GaussianInteger& z) { return z.re * z.re + z.im * z.im; }

bool is_zero(const GaussianInteger& z) { return z.re == 0 && z.im == 0; }

bool is_unit(const GaussianInteger& z) { return norm(z) == 1; }

GaussianInteger canonical_associate(const GaussianInteger& z) {
  if (is_zero(z)) return z;
  GaussianInteger w = z;
  // Multiplication by i rotates a quarter turn; at most three rotations
  // land in {re > 0, im >= 0}.
  for (int i = 0; i < 4; ++i) {
    if (w.re > 0 && w.im >= 0) return w;
    w = GaussianInteger{-w.im, w.re};
  }
  throw internal_error("canonical_associate: no quadrant representative");
}

bool associates(const GaussianInteger& a, const GaussianInteger& b) {
  if (is_zero(a) || is_zero(b)) return is_zero(a) && is_zero(b);
  return canonical_associate(a) == canonical_associate(b);
}

namespace {

// Nearest integer to num/den for den > 0, ties to even.
BigInt round_div(const BigInt& num, const BigInt& den) {
  BigInt q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  const BigInt twice = 2 * r;
  if (twice < den) return q;
  if (twice > den) return q + 1;
  return mpz_even_p(q.get_mpz_t()) ? q : q + 1;
}

}  // namespace

std::pair<GaussianInteger, GaussianInteger> divmod(const GaussianInteger& a,
                                                   const GaussianInteger& b) {
  if (is_zero(b)) throw std::domain_error("divmod: division by zero");
  const BigInt n = norm(b);
  const GaussianInteger t = a * conj(b);
  const GaussianInteger q{round_div(t.re, n), round_div(t.im, n)};
  const GaussianInteger r = a - q * b;
  if (2 * norm(r) > n) throw internal_error("divmod: remainder too large");
  return {q, r};
}

bool divides(const GaussianInteger& d, const GaussianInteger& z) {
  if (is_zero(d)) return is_zero(z);
  const BigInt n = norm(d);
  const GaussianInteger t = z * conj(d);
  return mpz_divisible_p(t.re.get_mpz_t(), n.get_mpz_t()) &&
         mpz_divisible_p(t.im.get_mpz_t(), n.get_mpz_t());
}

GaussianInteger exact_div(const GaussianInteger& z, const GaussianInteger& d) {
  if (is_zero(d)) throw std::domain_error("exact_div: division by zero");
  const BigInt n = norm(d);
  const GaussianInteger t = z * conj(d);
  if (!mpz_divisible_p(t.re.get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(t.im.get_mpz_t(), n.get_mpz_t())) {
    throw std::domain_error("exact_div: not divisible");
  }
  return {t.re / n, t.im / n};
}

GaussianInteger gcd(GaussianInteger a, GaussianInteger b) {
  if (is_zero(a) && is_zero(b)) throw std::domain_error("gcd: gcd(0, 0)");
  while (!is_zero(b)) {
    auto [q, r] = divmod(a, b);
    a = b;
    b = r;
  }
  return canonical_associate(a);
}

GaussianInteger pow(const GaussianInteger& z, unsigned long e) {
  GaussianInteger acc{1, 0};
  GaussianInteger base = z;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::optional<GaussianInteger> nth_root(const GaussianInteger& target,
                                        unsigned n) {
  if (n < 2) throw std::domain_error("nth_root: requires n >= 2");
  if (is_zero(target)) throw std::domain_error("nth_root: target is zero");

  const BigInt tn = norm(target);
  BigInt root_norm;
  if (mpz_root(root_norm.get_mpz_t(), tn.get_mpz_t(), n) == 0) {
    return std::nullopt;  // norm(beta)^n = norm(target) has no solution
  }

  // Walk lattice points a^2 + b^2 = root_norm. A root beta = a+bi and its
  // conjugate need separate checks (they are not associates in general);
  // -beta and +-i*beta give associate powers, so a >= 0 with both signs of
  // b covers every candidate up to units.
  const BigInt amax = ntheory::isqrt(root_norm);
  for (BigInt a = 0; a <= amax; ++a) {
    const BigInt rem = root_norm - a * a;
    const BigInt b = ntheory::isqrt(rem);
    if (b * b != rem) continue;
    for (const GaussianInteger& cand :
         {GaussianInteger{a, b}, GaussianInteger{a, -b}}) {
      if (is_zero(cand)) continue;
      if (associates(pow(cand, n), target)) return canonical_associate(cand);
    }
  }
  return std::nullopt;
}

BigInt imag_identity_rhs(const BigInt& u, const BigInt& v) {
  return v * (3 * u * u - v * v);
}

}  // namespace undecim::gaussian
