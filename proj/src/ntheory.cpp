#include "undecim/ntheory.hpp"

#include <array>
#include <stdexcept>

#include "undecim/errors.hpp"

namespace undecim::ntheory {

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw std::domain_error("isqrt: negative input");
  if (n == 0) return 0;

  // Start above the true root so the Newton sequence decreases monotonically.
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  BigInt x = BigInt(1) << static_cast<unsigned long>((bits + 1) / 2);
  for (;;) {
    BigInt y = (x + n / x) >> 1;
    if (y >= x) break;
    x = y;
  }
  // Newton can stop one off; pin the floor exactly.
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

BigInt pow_u(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

std::optional<PowerDecomposition> perfect_power(const BigInt& n) {
  if (n < 2) throw std::domain_error("perfect_power: requires n >= 2");
  // floor(log2 n) bounds the exponent; scanning downward yields the maximal
  // one first.
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (unsigned long e = static_cast<unsigned long>(bits - 1); e >= 2; --e) {
    BigInt root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
      return PowerDecomposition{root, static_cast<unsigned>(e)};
    }
  }
  return std::nullopt;
}

namespace {

bool miller_rabin_witness(const BigInt& n, const BigInt& a, const BigInt& d,
                          unsigned long s) {
  // Returns true when a proves n composite.
  BigInt x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return false;
  for (unsigned long i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  static constexpr std::array<unsigned, 12> kBases = {2,  3,  5,  7,  11, 13,
                                                      17, 19, 23, 29, 31, 37};
  for (unsigned p : kBases) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }

  BigInt d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  d >>= s;
  for (unsigned a : kBases) {
    if (miller_rabin_witness(n, BigInt(a), d, s)) return false;
  }
  // Sorenson & Webster: the twelve bases above decide primality below
  // 3317044064679887385961981.
  static const BigInt kDeterministicLimit("3317044064679887385961981");
  if (n < kDeterministicLimit) return true;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

int legendre(const BigInt& a, const BigInt& p) {
  if (p < 3 || mpz_even_p(p.get_mpz_t()) || !is_prime(p)) {
    throw std::domain_error("legendre: p must be an odd prime");
  }
  BigInt base = a % p;
  if (base < 0) base += p;
  BigInt exp = (p - 1) / 2;
  BigInt r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
  if (r == 0) return 0;
  if (r == 1) return 1;
  if (r == p - 1) return -1;
  throw internal_error("legendre: Euler criterion residue out of range");
}

BigInt Factorization::recombine() const {
  BigInt n = cofactor.value_or(1);
  for (const auto& [p, e] : factors) n *= pow_u(p, e);
  return n;
}

Factorization trial_factor(const BigInt& n, std::uint64_t bound) {
  if (n < 2) throw std::domain_error("trial_factor: requires n >= 2");
  if (bound < 2) throw std::domain_error("trial_factor: requires bound >= 2");

  Factorization out;
  BigInt m = n;
  auto strip = [&m, &out](const BigInt& p) {
    unsigned mult = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      m /= p;
      ++mult;
    }
    if (mult > 0) out.factors.emplace_back(p, mult);
  };

  strip(2);
  for (BigInt d = 3; d <= bound; d += 2) {
    if (d * d > m) break;
    strip(d);
  }

  if (m == 1) return out;
  if (is_prime(m)) {
    // Provably prime residual; no smaller factor exists, so it is the
    // largest prime factor.
    out.factors.emplace_back(m, 1);
    return out;
  }
  out.cofactor = m;
  return out;
}

std::optional<unsigned> is_power_of(const BigInt& n, const BigInt& p) {
  if (n < 1) throw std::domain_error("is_power_of: requires n >= 1");
  if (!is_prime(p)) throw std::domain_error("is_power_of: p must be prime");
  if (n == 1) return 0u;
  BigInt m = n;
  unsigned e = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    ++e;
  }
  if (m == 1) return e;
  return std::nullopt;
}

}  // namespace undecim::ntheory
