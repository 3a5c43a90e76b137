#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "undecim/ntheory.hpp"

namespace undecim::lucas {

// t_{r+1} = p*t_r - q*t_{r-1}, seeded at indices -1 and 0. Terms extend to
// all r in Z when |q| = 1 (the backward step divides by q).
struct BinaryRecurrence {
  BigInt p;
  BigInt q;
  BigInt t_minus1;
  BigInt t0;
  bool operator==(const BinaryRecurrence&) const = default;
};

// Exact term at index r. Negative r below -1 requires |q| = 1.
BigInt term(const BinaryRecurrence& seq, long r);

// One full period of the sequence mod m, starting at index r_start.
// Residues are balanced: -m/2 < value <= m/2. The period is that of the
// state pair (t_r, t_{r+1}), so term indices reduce mod it.
struct ResidueWindow {
  std::uint64_t period;
  std::vector<std::int64_t> residues;
  bool operator==(const ResidueWindow&) const = default;
};

ResidueWindow residues_mod(const BinaryRecurrence& seq, std::uint64_t m,
                           long r_start);

// Indices r (mod period) with t_r == 0 (mod m), computed from r_start = 0.
// The set of such r is a union of residue classes; the returned values are
// their representatives in [0, period).
std::set<std::uint64_t> zero_classes_mod(const BinaryRecurrence& seq,
                                         std::uint64_t m);

// Whether q_prime divides t_r for every r == target_class (mod target_mod),
// decided exactly by scanning one combined period
// lcm(target_mod, period mod q_prime). Requires q_prime prime with
// gcd(q_prime, seq.q) = 1 so the sequence is purely periodic mod q_prime.
bool divisor_propagation(const BinaryRecurrence& seq, const BigInt& q_prime,
                         std::uint64_t target_class, std::uint64_t target_mod);

// Indices r in [r_lo, r_hi] where |t_r| is a power of the prime p,
// reported as (r, exponent); |t_r| = 1 appears with exponent 0.
std::vector<std::pair<long, unsigned>> power_terms(const BinaryRecurrence& seq,
                                                   const BigInt& p, long r_lo,
                                                   long r_hi);

}  // namespace undecim::lucas
