#include "undecim/lucas.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "undecim/errors.hpp"

namespace undecim::lucas {

namespace {

// Residue arithmetic runs in uint64; (m-1)^2 must not overflow.
constexpr std::uint64_t kModulusLimit = 4'000'000'000ULL;

std::uint64_t mod_u64(const BigInt& v, std::uint64_t m) {
  return mpz_fdiv_ui(v.get_mpz_t(), m);  // floor convention: result in [0, m)
}

std::int64_t balanced(std::uint64_t v, std::uint64_t m) {
  // Map [0, m) onto (-m/2, m/2].
  if (2 * v <= m) return static_cast<std::int64_t>(v);
  return static_cast<std::int64_t>(v) - static_cast<std::int64_t>(m);
}

}  // namespace

BigInt term(const BinaryRecurrence& seq, long r) {
  if (r == -1) return seq.t_minus1;
  if (r == 0) return seq.t0;
  BigInt prev = seq.t_minus1;
  BigInt cur = seq.t0;
  if (r > 0) {
    for (long i = 0; i < r; ++i) {
      BigInt next = seq.p * cur - seq.q * prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }
  // Backward step divides by q; exact iteration needs q invertible in Z.
  if (seq.q != 1 && seq.q != -1) {
    throw std::domain_error("term: r < -1 requires |q| = 1");
  }
  for (long i = -1; i > r; --i) {
    BigInt before = (seq.p * prev - cur) * seq.q;  // 1/q = q when q^2 = 1
    cur = std::move(prev);
    prev = std::move(before);
  }
  return prev;
}

ResidueWindow residues_mod(const BinaryRecurrence& seq, std::uint64_t m,
                           long r_start) {
  if (m < 2) throw std::domain_error("residues_mod: requires m >= 2");
  if (m > kModulusLimit) {
    throw std::domain_error("residues_mod: modulus too large");
  }

  const std::uint64_t p = mod_u64(seq.p, m);
  const std::uint64_t q = mod_u64(seq.q, m);
  std::uint64_t a = mod_u64(term(seq, r_start), m);
  std::uint64_t b = mod_u64(term(seq, r_start + 1), m);
  auto advance = [p, q, m](std::uint64_t& x, std::uint64_t& y) {
    const std::uint64_t next = (p * y % m + m - q * x % m) % m;
    x = y;
    y = next;
  };

  ResidueWindow out;
  if (std::gcd(q, m) == 1) {
    // Invertible step map: purely periodic, so the first return to the
    // initial state closes the cycle.
    const std::uint64_t a0 = a, b0 = b;
    for (;;) {
      out.residues.push_back(balanced(a, m));
      advance(a, b);
      if (a == a0 && b == b0) break;
    }
    out.period = out.residues.size();
    return out;
  }

  // Non-invertible step: detect the first repeated state. If the repeat
  // is not the initial state the window is only eventually periodic and
  // no period starting at r_start exists.
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> seen;
  std::uint64_t idx = 0;
  for (;;) {
    auto [it, fresh] = seen.try_emplace({a, b}, idx);
    if (!fresh) {
      if (it->second != 0) {
        throw std::domain_error(
            "residues_mod: sequence is not purely periodic mod m");
      }
      out.period = idx;
      out.residues.resize(idx);
      return out;
    }
    out.residues.push_back(balanced(a, m));
    advance(a, b);
    ++idx;
  }
}

std::set<std::uint64_t> zero_classes_mod(const BinaryRecurrence& seq,
                                         std::uint64_t m) {
  const ResidueWindow win = residues_mod(seq, m, 0);
  std::set<std::uint64_t> classes;
  for (std::uint64_t i = 0; i < win.period; ++i) {
    if (win.residues[i] == 0) classes.insert(i);
  }
  return classes;
}

bool divisor_propagation(const BinaryRecurrence& seq, const BigInt& q_prime,
                         std::uint64_t target_class,
                         std::uint64_t target_mod) {
  if (target_mod < 1) {
    throw std::domain_error("divisor_propagation: requires target_mod >= 1");
  }
  if (!ntheory::is_prime(q_prime)) {
    throw std::domain_error("divisor_propagation: q_prime must be prime");
  }
  if (q_prime > kModulusLimit) {
    throw std::domain_error("divisor_propagation: q_prime too large");
  }
  const std::uint64_t q = q_prime.get_ui();
  if (mod_u64(seq.q, q) == 0) {
    throw std::domain_error(
        "divisor_propagation: q_prime divides the recurrence coefficient q");
  }

  const ResidueWindow win = residues_mod(seq, q, 0);
  // Indices repeat mod win.period and targets repeat mod target_mod, so one
  // combined window decides every index in the class.
  const std::uint64_t span = std::lcm(win.period, target_mod);
  for (std::uint64_t r = target_class % target_mod; r < span;
       r += target_mod) {
    if (win.residues[r % win.period] != 0) return false;
  }
  return true;
}

std::vector<std::pair<long, unsigned>> power_terms(const BinaryRecurrence& seq,
                                                   const BigInt& p, long r_lo,
                                                   long r_hi) {
  if (r_lo > r_hi) throw std::domain_error("power_terms: empty range");
  std::vector<std::pair<long, unsigned>> out;
  BigInt cur = term(seq, r_lo);
  BigInt next = term(seq, r_lo + 1);
  for (long r = r_lo; r <= r_hi; ++r) {
    const BigInt v = abs(cur);
    if (v >= 1) {
      if (auto e = ntheory::is_power_of(v, p)) out.emplace_back(r, *e);
    }
    BigInt after = seq.p * next - seq.q * cur;
    cur = std::move(next);
    next = std::move(after);
  }
  return out;
}

}  // namespace undecim::lucas
