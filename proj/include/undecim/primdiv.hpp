#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "undecim/gaussian.hpp"
#include "undecim/ntheory.hpp"

namespace undecim::primdiv {

enum class Reason {
  kCarmichaelLargeIndex,
  kCongruenceContradiction,
  kDirectCheck,
  kDefectiveTableHit,
};

// Stable token for serialization ("carmichael_large_index", ...).
std::string reason_token(Reason r);
// Human-readable form ("Carmichael primitive-divisor bound", ...).
std::string reason_text(Reason r);

struct ScreenVerdict {
  bool excluded;                  // the screened configuration is impossible
  std::optional<Reason> reason;   // set when excluded, or when a direct
                                  // check found a concrete obstruction
  std::string detail;
  bool operator==(const ScreenVerdict&) const = default;
};

// One inspected term of the unit-power sequence.
struct DirectCheck {
  unsigned m;
  BigInt value;                           // X_m
  std::optional<unsigned> power_exponent;  // e with X_m = p^e, if any
  bool operator==(const DirectCheck&) const = default;
};

struct CarmichaelResult {
  ScreenVerdict verdict;
  std::vector<DirectCheck> checks;  // m = 0 .. m_bound
};

// Decides whether X_m = p^e (e >= 1) is solvable, where X_m runs over the
// x-coordinates of the d-unit powers: indices m <= m_bound are checked
// directly; for m > m_bound Carmichael's primitive-divisor theorem gives a
// prime q | X_m with q == +-1 (mod m), which p = p^e's only prime violates
// once m > p + 1. Conclusive only when m_bound >= max(12, p + 1) (the
// theorem needs m > 12); otherwise the verdict is not excluded and the
// detail says why. Requires p prime.
CarmichaelResult carmichael_screen(const BigInt& d, const BigInt& p,
                                   unsigned m_bound = 12);

// Primitive-divisor congruence for Lucas pairs in Z[i]: a primitive prime
// divisor q of the n-th term satisfies q == s (mod n) with s the Legendre
// symbol (-1|q). Excluded when p fails that congruence, i.e. p cannot be a
// primitive divisor at index n. Requires p an odd prime, n >= 5 prime.
ScreenVerdict congruence_screen(const BigInt& p, const BigInt& n);

// Lucas pair alpha, conj(alpha) with alpha = u + iv in Z[i]; the pair is
// encoded by trace 2u and norm u^2 + v^2. Requires u != 0, v != 0 (else the
// pair is degenerate) and n >= 5 prime.
struct LucasPairZi {
  gaussian::GaussianInteger alpha;
  BigInt n;
  LucasPairZi(gaussian::GaussianInteger alpha_, BigInt n_);
};

// Trace/norm row of the defective-pairs table.
struct TableEntry {
  unsigned n;
  long trace;
  long norm;
  bool operator==(const TableEntry&) const = default;
};

// Rows "n a b", '#' comments and blank lines skipped.
std::vector<TableEntry> parse_defective_table(std::istream& in);

// The embedded copy of data/defective_pairs.txt, parsed once. Covers
// 5 <= n <= 30 except n = 6; beyond 30 no defective Lucas number exists,
// so absence decides those n too.
const std::vector<TableEntry>& defective_table();

// Whether the pair's n-th term lacks a primitive divisor, by table lookup
// against (n, |2u|, u^2 + v^2).
bool defective_table_check(const LucasPairZi& pair);

// Whether any table row at index n describes a pair with roots in Z[i]
// (even trace a with b - (a/2)^2 a positive perfect square). False means
// every Z[i] Lucas pair has a primitive divisor at this n. Requires n >= 5.
bool table_has_zi_pair(const BigInt& n);

}  // namespace undecim::primdiv
