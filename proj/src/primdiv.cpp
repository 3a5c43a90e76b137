#include "undecim/primdiv.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "undecim/defective_pairs_data.hpp"
#include "undecim/errors.hpp"
#include "undecim/pell.hpp"

namespace undecim::primdiv {

std::string reason_token(Reason r) {
  switch (r) {
    case Reason::kCarmichaelLargeIndex:
      return "carmichael_large_index";
    case Reason::kCongruenceContradiction:
      return "congruence_contradiction";
    case Reason::kDirectCheck:
      return "direct_check";
    case Reason::kDefectiveTableHit:
      return "defective_table_hit";
  }
  throw internal_error("reason_token: unknown reason");
}

std::string reason_text(Reason r) {
  switch (r) {
    case Reason::kCarmichaelLargeIndex:
      return "Carmichael primitive-divisor bound";
    case Reason::kCongruenceContradiction:
      return "congruence contradiction";
    case Reason::kDirectCheck:
      return "direct check";
    case Reason::kDefectiveTableHit:
      return "defective table hit";
  }
  throw internal_error("reason_text: unknown reason");
}

CarmichaelResult carmichael_screen(const BigInt& d, const BigInt& p,
                                   unsigned m_bound) {
  if (!ntheory::is_prime(p)) {
    throw std::domain_error("carmichael_screen: p must be prime");
  }

  const std::vector<BigInt> xs =
      pell::x_sequence(d, pell::SignPolicy::kInterleaved, m_bound + 1);

  CarmichaelResult out;
  std::optional<unsigned> hit_m;
  unsigned hit_e = 0;
  for (unsigned m = 0; m <= m_bound; ++m) {
    DirectCheck check{m, xs[m], ntheory::is_power_of(xs[m], p)};
    // e = 0 means X_m = 1, the trivial solution; only e >= 1 defeats the
    // screen.
    if (check.power_exponent && *check.power_exponent >= 1 && !hit_m) {
      hit_m = m;
      hit_e = *check.power_exponent;
    }
    out.checks.push_back(std::move(check));
  }

  std::ostringstream detail;
  if (hit_m) {
    detail << "X_" << *hit_m << " = " << p << "^" << hit_e
           << " found by direct check";
    out.verdict = {false, Reason::kDirectCheck, detail.str()};
    return out;
  }

  if (m_bound < 12 || p + 1 > m_bound) {
    detail << "inconclusive: need m_bound >= max(12, p + 1) = "
           << (p < 11 ? BigInt(12) : p + 1) << ", got " << m_bound;
    out.verdict = {false, std::nullopt, detail.str()};
    return out;
  }

  detail << "no X_m = " << p << "^e with e >= 1 for m <= " << m_bound
         << "; for m > " << m_bound
         << " every X_m has a prime factor q with q == +-1 (mod m), and "
         << p << " == +-1 (mod m) fails since m > " << p << " + 1";
  out.verdict = {true, Reason::kCarmichaelLargeIndex, detail.str()};
  return out;
}

ScreenVerdict congruence_screen(const BigInt& p, const BigInt& n) {
  if (n < 5 || !ntheory::is_prime(n)) {
    throw std::domain_error("congruence_screen: n must be a prime >= 5");
  }
  const int s = ntheory::legendre(-1, p);  // validates p odd prime

  BigInt want = s;
  want %= n;
  if (want < 0) want += n;
  const BigInt have = p % n;

  std::ostringstream detail;
  detail << "primitive divisor q == (-1|q) (mod n): (-1|" << p << ") = " << s
         << ", " << p << " == " << have << " (mod " << n << ")";
  if (have == want) {
    detail << "; congruence holds, " << p << " is admissible";
    return {false, std::nullopt, detail.str()};
  }
  detail << " != " << want << "; " << p
         << " cannot be a primitive divisor at index " << n;
  return {true, Reason::kCongruenceContradiction, detail.str()};
}

LucasPairZi::LucasPairZi(gaussian::GaussianInteger alpha_, BigInt n_)
    : alpha(std::move(alpha_)), n(std::move(n_)) {
  if (alpha.re == 0 || alpha.im == 0) {
    throw std::domain_error("LucasPairZi: requires u != 0 and v != 0");
  }
  if (n < 5 || !ntheory::is_prime(n)) {
    throw std::domain_error("LucasPairZi: requires n >= 5 prime");
  }
}

std::vector<TableEntry> parse_defective_table(std::istream& in) {
  std::vector<TableEntry> entries;
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream row(line);
    long n = 0, trace = 0, norm = 0;
    if (!(row >> n >> trace >> norm)) {
      throw std::domain_error("defective table: malformed row: " + line);
    }
    if (n < 5 || trace < 1 || norm == 0) {
      throw std::domain_error("defective table: out-of-range row: " + line);
    }
    entries.push_back({static_cast<unsigned>(n), trace, norm});
  }
  return entries;
}

const std::vector<TableEntry>& defective_table() {
  static const std::vector<TableEntry> table = [] {
    std::istringstream in(detail::kDefectivePairsText);
    return parse_defective_table(in);
  }();
  return table;
}

bool defective_table_check(const LucasPairZi& pair) {
  const BigInt trace = 2 * abs(pair.alpha.re);
  const BigInt nrm = gaussian::norm(pair.alpha);
  for (const TableEntry& e : defective_table()) {
    if (pair.n == e.n && trace == e.trace && nrm == e.norm) return true;
  }
  return false;
}

bool table_has_zi_pair(const BigInt& n) {
  if (n < 5) throw std::domain_error("table_has_zi_pair: requires n >= 5");
  for (const TableEntry& e : defective_table()) {
    if (n != e.n) continue;
    // alpha = a/2 + iv needs an even trace and b = (a/2)^2 + v^2, v != 0.
    if (e.trace % 2 != 0) continue;
    const long u = e.trace / 2;
    const long v2 = e.norm - u * u;
    if (v2 <= 0) continue;
    const BigInt v = ntheory::isqrt(BigInt(v2));
    if (v * v == v2) return true;
  }
  return false;
}

}  // namespace undecim::primdiv
