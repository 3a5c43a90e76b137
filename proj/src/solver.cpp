#include "undecim/solver.hpp"

#include <algorithm>
#include <sstream>

#include "undecim/errors.hpp"
#include "undecim/gaussian.hpp"
#include "undecim/lucas.hpp"
#include "undecim/oracle.hpp"
#include "undecim/pell.hpp"
#include "undecim/primdiv.hpp"

namespace undecim::solver {

namespace {

constexpr long kP = 11;
constexpr const char* kEquation = "x^2 + 11^(2k) = y^n";

// 11^(2k) is materialized during verification; cap the bit size at ~700M.
constexpr long kMaxK = 100'000'000;

BigInt p_pow(unsigned long e) { return ntheory::pow_u(kP, e); }

void require_ranges(const SolutionTuple& t) {
  if (t.x < 1 || t.y < 1 || t.k < 1 || t.n < 3) {
    throw std::domain_error(
        "solution tuple out of range: need x >= 1, y >= 1, k >= 1, n >= 3");
  }
  if (t.k > kMaxK) {
    throw std::domain_error("solution tuple: k too large to materialize");
  }
}

long valuation_11(BigInt v) {
  long a = 0;
  while (mpz_divisible_ui_p(v.get_mpz_t(), kP)) {
    v /= kP;
    ++a;
  }
  return a;
}

}  // namespace

bool operator<(const SolutionTuple& a, const SolutionTuple& b) {
  if (a.x != b.x) return a.x < b.x;
  if (a.k != b.k) return a.k < b.k;
  if (a.n != b.n) return a.n < b.n;
  return a.y < b.y;
}

bool verify_solution(const SolutionTuple& t) {
  require_ranges(t);
  const BigInt lhs = t.x * t.x + p_pow(2 * static_cast<unsigned long>(t.k));
  if (t.y == 1) return false;  // lhs >= 1 + 11^2 > 1

  // Size screen before materializing y^n: y >= 2^(yb-1) and
  // y^n <= 2^(yb*n), so compare bit counts first.
  const unsigned long yb = mpz_sizeinbase(t.y.get_mpz_t(), 2);
  const unsigned long lb = mpz_sizeinbase(lhs.get_mpz_t(), 2);
  using u128 = unsigned __int128;
  const u128 n = static_cast<u128>(t.n);
  if (n * (yb - 1) > lb) return false;       // y^n > lhs
  if (n * yb + 1 < lb) return false;         // y^n < lhs
  const BigInt rhs =
      ntheory::pow_u(t.y, static_cast<unsigned long>(t.n));
  return lhs == rhs;
}

Reduction reduce_to_primitive(const SolutionTuple& t) {
  require_ranges(t);
  const long a = valuation_11(t.x);
  if (a >= t.k) {
    throw lebesgue_case_error(
        "reduce_to_primitive: 11-adic valuations give nb = 2k <= 2a; "
        "dividing by 11^(2k) leaves X^2 + 1 = Y^n, which has no solution "
        "(Lebesgue)");
  }
  const long b = valuation_11(t.y);
  const Reduction red{
      {t.x / p_pow(static_cast<unsigned long>(a)),
       t.y / p_pow(static_cast<unsigned long>(b)), t.k - a, t.n},
      a, b};
  // The original is a solution exactly when the stripped tuple is one and
  // the valuations balance: y^n = 11^(nb) y1^n must absorb 11^(2a).
  if (!verify_solution(red.primitive) || BigInt(2) * a != BigInt(t.n) * b) {
    throw std::domain_error("reduce_to_primitive: tuple is not a solution");
  }
  return red;
}

SolutionTuple lift_primitive(long lambda) {
  if (lambda < 0) {
    throw std::domain_error("lift_primitive: requires lambda >= 0");
  }
  if (lambda > kMaxK / 3) {
    throw std::domain_error("lift_primitive: lambda too large to materialize");
  }
  const SolutionTuple t{2 * p_pow(3 * static_cast<unsigned long>(lambda)),
                        5 * p_pow(2 * static_cast<unsigned long>(lambda)),
                        1 + 3 * lambda, 3};
  if (!verify_solution(t)) {
    throw internal_error("lift_primitive: family member failed verification");
  }
  return t;
}

namespace {

std::string join_bigints(const std::vector<BigInt>& vs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out << ", ";
    out << vs[i];
  }
  return out.str();
}

// The n=3 Pell leg: one base class of X^2 - 33Y^2 = 3, its y-coordinate
// recurrence, and the Lucas analysis eliminating Y = +-11^m with m >= 1.
// Returns the solutions extracted from the |y_r| = 1 indices and appends
// the per-class narrative to the witness.
std::vector<SolutionTuple> resolve_n3_class(const pell::QuadPair& base,
                                            const pell::FundamentalUnit& fu,
                                            const BigInt& d,
                                            std::ostringstream& w) {
  constexpr long kWindowHi = 30;

  const BigInt P = 2 * fu.u.x;
  const BigInt Q = fu.norm;
  const BigInt y0 = base.y;
  const BigInt y1 = pell::mul(base, fu.u, d).y;
  const lucas::BinaryRecurrence seq{P, Q, P * y0 - y1, y0};

  // The recurrence must reproduce the orbit it claims to describe.
  const auto orb = pell::orbit(base, fu.u, d, 8);
  for (std::size_t r = 0; r < orb.size(); ++r) {
    if (pell::pair_norm(orb[r], d) != 3) {
      throw internal_error("solve_n3: orbit left the conic");
    }
    if (lucas::term(seq, static_cast<long>(r)) != orb[r].y) {
      throw internal_error("solve_n3: recurrence does not match orbit");
    }
  }

  w << " base class " << base << ": y_{r+1} = " << P << " y_r - y_{r-1}"
    << ", y_-1 = " << seq.t_minus1 << ", y_0 = " << seq.t0 << ";";

  // Y = 11^m with m >= 1 needs 11 | y_r; those index classes each carry a
  // co-divisor prime != 11, so no such y_r is a pure 11-power.
  const auto win11 = lucas::residues_mod(seq, kP, 0);
  const auto zeros = lucas::zero_classes_mod(seq, kP);
  w << " 11 | y_r iff r mod " << win11.period << " in {";
  bool first = true;
  for (auto c : zeros) {
    w << (first ? "" : ", ") << c;
    first = false;
  }
  w << "};";
  for (const auto c : zeros) {
    const BigInt yc = lucas::term(seq, static_cast<long>(c));
    const auto fact = ntheory::trial_factor(abs(yc), 1'000'000);
    w << " y_" << c << " = " << yc << " =";
    for (std::size_t i = 0; i < fact.factors.size(); ++i) {
      w << (i > 0 ? " * " : " ") << fact.factors[i].first;
      if (fact.factors[i].second > 1) w << "^" << fact.factors[i].second;
    }
    w << ";";
    std::vector<BigInt> propagated;
    for (const auto& [q, e] : fact.factors) {
      if (q == kP) continue;
      if (lucas::divisor_propagation(seq, q, c, win11.period)) {
        propagated.push_back(q);
      }
    }
    if (propagated.empty()) {
      throw internal_error("solve_n3: zero class not eliminated");
    }
    w << " each of " << join_bigints(propagated) << " divides every y_r with "
      << "r == " << c << " (mod " << win11.period << ");";
  }
  w << " so no y_r is +-11^m with m >= 1;";

  // m = 0 means Y = +-1; the window plus growth and symmetry covers all r.
  const auto powers = lucas::power_terms(seq, kP, -1, kWindowHi);
  std::vector<long> one_indices;
  for (const auto& [r, e] : powers) {
    if (e >= 1) {
      throw internal_error("solve_n3: power term survived propagation");
    }
    one_indices.push_back(r);
  }
  BigInt prev = abs(lucas::term(seq, 0));
  for (long r = 1; r <= kWindowHi; ++r) {
    BigInt cur = abs(lucas::term(seq, r));
    if (cur <= prev) throw internal_error("solve_n3: |y_r| not increasing");
    prev = std::move(cur);
  }
  if (prev <= 1) throw internal_error("solve_n3: window exits at |y| <= 1");
  for (long j = 0; j <= kWindowHi; ++j) {
    if (lucas::term(seq, -1 - j) != -lucas::term(seq, j)) {
      throw internal_error("solve_n3: sign symmetry violated");
    }
  }
  w << " |y_r| = 1 only at r in {";
  for (std::size_t i = 0; i < one_indices.size(); ++i) {
    w << (i > 0 ? ", " : "") << one_indices[i];
  }
  w << "} (|y_r| strictly increasing for r >= 1, and y_{-1-j} = -y_j);";

  std::vector<SolutionTuple> sols;
  for (const long r : one_indices) {
    const BigInt Y = lucas::term(seq, r);
    const BigInt X2 = 3 + d * Y * Y;
    const BigInt X = ntheory::isqrt(X2);
    if (X * X != X2) throw internal_error("solve_n3: X^2 = 3 + 33Y^2 failed");
    if (X % 3 != 0) throw internal_error("solve_n3: X = 3u not divisible by 3");
    const BigInt u = X / 3;
    const BigInt rhs = gaussian::imag_identity_rhs(u, 1);
    if (rhs < 1) throw internal_error("solve_n3: v(3u^2 - v^2) not positive");
    const auto e11 = ntheory::is_power_of(rhs, kP);
    if (!e11 || *e11 < 1) {
      throw internal_error("solve_n3: u does not reproduce 11^k, k >= 1");
    }
    const SolutionTuple t{abs(u * u * u - 3 * u), u * u + 1,
                          static_cast<long>(*e11), 3};
    if (!verify_solution(t)) {
      throw internal_error("solve_n3: extracted tuple failed verification");
    }
    w << " r = " << r << ": Y = " << Y << ", X = " << X << ", (u, v, k) = (+-"
      << u << ", 1, " << *e11 << ") gives (x, y) = (" << t.x << ", " << t.y
      << ");";
    sols.push_back(t);
  }
  return sols;
}

std::string carmichael_witness(const primdiv::CarmichaelResult& screen) {
  std::ostringstream w;
  std::vector<BigInt> xs;
  for (const auto& c : screen.checks) xs.push_back(c.value);
  w << "direct checks X_0..X_" << (screen.checks.size() - 1) << " = ["
    << join_bigints(xs) << "]: ";
  bool trivial = false;
  for (const auto& c : screen.checks) {
    if (c.power_exponent && *c.power_exponent == 0) trivial = true;
  }
  w << "no 11-power with e >= 1";
  if (trivial) w << " (X = 1 = 11^0 means k = 0, excluded by k >= 1)";
  w << "; " << screen.verdict.detail;
  return w.str();
}

}  // namespace

CaseResult solve_n3() {
  Certificate cert;
  cert.equation = kEquation;
  cert.case_label = "n=3";
  std::vector<SolutionTuple> sols;

  // Over Z[i], x + i*11^k = (u + iv)^3 with gcd(u, v) = 1 and
  // v(3u^2 - v^2) = 11^k, so v is +-1 or +-11^k: four shapes.

  {  // v = -1
    const BigInt worst = 1 - p_pow(1);
    if (worst >= 0) throw internal_error("solve_n3: sign check");
    std::ostringstream w;
    w << "3u^2 = 1 - 11^k <= " << worst << " < 0 for k >= 1, but 3u^2 >= 0";
    cert.branches.push_back({"v = -1: 11^k = -(3u^2 - 1), so 3u^2 = 1 - 11^k",
                             "sign analysis", "eliminated", w.str()});
  }

  {  // v = +1, k even
    const BigInt sq_mod3 = p_pow(2) % 3;
    const BigInt rhs_mod3 = (sq_mod3 + 1) % 3;
    if (sq_mod3 != 1 || rhs_mod3 == 0) {
      throw internal_error("solve_n3: mod-3 check");
    }
    std::ostringstream w;
    w << "11^2 == " << sq_mod3 << " (mod 3), so for even k: 11^k + 1 == "
      << rhs_mod3 << " (mod 3), while 3u^2 == 0 (mod 3)";
    cert.branches.push_back({"v = +1, k even: 3u^2 = 11^k + 1",
                             "congruence mod 3", "eliminated", w.str()});
  }

  {  // v = +1, k odd: the Pell descent
    const BigInt d = 33;
    const pell::FundamentalUnit fu = pell::fundamental_unit(d);
    if (fu.norm != 1) {
      throw internal_error("solve_n3: expected a norm +1 unit for D=33");
    }
    const auto bases = pell::base_solutions(pell::PellProblem(d, 3));
    if (bases.empty()) {
      throw internal_error("solve_n3: no base solution for X^2 - 33Y^2 = 3");
    }
    std::ostringstream w;
    w << "k = 2m+1 turns 3u^2 = 11^k + 1 into X^2 - 33Y^2 = 3 with X = 3u, "
      << "Y = 11^m; fundamental unit " << fu.u << ";";
    for (const auto& base : bases) {
      auto found = resolve_n3_class(base, fu, d, w);
      sols.insert(sols.end(), found.begin(), found.end());
    }
    cert.branches.push_back({"v = +1, k odd: 3u^2 = 11^k + 1",
                             "Pell descent with Lucas divisor propagation",
                             "solution", w.str()});
  }

  {  // v = +-11^k
    const BigInt sq_mod3 = p_pow(2) % 3;
    const BigInt plus_mod3 = (sq_mod3 + 1) % 3;
    if (plus_mod3 == 0) throw internal_error("solve_n3: mod-3 check");
    const auto screen = primdiv::carmichael_screen(3, kP, 12);
    if (!screen.verdict.excluded) {
      throw internal_error("solve_n3: D=3 Carmichael screen not conclusive");
    }
    std::ostringstream w;
    w << "plus sign: 3u^2 = 1 + 11^(2k) == " << plus_mod3
      << " (mod 3), impossible; minus sign: 3u^2 = 11^(2k) - 1 makes "
      << "X = 11^k solve X^2 - 3Y^2 = 1; " << carmichael_witness(screen);
    cert.branches.push_back(
        {"v = +-11^k: +-(3u^2 - 11^(2k)) = 1",
         "congruence mod 3 (+); Carmichael primitive-divisor screen on "
         "X^2 - 3Y^2 = 1 (-)",
         "eliminated", w.str()});
  }

  std::sort(sols.begin(), sols.end());
  sols.erase(std::unique(sols.begin(), sols.end()), sols.end());
  for (const auto& s : sols) {
    cert.solutions.push_back({s.x, s.y, s.k, s.n, 0});
  }
  return {std::move(sols), std::move(cert)};
}

CaseResult solve_n4() {
  Certificate cert;
  cert.equation = kEquation;
  cert.case_label = "n=4";

  {  // parity and coprime split of (y^2 - x)(y^2 + x) = 11^(2k)
    const BigInt sq_mod8 = p_pow(2) % 8;
    if (sq_mod8 != 1) throw internal_error("solve_n4: mod-8 check");
    std::ostringstream w;
    w << "11^2 == " << sq_mod8 << " (mod 8), so 11^(2k) == 1 (mod 8): "
      << "y even would force x^2 == -1 (mod 4), impossible, hence y odd and "
      << "x even; a common prime of y^2 - x and y^2 + x divides both 2y^2 "
      << "and 11^(2k), impossible for odd coprime y, 11 | y^2 +- x both "
      << "failing; so y^2 - x = 1 and y^2 + x = 11^(2k)";
    cert.branches.push_back(
        {"x even, y odd; (y^2 - x)(y^2 + x) = 11^(2k) with coprime factors",
         "parity and coprime factorization", "established", w.str()});
  }

  {  // sum to a Pell equation
    const auto fu = pell::fundamental_unit(2);
    if (fu.norm != -1 || fu.u != pell::QuadPair{1, 1}) {
      throw internal_error("solve_n4: unexpected fundamental unit for D=2");
    }
    std::ostringstream w;
    w << "adding the two equations: 2y^2 = 11^(2k) + 1, i.e. X^2 - 2Y^2 = -1 "
      << "with X = 11^k, Y = y; fundamental unit " << fu.u << " of norm "
      << fu.norm;
    cert.branches.push_back({"y^2 - x = 1 and y^2 + x = 11^(2k)",
                             "Pell reduction", "established", w.str()});
  }

  {  // Carmichael screen on D=2
    const auto screen = primdiv::carmichael_screen(2, kP, 12);
    if (!screen.verdict.excluded) {
      throw internal_error("solve_n4: D=2 Carmichael screen not conclusive");
    }
    std::ostringstream w;
    w << "X = 11^k must appear among the x-coordinates X_m of unit powers; "
      << carmichael_witness(screen);
    cert.branches.push_back({"X = 11^k with X^2 - 2Y^2 = -1",
                             "Carmichael primitive-divisor screen (D=2)",
                             "eliminated", w.str()});
  }

  return {{}, std::move(cert)};
}

CaseResult solve_prime_ge5(long n) {
  if (n < 5 || !ntheory::is_prime(BigInt(n))) {
    throw std::domain_error("solve_prime_ge5: n must be a prime >= 5");
  }
  Certificate cert;
  cert.equation = kEquation;
  cert.case_label = "prime n>=5";

  {  // primitive divisor exists: no defective Z[i] pair at this n
    if (primdiv::table_has_zi_pair(BigInt(n))) {
      throw internal_error("solve_prime_ge5: defective Z[i] pair at this n");
    }
    // The table covers nondegenerate pairs only. A degenerate alpha = u + iv
    // with gcd(u, v) = 1 would have |u| = |v| = 1 and y = 2, but y is odd:
    // 11^(2k) == 1 (mod 8), so the left side is x^2 + 1 (mod 8), never 0.
    static_assert(121 % 8 == 1);
    for (long x = 0; x < 8; ++x) {
      if ((x * x + 1) % 8 == 0) {
        throw internal_error("solve_prime_ge5: mod-8 parity check failed");
      }
    }
    std::ostringstream w;
    w << "x + i*11^k = alpha^n with alpha = u + iv in Z[i] and v | 11^k, so "
      << "u_n = (alpha^n - conj(alpha)^n)/(alpha - conj(alpha)) = 11^k / v "
      << "is +-11^j; alpha is nondegenerate (alpha/conj(alpha) = +-i needs "
      << "|u| = |v| = 1 and y = 2, but x^2 + 11^(2k) == x^2 + 1 (mod 8) is "
      << "never 0 (mod 8), so y is odd); no defective Lucas pair at n = " << n
      << " has roots in Z[i] (" << primdiv::defective_table().size()
      << " table rows; the table is complete for 5 <= n <= 30 except the "
      << "parametric n = 6, and no defective term exists for n > 30), so "
      << "u_n has a primitive prime divisor q";
    cert.branches.push_back(
        {"u_n is, up to sign, a power of 11",
         "defective Lucas pair table (Bilu-Hanrot-Voutier 2001)",
         "established", w.str()});
  }

  {  // that divisor must be 11, which the congruence forbids
    const auto screen = primdiv::congruence_screen(kP, BigInt(n));
    if (!screen.excluded) {
      throw internal_error("solve_prime_ge5: congruence screen not exclusive");
    }
    std::ostringstream w;
    w << "q | u_n = +-11^j forces q = 11 (and j >= 1, since u_n = +-1 has no "
      << "prime divisor at all); " << screen.detail;
    cert.branches.push_back({"the primitive divisor q of u_n must be 11",
                             "primitive-divisor congruence screen",
                             "eliminated", w.str()});
  }

  return {{}, std::move(cert)};
}

SolveAllResult solve_all(long lambda_max) {
  if (lambda_max < 0) {
    throw std::domain_error("solve_all: requires lambda_max >= 0");
  }

  SolveAllResult out;
  for (long l = 0; l <= lambda_max; ++l) {
    out.family.push_back(lift_primitive(l));
  }

  Certificate red;
  red.equation = kEquation;
  red.case_label = "reduction";

  red.branches.push_back(
      {"gcd(x, y) may exceed 1", "11-adic valuation split", "established",
       "a common prime of x and y divides 11^(2k), so it is 11; writing "
       "x = 11^a x1, y = 11^b y1 with gcd(x1 y1, 11) = 1, the valuations of "
       "x^2 + 11^(2k) = y^n give nb = min(2a, 2k): either nb = 2k <= 2a or "
       "nb = 2a < 2k"});

  {
    if (!oracle::lebesgue_spot_check(1000, 10)) {
      throw internal_error("solve_all: Lebesgue spot check failed");
    }
    red.branches.push_back(
        {"nb = 2k <= 2a", "Lebesgue's theorem (cited), desk-scale spot check",
         "eliminated",
         "dividing by 11^(2k) leaves X^2 + 1 = Y^n with X = 11^(a-k) x1 >= 1, "
         "which has no solution (Lebesgue 1850); exhaustive check for "
         "x <= 1000, 3 <= n <= 10 found none"});
  }

  red.branches.push_back(
      {"nb = 2a < 2k", "descent to a primitive solution", "established",
       "dividing by 11^(2a) leaves x1^2 + 11^(2(k-a)) = y1^n with "
       "gcd(x1, y1) = 1; every solution is an 11-power lift of a primitive "
       "one"});

  {  // every exponent n >= 3 routes to one of the three base cases
    for (long n = 3; n <= 1000; ++n) {
      long rem = n;
      while (rem % 2 == 0) rem /= 2;
      while (rem % 3 == 0) rem /= 3;
      const bool ok = rem > 1 || n % 4 == 0 || n % 3 == 0;
      if (!ok) throw internal_error("solve_all: dispatch gap at n");
    }
    red.branches.push_back(
        {"exponent dispatch for n >= 3", "prime-divisor routing",
         "established",
         "if a prime p >= 5 divides n, (x, y^(n/p), k, p) is handled by the "
         "prime case; else if 4 | n, (x, y^(n/4), k, 4) by the n=4 case; "
         "else 3 | n and (x, y^(n/3), k, 3) by the n=3 case (checked "
         "exhaustively for n <= 1000: one of the three always applies)"});
  }

  {  // the family and its round-trip back to the primitive solution
    const long check_to = std::min(lambda_max, 8L);
    for (long l = 0; l <= check_to; ++l) {
      const Reduction r = reduce_to_primitive(out.family[l]);
      if (r.primitive != SolutionTuple{2, 5, 1, 3} || r.a != 3 * l ||
          r.b != 2 * l) {
        throw internal_error("solve_all: family round-trip failed");
      }
    }
    std::ostringstream w;
    w << "the primitive solution (2, 5, 1, 3) lifts to x = 2*11^(3L), "
      << "y = 5*11^(2L), k = 1 + 3L, n = 3 for L >= 0; members L = 0.."
      << lambda_max << " verified" << (check_to >= 0 ? " and reduced back" : "");
    red.branches.push_back({"the complete solution family",
                            "11-power lifting of (2, 5, 1, 3)", "solution",
                            w.str()});
  }

  for (long l = 0; l <= lambda_max; ++l) {
    const SolutionTuple& t = out.family[l];
    red.solutions.push_back({t.x, t.y, t.k, t.n, l});
  }

  out.certs.push_back(std::move(red));
  out.certs.push_back(solve_n3().cert);
  out.certs.push_back(solve_n4().cert);
  for (long p : {5L, 7L, 11L, 13L}) {
    out.certs.push_back(solve_prime_ge5(p).cert);
  }
  return out;
}

}  // namespace undecim::solver
