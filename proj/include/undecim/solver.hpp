#pragma once

#include <stdexcept>
#include <vector>

#include "undecim/certificate.hpp"
#include "undecim/ntheory.hpp"

namespace undecim::solver {

// Candidate or confirmed tuple for x^2 + 11^(2k) = y^n.
struct SolutionTuple {
  BigInt x;
  BigInt y;
  long k = 0;
  long n = 0;
  bool operator==(const SolutionTuple&) const = default;
};

bool operator<(const SolutionTuple& a, const SolutionTuple& b);

// Exact check x^2 + 11^(2k) = y^n. Fields outside their declared ranges
// (x, y >= 1, k >= 1, n >= 3) raise std::domain_error.
bool verify_solution(const SolutionTuple& t);

// Raised when a tuple's 11-adic shape lands in the case that divides down
// to X^2 + 1 = Y^n, which has no solutions (Lebesgue 1850).
class lebesgue_case_error : public std::domain_error {
 public:
  explicit lebesgue_case_error(const std::string& what)
      : std::domain_error(what) {}
};

struct Reduction {
  SolutionTuple primitive;
  long a = 0;  // 11-adic valuation of x
  long b = 0;  // 11-adic valuation of y
};

// Strips the maximal 11-power content: x = 11^a x1, y = 11^b y1 with
// gcd(x1 y1, 11) = 1 and k1 = k - a. Valuations with a >= k reduce to the
// Lebesgue equation and raise lebesgue_case_error; tuples whose stripped
// form is not a solution raise std::domain_error.
Reduction reduce_to_primitive(const SolutionTuple& t);

// The theorem's solution family member (2*11^(3L), 5*11^(2L), 1+3L, 3).
// Requires lambda >= 0; the result always verifies.
SolutionTuple lift_primitive(long lambda);

struct CaseResult {
  std::vector<SolutionTuple> solutions;
  Certificate cert;
};

// Cube case: resolves x + i*11^k = (u+iv)^3 over the four shapes of v,
// closing the surviving branch with the Pell descent X^2 - 33Y^2 = 3 and
// Lucas divisor propagation. Exactly one primitive solution.
CaseResult solve_n3();

// Fourth-power case: coprime factorization forces (11^k)^2 - 2y^2 = -1,
// eliminated by the Carmichael screen on D=2. No solutions.
CaseResult solve_n4();

// Prime exponents n >= 5: the defective-pairs table guarantees a primitive
// divisor of u_n, which the congruence screen then rules out. No solutions.
// n < 5 or composite raises std::domain_error.
CaseResult solve_prime_ge5(long n);

struct SolveAllResult {
  std::vector<SolutionTuple> family;   // lambda = 0 .. lambda_max
  std::vector<Certificate> certs;      // reduction, n=3, n=4, primes 5..13
};

// The complete decision: reduction certificate (valuation split, Lebesgue
// case, descent, exponent dispatch, family), then every base case.
// Requires lambda_max >= 0.
SolveAllResult solve_all(long lambda_max);

}  // namespace undecim::solver
