#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "undecim/ntheory.hpp"

namespace undecim::pell {

// Element x + y*sqrt(d) of Z[sqrt(d)]; d travels alongside, not inside.
struct QuadPair {
  BigInt x;
  BigInt y;
  bool operator==(const QuadPair&) const = default;
};

std::ostream& operator<<(std::ostream& os, const QuadPair& p);

// x^2 - d*y^2.
BigInt pair_norm(const QuadPair& p, const BigInt& d);

// Ring product (a.x + a.y*sqrt(d)) * (b.x + b.y*sqrt(d)).
QuadPair mul(const QuadPair& a, const QuadPair& b, const BigInt& d);

// x - y*sqrt(d); for a unit of norm +1 this is its inverse.
QuadPair conjugate(const QuadPair& p);

// The equation x^2 - d*y^2 = n. Requires d >= 2 non-square and n != 0.
struct PellProblem {
  BigInt d;
  BigInt n;
  PellProblem(BigInt d_, BigInt n_);
};

// Continued fraction sqrt(d) = [a0; period...], period minimal. Requires
// d >= 2 non-square.
struct CfSqrt {
  BigInt a0;
  std::vector<BigInt> period;
  bool operator==(const CfSqrt&) const = default;
};

CfSqrt cf_sqrt(const BigInt& d);

// Fundamental solution of x^2 - d*y^2 = +-1 (least x + y*sqrt(d) > 1),
// from the convergent just before the end of the first period; the norm
// is -1 exactly when the period length is odd.
struct FundamentalUnit {
  QuadPair u;
  int norm;  // +1 or -1
  bool operator==(const FundamentalUnit&) const = default;
};

FundamentalUnit fundamental_unit(const BigInt& d);

// base, base*unit, base*unit^2, ... (count elements).
std::vector<QuadPair> orbit(const QuadPair& base, const QuadPair& unit,
                            const BigInt& d, std::size_t count);

// Class representatives of x^2 - d*y^2 = n found by searching
// 0 <= |y| <= ceil(sqrt(x1 * |n|)) with x > 0 (x1 the fundamental-unit
// x-coordinate), then dropping any solution reachable from a smaller one
// by one unit multiplication in either direction. Every solution is
// base * unit^r for exactly one returned base and one r in Z. Empty when
// the equation has no solution.
std::vector<QuadPair> base_solutions(const PellProblem& problem);

// Whether odd indices get norm -1 entries (units of both signs
// interleaved) or only the +1 subsequence survives.
enum class SignPolicy { kInterleaved, kPlusOnly };

// x-coordinates of unit powers: X_0 = 1, X_m from unit^m. Under kPlusOnly
// and a norm -1 fundamental unit, only even powers (norm +1 solutions)
// are kept. Satisfies X_{m+1} = 2*X_1*X_m - eps*X_{m-1} with eps the
// fundamental norm.
std::vector<BigInt> x_sequence(const BigInt& d, SignPolicy policy,
                               std::size_t count);

}  // namespace undecim::pell
