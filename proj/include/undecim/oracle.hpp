#pragma once

#include <vector>

#include "undecim/ntheory.hpp"
#include "undecim/solver.hpp"

namespace undecim::oracle {

// Exhaustive search of x in [1, x_max], k in [1, k_max], n in [3, n_max]
// for x^2 + prime^(2k) = y^n, independent of the solver machinery: the
// left side is built incrementally and tested for perfect-power shape.
// The result is sorted by (x, k, n, y) and identical for every job count.
// Requires x_max >= 1, k_max >= 1, n_max >= 3, prime prime, jobs >= 1.
std::vector<solver::SolutionTuple> brute_force_search(const BigInt& x_max,
                                                      long k_max, long n_max,
                                                      const BigInt& prime = 11,
                                                      unsigned jobs = 1);

// True when x^2 + 1 = y^n has no solution with x in [1, x_max] and
// n in [3, n_max]; x_max = 0 checks the empty range. Requires n_max >= 3.
bool lebesgue_spot_check(const BigInt& x_max, long n_max);

}  // namespace undecim::oracle
