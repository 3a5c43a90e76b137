#include "undecim/oracle.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <thread>
#include <utility>

namespace undecim::oracle {

namespace {

// One contiguous x-chunk, all k and n. With the perfect-power exponent
// maximal, s = y^n for some y exactly when n divides that exponent.
void search_chunk(const BigInt& lo, const BigInt& hi, long k_max, long n_max,
                  const BigInt& prime,
                  std::vector<solver::SolutionTuple>& out) {
  for (long k = 1; k <= k_max; ++k) {
    const BigInt pk =
        ntheory::pow_u(prime, 2 * static_cast<unsigned long>(k));
    BigInt s = lo * lo + pk;
    for (BigInt x = lo; x <= hi; ++x) {
      if (const auto pp = ntheory::perfect_power(s)) {
        const long e = static_cast<long>(pp->exponent);
        for (long n = 3; n <= n_max && n <= e; ++n) {
          if (e % n == 0) {
            out.push_back(
                {x, ntheory::pow_u(pp->base, static_cast<unsigned long>(e / n)),
                 k, n});
          }
        }
      }
      s += 2 * x + 1;
    }
  }
}

}  // namespace

std::vector<solver::SolutionTuple> brute_force_search(const BigInt& x_max,
                                                      long k_max, long n_max,
                                                      const BigInt& prime,
                                                      unsigned jobs) {
  if (x_max < 1) throw std::domain_error("brute_force_search: x_max >= 1");
  if (k_max < 1) throw std::domain_error("brute_force_search: k_max >= 1");
  if (n_max < 3) throw std::domain_error("brute_force_search: n_max >= 3");
  if (jobs < 1) throw std::domain_error("brute_force_search: jobs >= 1");
  if (!ntheory::is_prime(prime)) {
    throw std::domain_error("brute_force_search: prime must be prime");
  }

  std::vector<std::pair<BigInt, BigInt>> chunks;
  const BigInt width = (x_max + jobs - 1) / jobs;
  for (BigInt lo = 1; lo <= x_max; lo += width) {
    chunks.emplace_back(lo, std::min(BigInt(lo + width - 1), x_max));
  }

  std::vector<std::vector<solver::SolutionTuple>> results(chunks.size());
  if (chunks.size() == 1) {
    search_chunk(chunks[0].first, chunks[0].second, k_max, n_max, prime,
                 results[0]);
  } else {
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(chunks.size());
    threads.reserve(chunks.size());
    for (std::size_t i = 0; i < chunks.size(); ++i) {
      threads.emplace_back([&, i] {
        try {
          search_chunk(chunks[i].first, chunks[i].second, k_max, n_max, prime,
                       results[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::vector<solver::SolutionTuple> merged;
  for (auto& r : results) {
    merged.insert(merged.end(), std::make_move_iterator(r.begin()),
                  std::make_move_iterator(r.end()));
  }
  std::sort(merged.begin(), merged.end());
  return merged;
}

bool lebesgue_spot_check(const BigInt& x_max, long n_max) {
  if (x_max < 0) throw std::domain_error("lebesgue_spot_check: x_max >= 0");
  if (n_max < 3) throw std::domain_error("lebesgue_spot_check: n_max >= 3");
  BigInt s = 2;  // 1^2 + 1
  for (BigInt x = 1; x <= x_max; ++x) {
    if (const auto pp = ntheory::perfect_power(s)) {
      const long e = static_cast<long>(pp->exponent);
      for (long n = 3; n <= n_max && n <= e; ++n) {
        if (e % n == 0) return false;
      }
    }
    s += 2 * x + 1;
  }
  return true;
}

}  // namespace undecim::oracle
