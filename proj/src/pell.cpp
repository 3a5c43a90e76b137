#include "undecim/pell.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "undecim/errors.hpp"

namespace undecim::pell {

std::ostream& operator<<(std::ostream& os, const QuadPair& p) {
  return os << "(" << p.x << ", " << p.y << ")";
}

BigInt pair_norm(const QuadPair& p, const BigInt& d) {
  return p.x * p.x - d * p.y * p.y;
}

QuadPair mul(const QuadPair& a, const QuadPair& b, const BigInt& d) {
  return {a.x * b.x + d * a.y * b.y, a.x * b.y + a.y * b.x};
}

QuadPair conjugate(const QuadPair& p) { return {p.x, -p.y}; }

namespace {

void require_pell_d(const BigInt& d) {
  if (d < 2) throw std::domain_error("pell: requires d >= 2");
  const BigInt r = ntheory::isqrt(d);
  if (r * r == d) throw std::domain_error("pell: d must not be a square");
}

}  // namespace

PellProblem::PellProblem(BigInt d_, BigInt n_)
    : d(std::move(d_)), n(std::move(n_)) {
  require_pell_d(d);
  if (n == 0) throw std::domain_error("pell: requires n != 0");
}

CfSqrt cf_sqrt(const BigInt& d) {
  require_pell_d(d);
  const BigInt a0 = ntheory::isqrt(d);

  // PQa recurrences: the i-th complete quotient is (sqrt(d) + m) / q, and
  // q returns to 1 exactly at the end of each period.
  CfSqrt out;
  out.a0 = a0;
  BigInt m = 0, q = 1;
  BigInt a = a0;
  do {
    m = a * q - m;
    q = (d - m * m) / q;
    a = (a0 + m) / q;
    out.period.push_back(a);
  } while (q != 1);
  return out;
}

FundamentalUnit fundamentalunit_impl(const CfSqrt& cf) {
  // Convergent just before the period closes: p^2 - d*q^2 = (-1)^len.
  BigInt p_prev = 1, p_curr = cf.a0;
  BigInt q_prev = 0, q_curr = 1;
  for (std::size_t i = 0; i + 1 < cf.period.size(); ++i) {
    const BigInt& a = cf.period[i];
    BigInt p_next = a * p_curr + p_prev;
    BigInt q_next = a * q_curr + q_prev;
    p_prev = std::move(p_curr);
    p_curr = std::move(p_next);
    q_prev = std::move(q_curr);
    q_curr = std::move(q_next);
  }
  const int norm = (cf.period.size() % 2 == 1) ? -1 : 1;
  return {{p_curr, q_curr}, norm};
}

FundamentalUnit fundamental_unit(const BigInt& d) {
  const CfSqrt cf = cf_sqrt(d);
  FundamentalUnit fu = fundamentalunit_impl(cf);
  if (pair_norm(fu.u, d) != fu.norm) {
    throw internal_error("fundamental_unit: convergent norm mismatch");
  }
  return fu;
}

std::vector<QuadPair> orbit(const QuadPair& base, const QuadPair& unit,
                            const BigInt& d, std::size_t count) {
  std::vector<QuadPair> out;
  out.reserve(count);
  QuadPair cur = base;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(cur);
    cur = mul(cur, unit, d);
  }
  return out;
}

namespace {

// (x, y) and (-x, -y) are the same solution; fix x > 0 (x = 0 cannot occur
// for n != 0 square-free... for any n, x = 0 forces -d*y^2 = n, handled by
// the caller's search directly).
QuadPair normalize_sign(QuadPair p) {
  if (p.x < 0 || (p.x == 0 && p.y < 0)) return {-p.x, -p.y};
  return p;
}

// Order used to pick the representative kept per class: smallest |y|,
// then y >= 0 first, then smallest x.
std::tuple<BigInt, int, BigInt> reduction_key(const QuadPair& p) {
  return {abs(p.y), p.y < 0 ? 1 : 0, p.x};
}

}  // namespace

std::vector<QuadPair> base_solutions(const PellProblem& problem) {
  const BigInt& d = problem.d;
  const BigInt& n = problem.n;

  const FundamentalUnit fu = fundamental_unit(d);
  // Norm +1 unit: the class structure is defined by multiplication with
  // units of norm +1, so square a norm -1 fundamental unit.
  const QuadPair uplus =
      fu.norm == 1 ? fu.u : mul(fu.u, fu.u, d);

  // Every class has a representative with |y| <= sqrt(x1 * |n|); this
  // dominates the classical fundamental-solution bounds for both signs
  // of n.
  const BigInt bound = ntheory::isqrt(uplus.x * abs(n)) + 1;

  std::vector<QuadPair> found;
  for (BigInt y = 0; y <= bound; ++y) {
    const BigInt xx = n + d * y * y;
    if (xx < 0) continue;
    const BigInt x = ntheory::isqrt(xx);
    if (x * x != xx) continue;
    if (x == 0) {
      found.push_back(QuadPair{0, y});
      continue;
    }
    found.push_back(QuadPair{x, y});
    if (y > 0) found.push_back(QuadPair{x, -y});
  }

  // Keep one representative per unit orbit: walk candidates smallest first
  // and absorb each kept one's whole orbit within the search window, so
  // later candidates in the same class are recognized even when several
  // unit steps away.
  const QuadPair uinv = conjugate(uplus);  // inverse, since norm(uplus) = 1
  std::sort(found.begin(), found.end(),
            [](const QuadPair& a, const QuadPair& b) {
              return reduction_key(a) < reduction_key(b);
            });
  std::vector<QuadPair> kept;
  std::set<std::pair<BigInt, BigInt>> covered;
  for (const QuadPair& cand : found) {
    if (covered.count({cand.x, cand.y}) > 0) continue;
    kept.push_back(cand);
    for (const QuadPair& dir : {uplus, uinv}) {
      QuadPair c = cand;
      for (int steps = 0;; ++steps) {
        if (steps > 10000) {
          throw internal_error("base_solutions: orbit closure diverged");
        }
        c = normalize_sign(mul(c, dir, d));
        if (abs(c.y) > bound) break;  // |y| grows past the window for good
        covered.insert({c.x, c.y});
      }
    }
  }
  return kept;
}

std::vector<BigInt> x_sequence(const BigInt& d, SignPolicy policy,
                               std::size_t count) {
  const FundamentalUnit fu = fundamental_unit(d);
  const QuadPair step = (policy == SignPolicy::kPlusOnly && fu.norm == -1)
                            ? mul(fu.u, fu.u, d)
                            : fu.u;
  std::vector<BigInt> out;
  out.reserve(count);
  QuadPair cur{1, 0};
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(cur.x);
    cur = mul(cur, step, d);
  }
  return out;
}

}  // namespace undecim::pell
