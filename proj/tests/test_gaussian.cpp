#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "undecim/gaussian.hpp"
#include "undecim/ntheory.hpp"

using undecim::BigInt;
namespace g = undecim::gaussian;
using g::GaussianInteger;

namespace {

// Test-side oracle: largest-norm common divisor by full enumeration,
// canonicalized. Only usable for small norms.
GaussianInteger brute_gcd(const GaussianInteger& a, const GaussianInteger& b) {
  if (g::is_zero(a)) return g::canonical_associate(b);
  if (g::is_zero(b)) return g::canonical_associate(a);
  const BigInt na = g::norm(a), nb = g::norm(b);
  const BigInt cap = na < nb ? na : nb;
  const BigInt lim = undecim::ntheory::isqrt(cap);
  GaussianInteger best{0, 0};
  BigInt best_norm = 0;
  for (BigInt re = 0; re <= lim; ++re) {
    for (BigInt im = 0; im <= lim; ++im) {
      const GaussianInteger d{re, im};
      if (g::is_zero(d)) continue;
      if (g::divides(d, a) && g::divides(d, b) && g::norm(d) > best_norm) {
        best = d;
        best_norm = g::norm(d);
      }
    }
  }
  // first-quadrant enumeration reaches every divisor up to associates
  return g::canonical_associate(best);
}

}  // namespace

TEST_SUITE("gaussian") {

TEST_CASE("arithmetic fixtures") {
  CHECK(GaussianInteger{2, 1} * GaussianInteger{2, 1} ==
        GaussianInteger{3, 4});
  CHECK(g::norm({2, 11}) == 125);  // 2^2 + 11^2 = 5^3
  CHECK(g::conj({0, 1}) == GaussianInteger{0, -1});
  CHECK(GaussianInteger{3, 4} + GaussianInteger{-1, 2} ==
        GaussianInteger{2, 6});
  CHECK(GaussianInteger{3, 4} - GaussianInteger{-1, 2} ==
        GaussianInteger{4, 2});
  CHECK(-GaussianInteger{3, -4} == GaussianInteger{-3, 4});
}

TEST_CASE("units and canonical associates") {
  CHECK(g::is_unit({1, 0}));
  CHECK(g::is_unit({-1, 0}));
  CHECK(g::is_unit({0, 1}));
  CHECK(g::is_unit({0, -1}));
  CHECK(!g::is_unit({1, 1}));
  CHECK(!g::is_unit({0, 0}));

  CHECK(g::canonical_associate({0, -5}) == GaussianInteger{5, 0});
  CHECK(g::canonical_associate({-3, 7}) == GaussianInteger{7, 3});
  CHECK(g::canonical_associate({2, 1}) == GaussianInteger{2, 1});
  CHECK(g::canonical_associate({0, 0}) == GaussianInteger{0, 0});

  // all four associates normalize to the same representative
  const GaussianInteger z{-4, 9};
  const GaussianInteger turned{-z.im, z.re};  // i*z
  for (const auto& a : {z, -z, turned, -turned}) {
    CHECK(g::associates(a, z));
    CHECK(g::canonical_associate(a) == g::canonical_associate(z));
  }
  CHECK(!g::associates(z, {4, 9}));
}

TEST_CASE("divmod is Euclidean") {
  std::mt19937_64 rng(0xd1f);
  for (int i = 0; i < 300; ++i) {
    const GaussianInteger a{BigInt(rng() % 4000) - 2000,
                            BigInt(rng() % 4000) - 2000};
    GaussianInteger b{BigInt(rng() % 200) - 100, BigInt(rng() % 200) - 100};
    if (g::is_zero(b)) b = {1, 1};
    const auto [q, r] = g::divmod(a, b);
    REQUIRE(a == b * q + r);
    REQUIRE(g::norm(r) < g::norm(b));
  }
  CHECK_THROWS_AS((void)g::divmod({1, 1}, {0, 0}), std::domain_error);
}

TEST_CASE("divides and exact_div") {
  CHECK(g::divides({1, 1}, {2, 0}));  // 2 = (1+i)(1-i)
  CHECK(!g::divides({3, 0}, {2, 0}));
  CHECK(g::exact_div({5, 0}, {2, 1}) == GaussianInteger{2, -1});
}

TEST_CASE("gcd fixtures") {
  CHECK(g::gcd({2, 11}, {2, -11}) == GaussianInteger{1, 0});
  CHECK(g::gcd({3, 4}, {0, 0}) == GaussianInteger{3, 4});
  CHECK_THROWS_AS((void)g::gcd({0, 0}, {0, 0}), std::domain_error);

  // 2+2i = -i(1+i)^3 and 2 = -i(1+i)^2 share (1+i)^2, an associate of 2
  CHECK(g::gcd({2, 2}, {2, 0}) == GaussianInteger{2, 0});
  CHECK(brute_gcd({2, 2}, {2, 0}) == GaussianInteger{2, 0});
}

TEST_CASE("gcd against the brute-force oracle") {
  for (long are = -4; are <= 4; ++are) {
    for (long aim = -4; aim <= 4; ++aim) {
      for (long bre = -3; bre <= 3; ++bre) {
        for (long bim = -3; bim <= 3; ++bim) {
          const GaussianInteger a{are, aim}, b{bre, bim};
          if (g::is_zero(a) && g::is_zero(b)) continue;
          const GaussianInteger got = g::gcd(a, b);
          REQUIRE(got == brute_gcd(a, b));
          REQUIRE(g::divides(got, a));
          REQUIRE(g::divides(got, b));
          REQUIRE(got == g::canonical_associate(got));
        }
      }
    }
  }
}

TEST_CASE("pow fixtures") {
  CHECK(g::pow({2, 1}, 3) == GaussianInteger{2, 11});
  CHECK(g::pow({7, -3}, 0) == GaussianInteger{1, 0});
  CHECK(g::pow({1, 1}, 2) == GaussianInteger{0, 2});
}

TEST_CASE("norm is multiplicative") {
  std::mt19937_64 rng(0x60e5);
  for (int i = 0; i < 1000; ++i) {
    const GaussianInteger a{BigInt(rng() % 20001) - 10000,
                            BigInt(rng() % 20001) - 10000};
    const GaussianInteger b{BigInt(rng() % 20001) - 10000,
                            BigInt(rng() % 20001) - 10000};
    REQUIRE(g::norm(a * b) == g::norm(a) * g::norm(b));
  }
}

TEST_CASE("nth_root fixtures") {
  const auto cube = g::nth_root({2, 11}, 3);
  REQUIRE(cube.has_value());
  CHECK(*cube == GaussianInteger{2, 1});

  const auto quart = g::nth_root({16, 0}, 4);
  REQUIRE(quart.has_value());
  CHECK(*quart == GaussianInteger{2, 0});

  const auto sq = g::nth_root({3, 4}, 2);
  REQUIRE(sq.has_value());
  CHECK(*sq == GaussianInteger{2, 1});

  CHECK(!g::nth_root({3, 5}, 2).has_value());   // norm 34 is not a square
  CHECK(!g::nth_root({2, 11}, 2).has_value());  // norm 125 is not a square
  CHECK_THROWS_AS((void)g::nth_root({0, 0}, 3), std::domain_error);
  CHECK_THROWS_AS((void)g::nth_root({2, 1}, 1), std::domain_error);
}

TEST_CASE("nth_root inverts pow") {
  std::mt19937_64 rng(0x0707);
  int cases = 0;
  while (cases < 200) {
    const GaussianInteger z{BigInt(rng() % 2001) - 1000,
                            BigInt(rng() % 2001) - 1000};
    if (g::is_zero(z)) continue;
    ++cases;
    for (const unsigned long n : {2ul, 3ul, 5ul, 7ul}) {
      const GaussianInteger target = g::pow(z, n);
      const auto root = g::nth_root(target, n);
      REQUIRE(root.has_value());
      // the root is determined up to units only
      REQUIRE(g::canonical_associate(g::pow(*root, n)) ==
              g::canonical_associate(target));
      REQUIRE(g::norm(*root) == g::norm(z));
    }
  }
}

TEST_CASE("imag_identity_rhs") {
  CHECK(g::imag_identity_rhs(2, 1) == 11);
  CHECK(g::imag_identity_rhs(0, 5) == -125);
  CHECK(g::imag_identity_rhs(5, 2) == 142);
  // v(3u^2 - v^2) is the imaginary part of (u + iv)^3
  for (long u = -10; u <= 10; ++u) {
    for (long v = -10; v <= 10; ++v) {
      REQUIRE(g::imag_identity_rhs(u, v) == g::pow({u, v}, 3).im);
    }
  }
}

}  // TEST_SUITE
