#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <random>
#include <set>

#include "dioph/numth.hpp"

using namespace dioph;

namespace {

// Repeated-multiplication oracle, independent of mpz_powm.
BigInt mod_pow_oracle(const BigInt& base, unsigned long exp, const BigInt& mod) {
  BigInt r = 1 % mod;
  BigInt b = ((base % mod) + mod) % mod;
  for (unsigned long i = 0; i < exp; ++i) r = (r * b) % mod;
  return r;
}

}  // namespace

TEST_CASE("mod_pow examples") {
  CHECK(mod_pow(3, 5, 242) == 1);
  CHECK(mod_pow(3, 5, 242) == mod_pow_oracle(3, 5, 242));
  CHECK(mod_pow(BigInt(123456), 0, BigInt(97)) == 1);  // empty product
  CHECK(mod_pow(3, 4, 17) == 13);                      // 81 mod 17
  CHECK(mod_pow(-2, 3, 7) == 6);                       // -8 = 6 (mod 7)
  CHECK_THROWS_AS(mod_pow(2, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(mod_pow(2, -1, 5), std::invalid_argument);
}

TEST_CASE("multiplicative_order examples") {
  CHECK(multiplicative_order(3, 242) == 5);
  CHECK(multiplicative_order(3, 136) == 16);
  CHECK(multiplicative_order(1, 97) == 1);
  CHECK_THROWS_AS(multiplicative_order(6, 242), std::domain_error);
  // lcm of the orders mod 8 and mod 17
  CHECK(multiplicative_order(3, 8) == 2);
  CHECK(multiplicative_order(3, 17) == 16);
}

TEST_CASE("multiplicative_order large modulus path (Carmichael factoring)") {
  // 2^20 * some structure pushes w over the iteration threshold.
  BigInt w = BigInt(1048583) * 3;  // prime * 3 > 10^6
  BigInt a = 5;
  BigInt d = multiplicative_order(a, w);
  CHECK(mod_pow(a, d, w) == 1);
  for (BigInt f : {BigInt(2), BigInt(3), BigInt(5), BigInt(7), BigInt(11), BigInt(13)})
    if (d % f == 0) CHECK(mod_pow(a, d / f, w) != 1);
}

TEST_CASE("order property exhaustive for small moduli") {
  // mod_pow(a, ord(a,w), w) = 1 and no smaller positive exponent achieves 1.
  for (std::uint64_t w = 2; w <= 1000; ++w) {
    for (std::uint64_t a = 1; a < w; ++a) {
      if (std::gcd(a, w) != 1) continue;
      std::uint64_t x = a % w, d = 1;
      while (x != 1) {
        x = (x * a) % w;
        ++d;
      }
      BigInt got = multiplicative_order(BigInt(a), BigInt(w));
      REQUIRE(got == d);
    }
  }
}

TEST_CASE("crt_solve examples") {
  ResidueSystem sys;
  sys.add(4, 5);
  sys.add(17, 27);
  sys.add(10, 34);
  auto sol = crt_solve(sys);
  REQUIRE(sol.has_value());
  CHECK(sol->residue == 44);
  CHECK(sol->modulus == 4590);

  ResidueSystem zeros;
  zeros.add(0, 16);
  zeros.add(0, 27);
  auto z = crt_solve(zeros);
  REQUIRE(z.has_value());
  CHECK(z->residue == 0);
  CHECK(z->modulus == 432);

  ResidueSystem bad;
  bad.add(1, 4);
  bad.add(3, 8);
  CHECK_FALSE(crt_solve(bad).has_value());
}

TEST_CASE("crt_solve properties against dense scan") {
  std::mt19937_64 rng(20240811);
  for (int iter = 0; iter < 300; ++iter) {
    ResidueSystem sys;
    BigInt l = 1;
    int n = 2 + int(rng() % 3);
    for (int i = 0; i < n; ++i) {
      unsigned long mod = 2 + rng() % 30;
      sys.add(BigInt(rng() % mod), BigInt(mod));
      l = lcm(l, BigInt(mod));
    }
    // dense oracle over [0, lcm)
    std::optional<BigInt> expect;
    for (BigInt x = 0; x < l; ++x) {
      bool ok = true;
      for (const auto& [r, m] : sys.congruences) ok = ok && x % m == r;
      if (ok) {
        expect = x;
        break;
      }
    }
    auto got = crt_solve(sys);
    REQUIRE(got.has_value() == expect.has_value());
    if (got) {
      CHECK(got->residue == *expect);
      CHECK(got->modulus == l);
      CHECK(got->residue < got->modulus);
      for (const auto& [r, m] : sys.congruences) CHECK(got->residue % m == r);
      // re-solving with the combined pair is a fixed point
      ResidueSystem again;
      again.add(got->residue, got->modulus);
      auto fixed = crt_solve(again);
      REQUIRE(fixed.has_value());
      CHECK(fixed->residue == got->residue);
      CHECK(fixed->modulus == got->modulus);
    }
  }
}

TEST_CASE("gaussian_pow examples and norm multiplicativity") {
  CHECK(gaussian_pow({2, 1}, 3) == GaussianPair(2, 11));
  CHECK(gaussian_pow({5, -7}, 0) == GaussianPair(1, 0));
  CHECK(gaussian_pow({0, 1}, 2) == GaussianPair(-1, 0));

  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    GaussianPair z(BigInt(long(rng() % 2001) - 1000), BigInt(long(rng() % 2001) - 1000));
    unsigned long n = rng() % 51;
    GaussianPair zn = gaussian_pow(z, n);
    BigInt want;
    mpz_pow_ui(want.get_mpz_t(), z.norm().get_mpz_t(), n);
    CHECK(zn.norm() == want);
  }
}

TEST_CASE("gaussian_exact_div") {
  GaussianPair a(2, 11), b(2, 1);
  GaussianPair q = gaussian_exact_div(a * b, b);
  CHECK(q == a);
  CHECK_THROWS_AS(gaussian_exact_div(GaussianPair(1, 0), GaussianPair(2, 0)), std::logic_error);
  CHECK_THROWS_AS(gaussian_exact_div(a, GaussianPair(0, 0)), std::domain_error);
}

TEST_CASE("is_perfect_square examples") {
  CHECK_FALSE(is_perfect_square(BigInt(156250)).has_value());
  CHECK(is_perfect_square(BigInt(0)) == BigInt(0));
  CHECK(is_perfect_square(BigInt(62001)) == BigInt(249));
  CHECK_FALSE(is_perfect_square(BigInt(-4)).has_value());
}

TEST_CASE("is_perfect_square agrees with exhaustive walk up to 10^6") {
  unsigned long next_root = 0, next_square = 0;
  for (unsigned long n = 0; n <= 1000000; ++n) {
    bool square = n == next_square;
    auto got = is_perfect_square(BigInt(n));
    REQUIRE(got.has_value() == square);
    if (square) {
      REQUIRE(*got == next_root);
      ++next_root;
      next_square = next_root * next_root;
    }
  }
}

TEST_CASE("is_prime examples") {
  CHECK(is_prime(79));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(42641));
  CHECK_FALSE(is_prime(0));
  CHECK(is_prime(2));
  // above-2^64 path
  CHECK(is_prime(BigInt("2299357537036323025594528471766399")));
  CHECK_FALSE(is_prime(BigInt("2299357537036323025594528471766399") + 2));
}

TEST_CASE("is_prime agrees with sieve below 20000") {
  auto primes = odd_primes_up_to(19999);
  std::set<unsigned long> prime_set(primes.begin(), primes.end());
  prime_set.insert(2);
  for (unsigned long n = 0; n < 20000; ++n)
    REQUIRE(is_prime(BigInt(n)) == (prime_set.count(n) > 0));
}

TEST_CASE("power_exponent") {
  CHECK(power_exponent(BigInt(243), BigInt(3)) == 5);
  CHECK(power_exponent(BigInt(1), BigInt(3)) == 0);
  CHECK_FALSE(power_exponent(BigInt(12), BigInt(3)).has_value());
}
