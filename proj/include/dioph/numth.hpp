#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dioph/errors.hpp"

namespace dioph {

// Exact arbitrary-precision signed integer. All arithmetic in this project is
// exact; doubles appear only in the bound calculus (see interval.hpp) where
// every rounding is directed.
using BigInt = mpz_class;

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline BigInt pow_ui(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

// base^exp mod modulus, result in [0, modulus). exp >= 0, modulus >= 2.
BigInt mod_pow(const BigInt& base, const BigInt& exp, const BigInt& modulus);

// Smallest d >= 1 with a^d = 1 (mod w). Requires gcd(a, w) = 1, w >= 2.
// Iterates for small w; for w > 10^6 factors the Carmichael function of w
// and strips prime factors from it instead.
BigInt multiplicative_order(const BigInt& a, const BigInt& w);

// A finite system of congruences x = residue (mod modulus). Moduli need not
// be pairwise coprime; each residue is normalized into [0, modulus).
struct ResidueSystem {
  std::vector<std::pair<BigInt, BigInt>> congruences;  // (residue, modulus)

  void add(BigInt residue, BigInt modulus);
};

struct CrtSolution {
  BigInt residue;  // smallest non-negative solution
  BigInt modulus;  // lcm of input moduli
};

// Smallest non-negative solution of the system together with the combined
// modulus, or nullopt when the congruences are inconsistent. Non-coprime
// moduli are merged pairwise with a gcd consistency check.
std::optional<CrtSolution> crt_solve(const ResidueSystem& system);

// Exact Gaussian integer re + im*i.
struct GaussianPair {
  BigInt re;
  BigInt im;

  GaussianPair() = default;
  GaussianPair(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}

  GaussianPair operator*(const GaussianPair& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianPair operator+(const GaussianPair& o) const { return {re + o.re, im + o.im}; }
  GaussianPair operator-(const GaussianPair& o) const { return {re - o.re, im - o.im}; }
  bool operator==(const GaussianPair& o) const = default;

  GaussianPair conj() const { return {re, -im}; }
  BigInt norm() const { return re * re + im * im; }
};

// z^n by square-and-multiply, n >= 0.
GaussianPair gaussian_pow(GaussianPair z, unsigned long n);

// Exact quotient a/b in Z[i]; throws std::logic_error when b does not
// divide a (callers use this as a certified-division primitive).
GaussianPair gaussian_exact_div(const GaussianPair& a, const GaussianPair& b);

// r >= 0 with r^2 = n when n is a non-negative perfect square.
std::optional<BigInt> is_perfect_square(const BigInt& n);

// Deterministic Miller-Rabin below 2^64 (fixed 12-prime base set); above,
// a Baillie-PSW test plus 30 further Miller-Rabin rounds (error < 4^-30).
bool is_prime(const BigInt& n);

// Odd primes in increasing order, 3, 5, 7, ..., up to and including limit.
std::vector<unsigned long> odd_primes_up_to(unsigned long limit);

inline bool is_odd_prime(const BigInt& n) { return n > 2 && is_prime(n); }

// If n = q^e for the given q with e >= 0, returns e.
std::optional<unsigned long> power_exponent(const BigInt& n, const BigInt& q);

}  // namespace dioph
