#include "dioph/numth.hpp"

#include <algorithm>
#include <map>

namespace dioph {

BigInt mod_pow(const BigInt& base, const BigInt& exp, const BigInt& modulus) {
  if (modulus < 2) throw std::invalid_argument("mod_pow: modulus must be >= 2");
  if (exp < 0) throw std::invalid_argument("mod_pow: exponent must be non-negative");
  BigInt r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

namespace {

// Trial division + Pollard rho. Only used on moduli and their Carmichael
// values inside multiplicative_order; not part of the public surface.
void factor_into(BigInt n, std::map<BigInt, unsigned long>& out) {
  if (n < 0) n = -n;
  if (n <= 1) return;
  for (unsigned long d : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      out[BigInt(d)]++;
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
    }
  }
  BigInt d = 17;
  while (d * d <= n && d < 100000) {
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      out[d]++;
      mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    }
    d += 2;
  }
  if (n == 1) return;
  if (is_prime(n)) {
    out[n]++;
    return;
  }
  // Pollard rho with incrementing polynomial offset.
  for (unsigned long c = 1;; ++c) {
    BigInt x = 2, y = 2, g = 1;
    while (g == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      g = gcd(abs(x - y), n);
    }
    if (g != n) {
      factor_into(g, out);
      factor_into(n / g, out);
      return;
    }
  }
}

BigInt carmichael(const BigInt& w) {
  std::map<BigInt, unsigned long> f;
  factor_into(w, f);
  BigInt result = 1;
  for (const auto& [p, e] : f) {
    BigInt lam;
    if (p == 2) {
      if (e == 1) lam = 1;
      else if (e == 2) lam = 2;
      else lam = pow_ui(BigInt(2), e - 2);
    } else {
      lam = pow_ui(p, e - 1) * (p - 1);
    }
    result = lcm(result, lam);
  }
  return result;
}

}  // namespace

BigInt multiplicative_order(const BigInt& a, const BigInt& w) {
  if (w < 2) throw std::invalid_argument("multiplicative_order: modulus must be >= 2");
  if (gcd(a, w) != 1)
    throw std::domain_error("multiplicative_order: element not invertible modulo w");
  BigInt a0 = ((a % w) + w) % w;
  if (w <= 1000000) {
    BigInt x = a0, d = 1;
    while (x != 1) {
      x = (x * a0) % w;
      ++d;
    }
    return d;
  }
  // Start from lambda(w) and strip prime factors while the power stays 1.
  BigInt d = carmichael(w);
  std::map<BigInt, unsigned long> f;
  factor_into(d, f);
  for (const auto& [p, e] : f) {
    for (unsigned long i = 0; i < e; ++i) {
      BigInt cand = d / p;
      if (mod_pow(a0, cand, w) == 1) d = cand;
      else break;
    }
  }
  return d;
}

void ResidueSystem::add(BigInt residue, BigInt modulus) {
  if (modulus < 2) throw std::invalid_argument("ResidueSystem: modulus must be >= 2");
  residue = ((residue % modulus) + modulus) % modulus;
  congruences.emplace_back(std::move(residue), std::move(modulus));
}

std::optional<CrtSolution> crt_solve(const ResidueSystem& system) {
  BigInt r = 0, m = 1;
  for (const auto& [r2, m2] : system.congruences) {
    // Merge x = r (mod m) with x = r2 (mod m2).
    BigInt g = gcd(m, m2);
    BigInt diff = r2 - r;
    if (diff % g != 0) return std::nullopt;
    BigInt m2g = m2 / g;
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), BigInt(m / g % m2g).get_mpz_t(), m2g.get_mpz_t()) == 0) {
      if (m2g == 1) inv = 0;
      else return std::nullopt;  // unreachable: m/g is invertible mod m2/g
    }
    BigInt t = (diff / g * inv) % m2g;
    BigInt combined = m / g * m2;
    r = (r + m * t) % combined;
    if (r < 0) r += combined;
    m = combined;
  }
  return CrtSolution{r, m};
}

GaussianPair gaussian_pow(GaussianPair z, unsigned long n) {
  GaussianPair result(1, 0);
  while (n > 0) {
    if (n & 1) result = result * z;
    z = z * z;
    n >>= 1;
  }
  return result;
}

GaussianPair gaussian_exact_div(const GaussianPair& a, const GaussianPair& b) {
  BigInt nb = b.norm();
  if (nb == 0) throw std::domain_error("gaussian_exact_div: division by zero");
  GaussianPair num = a * b.conj();
  if (num.re % nb != 0 || num.im % nb != 0)
    throw std::logic_error("gaussian_exact_div: non-exact division");
  return {num.re / nb, num.im / nb};
}

std::optional<BigInt> is_perfect_square(const BigInt& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

namespace {

bool miller_rabin(const BigInt& n, const BigInt& a) {
  // n odd, n > 3, 1 < a < n - 1 assumed.
  BigInt d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  BigInt x = mod_pow(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  static const unsigned long small[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                        23, 29, 31, 37, 41, 43, 47};
  for (unsigned long p : small) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  BigInt two64 = pow_ui(BigInt(2), 64);
  if (n < two64) {
    // The first 12 primes form a deterministic witness set below 3.18e24.
    for (unsigned long a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
      if (!miller_rabin(n, BigInt(a))) return false;
    return true;
  }
  // Baillie-PSW plus 30 extra Miller-Rabin rounds via GMP.
  return mpz_probab_prime_p(n.get_mpz_t(), 54) != 0;
}

std::vector<unsigned long> odd_primes_up_to(unsigned long limit) {
  std::vector<unsigned long> primes;
  if (limit < 3) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (unsigned long i = 3; i * i <= limit; i += 2)
    if (!composite[i])
      for (unsigned long j = i * i; j <= limit; j += 2 * i) composite[j] = true;
  for (unsigned long i = 3; i <= limit; i += 2)
    if (!composite[i]) primes.push_back(i);
  return primes;
}

std::optional<unsigned long> power_exponent(const BigInt& n, const BigInt& q) {
  if (q < 2 || n < 1) return std::nullopt;
  BigInt m = n;
  unsigned long e = 0;
  while (m > 1) {
    if (m % q != 0) return std::nullopt;
    m /= q;
    ++e;
  }
  return e;
}

}  // namespace dioph
