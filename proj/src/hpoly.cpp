#include "dioph/hpoly.hpp"

#include <algorithm>

#include "dioph/interval.hpp"

namespace dioph {

namespace {

void require_odd_prime(unsigned long p, const char* who) {
  if (p < 3 || p % 2 == 0 || !is_prime(BigInt(p)))
    throw std::invalid_argument(std::string(who) + ": p must be an odd prime");
}

}  // namespace

int delta4(unsigned long p) {
  require_odd_prime(p, "delta4");
  return p % 4 == 1 ? 1 : -1;
}

int delta8(unsigned long p) {
  require_odd_prime(p, "delta8");
  unsigned long r = p % 8;
  return (r == 1 || r == 3) ? 1 : -1;
}

std::pair<BigInt, BigInt> eval_FG(const BigInt& u, const BigInt& v, unsigned long p) {
  require_odd_prime(p, "eval_FG");
  GaussianPair z = gaussian_pow(GaussianPair(u, v), p);
  // (1+i)(a+bi) = (a-b) + (a+b)i
  return {z.re - z.im, z.re + z.im};
}

BigInt hp_eval(const BigInt& u, const BigInt& v, unsigned long p) {
  BigInt d = u + delta4(p) * v;
  if (d == 0) throw std::domain_error("hp_eval: u + delta4*v = 0 is a pole of G/(u+delta4 v)");
  BigInt g = eval_FG(u, v, p).second;
  if (g % d != 0) throw std::logic_error("hp_eval: division is not exact");
  return g / d;
}

BigInt UniPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigInt UniPoly::eval_homogeneous(const BigInt& u, const BigInt& v) const {
  BigInt acc = 0, vpow = 1;
  for (size_t i = coeffs.size(); i-- > 0;) {
    acc = acc * u + coeffs[i] * vpow;
    vpow *= v;
  }
  return acc;
}

UniPoly taylor_shift(const UniPoly& poly, const BigInt& shift) {
  // Repeated synthetic division by (X - shift) accumulates the shifted
  // coefficients in place.
  UniPoly r = poly;
  size_t n = r.coeffs.size();
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t j = n - 1; j > i; --j) r.coeffs[j - 1] += shift * r.coeffs[j];
  return r;
}

std::vector<BigInt> hp_bivariate(unsigned long p) {
  require_odd_prime(p, "hp_bivariate");
  int d4 = delta4(p);
  // G_p(u,v) = sum_j binom(p,j) g_j u^(p-j) v^j with g_j the 4-cycle 1,1,-1,-1.
  static const int gcycle[4] = {1, 1, -1, -1};
  std::vector<BigInt> b(p + 1);
  for (unsigned long j = 0; j <= p; ++j) {
    BigInt binom;
    mpz_bin_uiui(binom.get_mpz_t(), p, j);
    b[j] = binom * gcycle[j % 4];
  }
  // Synthetic division by (u + delta4 v); quotient entry j multiplies
  // u^(p-1-j) v^j. Zero remainder is exactly the divisibility of Lemma-style
  // factorization and is asserted.
  std::vector<BigInt> q(p);
  q[0] = b[0];
  for (unsigned long j = 1; j < p; ++j) q[j] = b[j] - d4 * q[j - 1];
  if (b[p] - d4 * q[p - 1] != 0)
    throw std::logic_error("hp_bivariate: (u + delta4 v) does not divide G_p");
  return q;
}

UniPoly hp_univariate(unsigned long p) {
  std::vector<BigInt> q = hp_bivariate(p);
  std::reverse(q.begin(), q.end());
  return UniPoly{std::move(q)};
}

ShiftedHPoly hp_shifted(unsigned long p, const BigInt& qk, int sign) {
  require_odd_prime(p, "hp_shifted");
  if (qk < 1) throw std::invalid_argument("hp_shifted: qk must be >= 1");
  if (sign != 1 && sign != -1) throw std::invalid_argument("hp_shifted: sign must be +-1");
  int d4 = delta4(p);
  // H_p(s*qk - delta4 v, v) =
  //   [(1+i)(s*qk + (i-delta4)v)^p - (1-i)(s*qk + (-i-delta4)v)^p] / (2i*s*qk).
  // Expand both binomials; coefficient of v^t is
  //   binom(p,t) (s*qk)^(p-t) * [(1+i)(i-delta4)^t - (1-i)(-i-delta4)^t],
  // then divide by 2i*s*qk in Z[i]; the result must be rational-integral and
  // the v^p term must cancel.
  GaussianPair onePlus(1, 1), oneMinus(1, -1);
  GaussianPair a(-d4, 1), bq(-d4, -1);
  GaussianPair denom(0, BigInt(2) * sign * qk);
  BigInt sqk = sign * qk;
  std::vector<BigInt> coeffs(p);
  GaussianPair apow(1, 0), bpow(1, 0);
  for (unsigned long t = 0; t <= p; ++t) {
    GaussianPair w = onePlus * apow - oneMinus * bpow;
    BigInt binom;
    mpz_bin_uiui(binom.get_mpz_t(), p, t);
    BigInt scale = binom * pow_ui(sqk, p - t);
    GaussianPair num(w.re * scale, w.im * scale);
    if (t == p) {
      if (num.re != 0 || num.im != 0)
        throw std::logic_error("hp_shifted: v^p coefficient failed to cancel");
    } else {
      GaussianPair c = gaussian_exact_div(num, denom);
      if (c.im != 0) throw std::logic_error("hp_shifted: non-real coefficient");
      coeffs[t] = c.re;
    }
    apow = apow * a;
    bpow = bpow * bq;
  }
  return ShiftedHPoly{p, qk, sign, std::move(coeffs)};
}

bool shifted_structure_ok(const ShiftedHPoly& s) {
  if (s.coeffs.size() != s.p) return false;
  BigInt lead = BigInt(delta8(s.p)) * pow_ui(BigInt(2), (s.p - 1) / 2) * s.p;
  if (s.coeffs.back() != lead) return false;
  if (s.coeffs.front() != pow_ui(s.qk, s.p - 1)) return false;
  BigInt pqk = s.p * s.qk;
  for (size_t t = 1; t + 1 < s.coeffs.size(); ++t)
    if (s.coeffs[t] % pqk != 0) return false;
  return true;
}

unsigned long excluded_root_index(unsigned long p) {
  require_odd_prime(p, "excluded_root_index");
  return p % 4 == 1 ? (3 * p - 3) / 4 : (p - 3) / 4;
}

unsigned long floor_quarter_root_index(unsigned long p) {
  require_odd_prime(p, "floor_quarter_root_index");
  return (p / 4) * (p % 4);
}

double hp_root_product_check(unsigned long p, double tol) {
  require_odd_prime(p, "hp_root_product_check");
  // Working precision: at least 2p decimal digits plus slack.
  mpfr_prec_t prec = std::max<mpfr_prec_t>(256, mpfr_prec_t(2 * p * 3.33) + 128);
  unsigned long k0 = excluded_root_index(p);
  Interval pi = Interval::pi(prec);
  Interval fourp = Interval::from_long(4 * long(p), prec);

  std::vector<Interval> poly;
  poly.push_back(Interval::from_long(1, prec));
  for (unsigned long k = 0; k < p; ++k) {
    if (k == k0) continue;
    Interval angle = Interval::from_long(4 * long(k) + 3, prec) * pi / fourp;
    Interval root = interval_tan(angle);
    // poly <- poly * (X - root)
    std::vector<Interval> next(poly.size() + 1, Interval(prec));
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = next[i + 1] + poly[i];
      next[i] = next[i] - root * poly[i];
    }
    poly = std::move(next);
  }

  UniPoly h = hp_univariate(p);
  if (poly.size() != h.coeffs.size())
    throw std::logic_error("hp_root_product_check: degree mismatch");
  double max_dev = 0.0;
  for (size_t i = 0; i < poly.size(); ++i) {
    if (poly[i].width_upper() > tol)
      throw PrecisionError("hp_root_product_check: interval width exceeds tolerance");
    Interval dev = poly[i] - Interval::from_bigint(h.coeffs[i], prec);
    max_dev = std::max(max_dev, std::max(std::abs(dev.lower_double()),
                                         std::abs(dev.upper_double())));
  }
  return max_dev;
}

}  // namespace dioph
