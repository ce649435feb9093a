#pragma once

#include <utility>
#include <vector>

#include "dioph/numth.hpp"

namespace dioph {

// Sign constants steering the descent. delta4(p) = +1 iff p = 1 (mod 4);
// delta8(p) = +1 iff p = 1 or 3 (mod 8). Both require p an odd prime.
int delta4(unsigned long p);
int delta8(unsigned long p);

// F_p(u,v) = Re((1+i)(u+iv)^p), G_p(u,v) = Im((1+i)(u+iv)^p), exact.
// These are the two homogeneous descent forms: a coprime solution of
// x^2 + q^(2m) = 2 y^p factors through x = F_p(u,v), q^m = G_p(u,v) with
// y = u^2 + v^2.
std::pair<BigInt, BigInt> eval_FG(const BigInt& u, const BigInt& v, unsigned long p);

// H_p(u,v) = G_p(u,v) / (u + delta4 v). The division is certified exact
// ((u + delta4 v) always divides G_p); a zero divisor raises
// std::domain_error, a non-exact division std::logic_error.
BigInt hp_eval(const BigInt& u, const BigInt& v, unsigned long p);

// Dense univariate polynomial, coeffs[i] = coefficient of X^i.
struct UniPoly {
  std::vector<BigInt> coeffs;

  unsigned long degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  BigInt eval(const BigInt& x) const;
  // Value of the homogenization: sum coeffs[i] u^i v^(deg-i).
  BigInt eval_homogeneous(const BigInt& u, const BigInt& v) const;
};

// Taylor shift: returns q with q(X) = poly(X + shift), exact.
UniPoly taylor_shift(const UniPoly& poly, const BigInt& shift);

// H_p(X, 1), degree p-1, monic, constant term 1. Obtained by synthetic
// division of G_p(X, 1) by (X + delta4).
UniPoly hp_univariate(unsigned long p);

// Homogeneous coefficients of H_p: entry j is the coefficient of
// u^(p-1-j) v^j. Same numbers as hp_univariate in reverse order.
std::vector<BigInt> hp_bivariate(unsigned long p);

// Coefficients in v of H_p(sign*qk - delta4*v, v).
//
// Structure (holds for both signs): length p (the v^p term of the defining
// quotient cancels), leading coefficient delta8 * 2^((p-1)/2) * p, constant
// coefficient qk^(p-1), every middle coefficient divisible by p*qk.
struct ShiftedHPoly {
  unsigned long p = 3;
  BigInt qk;
  int sign = 1;
  std::vector<BigInt> coeffs;  // ascending in v, size p
};

ShiftedHPoly hp_shifted(unsigned long p, const BigInt& qk, int sign);

// Verifies the ShiftedHPoly structural invariants listed above.
bool shifted_structure_ok(const ShiftedHPoly& s);

// Index k in {0..p-1} with tan((4k+3)pi/4p) = -delta4, i.e. the root of
// G_p(X,1) that is divided out and does not belong to H_p(X,1):
// (3p-3)/4 for p = 1 (mod 4) and (p-3)/4 for p = 3 (mod 4).
unsigned long excluded_root_index(unsigned long p);

// floor(p/4) * (p mod 4). Kept as a diagnostic: an alternative closed form
// for the excluded index that agrees with excluded_root_index only at p = 3.
unsigned long floor_quarter_root_index(unsigned long p);

// Certifies numerically that prod_{k != k0} (X - tan((4k+3)pi/4p)) equals
// H_p(X,1), with k0 = excluded_root_index(p). All tangent evaluations use
// outward rounding, so the returned max coefficient deviation is a rigorous
// upper bound. Throws PrecisionError when the working precision (about 2p
// decimal digits) cannot separate the result to within tol.
double hp_root_product_check(unsigned long p, double tol);

}  // namespace dioph
