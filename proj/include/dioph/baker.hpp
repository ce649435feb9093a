#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dioph/interval.hpp"
#include "dioph/numth.hpp"

namespace dioph {

// Inputs of the explicit lower bound for the linear form
// Lambda = b1*i*pi - b2*log(alpha) with |alpha| = 1, alpha not a root of
// unity, D = [Q(alpha):Q]/2. Here h_alpha = log(y)/2 and b1 = b2 = p: only
// the worst case B = max(13, b1, b2) enters the bound.
struct MignotteParams {
  Interval lambda;  // in [1.8, 4)
  long d = 1;       // half-degree D
  Interval h_alpha;
  BigInt b1;
  BigInt b2;
};

struct MignotteConstants {
  Interval rho;  // e^lambda
  Interval k;    // 0.5*rho*pi + D*h(alpha)
  Interval t;
  Interval big_t;  // T
  Interval h;      // H
  BigInt b;        // B = max(13, b1, b2)
};

// h(alpha) = log(y)/2, outward rounded; the double overload rounds up.
Interval alpha_height_interval(const BigInt& y, mpfr_prec_t prec = 256);
double alpha_height(const BigInt& y);

// All five constants as rigorous enclosures. Throws std::invalid_argument
// when lambda is certainly outside [1.8, 4).
MignotteConstants mignotte_constants(const MignotteParams& params);

// Rigorous lower bound on log|Lambda|; use .lower_double() (rounded down).
Interval mignotte_lower_bound(const MignotteParams& params);

// log 4 - ((p-1)/2) log y, an upper bound on log|Lambda| for a descent pair
// of a solution with this y; use .upper_double() (rounded up).
Interval linear_form_upper_bound(const BigInt& y, unsigned long p, mpfr_prec_t prec = 256);

// Largest prime p consistent with the Liouville branch
// log 4 - ((p-1)/2) log y >= -4 (log 6)^3 log y at y = y_min.
unsigned long liouville_p_max(const BigInt& y_min, mpfr_prec_t prec = 256);

// One full evaluation at (p, y_min): constants, both bounds, whether they
// certify a contradiction, and whether the contradiction extends to every
// y >= y_min (slope comparison of the two sides as functions of log y).
struct BakerEvaluation {
  unsigned long p = 0;
  BigInt y_min;
  MignotteConstants constants;
  Interval lower;  // Mignotte bound
  Interval upper;  // linear-form bound
  bool contradiction = false;  // upper certainly below lower
  bool slope_ok = false;       // contradiction propagates in y
};

BakerEvaluation evaluate_bound_at(unsigned long p, const BigInt& y_min,
                                  mpfr_prec_t prec = 256);

// True when p is impossible for every y >= y_min (certified contradiction
// plus slope check). y_min must exceed 126504 so the height argument applies.
bool contradiction_for_all_y(unsigned long p, const BigInt& y_min, mpfr_prec_t prec = 256);

// A named bound case: smallest y as a function of p.
struct BakerCase {
  std::string name;
  std::function<BigInt(unsigned long)> y_min;
  unsigned long p_start = 5;
};

// Boundary evaluations pinning the crossover: no contradiction at p_bound,
// certified contradiction at the next prime above.
struct CrossoverCertificate {
  unsigned long p_bound = 0;
  unsigned long next_prime = 0;
  std::string bound_upper, bound_lower;  // values at p_bound
  std::string next_upper, next_lower;    // values at next_prime
};

struct PBoundResult {
  unsigned long p_bound = 0;
  CrossoverCertificate certificate;
};

// Scans primes downward from ceiling; every prime above the result carries a
// certified contradiction for all y >= case.y_min(p); the result is the first
// prime where the contradiction fails. Throws InconclusiveError when a
// contradiction holds but its slope check fails, or when the scan exhausts
// the range.
PBoundResult p_bound_for_case(const BakerCase& bcase, unsigned long ceiling = 100000,
                              mpfr_prec_t prec = 256);

// The five standard cases: q^m >= 503, p = q, and m >= 40 / 100 / 250
// (minimal q = 3 for the m-cases).
std::vector<BakerCase> standard_cases();

// y lower bound for "u + delta4 v = +-3^m, m >= m_min": ceil(3^(2 m_min)/2).
BigInt y_min_for_m_threshold(unsigned long m_min);

}  // namespace dioph
