#pragma once

#include <mpfr.h>

#include <string>

#include "dioph/errors.hpp"
#include "dioph/numth.hpp"

namespace dioph {

// Closed interval [lo, hi] of MPFR reals with outward rounding on every
// operation: lo is always rounded down, hi always up, so the true value of
// the represented expression is contained for the whole computation. Used
// wherever a comparison has to be a certificate rather than an estimate.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 256);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(Interval o);
  ~Interval();

  static Interval from_long(long v, mpfr_prec_t prec = 256);
  static Interval from_bigint(const BigInt& v, mpfr_prec_t prec = 256);
  // Decimal string, outward-rounded (covers non-representable decimals).
  static Interval from_decimal(const std::string& s, mpfr_prec_t prec = 256);
  static Interval pi(mpfr_prec_t prec = 256);

  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator*(const Interval& o) const;
  Interval operator/(const Interval& o) const;  // requires 0 not in o
  Interval operator-() const;

  Interval log() const;  // requires lo > 0
  Interval exp() const;
  Interval sqrt() const;  // requires lo >= 0
  Interval square() const;

  static Interval max(const Interval& a, const Interval& b);

  // True when every point of *this is strictly below every point of o.
  bool certainly_less(const Interval& o) const;
  bool certainly_greater(const Interval& o) const { return o.certainly_less(*this); }
  bool contains_zero() const;

  double lower_double() const;  // rounded down
  double upper_double() const;  // rounded up
  double width_upper() const;
  std::string str(int digits = 20) const;

  mpfr_prec_t precision() const { return prec_; }
  const mpfr_t& lo_raw() const { return lo_; }
  const mpfr_t& hi_raw() const { return hi_; }
  mpfr_t& lo_mut() { return lo_; }
  mpfr_t& hi_mut() { return hi_; }

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;

  friend void swap(Interval& a, Interval& b) noexcept;
};

void swap(Interval& a, Interval& b) noexcept;

// tan over an angle interval lying strictly inside one monotone branch;
// throws PrecisionError if the branch condition cannot be certified.
Interval interval_tan(const Interval& angle);

}  // namespace dioph
