#include "dioph/interval.hpp"

#include <algorithm>
#include <utility>

namespace dioph {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(Interval o) {
  swap(*this, o);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

void swap(Interval& a, Interval& b) noexcept {
  std::swap(a.prec_, b.prec_);
  mpfr_swap(a.lo_, b.lo_);
  mpfr_swap(a.hi_, b.hi_);
}

Interval Interval::from_long(long v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

Interval Interval::from_bigint(const BigInt& v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_decimal(const std::string& s, mpfr_prec_t prec) {
  Interval r(prec);
  if (mpfr_set_str(r.lo_, s.c_str(), 10, MPFR_RNDD) != 0 ||
      mpfr_set_str(r.hi_, s.c_str(), 10, MPFR_RNDU) != 0)
    throw std::invalid_argument("Interval::from_decimal: bad literal " + s);
  return r;
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::operator+(const Interval& o) const {
  Interval r(std::max(prec_, o.prec_));
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::operator-(const Interval& o) const {
  Interval r(std::max(prec_, o.prec_));
  mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return r;
}

Interval Interval::operator*(const Interval& o) const {
  Interval r(std::max(prec_, o.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  const mpfr_t* as[2] = {&lo_, &hi_};
  const mpfr_t* bs[2] = {&o.lo_, &o.hi_};
  bool first = true;
  for (auto* a : as)
    for (auto* b : bs) {
      mpfr_mul(t, *a, *b, MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, *a, *b, MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

Interval Interval::operator/(const Interval& o) const {
  if (o.contains_zero()) throw std::domain_error("Interval: division by interval containing 0");
  Interval r(std::max(prec_, o.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  const mpfr_t* as[2] = {&lo_, &hi_};
  const mpfr_t* bs[2] = {&o.lo_, &o.hi_};
  bool first = true;
  for (auto* a : as)
    for (auto* b : bs) {
      mpfr_div(t, *a, *b, MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_div(t, *a, *b, MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

Interval Interval::operator-() const {
  Interval r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval Interval::log() const {
  if (mpfr_sgn(lo_) <= 0) throw std::domain_error("Interval::log: non-positive argument");
  Interval r(prec_);
  mpfr_log(r.lo_, lo_, MPFR_RNDD);
  mpfr_log(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::exp() const {
  Interval r(prec_);
  mpfr_exp(r.lo_, lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::sqrt() const {
  if (mpfr_sgn(lo_) < 0) throw std::domain_error("Interval::sqrt: negative argument");
  Interval r(prec_);
  mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::square() const { return (*this) * (*this); }

Interval Interval::max(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

bool Interval::certainly_less(const Interval& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

double Interval::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }

double Interval::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::width_upper() const {
  mpfr_t t;
  mpfr_init2(t, prec_);
  mpfr_sub(t, hi_, lo_, MPFR_RNDU);
  double w = mpfr_get_d(t, MPFR_RNDU);
  mpfr_clear(t);
  return w;
}

std::string Interval::str(int digits) const {
  char* lo = nullptr;
  char* hi = nullptr;
  mpfr_asprintf(&lo, "%.*Rg", digits, lo_);
  mpfr_asprintf(&hi, "%.*Rg", digits, hi_);
  std::string s = std::string("[") + lo + ", " + hi + "]";
  mpfr_free_str(lo);
  mpfr_free_str(hi);
  return s;
}

Interval interval_tan(const Interval& angle) {
  Interval r(angle.precision());
  mpfr_tan(r.lo_mut(), angle.lo_raw(), MPFR_RNDD);
  mpfr_tan(r.hi_mut(), angle.hi_raw(), MPFR_RNDU);
  if (mpfr_cmp(r.lo_raw(), r.hi_raw()) > 0)
    throw PrecisionError("interval_tan: angle interval straddles a pole");
  return r;
}

}  // namespace dioph
