#include "dioph/baker.hpp"

#include <algorithm>

namespace dioph {

namespace {

Interval iv_long(long v, mpfr_prec_t prec) { return Interval::from_long(v, prec); }

struct LambdaDerived {
  Interval lambda, rho, pi, t, big_t;
};

// The lambda-only part of the constant set, shared across all (p, y) pairs.
LambdaDerived lambda_derived(const Interval& lambda) {
  mpfr_prec_t prec = lambda.precision();
  Interval low = Interval::from_decimal("1.8", prec);
  Interval four = iv_long(4, prec);
  if (lambda.certainly_less(low) || !lambda.certainly_less(four))
    throw std::invalid_argument("mignotte: lambda must lie in [1.8, 4)");
  LambdaDerived d{lambda, lambda.exp(), Interval::pi(prec), Interval(prec), Interval(prec)};
  Interval one = iv_long(1, prec);
  Interval pirho = d.pi * d.rho;
  Interval t1 = one / (iv_long(6, prec) * pirho);
  Interval t2 = one / (iv_long(48, prec) * pirho *
                       (one + iv_long(2, prec) * pirho / (iv_long(3, prec) * lambda)));
  d.t = t1 - t2;
  Interval third = one / iv_long(3, prec);
  Interval ninth = one / iv_long(9, prec);
  Interval root = (ninth + iv_long(2, prec) * lambda * d.t).sqrt();
  Interval base = (third + root) / lambda;
  d.big_t = base.square();
  return d;
}

Interval k_of(const LambdaDerived& d, long deg, const Interval& h_alpha) {
  mpfr_prec_t prec = d.lambda.precision();
  return Interval::from_decimal("0.5", prec) * d.rho * d.pi + iv_long(deg, prec) * h_alpha;
}

Interval h_of(const LambdaDerived& d, long deg, const Interval& k, const BigInt& b) {
  mpfr_prec_t prec = d.lambda.precision();
  Interval one = iv_long(1, prec);
  Interval pirho = d.pi * d.rho;
  Interval logb = Interval::from_bigint(b, prec).log();
  Interval inner = logb + (one / pirho + one / (iv_long(2, prec) * k)).log() -
                   d.big_t.sqrt().log() + Interval::from_decimal("0.886", prec);
  Interval expr = iv_long(deg, prec) * inner +
                  iv_long(3, prec) * d.lambda / iv_long(2, prec) +
                  (one / d.big_t) *
                      (one / (iv_long(6, prec) * d.rho * d.pi) + one / (iv_long(3, prec) * k)) +
                  Interval::from_decimal("0.023", prec);
  return Interval::max(iv_long(3, prec) * d.lambda, expr);
}

// -(8 pi T rho / lambda H^2 + 0.23) K - 2H - 2 log H + lambda/2 + 2 log lambda
// - (D+2) log 2
Interval lower_of(const LambdaDerived& d, long deg, const Interval& k, const Interval& h) {
  mpfr_prec_t prec = d.lambda.precision();
  Interval coeff = iv_long(8, prec) * d.pi * d.big_t * d.rho / d.lambda;
  Interval main = (coeff * h.square() + Interval::from_decimal("0.23", prec)) * k;
  return -main - iv_long(2, prec) * h - iv_long(2, prec) * h.log() +
         d.lambda / iv_long(2, prec) + iv_long(2, prec) * d.lambda.log() -
         iv_long(deg + 2, prec) * iv_long(2, prec).log();
}

BigInt b_of(const MignotteParams& params) {
  BigInt b = 13;
  b = std::max(b, params.b1);
  b = std::max(b, params.b2);
  return b;
}

}  // namespace

Interval alpha_height_interval(const BigInt& y, mpfr_prec_t prec) {
  if (y < 2) throw std::invalid_argument("alpha_height: y must be >= 2");
  return Interval::from_bigint(y, prec).log() / Interval::from_long(2, prec);
}

double alpha_height(const BigInt& y) { return alpha_height_interval(y).upper_double(); }

MignotteConstants mignotte_constants(const MignotteParams& params) {
  LambdaDerived d = lambda_derived(params.lambda);
  MignotteConstants c{d.rho, Interval(), d.t, d.big_t, Interval(), b_of(params)};
  c.k = k_of(d, params.d, params.h_alpha);
  c.h = h_of(d, params.d, c.k, c.b);
  return c;
}

Interval mignotte_lower_bound(const MignotteParams& params) {
  LambdaDerived d = lambda_derived(params.lambda);
  Interval k = k_of(d, params.d, params.h_alpha);
  Interval h = h_of(d, params.d, k, b_of(params));
  return lower_of(d, params.d, k, h);
}

Interval linear_form_upper_bound(const BigInt& y, unsigned long p, mpfr_prec_t prec) {
  if (y < 2 || p < 3) throw std::invalid_argument("linear_form_upper_bound: need y >= 2, p >= 3");
  Interval logy = Interval::from_bigint(y, prec).log();
  Interval log4 = Interval::from_long(4, prec).log();
  return log4 - Interval::from_long(long((p - 1) / 2), prec) * logy;
}

unsigned long liouville_p_max(const BigInt& y_min, mpfr_prec_t prec) {
  if (y_min < 2) throw std::invalid_argument("liouville_p_max: y_min must be >= 2");
  Interval logy = Interval::from_bigint(y_min, prec).log();
  Interval log6 = Interval::from_long(6, prec).log();
  Interval rhs = -(Interval::from_long(4, prec) * log6 * log6 * log6) * logy;
  unsigned long best = 0;
  for (unsigned long p : odd_primes_up_to(1000)) {
    Interval lhs = linear_form_upper_bound(y_min, p, prec);
    if (rhs.certainly_less(lhs)) {
      best = p;
    } else if (lhs.certainly_less(rhs)) {
      return best;
    } else {
      throw InconclusiveError("liouville_p_max: boundary prime undecidable at this precision");
    }
  }
  throw InconclusiveError("liouville_p_max: no failing prime below scan limit");
}

namespace {

constexpr const char* kLambdaDefault = "1.8";

BakerEvaluation evaluate_with(const LambdaDerived& d, unsigned long p, const BigInt& y_min,
                              mpfr_prec_t prec) {
  BakerEvaluation ev;
  ev.p = p;
  ev.y_min = y_min;
  Interval h_alpha = alpha_height_interval(y_min, prec);
  BigInt b = std::max<BigInt>(13, BigInt(p));
  Interval k = k_of(d, 1, h_alpha);
  Interval h = h_of(d, 1, k, b);
  ev.constants = MignotteConstants{d.rho, k, d.t, d.big_t, h, b};
  ev.lower = lower_of(d, 1, k, h);
  ev.upper = linear_form_upper_bound(y_min, p, prec);
  Interval margin = Interval::from_decimal("1e-10", prec);
  ev.contradiction = (ev.upper + margin).certainly_less(ev.lower);
  bool undecided = !ev.contradiction && !(ev.lower - margin).certainly_less(ev.upper);
  if (undecided)
    throw InconclusiveError("baker: bound comparison within safety margin at p=" +
                            std::to_string(p));
  // Slope check: d(upper)/dlogy = -(p-1)/2 must not exceed
  // d(lower)/dlogy >= -(8 pi T rho/lambda H^2 + 0.23)/2 with H frozen at its
  // value at y_min (H is non-increasing in y).
  Interval coeff = Interval::from_long(8, prec) * d.pi * d.big_t * d.rho / d.lambda;
  Interval lower_slope = (coeff * h.square() + Interval::from_decimal("0.23", prec)) /
                         Interval::from_long(2, prec);
  Interval upper_slope = Interval::from_long(long((p - 1) / 2), prec);
  ev.slope_ok = lower_slope.certainly_less(upper_slope);
  return ev;
}

}  // namespace

BakerEvaluation evaluate_bound_at(unsigned long p, const BigInt& y_min, mpfr_prec_t prec) {
  LambdaDerived d = lambda_derived(Interval::from_decimal(kLambdaDefault, prec));
  return evaluate_with(d, p, y_min, prec);
}

bool contradiction_for_all_y(unsigned long p, const BigInt& y_min, mpfr_prec_t prec) {
  if (y_min <= 126504) return false;  // height/degeneracy argument needs y large
  BakerEvaluation ev = evaluate_bound_at(p, y_min, prec);
  return ev.contradiction && ev.slope_ok;
}

PBoundResult p_bound_for_case(const BakerCase& bcase, unsigned long ceiling, mpfr_prec_t prec) {
  LambdaDerived d = lambda_derived(Interval::from_decimal(kLambdaDefault, prec));
  std::vector<unsigned long> primes = odd_primes_up_to(ceiling);
  std::optional<BakerEvaluation> above;
  for (auto it = primes.rbegin(); it != primes.rend(); ++it) {
    unsigned long p = *it;
    if (p < bcase.p_start) break;
    BigInt y = bcase.y_min(p);
    bool excluded = false;
    BakerEvaluation ev;
    if (y > 126504) {
      ev = evaluate_with(d, p, y, prec);
      if (ev.contradiction && !ev.slope_ok)
        throw InconclusiveError("p_bound_for_case: slope check failed at p=" +
                                std::to_string(p));
      excluded = ev.contradiction && ev.slope_ok;
    }
    if (!excluded) {
      PBoundResult res;
      res.p_bound = p;
      res.certificate.p_bound = p;
      if (y > 126504) {
        res.certificate.bound_upper = ev.upper.str();
        res.certificate.bound_lower = ev.lower.str();
      }
      if (above) {
        res.certificate.next_prime = above->p;
        res.certificate.next_upper = above->upper.str();
        res.certificate.next_lower = above->lower.str();
      }
      return res;
    }
    above = ev;
  }
  throw InconclusiveError("p_bound_for_case: every scanned prime was excluded");
}

std::vector<BakerCase> standard_cases() {
  auto const_y = [](BigInt y) {
    return [y](unsigned long) { return y; };
  };
  std::vector<BakerCase> cases;
  cases.push_back({"qm503", const_y(BigInt(126505)), 5});
  cases.push_back({"pq",
                   [](unsigned long p) -> BigInt {
                     BigInt pp(p);
                     return (pp * pp + 1) / 2;
                   },
                   5});
  cases.push_back({"m40", const_y(y_min_for_m_threshold(40)), 5});
  cases.push_back({"m100", const_y(y_min_for_m_threshold(100)), 5});
  cases.push_back({"m250", const_y(y_min_for_m_threshold(250)), 5});
  return cases;
}

BigInt y_min_for_m_threshold(unsigned long m_min) {
  return (pow_ui(BigInt(3), 2 * m_min) + 1) / 2;
}

}  // namespace dioph
