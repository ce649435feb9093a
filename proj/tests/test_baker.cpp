#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dioph/baker.hpp"
#include "dioph/expected.hpp"

using namespace dioph;

namespace {

Interval dec(const std::string& s) { return Interval::from_decimal(s); }

MignotteParams params_at(const BigInt& y, unsigned long p) {
  return MignotteParams{dec("1.8"), 1, alpha_height_interval(y), BigInt(p), BigInt(p)};
}

}  // namespace

TEST_CASE("alpha_height") {
  CHECK(alpha_height(126505) >= 5.87401);
  CHECK(alpha_height(126505) < 5.87403);
  CHECK(alpha_height(7) == doctest::Approx(0.9729551).epsilon(1e-6));
  CHECK(alpha_height(2) == doctest::Approx(0.3465736).epsilon(1e-6));
  CHECK_THROWS_AS(alpha_height(1), std::invalid_argument);
}

TEST_CASE("mignotte constants land in the quoted windows") {
  MignotteConstants c = mignotte_constants(params_at(126505, 3803));
  // K: 15.37677 <= K < 9.5028 + 0.5 log y
  CHECK(c.k.certainly_greater(dec("15.37677")));
  Interval upper = dec("9.5028") + alpha_height_interval(126505);
  CHECK(c.k.certainly_less(upper));
  // t and T windows
  CHECK(c.t.certainly_greater(dec("0.008633")));
  CHECK(c.t.certainly_less(dec("0.008634")));
  CHECK(c.big_t.certainly_greater(dec("0.155768")));
  CHECK(c.big_t.certainly_less(dec("0.155769")));
  // H < log p + 2.270616 at p = 3803
  Interval logp = Interval::from_long(3803).log();
  CHECK(c.h.certainly_less(logp + dec("2.270616")));
  CHECK(c.b == 3803);
}

TEST_CASE("mignotte_constants validates lambda") {
  MignotteParams bad = params_at(126505, 101);
  bad.lambda = dec("1.5");
  CHECK_THROWS_AS(mignotte_constants(bad), std::invalid_argument);
  bad.lambda = dec("4.0");
  CHECK_THROWS_AS(mignotte_constants(bad), std::invalid_argument);
}

TEST_CASE("mignotte_lower_bound finite at the B floor") {
  // b1 = b2 = 13 exercises B = 13
  MignotteParams p = params_at(126505, 13);
  Interval lb = mignotte_lower_bound(p);
  CHECK(lb.upper_double() < 0);
  CHECK(lb.lower_double() > -1e9);
}

TEST_CASE("linear_form_upper_bound") {
  Interval b = linear_form_upper_bound(126505, 1001);
  double want = std::log(4.0) - 500 * std::log(126505.0);
  CHECK(b.upper_double() == doctest::Approx(want).epsilon(1e-12));
  Interval b3 = linear_form_upper_bound(126505, 3);
  CHECK(b3.upper_double() ==
        doctest::Approx(std::log(4.0) - std::log(126505.0)).epsilon(1e-12));
}

TEST_CASE("bound comparison against the exact linear form of a solution") {
  // For the (79, 3, 1, 5, 5) solution: |i ((u+iv)/(u-iv))^p - 1| = 2 q^m / sqrt(2 y^p),
  // whose log is below the linear-form upper bound log 4 - ((p-1)/2) log y.
  // 2*3/sqrt(2*5^5) = 6/sqrt(6250)
  double exact_log = std::log(6.0 / std::sqrt(6250.0));
  Interval ub = linear_form_upper_bound(5, 5);
  CHECK(exact_log <= ub.upper_double());
}

TEST_CASE("liouville_p_max") {
  CHECK(liouville_p_max(126505) == 47);
  CHECK(liouville_p_max(2) == 47);
  CHECK(liouville_p_max(BigInt("1000000000000")) == 47);
}

TEST_CASE("crossover evaluation at the published boundary") {
  BakerEvaluation at = evaluate_bound_at(3803, 126505);
  CHECK_FALSE(at.contradiction);
  BakerEvaluation next = evaluate_bound_at(3821, 126505);
  CHECK(next.contradiction);
  CHECK(next.slope_ok);
}

TEST_CASE("p_bound_for_case with a reduced ceiling") {
  // unit-scale check; the acceptance suite runs the full 1e5 ceiling
  BakerCase qm503{"qm503", [](unsigned long) { return BigInt(126505); }, 5};
  PBoundResult res = p_bound_for_case(qm503, 5000);
  CHECK(res.p_bound == 3803);
  CHECK(res.certificate.next_prime == 3821);
  CHECK(!res.certificate.bound_upper.empty());
  CHECK(!res.certificate.next_lower.empty());
}

TEST_CASE("five standard cases are configured") {
  auto cases = standard_cases();
  REQUIRE(cases.size() == 5);
  CHECK(cases[0].y_min(5) == 126505);
  CHECK(cases[1].y_min(3089) == (BigInt(3089) * 3089 + 1) / 2);
  CHECK(cases[2].y_min(5) == (pow_ui(BigInt(3), 80) + 1) / 2);
}

TEST_CASE("bounds are monotone in y_min") {
  BakerCase base{"m40", [](unsigned long) { return y_min_for_m_threshold(40); }, 5};
  BakerCase bigger{"m60", [](unsigned long) { return y_min_for_m_threshold(60); }, 5};
  PBoundResult r1 = p_bound_for_case(base, 2000);
  PBoundResult r2 = p_bound_for_case(bigger, 2000);
  CHECK(r2.p_bound <= r1.p_bound);
}

TEST_CASE("directed rounding: doubled precision gives contained intervals") {
  for (long prec : {128L, 256L}) {
    BakerEvaluation coarse = evaluate_bound_at(1301, y_min_for_m_threshold(40), prec);
    BakerEvaluation fine = evaluate_bound_at(1301, y_min_for_m_threshold(40), 2 * prec);
    // refined enclosures lie inside the coarse ones
    CHECK(fine.lower.lower_double() >= coarse.lower.lower_double());
    CHECK(fine.lower.upper_double() <= coarse.lower.upper_double());
    CHECK(fine.upper.lower_double() >= coarse.upper.lower_double());
    CHECK(fine.upper.upper_double() <= coarse.upper.upper_double());
  }
}

TEST_CASE("contradiction_for_all_y refuses small y") {
  CHECK_FALSE(contradiction_for_all_y(4001, 126504));
}

TEST_CASE("interval arithmetic basics") {
  Interval a = dec("1.5"), b = dec("-2.25");
  CHECK((a * b).upper_double() == doctest::Approx(-3.375));
  CHECK((a - b).lower_double() == doctest::Approx(3.75));
  CHECK((Interval::from_long(9).sqrt()).lower_double() == doctest::Approx(3.0));
  CHECK_THROWS_AS(b.log(), std::domain_error);
  CHECK_THROWS_AS(a / (a - a), std::domain_error);
  Interval pi = Interval::pi();
  CHECK(pi.lower_double() < 3.14159266);
  CHECK(pi.upper_double() > 3.14159265);
  CHECK(pi.width_upper() < 1e-70);
}
