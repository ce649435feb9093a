#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "dioph/expected.hpp"
#include "dioph/hpoly.hpp"
#include "dioph/sieve.hpp"

using namespace dioph;

namespace {

// Dense oracle over exact big-integer evaluation of G on the line.
std::vector<unsigned long> l_set_oracle(unsigned long p, long q, long w) {
  int d4 = delta4(p);
  long ord = multiplicative_order(q, w).get_si();
  std::vector<unsigned long> classes;
  for (long s = 0; s < ord; ++s) {
    BigInt qs = mod_pow(q, s, w);
    bool found = false;
    for (long v = 0; v < w && !found; ++v) {
      BigInt g = eval_FG(qs - d4 * v, BigInt(v), p).second;
      found = ((g - 1) % w) == 0;
    }
    if (found) classes.push_back(s);
  }
  return classes;
}

}  // namespace

TEST_CASE("l_set known values at p = 2381") {
  SieveSet a5 = l_set(2381, 3, 242);
  CHECK(a5.order == 5);
  CHECK(a5.classes == std::vector<unsigned long>{0, 1, 4});
}

TEST_CASE("l_set agrees with the exact dense oracle") {
  for (unsigned long p : {29ul, 1013ul}) {
    for (long w : {4L, 242L, 136L}) {
      SieveSet s = l_set(p, 3, w);
      CHECK(s.classes == l_set_oracle(p, 3, w));
    }
  }
}

TEST_CASE("l_set small-modulus edge") {
  SieveSet s = l_set(29, 3, 4);
  CHECK(s.order == 2);  // ord_4(3) = 2
  for (unsigned long c : s.classes) CHECK(c < 2);
  CHECK_THROWS_AS(l_set(29, 3, 9), std::invalid_argument);  // gcd(q, w) > 1
}

TEST_CASE("l_set_descent always contains the class of a genuine descent pair") {
  // (79, 3, 1, 5, 5): witness (2, 1), k = m = 1, H = 1 exactly.
  for (const auto& cfg : a_set_configs())
    for (unsigned long w : cfg.moduli) {
      SieveSet s = l_set_descent(5, 3, w);
      unsigned long cls = 1 % s.order;
      bool in = std::find(s.classes.begin(), s.classes.end(), cls) != s.classes.end();
      CHECK(in);
    }
}

TEST_CASE("a_set configuration orders are verified") {
  for (const auto& cfg : a_set_configs())
    for (unsigned long w : cfg.moduli)
      CHECK(multiplicative_order(3, w) == cfg.order);
  CHECK(a_label_from_order(27) == ALabel::A27);
  CHECK_THROWS_AS(a_label_from_order(6), std::invalid_argument);
  CHECK(a_label_name(ALabel::A69) == "A69");
}

TEST_CASE("a_set known values") {
  CHECK(a_set(2381, ALabel::A27).classes == std::vector<unsigned long>{0, 14, 15, 17});
  CHECK(a_set(2381, ALabel::A34).classes == std::vector<unsigned long>{0, 10});
  CHECK(a_set(1013, ALabel::A16).classes == std::vector<unsigned long>{0});
  CHECK(a_set(1013, ALabel::A27).classes == std::vector<unsigned long>{0});
}

TEST_CASE("crt_min_nonzero on the 2381 configuration") {
  std::vector<NamedASet> sets = {a_set(2381, ALabel::A5), a_set(2381, ALabel::A27),
                                 a_set(2381, ALabel::A34)};
  CrtScan scan = crt_min_nonzero(sets);
  REQUIRE(scan.r_m.has_value());
  CHECK(*scan.r_m == 44);
  CHECK(scan.modulus == 4590);
  std::vector<BigInt> want;
  for (unsigned long v : expected::crt_2381_values()) want.push_back(v);
  CHECK(scan.values == want);
  // permutation invariance
  std::vector<NamedASet> perm = {sets[2], sets[0], sets[1]};
  CrtScan scan2 = crt_min_nonzero(perm);
  CHECK(scan2.values == scan.values);
  CHECK(scan2.r_m == scan.r_m);
}

TEST_CASE("crt_min_nonzero matches a dense scan on a small configuration") {
  NamedASet s1{ALabel::A5, 5, {242}, {0, 2}};
  NamedASet s2{ALabel::A16, 16, {136}, {1, 5, 12}};
  CrtScan scan = crt_min_nonzero({s1, s2});
  std::vector<BigInt> dense;
  for (long m = 0; m < 80; ++m)
    if ((m % 5 == 0 || m % 5 == 2) &&
        (m % 16 == 1 || m % 16 == 5 || m % 16 == 12))
      dense.push_back(m);
  CHECK(scan.values == dense);
  CHECK(scan.modulus == 80);

  // all-zero sets: r_m absent, value set {0}
  NamedASet z1{ALabel::A16, 16, {136}, {0}};
  NamedASet z2{ALabel::A27, 27, {866}, {0}};
  CrtScan zc = crt_min_nonzero({z1, z2});
  CHECK_FALSE(zc.r_m.has_value());
  CHECK(zc.values == std::vector<BigInt>{0});
  CHECK(zc.modulus == 432);
}

TEST_CASE("cong_class_filter") {
  CHECK(cong_class_filter(5));
  CHECK_FALSE(cong_class_filter(13));
  CHECK(cong_class_filter(29));
  for (unsigned long p : odd_primes_up_to(3803)) {
    if (p == 3) continue;
    unsigned long r = p % 24;
    CHECK(cong_class_filter(p) == (r == 1 || r == 5 || r == 7 || r == 11));
  }
}

TEST_CASE("mod3power_filter") {
  CHECK(mod3power_filter(5, 1));
  CHECK(mod3power_filter(487, 5));
  CHECK_FALSE(mod3power_filter(487, 6));
  CHECK_FALSE(mod3power_filter(73, 5));   // 73 = 1 (mod 24)
  CHECK_FALSE(mod3power_filter(97, 5));
  CHECK(mod3power_filter(3889, 5));  // first surviving prime of the 1 (mod 8) class
}

TEST_CASE("k0_mod3_check") {
  CHECK(k0_mod3_check(5));
  CHECK(k0_mod3_check(7));
  for (unsigned long p : odd_primes_up_to(499))
    if (p > 3) CHECK(k0_mod3_check(p));
}

TEST_CASE("negative branch diagnostic") {
  CHECK(negative_branch_impossible(5, 3));
  CHECK(negative_branch_impossible(29, 27));
  CHECK(negative_branch_impossible(1013, 9));
  CHECK_FALSE(negative_branch_impossible(3, 3));  // q = p has no Fermat step
}

TEST_CASE("eliminate_prime table rows") {
  EliminationReport r1019 = eliminate_prime(1019, *expected::strategy_for(1019));
  REQUIRE(r1019.r_m.has_value());
  CHECK(*r1019.r_m == 384);
  CHECK(r1019.implied_bound == 1009);
  CHECK(r1019.eliminated);

  EliminationReport r3803 = eliminate_prime(3803, *expected::strategy_for(3803));
  REQUIRE(r3803.r_m.has_value());
  CHECK(*r3803.r_m == 136);
  CHECK(r3803.eliminated);

  EliminationReport r1109 = eliminate_prime(1109, *expected::strategy_for(1109));
  CHECK_FALSE(r1109.r_m.has_value());
  REQUIRE(r1109.m_threshold.has_value());
  CHECK(*r1109.m_threshold == 176);
  CHECK(r1109.eliminated);

  // refined continuous bound needed at 1061
  EliminationReport r1061 = eliminate_prime(1061, *expected::strategy_for(1061));
  CHECK(r1061.refined);
  CHECK(r1061.eliminated);
  CHECK(r1061.refined_bound >= 1009);
  CHECK(r1061.refined_bound < 1061);
  CHECK(r1061.assumes_small_m_external);
}

TEST_CASE("eliminate_prime below the table range is inconclusive, not an error") {
  EliminationReport r7 = eliminate_prime(7, {ALabel::A5});
  CHECK_FALSE(r7.eliminated);
}

TEST_CASE("sweep prime list vs embedded strategies") {
  auto primes = sweep_primes();
  CHECK(primes.size() == 94);
  std::vector<unsigned long> unlisted;
  for (unsigned long p : primes) {
    CHECK((p % 24 == 5 || p % 24 == 11));
    CHECK(p > 1000);
    CHECK(p <= 3803);
    if (!expected::strategy_for(p)) unlisted.push_back(p);
  }
  // Three sweep primes have no row in the reference tables; the sweep
  // eliminates them with the recorded strategy families.
  CHECK(unlisted == std::vector<unsigned long>{1373, 2621, 2939});
  CHECK(expected::table3_rows().size() + expected::table4_rows().size() == 91);
  for (unsigned long p : unlisted) {
    bool eliminated = false;
    for (const auto& family : sweep_strategy_families()) {
      if (eliminate_prime(p, family).eliminated) {
        eliminated = true;
        break;
      }
    }
    CHECK(eliminated);
  }
}

TEST_CASE("sieve cache round trip with stable bytes") {
  std::string path =
      (std::filesystem::temp_directory_path() / "dioph_cache_test.jsonl").string();
  std::remove(path.c_str());
  {
    SieveCache cache(path);
    cached_l_set(2381, 3, 242, &cache);
    cached_l_set(29, 3, 136, &cache);
    cache.flush();
  }
  std::string first;
  {
    std::ifstream in(path);
    first.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  {
    SieveCache cache(path);
    auto hit = cache.get(2381, 3, 242);
    REQUIRE(hit.has_value());
    CHECK(hit->classes == std::vector<unsigned long>{0, 1, 4});
    // re-putting identical data and flushing must not change the bytes
    cache.put(*hit);
    cache.flush();
  }
  std::string second;
  {
    std::ifstream in(path);
    second.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  CHECK(first == second);
  std::remove(path.c_str());
}
