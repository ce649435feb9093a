#pragma once

#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include "dioph/numth.hpp"

namespace dioph {

// Residue classes s modulo ord_w(q) for which H_p(q^s - delta4 v, v) = 1
// (mod w) has a solution v mod w. Membership is decided by exhaustive
// enumeration of v.
struct SieveSet {
  unsigned long p = 0;
  BigInt q;
  BigInt w;
  unsigned long order = 0;
  std::vector<unsigned long> classes;  // sorted, subset of [0, order)
};

// Classes s for which G_p(q^s - delta4 v, v) = 1 (mod w) is solvable,
// equivalently H_p = q^(-s) on the line u + delta4 v = q^s. This is the
// congruence that generates the reference elimination tables.
// Requires gcd(q, w) = 1.
SieveSet l_set(unsigned long p, const BigInt& q, const BigInt& w);

// Direct descent congruence: classes s for which H_p(q^s - delta4 v, v) = 1
// (mod w) is solvable. A solution with u + delta4 v = q^m always lands its
// class m mod ord in this set, but the set carries little elimination power
// when ord divides p - 1. Kept as the soundness-side diagnostic.
SieveSet l_set_descent(unsigned long p, const BigInt& q, const BigInt& w);

// File-backed cache of sieve sets, keyed by (p, q, w). Concurrent readers,
// single writer; flush writes a temp file and renames it into place. Record
// format: one JSON object per line with alphabetically ordered keys.
class SieveCache {
 public:
  explicit SieveCache(std::string path);
  ~SieveCache();

  std::optional<SieveSet> get(unsigned long p, const BigInt& q, const BigInt& w) const;
  void put(const SieveSet& set);
  void flush();
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  mutable std::shared_mutex mu_;
  std::map<std::tuple<unsigned long, std::string, std::string>, SieveSet> entries_;
  bool dirty_ = false;
};

// l_set through an optional cache (pass nullptr for a plain computation).
SieveSet cached_l_set(unsigned long p, const BigInt& q, const BigInt& w, SieveCache* cache);

// The named intersections used for q = 3. The label value is the common
// multiplicative order of 3 modulo every listed w.
enum class ALabel : unsigned long {
  A5 = 5,
  A16 = 16,
  A22 = 22,
  A27 = 27,
  A34 = 34,
  A39 = 39,
  A69 = 69,
};

struct ASetConfig {
  ALabel label;
  unsigned long order;
  std::vector<unsigned long> moduli;
};

const std::vector<ASetConfig>& a_set_configs();
ALabel a_label_from_order(unsigned long order);
std::string a_label_name(ALabel label);

struct NamedASet {
  ALabel label = ALabel::A5;
  unsigned long order = 0;
  std::vector<unsigned long> moduli;
  std::vector<unsigned long> classes;  // intersection over the moduli
};

// Computes the label's l_sets (verifying the common-order invariant first)
// and intersects them.
NamedASet a_set(unsigned long p, ALabel label, SieveCache* cache = nullptr);

// All CRT combinations of one class per set; inconsistent combinations are
// dropped. r_m is the smallest non-zero value.
struct CrtScan {
  std::vector<BigInt> values;  // sorted, distinct
  std::optional<BigInt> r_m;
  BigInt modulus;  // lcm of the orders
};

CrtScan crt_min_nonzero(const std::vector<NamedASet>& sets);

// delta8 * 2^((p-1)/2) * p = 1 (mod 3), equivalently p mod 24 in {1,5,7,11}.
// Requires p > 3.
bool cong_class_filter(unsigned long p);

// Solvability of delta8 * 2^((p-1)/2) * p * v^(p-1) = 1 (mod 3^j); the k = m
// reduction with the q-terms vanishing, meaningful for m >= j.
bool mod3power_filter(unsigned long p, unsigned long j);

// No v mod 3 gives H_p(1 - delta4 v, v) = 0 (mod 3); always true for p > 3,
// a false return is a red-flag diagnostic.
bool k0_mod3_check(unsigned long p);

// Certifies that u + delta4 v = -q^k is impossible: H_p(-q^k - delta4 v, v)
// is identically 1 mod p, so it cannot equal a negative power of q.
bool negative_branch_impossible(unsigned long p, const BigInt& qk);

// Outcome of the congruence/CRT elimination of one prime.
struct EliminationReport {
  unsigned long p = 0;
  std::vector<ALabel> strategy;
  std::vector<NamedASet> sets;
  std::optional<BigInt> r_m;
  std::optional<BigInt> m_threshold;  // lower bound forced on m
  unsigned long implied_bound = 0;    // quantized exponent-bound map; 0 = none
  bool refined = false;               // continuous bound evaluation was needed
  unsigned long refined_bound = 0;    // largest non-excluded prime when refined
  bool eliminated = false;
  bool assumes_small_m_external = true;  // m <= 6 cases resolved outside the sieve
};

// Derives the m-threshold from the strategy's A-sets and maps it to the
// exponent bound: m >= 250 -> 1009, m >= 100 -> 1093, m >= 40 -> 1309.
// When the quantized bound does not already exceed p, the continuous bound
// at y >= 3^(2 m)/2 is evaluated directly (refined = true).
EliminationReport eliminate_prime(unsigned long p, const std::vector<ALabel>& strategy,
                                  SieveCache* cache = nullptr);

// Primes 1000 < p <= 3803 with p = 5 or 11 (mod 24).
std::vector<unsigned long> sweep_primes();

// The strategy families appearing in the reference tables, in the fallback
// order used for primes without a recorded per-prime strategy.
const std::vector<std::vector<ALabel>>& sweep_strategy_families();

// Full elimination sweep over sweep_primes() with the embedded per-prime
// strategies, parallelized over primes; deterministic order.
std::vector<EliminationReport> run_c2fixq_sweep(unsigned int threads,
                                                SieveCache* cache = nullptr);

}  // namespace dioph
