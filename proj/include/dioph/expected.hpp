#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dioph/descent.hpp"
#include "dioph/sieve.hpp"

// Embedded reference data: the known solution lists, elimination tables,
// exponent bounds and the large-solution table that the reproduce commands
// diff against. Shipping the data in the binary keeps reproduction runs
// self-contained and offline.
namespace dioph::expected {

const char* data_version();

// The fifteen known solutions with q^m <= 501 (x, q, m, y, p), sorted by x.
const std::vector<SolutionTuple>& lemma_small_rows();

// Large k = 0 solutions: for each (y, p) the prime q with x^2 + q^2 = 2 y^p.
struct RemarkRow {
  unsigned long y;
  unsigned long p;
  const char* q;  // decimal
};
const std::vector<RemarkRow>& remark_rows();

// Primes excluded because both A-sets equal {0}: m = 0 (mod lcm), hence
// m >= lcm of the two orders.
struct Table3Row {
  unsigned long p;
  unsigned long order1;
  unsigned long order2;
  unsigned long m_threshold;  // lcm(order1, order2)
};
const std::vector<Table3Row>& table3_rows();

// Primes excluded through the CRT minimum r_m over three A-sets.
struct Table4Row {
  unsigned long p;
  unsigned long r_m;
  unsigned long order1;
  unsigned long order2;
  unsigned long order3;
};
const std::vector<Table4Row>& table4_rows();

// The five exponent bounds and the Liouville bound.
struct BoundRow {
  const char* name;
  unsigned long bound;
};
const std::vector<BoundRow>& baker_bounds();
unsigned long liouville_bound();  // 47

// The 24 CRT values of the {A5, A27, A34} scan at p = 2381.
const std::vector<unsigned long>& crt_2381_values();

// Elimination strategy recorded for a sweep prime, when it has one.
std::optional<std::vector<ALabel>> strategy_for(unsigned long p);

// The fixed-y reference: x^2 + q^(2m) = 2*17^p has exactly (99, 5, 1, 17, 3).
const std::vector<SolutionTuple>& fixed_y17_rows();

}  // namespace dioph::expected
