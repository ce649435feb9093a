#pragma once

#include <optional>
#include <vector>

#include "dioph/numth.hpp"

namespace dioph {

// Candidate solution of x^2 + q^(2m) = 2 y^p with gcd(x, y) = 1.
struct SolutionTuple {
  BigInt x;
  BigInt q;
  unsigned long m = 0;
  BigInt y;
  unsigned long p = 3;

  bool operator==(const SolutionTuple&) const = default;
};

// A coprime pair (u, v) realizing the Gaussian descent of a solution:
// u^2 + v^2 = y, u + delta4*v = sign*q^k, H_p(u,v) = sign*q^(m-k).
struct DescentWitness {
  BigInt u;
  BigInt v;
  unsigned long k = 0;
  int sign = 1;

  bool operator==(const DescentWitness&) const = default;
};

enum class KClass { K0, KM, KM1 };

// Exact equation + coprimality check.
bool verify_solution(const SolutionTuple& t);

// All descent witnesses of a verified solution, one canonical representative
// per symmetry orbit (the swap symmetry preserving (x, q^m); the max-lex
// (u, v) is kept). Throws std::invalid_argument when the tuple does not
// verify and std::logic_error if no witness exists for a verified tuple.
std::vector<DescentWitness> decompose(const SolutionTuple& t);

// Which of the three admissible k-classes the witness falls in: k = 0,
// (k = m, p != q), or (k = m-1, p = q). Anything else throws
// ContradictionError: it would contradict the structure theory, so it flags
// either a bug or a genuine counterexample.
KClass classify_k(const DescentWitness& w, unsigned long m, unsigned long p, const BigInt& q);

// Every coprime solution with q^m <= qm_max, p <= p_max, y <= y_max, found by
// testing 2 y^p - q^(2m) for squareness. Sorted by x. The (p, y) grid may be
// split across workers; results are merged deterministically.
std::vector<SolutionTuple> search_small(unsigned long qm_max, unsigned long p_max,
                                        unsigned long y_max, unsigned int threads = 1);

// For fixed y: coprime representations u^2 + v^2 = y whose linear form
// u + delta4*v is (up to sign) a power of an odd prime. Both delta4 branches
// are enumerated; one canonical (u, v) per (q, m0, delta4).
struct FixedYCandidate {
  BigInt y;
  BigInt q;
  unsigned long m0 = 1;
  BigInt u;
  BigInt v;
  int delta4 = 1;
  int sign = 1;
};

std::vector<FixedYCandidate> fixed_y_candidates(const BigInt& y);

// k = 0 construction of large solutions: a coprime pair with u^2 + v^2 = y
// and u + delta4*v = +-1 yields x = |F_p|, q = |G_p| with x^2 + q^2 = 2 y^p.
struct LargeSolution {
  BigInt x;
  BigInt q;
  bool q_is_prime = false;
};

// All distinct q values over the k = 0 pairs of y, sorted by q.
std::vector<LargeSolution> generate_large_solutions(const BigInt& y, unsigned long p);
// First of the above (smallest q), when a k = 0 pair exists.
std::optional<LargeSolution> generate_large_solution(const BigInt& y, unsigned long p);

// Coprime (u, v) with max(|u|,|v|) <= bound and |H_p(u,v)| = 1, one per
// (u,v) ~ (-u,-v) orbit, each annotated with whether u + delta4*v is a
// power 3^m, m > 0. Scans with a 2^64 wraparound Horner prefilter and
// confirms survivors exactly.
struct ThueSolution {
  BigInt u;
  BigInt v;
  bool three_power_hit = false;

  bool operator==(const ThueSolution&) const = default;
};

std::vector<ThueSolution> thue_bounded_search(unsigned long p, unsigned long bound,
                                              unsigned int threads = 1);

// r_0 = r_1 = 3, r_t = 4 r_{t-1} - r_{t-2}. Values are cross-checked against
// the closed form in Z[sqrt(3)] while being generated.
struct RecurrenceSeq {
  std::vector<BigInt> r;
};

RecurrenceSeq q3_recurrence(unsigned long t_max);

struct RecurrencePeriod {
  unsigned long period = 0;
  std::vector<unsigned long> zero_classes;  // t in [0, period) with r_t = 0 mod modulus
};

// Period of (r_t, r_{t+1}) mod modulus and the residues t with r_t = 0.
// Throws InconclusiveError when no period is found within period_bound.
RecurrencePeriod recurrence_divisibility_classes(const BigInt& modulus,
                                                 unsigned long period_bound);

// Complete resolution of x^2 + 3^(2m) = 2 y^3 by the k-case split: k = m and
// k = 0 collapse to m = 0, k = m-1 reduces to the recurrence divisibility
// argument. Returns (x, y, m) triples sorted by m.
struct Q3P3Solution {
  BigInt x;
  BigInt y;
  unsigned long m = 0;

  bool operator==(const Q3P3Solution&) const = default;
};

std::vector<Q3P3Solution> solve_q3_p3();

}  // namespace dioph
