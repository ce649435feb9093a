#include "dioph/descent.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <thread>
#include <tuple>

#include "dioph/hpoly.hpp"

namespace dioph {

bool verify_solution(const SolutionTuple& t) {
  if (t.x < 1 || t.y < 1) return false;
  if (!is_odd_prime(t.q) || t.p < 3 || !is_prime(BigInt(t.p))) return false;
  if (gcd(t.x, t.y) != 1) return false;
  BigInt qm = pow_ui(t.q, t.m);
  return t.x * t.x + qm * qm == 2 * pow_ui(t.y, t.p);
}

namespace {

// Swap symmetry preserving G_p(u,v) = +q^m: (v,u) when p = 1 (mod 4),
// (-v,-u) when p = 3 (mod 4).
DescentWitness swap_variant(const DescentWitness& w, unsigned long p) {
  DescentWitness s = w;
  if (p % 4 == 1) {
    s.u = w.v;
    s.v = w.u;
  } else {
    s.u = -w.v;
    s.v = -w.u;
  }
  return s;
}

bool lex_less(const DescentWitness& a, const DescentWitness& b) {
  if (a.u != b.u) return a.u < b.u;
  return a.v < b.v;
}

}  // namespace

std::vector<DescentWitness> decompose(const SolutionTuple& t) {
  if (!verify_solution(t)) throw std::invalid_argument("decompose: tuple does not verify");
  int d4 = delta4(t.p);
  BigInt qm = pow_ui(t.q, t.m);
  std::vector<DescentWitness> raw;
  BigInt u = 0;
  while (u * u <= t.y) {
    BigInt v2 = t.y - u * u;
    if (auto v = is_perfect_square(v2)) {
      for (const BigInt& uu : {u, BigInt(-u)}) {
        for (const BigInt& vv : {*v, BigInt(-*v)}) {
          if (gcd(uu, vv) != 1) continue;
          auto [f, g] = eval_FG(uu, vv, t.p);
          if (g != qm) continue;
          if (abs(f) != t.x) throw std::logic_error("decompose: |F| does not match x");
          BigInt lin = uu + d4 * vv;
          int sign = lin < 0 ? -1 : 1;
          auto k = power_exponent(abs(lin), t.q);
          if (!k) throw std::logic_error("decompose: u + delta4*v is not a power of q");
          raw.push_back(DescentWitness{uu, vv, *k, sign});
          if (u == 0 || *v == 0) break;  // avoid double-counting +-0
        }
        if (u == 0) break;
      }
    }
    ++u;
  }
  // One representative per swap orbit, max-lex.
  std::vector<DescentWitness> out;
  for (const auto& w : raw) {
    DescentWitness other = swap_variant(w, t.p);
    if (std::find(raw.begin(), raw.end(), other) != raw.end() && lex_less(w, other)) continue;
    out.push_back(w);
  }
  std::sort(out.begin(), out.end(), [](const DescentWitness& a, const DescentWitness& b) {
    if (a.k != b.k) return a.k < b.k;
    return lex_less(a, b);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw std::logic_error("decompose: no witness for a verified solution");
  return out;
}

KClass classify_k(const DescentWitness& w, unsigned long m, unsigned long p, const BigInt& q) {
  if (w.k == 0) return KClass::K0;
  if (w.k == m && q != p) return KClass::KM;
  if (w.k + 1 == m && q == p) return KClass::KM1;
  throw ContradictionError("classify_k: witness violates the admissible k-classes");
}

namespace {

struct PrimePower {
  BigInt q;
  unsigned long m;
  BigInt q2m;
};

std::vector<PrimePower> odd_prime_powers_up_to(unsigned long qm_max) {
  std::vector<PrimePower> pps;
  for (unsigned long q : odd_primes_up_to(qm_max)) {
    BigInt qm = q;
    unsigned long m = 1;
    while (qm <= qm_max) {
      pps.push_back({BigInt(q), m, qm * qm});
      qm *= q;
      ++m;
    }
  }
  std::sort(pps.begin(), pps.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.q2m < b.q2m; });
  return pps;
}

}  // namespace

std::vector<SolutionTuple> search_small(unsigned long qm_max, unsigned long p_max,
                                        unsigned long y_max, unsigned int threads) {
  if (qm_max < 1 || p_max < 3 || y_max < 1)
    throw std::invalid_argument("search_small: bounds must be positive");
  std::vector<PrimePower> pps = odd_prime_powers_up_to(qm_max);
  std::vector<unsigned long> ps = odd_primes_up_to(p_max);
  if (threads < 1) threads = 1;

  auto scan_rows = [&](unsigned long y_lo, unsigned long y_hi, std::vector<SolutionTuple>& out) {
    for (unsigned long p : ps) {
      for (unsigned long y = y_lo; y <= y_hi; ++y) {
        BigInt target = 2 * pow_ui(BigInt(y), p);
        for (const PrimePower& pp : pps) {
          if (pp.q2m >= target) break;
          BigInt x2 = target - pp.q2m;
          if (auto x = is_perfect_square(x2)) {
            if (*x >= 1 && gcd(*x, BigInt(y)) == 1)
              out.push_back(SolutionTuple{*x, pp.q, pp.m, BigInt(y), p});
          }
        }
      }
    }
  };

  std::vector<SolutionTuple> all;
  if (threads == 1) {
    scan_rows(1, y_max, all);
  } else {
    std::vector<std::vector<SolutionTuple>> parts(threads);
    std::vector<std::thread> workers;
    unsigned long chunk = (y_max + threads - 1) / threads;
    for (unsigned int i = 0; i < threads; ++i) {
      unsigned long lo = 1 + i * chunk;
      unsigned long hi = std::min<unsigned long>(y_max, (i + 1) * chunk);
      if (lo > hi) continue;
      workers.emplace_back([&, lo, hi, i] { scan_rows(lo, hi, parts[i]); });
    }
    for (auto& w : workers) w.join();
    for (auto& part : parts) all.insert(all.end(), part.begin(), part.end());
  }
  std::sort(all.begin(), all.end(), [](const SolutionTuple& a, const SolutionTuple& b) {
    return std::tie(a.x, a.q, a.m, a.y, a.p) < std::tie(b.x, b.q, b.m, b.y, b.p);
  });
  return all;
}

std::vector<FixedYCandidate> fixed_y_candidates(const BigInt& y) {
  if (y < 2) throw std::invalid_argument("fixed_y_candidates: y must be >= 2");
  std::vector<FixedYCandidate> out;
  BigInt a = 0;
  while (a * a <= y) {
    BigInt b2 = y - a * a;
    if (auto b = is_perfect_square(b2)) {
      if (gcd(a, *b) == 1) {
        for (const BigInt& uu : {a, BigInt(-a)}) {
          for (const BigInt& vv : {*b, BigInt(-*b)}) {
            if (gcd(uu, vv) != 1) continue;
            for (int d4 : {1, -1}) {
              BigInt lin = uu + d4 * vv;
              if (lin == 0) continue;
              BigInt mag = abs(lin);
              if (mag < 3) continue;
              // mag must be q^m0 for an odd prime q, m0 >= 1
              BigInt q = mag;
              unsigned long m0 = 1;
              if (!is_prime(q)) {
                bool found = false;
                for (unsigned long e = 2; e < 64; ++e) {
                  BigInt root;
                  if (mpz_root(root.get_mpz_t(), mag.get_mpz_t(), e) != 0 && is_odd_prime(root)) {
                    q = root;
                    m0 = e;
                    found = true;
                    break;
                  }
                }
                if (!found) continue;
              }
              if (q == 2) continue;
              out.push_back(FixedYCandidate{y, q, m0, uu, vv, d4, lin < 0 ? -1 : 1});
            }
            if (a == 0 || *b == 0) break;
          }
          if (a == 0) break;
        }
      }
    }
    ++a;
  }
  // One canonical representative (max-lex (u, v)) per (q, m0, delta4).
  std::map<std::tuple<BigInt, unsigned long, int>, FixedYCandidate> best;
  for (const auto& c : out) {
    auto key = std::make_tuple(c.q, c.m0, c.delta4);
    auto it = best.find(key);
    if (it == best.end() || c.u > it->second.u ||
        (c.u == it->second.u && c.v > it->second.v))
      best[key] = c;
  }
  std::vector<FixedYCandidate> dedup;
  for (auto& [key, c] : best) dedup.push_back(c);
  return dedup;
}

std::vector<LargeSolution> generate_large_solutions(const BigInt& y, unsigned long p) {
  int d4 = delta4(p);
  std::vector<LargeSolution> out;
  std::set<BigInt> seen;
  BigInt a = 0;
  while (a * a <= y) {
    BigInt b2 = y - a * a;
    if (auto b = is_perfect_square(b2)) {
      for (const BigInt& uu : {a, BigInt(-a)}) {
        for (const BigInt& vv : {*b, BigInt(-*b)}) {
          if (gcd(uu, vv) != 1) continue;
          if (abs(uu + d4 * vv) != 1) continue;
          auto [f, g] = eval_FG(uu, vv, p);
          BigInt x = abs(f), q = abs(g);
          if (x * x + q * q != 2 * pow_ui(y, p))
            throw std::logic_error("generate_large_solutions: identity check failed");
          if (seen.insert(q).second) out.push_back(LargeSolution{x, q, is_prime(q)});
          if (a == 0 || *b == 0) break;
        }
        if (a == 0) break;
      }
    }
    ++a;
  }
  std::sort(out.begin(), out.end(),
            [](const LargeSolution& l, const LargeSolution& r) { return l.q < r.q; });
  return out;
}

std::optional<LargeSolution> generate_large_solution(const BigInt& y, unsigned long p) {
  auto all = generate_large_solutions(y, p);
  if (all.empty()) return std::nullopt;
  return all.front();
}

namespace {

// Two's-complement wrap of an exact integer into uint64, for the Horner
// prefilter: H = +-1 implies H = +-1 mod 2^64.
uint64_t wrap_u64(const BigInt& v) {
  BigInt r;
  mpz_fdiv_r_2exp(r.get_mpz_t(), v.get_mpz_t(), 64);
  uint64_t lo = 0;
  mpz_export(&lo, nullptr, -1, sizeof(uint64_t), 0, 0, r.get_mpz_t());
  return lo;
}

bool is_three_power_hit(const BigInt& u, const BigInt& v, int d4) {
  BigInt lin = abs(u + d4 * v);
  if (lin < 3) return false;
  auto e = power_exponent(lin, BigInt(3));
  return e.has_value() && *e >= 1;
}

}  // namespace

std::vector<ThueSolution> thue_bounded_search(unsigned long p, unsigned long bound,
                                              unsigned int threads) {
  if (bound < 1) throw std::invalid_argument("thue_bounded_search: bound must be >= 1");
  int d4 = delta4(p);
  std::vector<BigInt> coeffs = hp_bivariate(p);  // index j: u^(p-1-j) v^j
  size_t d = coeffs.size() - 1;
  std::vector<uint64_t> cw(coeffs.size());
  for (size_t j = 0; j < coeffs.size(); ++j) cw[j] = wrap_u64(coeffs[j]);
  if (threads < 1) threads = 1;

  auto exact_abs_one = [&](long u, long v) {
    BigInt bu(u), bv(v), vp = 1;
    std::vector<BigInt> vpows(d + 1);
    for (size_t j = 0; j <= d; ++j) {
      vpows[j] = vp;
      vp *= bv;
    }
    BigInt acc = coeffs[0];
    for (size_t j = 1; j <= d; ++j) acc = acc * bu + coeffs[j] * vpows[j];
    return abs(acc) == 1;
  };

  auto scan = [&](long v_lo, long v_hi, std::vector<ThueSolution>& out) {
    std::vector<uint64_t> vj(d + 1);
    for (long v = v_lo; v <= v_hi; ++v) {
      uint64_t vw = static_cast<uint64_t>(v);
      uint64_t vp = 1;
      for (size_t j = 0; j <= d; ++j) {
        vj[j] = cw[j] * vp;
        vp *= vw;
      }
      for (long u = 1; u <= long(bound); ++u) {
        uint64_t uw = static_cast<uint64_t>(u);
        uint64_t acc = vj[0];
        for (size_t j = 1; j <= d; ++j) acc = acc * uw + vj[j];
        if (acc == 1 || acc == ~uint64_t(0)) {
          BigInt bu(u), bv(v);
          if (gcd(bu, bv) == 1 && exact_abs_one(u, v))
            out.push_back(ThueSolution{bu, bv, is_three_power_hit(bu, bv, d4)});
        }
      }
    }
  };

  std::vector<ThueSolution> all;
  long lo = -long(bound), hi = long(bound);
  if (threads == 1) {
    scan(lo, hi, all);
  } else {
    std::vector<std::vector<ThueSolution>> parts(threads);
    std::vector<std::thread> workers;
    long total = hi - lo + 1;
    long chunk = (total + threads - 1) / threads;
    for (unsigned int i = 0; i < threads; ++i) {
      long a = lo + long(i) * chunk;
      long b = std::min(hi, a + chunk - 1);
      if (a > b) continue;
      workers.emplace_back([&, a, b, i] { scan(a, b, parts[i]); });
    }
    for (auto& w : workers) w.join();
    for (auto& part : parts) all.insert(all.end(), part.begin(), part.end());
  }
  // Canonical orbit representative u > 0 already enforced by scanning u >= 1;
  // add the (0, 1) solution explicitly.
  BigInt h01 = coeffs[d];
  if (abs(h01) == 1)
    all.push_back(ThueSolution{BigInt(0), BigInt(1), is_three_power_hit(BigInt(0), BigInt(1), d4)});
  std::sort(all.begin(), all.end(), [](const ThueSolution& a, const ThueSolution& b) {
    BigInt ma = std::max(abs(a.u), abs(a.v)), mb = std::max(abs(b.u), abs(b.v));
    if (ma != mb) return ma < mb;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  });
  return all;
}

namespace {

// a + b*sqrt(3)
struct Quad {
  BigInt a;
  BigInt b;

  Quad operator*(const Quad& o) const {
    return {a * o.a + 3 * b * o.b, a * o.b + b * o.a};
  }
};

// (3 + sqrt3)(2 + sqrt3)^(t-1); its rational part is r_t.
BigInt closed_form_r(unsigned long t) {
  Quad base{3, 1};
  Quad pw{1, 0};
  if (t == 0) {
    pw = Quad{2, -1};  // (2 + sqrt3)^(-1)
  } else {
    Quad step{2, 1};
    for (unsigned long i = 1; i < t; ++i) pw = pw * step;
  }
  return (base * pw).a;
}

}  // namespace

RecurrenceSeq q3_recurrence(unsigned long t_max) {
  if (t_max < 1) throw std::invalid_argument("q3_recurrence: t_max must be >= 1");
  RecurrenceSeq seq;
  seq.r.resize(t_max + 1);
  seq.r[0] = 3;
  seq.r[1] = 3;
  for (unsigned long t = 2; t <= t_max; ++t) seq.r[t] = 4 * seq.r[t - 1] - seq.r[t - 2];
  // Cross-check against the closed form at both ends and a middle sample.
  for (unsigned long t : {0ul, 1ul, t_max / 2, t_max})
    if (seq.r[t] != closed_form_r(t))
      throw std::logic_error("q3_recurrence: closed form disagrees with recurrence");
  return seq;
}

RecurrencePeriod recurrence_divisibility_classes(const BigInt& modulus,
                                                 unsigned long period_bound) {
  if (modulus < 2) throw std::invalid_argument("recurrence_divisibility_classes: modulus >= 2");
  BigInt r0 = BigInt(3) % modulus, r1 = BigInt(3) % modulus;
  BigInt a = r0, b = r1;
  std::vector<unsigned long> zeros;
  if (a == 0) zeros.push_back(0);
  for (unsigned long t = 1; t <= period_bound + 1; ++t) {
    // state (a, b) = (r_{t-1}, r_t)
    if (t >= 2 && a == r0 && b == r1) {
      // period t-1 found; zeros collected so far include indices < t-1
      RecurrencePeriod out;
      out.period = t - 1;
      for (unsigned long z : zeros)
        if (z < out.period) out.zero_classes.push_back(z);
      return out;
    }
    if (b == 0 && t <= period_bound) zeros.push_back(t);
    BigInt next = (4 * b - a) % modulus;
    if (next < 0) next += modulus;
    a = b;
    b = next;
  }
  throw InconclusiveError("recurrence_divisibility_classes: no period within bound");
}

std::vector<Q3P3Solution> solve_q3_p3() {
  std::vector<Q3P3Solution> out;
  // k = m and k = 0: 6v^2 +- 6v + 1 = +-1 forces m = 0; integer roots lie in
  // |v| <= 1 (|6v^2| - 6|v| - 2 > 0 beyond).
  bool found_m0 = false;
  for (long v = -1; v <= 1; ++v)
    for (int s1 : {1, -1})
      for (int s2 : {1, -1})
        if (6 * v * v + 6 * s1 * v + 1 == s2) found_m0 = true;
  if (found_m0) out.push_back(Q3P3Solution{BigInt(1), BigInt(1), 0});

  // k = m-1: r_t = 3^(m-1). 27 | r_t and 17 | r_t hold for the same classes
  // of t, so a power of three above 9 would be divisible by 17; only r_t in
  // {3, 9} remain, and the sequence grows strictly past t = 2.
  RecurrencePeriod p27 = recurrence_divisibility_classes(BigInt(27), 1000);
  RecurrencePeriod p17 = recurrence_divisibility_classes(BigInt(17), 1000);
  if (p27.zero_classes != p17.zero_classes || p27.period != p17.period)
    throw std::logic_error("solve_q3_p3: divisibility class pattern mismatch");

  RecurrenceSeq seq = q3_recurrence(8);
  std::set<std::pair<BigInt, BigInt>> seen;
  for (unsigned long t = 0; t < 4; ++t) {
    auto e = power_exponent(seq.r[t], BigInt(3));
    if (!e || *e < 1) continue;
    unsigned long m = *e + 1;
    // Parametrized pair: u = -(rational part of (2+sqrt3)^(t-1)),
    // v = rational part of (2+sqrt3)^t, with epsilon = +1.
    Quad step{2, 1};
    Quad pw_prev = (t == 0) ? Quad{2, -1} : [&] {
      Quad w{1, 0};
      for (unsigned long i = 1; i < t; ++i) w = w * step;
      return w;
    }();
    Quad pw_t = pw_prev * step;
    BigInt u = -pw_prev.a, v = pw_t.a;
    if (u - v != -pow_ui(BigInt(3), m - 1))
      throw std::logic_error("solve_q3_p3: parametrization check failed");
    BigInt x = abs(eval_FG(u, v, 3).first);
    BigInt y = u * u + v * v;
    if (seen.insert({x, y}).second) out.push_back(Q3P3Solution{x, y, m});
  }
  std::sort(out.begin(), out.end(),
            [](const Q3P3Solution& a, const Q3P3Solution& b) { return a.m < b.m; });
  return out;
}

}  // namespace dioph
