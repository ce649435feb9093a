#include "dioph/expected.hpp"

#include <algorithm>
#include <numeric>

namespace dioph::expected {

const char* data_version() { return "1.0"; }

const std::vector<SolutionTuple>& lemma_small_rows() {
  static const std::vector<SolutionTuple> rows = [] {
    // (x, q, m, y, p)
    struct R {
      const char* x;
      unsigned long q, m, y, p;
    };
    const R raw[] = {
        {"3", 79, 1, 5, 5},      {"9", 13, 1, 5, 3},      {"13", 3, 2, 5, 3},
        {"55", 37, 1, 13, 3},    {"79", 3, 1, 5, 5},      {"99", 5, 1, 17, 3},
        {"161", 73, 1, 25, 3},   {"249", 307, 1, 5, 7},   {"351", 11, 2, 41, 3},
        {"545", 3, 3, 53, 3},    {"649", 181, 1, 61, 3},  {"1665", 337, 1, 113, 3},
        {"2431", 433, 1, 145, 3}, {"5291", 19, 1, 241, 3}, {"275561", 71, 1, 3361, 3},
    };
    std::vector<SolutionTuple> v;
    for (const R& r : raw)
      v.push_back(SolutionTuple{BigInt(r.x), BigInt(r.q), r.m, BigInt(r.y), r.p});
    return v;
  }();
  return rows;
}

const std::vector<RemarkRow>& remark_rows() {
  static const std::vector<RemarkRow> rows = {
      {5, 5, "79"},
      {5, 7, "307"},
      {5, 13, "42641"},
      {5, 29, "1811852719"},
      {5, 97, "2299357537036323025594528471766399"},
      {13, 7, "11003"},
      {13, 13, "13394159"},
      {13, 101, "224803637342655330236336909331037067112119583602184017999"},
      {25, 11, "69049993"},
      {25, 47, "378293055860522027254001604922967"},
      {41, 31, "4010333845016060415260441"},
  };
  return rows;
}

const std::vector<Table3Row>& table3_rows() {
  static const std::vector<Table3Row> rows = [] {
    struct R {
      unsigned long p, o1, o2;
    };
    const R raw[] = {
        {1013, 16, 27}, {1109, 16, 22}, {1181, 16, 22}, {1187, 16, 22}, {1229, 16, 22},
        {1259, 16, 22}, {1277, 16, 22}, {1283, 16, 22}, {1307, 16, 22}, {1493, 16, 22},
        {1523, 16, 22}, {1571, 5, 22},  {1613, 16, 22}, {1619, 16, 22}, {1667, 16, 22},
        {1709, 16, 22}, {1733, 16, 22}, {1787, 16, 22}, {1811, 5, 22},  {1877, 16, 27},
        {1931, 5, 22},  {1949, 16, 22}, {1973, 16, 22}, {1979, 16, 22}, {2003, 16, 22},
        {2027, 16, 22}, {2069, 16, 22}, {2099, 16, 22}, {2141, 16, 22}, {2237, 16, 22},
        {2243, 16, 22}, {2309, 16, 27}, {2333, 16, 22}, {2357, 16, 22}, {2459, 16, 22},
        {2477, 16, 22}, {2531, 5, 22},  {2579, 16, 22}, {2693, 16, 22}, {2741, 16, 27},
        {2861, 16, 22}, {2909, 16, 22}, {2957, 16, 22}, {2963, 16, 22}, {3011, 5, 22},
        {3203, 16, 22}, {3221, 16, 22}, {3323, 16, 22}, {3347, 16, 22}, {3371, 5, 22},
        {3413, 16, 22}, {3533, 16, 22}, {3677, 16, 22}, {3701, 16, 22},
    };
    std::vector<Table3Row> v;
    for (const R& r : raw) {
      unsigned long l = std::lcm(r.o1, r.o2);
      v.push_back(Table3Row{r.p, r.o1, r.o2, l});
    }
    return v;
  }();
  return rows;
}

const std::vector<Table4Row>& table4_rows() {
  static const std::vector<Table4Row> rows = {
      {1019, 384, 5, 16, 27}, {1061, 176, 5, 16, 39}, {1091, 580, 5, 16, 27},
      {1163, 586, 5, 27, 34}, {1301, 416, 5, 16, 39}, {1427, 270, 5, 27, 34},
      {1451, 340, 5, 16, 27}, {1499, 112, 5, 16, 39}, {1637, 121, 5, 27, 34},
      {1901, 304, 5, 16, 39}, {1907, 102, 5, 27, 34}, {1997, 170, 5, 27, 34},
      {2213, 170, 5, 27, 34}, {2267, 448, 5, 16, 69}, {2339, 208, 5, 16, 39},
      {2381, 44, 5, 27, 34},  {2411, 180, 5, 16, 27}, {2549, 320, 5, 16, 27},
      {2699, 640, 5, 16, 69}, {2789, 204, 5, 27, 34}, {2819, 352, 5, 16, 27},
      {2837, 131, 5, 27, 34}, {2843, 136, 5, 27, 34}, {3083, 340, 5, 27, 34},
      {3251, 580, 5, 16, 27}, {3299, 64, 5, 16, 39},  {3389, 170, 5, 27, 34},
      {3461, 116, 5, 16, 39}, {3467, 336, 5, 16, 27}, {3491, 850, 5, 27, 34},
      {3539, 112, 5, 16, 39}, {3557, 176, 5, 16, 39}, {3581, 150, 5, 27, 34},
      {3659, 112, 5, 16, 39}, {3779, 72, 5, 27, 34},  {3797, 416, 5, 16, 39},
      {3803, 136, 5, 27, 34},
  };
  return rows;
}

const std::vector<BoundRow>& baker_bounds() {
  static const std::vector<BoundRow> rows = {
      {"qm503", 3803}, {"pq", 3089}, {"m40", 1309}, {"m100", 1093}, {"m250", 1009},
  };
  return rows;
}

unsigned long liouville_bound() { return 47; }

const std::vector<unsigned long>& crt_2381_values() {
  static const std::vector<unsigned long> v = {
      0,    44,   204,  476,  486,  554,  690,  986,  1394, 1404, 1836, 1880,
      1904, 2040, 2390, 2526, 2754, 3230, 3240, 3444, 3716, 3740, 3876, 4226,
  };
  return v;
}

std::optional<std::vector<ALabel>> strategy_for(unsigned long p) {
  for (const Table3Row& r : table3_rows())
    if (r.p == p)
      return std::vector<ALabel>{a_label_from_order(r.order1), a_label_from_order(r.order2)};
  for (const Table4Row& r : table4_rows())
    if (r.p == p)
      return std::vector<ALabel>{a_label_from_order(r.order1), a_label_from_order(r.order2),
                                 a_label_from_order(r.order3)};
  return std::nullopt;
}

const std::vector<SolutionTuple>& fixed_y17_rows() {
  static const std::vector<SolutionTuple> rows = {
      SolutionTuple{BigInt(99), BigInt(5), 1, BigInt(17), 3},
  };
  return rows;
}

}  // namespace dioph::expected
