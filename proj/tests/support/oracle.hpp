#pragma once

// Reference implementations on plain integer vectors, written from the
// definitions without going through the library. kMany stands for the
// symbolic count.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <string_view>

#include "wht/hallmark.hpp"

namespace oracle {

inline constexpr int kMany = -1;
using Vec = std::array<int, 12>;

inline bool positive(int c) { return c != 0; }

// 0 = unclassified, 1..4 = Class I..IV.
inline int prose_class(const Vec& v) {
  const bool dt = positive(v[0]), dg = positive(v[1]), di = positive(v[2]);
  const bool tt = positive(v[3]), tg = positive(v[4]), ti = positive(v[5]);
  const bool ot = positive(v[6]), og = positive(v[7]);
  if ((dt || dg) && !di) return 1;
  if ((dt || dg) && di) return 2;
  if (di && !dt && !dg && (tt || tg)) return 3;
  if (!dt && !dg && !di && !tt && !tg && !ti && (ot || og)) return 4;
  return 0;
}

// Table rows as strings; '+' positive, '0' zero, '*' anything.
inline constexpr std::array<std::pair<int, std::string_view>, 8> kRows = {{
    {1, "+00*********"},
    {1, "0+0*********"},
    {2, "+0+*********"},
    {2, "0++*********"},
    {3, "00+0+*******"},
    {3, "00++0*******"},
    {4, "000000+0****"},
    {4, "0000000+****"},
}};

inline int table_class(const Vec& v) {
  for (const auto& [cls, row] : kRows) {
    bool ok = true;
    for (std::size_t i = 0; i < 12 && ok; ++i) {
      if (row[i] == '+') ok = positive(v[i]);
      if (row[i] == '0') ok = !positive(v[i]);
    }
    if (ok) return cls;
  }
  return 0;
}

inline std::uint64_t l1(const Vec& a, const Vec& b) {
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < 12; ++i) sum += static_cast<std::uint64_t>(std::abs(a[i] - b[i]));
  return sum;
}

inline unsigned hamming_of_positivity(const Vec& a, const Vec& b) {
  unsigned n = 0;
  for (std::size_t i = 0; i < 12; ++i) n += positive(a[i]) != positive(b[i]);
  return n;
}

inline wht::Hallmark to_hallmark(const Vec& v) {
  wht::Hallmark h;
  for (std::size_t i = 0; i < 12; ++i) {
    h.components[i] = v[i] == kMany ? wht::Count::many() : wht::Count::exact(static_cast<std::uint64_t>(v[i]));
  }
  return h;
}

}  // namespace oracle
