#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace qhs {

// Letter multi-index over indices 0..n (n <= 3), 8 bits per slot.
using MIdx = uint32_t;

inline int midx_get(MIdx m, int i) { return (m >> (8 * i)) & 0xff; }

inline MIdx midx_set(MIdx m, int i, int v) {
  if (v < 0 || v > 255) throw std::overflow_error("letter exponent out of range");
  return (m & ~(MIdx(0xff) << (8 * i))) | (MIdx(v) << (8 * i));
}

inline MIdx midx_unit(int i) { return MIdx(1) << (8 * i); }

inline int midx_total(MIdx m) {
  int s = 0;
  for (int i = 0; i < 4; ++i) s += midx_get(m, i);
  return s;
}

// number of (left,right) pairs with left index > right index
inline long midx_inversions(MIdx left, MIdx right) {
  long inv = 0;
  for (int i = 1; i < 4; ++i)
    for (int j = 0; j < i; ++j) inv += (long)midx_get(left, i) * midx_get(right, j);
  return inv;
}

// pairs within one block over distinct indices
inline long midx_self_inversions(MIdx m) {
  long inv = 0;
  for (int i = 1; i < 4; ++i)
    for (int j = 0; j < i; ++j) inv += (long)midx_get(m, i) * midx_get(m, j);
  return inv;
}

inline MIdx midx_add(MIdx a, MIdx b) {
  MIdx r = 0;
  for (int i = 0; i < 4; ++i) r = midx_set(r, i, midx_get(a, i) + midx_get(b, i));
  return r;
}

// Commutative monomial in x_0..x_3 (slots 0..3) and xi_0..xi_3 (slots 4..7).
// Exponents are stored biased so a bounded negative range is representable
// (needed for xi_1 offsets against a formal power).
using XMon = uint64_t;
inline constexpr int kXBias = 32;
inline constexpr XMon kXOne = 0x2020202020202020ull;  // all slots at bias

inline int xmon_get(XMon m, int s) { return int((m >> (8 * s)) & 0xff) - kXBias; }

inline XMon xmon_set(XMon m, int s, int v) {
  int b = v + kXBias;
  if (b < 0 || b > 255) throw std::overflow_error("monomial exponent out of range");
  return (m & ~(XMon(0xff) << (8 * s))) | (XMon(b) << (8 * s));
}

inline XMon xmon_unit(int s, int e = 1) { return xmon_set(kXOne, s, e); }

inline XMon xmon_mul(XMon a, XMon b) {
  XMon r = kXOne;
  for (int s = 0; s < 8; ++s) r = xmon_set(r, s, xmon_get(a, s) + xmon_get(b, s));
  return r;
}

inline int xmon_degree(XMon m) {
  int d = 0;
  for (int s = 0; s < 8; ++s) d += xmon_get(m, s);
  return d;
}

inline constexpr int x_slot(int j) { return j; }        // x_j
inline constexpr int xi_slot(int j) { return 4 + j; }   // xi_j

}  // namespace qhs
