#pragma once
#include <cstdint>
#include <vector>

namespace leg {

// Square GF(2) matrix stored by columns: bit p of col[q] is <d S_q, S_p> (0-based).
struct BitMat {
  int n = 0;
  std::vector<uint32_t> col;

  BitMat() = default;
  explicit BitMat(int size) : n(size), col(size, 0) {}
  static BitMat identity(int size) {
    BitMat m(size);
    for (int i = 0; i < size; ++i) m.col[i] = 1u << i;
    return m;
  }
  bool get(int p, int q) const { return (col[q] >> p) & 1u; }
  void set(int p, int q, bool v = true) {
    if (v) col[q] |= 1u << p;
    else col[q] &= ~(1u << p);
  }
  void flip(int p, int q) { col[q] ^= 1u << p; }
  bool zero() const {
    for (uint32_t c : col)
      if (c) return false;
    return true;
  }
  bool strictly_upper() const {
    for (int q = 0; q < n; ++q)
      if (col[q] >> q) return false;
    return true;
  }
  bool operator==(const BitMat&) const = default;
};

inline BitMat operator*(const BitMat& a, const BitMat& b) {
  BitMat r(a.n);
  for (int q = 0; q < b.n; ++q) {
    uint32_t c = b.col[q], acc = 0;
    while (c) {
      int p = __builtin_ctz(c);
      acc ^= a.col[p];
      c &= c - 1;
    }
    r.col[q] = acc;
  }
  return r;
}

inline BitMat operator+(BitMat a, const BitMat& b) {
  for (int q = 0; q < a.n; ++q) a.col[q] ^= b.col[q];
  return a;
}

}  // namespace leg
