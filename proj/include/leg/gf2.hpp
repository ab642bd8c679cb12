#pragma once
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace leg {

// Dense GF(2) row over a fixed number of columns.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(int n) : n_(n), w_((n + 63) / 64, 0) {}
  int size() const { return n_; }
  bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i, bool v = true) {
    if (v) w_[i >> 6] |= uint64_t{1} << (i & 63);
    else w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }
  void flip(int i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }
  BitRow& operator^=(const BitRow& o) {
    for (size_t j = 0; j < w_.size(); ++j) w_[j] ^= o.w_[j];
    return *this;
  }
  bool any() const {
    for (uint64_t x : w_)
      if (x) return true;
    return false;
  }
  int first() const {
    for (size_t j = 0; j < w_.size(); ++j)
      if (w_[j]) return static_cast<int>(j * 64 + std::countr_zero(w_[j]));
    return -1;
  }
  bool operator==(const BitRow&) const = default;

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

// Solves rows * x = rhs. Returns one solution (free variables 0) or nullopt.
std::optional<std::vector<uint8_t>> gf2_solve(std::vector<BitRow> rows, std::vector<uint8_t> rhs, int nvars);
int gf2_rank(std::vector<BitRow> rows);

}  // namespace leg
