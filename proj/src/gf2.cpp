#include "leg/gf2.hpp"

namespace leg {

std::optional<std::vector<uint8_t>> gf2_solve(std::vector<BitRow> rows, std::vector<uint8_t> rhs, int nvars) {
  int m = static_cast<int>(rows.size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < nvars && r < m; ++c) {
    int p = r;
    while (p < m && !rows[p].get(c)) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[r]);
    std::swap(rhs[p], rhs[r]);
    for (int i = 0; i < m; ++i)
      if (i != r && rows[i].get(c)) {
        rows[i] ^= rows[r];
        rhs[i] ^= rhs[r];
      }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < m; ++i)
    if (rhs[i]) return std::nullopt;
  std::vector<uint8_t> x(nvars, 0);
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

int gf2_rank(std::vector<BitRow> rows) {
  int rank = 0;
  for (size_t i = 0; i < rows.size(); ++i) {
    int c = rows[i].first();
    if (c < 0) continue;
    ++rank;
    for (size_t j = i + 1; j < rows.size(); ++j)
      if (rows[j].get(c)) rows[j] ^= rows[i];
  }
  return rank;
}

}  // namespace leg
