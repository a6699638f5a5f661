#include "zstab/linalg.hpp"

#include <algorithm>

namespace zstab {

unsigned row_reduce(Mat& m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  unsigned r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = rows;
    for (size_t i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    Rat inv = Rat(1) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

unsigned rank(Mat m) { return row_reduce(m); }

std::vector<Vec> nullspace(const Mat& m, size_t ncols) {
  Mat red = m;
  for (auto& row : red) row.resize(ncols, Rat(0));
  unsigned r = row_reduce(red);
  std::vector<long> pivot_of_col(ncols, -1);
  std::vector<size_t> pivots;
  for (unsigned i = 0; i < r; ++i) {
    for (size_t c = 0; c < ncols; ++c)
      if (red[i][c] != 0) {
        pivot_of_col[c] = static_cast<long>(i);
        pivots.push_back(c);
        break;
      }
  }
  std::vector<Vec> basis;
  for (size_t c = 0; c < ncols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    Vec v(ncols, Rat(0));
    v[c] = 1;
    for (size_t pc = 0; pc < ncols; ++pc) {
      long pr = pivot_of_col[pc];
      if (pr >= 0) v[pc] = -red[static_cast<size_t>(pr)][c];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(Mat m, Vec b) {
  size_t rows = m.size();
  if (rows == 0) return Vec{};
  size_t cols = m[0].size();
  for (size_t i = 0; i < rows; ++i) m[i].push_back(b[i]);
  unsigned r = row_reduce(m);
  Vec x(cols, Rat(0));
  for (unsigned i = 0; i < r; ++i) {
    size_t c = 0;
    while (c <= cols && m[i][c] == 0) ++c;
    if (c == cols) return std::nullopt;  // 0 = nonzero
    x[c] = m[i][cols];
  }
  return x;
}

bool in_row_span(const Mat& m, const Vec& v) {
  Mat a = m;
  unsigned r0 = row_reduce(a);
  a.push_back(v);
  return row_reduce(a) == r0;
}

}  // namespace zstab
