#include "structensor/matrix.h"

#include <numeric>

#include "structensor/errors.h"

namespace structensor {

PatternMatrix::PatternMatrix(int rows, int cols, bool value)
    : rows_(rows),
      cols_(cols),
      cells_(static_cast<std::size_t>(rows) * cols, value ? 1 : 0) {
  if (rows < 0 || cols < 0) throw InvalidInstance("negative pattern size");
}

PatternMatrix PatternMatrix::FromRows(
    const std::vector<std::vector<int>>& rows) {
  const int n_rows = static_cast<int>(rows.size());
  const int n_cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  PatternMatrix f(n_rows, n_cols);
  for (int n = 0; n < n_rows; ++n) {
    if (static_cast<int>(rows[n].size()) != n_cols) {
      throw InvalidInstance("pattern row " + std::to_string(n + 1) +
                            " has the wrong length");
    }
    for (int j = 0; j < n_cols; ++j) {
      const int v = rows[n][j];
      if (v != 0 && v != 1) {
        throw InvalidInstance("pattern entries must be 0 or 1");
      }
      f.Set(n, j, v == 1);
    }
  }
  return f;
}

std::int64_t PatternMatrix::RowCount(int n) const {
  std::int64_t c = 0;
  for (int j = 0; j < cols_; ++j) c += (*this)(n, j);
  return c;
}

std::int64_t PatternMatrix::ColumnCount(int j) const {
  std::int64_t c = 0;
  for (int n = 0; n < rows_; ++n) c += (*this)(n, j);
  return c;
}

std::int64_t PatternMatrix::Total() const {
  return std::accumulate(cells_.begin(), cells_.end(), std::int64_t{0});
}

bool PatternMatrix::ColumnsEqual(int a, int b) const {
  for (int n = 0; n < rows_; ++n) {
    if ((*this)(n, a) != (*this)(n, b)) return false;
  }
  return true;
}

bool PatternMatrix::RowHasConsecutiveOnes(int n) const {
  int runs = 0;
  for (int j = 0; j < cols_; ++j) {
    if ((*this)(n, j) && (j == 0 || !(*this)(n, j - 1))) ++runs;
  }
  return runs <= 1;
}

std::vector<std::vector<int>> PatternMatrix::ToRows() const {
  std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_, 0));
  for (int n = 0; n < rows_; ++n) {
    for (int j = 0; j < cols_; ++j) out[n][j] = (*this)(n, j) ? 1 : 0;
  }
  return out;
}

std::int64_t IntMatrix::RowSum(int n) const {
  std::int64_t s = 0;
  for (int j = 0; j < cols_; ++j) s += (*this)(n, j);
  return s;
}

std::int64_t IntMatrix::ColumnSum(int j) const {
  std::int64_t s = 0;
  for (int n = 0; n < rows_; ++n) s += (*this)(n, j);
  return s;
}

}  // namespace structensor
