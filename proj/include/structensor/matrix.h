#ifndef STRUCTENSOR_MATRIX_H_
#define STRUCTENSOR_MATRIX_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace structensor {

// N x T (0,1)-matrix marking the entries allowed to be nonzero.
class PatternMatrix {
 public:
  PatternMatrix() = default;
  PatternMatrix(int rows, int cols, bool value = false);

  // Throws InvalidInstance on ragged rows or entries outside {0,1}.
  static PatternMatrix FromRows(const std::vector<std::vector<int>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool operator()(int n, int j) const {
    return cells_[static_cast<std::size_t>(n) * cols_ + j] != 0;
  }
  void Set(int n, int j, bool value) {
    cells_[static_cast<std::size_t>(n) * cols_ + j] = value ? 1 : 0;
  }

  std::int64_t RowCount(int n) const;
  std::int64_t ColumnCount(int j) const;
  std::int64_t Total() const;
  bool ColumnsEqual(int a, int b) const;
  bool RowHasConsecutiveOnes(int n) const;

  std::vector<std::vector<int>> ToRows() const;

  bool operator==(const PatternMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint8_t> cells_;
};

// Dense N x T integer matrix; completions and flow extractions.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols, std::int64_t value = 0)
      : rows_(rows),
        cols_(cols),
        cells_(static_cast<std::size_t>(rows) * cols, value) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::int64_t& operator()(int n, int j) {
    return cells_[static_cast<std::size_t>(n) * cols_ + j];
  }
  std::int64_t operator()(int n, int j) const {
    return cells_[static_cast<std::size_t>(n) * cols_ + j];
  }

  std::int64_t RowSum(int n) const;
  std::int64_t ColumnSum(int j) const;

  bool operator==(const IntMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> cells_;
};

}  // namespace structensor

#endif  // STRUCTENSOR_MATRIX_H_
