#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace clusterf {

/// Integer vector in Z^n: denominator vectors, exponent vectors, g-vectors.
using RootVector = std::vector<int>;

constexpr int pos_part(int x) noexcept { return x > 0 ? x : 0; }

constexpr int signum(int x) noexcept { return (x > 0) - (x < 0); }

/// Componentwise partial order: a >= b iff a - b is nonnegative.
bool dominates(const RootVector& a, const RootVector& b);

RootVector unit_vector(std::size_t n, std::size_t i);

std::string to_string(const RootVector& v);

/// Dense row-major integer matrix. Indices are 0-based throughout the library;
/// 1-based labels only appear at the JSON and CLI boundary.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, int fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  IntMatrix(std::initializer_list<std::initializer_list<int>> rows);

  static IntMatrix from_rows(const std::vector<std::vector<int>>& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  /// Top cols x cols block.
  IntMatrix principal_part() const;

  std::vector<std::vector<int>> to_rows() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<int> data_;
};

std::string to_string(const IntMatrix& m);

}  // namespace clusterf
