#ifndef SEXTIC_INT_MATRIX_HPP
#define SEXTIC_INT_MATRIX_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <vector>

namespace sextic {

/// Dense matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  mpz_class& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row[i] += k * row[j]
  void add_row(std::size_t i, std::size_t j, const mpz_class& k);
  /// col[i] += k * col[j]
  void add_col(std::size_t i, std::size_t j, const mpz_class& k);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> a_;
};

struct SmithForm {
  IntMatrix diagonal;
  /// min(rows, cols) diagonal entries d1 | d2 | ..., non-negative; zeros last.
  std::vector<mpz_class> invariant_factors;
};

SmithForm smith_normal_form(IntMatrix m);

}  // namespace sextic

#endif  // SEXTIC_INT_MATRIX_HPP
