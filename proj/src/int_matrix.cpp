#include "sextic/int_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace sextic {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
    for (long v : r) a_.emplace_back(v);
  }
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row(std::size_t i, std::size_t j, const mpz_class& k) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) += k * (*this)(j, c);
}

void IntMatrix::add_col(std::size_t i, std::size_t j, const mpz_class& k) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) += k * (*this)(r, j);
}

namespace {

// Moves the smallest nonzero |entry| of the trailing submatrix to (t, t).
bool place_pivot(IntMatrix& m, std::size_t t) {
  bool found = false;
  std::size_t br = 0;
  std::size_t bc = 0;
  for (std::size_t r = t; r < m.rows(); ++r) {
    for (std::size_t c = t; c < m.cols(); ++c) {
      if (m(r, c) == 0) continue;
      if (!found || abs(m(r, c)) < abs(m(br, bc))) {
        found = true;
        br = r;
        bc = c;
      }
    }
  }
  if (!found) return false;
  m.swap_rows(t, br);
  m.swap_cols(t, bc);
  return true;
}

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(IntMatrix m) {
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < n; ++t) {
    if (!place_pivot(m, t)) break;
    for (;;) {
      bool dirty = false;
      for (std::size_t r = t + 1; r < m.rows(); ++r) {
        if (m(r, t) == 0) continue;
        m.add_row(r, t, -floor_div(m(r, t), m(t, t)));
        if (m(r, t) != 0) dirty = true;
      }
      for (std::size_t c = t + 1; c < m.cols(); ++c) {
        if (m(t, c) == 0) continue;
        m.add_col(c, t, -floor_div(m(t, c), m(t, t)));
        if (m(t, c) != 0) dirty = true;
      }
      if (dirty) {
        place_pivot(m, t);
        continue;
      }
      // Divisibility: d_t must divide every later entry.
      bool fixed = false;
      for (std::size_t r = t + 1; r < m.rows() && !fixed; ++r) {
        for (std::size_t c = t + 1; c < m.cols(); ++c) {
          if (m(r, c) % m(t, t) != 0) {
            m.add_row(t, r, 1);
            fixed = true;
            break;
          }
        }
      }
      if (!fixed) break;
    }
    if (m(t, t) < 0) {
      for (std::size_t c = 0; c < m.cols(); ++c) m(t, c) = -m(t, c);
    }
  }
  SmithForm out{m, {}};
  for (std::size_t t = 0; t < n; ++t) out.invariant_factors.push_back(m(t, t));
  return out;
}

}  // namespace sextic
