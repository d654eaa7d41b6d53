#ifndef SEXTIC_RESULTANT_HPP
#define SEXTIC_RESULTANT_HPP

#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "sextic/multipoly.hpp"
#include "sextic/upoly.hpp"

namespace sextic {

/// Raised when an operation's inputs are degenerate (e.g. both polynomials
/// constant in the eliminated variable).
class DegenerateInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <ExactField S>
using PolyMatrix = std::vector<std::vector<MultiPoly<S>>>;

/// Fraction-free (Bareiss) determinant over a polynomial ring. The matrix is
/// consumed; all entries must share one variable list.
template <ExactField S>
MultiPoly<S> bareiss_determinant(PolyMatrix<S> m) {
  const std::size_t n = m.size();
  if (n == 0) throw DegenerateInput("determinant of an empty matrix");
  int sign = 1;
  MultiPoly<S> prev = constant_like(m[0][0], S(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return zero_like(m[0][0]);
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly<S> v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = divide_exact(std::move(v), prev);
      }
      m[i][k] = zero_like(prev);
    }
    prev = m[k][k];
  }
  MultiPoly<S> det = std::move(m[n - 1][n - 1]);
  if (sign < 0) det = -det;
  return det;
}

/// Rank over the fraction field of the coefficient ring, by fraction-free
/// elimination with row and column pivoting.
template <ExactField S>
std::size_t bareiss_rank(PolyMatrix<S> m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  MultiPoly<S> prev = constant_like(m[0][0], S(1));
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t r = rank;
    while (r < rows && m[r][c].is_zero()) ++r;
    if (r == rows) continue;
    std::swap(m[rank], m[r]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        MultiPoly<S> v = m[i][j] * m[rank][c] - m[i][c] * m[rank][j];
        m[i][j] = divide_exact(std::move(v), prev);
      }
      m[i][c] = zero_like(prev);
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

/// Sylvester matrix of p and q with respect to variable `var`.
template <ExactField S>
PolyMatrix<S> sylvester_matrix(const MultiPoly<S>& p, const MultiPoly<S>& q, std::size_t var) {
  const auto cp = coefficients_in(p, var);
  const auto cq = coefficients_in(q, var);
  const std::size_t m = cp.size() - 1;
  const std::size_t n = cq.size() - 1;
  const std::size_t size = m + n;
  PolyMatrix<S> out(size, std::vector<MultiPoly<S>>(size, zero_like(p)));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= m; ++k) out[r][r + k] = cp[m - k];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k <= n; ++k) out[n + r][r + k] = cq[n - k];
  }
  return out;
}

/// Resultant eliminating `var`. The result lives in the same ring (var absent).
template <ExactField S>
MultiPoly<S> resultant(const MultiPoly<S>& p, const MultiPoly<S>& q, std::size_t var) {
  p.require_same_ring(q);
  if (p.is_zero() || q.is_zero()) throw DegenerateInput("resultant of a zero polynomial");
  const int m = p.degree_in(var);
  const int n = q.degree_in(var);
  if (m == 0 && n == 0) throw DegenerateInput("resultant: both polynomials constant in the variable");
  if (m == 0) return pow(p, static_cast<unsigned>(n));
  if (n == 0) return pow(q, static_cast<unsigned>(m));
  return bareiss_determinant(sylvester_matrix(p, q, var));
}

template <ExactField S>
MultiPoly<S> resultant(const MultiPoly<S>& p, const MultiPoly<S>& q, std::string_view var) {
  return resultant(p, q, p.require_index(var));
}

/// Univariate resultant.
template <ExactField S>
S resultant(const UPoly<S>& p, const UPoly<S>& q) {
  const auto mp = to_multipoly(p, "x");
  const auto mq = to_multipoly(q, "x");
  return resultant(mp, mq, std::size_t{0}).constant_term();
}

}  // namespace sextic

#endif  // SEXTIC_RESULTANT_HPP
