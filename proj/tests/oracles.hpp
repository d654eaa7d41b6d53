#ifndef SEXTIC_TESTS_ORACLES_HPP
#define SEXTIC_TESTS_ORACLES_HPP

// Reference computations used to cross-check the library. None of them calls
// the routine it checks.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <vector>

#include "sextic/fpgrp.hpp"
#include "sextic/int_matrix.hpp"
#include "sextic/multipoly.hpp"
#include "sextic/singular.hpp"
#include "sextic/upoly.hpp"

namespace oracle {

using namespace sextic;

// Sign changes on a uniform rational grid, halving the
// step until three consecutive counts agree.
inline int grid_sign_changes(const UPoly<Rational>& p, const Rational& bound) {
  int previous = -1;
  int stable = 0;
  for (int steps = 1024;; steps *= 2) {
    int changes = 0;
    int last = 0;
    for (int k = 0; k <= steps; ++k) {
      const Rational x = -bound + Rational(2) * bound * Rational(k) / Rational(steps);
      const int s = p(x).sign();
      if (s == 0) {
        ++changes;  // exact root on the grid
        last = 0;
        continue;
      }
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    stable = changes == previous ? stable + 1 : 0;
    if (stable == 2) return changes;
    previous = changes;
  }
}

inline mpz_class det3(const IntMatrix& m, const std::vector<std::size_t>& r, const std::vector<std::size_t>& c) {
  if (r.size() == 1) return m(r[0], c[0]);
  if (r.size() == 2) return m(r[0], c[0]) * m(r[1], c[1]) - m(r[0], c[1]) * m(r[1], c[0]);
  mpz_class d = 0;
  for (std::size_t j = 0; j < 3; ++j) {
    std::vector<std::size_t> cc;
    for (std::size_t k = 0; k < 3; ++k) {
      if (k != j) cc.push_back(c[k]);
    }
    const mpz_class minor = det3(m, {r[1], r[2]}, cc);
    d += (j % 2 ? -1 : 1) * m(r[0], c[j]) * minor;
  }
  return d;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Determinantal-divisor oracle: d_k = D_k / D_{k-1}, D_k = gcd of k x k minors.
inline std::vector<mpz_class> determinantal_factors(const IntMatrix& m) {
  std::vector<mpz_class> out;
  mpz_class prev = 1;
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m.rows(), k, 0, cur, rs);
    subsets(m.cols(), k, 0, cur, cs);
    mpz_class g = 0;
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        const mpz_class d = det3(m, r, c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    }
    out.push_back(g == 0 ? mpz_class(0) : mpz_class(g / prev));
    if (g != 0) prev = g;
  }
  return out;
}

using QPoly = MultiPoly<Rational>;

// Fulton's algorithm for I_0(F, G), using only
// I(F, G) = I(F, G + A F), I(F, GH) = I(F, G) + I(F, H) and I(y, G) = ord G(x, 0).
inline int ord_at_zero(const UPoly<Rational>& u) {
  int k = 0;
  while (u[static_cast<std::size_t>(k)].is_zero()) ++k;
  return k;
}

inline UPoly<Rational> on_axis(const QPoly& f) { return to_upoly(with_variables(specialize(f, 1, Rational(0)), {"x"})); }

// Does not terminate on a common component through the origin; a depth cap
// reports that case as infinite.
inline int fulton(QPoly f, QPoly g, int depth = 0) {
  if (depth > 120) throw InfiniteMultiplicityError("oracle: no termination");
  if (!f.constant_term().is_zero() || !g.constant_term().is_zero()) return 0;
  UPoly<Rational> f0 = on_axis(f);
  UPoly<Rational> g0 = on_axis(g);
  const QPoly y = QPoly::variable(f.variables(), "y");
  if (f0.is_zero() && g0.is_zero()) throw InfiniteMultiplicityError("common component y");
  if (f0.is_zero()) std::swap(f, g), std::swap(f0, g0);
  if (g0.is_zero()) return ord_at_zero(f0) + fulton(f, divide_exact(g, y), depth + 1);
  if (f0.degree() > g0.degree()) std::swap(f, g), std::swap(f0, g0);
  const int shift = g0.degree() - f0.degree();
  const QPoly xs = QPoly::monomial(f.variables(), {shift, 0}, g0.lead());
  return fulton(f, g * f0.lead() - xs * f, depth + 1);
}

// Inverse of the A_n Cartan matrix by Gauss-Jordan over Q.
inline std::vector<std::vector<Rational>> cartan_inverse(int n) {
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    a[i][i] = Rational(2);
    if (i > 0) a[i][i - 1] = Rational(-1);
    if (i + 1 < n) a[i][i + 1] = Rational(-1);
    a[i][n + i] = Rational(1);
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (a[p][c].is_zero()) ++p;
    std::swap(a[p], a[c]);
    const Rational inv = Rational(1) / a[c][c];
    for (auto& v : a[c]) v *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const Rational f = a[r][c];
      for (int k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<std::vector<Rational>> out(n);
  for (int i = 0; i < n; ++i) out[i].assign(a[i].begin() + n, a[i].end());
  return out;
}

// Naive coset enumeration. Every cyclic conjugate of every relator is
// scanned at each coset whose row changed, and coincidences are resolved by
// rebuilding the whole table from its edge list.
class NaiveEnumerator {
 public:
  explicit NaiveEnumerator(const Presentation& p) : cols_(2 * p.generators.size()) {
    rows_.push_back(blank());
    dirty_.push_back(1);
    for (const auto& r : p.relators) {
      std::vector<int> w = r.letters();
      for (std::size_t k = 0; k < w.size(); ++k) {
        conjugates_.push_back(w);
        std::rotate(w.begin(), w.begin() + 1, w.end());
      }
    }
  }

  // Returns the index, or -1 past the limit.
  int run(int limit) {
    for (;;) {
      while (pass()) {
      }
      int hole_row = -1, hole_col = -1;
      for (std::size_t c = 0; c < rows_.size() && hole_row < 0; ++c) {
        for (std::size_t x = 0; x < cols_; ++x) {
          if (rows_[c][x] < 0) {
            hole_row = static_cast<int>(c);
            hole_col = static_cast<int>(x);
            break;
          }
        }
      }
      if (hole_row < 0) return static_cast<int>(rows_.size());
      if (static_cast<int>(rows_.size()) >= limit) return -1;
      rows_.push_back(blank());
      dirty_.push_back(0);
      set(hole_row, hole_col, static_cast<int>(rows_.size()) - 1);
    }
  }

 private:
  std::vector<int> blank() const { return std::vector<int>(cols_, -1); }
  static int col(int letter) { return 2 * (std::abs(letter) - 1) + (letter < 0 ? 1 : 0); }
  void set(int c, int x, int d) {
    rows_[c][x] = d;
    rows_[d][x ^ 1] = c;
    dirty_[c] = dirty_[d] = 1;
  }

  // One sweep; true if anything changed.
  bool pass() {
    bool changed = false;
    std::vector<std::pair<int, int>> pending;
    std::vector<int> todo;
    for (std::size_t c = 0; c < rows_.size(); ++c) {
      if (dirty_[c]) todo.push_back(static_cast<int>(c));
    }
    std::fill(dirty_.begin(), dirty_.end(), 0);
    for (const int c : todo) {
      for (const auto& w : conjugates_) {
        int f = c, b = c;
        std::size_t i = 0, j = w.size();
        while (i < j && rows_[f][col(w[i])] >= 0) f = rows_[f][col(w[i++])];
        while (j > i && rows_[b][col(w[j - 1]) ^ 1] >= 0) b = rows_[b][col(w[--j]) ^ 1];
        if (i == j && f != b) pending.emplace_back(f, b);
        if (j == i + 1) {
          set(f, col(w[i]), b);
          changed = true;
        }
      }
    }
    if (!pending.empty()) collapse(pending);
    return changed || !pending.empty();
  }

  void collapse(const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> parent(rows_.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    const auto find = [&](int v) {
      while (parent[v] != v) v = parent[v];
      return v;
    };
    const auto unite = [&](int u, int v) {
      u = find(u), v = find(v);
      if (u == v) return false;
      parent[std::max(u, v)] = std::min(u, v);
      return true;
    };
    for (const auto& [a, b] : pairs) unite(a, b);
    for (bool changed = true; changed;) {
      changed = false;
      std::map<std::pair<int, int>, int> image;
      for (std::size_t c = 0; c < rows_.size(); ++c) {
        for (std::size_t x = 0; x < cols_; ++x) {
          if (rows_[c][x] < 0) continue;
          const auto key = std::make_pair(find(static_cast<int>(c)), static_cast<int>(x));
          const int d = find(rows_[c][x]);
          const auto [it, fresh] = image.emplace(key, d);
          if (!fresh && find(it->second) != d) changed |= unite(it->second, d);
        }
      }
    }
    std::map<int, int> number;
    for (std::size_t c = 0; c < rows_.size(); ++c) {
      if (find(static_cast<int>(c)) == static_cast<int>(c)) number.emplace(static_cast<int>(c), static_cast<int>(number.size()));
    }
    std::vector<std::vector<int>> next(number.size(), blank());
    for (std::size_t c = 0; c < rows_.size(); ++c) {
      for (std::size_t x = 0; x < cols_; ++x) {
        if (rows_[c][x] >= 0) next[number[find(static_cast<int>(c))]][x] = number[find(rows_[c][x])];
      }
    }
    rows_ = std::move(next);
    dirty_.assign(rows_.size(), 1);
  }

  std::vector<std::vector<int>> conjugates_;
  std::size_t cols_;
  std::vector<std::vector<int>> rows_;
  std::vector<char> dirty_;
};

inline int oracle_order(const Presentation& p, int limit = 2000) { return NaiveEnumerator(p).run(limit); }

// x -> a x + b over F_p, for a in the given multiplier subgroup.
inline MulTable affine_table(int p, const std::vector<int>& mults) {
  const int n = static_cast<int>(mults.size()) * p;
  std::map<int, int> pos;
  for (std::size_t i = 0; i < mults.size(); ++i) pos[mults[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const int a1 = mults[u / p], b1 = u % p, a2 = mults[v / p], b2 = v % p;
      // (u*v)(x) = u(v(x)) = a1 (a2 x + b2) + b1
      t[u][v] = pos.at(a1 * a2 % p) * p + (a1 * b2 + b1) % p;
    }
  }
  return MulTable(std::move(t));
}

}  // namespace oracle

#endif  // SEXTIC_TESTS_ORACLES_HPP
