#ifndef SEXTIC_UPOLY_HPP
#define SEXTIC_UPOLY_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sextic/multipoly.hpp"

namespace sextic {

/// Dense univariate polynomial, coefficients stored from degree 0 upward with
/// no trailing zeros.
template <ExactField S>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly constant(const S& c) { return UPoly(std::vector<S>{c}); }
  static UPoly x() { return UPoly(std::vector<S>{S(0), S(1)}); }
  /// x - r
  static UPoly linear_root(const S& r) { return UPoly(std::vector<S>{-r, S(1)}); }

  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] const std::vector<S>& coeffs() const { return c_; }
  [[nodiscard]] S operator[](std::size_t i) const { return i < c_.size() ? c_[i] : S(0); }
  [[nodiscard]] const S& lead() const { return c_.back(); }

  [[nodiscard]] S operator()(const S& x) const {
    S acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator*=(const S& s) {
    for (auto& c : c_) c = c * s;
    trim();
    return *this;
  }

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const S& s) { return a *= s; }
  friend UPoly operator-(UPoly a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<S> out(a.c_.size() + b.c_.size() - 1, S(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (sextic::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(out));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && sextic::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<S> c_;
};

template <ExactField S>
std::pair<UPoly<S>, UPoly<S>> divmod(const UPoly<S>& a, const UPoly<S>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly<S>{}, a};
  std::vector<S> r = a.coeffs();
  std::vector<S> q(a.degree() - b.degree() + 1, S(0));
  const S inv = S(1) / b.lead();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    const S c = r[k + db] * inv;
    q[k] = c;
    if (is_zero(c)) continue;
    for (int j = 0; j <= db; ++j) r[k + j] = r[k + j] - c * b.coeffs()[j];
  }
  return {UPoly<S>(std::move(q)), UPoly<S>(std::move(r))};
}

template <ExactField S>
UPoly<S> operator%(const UPoly<S>& a, const UPoly<S>& b) {
  return divmod(a, b).second;
}

template <ExactField S>
UPoly<S> operator/(const UPoly<S>& a, const UPoly<S>& b) {
  return divmod(a, b).first;
}

template <ExactField S>
UPoly<S> monic(const UPoly<S>& p) {
  if (p.is_zero()) return p;
  return p * (S(1) / p.lead());
}

/// Monic gcd; gcd(0, 0) = 0.
template <ExactField S>
UPoly<S> gcd(UPoly<S> a, UPoly<S> b) {
  while (!b.is_zero()) {
    UPoly<S> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

template <ExactField S>
UPoly<S> derivative(const UPoly<S>& p) {
  if (p.degree() <= 0) return {};
  std::vector<S> out(p.degree());
  for (int i = 1; i <= p.degree(); ++i) out[i - 1] = p.coeffs()[i] * S(i);
  return UPoly<S>(std::move(out));
}

template <ExactField S>
UPoly<S> pow(const UPoly<S>& p, unsigned e) {
  UPoly<S> result = UPoly<S>::constant(S(1));
  for (unsigned i = 0; i < e; ++i) result = result * p;
  return result;
}

/// p / gcd(p, p'), monic.
template <ExactField S>
UPoly<S> squarefree_part(const UPoly<S>& p) {
  if (p.degree() <= 0) return monic(p);
  return monic(p / gcd(p, derivative(p)));
}

/// Yun's squarefree factorisation: p = lead * prod f_i^i with f_i monic,
/// squarefree and pairwise coprime. Only nonconstant factors are returned.
template <ExactField S>
std::vector<std::pair<UPoly<S>, int>> squarefree_factorization(const UPoly<S>& p) {
  std::vector<std::pair<UPoly<S>, int>> out;
  if (p.degree() <= 0) return out;
  const UPoly<S> dp = derivative(p);
  UPoly<S> a = gcd(p, dp);
  UPoly<S> b = p / a;
  UPoly<S> c = dp / a;
  UPoly<S> d = c - derivative(b);
  for (int i = 1; b.degree() > 0; ++i) {
    const UPoly<S> f = gcd(b, d);
    b = b / f;
    c = d / f;
    d = c - derivative(b);
    if (f.degree() > 0) out.emplace_back(monic(f), i);
  }
  return out;
}

/// Multiplicity of r as a root of p (0 if not a root); p nonzero.
template <ExactField S>
int root_multiplicity(UPoly<S> p, const S& r) {
  int m = 0;
  const UPoly<S> lin = UPoly<S>::linear_root(r);
  while (!p.is_zero() && is_zero(p(r))) {
    p = p / lin;
    ++m;
  }
  return m;
}

/// Univariate view of a MultiPoly in which only `var` occurs.
template <ExactField S>
UPoly<S> to_upoly(const MultiPoly<S>& p, std::size_t var) {
  std::vector<S> c(std::max(p.degree_in(var) + 1, 0), S(0));
  for (const auto& [e, coef] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i != var && e[i] != 0) throw DomainError("to_upoly: polynomial involves other variables");
    }
    c[e[var]] = coef;
  }
  return UPoly<S>(std::move(c));
}

template <ExactField S>
UPoly<S> to_upoly(const MultiPoly<S>& p) {
  if (p.num_vars() != 1) throw DomainError("to_upoly: expected a univariate polynomial ring");
  return to_upoly(p, 0);
}

template <ExactField S>
MultiPoly<S> to_multipoly(const UPoly<S>& p, const VariableList& vars, std::size_t var) {
  MultiPoly<S> out(vars);
  for (int k = 0; k <= p.degree(); ++k) {
    Exponents e(vars.size(), 0);
    e[var] = k;
    out.add_term(std::move(e), p.coeffs()[k]);
  }
  return out;
}

template <ExactField S>
MultiPoly<S> to_multipoly(const UPoly<S>& p, const std::string& var) {
  return to_multipoly(p, VariableList{var}, 0);
}

/// Coprime integer coefficients, positive leading coefficient.
UPoly<Rational> integer_primitive(const UPoly<Rational>& p);

inline UPoly<EisensteinRational> promote(const UPoly<Rational>& p) {
  std::vector<EisensteinRational> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return UPoly<EisensteinRational>(std::move(c));
}

}  // namespace sextic

#endif  // SEXTIC_UPOLY_HPP
