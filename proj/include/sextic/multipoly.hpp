#ifndef SEXTIC_MULTIPOLY_HPP
#define SEXTIC_MULTIPOLY_HPP

#include <algorithm>
#include <concepts>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sextic/eisenstein.hpp"
#include "sextic/rational.hpp"

namespace sextic {

/// Exact field used as a coefficient domain.
template <class S>
concept ExactField = requires(S a, S b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a == b } -> std::convertible_to<bool>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { to_string(a) } -> std::convertible_to<std::string>;
  S(0);
  S(1);
};

using Exponents = std::vector<int>;
using VariableList = std::vector<std::string>;

inline int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Graded lexicographic order, largest monomial first.
struct GrlexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

/// Sparse polynomial over S in an ordered list of named variables. Terms are
/// kept in descending graded-lex order and never store a zero coefficient.
template <ExactField S>
class MultiPoly {
 public:
  using Scalar = S;
  using Terms = std::map<Exponents, S, GrlexDescending>;

  MultiPoly() : vars_(std::make_shared<const VariableList>()) {}
  explicit MultiPoly(VariableList vars) : vars_(std::make_shared<const VariableList>(std::move(vars))) {}
  MultiPoly(std::shared_ptr<const VariableList> vars, Terms terms) : vars_(std::move(vars)), terms_(std::move(terms)) {
    purge();
  }

  static MultiPoly constant(VariableList vars, const S& c) {
    MultiPoly p(std::move(vars));
    p.add_term(Exponents(p.num_vars(), 0), c);
    return p;
  }

  static MultiPoly variable(VariableList vars, std::string_view name) {
    MultiPoly p(std::move(vars));
    Exponents e(p.num_vars(), 0);
    e[p.require_index(name)] = 1;
    p.add_term(std::move(e), S(1));
    return p;
  }

  static MultiPoly monomial(VariableList vars, Exponents e, const S& c) {
    MultiPoly p(std::move(vars));
    if (e.size() != p.num_vars()) throw DomainError("exponent vector length does not match variable count");
    p.add_term(std::move(e), c);
    return p;
  }

  [[nodiscard]] const VariableList& variables() const { return *vars_; }
  [[nodiscard]] const std::shared_ptr<const VariableList>& shared_variables() const { return vars_; }
  [[nodiscard]] std::size_t num_vars() const { return vars_->size(); }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  [[nodiscard]] std::optional<std::size_t> index_of(std::string_view name) const {
    const auto it = std::find(vars_->begin(), vars_->end(), name);
    if (it == vars_->end()) return std::nullopt;
    return static_cast<std::size_t>(it - vars_->begin());
  }

  [[nodiscard]] std::size_t require_index(std::string_view name) const {
    const auto i = index_of(name);
    if (!i) throw DomainError("unknown variable '" + std::string(name) + "'");
    return *i;
  }

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  [[nodiscard]] bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
  }

  /// Constant term (zero when absent).
  [[nodiscard]] S constant_term() const { return coefficient(Exponents(num_vars(), 0)); }

  /// -1 for the zero polynomial.
  [[nodiscard]] int total_degree() const {
    return terms_.empty() ? -1 : sextic::total_degree(terms_.begin()->first);
  }

  [[nodiscard]] int degree_in(std::size_t var) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }
  [[nodiscard]] int degree_in(std::string_view name) const { return degree_in(require_index(name)); }

  [[nodiscard]] bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = total_degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return sextic::total_degree(t.first) == d; });
  }

  [[nodiscard]] S coefficient(const Exponents& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? S(0) : it->second;
  }

  [[nodiscard]] const Exponents& leading_exponents() const { return terms_.begin()->first; }
  [[nodiscard]] const S& leading_coefficient() const { return terms_.begin()->second; }

  /// Adds c * x^e in place.
  void add_term(Exponents e, const S& c) {
    if (sextic::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second = it->second + c;
      if (sextic::is_zero(it->second)) terms_.erase(it);
    }
  }

  [[nodiscard]] bool same_ring(const MultiPoly& o) const { return vars_ == o.vars_ || *vars_ == *o.vars_; }

  void require_same_ring(const MultiPoly& o) const {
    if (!same_ring(o)) throw DomainError("polynomials live in different variable lists");
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    require_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  MultiPoly& operator-=(const MultiPoly& o) {
    require_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  MultiPoly& operator*=(const MultiPoly& o) {
    *this = *this * o;
    return *this;
  }

  MultiPoly& operator*=(const S& s) {
    if (sextic::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c = c * s;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const S& s) { return a *= s; }
  friend MultiPoly operator*(const S& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator-(MultiPoly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.require_same_ring(b);
    std::map<Exponents, S, GrlexDescending> acc;
    Exponents e(a.num_vars());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        auto [it, inserted] = acc.try_emplace(e, ca * cb);
        if (!inserted) it->second = it->second + ca * cb;
      }
    }
    return MultiPoly(a.vars_, std::move(acc));
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.same_ring(b) && a.terms_ == b.terms_;
  }

 private:
  void purge() {
    std::erase_if(terms_, [](const auto& t) { return sextic::is_zero(t.second); });
  }

  std::shared_ptr<const VariableList> vars_;
  Terms terms_;
};

template <ExactField S>
MultiPoly<S> zero_like(const MultiPoly<S>& p) {
  return MultiPoly<S>(p.shared_variables(), {});
}

template <ExactField S>
MultiPoly<S> constant_like(const MultiPoly<S>& p, const S& c) {
  typename MultiPoly<S>::Terms t;
  if (!is_zero(c)) t.emplace(Exponents(p.num_vars(), 0), c);
  return MultiPoly<S>(p.shared_variables(), std::move(t));
}

template <ExactField S>
MultiPoly<S> pow(const MultiPoly<S>& p, unsigned e) {
  MultiPoly<S> result = constant_like(p, S(1));
  MultiPoly<S> base = p;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

template <ExactField S>
MultiPoly<S> derivative(const MultiPoly<S>& p, std::size_t var) {
  typename MultiPoly<S>::Terms t;
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponents f = e;
    --f[var];
    t.emplace(std::move(f), c * S(e[var]));
  }
  return MultiPoly<S>(p.shared_variables(), std::move(t));
}

template <ExactField S>
MultiPoly<S> derivative(const MultiPoly<S>& p, std::string_view var) {
  return derivative(p, p.require_index(var));
}

/// Sets one variable to a value; the variable list is unchanged.
template <ExactField S>
MultiPoly<S> specialize(const MultiPoly<S>& p, std::size_t var, const S& value) {
  MultiPoly<S> out = zero_like(p);
  std::vector<S> powers{S(1)};
  for (const auto& [e, c] : p.terms()) {
    while (static_cast<int>(powers.size()) <= e[var]) powers.push_back(powers.back() * value);
    Exponents f = e;
    f[var] = 0;
    out.add_term(std::move(f), c * powers[e[var]]);
  }
  return out;
}

template <ExactField S>
MultiPoly<S> specialize(const MultiPoly<S>& p, std::string_view var, const S& value) {
  return specialize(p, p.require_index(var), value);
}

/// Evaluates at a full point (one value per variable).
template <ExactField S>
S evaluate(const MultiPoly<S>& p, const std::vector<S>& point) {
  if (point.size() != p.num_vars()) throw DomainError("evaluation point has wrong dimension");
  std::vector<std::vector<S>> powers(point.size(), std::vector<S>{S(1)});
  S acc(0);
  for (const auto& [e, c] : p.terms()) {
    S term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      while (static_cast<int>(powers[i].size()) <= e[i]) powers[i].push_back(powers[i].back() * point[i]);
      term = term * powers[i][e[i]];
    }
    acc = acc + term;
  }
  return acc;
}

/// Re-embeds p into a ring whose variable list contains all of p's variables
/// that actually occur (matched by name).
template <ExactField S>
MultiPoly<S> with_variables(const MultiPoly<S>& p, const VariableList& vars) {
  std::vector<std::optional<std::size_t>> where(p.num_vars());
  for (std::size_t i = 0; i < p.num_vars(); ++i) {
    const auto it = std::find(vars.begin(), vars.end(), p.variables()[i]);
    if (it != vars.end()) where[i] = static_cast<std::size_t>(it - vars.begin());
  }
  MultiPoly<S> out(vars);
  for (const auto& [e, c] : p.terms()) {
    Exponents f(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!where[i]) throw DomainError("variable '" + p.variables()[i] + "' missing from target ring");
      f[*where[i]] = e[i];
    }
    out.add_term(std::move(f), c);
  }
  return out;
}

/// Renames variables positionally.
template <ExactField S>
MultiPoly<S> rename(const MultiPoly<S>& p, VariableList names) {
  if (names.size() != p.num_vars()) throw DomainError("rename: variable count mismatch");
  return MultiPoly<S>(std::make_shared<const VariableList>(std::move(names)), p.terms());
}

/// Ring homomorphism sending variable i of p to images[i]. All images share
/// one variable list, which becomes the variable list of the result.
template <ExactField S>
MultiPoly<S> substitute(const MultiPoly<S>& p, const std::vector<MultiPoly<S>>& images) {
  if (images.size() != p.num_vars()) throw DomainError("substitute: one image per variable required");
  if (images.empty()) return p;
  for (const auto& img : images) images.front().require_same_ring(img);
  std::vector<std::vector<MultiPoly<S>>> powers(images.size());
  MultiPoly<S> out = zero_like(images.front());
  for (const auto& [e, c] : p.terms()) {
    MultiPoly<S> term = constant_like(images.front(), c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant_like(images.front(), S(1)));
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
      term = term * pw[e[i]];
    }
    out += term;
  }
  return out;
}

/// Name-based substitution: variables of p missing from the map are sent to
/// the same-named variable of the target ring.
template <ExactField S>
MultiPoly<S> substitute(const MultiPoly<S>& p, const std::map<std::string, MultiPoly<S>>& map,
                        const VariableList& target) {
  std::vector<MultiPoly<S>> images;
  images.reserve(p.num_vars());
  for (const auto& v : p.variables()) {
    const auto it = map.find(v);
    if (it != map.end()) {
      if (it->second.variables() != target) throw DomainError("substitute: image not in target ring");
      images.push_back(it->second);
    } else {
      images.push_back(MultiPoly<S>::variable(target, v));
    }
  }
  return substitute(p, images);
}

/// Coefficients of p viewed as a polynomial in one variable: result[k] is the
/// coefficient of var^k, living in the same ring (with var absent).
template <ExactField S>
std::vector<MultiPoly<S>> coefficients_in(const MultiPoly<S>& p, std::size_t var) {
  std::vector<MultiPoly<S>> out(std::max(p.degree_in(var) + 1, 0), zero_like(p));
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    f[var] = 0;
    out[e[var]].add_term(std::move(f), c);
  }
  return out;
}

template <ExactField S>
MultiPoly<S> from_coefficients(const std::vector<MultiPoly<S>>& coeffs, std::size_t var, const MultiPoly<S>& like) {
  MultiPoly<S> out = zero_like(like);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& [e, c] : coeffs[k].terms()) {
      Exponents f = e;
      f[var] += static_cast<int>(k);
      out.add_term(std::move(f), c);
    }
  }
  return out;
}

/// Exact division; throws DomainError when q does not divide p.
template <ExactField S>
MultiPoly<S> divide_exact(MultiPoly<S> p, const MultiPoly<S>& q) {
  p.require_same_ring(q);
  if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
  MultiPoly<S> quotient = zero_like(p);
  const Exponents& lq = q.leading_exponents();
  const S& lc = q.leading_coefficient();
  while (!p.is_zero()) {
    const Exponents& lp = p.leading_exponents();
    Exponents m(lp.size());
    for (std::size_t i = 0; i < lp.size(); ++i) {
      m[i] = lp[i] - lq[i];
      if (m[i] < 0) throw DomainError("divide_exact: divisor does not divide dividend");
    }
    const S c = p.leading_coefficient() / lc;
    typename MultiPoly<S>::Terms t;
    t.emplace(m, c);
    const MultiPoly<S> step(p.shared_variables(), std::move(t));
    quotient.add_term(m, c);
    p -= step * q;
  }
  return quotient;
}

/// Largest monomial dividing every term, and p divided by it.
template <ExactField S>
std::pair<Exponents, MultiPoly<S>> split_monomial_content(const MultiPoly<S>& p) {
  Exponents g(p.num_vars(), 0);
  if (p.is_zero()) return {g, p};
  g = p.terms().begin()->first;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], e[i]);
  }
  MultiPoly<S> out = zero_like(p);
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    for (std::size_t i = 0; i < g.size(); ++i) f[i] -= g[i];
    out.add_term(std::move(f), c);
  }
  return {g, out};
}

/// Scales p so that its leading coefficient (graded-lex) is one.
template <ExactField S>
MultiPoly<S> normalize_leading(const MultiPoly<S>& p) {
  if (p.is_zero()) return p;
  return p * (S(1) / p.leading_coefficient());
}

/// True iff p = c*q for a nonzero scalar c.
template <ExactField S>
bool proportional(const MultiPoly<S>& p, const MultiPoly<S>& q) {
  if (!p.same_ring(q) || p.is_zero() || q.is_zero()) return false;
  return normalize_leading(p) == normalize_leading(q);
}

/// Splits p into coefficients over the main variables: keys are exponent
/// vectors of the main variables, values are polynomials in the remaining
/// (parameter) variables, in the same ring as p.
template <ExactField S>
std::map<Exponents, MultiPoly<S>, GrlexDescending> coefficients_over(const MultiPoly<S>& p,
                                                                     const std::vector<std::size_t>& main) {
  std::map<Exponents, MultiPoly<S>, GrlexDescending> out;
  for (const auto& [e, c] : p.terms()) {
    Exponents key(main.size());
    Exponents rest = e;
    for (std::size_t k = 0; k < main.size(); ++k) {
      key[k] = e[main[k]];
      rest[main[k]] = 0;
    }
    auto it = out.try_emplace(key, zero_like(p)).first;
    it->second.add_term(std::move(rest), c);
  }
  return out;
}

/// Proportionality over the fraction field of the parameter variables:
/// p * lc(q) == q * lc(p), where lc is the coefficient (a parameter
/// polynomial) of the largest main-variable monomial of p. Returns the pair
/// (lc(p), lc(q)) describing the ratio p/q when proportional.
template <ExactField S>
std::optional<std::pair<MultiPoly<S>, MultiPoly<S>>> proportional_over(const MultiPoly<S>& p, const MultiPoly<S>& q,
                                                                       const std::vector<std::string>& main_vars) {
  if (!p.same_ring(q) || p.is_zero() || q.is_zero()) return std::nullopt;
  std::vector<std::size_t> main;
  for (const auto& v : main_vars) main.push_back(p.require_index(v));
  const auto cp = coefficients_over(p, main);
  const auto cq = coefficients_over(q, main);
  const auto& key = cp.begin()->first;
  const auto it = cq.find(key);
  if (it == cq.end()) return std::nullopt;
  const MultiPoly<S>& lp = cp.begin()->second;
  const MultiPoly<S>& lq = it->second;
  if (p * lq != q * lp) return std::nullopt;
  return std::make_pair(lp, lq);
}

template <ExactField S>
bool is_invariant_under_permutation(const MultiPoly<S>& p, const std::vector<std::size_t>& perm) {
  // perm[i] is the image index of variable i.
  MultiPoly<S> out = zero_like(p);
  for (const auto& [e, c] : p.terms()) {
    Exponents f(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) f[perm[i]] = e[i];
    out.add_term(std::move(f), c);
  }
  return out == p;
}

/// Explicit scalar-domain promotion Q -> Q(w).
inline MultiPoly<EisensteinRational> promote(const MultiPoly<Rational>& p) {
  MultiPoly<EisensteinRational>::Terms t;
  for (const auto& [e, c] : p.terms()) t.emplace(e, EisensteinRational(c));
  return {std::make_shared<const VariableList>(p.variables()), std::move(t)};
}

/// Inverse of promote; throws DomainError if a coefficient is not rational.
inline MultiPoly<Rational> demote(const MultiPoly<EisensteinRational>& p) {
  MultiPoly<Rational>::Terms t;
  for (const auto& [e, c] : p.terms()) {
    if (!c.is_rational()) throw DomainError("demote: coefficient " + c.str() + " is not rational");
    t.emplace(e, c.re());
  }
  return {std::make_shared<const VariableList>(p.variables()), std::move(t)};
}

/// Scales a rational polynomial to coprime integer coefficients with a
/// positive leading coefficient; returns the polynomial and the factor used.
std::pair<MultiPoly<Rational>, Rational> integer_primitive(const MultiPoly<Rational>& p);

}  // namespace sextic

#endif  // SEXTIC_MULTIPOLY_HPP
