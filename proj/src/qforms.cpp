#include "sextic/qforms.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace sextic {

namespace {

long pmod(long a, long n) {
  const long r = a % n;
  return r < 0 ? r + n : r;
}

Rational mod1(const Rational& r) { return mod(r, Rational(1)); }
Rational mod2(const Rational& r) { return mod(r, Rational(2)); }

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

FiniteQuadraticForm::FiniteQuadraticForm(std::vector<long> orders, std::vector<std::vector<Rational>> gram,
                                         std::vector<Rational> q)
    : orders_(std::move(orders)), gram_(std::move(gram)), q_(std::move(q)) {
  const std::size_t k = orders_.size();
  if (gram_.size() != k || q_.size() != k) throw DomainError("quadratic form: size mismatch");
  for (std::size_t i = 0; i < k; ++i) {
    if (orders_[i] < 1) throw DomainError("quadratic form: cyclic orders must be positive");
    if (gram_[i].size() != k) throw DomainError("quadratic form: Gram matrix is not square");
    q_[i] = mod2(q_[i]);
    for (auto& v : gram_[i]) v = mod1(v);
  }
  for (std::size_t i = 0; i < k; ++i) {
    const Rational n(orders_[i]);
    if (!(q_[i] * n).is_integer() || !mod(q_[i] * n * n, Rational(2)).is_zero()) {
      throw DomainError("quadratic form: q value incompatible with the generator order");
    }
    if (mod1(q_[i]) != gram_[i][i]) throw DomainError("quadratic form: q and b disagree on the diagonal");
    for (std::size_t j = 0; j < k; ++j) {
      if (gram_[i][j] != gram_[j][i]) throw DomainError("quadratic form: Gram matrix is not symmetric");
      if (!(gram_[i][j] * n).is_integer()) throw DomainError("quadratic form: b value incompatible with the order");
    }
  }
}

long FiniteQuadraticForm::order() const {
  return std::accumulate(orders_.begin(), orders_.end(), 1L, std::multiplies<>());
}

GroupElement FiniteQuadraticForm::generator(std::size_t i) const {
  GroupElement e = zero();
  e.at(i) = 1;
  return reduce(e);
}

GroupElement FiniteQuadraticForm::reduce(GroupElement x) const {
  if (x.size() != rank()) throw DomainError("group element has wrong length");
  for (std::size_t i = 0; i < rank(); ++i) x[i] = pmod(x[i], orders_[i]);
  return x;
}

GroupElement FiniteQuadraticForm::add(const GroupElement& x, const GroupElement& y) const {
  GroupElement z(rank());
  for (std::size_t i = 0; i < rank(); ++i) z[i] = x.at(i) + y.at(i);
  return reduce(std::move(z));
}

GroupElement FiniteQuadraticForm::scale(long k, const GroupElement& x) const {
  GroupElement z(rank());
  for (std::size_t i = 0; i < rank(); ++i) z[i] = pmod(k, orders_[i]) * x.at(i);
  return reduce(std::move(z));
}

long FiniteQuadraticForm::element_order(const GroupElement& x) const {
  const GroupElement r = reduce(x);
  long m = 1;
  for (std::size_t i = 0; i < rank(); ++i) m = std::lcm(m, orders_[i] / std::gcd(orders_[i], r[i]));
  return m;
}

std::vector<GroupElement> FiniteQuadraticForm::elements() const {
  std::vector<GroupElement> out;
  GroupElement cur = zero();
  for (;;) {
    out.push_back(cur);
    std::size_t i = rank();
    while (i > 0) {
      --i;
      if (++cur[i] < orders_[i]) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (rank() == 0) return out;
  }
}

Rational FiniteQuadraticForm::b(const GroupElement& x, const GroupElement& y) const {
  Rational s;
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = 0; j < rank(); ++j) s += Rational(x.at(i) * y.at(j)) * gram_[i][j];
  }
  return mod1(s);
}

Rational FiniteQuadraticForm::q(const GroupElement& x) const {
  Rational s;
  for (std::size_t i = 0; i < rank(); ++i) {
    s += Rational(x.at(i) * x.at(i)) * q_[i];
    for (std::size_t j = i + 1; j < rank(); ++j) s += Rational(2 * x.at(i) * x.at(j)) * gram_[i][j];
  }
  return mod2(s);
}

bool Subgroup::contains(const GroupElement& x) const { return std::binary_search(elements.begin(), elements.end(), x); }

Subgroup span(const FiniteQuadraticForm& form, std::vector<GroupElement> generators) {
  std::set<GroupElement> seen{form.zero()};
  std::vector<GroupElement> frontier{form.zero()};
  for (auto& g : generators) g = form.reduce(g);
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier) {
      for (const auto& g : generators) {
        GroupElement y = form.add(x, g);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return {std::move(generators), {seen.begin(), seen.end()}};
}

FiniteQuadraticForm discr_An(int n) {
  if (n < 1) throw DomainError("discr_An: n must be positive");
  const Rational v(mpz_class(-n), mpz_class(n + 1));
  return FiniteQuadraticForm({n + 1}, {{v}}, {v});
}

FiniteQuadraticForm direct_sum(const std::vector<FiniteQuadraticForm>& forms) {
  std::vector<long> orders;
  std::vector<Rational> q;
  for (const auto& f : forms) {
    orders.insert(orders.end(), f.orders().begin(), f.orders().end());
    q.insert(q.end(), f.q_values().begin(), f.q_values().end());
  }
  std::vector<std::vector<Rational>> gram(orders.size(), std::vector<Rational>(orders.size()));
  std::size_t offset = 0;
  for (const auto& f : forms) {
    for (std::size_t i = 0; i < f.rank(); ++i) {
      for (std::size_t j = 0; j < f.rank(); ++j) gram[offset + i][offset + j] = f.gram()[i][j];
    }
    offset += f.rank();
  }
  return {std::move(orders), std::move(gram), std::move(q)};
}

static void require_inside(const Subgroup& sub, const FiniteQuadraticForm& form) {
  for (const auto& x : sub.elements) {
    if (x.size() != form.rank() || form.reduce(x) != x) throw DomainError("subgroup does not lie in the form's group");
  }
}

bool is_isotropic(const Subgroup& sub, const FiniteQuadraticForm& form) {
  require_inside(sub, form);
  for (const auto& x : sub.elements) {
    if (!form.q(x).is_zero()) return false;
    for (const auto& y : sub.elements) {
      if (!form.b(x, y).is_zero()) return false;
    }
  }
  return true;
}

Subgroup orthogonal_complement(const Subgroup& sub, const FiniteQuadraticForm& form) {
  require_inside(sub, form);
  Subgroup out;
  for (const auto& x : form.elements()) {
    const bool orth = std::all_of(sub.generators.begin(), sub.generators.end(),
                                  [&](const GroupElement& k) { return form.b(x, k).is_zero(); });
    if (orth) out.elements.push_back(x);
  }
  out.generators = out.elements;
  return out;
}

FiniteQuadraticForm orthogonal_complement_quotient(const Subgroup& sub, const FiniteQuadraticForm& form) {
  if (!is_isotropic(sub, form)) throw DomainError("orthogonal_complement_quotient: subgroup is not isotropic");
  const Subgroup perp = orthogonal_complement(sub, form);
  const long target = static_cast<long>(perp.order() / sub.order());

  // Greedy cyclic decomposition of perp / sub: add an element of largest order
  // whose cyclic group meets the current span trivially.
  std::vector<GroupElement> lifts;
  std::vector<long> orders;
  Subgroup current = sub;
  while (static_cast<long>(current.order()) < static_cast<long>(perp.order())) {
    const GroupElement* best = nullptr;
    long best_order = 0;
    for (const auto& x : perp.elements) {
      if (current.contains(x)) continue;
      long k = 1;
      GroupElement y = x;
      while (!current.contains(y)) y = form.add(y, x), ++k;
      if (k > best_order) best_order = k, best = &x;
    }
    lifts.push_back(*best);
    orders.push_back(best_order);
    std::vector<GroupElement> gens = current.generators;
    gens.push_back(*best);
    current = span(form, std::move(gens));
  }
  const long product = std::accumulate(orders.begin(), orders.end(), 1L, std::multiplies<>());
  if (product != target) throw DomainError("orthogonal_complement_quotient: cyclic decomposition failed");

  // q and b must not depend on the lift.
  for (const auto& x : lifts) {
    for (const auto& k : sub.elements) {
      if (form.q(form.add(x, k)) != form.q(x)) throw DomainError("orthogonal_complement_quotient: q not well defined");
    }
  }
  std::vector<std::vector<Rational>> gram(lifts.size(), std::vector<Rational>(lifts.size()));
  std::vector<Rational> q(lifts.size());
  for (std::size_t i = 0; i < lifts.size(); ++i) {
    q[i] = form.q(lifts[i]);
    for (std::size_t j = 0; j < lifts.size(); ++j) gram[i][j] = form.b(lifts[i], lifts[j]);
  }
  return {std::move(orders), std::move(gram), std::move(q)};
}

GroupElement apply(const ModMatrix& m, const GroupElement& x, const FiniteQuadraticForm& form) {
  if (m.size() != form.rank()) throw DomainError("matrix size does not match the group");
  GroupElement y(form.rank(), 0);
  for (std::size_t i = 0; i < form.rank(); ++i) {
    if (m[i].size() != form.rank()) throw DomainError("matrix is not square");
    for (std::size_t j = 0; j < form.rank(); ++j) y[i] += m[i][j] * x.at(j);
  }
  return form.reduce(std::move(y));
}

bool is_invariant(const Subgroup& sub, const ModMatrix& m, const FiniteQuadraticForm& form) {
  return std::all_of(sub.elements.begin(), sub.elements.end(),
                     [&](const GroupElement& x) { return sub.contains(apply(m, x, form)); });
}

bool is_isometry(const ModMatrix& m, const FiniteQuadraticForm& form) {
  std::set<GroupElement> image;
  for (const auto& x : form.elements()) {
    const GroupElement y = apply(m, x, form);
    if (form.q(y) != form.q(x)) return false;
    image.insert(y);
  }
  return static_cast<long>(image.size()) == form.order();
}

std::map<long, Subgroup> eigenspace_decomposition(const ModMatrix& m, const FiniteQuadraticForm& form) {
  if (form.rank() == 0) return {};
  const long p = form.orders().front();
  if (!is_prime(p) || std::any_of(form.orders().begin(), form.orders().end(), [&](long n) { return n != p; })) {
    throw DomainError("eigenspace_decomposition: group must be elementary abelian");
  }
  for (const auto& x : form.elements()) {
    if (x != form.zero() && apply(m, x, form) == form.zero()) {
      throw DomainError("eigenspace_decomposition: matrix is not invertible");
    }
  }
  std::map<long, Subgroup> out;
  for (long lambda = 1; lambda < p; ++lambda) {
    Subgroup v;
    for (const auto& x : form.elements()) {
      if (apply(m, x, form) == form.scale(lambda, x)) v.elements.push_back(x);
    }
    if (v.elements.size() <= 1) continue;
    for (const auto& x : v.elements) {
      if (x != form.zero()) {
        v.generators.push_back(x);
        break;
      }
    }
    // dimension > 1: keep all elements as generators
    if (static_cast<long>(v.elements.size()) != p) v.generators = v.elements;
    out.emplace(lambda, std::move(v));
  }
  return out;
}

ModMatrix cyclic_shift_matrix(std::size_t k) {
  ModMatrix m(k, std::vector<long>(k, 0));
  for (std::size_t j = 0; j < k; ++j) m[(j + 1) % k][j] = 1;
  return m;
}

}  // namespace sextic
