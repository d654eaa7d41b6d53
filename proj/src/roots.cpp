#include "sextic/roots.hpp"

#include <algorithm>
#include <optional>
#include <variant>

namespace sextic {

namespace {

int sign_at(const UPoly<Rational>& p, const Rational& x) { return p(x).sign(); }

Rational cauchy_bound(const UPoly<Rational>& p) {
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, abs(p.coeffs()[i] / p.lead()));
  // Round up to a power of two so that bisection midpoints stay dyadic.
  Rational b(1);
  while (b <= m + Rational(1)) b *= Rational(2);
  return b;
}

/// Integer a with a > x.
mpz_class ceil_mpz(const Rational& x) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
  return c;
}

struct Found {
  Rational root;
};

// One isolation pass over a squarefree polynomial. Either returns the
// isolating intervals (open, with no rational root inside) or a newly
// discovered rational root.
std::variant<std::vector<std::pair<Rational, Rational>>, Found> isolate_pass(const UPoly<Rational>& s) {
  const auto seq = sturm_sequence(s);
  const Rational b = cauchy_bound(s);
  const mpz_class lead = integer_primitive(s).lead().numerator();
  const Rational grid = Rational(mpz_class(1), lead);

  struct Pending {
    Rational lo, hi;
    int vlo, vhi;
  };
  std::vector<Pending> stack{{-b, b, sign_variations(seq, -b), sign_variations(seq, b)}};
  std::vector<std::pair<Rational, Rational>> isolated;
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    const int count = cur.vlo - cur.vhi;
    if (count == 0) continue;
    if (count == 1) {
      // Refine by sign changes until only one grid point can remain inside.
      Rational lo = cur.lo;
      Rational hi = cur.hi;
      int slo = sign_at(s, lo);
      while (hi - lo >= grid) {
        const Rational mid = (lo + hi) / Rational(2);
        const int sm = sign_at(s, mid);
        if (sm == 0) return Found{mid};
        if (sm == slo) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      // Candidate k/lead strictly inside (lo, hi).
      const mpz_class k = ceil_mpz(lo * Rational(lead));
      const Rational cand(k, lead);
      if (lo < cand && cand < hi && s(cand).is_zero()) return Found{cand};
      isolated.emplace_back(lo, hi);
      continue;
    }
    const Rational mid = (cur.lo + cur.hi) / Rational(2);
    if (s(mid).is_zero()) return Found{mid};
    const int vmid = sign_variations(seq, mid);
    stack.push_back({mid, cur.hi, vmid, cur.vhi});
    stack.push_back({cur.lo, mid, cur.vlo, vmid});
  }
  return isolated;
}

}  // namespace

std::vector<UPoly<Rational>> sturm_sequence(const UPoly<Rational>& p) {
  std::vector<UPoly<Rational>> seq{p, derivative(p)};
  while (!seq.back().is_zero()) {
    UPoly<Rational> r = -(seq[seq.size() - 2] % seq.back());
    if (r.is_zero()) break;
    // Positive rescaling keeps coefficients small without changing signs.
    const Rational lead = abs(r.lead());
    seq.push_back(r * (Rational(1) / lead));
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int sign_variations(const std::vector<UPoly<Rational>>& seq, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& q : seq) {
    const int s = sign_at(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int count_real_roots(const UPoly<Rational>& p) {
  const UPoly<Rational> s = squarefree_part(p);
  if (s.degree() <= 0) return 0;
  const auto seq = sturm_sequence(s);
  const Rational b = cauchy_bound(s);
  return sign_variations(seq, -b) - sign_variations(seq, b);
}

std::vector<IsolatingInterval> sturm_isolate(const UPoly<Rational>& p) {
  if (p.is_zero()) throw DomainError("sturm_isolate: zero polynomial");
  const UPoly<Rational> full = squarefree_part(p);
  UPoly<Rational> s = full;
  std::vector<Rational> exact;
  std::vector<std::pair<Rational, Rational>> open;
  while (s.degree() > 0) {
    auto pass = isolate_pass(s);
    if (auto* found = std::get_if<Found>(&pass)) {
      exact.push_back(found->root);
      s = s / UPoly<Rational>::linear_root(found->root);
      continue;
    }
    open = std::get<0>(std::move(pass));
    break;
  }
  std::vector<IsolatingInterval> out;
  for (const auto& r : exact) out.push_back({r, r, full});
  for (auto& [lo, hi] : open) out.push_back({std::move(lo), std::move(hi), full});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  return out;
}

std::vector<IsolatingInterval> sturm_isolate(const MultiPoly<Rational>& p) {
  return sturm_isolate(to_upoly(p));
}

IsolatingInterval refine(IsolatingInterval iv, const Rational& width) {
  if (iv.is_exact()) return iv;
  int slo = sign_at(iv.poly, iv.lo);
  while (iv.width() > width) {
    const Rational mid = iv.midpoint();
    const int sm = sign_at(iv.poly, mid);
    if (sm == 0) {
      iv.lo = iv.hi = mid;
      break;
    }
    if (sm == slo) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
  return iv;
}

std::vector<Rational> rational_roots(const UPoly<Rational>& p) {
  std::vector<Rational> out;
  for (const auto& iv : sturm_isolate(p)) {
    if (iv.is_exact()) out.push_back(iv.lo);
  }
  return out;
}

}  // namespace sextic
