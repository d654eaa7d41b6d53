#include "sextic/fpgrp.hpp"

#include "sextic/int_matrix.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace sextic {

// ---------------------------------------------------------------- words

namespace {

void push_letter(std::vector<int>& out, int x) {
  if (!out.empty() && out.back() == -x) {
    out.pop_back();
  } else {
    out.push_back(x);
  }
}

}  // namespace

Word::Word(std::vector<int> letters) {
  for (int x : letters) {
    if (x == 0) throw std::invalid_argument("word letter 0 is not a generator");
    push_letter(letters_, x);
  }
}

Word Word::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& x : out) x = -x;
  return Word(std::move(out));
}

Word Word::pow(int e) const {
  const Word base = e < 0 ? inverse() : *this;
  Word out;
  for (int i = 0; i < std::abs(e); ++i) out = out * base;
  return out;
}

Word Word::cyclically_reduced() const {
  std::size_t i = 0;
  std::size_t j = letters_.size();
  while (j - i >= 2 && letters_[i] == -letters_[j - 1]) ++i, --j;
  return Word(std::vector<int>(letters_.begin() + static_cast<long>(i), letters_.begin() + static_cast<long>(j)));
}

std::vector<long> Word::exponent_sums(std::size_t generators) const {
  std::vector<long> out(generators, 0);
  for (int x : letters_) {
    const std::size_t g = static_cast<std::size_t>(std::abs(x)) - 1;
    if (g >= generators) throw std::invalid_argument("word uses an undeclared generator");
    out[g] += x > 0 ? 1 : -1;
  }
  return out;
}

Word operator*(const Word& a, const Word& b) {
  Word out = a;
  for (int x : b.letters_) push_letter(out.letters_, x);
  return out;
}

Word commutator(const Word& a, const Word& b) { return a.inverse() * b.inverse() * a * b; }

// ---------------------------------------------------------------- presentations

Presentation::Presentation(std::vector<std::string> gens, std::vector<Word> rels) : generators(std::move(gens)) {
  for (const auto& r : rels) {
    for (int x : r.letters()) {
      if (static_cast<std::size_t>(std::abs(x)) > generators.size()) {
        throw std::invalid_argument("relator uses an undeclared generator");
      }
    }
    Word c = r.cyclically_reduced();
    if (!c.empty()) relators.push_back(std::move(c));
  }
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>* gens) : s_(text), gens_(gens) {}

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw PresentationParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  bool at_end() {
    skip();
    return pos_ == s_.size();
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  std::string name() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      ++pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\'')) {
        ++pos_;
      }
    }
    if (start == pos_) fail("expected a generator name");
    return std::string(s_.substr(start, pos_ - start));
  }

  int integer() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 6) fail("expected an exponent");
    const int v = std::stoi(std::string(s_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  Word atom() {
    if (eat('(')) {
      Word w = word();
      expect(')');
      return w;
    }
    if (eat('[')) {
      Word a = word();
      expect(',');
      Word b = word();
      expect(']');
      return commutator(a, b);
    }
    if (peek() == '1') {
      ++pos_;
      return {};
    }
    const std::string n = name();
    const auto it = std::find(gens_->begin(), gens_->end(), n);
    if (it == gens_->end()) fail("unknown generator '" + n + "'");
    return Word::generator(static_cast<std::size_t>(it - gens_->begin()));
  }

  Word factor() {
    Word a = atom();
    if (eat('^')) return a.pow(integer());
    return a;
  }

  Word word() {
    Word w = factor();
    while (eat('*')) w = w * factor();
    return w;
  }

  Word relation() {
    Word lhs = word();
    if (eat('=')) return lhs * word().inverse();
    return lhs;
  }

  void set_generators(const std::vector<std::string>* g) { gens_ = g; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  const std::vector<std::string>* gens_;
};

}  // namespace

Presentation Presentation::parse(std::string_view text) {
  std::vector<std::string> gens;
  Parser ps(text, &gens);
  ps.expect('<');
  if (ps.peek() != '|') {
    do {
      std::string n = ps.name();
      if (std::find(gens.begin(), gens.end(), n) != gens.end()) ps.fail("duplicate generator '" + n + "'");
      gens.push_back(std::move(n));
    } while (ps.eat(','));
  }
  std::vector<Word> rels;
  if (ps.eat('|')) {
    if (ps.peek() != '>') {
      do {
        rels.push_back(ps.relation());
      } while (ps.eat(','));
    }
  }
  ps.expect('>');
  if (!ps.at_end()) ps.fail("trailing text");
  return {std::move(gens), std::move(rels)};
}

Word Presentation::parse_word(std::string_view text) const {
  Parser ps(text, &generators);
  Word w = ps.word();
  if (!ps.at_end()) ps.fail("trailing text");
  return w;
}

std::string Presentation::word_string(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  const auto& l = w.letters();
  for (std::size_t i = 0; i < l.size();) {
    std::size_t j = i;
    while (j < l.size() && l[j] == l[i]) ++j;
    const int e = static_cast<int>(j - i) * (l[i] > 0 ? 1 : -1);
    if (!out.empty()) out += '*';
    out += generators.at(static_cast<std::size_t>(std::abs(l[i])) - 1);
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

std::string Presentation::str() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators.size(); ++i) out += (i ? "," : "") + generators[i];
  out += " | ";
  for (std::size_t i = 0; i < relators.size(); ++i) out += (i ? ", " : "") + word_string(relators[i]);
  return out + ">";
}

std::size_t Presentation::generator_index(std::string_view name) const {
  const auto it = std::find(generators.begin(), generators.end(), name);
  if (it == generators.end()) throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - generators.begin());
}

// ---------------------------------------------------------------- coset enumeration

namespace {

std::size_t column(int letter) {
  return 2 * (static_cast<std::size_t>(std::abs(letter)) - 1) + (letter < 0 ? 1 : 0);
}

class Enumerator {
 public:
  Enumerator(std::size_t gens, std::size_t limit) : cols_(2 * gens), limit_(limit) { new_coset(); }

  bool overflowed() const { return overflow_; }

  long rep(long c) {
    long r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      const long next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }
  bool live(long c) const { return parent_[c] == c; }
  std::size_t allocated() const { return table_.size(); }

  bool define(long a, std::size_t x) {
    if (table_.size() >= limit_) {
      overflow_ = true;
      return false;
    }
    const long b = new_coset();
    table_[a][x] = b;
    table_[b][x ^ 1] = a;
    return true;
  }

  // Returns false only on overflow.
  bool scan_and_fill(long a, const std::vector<int>& w) {
    if (w.empty()) return true;
    long f = a;
    long b = a;
    std::size_t i = 0;
    std::size_t j = w.size();  // unscanned letters are w[i .. j-1]
    for (;;) {
      while (i < j && table_[f][column(w[i])] >= 0) f = table_[f][column(w[i++])];
      if (i == j) {
        if (f != a) coincidence(f, a);
        return true;
      }
      while (j > i && table_[b][column(w[j - 1]) ^ 1] >= 0) b = table_[b][column(w[--j]) ^ 1];
      if (j == i) {
        coincidence(f, b);
        return true;
      }
      if (j == i + 1) {
        table_[f][column(w[i])] = b;
        table_[b][column(w[i]) ^ 1] = f;
        return true;
      }
      if (!define(f, column(w[i]))) return false;
    }
  }

  bool fill_row(long a) {
    for (std::size_t x = 0; x < cols_ && live(a); ++x) {
      if (table_[a][x] < 0 && !define(a, x)) return false;
    }
    return true;
  }

  CosetTable finish(std::size_t gens) const {
    CosetTable ct;
    ct.generators = gens;
    ct.defined = table_.size();
    ct.status = overflow_ ? CosetTable::Status::Overflowed : CosetTable::Status::Complete;
    std::vector<long> number(table_.size(), -1);
    long n = 0;
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (parent_[c] == static_cast<long>(c)) number[c] = n++;
    }
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (number[c] < 0) continue;
      std::vector<long> row(cols_, -1);
      for (std::size_t x = 0; x < cols_; ++x) {
        if (table_[c][x] >= 0) row[x] = number[static_cast<std::size_t>(table_[c][x])];
      }
      ct.rows.push_back(std::move(row));
    }
    return ct;
  }

 private:
  long new_coset() {
    table_.emplace_back(cols_, -1);
    parent_.push_back(static_cast<long>(parent_.size()));
    return static_cast<long>(table_.size()) - 1;
  }

  void merge(long k, long l, std::deque<long>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    const long lo = std::min(k, l);
    const long hi = std::max(k, l);
    parent_[hi] = lo;
    queue.push_back(hi);
  }

  void coincidence(long a, long b) {
    std::deque<long> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const long g = queue.front();
      queue.pop_front();
      for (std::size_t x = 0; x < cols_; ++x) {
        const long d = table_[g][x];
        if (d < 0) continue;
        table_[d][x ^ 1] = -1;
        const long mu = rep(g);
        const long nu = rep(d);
        if (table_[mu][x] >= 0) {
          merge(nu, table_[mu][x], queue);
        } else if (table_[nu][x ^ 1] >= 0) {
          merge(mu, table_[nu][x ^ 1], queue);
        } else {
          table_[mu][x] = nu;
          table_[nu][x ^ 1] = mu;
        }
      }
    }
  }

  std::size_t cols_;
  std::size_t limit_;
  bool overflow_ = false;
  std::vector<std::vector<long>> table_;
  std::vector<long> parent_;
};

}  // namespace

long CosetTable::trace(long c, const Word& w) const {
  for (int x : w.letters()) {
    if (c < 0) return -1;
    c = rows.at(static_cast<std::size_t>(c)).at(column(x));
  }
  return c;
}

CosetTable coset_enumerate(const Presentation& p, const std::vector<Word>& subgroup, std::size_t limit) {
  if (limit < 1) throw std::invalid_argument("coset_enumerate: limit must be positive");
  const std::size_t gens = p.generators.size();
  Enumerator en(gens, limit);
  for (const auto& h : subgroup) {
    if (!en.scan_and_fill(0, h.letters())) return en.finish(gens);
  }
  for (long a = 0; a < static_cast<long>(en.allocated()); ++a) {
    for (const auto& r : p.relators) {
      if (!en.live(a)) break;
      if (!en.scan_and_fill(a, r.letters())) return en.finish(gens);
    }
    if (en.live(a) && !en.fill_row(a)) return en.finish(gens);
  }
  return en.finish(gens);
}

std::vector<Word> coset_representatives(const CosetTable& ct) {
  std::vector<Word> reps(ct.size());
  std::vector<bool> seen(ct.size(), false);
  std::deque<long> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const long c = queue.front();
    queue.pop_front();
    for (std::size_t x = 0; x < 2 * ct.generators; ++x) {
      const long d = ct.rows[static_cast<std::size_t>(c)][x];
      if (d < 0 || seen[static_cast<std::size_t>(d)]) continue;
      seen[static_cast<std::size_t>(d)] = true;
      const int letter = static_cast<int>(x / 2 + 1) * (x % 2 == 0 ? 1 : -1);
      reps[static_cast<std::size_t>(d)] = reps[static_cast<std::size_t>(c)] * Word({letter});
      queue.push_back(d);
    }
  }
  return reps;
}

MulTable table_from_cosets(const CosetTable& ct) {
  if (!ct.complete()) throw std::invalid_argument("table_from_cosets: coset table is not complete");
  const auto reps = coset_representatives(ct);
  const std::size_t n = ct.size();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<int>(ct.trace(static_cast<long>(a), reps[b]));
  }
  return MulTable(std::move(t));
}

// ---------------------------------------------------------------- multiplication tables

MulTable::MulTable(std::vector<std::vector<int>> table) : t_(std::move(table)) {
  const int n = size();
  if (n == 0) throw std::invalid_argument("MulTable: empty table");
  for (const auto& row : t_) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("MulTable: table is not square");
    std::vector<bool> hit(n, false);
    for (int v : row) {
      if (v < 0 || v >= n || hit[v]) throw std::invalid_argument("MulTable: not a Latin square");
      hit[v] = true;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::vector<bool> hit(n, false);
    for (int r = 0; r < n; ++r) {
      if (hit[t_[r][c]]) throw std::invalid_argument("MulTable: not a Latin square");
      hit[t_[r][c]] = true;
    }
  }
  e_ = -1;
  for (int a = 0; a < n && e_ < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b) ok = t_[a][b] == b && t_[b][a] == b;
    if (ok) e_ = a;
  }
  if (e_ < 0) throw std::invalid_argument("MulTable: no identity");
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (t_[a][b] == e_) inv_[a] = b;
    }
  }
}

int MulTable::power(int a, long k) const {
  if (k < 0) return power(inverse(a), -k);
  int r = e_;
  for (long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

int MulTable::element_order(int a) const {
  int k = 1;
  for (int x = a; x != e_; x = mul(x, a)) ++k;
  return k;
}

bool MulTable::is_associative() const {
  const int n = size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = t_[a][b];
      for (int c = 0; c < n; ++c) {
        if (t_[ab][c] != t_[a][t_[b][c]]) return false;
      }
    }
  }
  return true;
}

bool MulTable::is_abelian() const {
  for (int a = 0; a < size(); ++a) {
    for (int b = 0; b < a; ++b) {
      if (t_[a][b] != t_[b][a]) return false;
    }
  }
  return true;
}

MulTable cyclic_table(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_table: order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return MulTable(std::move(t));
}

MulTable dihedral_table(int n) {
  if (n < 1) throw std::invalid_argument("dihedral_table: n must be positive");
  std::vector<std::vector<int>> t(2 * n, std::vector<int>(2 * n));
  for (int a = 0; a < 2 * n; ++a) {
    for (int b = 0; b < 2 * n; ++b) {
      const int k1 = a % n, e1 = a / n, k2 = b % n, e2 = b / n;
      const int k = ((k1 + (e1 ? -k2 : k2)) % n + n) % n;
      t[a][b] = k + n * ((e1 + e2) % 2);
    }
  }
  return MulTable(std::move(t));
}

MulTable direct_product(const MulTable& a, const MulTable& b) {
  const int na = a.size(), nb = b.size();
  std::vector<std::vector<int>> t(na * nb, std::vector<int>(na * nb));
  for (int x = 0; x < na * nb; ++x) {
    for (int y = 0; y < na * nb; ++y) t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  }
  return MulTable(std::move(t));
}

int evaluate(const Word& w, const std::vector<int>& images, const MulTable& m) {
  int r = m.identity();
  for (int x : w.letters()) {
    const int g = images.at(static_cast<std::size_t>(std::abs(x)) - 1);
    r = m.mul(r, x > 0 ? g : m.inverse(g));
  }
  return r;
}

std::vector<int> generated_subgroup(const MulTable& m, const std::vector<int>& gens) {
  std::vector<bool> in(m.size(), false);
  std::vector<int> out{m.identity()};
  in[m.identity()] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int g : gens) {
      const int y = m.mul(out[i], g);
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(HomStatus s) {
  switch (s) {
    case HomStatus::NotHom: return "not_hom";
    case HomStatus::Hom: return "hom";
    case HomStatus::Epimorphism: return "epimorphism";
  }
  return "?";
}

HomStatus verify_homomorphism(const Presentation& src, const std::vector<int>& images, const MulTable& tgt) {
  if (images.size() != src.generators.size()) throw std::invalid_argument("verify_homomorphism: one image per generator");
  for (const auto& r : src.relators) {
    if (evaluate(r, images, tgt) != tgt.identity()) return HomStatus::NotHom;
  }
  if (static_cast<int>(generated_subgroup(tgt, images).size()) == tgt.size()) return HomStatus::Epimorphism;
  return HomStatus::Hom;
}

std::vector<int> center(const MulTable& m) {
  std::vector<int> out;
  for (int a = 0; a < m.size(); ++a) {
    bool central = true;
    for (int b = 0; b < m.size() && central; ++b) central = m.mul(a, b) == m.mul(b, a);
    if (central) out.push_back(a);
  }
  return out;
}

std::vector<int> derived_subgroup(const MulTable& m) {
  std::set<int> comms;
  for (int a = 0; a < m.size(); ++a) {
    for (int b = 0; b < m.size(); ++b) comms.insert(m.mul(m.mul(m.inverse(a), m.inverse(b)), m.mul(a, b)));
  }
  return generated_subgroup(m, {comms.begin(), comms.end()});
}

SmallGroupInvariants identify_small_group(const MulTable& m) {
  SmallGroupInvariants inv;
  inv.order = m.size();
  inv.abelian = m.is_abelian();
  inv.center_order = static_cast<int>(center(m).size());
  inv.derived_order = static_cast<int>(derived_subgroup(m).size());
  for (int a = 0; a < m.size(); ++a) ++inv.order_histogram[m.element_order(a)];
  return inv;
}

bool isomorphism_check(const MulTable& a, const MulTable& b) {
  if (a.size() != b.size()) return false;
  const SmallGroupInvariants ia = identify_small_group(a);
  if (!(ia == identify_small_group(b))) return false;
  const int n = a.size();

  // Generators of a: repeatedly add an element of largest order outside the span.
  std::vector<int> gens;
  std::vector<int> span = generated_subgroup(a, gens);
  while (static_cast<int>(span.size()) < n) {
    int best = -1;
    for (int x = 0; x < n; ++x) {
      if (std::binary_search(span.begin(), span.end(), x)) continue;
      if (best < 0 || a.element_order(x) > a.element_order(best)) best = x;
    }
    gens.push_back(best);
    span = generated_subgroup(a, gens);
  }

  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (int y = 0; y < n; ++y) {
      if (b.element_order(y) == a.element_order(gens[i])) candidates[i].push_back(y);
    }
  }

  // Extends phi along right multiplication by generators; checks consistency.
  const auto extends = [&](const std::vector<int>& images) {
    std::vector<int> phi(n, -1);
    std::vector<bool> used(n, false);
    phi[a.identity()] = b.identity();
    used[b.identity()] = true;
    std::vector<int> queue{a.identity()};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int x = queue[i];
      for (std::size_t g = 0; g < gens.size(); ++g) {
        const int y = a.mul(x, gens[g]);
        const int fy = b.mul(phi[x], images[g]);
        if (phi[y] < 0) {
          if (used[fy]) return false;
          phi[y] = fy;
          used[fy] = true;
          queue.push_back(y);
        } else if (phi[y] != fy) {
          return false;
        }
      }
    }
    return static_cast<int>(queue.size()) == n;
  };

  std::vector<int> images(gens.size());
  std::function<bool(std::size_t)> search = [&](std::size_t k) {
    if (k == gens.size()) return extends(images);
    for (int y : candidates[k]) {
      images[k] = y;
      if (search(k + 1)) return true;
    }
    return false;
  };
  return search(0);
}

// ---------------------------------------------------------------- abelianisation

std::vector<long> abelianization(const Presentation& p) {
  const std::size_t g = p.generators.size();
  std::vector<long> out;
  std::size_t factors = 0;
  if (!p.relators.empty() && g > 0) {
    IntMatrix m(p.relators.size(), g);
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      const auto sums = p.relators[i].exponent_sums(g);
      for (std::size_t j = 0; j < g; ++j) m(i, j) = sums[j];
    }
    for (const auto& d : smith_normal_form(std::move(m)).invariant_factors) {
      ++factors;
      if (d != 1) out.push_back(d.get_si());
    }
  }
  for (; factors < g; ++factors) out.push_back(0);
  return out;
}

Presentation build_vankampen_presentation() {
  const auto r = [](std::size_t i) { return Word::generator(i - 1); };
  const Word omega = r(6) * r(5);
  const Word tau = r(2) * r(1);
  const Word r2p = tau.inverse() * r(1) * tau;
  const Word r1p = tau.pow(-2) * r(2) * tau.pow(2);
  const Word x = r2p * r1p * r2p.inverse();
  const Word a = r(4) * x;
  std::vector<Word> rels{
      r(4) * r(5).inverse(),                                   // tangent
      r(3).inverse() * r(4).inverse() * r(6) * r(4),           // tangent
      omega.pow(3) * r(6) * omega.pow(-3) * r(4).inverse(),    // cusp
      tau.pow(3) * r(2) * tau.pow(-3) * r(1).inverse(),        // cusp
      r(3).inverse() * tau.inverse() * r(1) * tau,             // y = eta4
      a.pow(3) * r(4) * a.pow(-3) * x.inverse(),               // y = 1/2
      omega.pow(2) * tau,                                      // infinity
  };
  return {{"r1", "r2", "r3", "r4", "r5", "r6"}, std::move(rels)};
}

}  // namespace sextic
