#ifndef SEXTIC_FPGRP_HPP
#define SEXTIC_FPGRP_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sextic {

class PresentationParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Freely reduced word; letter +(i+1) is generator i, -(i+1) its inverse.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters);
  static Word generator(std::size_t i) { return Word({static_cast<int>(i) + 1}); }

  [[nodiscard]] const std::vector<int>& letters() const { return letters_; }
  [[nodiscard]] std::size_t length() const { return letters_.size(); }
  [[nodiscard]] bool empty() const { return letters_.empty(); }
  [[nodiscard]] Word inverse() const;
  [[nodiscard]] Word pow(int e) const;
  [[nodiscard]] Word cyclically_reduced() const;
  /// Exponent sum per generator.
  [[nodiscard]] std::vector<long> exponent_sums(std::size_t generators) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<int> letters_;
};

/// [a, b] = a^-1 b^-1 a b
Word commutator(const Word& a, const Word& b);

/// Relators are kept freely and cyclically reduced; trivial ones are dropped.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  Presentation() = default;
  Presentation(std::vector<std::string> gens, std::vector<Word> rels);

  /// "<g1,g2 | rel, lhs=rhs, [a,b]>". Words use '*', '^k' (k may be
  /// negative), parentheses, commutator brackets and "1" for the identity.
  static Presentation parse(std::string_view text);
  [[nodiscard]] Word parse_word(std::string_view text) const;
  [[nodiscard]] std::string word_string(const Word& w) const;
  [[nodiscard]] std::string str() const;
  [[nodiscard]] std::size_t generator_index(std::string_view name) const;
};

struct CosetTable {
  enum class Status { Complete, Overflowed };
  Status status = Status::Overflowed;
  std::size_t generators = 0;
  /// Row per coset; column 2i is generator i, column 2i+1 its inverse; -1 undefined.
  std::vector<std::vector<long>> rows;
  /// Cosets defined during the run, including ones later merged.
  std::size_t defined = 0;

  [[nodiscard]] std::size_t size() const { return rows.size(); }
  [[nodiscard]] bool complete() const { return status == Status::Complete; }
  /// Image of coset c under w, or -1 if some step is undefined.
  [[nodiscard]] long trace(long c, const Word& w) const;
};

/// HLT enumeration. Rows are renumbered in creation order after collapses.
CosetTable coset_enumerate(const Presentation& p, const std::vector<Word>& subgroup = {},
                           std::size_t limit = 1'000'000);

class MulTable {
 public:
  MulTable() = default;
  /// Throws std::invalid_argument if there is no two-sided identity or the
  /// table is not a Latin square.
  explicit MulTable(std::vector<std::vector<int>> table);

  [[nodiscard]] int size() const { return static_cast<int>(t_.size()); }
  [[nodiscard]] int mul(int a, int b) const { return t_[a][b]; }
  [[nodiscard]] int identity() const { return e_; }
  [[nodiscard]] int inverse(int a) const { return inv_[a]; }
  [[nodiscard]] int power(int a, long k) const;
  [[nodiscard]] int element_order(int a) const;
  [[nodiscard]] bool is_associative() const;
  [[nodiscard]] bool is_abelian() const;
  [[nodiscard]] const std::vector<std::vector<int>>& table() const { return t_; }

 private:
  std::vector<std::vector<int>> t_;
  std::vector<int> inv_;
  int e_ = 0;
};

/// Regular representation of a complete coset table of the trivial subgroup.
/// Element i is the coset i; coset 0 is the identity.
MulTable table_from_cosets(const CosetTable& ct);
/// Representative word of each coset, along a breadth-first spanning tree.
std::vector<Word> coset_representatives(const CosetTable& ct);

MulTable cyclic_table(int n);
/// Dihedral group of order 2n; element k + n*e is r^k s^e.
MulTable dihedral_table(int n);
/// Element a * |B| + b is (a, b).
MulTable direct_product(const MulTable& a, const MulTable& b);

int evaluate(const Word& w, const std::vector<int>& images, const MulTable& m);
std::vector<int> generated_subgroup(const MulTable& m, const std::vector<int>& gens);

enum class HomStatus { NotHom, Hom, Epimorphism };
std::string to_string(HomStatus s);
HomStatus verify_homomorphism(const Presentation& src, const std::vector<int>& images, const MulTable& tgt);

struct SmallGroupInvariants {
  int order = 0;
  bool abelian = false;
  int center_order = 0;
  int derived_order = 0;
  std::map<int, int> order_histogram;  // element order -> count
  friend bool operator==(const SmallGroupInvariants&, const SmallGroupInvariants&) = default;
};

std::vector<int> center(const MulTable& m);
std::vector<int> derived_subgroup(const MulTable& m);
SmallGroupInvariants identify_small_group(const MulTable& m);

/// Generator-image backtracking; intended for orders up to about 100.
bool isomorphism_check(const MulTable& a, const MulTable& b);

/// Invariant factors of the abelianisation other than 1; 0 marks a free Z.
std::vector<long> abelianization(const Presentation& p);

/// Relations read off the horizontal pencil, on generators r1..r6.
Presentation build_vankampen_presentation();

}  // namespace sextic

#endif  // SEXTIC_FPGRP_HPP
