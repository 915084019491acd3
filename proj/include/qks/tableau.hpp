#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qks/partition.hpp"

namespace qks {

// Words are sequences of positive letters.
using Word = std::vector<int>;

std::string word_to_string(const Word& w);
Word word_concat(const Word& a, const Word& b);
// Letter content: result[j] = multiplicity of letter j+1 (sized to max letter).
std::vector<int> content_of(const Word& w, int alphabet = 0);
bool is_weakly_increasing(const Word& w);

// Semistandard Young tableau, rows top to bottom; rows weakly increase,
// columns strictly increase.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows);

  static Tableau yamanouchi(const Partition& shape);  // row i filled with i+1

  int n_rows() const { return static_cast<int>(rows_.size()); }
  const std::vector<int>& row(int i) const { return rows_[i]; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  bool empty() const { return rows_.empty(); }

  // Reading word: rows bottom to top, each left to right.
  Word word() const;
  std::vector<int> content(int alphabet = 0) const;

  // Subtableau on a letter interval [lo,hi]; cells outside are dropped.
  // Only valid when the result is a (possibly skew) tableau; used for
  // restriction to the leading alphabet block, where it is straight.
  Tableau restrict_letters(int lo, int hi) const;

  // Shift every letter by delta (letters must stay positive).
  Tableau relabeled(int delta) const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend bool operator<(const Tableau& a, const Tableau& b) { return a.rows_ < b.rows_; }

  std::string to_string() const;

 private:
  std::vector<std::vector<int>> rows_;
};

// Row-insert letter x into T (bump leftmost entry > x).
Tableau row_insert(const Tableau& t, int x);
// Robinson-Schensted P-tableau of a word via row insertion, left to right.
Tableau p_tableau(const Word& w);
bool knuth_equivalent(const Word& a, const Word& b);

// All words reachable from w by elementary Knuth moves (xzy~zxy for x<=y<z,
// yxz~yzx for x<y<=z).  cap bounds the class size as a safety valve.
std::vector<Word> knuth_class(const Word& w, size_t cap = 100000);

// Straight-shape semistandard tableaux of the given shape with letters in
// [1, max_letter], deterministic order.
std::vector<Tableau> enumerate_ssyt(const Partition& shape, int max_letter);

// Skew tableau: filled rows sit to the right of an inner shape.
struct SkewTableau {
  Partition inner;
  std::vector<std::vector<int>> rows;  // filled entries only, per row

  Partition outer() const;
  Word word() const;  // bottom to top
  std::vector<int> content(int alphabet = 0) const;
  bool valid() const;
  std::string to_string() const;
  friend bool operator==(const SkewTableau&, const SkewTableau&) = default;
};

// Skew semistandard tableaux of shape outer/inner with exactly the given
// letter content (content[j] copies of letter j+1).
std::vector<SkewTableau> enumerate_skew_ssyt(const Partition& outer, const Partition& inner,
                                             const std::vector<int>& weight);

// A word is a lattice (ballot) word if every prefix of its reverse reading
// has partial contents forming a partition.  Used on reverse reading words of
// skew tableaux for Littlewood-Richardson counting.
bool is_lattice_word(const Word& w);

// Tuple of tableaux, one per quiver node.
class MultiTableau {
 public:
  MultiTableau() = default;
  explicit MultiTableau(std::vector<Tableau> comp) : comp_(std::move(comp)) {}
  MultiTableau(int r) : comp_(r) {}

  int r() const { return static_cast<int>(comp_.size()); }
  const Tableau& operator[](int i) const { return comp_[i]; }
  Tableau& operator[](int i) { return comp_[i]; }
  MultiPartition shape() const;
  // Concatenated reading word: word(T^(0)) word(T^(1)) ... word(T^(r-1)).
  Word word() const;

  friend bool operator==(const MultiTableau&, const MultiTableau&) = default;
  friend bool operator<(const MultiTableau& a, const MultiTableau& b) {
    return a.comp_ < b.comp_;
  }
  std::string to_string() const;

 private:
  std::vector<Tableau> comp_;
};

// All multitableaux of the given multishape with letters in [1, max_letter].
std::vector<MultiTableau> enumerate_multitableaux(const MultiPartition& shape, int max_letter);

}  // namespace qks
