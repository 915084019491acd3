#pragma once

#include <utility>
#include <vector>

#include "qks/partition.hpp"
#include "qks/tableau.hpp"

namespace qks {

// Column insertion: x enters column 1 bumping the topmost entry >= x (weakly);
// bumped entries move right; a letter with nothing to bump lands at the bottom
// of its column.  Prepends to the reading word: word(result) ~ x.word(t).
Tableau column_insert(const Tableau& t, int x);

// Insert a weakly increasing row word u: result ~ u.word(t).  The new cells
// form a horizontal strip over shape(t).
Tableau insert_row_word(const Tableau& t, const Word& u);

// Inverse of insert_row_word given the smaller shape: peels the horizontal
// strip shape(p)/inner in decreasing column order, returning the expelled row
// word (asserted weakly increasing) and the remaining tableau.
std::pair<Word, Tableau> remove_row_strip(const Tableau& p, const Partition& inner);

// Shape chains record insertions: chain[k] is the shape after k rows.
using ShapeChain = std::vector<Partition>;

struct PsiResult {
  Tableau p;
  ShapeChain chain;  // chain.front() = shape of the base tableau
};

// Iterated row-word insertion into base: rows[0] first, then rows[1], ...
// Every step must add a horizontal strip.
PsiResult psi_insert(const std::vector<Word>& rows, const Tableau& base);

struct PsiInverseResult {
  std::vector<Word> rows;  // rows[0] was inserted first
  Tableau base;
};

// Inverse: strips rows back off p following the chain (chain.back() must be
// shape(p)); validates every step is a horizontal strip.
PsiInverseResult psi_extract(const Tableau& p, const ShapeChain& chain);

// A chain from the empty shape is the same data as a semistandard tableau
// (letter k on the k-th strip).
Tableau chain_to_tableau(const ShapeChain& chain);
ShapeChain tableau_to_chain(const Tableau& q, int letters);

// Column RSK of a word: letters inserted left to right by column_insert, so
// after k steps the P-tableau is P(w_k...w_1).  Q is standard.
std::pair<Tableau, Tableau> rsk_word(const Word& w);

// Number of semistandard tableaux of shape outer/inner with content `weight`
// (weight[j] letters j+1).  Symmetric in weight; entries may be zero.
long long kostka_number(const Partition& outer, const Partition& inner,
                        const std::vector<int>& weight);

// Littlewood-Richardson coefficient c^{outer}_{lambda,mu}: skew tableaux of
// shape outer/lambda, content mu, lattice reverse reading word.
long long lr_coefficient(const Partition& outer, const Partition& lambda, const Partition& mu);

// Staircase concatenation of shapes: blocks[0] sits at the top right, each
// following block below and to the left.  Returns (outer, inner) of the skew
// shape whose Schur function is the product of the blocks'.
std::pair<Partition, Partition> star_shape(const std::vector<Partition>& blocks);

// Tableau-product compatibility: q is (outer,inner)-compatible when
// y_outer ~ q . y_inner in the plactic monoid.
bool is_white_compatible(const Tableau& q, const Partition& outer, const Partition& inner);

// Coefficient of s_lambda in prod_i s_{blocks[i]} counted by compatible
// tableaux of shape lambda against the staircase of the blocks.
long long star_coefficient(const Partition& lambda, const std::vector<Partition>& blocks);

}  // namespace qks
