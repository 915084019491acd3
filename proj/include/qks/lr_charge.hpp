#pragma once

#include <vector>

#include "qks/laurent.hpp"
#include "qks/partition.hpp"
#include "qks/tableau.hpp"

namespace qks {

// Block data for (mu, eta)-LR words: the alphabet [n] with n = sum(eta) is
// split into s consecutive intervals, the k-th of size eta_k; each of its
// letters occurs mu_k times, and the target tableau of block k is the
// rectangle of width mu_k whose rows are the letters of the block.
class LRContext {
 public:
  LRContext(std::vector<int> mu, std::vector<int> eta);

  int s() const { return static_cast<int>(mu_.size()); }
  int n() const { return n_; }
  int total_cells() const { return cells_; }
  const std::vector<int>& mu() const { return mu_; }
  const std::vector<int>& eta() const { return eta_; }

  // Letter interval [lo, hi] of block k (0-based k, 1-based letters).
  std::pair<int, int> block_range(int k) const;
  int block_of(int letter) const;
  // content()[j] = multiplicity of letter j+1 in every (mu,eta)-LR word.
  const std::vector<int>& content() const { return content_; }
  Tableau rectangle(int k) const;
  Word rectangle_word(int k) const;

  LRContext tail() const;  // drop the first block

  std::string to_string() const;

 private:
  std::vector<int> mu_, eta_;
  int n_ = 0, cells_ = 0;
  std::vector<int> content_;
};

bool is_lr_word(const Word& u, const LRContext& ctx);

// One step of the Z/N action: split off the first letter x, then return
// (w0^eta rest)(w0^eta x) using the blockwise long element.
Word rotate_once(const Word& u, const LRContext& ctx);
Word rotate(const Word& u, const LRContext& ctx, long long steps);

// The charge statistic on (mu,eta)-LR words, by peeling the first block off
// the insertion tableau.  Precondition: u is (mu,eta)-LR.
int lr_charge(const Word& u, const LRContext& ctx);

// Classical Lascoux-Schutzenberger charge of a word whose letter content is
// the partition `content`, by repeated extraction of standard subwords with
// the cyclic leftward search rule.
int ls_charge(const Word& w, const std::vector<int>& content);

// Multitableaux of the given shape whose word is (mu,eta)-LR and whose
// components before node i1 avoid the letters of the first block.
std::vector<MultiTableau> lr_multitableaux(const MultiPartition& shape, const LRContext& ctx,
                                           int i1);

// Sum of t^charge over lr_multitableaux(shape, ctx, i1): the tableau-formula
// value of the reduced coefficient polynomial.
UniPoly tableau_ks(const MultiPartition& shape, const LRContext& ctx, int i1);

// Arrow-variable weight of one LR multitableau: the component-size monomial
// on the non-closing arrows times the full cycle raised to the charge.
ArrowLaurent tableau_weight(const MultiTableau& t, const LRContext& ctx);

}  // namespace qks
