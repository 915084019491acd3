#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qks/laurent.hpp"
#include "qks/lr_charge.hpp"
#include "qks/partition.hpp"
#include "qks/symfunc.hpp"
#include "qks/tableau.hpp"

namespace qks {

// Dominant-weight split of a shape against the staircase: for a permutation w
// of [n] (images, 1-based) the vector w^{-1}(lambda + rho) - rho is cut into
// its first `a` entries (alpha) and the remaining n - a (beta).
std::pair<std::vector<int>, std::vector<int>> staircase_split(const Partition& lambda,
                                                              const std::vector<int>& w, int a);

// Coefficient polynomials of a rectangle datum computed by the alternating
// Weyl-group recurrence that consumes one datum entry at a time.  Interior
// entries (node != r-1) trade the entry's node against the next one through
// Kostka numbers; the entry closing a pass at node r-1 also strips the
// rectangle and shrinks the alphabet by eta_1.  Results agree with the
// creation-operator expansion coefficient of the shape.
//
// Instances memoize on (entry index, shape) and are not thread safe; parallel
// sweeps should use one instance per worker.
class KsRecurrence {
 public:
  enum class Mode {
    kostka,  // sum over all of S_n with skew Kostka numbers
    coset,   // minimal coset representatives with LR coefficients
  };

  explicit KsRecurrence(const RectTriple& triple, Mode mode = Mode::kostka);

  const RectTriple& triple() const { return triple_; }

  // Full polynomial in the arrow variables.
  ArrowLaurent full(const MultiPartition& shape);

  // Single-variable polynomial after removing the forced monomial prefactor;
  // throws integrity_error under the same conditions as reduced_ks.
  UniPoly reduced(const MultiPartition& shape);

 private:
  RectTriple triple_;
  Mode mode_;
  std::vector<DatumEntry> entries_;
  std::vector<int> alphabet_;  // letters in force when entry k is consumed
  std::vector<int> block_;     // 0-based (mu, eta) block of entry k
  std::map<std::pair<size_t, MultiPartition>, ArrowLaurent> memo_;

  ArrowLaurent eval(size_t idx, const MultiPartition& shape);
  ArrowLaurent interior_step(size_t idx, const MultiPartition& shape);
  ArrowLaurent interior_step_coset(size_t idx, const MultiPartition& shape);
  ArrowLaurent closing_step(size_t idx, const MultiPartition& shape);
};

// One signed summand of the first recurrence step, in tableau form: a
// permutation, an inner LR multitableau on the remaining data, and the two
// recording tableaux produced when the consumed node is split off.  For a
// closing entry the inner multitableau lives on the shrunken alphabet.
struct MorrisDatum {
  std::vector<int> w;  // permutation images, 1-based
  MultiTableau s;
  Tableau u_lo;      // recording at the consumed node, weight beta(w)
  SkewTableau u_hi;  // recording over the next node, weight alpha(w) - nu

  bool operator==(const MorrisDatum&) const = default;
  bool operator<(const MorrisDatum& o) const;
  std::string to_string() const;
};

// The cancellation step for the first entry of a rectangle datum (r >= 2).
// enumerate() lists all data for a shape; their signed weights sum to the full
// coefficient polynomial.  involution() is the sign-reversing, weight-
// preserving pairing whose fixed points are exactly the embeddings of the LR
// multitableaux of the shape.
class MorrisStep {
 public:
  explicit MorrisStep(const RectTriple& triple);

  int r() const { return r_; }
  int alphabet() const { return n_; }
  bool closing() const { return closing_; }

  int sign(const MorrisDatum& xi) const;
  ArrowLaurent weight(const MorrisDatum& xi) const;

  std::vector<MorrisDatum> enumerate(const MultiPartition& shape) const;

  // LR multitableaux of the shape: the domain of the embedding.
  std::vector<MultiTableau> domain(const MultiPartition& shape) const;
  MorrisDatum embed(const MultiTableau& t) const;

  MorrisDatum involution(const MorrisDatum& xi) const;
  bool is_fixed(const MorrisDatum& xi) const;

 private:
  RectTriple triple_;
  int r_, i1_, n_, a_, mu1_;
  int node_, next_;
  bool closing_;
  std::vector<int> nu_;
  LRContext full_ctx_;
  LRContext inner_ctx_;
  int inner_i1_;

  // Shared front half of the involution: reconstructs the row tuple whose
  // recording tableau is tested for the violation.
  struct Analysis;
  Analysis analyze(const MorrisDatum& xi) const;
};

}  // namespace qks
