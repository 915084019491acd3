#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qks/laurent.hpp"
#include "qks/partition.hpp"

namespace qks {

// One entry of a quiver datum: a node of Z/r, a block size a >= 1, and a
// dominant (weakly decreasing, nonnegative) weight of length a.
struct DatumEntry {
  int node = 0;
  int a = 1;
  std::vector<int> weight;

  bool operator==(const DatumEntry&) const = default;
};

// A sequence of datum entries on the cyclic quiver with r nodes.  The entry
// list is stored first-to-last; the associated creation operators compose with
// the first entry outermost.
class LusztigDatum {
 public:
  LusztigDatum(int r, std::vector<DatumEntry> entries);

  int r() const { return r_; }
  int length() const { return static_cast<int>(entries_.size()); }
  const DatumEntry& entry(int k) const { return entries_[k]; }
  const std::vector<DatumEntry>& entries() const { return entries_; }

  // Total size: sum over entries of |weight|.
  int total_size() const;

  bool is_periodic() const;
  bool is_even() const;
  bool is_borel() const;
  bool is_rectangular() const;
  bool is_concentrated(int node) const;
  bool is_dominant() const;
  bool is_balanced() const;

  std::string to_string() const;

 private:
  int r_;
  std::vector<DatumEntry> entries_;
};

// A rectangle datum (mu, eta, i1) on r nodes: s rectangles, the k-th of shape
// (mu_k^{eta_k}), fed in at consecutive nodes starting from i1.  mu must be
// weakly decreasing with nonnegative parts (zero rectangles allowed) and eta
// strictly positive; violations throw std::invalid_argument.
class RectTriple {
 public:
  RectTriple(int r, int i1, std::vector<int> mu, std::vector<int> eta);

  int r() const { return r_; }
  int i1() const { return i1_; }
  int s() const { return static_cast<int>(mu_.size()); }
  const std::vector<int>& mu() const { return mu_; }
  const std::vector<int>& eta() const { return eta_; }
  // Alphabet size: eta_1 + ... + eta_s.
  int n() const;
  // Total cell count: sum mu_k * eta_k.
  int total_size() const;

  // The entry list: pass 1 walks nodes i1,...,r-1 with zero weights except the
  // final node, which receives the rectangle (mu_1^{eta_1}); every later pass
  // k walks all of 0,...,r-1 and deposits (mu_k^{eta_k}) at node r-1.  All
  // entries of pass k have block size eta_k.
  LusztigDatum datum() const;

  std::string to_string() const;

 private:
  int r_;
  int i1_;
  std::vector<int> mu_;
  std::vector<int> eta_;
};

// Element of the r-fold tensor Lambda^{(0)} x ... x Lambda^{(r-1)} with
// coefficients Laurent polynomials in the arrow variables, written in the
// basis of products of Schur functions indexed by r-multipartitions.
class TensorSym {
 public:
  explicit TensorSym(int r) : r_(r) {}
  static TensorSym one(int r);

  int r() const { return r_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<MultiPartition, ArrowLaurent>& terms() const { return terms_; }

  void add_term(const MultiPartition& mp, const ArrowLaurent& c);
  ArrowLaurent coeff(const MultiPartition& mp) const;

  TensorSym& operator+=(const TensorSym& other);
  bool operator==(const TensorSym&) const = default;

  std::string to_string() const;

 private:
  int r_;
  std::map<MultiPartition, ArrowLaurent> terms_;
};

// Same object with the arrow variables collapsed to a single t.
struct TensorPoly {
  int r = 1;
  std::map<MultiPartition, UniPoly> terms;

  void add_term(const MultiPartition& mp, const UniPoly& c);
  TensorPoly& operator+=(const TensorPoly& other);
  TensorPoly& operator-=(const TensorPoly& other);
  bool operator==(const TensorPoly&) const = default;
  std::string to_string() const;
};

TensorPoly specialize_uniform(const TensorSym& f);

// Conjugate every component (the degree involution applied in each tensor
// factor); coefficients are unchanged.
TensorPoly conjugate_components(const TensorPoly& f);
// Relabel component i as r-1-i.
TensorPoly node_reversal(const TensorPoly& f);

// Multiplication by h_k in slot `node` (row Pieri rule).
TensorSym ts_mult_h(const TensorSym& f, int node, int k);
// Adjoint of multiplication by h_k in slot `node`.
TensorSym ts_skew_h(const TensorSym& f, int node, int k);
// Adjoint of multiplication by e_k in slot `node`.
TensorSym ts_skew_e(const TensorSym& f, int node, int k);

// Degree-d component of the one-row creation operator at `node`:
//   sum over k - a - b = d of  (h_k at node) . (-1)^a (e_a-adjoint at node)
//                              . t_{node,node+1}^b (h_b-adjoint at node+1).
TensorSym apply_H_single(const TensorSym& f, int node, int d);

// Rectangle-block creation operator at `node` with dominant weight beta
// (length a).  Expands the Weyl alternation sum R(Z) over S_a; each term
// applies all adjoint factors first and all multiplications last, so the
// coefficient extraction is exact for any integer weight.
TensorSym apply_H_block(const TensorSym& f, int node, const std::vector<int>& beta);

TensorSym apply_entry(const TensorSym& f, const DatumEntry& e);

// Product of the creation operators of the datum applied to 1, first entry
// outermost.
TensorSym quiver_hl(const LusztigDatum& d);

// Coefficient of the Schur product s_{lam} in H.
ArrowLaurent ks_full(const TensorSym& h, const MultiPartition& lam);

// Arrow exponents (one per non-closing arrow) of the dominance monomial for
// lam relative to the datum, or nullopt if the degree mismatch is not in the
// root lattice (in which case the coefficient must vanish).
std::optional<std::vector<int>> root_lattice_exponents(const LusztigDatum& d,
                                                       const MultiPartition& lam);

// One-variable polynomial K with ks_full = (dominance monomial) * K(cycle);
// throws integrity_error when the coefficient fails the required divisibility.
UniPoly reduced_ks(const ArrowLaurent& coeff, const LusztigDatum& d, const MultiPartition& lam);
UniPoly reduced_ks(const TensorSym& h, const LusztigDatum& d, const MultiPartition& lam);

struct KsTables {
  std::map<MultiPartition, ArrowLaurent> full;
  std::map<MultiPartition, UniPoly> reduced;
};

KsTables ks_tables_by_operators(const LusztigDatum& d);

// <s_lambda, s_{parts[0]} s_{parts[1]} ...>, the multi-factor branching
// coefficient.
long long multi_lr_coefficient(const Partition& lambda, const std::vector<Partition>& parts);

// Schur expansion of the one-node function with rectangle data (mu, eta),
// coefficients polynomials in the single loop variable.
std::map<Partition, UniPoly> single_node_hl(const std::vector<int>& mu,
                                            const std::vector<int>& eta);

// Substitute the weighted sum of alphabets
//   Y = sum_i t_{i,i+1} t_{i+1,i+2} ... t_{r-2,r-1} X^{(i)}
// into f = sum_lambda f_lambda(t) s_lambda, where the f_lambda argument t
// becomes the full cycle product.
TensorSym plethysm_weighted_sum(const std::map<Partition, UniPoly>& f, int r);

// Substitute t -> t^r in the coefficients of g and then the graded sum of
// alphabets X^{(0)} + t X^{(1)} + ... + t^{r-1} X^{(r-1)} into the Schur
// indices.
TensorPoly induction_plethysm(const std::map<Partition, UniPoly>& g, int r);

// Datum with rn one-row entries cycling through the nodes; round k deposits
// row k of each component of mu.  Components are padded to n rows with zeros.
LusztigDatum borel_datum(const MultiPartition& mu, int n = -1);

}  // namespace qks
