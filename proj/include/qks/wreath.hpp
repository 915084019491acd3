#pragma once

#include <map>
#include <vector>

#include "qks/laurent.hpp"
#include "qks/partition.hpp"
#include "qks/symfunc.hpp"

namespace qks {

// Polynomial in the grading variable whose coefficients live in Z[zeta] for a
// fixed primitive r-th root of unity zeta.  Coefficients are carried as
// integer vectors indexed by powers of zeta (cyclic convolution); nothing is
// collapsed until integer_quotient reduces modulo the r-th cyclotomic
// polynomial and demands an integer answer.
class CycloPoly {
 public:
  explicit CycloPoly(int r) : r_(r) {}

  int r() const { return r_; }
  bool is_zero() const;
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  // Add v * zeta^zeta_pow * T^deg.
  void add(int deg, int zeta_pow, long long v);
  // this += o * v * zeta^zeta_pow.
  void accumulate(const CycloPoly& o, long long v = 1, int zeta_pow = 0);

  friend CycloPoly operator*(const CycloPoly& a, const CycloPoly& b);
  friend CycloPoly operator*(const CycloPoly& a, const UniPoly& f);

  // Collapse the grading variable at 1 (all degrees summed into degree 0).
  CycloPoly at_one() const;

  // Reduce each coefficient modulo the r-th cyclotomic polynomial; every
  // coefficient must come out as an integer divisible by div, otherwise an
  // integrity_error is thrown.
  UniPoly integer_quotient(long long div) const;

  // Representation-level equality (same coefficient vectors, not equality in
  // Z[zeta]); sufficient wherever both sides accumulate the same terms.
  friend bool operator==(const CycloPoly&, const CycloPoly&) = default;

 private:
  int r_;
  std::vector<std::vector<long long>> c_;  // c_[deg][zeta_pow]
};

// Element of the wreath product of a cyclic group of order r with S_n:
// a color exponent at every position plus an underlying permutation.
struct ColoredPermutation {
  std::vector<int> colors;  // exponent of the generator at position k
  std::vector<int> perm;    // images, 0-based: k -> perm[k]

  int n() const { return static_cast<int>(perm.size()); }
  friend bool operator==(const ColoredPermutation&, const ColoredPermutation&) = default;
};

// Group operations; composition matches the action on polynomials where
// (g, w) sends x_k to g_{w(k)} x_{w(k)}.
ColoredPermutation compose(const ColoredPermutation& a, const ColoredPermutation& b, int r);
ColoredPermutation inverse(const ColoredPermutation& g, int r);

Partition cycle_type(const std::vector<int>& perm);

// Multipartition whose i-th component lists the cycle lengths of color i,
// the color of a cycle being the sum of its position colors mod r.
MultiPartition colored_cycle_type(const ColoredPermutation& g, int r);

// One element per conjugacy class: cycles laid out consecutively, with the
// class color carried on the first position of each cycle.
ColoredPermutation class_representative(const MultiPartition& type);

std::vector<ColoredPermutation> all_colored_permutations(int n, int r);

// Number of elements with the given colored cycle type:
// r^n n! / prod_{i,j} m_{ij}! (jr)^{m_{ij}}.
long long wreath_class_size(const MultiPartition& type, int r);

// Irreducible character value chi^lam at cycle type rho (border-strip
// recursion).
long long sn_character(const Partition& lam, const Partition& rho);

// Graded trace of g on the span of monomials x_1^{m_1}...x_n^{m_n} with all
// exponents below r, computed by direct action on that basis.
CycloPoly bounded_monomial_trace(const ColoredPermutation& g, int r);

// Graded class functions, keyed by cycle type.
using SnClassFunction = std::map<Partition, UniPoly>;
using WreathClassFunction = std::map<MultiPartition, CycloPoly>;

// Stock graded characters.
SnClassFunction trivial_character(int n);
SnClassFunction sign_character(int n);
SnClassFunction regular_character(int n);  // regular module in degree 0

// Schur expansion of (1/n!) sum_w Tr(w; T) p_{cycle type(w)}; throws
// integrity_error when the input is not an integral character.
std::map<Partition, UniPoly> frobenius_sn(const SnClassFunction& cf, int n);

// Per-node Schur expansion of |group|^{-1} sum_g Tr(g; T) phat_{type(g)},
// where phat is the class power-sum family; the result is written in the
// irreducible-indexed power sums via the finite Fourier transform and then
// converted to Schur form.
TensorPoly frobenius_wreath(const WreathClassFunction& cf, int n, int r);

// Graded character of (bounded-exponent polynomials) tensor M with the
// grading of M dilated by r; the ingredient traces multiply.
WreathClassFunction induced_character(const SnClassFunction& cf, int n, int r);

// Both sides of the induction identity: the wreath Frobenius of the induced
// character against the plethystic substitution X^(0) + T X^(1) + ... into
// the S_n Frobenius with grading dilated by r.
struct InductionCheck {
  TensorPoly by_group;
  TensorPoly by_plethysm;
  bool equal() const { return by_group == by_plethysm; }
};
InductionCheck induction_frobenius(const SnClassFunction& cf, int n, int r);

// Column-rectangle identity: omega of the plethystically induced
// single-alphabet function for columns of heights mu, against the
// node-reversed uniform specialization of the cyclic creation-operator
// function on the same column data at first node 0.
struct RmuCheck {
  TensorPoly induced;
  TensorPoly quiver;
  bool equal() const { return induced == quiver; }
};
RmuCheck rmu_identity(const Partition& mu, int r);

}  // namespace qks
