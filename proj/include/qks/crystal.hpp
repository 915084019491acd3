#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qks/tableau.hpp"

namespace qks {

// Bracket matching for letter i: occurrences of i+1 open, occurrences of i
// close, an opener matches the nearest unmatched closer to its right.
// Unpaired letters always read i^phi (i+1)^eps left to right.
struct BracketInfo {
  std::vector<size_t> unpaired_low;   // positions of unpaired i
  std::vector<size_t> unpaired_high;  // positions of unpaired i+1
};
BracketInfo bracket_info(const Word& w, int i);

int eps_i(const Word& w, int i);  // = #unpaired i+1
int phi_i(const Word& w, int i);  // = #unpaired i

// Raising operator: leftmost unpaired i+1 becomes i.  Empty when eps = 0.
std::optional<Word> raise_e(const Word& w, int i);
// Lowering operator: rightmost unpaired i becomes i+1.  Empty when phi = 0.
std::optional<Word> lower_f(const Word& w, int i);
// Weyl reflection: rewrites the unpaired subword i^phi (i+1)^eps as
// i^eps (i+1)^phi.  An involution.
Word reflect_s(const Word& w, int i);

// Highest weight: eps_i = 0 for every i.
bool is_yamanouchi(const Word& w);

// Long-element action on one letter block [lo,hi] via the reduced word
// s_lo (s_{lo+1} s_lo) (s_{lo+2} s_{lo+1} s_lo) ...
Word w0_block(const Word& w, int lo, int hi);
// Blockwise long element for the composition eta of the alphabet 1..sum(eta).
Word w0_eta(const Word& w, const std::vector<int>& eta);

// Largest c such that u can sit on top of v's last c columns with strict
// column increase: u[j] < v[|v|-c+j] for all j < c.
int row_overlap(const Word& v, const Word& u);

enum class DualOp { E, S, SE };

// Dual (recording-side) crystal operators on a pair of weakly increasing rows
// (u_p above u_{p1}).  eps of the pair is |u_p1| - row_overlap(u_p1, u_p).
int dual_eps_pair(const Word& u_p, const Word& u_p1);

// Jeu-de-taquin implementation: slides cells between the two rows of the skew
// arrangement at minimal legal offset.  E needs eps >= 1; S always applies;
// SE sends lengths (a,b) to (b-1,a+1) and needs eps >= 1.
std::optional<std::pair<Word, Word>> dual_pair_op(const Word& u_p, const Word& u_p1, DualOp op);

// Same operators on a full tuple (rows[0] inserted first, so the operator
// index p in [1, rows.size()-1] touches rows[p-1], rows[p]).
std::optional<std::vector<Word>> dual_tuple_op(const std::vector<Word>& rows, int p, DualOp op);

// Reference implementation through the recording tableau: apply the ordinary
// crystal operator to word(Q) and re-extract the tuple.  Must agree with
// dual_tuple_op; kept as the oracle.
std::optional<std::vector<Word>> dual_tuple_op_via_recording(const std::vector<Word>& rows, int p,
                                                             DualOp op);

}  // namespace qks
