#pragma once

#include <optional>
#include <vector>

#include "qks/laurent.hpp"
#include "qks/partition.hpp"
#include "qks/tableau.hpp"

namespace qks {

// Census over quiver nodes; entry i counts something at node i.
using DimVector = std::vector<int>;

// How many letters k sit at each node of t.
DimVector letter_census(const MultiTableau& t, int k);

// k-th layer of mu read as a dimension vector: entry i is the k-th part of
// mu^(i) (k is 1-based).
DimVector layer_vector(const MultiPartition& mu, int k);

// Layer sizes |layer_vector(mu, 1)|, |layer_vector(mu, 2)|, ...; weakly
// decreasing since each component of mu is a partition.
std::vector<int> layer_sizes(const MultiPartition& mu);

// d >= f in the order whose positive cone is spanned by the differences
// e^(i) - e^(i+1), i = 0..r-2: all partial sums of d - f are nonnegative and
// the totals agree.
bool dominates_nodewise(const DimVector& d, const DimVector& f);

// Single-row catabolism at a node.  Admitted when the first row of t[node]
// starts with at least p ones; then that row is removed, p ones are deleted
// from it, and the remaining row word is column-inserted in front of the next
// node's tableau (for r = 1, in front of the rest of the same tableau).
// Returns nullopt when not admitted.
std::optional<MultiTableau> cat(const MultiTableau& t, int node, int p);

// Cascading catabolism: cat at nodes 0, 1, ..., r-1 in that order, stripping
// d[i] ones at node i.  nullopt when any step is not admitted.
std::optional<MultiTableau> ccat(const MultiTableau& t, const DimVector& d);

// Whether t survives the full cascade against mu: the letter-k census of t
// must total the k-th layer of mu, and the rounds ccat(layer 1), ccat(layer
// 2), ... must all be admitted, each round eating the smallest letter still
// present.
bool is_cascade_catabolizable(const MultiTableau& t, const MultiPartition& mu);

// All cascade-survivors of the given shape, in enumeration order.
std::vector<MultiTableau> cascade_tableaux(const MultiPartition& shape, const MultiPartition& mu);

// Charge generating function over cascade_tableaux(shape, mu): each survivor
// contributes t^c where c is the classical charge of its concatenated reading
// word with respect to the layer sizes of mu.
UniPoly cascade_charge_sum(const MultiPartition& shape, const MultiPartition& mu);

}  // namespace qks
