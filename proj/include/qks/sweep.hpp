#pragma once

#include <vector>

#include "qks/ks_recurrence.hpp"
#include "qks/symfunc.hpp"

namespace qks {

// Table-filling engines.  `operators` expands the creation-operator product
// once and reads off every coefficient; the other two work shape by shape and
// parallelize across shapes.
enum class Method { tableau, recurrence, operators };

// Every multipartition of the triple's total cell count, in increasing order
// (size vector, then per-component lex) -- the row order of all tables.
std::vector<MultiPartition> sweep_shapes(const RectTriple& triple);

// Rebuild the full arrow polynomial from a reduced one: dominance monomial
// times the reduced polynomial evaluated at the full cycle.  A nonzero reduced
// value for a shape outside the root lattice throws integrity_error.
ArrowLaurent full_from_reduced(const UniPoly& reduced, const LusztigDatum& d,
                               const MultiPartition& lam);

// KS tables (full + reduced) over all shapes of the right size.  jobs <= 1
// runs the serial reference loop; jobs > 1 distributes shapes across an
// OpenMP team with one recurrence instance per worker.  Assembly is by shape
// index, so the result is identical for every worker count.  Zero rows are
// dropped.
KsTables ks_tables(const RectTriple& triple, Method method, int jobs = 1,
                   KsRecurrence::Mode mode = KsRecurrence::Mode::coset);

bool tables_equal(const KsTables& a, const KsTables& b);

}  // namespace qks
