#include "qks/sweep.hpp"

#include <algorithm>

#include "qks/lr_charge.hpp"

namespace qks {

std::vector<MultiPartition> sweep_shapes(const RectTriple& triple) {
  auto shapes = all_multipartitions(triple.r(), triple.total_size());
  std::sort(shapes.begin(), shapes.end());
  return shapes;
}

ArrowLaurent full_from_reduced(const UniPoly& reduced, const LusztigDatum& d,
                               const MultiPartition& lam) {
  const int r = d.r();
  if (reduced.is_zero()) return ArrowLaurent(r);
  auto exps = root_lattice_exponents(d, lam);
  if (!exps)
    throw integrity_error("nonzero reduced coefficient for a shape outside the root lattice");
  ArrowLaurent out(r);
  for (int k = 0; k <= reduced.degree(); ++k) {
    if (reduced.coeff(k) == 0) continue;
    std::vector<int> e(r, k);  // k copies of the full cycle
    for (size_t i = 0; i < exps->size(); ++i) e[i] += (*exps)[i];
    out += ArrowLaurent::monomial(r, e, reduced.coeff(k));
  }
  return out;
}

namespace {

// Run body(i) over [0, count), serially for jobs <= 1.
template <typename Body>
void parallel_shapes(long long count, int jobs, const Body& body) {
  if (jobs <= 1) {
    for (long long i = 0; i < count; ++i) body(i);
    return;
  }
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (long long i = 0; i < count; ++i) body(i);
}

}  // namespace

KsTables ks_tables(const RectTriple& triple, Method method, int jobs,
                   KsRecurrence::Mode mode) {
  if (method == Method::operators) return ks_tables_by_operators(triple.datum());

  const LusztigDatum d = triple.datum();
  const auto shapes = sweep_shapes(triple);
  std::vector<ArrowLaurent> full(shapes.size());
  std::vector<UniPoly> reduced(shapes.size());

  if (method == Method::tableau) {
    const LRContext ctx(triple.mu(), triple.eta());
    parallel_shapes(static_cast<long long>(shapes.size()), jobs, [&](long long i) {
      reduced[i] = tableau_ks(shapes[i], ctx, triple.i1());
      full[i] = full_from_reduced(reduced[i], d, shapes[i]);
    });
  } else {
    // Recurrence instances memoize and are not thread safe: one per worker.
    if (jobs <= 1) {
      KsRecurrence rec(triple, mode);
      for (size_t i = 0; i < shapes.size(); ++i) full[i] = rec.full(shapes[i]);
    } else {
#pragma omp parallel num_threads(jobs)
      {
        KsRecurrence rec(triple, mode);
#pragma omp for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(shapes.size()); ++i)
          full[i] = rec.full(shapes[i]);
      }
    }
    for (size_t i = 0; i < shapes.size(); ++i)
      if (!full[i].is_zero()) reduced[i] = reduced_ks(full[i], d, shapes[i]);
  }

  KsTables out;
  for (size_t i = 0; i < shapes.size(); ++i) {
    if (full[i].is_zero() && reduced[i].is_zero()) continue;
    out.full.emplace(shapes[i], full[i]);
    out.reduced.emplace(shapes[i], reduced[i]);
  }
  return out;
}

bool tables_equal(const KsTables& a, const KsTables& b) {
  return a.full == b.full && a.reduced == b.reduced;
}

}  // namespace qks
