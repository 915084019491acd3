#include "qks/catabolism.hpp"

#include <algorithm>
#include <cassert>

#include "qks/lr_charge.hpp"

namespace qks {

DimVector letter_census(const MultiTableau& t, int k) {
  DimVector d(t.r(), 0);
  for (int i = 0; i < t.r(); ++i)
    for (const auto& row : t[i].rows())
      d[i] += static_cast<int>(std::count(row.begin(), row.end(), k));
  return d;
}

DimVector layer_vector(const MultiPartition& mu, int k) {
  assert(k >= 1);
  DimVector d(mu.r(), 0);
  for (int i = 0; i < mu.r(); ++i) d[i] = mu[i][k - 1];
  return d;
}

std::vector<int> layer_sizes(const MultiPartition& mu) {
  int depth = 0;
  for (const auto& p : mu.components()) depth = std::max(depth, p.length());
  std::vector<int> sizes(depth);
  for (int k = 1; k <= depth; ++k) {
    int s = 0;
    for (int v : layer_vector(mu, k)) s += v;
    sizes[k - 1] = s;
  }
  return sizes;
}

bool dominates_nodewise(const DimVector& d, const DimVector& f) {
  assert(d.size() == f.size());
  int run = 0;
  for (size_t i = 0; i < d.size(); ++i) {
    run += d[i] - f[i];
    if (i + 1 < d.size() && run < 0) return false;
  }
  return run == 0;
}

std::optional<MultiTableau> cat(const MultiTableau& t, int node, int p) {
  const int r = t.r();
  assert(0 <= node && node < r);
  assert(p >= 0);
  const Tableau& ti = t[node];
  const std::vector<int> first = ti.empty() ? std::vector<int>{} : ti.row(0);
  int ones = 0;
  while (ones < static_cast<int>(first.size()) && first[ones] == 1) ++ones;
  if (ones < p) return std::nullopt;
  Word v(first.begin() + p, first.end());

  std::vector<std::vector<int>> rest;
  for (int i = 1; i < ti.n_rows(); ++i) rest.push_back(ti.row(i));
  Tableau hat(std::move(rest));

  MultiTableau out = t;
  if (r == 1) {
    Word w = v;
    Word hw = hat.word();
    w.insert(w.end(), hw.begin(), hw.end());
    out[0] = p_tableau(w);
  } else {
    int next = (node + 1) % r;
    out[node] = hat;
    Word w = v;
    Word nw = t[next].word();
    w.insert(w.end(), nw.begin(), nw.end());
    out[next] = p_tableau(w);
  }
  return out;
}

std::optional<MultiTableau> ccat(const MultiTableau& t, const DimVector& d) {
  assert(static_cast<int>(d.size()) == t.r());
  MultiTableau cur = t;
  for (int i = 0; i < t.r(); ++i) {
    auto step = cat(cur, i, d[i]);
    if (!step) return std::nullopt;
    cur = std::move(*step);
  }
  return cur;
}

namespace {

// Letter content of the whole multitableau (index k-1 counts letter k).
std::vector<int> full_content(const MultiTableau& t) {
  std::vector<int> cnt;
  for (int i = 0; i < t.r(); ++i)
    for (const auto& row : t[i].rows())
      for (int x : row) {
        if (x > static_cast<int>(cnt.size())) cnt.resize(x, 0);
        ++cnt[x - 1];
      }
  return cnt;
}

MultiTableau shift_down(const MultiTableau& t) {
  std::vector<Tableau> comp;
  comp.reserve(t.r());
  for (int i = 0; i < t.r(); ++i) comp.push_back(t[i].relabeled(-1));
  return MultiTableau(std::move(comp));
}

}  // namespace

bool is_cascade_catabolizable(const MultiTableau& t, const MultiPartition& mu) {
  assert(t.r() == mu.r());
  const std::vector<int> sizes = layer_sizes(mu);
  const std::vector<int> cnt = full_content(t);
  if (cnt.size() > sizes.size()) return false;
  for (size_t k = 0; k < sizes.size(); ++k)
    if ((k < cnt.size() ? cnt[k] : 0) != sizes[k]) return false;

  MultiTableau cur = t;
  for (size_t k = 1; k <= sizes.size(); ++k) {
    auto round = ccat(cur, layer_vector(mu, static_cast<int>(k)));
    if (!round) return false;
    // The census check above guarantees every remaining one was stripped.
    for (int i = 0; i < round->r(); ++i)
      assert(letter_census(*round, 1)[i] == 0);
    cur = shift_down(*round);
  }
  for (int i = 0; i < cur.r(); ++i) assert(cur[i].empty());
  return true;
}

std::vector<MultiTableau> cascade_tableaux(const MultiPartition& shape,
                                           const MultiPartition& mu) {
  std::vector<MultiTableau> out;
  const std::vector<int> sizes = layer_sizes(mu);
  int total = 0;
  for (int s : sizes) total += s;
  if (shape.size() != total) return out;
  for (const auto& t : enumerate_multitableaux(shape, static_cast<int>(sizes.size())))
    if (is_cascade_catabolizable(t, mu)) out.push_back(t);
  return out;
}

UniPoly cascade_charge_sum(const MultiPartition& shape, const MultiPartition& mu) {
  const std::vector<int> sizes = layer_sizes(mu);
  UniPoly acc;
  for (const auto& t : cascade_tableaux(shape, mu))
    acc += UniPoly::monomial(ls_charge(t.word(), sizes));
  return acc;
}

}  // namespace qks
