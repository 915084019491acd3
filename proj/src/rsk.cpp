#include "qks/rsk.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <tuple>

namespace qks {

namespace {

std::vector<std::vector<int>> to_columns(const Tableau& t) {
  std::vector<std::vector<int>> cols;
  for (int i = 0; i < t.n_rows(); ++i)
    for (int j = 0; j < static_cast<int>(t.row(i).size()); ++j) {
      if (j >= static_cast<int>(cols.size())) cols.resize(j + 1);
      cols[j].push_back(t.row(i)[j]);
    }
  return cols;
}

Tableau from_columns(const std::vector<std::vector<int>>& cols) {
  std::vector<std::vector<int>> rows;
  for (size_t j = 0; j < cols.size(); ++j)
    for (size_t i = 0; i < cols[j].size(); ++i) {
      if (i >= rows.size()) rows.resize(i + 1);
      rows[i].push_back(cols[j][i]);
    }
  return Tableau(std::move(rows));
}

}  // namespace

Tableau column_insert(const Tableau& t, int x) {
  auto cols = to_columns(t);
  int cur = x;
  for (size_t j = 0;; ++j) {
    if (j >= cols.size()) {
      cols.resize(j + 1);
      cols[j].push_back(cur);
      break;
    }
    auto& col = cols[j];
    auto it = std::lower_bound(col.begin(), col.end(), cur);  // topmost entry >= cur
    if (it == col.end()) {
      col.push_back(cur);
      break;
    }
    std::swap(cur, *it);
  }
  return from_columns(cols);
}

Tableau insert_row_word(const Tableau& t, const Word& u) {
  assert(is_weakly_increasing(u));
  Tableau p = t;
  for (auto it = u.rbegin(); it != u.rend(); ++it) p = column_insert(p, *it);
  return p;
}

std::pair<Word, Tableau> remove_row_strip(const Tableau& p, const Partition& inner) {
  Partition outer = p.shape();
  assert(is_horizontal_strip(outer, inner));
  auto cols = to_columns(p);
  // Strip cells, one per column, processed right to left.
  std::vector<std::pair<int, int>> cells;  // (col, row)
  for (int i = 0; i < outer.length(); ++i)
    for (int j = inner[i]; j < outer[i]; ++j) cells.push_back({j, i});
  std::sort(cells.begin(), cells.end());
  Word expelled;
  for (auto it = cells.rbegin(); it != cells.rend(); ++it) {
    int j = it->first;
    assert(it->second == static_cast<int>(cols[j].size()) - 1);
    int carry = cols[j].back();
    cols[j].pop_back();
    for (int jj = j - 1; jj >= 0; --jj) {
      // Un-bump: carry replaces the bottommost entry <= carry.
      auto& col = cols[jj];
      auto pos = std::upper_bound(col.begin(), col.end(), carry);
      assert(pos != col.begin());
      --pos;
      std::swap(carry, *pos);
    }
    expelled.push_back(carry);
  }
  assert(is_weakly_increasing(expelled));
  return {expelled, from_columns(cols)};
}

PsiResult psi_insert(const std::vector<Word>& rows, const Tableau& base) {
  PsiResult res;
  res.p = base;
  res.chain.push_back(base.shape());
  for (const auto& u : rows) {
    res.p = insert_row_word(res.p, u);
    Partition sh = res.p.shape();
    assert(is_horizontal_strip(sh, res.chain.back()));
    res.chain.push_back(sh);
  }
  return res;
}

PsiInverseResult psi_extract(const Tableau& p, const ShapeChain& chain) {
  assert(!chain.empty());
  assert(p.shape() == chain.back());
  PsiInverseResult res;
  res.base = p;
  std::vector<Word> rev;
  for (size_t k = chain.size() - 1; k > 0; --k) {
    auto [u, rest] = remove_row_strip(res.base, chain[k - 1]);
    rev.push_back(std::move(u));
    res.base = std::move(rest);
  }
  res.rows.assign(rev.rbegin(), rev.rend());
  return res;
}

Tableau chain_to_tableau(const ShapeChain& chain) {
  assert(!chain.empty() && chain.front().empty());
  std::vector<std::vector<int>> rows;
  for (size_t k = 1; k < chain.size(); ++k) {
    assert(is_horizontal_strip(chain[k], chain[k - 1]));
    for (int i = 0; i < chain[k].length(); ++i) {
      if (i >= static_cast<int>(rows.size())) rows.resize(i + 1);
      for (int j = chain[k - 1][i]; j < chain[k][i]; ++j)
        rows[i].push_back(static_cast<int>(k));
    }
  }
  return Tableau(std::move(rows));
}

ShapeChain tableau_to_chain(const Tableau& q, int letters) {
  ShapeChain chain;
  chain.push_back(Partition());
  for (int k = 1; k <= letters; ++k) chain.push_back(q.restrict_letters(1, k).shape());
  assert(chain.back() == q.shape());
  return chain;
}

std::pair<Tableau, Tableau> rsk_word(const Word& w) {
  Tableau p;
  ShapeChain chain{Partition()};
  for (int x : w) {
    p = column_insert(p, x);
    chain.push_back(p.shape());
  }
  return {p, chain_to_tableau(chain)};
}

namespace {

// Shapes mu with floor <= mu <= outer and outer/mu a horizontal strip of size k.
void strip_predecessors(const Partition& outer, const Partition& floor, int k,
                        std::vector<Partition>& out) {
  std::vector<int> mu(outer.length());
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == outer.length()) {
      if (left == 0) out.push_back(Partition(mu));
      return;
    }
    // Horizontal strip: mu_i >= outer_{i+1}; partition: mu_i <= mu_{i-1} is
    // automatic since mu_i <= outer_i <= mu_{i-1} fails only... enforce anyway.
    int lo = std::max(outer[i + 1], floor[i]);
    int hi = outer[i];
    if (i > 0) hi = std::min(hi, mu[i - 1]);
    for (int v = hi; v >= lo && outer[i] - v <= left; --v) {
      mu[i] = v;
      self(self, i + 1, left - (outer[i] - v));
    }
  };
  rec(rec, 0, k);
}

}  // namespace

long long kostka_number(const Partition& outer, const Partition& inner,
                        const std::vector<int>& weight) {
  if (!outer.contains(inner)) return 0;
  for (int w : weight)
    if (w < 0) return 0;
  std::vector<int> wt = weight;
  std::sort(wt.begin(), wt.end(), std::greater<int>());
  while (!wt.empty() && wt.back() == 0) wt.pop_back();
  int total = 0;
  for (int w : wt) total += w;
  if (total != outer.size() - inner.size()) return 0;
  if (wt.empty()) return 1;  // outer == inner by the size check

  using Key = std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>;
  thread_local std::map<Key, long long> cache;
  Key key{outer.parts(), inner.parts(), wt};
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  // Peel the last (smallest) multiplicity as the top letter; weight symmetry
  // makes the choice immaterial.
  int k = wt.back();
  std::vector<int> rest(wt.begin(), wt.end() - 1);
  std::vector<Partition> mus;
  strip_predecessors(outer, inner, k, mus);
  long long sum = 0;
  for (const auto& mu : mus) sum += kostka_number(mu, inner, rest);
  cache.emplace(std::move(key), sum);
  return sum;
}

long long lr_coefficient(const Partition& outer, const Partition& lambda, const Partition& mu) {
  if (!outer.contains(lambda)) return 0;
  if (outer.size() != lambda.size() + mu.size()) return 0;
  std::vector<int> weight(mu.parts());
  long long count = 0;
  for (const auto& t : enumerate_skew_ssyt(outer, lambda, weight)) {
    Word w = t.word();
    std::reverse(w.begin(), w.end());
    if (is_lattice_word(w)) ++count;
  }
  return count;
}

std::pair<Partition, Partition> star_shape(const std::vector<Partition>& blocks) {
  int m = static_cast<int>(blocks.size());
  std::vector<int> widths(m), heights(m);
  for (int i = 0; i < m; ++i) {
    widths[i] = blocks[i][0];
    heights[i] = blocks[i].length();
  }
  std::vector<int> outer, inner;
  for (int i = 0; i < m; ++i) {
    int coloff = 0;
    for (int j = i + 1; j < m; ++j) coloff += widths[j];
    for (int row = 0; row < heights[i]; ++row) {
      outer.push_back(coloff + blocks[i][row]);
      inner.push_back(coloff);
    }
  }
  return {Partition(std::move(outer)), Partition(std::move(inner))};
}

bool is_white_compatible(const Tableau& q, const Partition& outer, const Partition& inner) {
  Word w = word_concat(q.word(), Tableau::yamanouchi(inner).word());
  return p_tableau(w) == Tableau::yamanouchi(outer);
}

long long star_coefficient(const Partition& lambda, const std::vector<Partition>& blocks) {
  auto [outer, inner] = star_shape(blocks);
  if (lambda.size() != outer.size() - inner.size()) return 0;
  long long count = 0;
  for (const auto& q : enumerate_ssyt(lambda, std::max(outer.length(), 1)))
    if (is_white_compatible(q, outer, inner)) ++count;
  return count;
}

}  // namespace qks
