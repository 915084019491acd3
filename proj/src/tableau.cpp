#include "qks/tableau.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>

namespace qks {

std::string word_to_string(const Word& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i && (w[i] > 9 || w[i - 1] > 9)) s += ".";
    s += std::to_string(w[i]);
  }
  return s;
}

Word word_concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

std::vector<int> content_of(const Word& w, int alphabet) {
  std::vector<int> c(alphabet, 0);
  for (int x : w) {
    assert(x >= 1);
    if (x > static_cast<int>(c.size())) c.resize(x, 0);
    ++c[x - 1];
  }
  return c;
}

bool is_weakly_increasing(const Word& w) {
  return std::is_sorted(w.begin(), w.end());
}

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  for (size_t i = 0; i < rows_.size(); ++i) {
    assert(!rows_[i].empty());
    assert(std::is_sorted(rows_[i].begin(), rows_[i].end()));
    assert(rows_[i].front() >= 1);
    if (i > 0) {
      assert(rows_[i].size() <= rows_[i - 1].size());
      for (size_t j = 0; j < rows_[i].size(); ++j) assert(rows_[i][j] > rows_[i - 1][j]);
    }
  }
}

Tableau Tableau::yamanouchi(const Partition& shape) {
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < shape.length(); ++i)
    rows.push_back(std::vector<int>(shape[i], i + 1));
  return Tableau(std::move(rows));
}

Partition Tableau::shape() const {
  std::vector<int> p;
  for (const auto& r : rows_) p.push_back(static_cast<int>(r.size()));
  return Partition(std::move(p));
}

Word Tableau::word() const {
  Word w;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
    w.insert(w.end(), it->begin(), it->end());
  return w;
}

std::vector<int> Tableau::content(int alphabet) const { return content_of(word(), alphabet); }

Tableau Tableau::restrict_letters(int lo, int hi) const {
  std::vector<std::vector<int>> rows;
  for (const auto& r : rows_) {
    std::vector<int> keep;
    for (int x : r)
      if (x >= lo && x <= hi) keep.push_back(x);
    rows.push_back(std::move(keep));
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  return Tableau(std::move(rows));
}

Tableau Tableau::relabeled(int delta) const {
  std::vector<std::vector<int>> rows = rows_;
  for (auto& r : rows)
    for (int& x : r) {
      x += delta;
      assert(x >= 1);
    }
  return Tableau(std::move(rows));
}

std::string Tableau::to_string() const {
  if (rows_.empty()) return "[]";
  std::string s;
  for (const auto& r : rows_) {
    s += "[";
    for (size_t j = 0; j < r.size(); ++j) {
      if (j) s += " ";
      s += std::to_string(r[j]);
    }
    s += "]";
  }
  return s;
}

Tableau row_insert(const Tableau& t, int x) {
  std::vector<std::vector<int>> rows = t.rows();
  int cur = x;
  for (auto& r : rows) {
    auto it = std::upper_bound(r.begin(), r.end(), cur);
    if (it == r.end()) {
      r.push_back(cur);
      return Tableau(std::move(rows));
    }
    std::swap(cur, *it);
  }
  rows.push_back({cur});
  return Tableau(std::move(rows));
}

Tableau p_tableau(const Word& w) {
  Tableau t;
  for (int x : w) t = row_insert(t, x);
  return t;
}

bool knuth_equivalent(const Word& a, const Word& b) { return p_tableau(a) == p_tableau(b); }

std::vector<Word> knuth_class(const Word& w, size_t cap) {
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty() && seen.size() < cap) {
    Word u = queue.front();
    queue.pop_front();
    for (size_t p = 0; p + 2 < u.size(); ++p) {
      int a = u[p], b = u[p + 1], c = u[p + 2];
      Word v = u;
      bool moved = false;
      // xzy ~ zxy for x <= y < z (middle letter fixed).
      if (a <= c && c < b) { std::swap(v[p], v[p + 1]); moved = true; }        // xzy -> zxy
      else if (b <= c && c < a) { std::swap(v[p], v[p + 1]); moved = true; }   // zxy -> xzy
      // yxz ~ yzx for x < y <= z (first letter fixed).
      else if (b < a && a <= c) { std::swap(v[p + 1], v[p + 2]); moved = true; }  // yxz -> yzx
      else if (c < a && a <= b) { std::swap(v[p + 1], v[p + 2]); moved = true; }  // yzx -> yxz
      if (moved && seen.insert(v).second) queue.push_back(v);
    }
  }
  return std::vector<Word>(seen.begin(), seen.end());
}

namespace {

void gen_ssyt(const Partition& shape, int max_letter, std::vector<std::vector<int>>& rows,
              int i, int j, std::vector<Tableau>& out) {
  if (i == shape.length()) {
    out.push_back(Tableau(rows));
    return;
  }
  if (j == shape[i]) {
    gen_ssyt(shape, max_letter, rows, i + 1, 0, out);
    return;
  }
  int lo = 1;
  if (j > 0) lo = std::max(lo, rows[i][j - 1]);
  if (i > 0) lo = std::max(lo, rows[i - 1][j] + 1);
  for (int x = lo; x <= max_letter; ++x) {
    rows[i][j] = x;
    gen_ssyt(shape, max_letter, rows, i, j + 1, out);
  }
}

}  // namespace

std::vector<Tableau> enumerate_ssyt(const Partition& shape, int max_letter) {
  std::vector<Tableau> out;
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < shape.length(); ++i) rows.push_back(std::vector<int>(shape[i], 0));
  gen_ssyt(shape, max_letter, rows, 0, 0, out);
  return out;
}

Partition SkewTableau::outer() const {
  std::vector<int> p;
  for (size_t i = 0; i < rows.size(); ++i)
    p.push_back(inner[static_cast<int>(i)] + static_cast<int>(rows[i].size()));
  // Rows below the filled region may still carry inner cells; the inner shape
  // must be exhausted for a valid skew tableau, checked in valid().
  return Partition(std::move(p));
}

Word SkewTableau::word() const {
  Word w;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it)
    w.insert(w.end(), it->begin(), it->end());
  return w;
}

std::vector<int> SkewTableau::content(int alphabet) const { return content_of(word(), alphabet); }

bool SkewTableau::valid() const {
  int n = static_cast<int>(rows.size());
  if (inner.length() > n) {
    // Trailing empty rows of the skew shape are fine only if they carry no cells;
    // inner rows beyond `rows` would mean outer < inner.
    for (int i = n; i < inner.length(); ++i)
      if (inner[i] > 0) return false;
  }
  std::vector<int> outer_row(n);
  for (int i = 0; i < n; ++i) outer_row[i] = inner[i] + static_cast<int>(rows[i].size());
  for (int i = 0; i + 1 < n; ++i)
    if (outer_row[i] < outer_row[i + 1]) return false;
  for (int i = 0; i < n; ++i) {
    if (!std::is_sorted(rows[i].begin(), rows[i].end())) return false;
    for (int x : rows[i])
      if (x < 1) return false;
  }
  // Column strictness across the inner offset.
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j < static_cast<int>(rows[i + 1].size()); ++j) {
      int col = inner[i + 1] + j;
      if (col >= inner[i]) {
        int above = rows[i][col - inner[i]];
        if (rows[i + 1][j] <= above) return false;
      }
    }
  return true;
}

std::string SkewTableau::to_string() const {
  std::string s = "inner" + inner.to_string() + " ";
  for (const auto& r : rows) {
    s += "[";
    for (size_t j = 0; j < r.size(); ++j) {
      if (j) s += " ";
      s += std::to_string(r[j]);
    }
    s += "]";
  }
  return s;
}

namespace {

void gen_skew(const Partition& outer, const Partition& inner, std::vector<int>& left,
              std::vector<std::vector<int>>& rows, int i, int j, std::vector<SkewTableau>& out) {
  int n = outer.length();
  if (i == n) {
    SkewTableau t{inner, rows};
    out.push_back(std::move(t));
    return;
  }
  int width = outer[i] - inner[i];
  if (j == width) {
    gen_skew(outer, inner, left, rows, i + 1, 0, out);
    return;
  }
  int col = inner[i] + j;
  int lo = 1;
  if (j > 0) lo = std::max(lo, rows[i][j - 1]);
  if (i > 0 && col >= inner[i - 1] && col < outer[i - 1])
    lo = std::max(lo, rows[i - 1][col - inner[i - 1]] + 1);
  for (int x = lo; x <= static_cast<int>(left.size()); ++x) {
    if (left[x - 1] == 0) continue;
    --left[x - 1];
    rows[i][j] = x;
    gen_skew(outer, inner, left, rows, i, j + 1, out);
    ++left[x - 1];
  }
}

}  // namespace

std::vector<SkewTableau> enumerate_skew_ssyt(const Partition& outer, const Partition& inner,
                                             const std::vector<int>& weight) {
  std::vector<SkewTableau> out;
  if (!outer.contains(inner)) return out;
  int cells = outer.size() - inner.size();
  int total = 0;
  for (int w : weight) total += w;
  if (total != cells) return out;
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < outer.length(); ++i)
    rows.push_back(std::vector<int>(outer[i] - inner[i], 0));
  std::vector<int> left = weight;
  gen_skew(outer, inner, left, rows, 0, 0, out);
  return out;
}

bool is_lattice_word(const Word& w) {
  std::vector<int> cnt;
  for (int x : w) {
    if (x > static_cast<int>(cnt.size())) cnt.resize(x, 0);
    ++cnt[x - 1];
    if (x > 1 && cnt[x - 1] > cnt[x - 2]) return false;
  }
  return true;
}

MultiPartition MultiTableau::shape() const {
  std::vector<Partition> s;
  for (const auto& t : comp_) s.push_back(t.shape());
  return MultiPartition(std::move(s));
}

Word MultiTableau::word() const {
  Word w;
  for (const auto& t : comp_) {
    Word u = t.word();
    w.insert(w.end(), u.begin(), u.end());
  }
  return w;
}

std::string MultiTableau::to_string() const {
  std::string s = "(";
  for (int i = 0; i < r(); ++i) {
    if (i) s += " | ";
    s += comp_[i].to_string();
  }
  return s + ")";
}

std::vector<MultiTableau> enumerate_multitableaux(const MultiPartition& shape, int max_letter) {
  std::vector<MultiTableau> out;
  std::vector<Tableau> acc(shape.r());
  auto rec = [&](auto&& self, int node) -> void {
    if (node == shape.r()) {
      out.push_back(MultiTableau(acc));
      return;
    }
    for (auto& t : enumerate_ssyt(shape[node], max_letter)) {
      acc[node] = t;
      self(self, node + 1);
    }
    acc[node] = Tableau();
  };
  rec(rec, 0);
  return out;
}

}  // namespace qks
