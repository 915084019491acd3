#include "qks/lr_charge.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "qks/crystal.hpp"
#include "qks/rsk.hpp"

namespace qks {

namespace {

Word relabel_word(const Word& w, int delta) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    assert(x + delta >= 1);
    out.push_back(x + delta);
  }
  return out;
}

// Blockwise long element of the subgroup fixing the first block: acts on the
// letters of blocks 2..s in their original positions in the alphabet.
Word w0_tail_blocks(const Word& w, const LRContext& ctx) {
  Word out = w;
  for (int k = 1; k < ctx.s(); ++k) {
    auto [lo, hi] = ctx.block_range(k);
    out = w0_block(out, lo, hi);
  }
  return out;
}

}  // namespace

LRContext::LRContext(std::vector<int> mu, std::vector<int> eta)
    : mu_(std::move(mu)), eta_(std::move(eta)) {
  if (mu_.size() != eta_.size())
    throw std::invalid_argument("rectangle widths and heights must have equal length");
  for (size_t k = 0; k < mu_.size(); ++k) {
    if (eta_[k] < 1) throw std::invalid_argument("rectangle heights must be positive");
    if (mu_[k] < 0 || (k > 0 && mu_[k] > mu_[k - 1]))
      throw std::invalid_argument("rectangle widths must be weakly decreasing and nonnegative");
  }
  for (size_t k = 0; k < mu_.size(); ++k) {
    n_ += eta_[k];
    cells_ += mu_[k] * eta_[k];
    content_.insert(content_.end(), eta_[k], mu_[k]);
  }
}

std::pair<int, int> LRContext::block_range(int k) const {
  int lo = 1;
  for (int j = 0; j < k; ++j) lo += eta_[j];
  return {lo, lo + eta_[k] - 1};
}

int LRContext::block_of(int letter) const {
  assert(letter >= 1 && letter <= n_);
  int hi = 0;
  for (int k = 0; k < s(); ++k) {
    hi += eta_[k];
    if (letter <= hi) return k;
  }
  return -1;
}

Tableau LRContext::rectangle(int k) const {
  if (mu_[k] == 0) return Tableau();
  auto [lo, hi] = block_range(k);
  std::vector<std::vector<int>> rows;
  for (int x = lo; x <= hi; ++x) rows.emplace_back(mu_[k], x);
  return Tableau(std::move(rows));
}

Word LRContext::rectangle_word(int k) const {
  auto [lo, hi] = block_range(k);
  Word w;
  for (int x = hi; x >= lo; --x) w.insert(w.end(), mu_[k], x);
  return w;
}

LRContext LRContext::tail() const {
  return LRContext(std::vector<int>(mu_.begin() + 1, mu_.end()),
                   std::vector<int>(eta_.begin() + 1, eta_.end()));
}

std::string LRContext::to_string() const {
  auto list = [](const std::vector<int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s + ")";
  };
  return "mu=" + list(mu_) + " eta=" + list(eta_);
}

bool is_lr_word(const Word& u, const LRContext& ctx) {
  if (static_cast<int>(u.size()) != ctx.total_cells()) return false;
  for (int x : u)
    if (x < 1 || x > ctx.n()) return false;
  for (int k = 0; k < ctx.s(); ++k) {
    auto [lo, hi] = ctx.block_range(k);
    Word sub;
    for (int x : u)
      if (x >= lo && x <= hi) sub.push_back(x);
    if (p_tableau(sub) != ctx.rectangle(k)) return false;
  }
  return true;
}

Word rotate_once(const Word& u, const LRContext& ctx) {
  if (u.empty()) return u;
  Word rest(u.begin() + 1, u.end());
  Word a = w0_eta(rest, ctx.eta());
  Word b = w0_eta(Word{u.front()}, ctx.eta());
  return word_concat(a, b);
}

Word rotate(const Word& u, const LRContext& ctx, long long steps) {
  assert(steps >= 0);
  Word w = u;
  for (long long i = 0; i < steps; ++i) w = rotate_once(w, ctx);
  return w;
}

int lr_charge(const Word& u, const LRContext& ctx) {
  if (ctx.s() == 0) {
    assert(u.empty());
    return 0;
  }
  const int eta1 = ctx.eta()[0];
  const int mu1 = ctx.mu()[0];
  if (mu1 == 0) {
    // No letters of the first block occur; drop it and shift the alphabet.
    return lr_charge(relabel_word(u, -eta1), ctx.tail());
  }
  Tableau p = p_tableau(u);
  assert(p.n_rows() >= eta1);
  // Rows 1..eta1 start with the first-block rectangle; what remains to the
  // right of it, read bottom row first, is the v of the factorization
  // u == (below-rectangle rows) . Y_1 . v.
  Word v;
  for (int k = eta1; k >= 1; --k) {
    const auto& row = p.row(k - 1);
    assert(static_cast<int>(row.size()) >= mu1);
    for (int j = 0; j < mu1; ++j) {
      assert(row[j] == k);
      (void)j;
    }
    for (size_t j = mu1; j < row.size(); ++j) {
      assert(row[j] > eta1);
      v.push_back(row[j]);
    }
  }
  Word below;
  for (int i = p.n_rows() - 1; i >= eta1; --i)
    below.insert(below.end(), p.row(i).begin(), p.row(i).end());
  Word refactored = below;
  Word y1 = ctx.rectangle_word(0);
  refactored.insert(refactored.end(), y1.begin(), y1.end());
  refactored.insert(refactored.end(), v.begin(), v.end());
  assert(p_tableau(refactored) == p);
  Word next = word_concat(w0_tail_blocks(v, ctx), w0_tail_blocks(below, ctx));
  return static_cast<int>(v.size()) + lr_charge(relabel_word(next, -eta1), ctx.tail());
}

int ls_charge(const Word& w, const std::vector<int>& content) {
  for (size_t i = 1; i < content.size(); ++i) assert(content[i - 1] >= content[i]);
  assert(content_of(w, static_cast<int>(content.size())) == content);
  std::vector<char> used(w.size(), 0);
  std::vector<int> remaining = content;
  const int sz = static_cast<int>(w.size());
  int total = 0;
  while (!remaining.empty() && remaining[0] > 0) {
    int top = 0;
    while (top < static_cast<int>(remaining.size()) && remaining[top] > 0) ++top;
    // One standard subword on letters 1..top, found by cyclic leftward scans;
    // each wrap past the left end adds one to the running index.
    int pos = -1;
    for (int j = sz - 1; j >= 0; --j)
      if (!used[j] && w[j] == 1) {
        pos = j;
        break;
      }
    assert(pos >= 0);
    used[pos] = 1;
    int index = 0;
    for (int x = 2; x <= top; ++x) {
      int found = -1;
      for (int j = pos - 1; j >= 0; --j)
        if (!used[j] && w[j] == x) {
          found = j;
          break;
        }
      if (found < 0) {
        for (int j = sz - 1; j > pos; --j)
          if (!used[j] && w[j] == x) {
            found = j;
            break;
          }
        assert(found >= 0);
        ++index;
      }
      used[found] = 1;
      pos = found;
      total += index;
    }
    for (int x = 0; x < top; ++x) --remaining[x];
  }
  return total;
}

std::vector<MultiTableau> lr_multitableaux(const MultiPartition& shape, const LRContext& ctx,
                                           int i1) {
  std::vector<MultiTableau> out;
  if (shape.size() != ctx.total_cells()) return out;
  const int eta1 = ctx.s() > 0 ? ctx.eta()[0] : 0;
  for (const auto& t : enumerate_multitableaux(shape, ctx.n())) {
    bool ok = true;
    for (int i = 0; i < i1 && ok; ++i) {
      std::vector<int> c = t[i].content(ctx.n());
      for (int x = 0; x < eta1; ++x)
        if (c[x] != 0) {
          ok = false;
          break;
        }
    }
    if (ok && is_lr_word(t.word(), ctx)) out.push_back(t);
  }
  return out;
}

UniPoly tableau_ks(const MultiPartition& shape, const LRContext& ctx, int i1) {
  UniPoly out;
  for (const auto& t : lr_multitableaux(shape, ctx, i1))
    out += UniPoly::monomial(lr_charge(t.word(), ctx));
  return out;
}

ArrowLaurent tableau_weight(const MultiTableau& t, const LRContext& ctx) {
  const int r = t.r();
  const int charge = lr_charge(t.word(), ctx);
  std::vector<int> exps(r, charge);
  int run = 0;
  for (int i = 0; i + 1 < r; ++i) {
    run += t[i].shape().size();
    exps[i] += run;
  }
  return ArrowLaurent::monomial(r, exps, 1);
}

}  // namespace qks
