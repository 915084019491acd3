#include "qks/crystal.hpp"

#include <algorithm>
#include <cassert>

#include "qks/rsk.hpp"

namespace qks {

BracketInfo bracket_info(const Word& w, int i) {
  BracketInfo info;
  std::vector<size_t> open;  // unmatched i+1 positions (stack)
  for (size_t p = 0; p < w.size(); ++p) {
    if (w[p] == i + 1) {
      open.push_back(p);
    } else if (w[p] == i) {
      if (!open.empty())
        open.pop_back();
      else
        info.unpaired_low.push_back(p);
    }
  }
  info.unpaired_high = std::move(open);
  return info;
}

int eps_i(const Word& w, int i) { return static_cast<int>(bracket_info(w, i).unpaired_high.size()); }
int phi_i(const Word& w, int i) { return static_cast<int>(bracket_info(w, i).unpaired_low.size()); }

std::optional<Word> raise_e(const Word& w, int i) {
  BracketInfo info = bracket_info(w, i);
  if (info.unpaired_high.empty()) return std::nullopt;
  Word v = w;
  v[info.unpaired_high.front()] = i;
  return v;
}

std::optional<Word> lower_f(const Word& w, int i) {
  BracketInfo info = bracket_info(w, i);
  if (info.unpaired_low.empty()) return std::nullopt;
  Word v = w;
  v[info.unpaired_low.back()] = i + 1;
  return v;
}

Word reflect_s(const Word& w, int i) {
  BracketInfo info = bracket_info(w, i);
  std::vector<size_t> pos = info.unpaired_low;
  pos.insert(pos.end(), info.unpaired_high.begin(), info.unpaired_high.end());
  std::sort(pos.begin(), pos.end());
  int eps = static_cast<int>(info.unpaired_high.size());
  Word v = w;
  for (size_t k = 0; k < pos.size(); ++k) v[pos[k]] = static_cast<int>(k) < eps ? i : i + 1;
  return v;
}

bool is_yamanouchi(const Word& w) {
  int m = 0;
  for (int x : w) m = std::max(m, x);
  for (int i = 1; i < m; ++i)
    if (eps_i(w, i) != 0) return false;
  return true;
}

Word w0_block(const Word& w, int lo, int hi) {
  Word v = w;
  for (int j = lo; j < hi; ++j)
    for (int i = j; i >= lo; --i) v = reflect_s(v, i);
  return v;
}

Word w0_eta(const Word& w, const std::vector<int>& eta) {
  Word v = w;
  int off = 0;
  for (int h : eta) {
    v = w0_block(v, off + 1, off + h);
    off += h;
  }
  return v;
}

int row_overlap(const Word& v, const Word& u) {
  int b = static_cast<int>(v.size()), a = static_cast<int>(u.size());
  for (int c = std::min(a, b); c >= 0; --c) {
    bool ok = true;
    for (int j = 0; j < c; ++j)
      if (!(u[j] < v[b - c + j])) {
        ok = false;
        break;
      }
    if (ok) return c;
  }
  return 0;
}

int dual_eps_pair(const Word& u_p, const Word& u_p1) {
  return static_cast<int>(u_p1.size()) - row_overlap(u_p1, u_p);
}

namespace {

// Two-row skew arrangement: top at column offset o over bottom at 0.
struct TwoRow {
  int o;
  Word top, bottom;
};

// Reverse slide adding a cell at the right end of the bottom row: the hole
// drifts left until the top entry above it may drop (tie drops), then the
// freed top cell bubbles out at the top left, raising the offset.
void move_down(TwoRow& s) {
  int b = static_cast<int>(s.bottom.size()), a = static_cast<int>(s.top.size());
  int c = b;
  while (true) {
    bool has_left = c >= 1;
    bool has_up = c - s.o >= 0 && c - s.o < a;
    if (has_left && (!has_up || s.bottom[c - 1] > s.top[c - s.o])) {
      --c;
      continue;
    }
    assert(has_up);
    break;
  }
  int k = c - s.o;
  s.bottom.insert(s.bottom.begin() + c, s.top[k]);
  s.top.erase(s.top.begin() + k);
  ++s.o;
}

// Exact inverse: the hole enters at the top left, drifts right until the
// bottom entry below it may rise (tie rises), lowering the offset.
void move_up(TwoRow& s) {
  assert(s.o >= 1);
  int b = static_cast<int>(s.bottom.size()), a = static_cast<int>(s.top.size());
  int c = s.o - 1;
  while (true) {
    bool has_right = c + 1 - s.o >= 0 && c + 1 - s.o < a;
    assert(c < b);
    if (has_right && s.bottom[c] > s.top[c + 1 - s.o]) {
      ++c;
      continue;
    }
    break;
  }
  int k = c - (s.o - 1);
  s.top.insert(s.top.begin() + k, s.bottom[c]);
  s.bottom.erase(s.bottom.begin() + c);
  --s.o;
}

}  // namespace

std::optional<std::pair<Word, Word>> dual_pair_op(const Word& u_p, const Word& u_p1, DualOp op) {
  assert(is_weakly_increasing(u_p) && is_weakly_increasing(u_p1));
  int a = static_cast<int>(u_p.size()), b = static_cast<int>(u_p1.size());
  int eps = dual_eps_pair(u_p, u_p1);
  int down = 0;  // net number of cells moving top -> bottom
  switch (op) {
    case DualOp::E:
      if (eps < 1) return std::nullopt;
      down = 1;
      break;
    case DualOp::S:
      down = a - b;
      break;
    case DualOp::SE:
      if (eps < 1) return std::nullopt;
      down = a + 1 - b;
      break;
  }
  TwoRow s{b - row_overlap(u_p1, u_p), u_p, u_p1};
  for (; down > 0; --down) move_down(s);
  for (; down < 0; ++down) move_up(s);
  return std::make_pair(s.top, s.bottom);
}

std::optional<std::vector<Word>> dual_tuple_op(const std::vector<Word>& rows, int p, DualOp op) {
  assert(p >= 1 && p < static_cast<int>(rows.size()));
  auto res = dual_pair_op(rows[p - 1], rows[p], op);
  if (!res) return std::nullopt;
  std::vector<Word> out = rows;
  out[p - 1] = std::move(res->first);
  out[p] = std::move(res->second);
  return out;
}

std::optional<std::vector<Word>> dual_tuple_op_via_recording(const std::vector<Word>& rows, int p,
                                                             DualOp op) {
  auto [ptab, q] = [&] {
    PsiResult res = psi_insert(rows, Tableau());
    return std::pair{res.p, chain_to_tableau(res.chain)};
  }();
  Word qw = q.word();
  std::optional<Word> moved;
  switch (op) {
    case DualOp::E:
      moved = raise_e(qw, p);
      break;
    case DualOp::S:
      moved = reflect_s(qw, p);
      break;
    case DualOp::SE: {
      moved = raise_e(qw, p);
      if (moved) moved = reflect_s(*moved, p);
      break;
    }
  }
  if (!moved) return std::nullopt;
  Tableau q2 = p_tableau(*moved);
  assert(q2.shape() == q.shape());
  ShapeChain chain = tableau_to_chain(q2, static_cast<int>(rows.size()));
  PsiInverseResult inv = psi_extract(ptab, chain);
  assert(inv.base.empty());
  return inv.rows;
}

}  // namespace qks
