#include "qks/ks_recurrence.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qks/crystal.hpp"
#include "qks/rsk.hpp"

namespace qks {

namespace {

int perm_sign(const std::vector<int>& w) {
  int inv = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int vec_total(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

bool all_at_least(const std::vector<int>& v, const std::vector<int>& floor) {
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] < floor[i]) return false;
  return true;
}

bool nonnegative(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

// Rebuild a tableau from its reading word given the shape (the word starts
// with the bottom row).
Tableau from_word_shape(const Word& w, const Partition& shape) {
  assert(static_cast<int>(w.size()) == shape.size());
  std::vector<std::vector<int>> rows(shape.length());
  size_t pos = 0;
  for (int i = shape.length() - 1; i >= 0; --i) {
    rows[i].assign(w.begin() + pos, w.begin() + pos + shape[i]);
    pos += shape[i];
  }
  return Tableau(std::move(rows));
}

// Cut a word into consecutive pieces of the given lengths.
std::vector<Word> split_lengths(const Word& w, const std::vector<int>& lengths) {
  assert(vec_total(lengths) == static_cast<int>(w.size()));
  std::vector<Word> out;
  size_t pos = 0;
  for (int len : lengths) {
    out.emplace_back(w.begin() + pos, w.begin() + pos + len);
    pos += len;
  }
  return out;
}

// Recording chains of skew recording tableaux (letter k fills chain[k]/chain[k-1]).
ShapeChain chain_from_skew(const SkewTableau& u, int letters) {
  ShapeChain chain{u.inner};
  std::vector<int> len(u.rows.size());
  for (size_t i = 0; i < u.rows.size(); ++i) len[i] = u.inner[static_cast<int>(i)];
  for (int k = 1; k <= letters; ++k) {
    for (size_t i = 0; i < u.rows.size(); ++i)
      len[i] += static_cast<int>(std::count(u.rows[i].begin(), u.rows[i].end(), k));
    chain.push_back(Partition(len));
  }
  assert(chain.back() == u.outer());
  return chain;
}

SkewTableau skew_from_chain(const ShapeChain& chain) {
  SkewTableau out;
  out.inner = chain.front();
  out.rows.assign(chain.back().length(), {});
  for (size_t k = 1; k < chain.size(); ++k)
    for (int i = 0; i < chain[k].length(); ++i)
      for (int c = chain[k - 1][i]; c < chain[k][i]; ++c)
        out.rows[i].push_back(static_cast<int>(k));
  assert(out.valid());
  return out;
}

Tableau straight(const SkewTableau& u) {
  assert(u.inner.empty());
  return Tableau(u.rows);
}

Tableau shift_letters(const Tableau& t, int delta) {
  for (const auto& row : t.rows())
    for (int x : row) assert(x + delta >= 1);
  return t.relabeled(delta);
}

// Rightmost letter p+1 in w that is p-unpaired; returns p, or nothing when
// the word is Yamanouchi.
std::optional<int> find_violation(const Word& w) {
  int top = 0;
  for (int x : w) top = std::max(top, x);
  int best_pos = -1, best_p = 0;
  for (int p = 1; p < top; ++p) {
    BracketInfo bi = bracket_info(w, p);
    if (bi.unpaired_high.empty()) continue;
    int pos = static_cast<int>(bi.unpaired_high.back());
    if (pos > best_pos) {
      best_pos = pos;
      best_p = p;
    }
  }
  if (best_pos < 0) return std::nullopt;
  return best_p;
}

std::vector<int> identity_perm(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return w;
}

}  // namespace

std::pair<std::vector<int>, std::vector<int>> staircase_split(const Partition& lambda,
                                                              const std::vector<int>& w, int a) {
  const int n = static_cast<int>(w.size());
  assert(lambda.length() <= n);
  std::vector<int> alpha, beta;
  for (int j = 0; j < n; ++j) {
    int img = w[j] - 1;
    int z = lambda[img] + (n - 1 - img) - (n - 1 - j);
    (j < a ? alpha : beta).push_back(z);
  }
  return {alpha, beta};
}

KsRecurrence::KsRecurrence(const RectTriple& triple, Mode mode)
    : triple_(triple), mode_(mode), entries_(triple.datum().entries()) {
  const auto& eta = triple_.eta();
  int closed = 0;
  for (const DatumEntry& e : entries_) {
    block_.push_back(closed);
    int letters = 0;
    for (size_t j = closed; j < eta.size(); ++j) letters += eta[j];
    alphabet_.push_back(letters);
    assert(e.a == eta[closed]);
    if (e.node == triple_.r() - 1) ++closed;
  }
  assert(closed == triple_.s());
}

ArrowLaurent KsRecurrence::full(const MultiPartition& shape) {
  assert(shape.r() == triple_.r());
  return eval(0, shape);
}

UniPoly KsRecurrence::reduced(const MultiPartition& shape) {
  return reduced_ks(full(shape), triple_.datum(), shape);
}

ArrowLaurent KsRecurrence::eval(size_t idx, const MultiPartition& shape) {
  const int r = triple_.r();
  if (idx == entries_.size()) {
    bool empty = true;
    for (int j = 0; j < r; ++j)
      if (!shape[j].empty()) empty = false;
    return empty ? ArrowLaurent::constant(r, 1) : ArrowLaurent(r);
  }
  auto key = std::make_pair(idx, shape);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  ArrowLaurent res(r);
  if (shape[entries_[idx].node].length() <= alphabet_[idx]) {
    if (entries_[idx].node == r - 1)
      res = closing_step(idx, shape);
    else
      res = mode_ == Mode::coset ? interior_step_coset(idx, shape) : interior_step(idx, shape);
  }
  memo_.emplace(key, res);
  return res;
}

// Entry at node i < r-1: the weight is empty, the node's component is resolved
// against the staircase and its first a rows migrate to node i+1.
ArrowLaurent KsRecurrence::interior_step(size_t idx, const MultiPartition& shape) {
  const DatumEntry& e = entries_[idx];
  const int r = triple_.r();
  const int i = e.node, next = i + 1;
  const int n = alphabet_[idx], a = e.a;
  assert(vec_total(e.weight) == 0);
  ArrowLaurent acc(r);
  for (const auto& w : all_permutations(n)) {
    auto [alpha, beta] = staircase_split(shape[i], w, a);
    if (!nonnegative(alpha) || !nonnegative(beta)) continue;
    const int added = vec_total(alpha);
    const long long sgn = perm_sign(w);
    for (const Partition& ghi : partitions_over(shape[next], added, n)) {
      long long k1 = kostka_number(ghi, shape[next], alpha);
      if (k1 == 0) continue;
      for (const Partition& glo : all_partitions(vec_total(beta), n - a)) {
        long long k2 = kostka_number(glo, Partition(), beta);
        if (k2 == 0) continue;
        MultiPartition g = shape;
        g[i] = glo;
        g[next] = ghi;
        ArrowLaurent sub = eval(idx + 1, g);
        if (sub.is_zero()) continue;
        acc += sub * ArrowLaurent::arrow_power(r, i, added, sgn * k1 * k2);
      }
    }
  }
  return acc;
}

// Same step restricted to minimal coset representatives: choose the a image
// positions, so alpha and beta come out weakly decreasing and the inner sum
// collapses to a Littlewood-Richardson coefficient.
ArrowLaurent KsRecurrence::interior_step_coset(size_t idx, const MultiPartition& shape) {
  const DatumEntry& e = entries_[idx];
  const int r = triple_.r();
  const int i = e.node, next = i + 1;
  const int n = alphabet_[idx], a = e.a;
  assert(vec_total(e.weight) == 0);
  ArrowLaurent acc(r);
  std::vector<int> pick(a);
  std::iota(pick.begin(), pick.end(), 1);
  while (true) {
    std::vector<int> w(pick.begin(), pick.end());
    std::vector<bool> used(n + 1, false);
    int len = 0;
    for (int k = 0; k < a; ++k) {
      used[pick[k]] = true;
      len += pick[k] - (k + 1);
    }
    for (int v = 1; v <= n; ++v)
      if (!used[v]) w.push_back(v);
    auto [alpha, beta] = staircase_split(shape[i], w, a);
    bool ok = (alpha.empty() || alpha.back() >= 0) && (beta.empty() || beta.back() >= 0);
    if (ok) {
      const int added = vec_total(alpha);
      const long long sgn = len % 2 == 0 ? 1 : -1;
      const Partition alpha_p(alpha), beta_p(beta);
      for (const Partition& ghi : partitions_over(shape[next], added, n)) {
        long long c = lr_coefficient(ghi, shape[next], alpha_p);
        if (c == 0) continue;
        MultiPartition g = shape;
        g[i] = beta_p;
        g[next] = ghi;
        ArrowLaurent sub = eval(idx + 1, g);
        if (sub.is_zero()) continue;
        acc += sub * ArrowLaurent::arrow_power(r, i, added, sgn * c);
      }
    }
    // next a-subset of [n] in lexicographic order
    int k = a - 1;
    while (k >= 0 && pick[k] == n - (a - 1 - k)) --k;
    if (k < 0) break;
    ++pick[k];
    for (int j = k + 1; j < a; ++j) pick[j] = pick[j - 1] + 1;
  }
  return acc;
}

// Entry at node r-1: strips the rectangle (mu_b^a), moves the remainder of
// the first a rows to node 0 (for r = 1, back onto the same node), and drops
// to the alphabet without the first eta-block.
ArrowLaurent KsRecurrence::closing_step(size_t idx, const MultiPartition& shape) {
  const DatumEntry& e = entries_[idx];
  const int r = triple_.r();
  const int n = alphabet_[idx], a = e.a;
  const int m = n - a;
  const int mu1 = triple_.mu()[block_[idx]];
  assert(e.weight == std::vector<int>(a, mu1));
  const std::vector<int> nu(a, mu1);
  for (int j = 1; j < r - 1; ++j)
    if (shape[j].length() > m) return ArrowLaurent(r);
  ArrowLaurent acc(r);
  for (const auto& w : all_permutations(n)) {
    auto [alpha, beta] = staircase_split(shape[r - 1], w, a);
    if (!all_at_least(alpha, nu) || !nonnegative(beta)) continue;
    std::vector<int> rest(alpha);
    for (int& x : rest) x -= mu1;
    const int added = vec_total(rest);
    const long long sgn = perm_sign(w);
    if (r >= 2) {
      for (const Partition& ghi : partitions_over(shape[0], added, m)) {
        long long k1 = kostka_number(ghi, shape[0], rest);
        if (k1 == 0) continue;
        for (const Partition& glo : all_partitions(vec_total(beta), m)) {
          long long k2 = kostka_number(glo, Partition(), beta);
          if (k2 == 0) continue;
          MultiPartition g = shape;
          g[r - 1] = glo;
          g[0] = ghi;
          ArrowLaurent sub = eval(idx + 1, g);
          if (sub.is_zero()) continue;
          acc += sub * ArrowLaurent::arrow_power(r, r - 1, added, sgn * k1 * k2);
        }
      }
    } else {
      // Loop quiver: settle the remaining rows first, then regrow the strip
      // over them at the same node.
      for (const Partition& base : all_partitions(vec_total(beta), m)) {
        long long k2 = kostka_number(base, Partition(), beta);
        if (k2 == 0) continue;
        for (const Partition& g0 : partitions_over(base, added, m)) {
          long long k1 = kostka_number(g0, base, rest);
          if (k1 == 0) continue;
          MultiPartition g = shape;
          g[0] = g0;
          ArrowLaurent sub = eval(idx + 1, g);
          if (sub.is_zero()) continue;
          acc += sub * ArrowLaurent::arrow_power(r, 0, added, sgn * k1 * k2);
        }
      }
    }
  }
  return acc;
}

bool MorrisDatum::operator<(const MorrisDatum& o) const {
  if (w != o.w) return w < o.w;
  if (!(s == o.s)) return s < o.s;
  if (!(u_lo == o.u_lo)) return u_lo < o.u_lo;
  return u_hi.inner != o.u_hi.inner ? u_hi.inner < o.u_hi.inner : u_hi.rows < o.u_hi.rows;
}

std::string MorrisDatum::to_string() const {
  std::ostringstream os;
  os << "w=[";
  for (size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << "] S=" << s.to_string() << " Ulo=" << u_lo.to_string() << " Uhi=" << u_hi.to_string();
  return os.str();
}

MorrisStep::MorrisStep(const RectTriple& triple)
    : triple_(triple),
      r_(triple.r()),
      i1_(triple.i1()),
      n_(triple.n()),
      a_(triple.eta().at(0)),
      mu1_(triple.mu().at(0)),
      node_(i1_),
      next_((i1_ + 1) % triple.r()),
      closing_(i1_ == triple.r() - 1),
      nu_(a_, closing_ ? mu1_ : 0),
      full_ctx_(triple.mu(), triple.eta()),
      inner_ctx_(closing_ ? full_ctx_.tail() : full_ctx_),
      inner_i1_(closing_ ? 0 : i1_ + 1) {
  if (r_ < 2) throw std::invalid_argument("cancellation step needs at least two nodes");
}

int MorrisStep::sign(const MorrisDatum& xi) const { return perm_sign(xi.w); }

ArrowLaurent MorrisStep::weight(const MorrisDatum& xi) const {
  int moved = 0;
  for (const auto& row : xi.u_hi.rows) moved += static_cast<int>(row.size());
  return tableau_weight(xi.s, inner_ctx_) * ArrowLaurent::arrow_power(r_, node_, moved);
}

std::vector<MorrisDatum> MorrisStep::enumerate(const MultiPartition& shape) const {
  std::vector<MorrisDatum> out;
  const Partition& lam = shape[node_];
  if (lam.length() > n_) return out;
  const int m = n_ - a_;
  const int hi_rows = closing_ ? m : n_;
  for (const auto& w : all_permutations(n_)) {
    auto [alpha, beta] = staircase_split(lam, w, a_);
    if (!all_at_least(alpha, nu_) || !nonnegative(beta)) continue;
    std::vector<int> rest(alpha);
    for (size_t k = 0; k < rest.size(); ++k) rest[k] -= nu_[k];
    for (const Partition& ghi : partitions_over(shape[next_], vec_total(rest), hi_rows)) {
      auto his = enumerate_skew_ssyt(ghi, shape[next_], rest);
      if (his.empty()) continue;
      for (const Partition& glo : all_partitions(vec_total(beta), m)) {
        auto los = enumerate_skew_ssyt(glo, Partition(), beta);
        if (los.empty()) continue;
        MultiPartition g = shape;
        g[node_] = glo;
        g[next_] = ghi;
        for (const MultiTableau& s : lr_multitableaux(g, inner_ctx_, inner_i1_))
          for (const SkewTableau& uhi : his)
            for (const SkewTableau& ulo : los) out.push_back({w, s, straight(ulo), uhi});
      }
    }
  }
  return out;
}

std::vector<MultiTableau> MorrisStep::domain(const MultiPartition& shape) const {
  return lr_multitableaux(shape, full_ctx_, i1_);
}

MorrisDatum MorrisStep::embed(const MultiTableau& t) const {
  assert(t.r() == r_);
  const Tableau& ti = t[node_];
  std::vector<Word> top(a_);
  for (int k = 0; k < a_; ++k)
    if (k < ti.n_rows()) top[k] = ti.row(k);
  std::vector<std::vector<int>> below(ti.rows().begin() + std::min(a_, ti.n_rows()),
                                      ti.rows().end());
  Tableau rest(std::move(below));

  if (!closing_) {
    PsiResult pr = psi_insert(top, t[next_]);
    MultiTableau s = t;
    s[node_] = rest;
    s[next_] = pr.p;
    return {identity_perm(n_), s, Tableau::yamanouchi(rest.shape()), skew_from_chain(pr.chain)};
  }

  // Closing entry: peel the rectangle off the top rows, twist the remaining
  // word one block-rotation forward, and re-insert the leftovers at node 0.
  std::vector<Word> v(a_);
  for (int k = 0; k < a_; ++k) {
    const Word& u = top[k];
    assert(static_cast<int>(u.size()) >= mu1_);
    for (int c = 0; c < mu1_; ++c) assert(u[c] == k + 1);
    v[k].assign(u.begin() + mu1_, u.end());
    for (int x : v[k]) assert(x > a_);
  }

  Word family;
  std::vector<int> sizes;
  for (int j = 0; j + 1 < r_; ++j) {
    Word wj = t[j].word();
    family.insert(family.end(), wj.begin(), wj.end());
    sizes.push_back(static_cast<int>(wj.size()));
  }
  Word wrest = rest.word();
  family.insert(family.end(), wrest.begin(), wrest.end());
  sizes.push_back(static_cast<int>(wrest.size()));
  Word y1 = full_ctx_.rectangle_word(0);
  family.insert(family.end(), y1.begin(), y1.end());
  sizes.push_back(static_cast<int>(y1.size()));

  std::vector<Word> pieces = split_lengths(w0_eta(family, triple_.eta()), sizes);
  assert(pieces.back() == y1);
  Tableau w0 = from_word_shape(pieces[0], t[0].shape());
  std::vector<Tableau> family2(r_);
  for (int j = 1; j + 1 < r_; ++j) family2[j] = from_word_shape(pieces[j], t[j].shape());
  family2[r_ - 1] = from_word_shape(pieces[r_ - 1], rest.shape());

  Word vword;
  std::vector<int> vlens;
  for (int k = a_ - 1; k >= 0; --k) {
    vword.insert(vword.end(), v[k].begin(), v[k].end());
    vlens.push_back(static_cast<int>(v[k].size()));
  }
  std::vector<Word> vpieces = split_lengths(w0_eta(vword, triple_.eta()), vlens);
  std::vector<Word> vprime(a_);
  for (int k = 0; k < a_; ++k) {
    vprime[k] = vpieces[a_ - 1 - k];
    assert(is_weakly_increasing(vprime[k]));
  }

  PsiResult pr = psi_insert(vprime, w0);
  std::vector<Tableau> comp(r_);
  comp[0] = shift_letters(pr.p, -a_);
  for (int j = 1; j < r_; ++j) comp[j] = shift_letters(family2[j], -a_);
  return {identity_perm(n_), MultiTableau(std::move(comp)),
          Tableau::yamanouchi(rest.shape()), skew_from_chain(pr.chain)};
}

struct MorrisStep::Analysis {
  std::vector<Word> tuple;  // rows in insertion order
  Tableau base;             // interior case: extracted tableau under node i+1
  Tableau p, q;
  std::optional<int> violation;
  Tableau wprime;               // closing case: twisted base under node 0
  std::vector<Tableau> twisted;  // closing case: twisted family, slots 1..r-1
};

MorrisStep::Analysis MorrisStep::analyze(const MorrisDatum& xi) const {
  Analysis an;
  if (!closing_) {
    PsiInverseResult lo = psi_extract(xi.s[node_], tableau_to_chain(xi.u_lo, n_ - a_));
    assert(lo.base.empty());
    PsiInverseResult hi = psi_extract(xi.s[next_], chain_from_skew(xi.u_hi, a_));
    an.base = hi.base;
    an.tuple = hi.rows;
    an.tuple.insert(an.tuple.end(), lo.rows.begin(), lo.rows.end());
  } else {
    MultiTableau s_full(r_);
    for (int j = 0; j < r_; ++j) s_full[j] = shift_letters(xi.s[j], a_);
    PsiInverseResult ext0 = psi_extract(s_full[0], chain_from_skew(xi.u_hi, a_));

    Word family = ext0.base.word();
    std::vector<int> sizes{static_cast<int>(family.size())};
    for (int j = 1; j < r_; ++j) {
      Word wj = s_full[j].word();
      family.insert(family.end(), wj.begin(), wj.end());
      sizes.push_back(static_cast<int>(wj.size()));
    }
    std::vector<Word> pieces = split_lengths(w0_eta(family, triple_.eta()), sizes);
    an.wprime = from_word_shape(pieces[0], ext0.base.shape());
    an.twisted.assign(r_, Tableau());
    for (int j = 1; j < r_; ++j) an.twisted[j] = from_word_shape(pieces[j], s_full[j].shape());

    Word vword;
    std::vector<int> vlens;
    for (int k = a_ - 1; k >= 0; --k) {
      vword.insert(vword.end(), ext0.rows[k].begin(), ext0.rows[k].end());
      vlens.push_back(static_cast<int>(ext0.rows[k].size()));
    }
    std::vector<Word> vpieces = split_lengths(w0_eta(vword, triple_.eta()), vlens);

    an.tuple.resize(a_);
    for (int k = 0; k < a_; ++k) {
      Word& u = an.tuple[k];
      u.assign(mu1_, k + 1);
      const Word& vp = vpieces[a_ - 1 - k];
      u.insert(u.end(), vp.begin(), vp.end());
      assert(is_weakly_increasing(u));
    }
    PsiInverseResult ext1 = psi_extract(an.twisted[r_ - 1], tableau_to_chain(xi.u_lo, n_ - a_));
    assert(ext1.base.empty());
    an.tuple.insert(an.tuple.end(), ext1.rows.begin(), ext1.rows.end());
  }
  PsiResult pr = psi_insert(an.tuple, Tableau());
  an.p = pr.p;
  an.q = chain_to_tableau(pr.chain);
  an.violation = find_violation(an.q.word());
  return an;
}

bool MorrisStep::is_fixed(const MorrisDatum& xi) const { return !analyze(xi).violation; }

MorrisDatum MorrisStep::involution(const MorrisDatum& xi) const {
  Analysis an = analyze(xi);
  if (!an.violation) return xi;
  const int p = *an.violation;

  Word qw = an.q.word();
  auto raised = raise_e(qw, p);
  assert(raised);
  Tableau q2 = p_tableau(reflect_s(*raised, p));
  assert(q2.shape() == an.q.shape());
  PsiInverseResult moved = psi_extract(an.p, tableau_to_chain(q2, n_));
  assert(moved.base.empty());
  const std::vector<Word>& u2 = moved.rows;

  std::vector<int> w2 = xi.w;
  std::swap(w2[p - 1], w2[p]);

  std::vector<Word> head(u2.begin(), u2.begin() + a_);
  std::vector<Word> tail(u2.begin() + a_, u2.end());

  if (!closing_) {
    PsiResult lo = psi_insert(tail, Tableau());
    PsiResult hi = psi_insert(head, an.base);
    MultiTableau s2 = xi.s;
    s2[node_] = lo.p;
    s2[next_] = hi.p;
    return {std::move(w2), std::move(s2), chain_to_tableau(lo.chain), skew_from_chain(hi.chain)};
  }

  // The rectangle prefixes survive the dual move.
  std::vector<Word> v2(a_);
  for (int k = 0; k < a_; ++k) {
    const Word& u = u2[k];
    assert(static_cast<int>(u.size()) >= mu1_);
    for (int c = 0; c < mu1_; ++c) assert(u[c] == k + 1);
    v2[k].assign(u.begin() + mu1_, u.end());
    for (int x : v2[k]) assert(x > a_);
  }
  PsiResult lo = psi_insert(tail, Tableau());

  // Twist back: only the slot at node r-1 of the twisted family changed.
  Word vword;
  std::vector<int> vlens;
  for (int k = a_ - 1; k >= 0; --k) {
    vword.insert(vword.end(), v2[k].begin(), v2[k].end());
    vlens.push_back(static_cast<int>(v2[k].size()));
  }
  std::vector<Word> vpieces = split_lengths(w0_eta(vword, triple_.eta()), vlens);
  std::vector<Word> vback(a_);
  for (int k = 0; k < a_; ++k) {
    vback[k] = vpieces[a_ - 1 - k];
    assert(is_weakly_increasing(vback[k]));
  }

  Word family = an.wprime.word();
  std::vector<int> sizes{static_cast<int>(family.size())};
  for (int j = 1; j + 1 < r_; ++j) {
    Word wj = an.twisted[j].word();
    family.insert(family.end(), wj.begin(), wj.end());
    sizes.push_back(static_cast<int>(wj.size()));
  }
  Word wlast = lo.p.word();
  family.insert(family.end(), wlast.begin(), wlast.end());
  sizes.push_back(static_cast<int>(wlast.size()));
  std::vector<Word> pieces = split_lengths(w0_eta(family, triple_.eta()), sizes);

  Tableau base2 = from_word_shape(pieces[0], an.wprime.shape());
  std::vector<Tableau> comp(r_);
  for (int j = 1; j + 1 < r_; ++j)
    comp[j] = shift_letters(from_word_shape(pieces[j], an.twisted[j].shape()), -a_);
  comp[r_ - 1] = shift_letters(from_word_shape(pieces[r_ - 1], lo.p.shape()), -a_);

  PsiResult front = psi_insert(vback, base2);
  comp[0] = shift_letters(front.p, -a_);
  return {std::move(w2), MultiTableau(std::move(comp)), chain_to_tableau(lo.chain),
          skew_from_chain(front.chain)};
}

}  // namespace qks
