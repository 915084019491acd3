#include "qks/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "qks/catabolism.hpp"
#include "qks/crystal.hpp"
#include "qks/ks_recurrence.hpp"
#include "qks/laurent.hpp"
#include "qks/lr_charge.hpp"
#include "qks/partition.hpp"
#include "qks/rsk.hpp"
#include "qks/sweep.hpp"
#include "qks/symfunc.hpp"
#include "qks/tableau.hpp"
#include "qks/wreath.hpp"

namespace qks {
namespace {

constexpr size_t kMaxNotes = 6;

struct Tally {
  long long cases = 0;
  long long failures = 0;
  std::vector<std::string> notes;

  void count(bool ok, const std::string& what) {
    ++cases;
    if (!ok) {
      ++failures;
      if (notes.size() < kMaxNotes) notes.push_back(what);
    }
  }
  // Cheap variant: builds the message only on failure.
  template <typename F>
  void count_lazy(bool ok, F&& what) {
    ++cases;
    if (!ok) {
      ++failures;
      if (notes.size() < kMaxNotes) notes.push_back(what());
    }
  }
  void merge(Tally&& o) {
    cases += o.cases;
    failures += o.failures;
    for (auto& n : o.notes)
      if (notes.size() < kMaxNotes) notes.push_back(std::move(n));
  }
};

// Run body(i, tally_slot) over [0, count); slots are merged in index order, so
// the outcome is independent of the worker count.
template <typename Fn>
Tally indexed_sweep(long long count, int jobs, const Fn& body) {
  std::vector<Tally> parts(static_cast<size_t>(count));
  if (jobs <= 1) {
    for (long long i = 0; i < count; ++i) body(i, parts[i]);
  } else {
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (long long i = 0; i < count; ++i) body(i, parts[i]);
  }
  Tally total;
  for (auto& p : parts) total.merge(std::move(p));
  return total;
}

// ---------------------------------------------------------------------------
// Enumeration helpers.

// All rectangle data with at most two blocks, total cells <= max_cells and
// alphabet eta_1 + ... <= max_cells, every starting node.
std::vector<RectTriple> rectangle_sweep(int max_r, int max_cells) {
  std::vector<RectTriple> out;
  for (int r = 1; r <= max_r; ++r)
    for (int i1 = 0; i1 < r; ++i1) {
      for (int e1 = 1; e1 <= max_cells; ++e1)
        for (int m1 = 0; m1 * e1 <= max_cells; ++m1)
          out.emplace_back(r, i1, std::vector<int>{m1}, std::vector<int>{e1});
      for (int e1 = 1; e1 < max_cells; ++e1)
        for (int e2 = 1; e1 + e2 <= max_cells; ++e2)
          for (int m1 = 0; m1 * e1 <= max_cells; ++m1)
            for (int m2 = 0; m2 <= m1 && m1 * e1 + m2 * e2 <= max_cells; ++m2)
              out.emplace_back(r, i1, std::vector<int>{m1, m2}, std::vector<int>{e1, e2});
    }
  return out;
}

std::vector<Word> weakly_increasing_words(int len, int max_letter) {
  std::vector<Word> out;
  Word cur;
  auto rec = [&](auto&& self, int remaining, int lo) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int x = lo; x <= max_letter; ++x) {
      cur.push_back(x);
      self(self, remaining - 1, x);
      cur.pop_back();
    }
  };
  rec(rec, len, 1);
  return out;
}

// All distinct arrangements of the multiset {content[j] copies of j+1}.
void each_word_of_content(const std::vector<int>& content, const std::function<void(const Word&)>& fn) {
  int total = 0;
  for (int c : content) total += c;
  Word cur;
  std::vector<int> left = content;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == total) {
      fn(cur);
      return;
    }
    for (size_t j = 0; j < left.size(); ++j) {
      if (left[j] == 0) continue;
      --left[j];
      cur.push_back(static_cast<int>(j) + 1);
      self(self);
      cur.pop_back();
      ++left[j];
    }
  };
  rec(rec);
}

std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(parts, 0);
  auto rec = [&](auto&& self, int k, int rest) -> void {
    if (k == parts - 1) {
      cur[k] = rest;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= rest; ++v) {
      cur[k] = v;
      self(self, k + 1, rest - v);
    }
  };
  if (parts > 0)
    rec(rec, 0, total);
  else if (total == 0)
    out.push_back({});
  return out;
}

// Direct tableau-word test that bypasses insertion: the maximal weakly
// increasing runs, read in word order, must stack as rows bottom to top with
// strictly increasing columns.
bool rows_are_tableau_word(const Word& w) {
  if (w.empty()) return true;
  std::vector<Word> runs;
  Word cur;
  for (int x : w) {
    if (!cur.empty() && x < cur.back()) {
      runs.push_back(cur);
      cur.clear();
    }
    cur.push_back(x);
  }
  runs.push_back(cur);
  // runs.front() is the bottom row; top to bottom the lengths must weakly
  // decrease and the columns must strictly increase
  std::vector<Word> rows(runs.rbegin(), runs.rend());
  for (size_t i = 0; i + 1 < rows.size(); ++i) {
    if (rows[i].size() < rows[i + 1].size()) return false;
    for (size_t j = 0; j < rows[i + 1].size(); ++j)
      if (rows[i][j] >= rows[i + 1][j]) return false;
  }
  return true;
}

SkewTableau chain_skew(const ShapeChain& chain) {
  SkewTableau q;
  q.inner = chain.front();
  int nrows = 0;
  for (const auto& p : chain) nrows = std::max(nrows, p.length());
  q.rows.resize(nrows);
  for (int row = 0; row < nrows; ++row)
    for (size_t k = 1; k < chain.size(); ++k)
      for (int c = chain[k - 1][row]; c < chain[k][row]; ++c)
        q.rows[row].push_back(static_cast<int>(k));
  return q;
}

// q-as-word is (outer, inner)-compatible when y_outer ~ q . y_inner.
bool word_compatible(const Word& q, const Partition& outer, const Partition& inner) {
  Word w = q;
  for (int x : Tableau::yamanouchi(inner).word()) w.push_back(x);
  return p_tableau(w) == Tableau::yamanouchi(outer);
}

// Independent Kostka-Foulkes polynomial: sum of t^charge over semistandard
// tableaux of shape lam and content mu.
UniPoly kostka_foulkes(const Partition& lam, const Partition& mu) {
  UniPoly out;
  const int letters = mu.length();
  std::vector<int> want(mu.parts());
  want.resize(letters, 0);
  for (const auto& t : enumerate_ssyt(lam, letters)) {
    if (t.content(letters) != want) continue;
    out += UniPoly::monomial(ls_charge(t.word(), want));
  }
  return out;
}

std::string describe_tables_diff(const KsTables& a, const KsTables& b) {
  for (const auto& [lam, p] : a.full) {
    auto it = b.full.find(lam);
    if (it == b.full.end()) return "row " + lam.to_string() + " missing on one side";
    if (!(it->second == p)) return "full mismatch at " + lam.to_string();
  }
  for (const auto& [lam, p] : b.full)
    if (!a.full.count(lam)) return "row " + lam.to_string() + " missing on one side";
  for (const auto& [lam, p] : a.reduced) {
    auto it = b.reduced.find(lam);
    if (it == b.reduced.end() || !(it->second == p))
      return "reduced mismatch at " + lam.to_string();
  }
  return "tables differ";
}

// ---------------------------------------------------------------------------
// 1. Three-method agreement: tableau formula, recurrence, operator expansion.

Tally triangle_on_triples(const std::vector<RectTriple>& triples, int jobs) {
  return indexed_sweep(static_cast<long long>(triples.size()), jobs, [&](long long i, Tally& t) {
    const RectTriple& tr = triples[i];
    t.count_lazy(tr.datum().is_dominant(), [&] { return tr.to_string() + ": datum not dominant"; });
    KsTables op = ks_tables(tr, Method::operators);
    KsTables rec = ks_tables(tr, Method::recurrence);
    KsTables tab = ks_tables(tr, Method::tableau);
    t.count_lazy(tables_equal(op, rec), [&] {
      return tr.to_string() + " operators vs recurrence: " + describe_tables_diff(op, rec);
    });
    t.count_lazy(tables_equal(op, tab), [&] {
      return tr.to_string() + " operators vs tableaux: " + describe_tables_diff(op, tab);
    });
  });
}

Tally crit_triangle(const VerifyOptions& opt) {
  const int max_r = opt.max_r > 0 ? opt.max_r : 3;
  const int max_n = opt.max_n > 0 ? opt.max_n : 5;
  return triangle_on_triples(rectangle_sweep(max_r, max_n), opt.jobs);
}

// ---------------------------------------------------------------------------
// 2. Two-node Borel columns match the classical Kostka-Foulkes polynomials.

Tally crit_kostka_foulkes(const VerifyOptions& opt) {
  const int max_n = opt.max_n > 0 ? opt.max_n : 5;
  std::vector<Partition> mus;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& mu : all_partitions(n)) mus.push_back(mu);
  return indexed_sweep(static_cast<long long>(mus.size()), opt.jobs, [&](long long i, Tally& t) {
    const Partition& mu = mus[i];
    const std::vector<int> ones(mu.length(), 1);
    RectTriple triple(2, 0, mu.parts(), ones);
    KsTables tables = ks_tables(triple, Method::operators);
    for (const auto& lam : all_partitions(mu.size())) {
      MultiPartition key(std::vector<Partition>{Partition{}, lam});
      UniPoly got;
      if (auto it = tables.reduced.find(key); it != tables.reduced.end()) got = it->second;
      UniPoly want = kostka_foulkes(lam, mu);
      t.count_lazy(got == want, [&] {
        return "mu=" + mu.to_string() + " lam=" + lam.to_string() + ": got " + got.to_string() +
               ", charge formula " + want.to_string();
      });
    }
  });
}

// ---------------------------------------------------------------------------
// 3. Weighted-alphabet substitution into the one-node function.

Tally crit_plethysm(const VerifyOptions& opt) {
  const int max_r = opt.max_r > 0 ? opt.max_r : 3;
  const int max_n = opt.max_n > 0 ? opt.max_n : 5;
  // (mu, eta) pairs: eta positive with sum <= max_n, mu weakly decreasing >= 0
  // with sum mu_k eta_k <= max_n.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
  std::vector<int> eta, mu;
  auto gen_mu = [&](auto&& self, int k, int hi, int cells_left) -> void {
    if (k == static_cast<int>(eta.size())) {
      pairs.emplace_back(mu, eta);
      return;
    }
    for (int m = 0; m <= hi && m * eta[k] <= cells_left; ++m) {
      mu.push_back(m);
      self(self, k + 1, m, cells_left - m * eta[k]);
      mu.pop_back();
    }
  };
  auto gen_eta = [&](auto&& self, int alpha_left) -> void {
    if (!eta.empty()) gen_mu(gen_mu, 0, max_n, max_n);
    for (int e = 1; e <= alpha_left; ++e) {
      eta.push_back(e);
      self(self, alpha_left - e);
      eta.pop_back();
    }
  };
  gen_eta(gen_eta, max_n);

  return indexed_sweep(static_cast<long long>(pairs.size()), opt.jobs, [&](long long i, Tally& t) {
    const auto& [m, e] = pairs[i];
    auto single = single_node_hl(m, e);
    for (int r = 1; r <= max_r; ++r) {
      TensorSym lhs = plethysm_weighted_sum(single, r);
      TensorSym rhs = quiver_hl(RectTriple(r, 0, m, e).datum());
      t.count_lazy(lhs == rhs, [&] {
        return RectTriple(r, 0, m, e).to_string() + ": substitution disagrees with the operator product";
      });
    }
  });
}

// ---------------------------------------------------------------------------
// 4. The fixed two-node example: exact datum and the three-method agreement.

Tally crit_running_example(const VerifyOptions& opt) {
  Tally t;
  RectTriple triple(2, 1, {2, 1}, {2, 2});
  const LusztigDatum d = triple.datum();
  const std::vector<DatumEntry> want = {
      {1, 2, {2, 2}},
      {0, 2, {0, 0}},
      {1, 2, {1, 1}},
  };
  t.count(d.entries() == want, "two-node example datum differs from the pinned entry list");
  t.merge(triangle_on_triples({triple}, opt.jobs));
  return t;
}

// ---------------------------------------------------------------------------
// 5. Signed cancellation for the first datum entry.

Tally crit_cancellation(const VerifyOptions& opt) {
  const int max_r = opt.max_r > 0 ? opt.max_r : 3;
  const int max_n = opt.max_n > 0 ? opt.max_n : 5;
  std::vector<RectTriple> triples;
  for (const auto& tr : rectangle_sweep(max_r, max_n))
    if (tr.r() >= 2) triples.push_back(tr);

  return indexed_sweep(static_cast<long long>(triples.size()), opt.jobs, [&](long long i, Tally& t) {
    const RectTriple& tr = triples[i];
    MorrisStep step(tr);
    LRContext ctx(tr.mu(), tr.eta());
    KsRecurrence rec(tr);
    for (const auto& shape : all_multipartitions(tr.r(), tr.total_size())) {
      auto data = step.enumerate(shape);
      ArrowLaurent sum(tr.r());
      for (const auto& xi : data) sum += step.weight(xi).scale(step.sign(xi));
      t.count_lazy(sum == rec.full(shape), [&] {
        return tr.to_string() + " " + shape.to_string() + ": signed sum differs from the recurrence";
      });

      std::set<MorrisDatum> all(data.begin(), data.end());
      std::set<MorrisDatum> fixed;
      bool ok_inv = true, ok_sign = true, ok_weight = true, ok_flag = true;
      for (const auto& xi : data) {
        MorrisDatum yi = step.involution(xi);
        if (step.is_fixed(xi) != (yi == xi)) ok_flag = false;
        if (yi == xi) {
          fixed.insert(xi);
          continue;
        }
        if (!all.count(yi) || !(step.involution(yi) == xi)) ok_inv = false;
        if (step.sign(yi) != -step.sign(xi)) ok_sign = false;
        if (!(step.weight(yi) == step.weight(xi))) ok_weight = false;
      }
      t.count_lazy(ok_flag, [&] { return tr.to_string() + ": fixed-point flag disagrees"; });
      t.count_lazy(ok_inv, [&] { return tr.to_string() + " " + shape.to_string() + ": pairing is not an involution"; });
      t.count_lazy(ok_sign, [&] { return tr.to_string() + ": pairing not sign-reversing"; });
      t.count_lazy(ok_weight, [&] { return tr.to_string() + ": pairing not weight-preserving"; });

      std::set<MorrisDatum> images;
      bool ok_embed = true;
      for (const auto& mt : step.domain(shape)) {
        MorrisDatum xi = step.embed(mt);
        if (!all.count(xi) || !step.is_fixed(xi)) ok_embed = false;
        if (!(step.weight(xi) == tableau_weight(mt, ctx))) ok_embed = false;
        images.insert(xi);
      }
      t.count_lazy(ok_embed, [&] { return tr.to_string() + ": embedded tableau not a weight-matched fixed point"; });
      t.count_lazy(images == fixed, [&] {
        return tr.to_string() + " " + shape.to_string() + ": fixed points differ from the embedded tableaux";
      });
    }
  });
}

// ---------------------------------------------------------------------------
// 6. Rotation of LR words and the block charge statistic.

struct ChargeContext {
  std::vector<int> mu, eta;
};

std::vector<ChargeContext> charge_contexts(int max_cells) {
  std::vector<ChargeContext> out;
  std::vector<int> mu, eta;
  auto rec = [&](auto&& self, int cells_left) -> void {
    if (!mu.empty()) out.push_back({mu, eta});
    int hi = mu.empty() ? cells_left : mu.back();
    for (int m = hi; m >= 1; --m)
      for (int e = 1; m * e <= cells_left; ++e) {
        mu.push_back(m);
        eta.push_back(e);
        self(self, cells_left - m * e);
        mu.pop_back();
        eta.pop_back();
      }
  };
  rec(rec, max_cells);
  return out;
}

Tally crit_rotation_charge(const VerifyOptions& opt) {
  const int max_cells = opt.max_n > 0 ? opt.max_n : 6;
  auto contexts = charge_contexts(max_cells);

  Tally head;
  {
    // the pinned rotation example: u=2, v=42131 in the (2,1),(2,2) context
    LRContext ctx({2, 1}, {2, 2});
    Word uv = {2, 4, 2, 1, 3, 1};
    head.count(is_lr_word(uv, ctx), "pinned rotation example: uv is not an LR word");
    Word w0u = w0_eta({2}, ctx.eta());
    Word w0v = w0_eta({4, 2, 1, 3, 1}, ctx.eta());
    Word swapped = word_concat(w0v, w0u);
    head.count(swapped == Word({4, 2, 1, 3, 2, 1}), "pinned rotation example: swap differs");
    head.count(is_lr_word(swapped, ctx), "pinned rotation example: swap is not LR");
    head.count(lr_charge(swapped, ctx) == 0, "pinned charge example: charge(421321) != 0");
  }

  Tally body = indexed_sweep(static_cast<long long>(contexts.size()), opt.jobs, [&](long long ci, Tally& t) {
    LRContext ctx(contexts[ci].mu, contexts[ci].eta);
    const int N = ctx.total_cells();
    std::vector<Word> lr_words;
    std::mt19937 rng(opt.seed + static_cast<unsigned>(ci));
    each_word_of_content(ctx.content(), [&](const Word& w) {
      if (is_lr_word(w, ctx)) {
        lr_words.push_back(w);
      } else if (rng() % 64 == 0) {
        // sampled converse of the rotation law: swaps of non-LR words stay non-LR
        size_t k = rng() % (w.size() + 1);
        Word x(w.begin(), w.begin() + k), y(w.begin() + k, w.end());
        Word swapped = word_concat(w0_eta(y, ctx.eta()), w0_eta(x, ctx.eta()));
        t.count_lazy(!is_lr_word(swapped, ctx),
                     [&] { return ctx.to_string() + ": swap of a non-LR word became LR"; });
      }
    });

    const bool ones = std::all_of(ctx.eta().begin(), ctx.eta().end(), [](int e) { return e == 1; });
    std::map<Word, std::vector<int>> by_class;  // insertion tableau word -> charges
    const Word y1 = ctx.rectangle_word(0);
    for (const Word& u : lr_words) {
      Word v = rotate_once(u, ctx);
      t.count_lazy(is_lr_word(v, ctx), [&] { return ctx.to_string() + ": rotation left the LR set"; });
      t.count_lazy(rotate(u, ctx, N) == u,
                   [&] { return ctx.to_string() + ": rotating N times is not the identity"; });
      bool splits_ok = true;
      for (size_t k = 0; k <= u.size(); ++k) {
        Word x(u.begin(), u.begin() + k), y(u.begin() + k, u.end());
        Word swapped = word_concat(w0_eta(y, ctx.eta()), w0_eta(x, ctx.eta()));
        if (!is_lr_word(swapped, ctx)) splits_ok = false;
      }
      t.count_lazy(splits_ok, [&] { return ctx.to_string() + ": some block swap left the LR set"; });

      const int c = lr_charge(u, ctx);
      by_class[p_tableau(u).word()].push_back(c);
      if (ones) {
        t.count_lazy(c == ls_charge(u, ctx.content()),
                     [&] { return ctx.to_string() + ": block charge differs from the classical one"; });
        Word shifted(u.begin() + 1, u.end());
        if (!u.empty()) shifted.push_back(u.front());
        t.count_lazy(v == shifted,
                     [&] { return ctx.to_string() + ": rotation is not the one-step cyclic shift"; });
      }

      // peeled factorizations u = x . Y1 . y with all block-1 letters inside
      // Y1 and y fitting in eta_1 weakly increasing runs (the shape of the
      // row remainders that the recursion peels off)
      if (ctx.s() >= 1 && !y1.empty()) {
        const LRContext tail = ctx.tail();
        const int eta1 = ctx.eta()[0];
        for (size_t k = 0; k + y1.size() <= u.size(); ++k) {
          if (!std::equal(y1.begin(), y1.end(), u.begin() + k)) continue;
          Word x(u.begin(), u.begin() + k), y(u.begin() + k + y1.size(), u.end());
          bool clean = true;
          for (int ltr : x)
            if (ltr <= eta1) clean = false;
          for (int ltr : y)
            if (ltr <= eta1) clean = false;
          if (!clean) continue;
          int runs = y.empty() ? 0 : 1;
          for (size_t j = 1; j < y.size(); ++j)
            if (y[j] < y[j - 1]) ++runs;
          if (runs > eta1) continue;
          auto drop = [&](Word w) {
            for (int& ltr : w) ltr -= eta1;
            return w;
          };
          Word inner = word_concat(w0_eta(drop(y), tail.eta()), w0_eta(drop(x), tail.eta()));
          bool inner_lr = is_lr_word(inner, tail);
          t.count_lazy(inner_lr, [&] { return ctx.to_string() + ": peeled word is not LR for the tail"; });
          if (inner_lr) {
            t.count_lazy(c == static_cast<int>(y.size()) + lr_charge(inner, tail), [&] {
              return ctx.to_string() + " " + word_to_string(u) + ": peeling recursion value differs";
            });
          }
        }
      }
    }
    for (const auto& [key, charges] : by_class) {
      bool constant = std::all_of(charges.begin(), charges.end(),
                                  [&](int c) { return c == charges.front(); });
      t.count_lazy(constant, [&] { return ctx.to_string() + ": charge not constant on a Knuth class"; });
    }
  });
  head.merge(std::move(body));
  return head;
}

// ---------------------------------------------------------------------------
// 7. Word toolkit: insertion, recording tableaux, compatibility, dual moves.

Tally crit_word_toolkit(const VerifyOptions& opt) {
  Tally t;

  {  // unique tableau word in each Knuth class
    auto sweep_words = [&](int alphabet, int max_len) {
      std::vector<Word> stack{{}};
      while (!stack.empty()) {
        Word w = stack.back();
        stack.pop_back();
        if (!w.empty()) {
          auto cls = knuth_class(w);
          int tableau_members = 0;
          for (const auto& v : cls)
            if (rows_are_tableau_word(v)) ++tableau_members;
          Word pw = p_tableau(w).word();
          bool in_class = std::find(cls.begin(), cls.end(), pw) != cls.end();
          t.count_lazy(tableau_members == 1 && in_class && rows_are_tableau_word(pw),
                       [&] { return "Knuth class of " + word_to_string(w) + " breaks uniqueness"; });
        }
        if (static_cast<int>(w.size()) < max_len)
          for (int x = 1; x <= alphabet; ++x) {
            w.push_back(x);
            stack.push_back(w);
            w.pop_back();
          }
      }
    };
    sweep_words(3, 5);
    sweep_words(4, 4);
  }

  {  // row-word insertion: strip shape, Knuth equivalence, two-sided inverse
    for (int base_cells = 0; base_cells <= 4; ++base_cells)
      for (const auto& lam : all_partitions(base_cells))
        for (const auto& base : enumerate_ssyt(lam, 4))
          for (int len = 0; len <= 3; ++len)
            for (const auto& u : weakly_increasing_words(len, 4)) {
              Tableau p = insert_row_word(base, u);
              bool strip = is_horizontal_strip(p.shape(), lam) &&
                           p.shape().size() == lam.size() + len;
              bool equiv = knuth_equivalent(word_concat(u, base.word()), p.word());
              auto [u2, base2] = remove_row_strip(p, lam);
              t.count_lazy(strip && equiv && u2 == u && base2 == base, [&] {
                return "insertion of " + word_to_string(u) + " into " + lam.to_string() +
                       " fails the round trip";
              });
            }
    // surjectivity: peeling any horizontal strip inverts to the same tableau
    for (int cells = 1; cells <= 5; ++cells)
      for (const auto& nu : all_partitions(cells))
        for (const auto& p : enumerate_ssyt(nu, 4))
          for (int k = 0; k <= cells; ++k)
            for (const auto& lam : horizontal_strip_under(nu, k)) {
              auto [u, base] = remove_row_strip(p, lam);
              t.count_lazy(base.shape() == lam && insert_row_word(base, u) == p, [&] {
                return "peeling " + nu.to_string() + " down to " + lam.to_string() +
                       " does not invert";
              });
            }
  }

  {  // iterated insertion: recording chain, injectivity, and total counts
    const int alphabet = 3, tuple = 3;
    std::vector<std::vector<Word>> by_len(3);
    for (int len = 0; len <= 2; ++len) by_len[len] = weakly_increasing_words(len, alphabet);
    for (const auto& lens : compositions(6, tuple)) {
      if (*std::max_element(lens.begin(), lens.end()) > 2) continue;
      long long sequences = 0;
      std::set<std::pair<std::string, std::string>> images;
      std::vector<size_t> idx(tuple, 0);
      for (;;) {
        std::vector<Word> rows(tuple);
        for (int k = 0; k < tuple; ++k) rows[k] = by_len[lens[k]][idx[k]];
        ++sequences;
        PsiResult res = psi_insert(rows, Tableau());
        Tableau q = chain_to_tableau(res.chain);
        bool chain_ok = true;
        Word prefix;
        for (int k = 0; k <= tuple; ++k) {
          if (res.chain[k] != (k ? p_tableau(prefix).shape() : Partition{})) chain_ok = false;
          if (k < tuple) {
            Word next = rows[k];
            prefix = word_concat(next, prefix);
          }
        }
        for (int k = 1; k <= tuple; ++k) {
          int strip = res.chain[k].size() - res.chain[k - 1].size();
          if (strip != static_cast<int>(rows[k - 1].size())) chain_ok = false;
        }
        t.count_lazy(chain_ok, [&] { return "recording chain mismatches the prefix insertions"; });
        images.emplace(res.p.to_string(), q.to_string());

        int k = 0;
        while (k < tuple && idx[k] + 1 == by_len[lens[k]].size()) idx[k++] = 0;
        if (k == tuple) break;
        ++idx[k];
      }
      long long pairs = 0;
      int total = lens[0] + lens[1] + lens[2];
      for (const auto& shape : all_partitions(total)) {
        long long pcount = static_cast<long long>(enumerate_ssyt(shape, alphabet).size());
        pairs += pcount * kostka_number(shape, Partition{}, lens);
      }
      t.count_lazy(static_cast<long long>(images.size()) == sequences && sequences == pairs, [&] {
        return "insertion correspondence is not a bijection for row lengths (" +
               std::to_string(lens[0]) + "," + std::to_string(lens[1]) + "," +
               std::to_string(lens[2]) + ")";
      });
    }
  }

  {  // compatibility detects skew rows, for every base tableau separately
    const int alphabet = 3;
    std::vector<Tableau> bases;
    for (const auto& bshape : {Partition{}, Partition{1}, Partition{2, 1}, Partition{2, 2}})
      for (const auto& b : enumerate_ssyt(bshape, alphabet)) bases.push_back(b);
    for (int N = 1; N <= 4; ++N)
      for (const auto& lam : all_partitions(N, 3))
        for (int K = 0; K <= N; ++K)
          for (const auto& mu : all_partitions(K, 3)) {
            if (!lam.contains(mu)) continue;
            const int n = lam.length();
            std::vector<std::vector<Word>> choices(n);
            for (int k = 0; k < n; ++k)
              choices[k] = weakly_increasing_words(lam[k] - mu[k], alphabet);
            std::vector<size_t> idx(n, 0);
            for (;;) {
              std::vector<Word> rows(n);
              for (int k = 0; k < n; ++k) rows[k] = choices[k][idx[k]];
              bool skew_rows = true;
              for (int k = 0; k + 1 < n && skew_rows; ++k)
                for (int j = 0; j < lam[k + 1] - mu[k + 1]; ++j) {
                  int col = mu[k + 1] + j;
                  if (col >= mu[k] && col < lam[k] && rows[k][col - mu[k]] >= rows[k + 1][j]) {
                    skew_rows = false;
                    break;
                  }
                }
              for (const auto& base : bases) {
                PsiResult res = psi_insert(rows, base);
                bool compat = word_compatible(chain_skew(res.chain).word(), lam, mu);
                t.count_lazy(compat == skew_rows, [&] {
                  return "compatibility test disagrees with skew semistandardness at " +
                         lam.to_string() + "/" + mu.to_string();
                });
              }
              int k = 0;
              while (k < n && idx[k] + 1 == choices[k].size()) idx[k++] = 0;
              if (k == n) break;
              ++idx[k];
            }
          }
  }

  {  // compatible tableaux count the branching coefficients
    for (int N = 2; N <= 5; ++N)
      for (const auto& lam : all_partitions(N, 4))
        for (int K = 0; K <= N; ++K)
          for (const auto& mu : all_partitions(K, 4)) {
            if (!lam.contains(mu)) continue;
            for (const auto& nu : all_partitions(N - K, 4)) {
              long long count = 0;
              for (const auto& q : enumerate_ssyt(nu, std::max(lam.length(), 1)))
                if (is_white_compatible(q, lam, mu)) ++count;
              t.count_lazy(count == lr_coefficient(lam, mu, nu), [&] {
                return "compatible-tableau count differs from the LR coefficient at " +
                       lam.to_string() + "/" + mu.to_string() + ", " + nu.to_string();
              });
            }
          }
  }

  {  // recording tableau pairing counts row overlaps; Yamanouchi detection
    const int alphabet = 3, tuple = 3;
    std::vector<std::vector<Word>> by_len(3);
    for (int len = 0; len <= 2; ++len) by_len[len] = weakly_increasing_words(len, alphabet);
    std::vector<size_t> idx(tuple, 0);
    for (const auto& lens : compositions(6, tuple)) {
      if (*std::max_element(lens.begin(), lens.end()) > 2) continue;
      std::fill(idx.begin(), idx.end(), 0);
      for (;;) {
        std::vector<Word> rows(tuple);
        for (int k = 0; k < tuple; ++k) rows[k] = by_len[lens[k]][idx[k]];
        PsiResult res = psi_insert(rows, Tableau());
        Word qw = chain_to_tableau(res.chain).word();
        bool ok = true;
        for (int i = 1; i < tuple; ++i) {
          auto cnt = content_of(qw, tuple);
          int pairs = cnt[i] - eps_i(qw, i);
          if (pairs != row_overlap(rows[i], rows[i - 1])) ok = false;
        }
        // the rows stacked with u_1 on top form a semistandard tableau
        auto stacks = [&](int from) {
          for (int k = from; k + 1 < tuple; ++k) {
            if (rows[k].size() < rows[k + 1].size()) return false;
            for (size_t j = 0; j < rows[k + 1].size(); ++j)
              if (rows[k][j] >= rows[k + 1][j]) return false;
          }
          return true;
        };
        if (stacks(0) != is_yamanouchi(qw)) ok = false;
        bool almost = true;
        for (int i = 2; i < tuple; ++i)
          if (eps_i(qw, i) != 0) almost = false;
        if (stacks(1) != almost) ok = false;
        t.count_lazy(ok, [&] { return "recording-side pairing laws fail for a row tuple"; });

        int k = 0;
        while (k < tuple && idx[k] + 1 == by_len[lens[k]].size()) idx[k++] = 0;
        if (k == tuple) break;
        ++idx[k];
      }
    }
  }

  {  // reflect-after-raise is an involution away from string tops
    for (int len = 1; len <= 5; ++len) {
      // enumerate words over [3] of exactly this length
      std::vector<Word> words;
      Word cur;
      auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == len) {
          words.push_back(cur);
          return;
        }
        for (int x = 1; x <= 3; ++x) {
          cur.push_back(x);
          self(self);
          cur.pop_back();
        }
      };
      rec(rec);
      for (const auto& w : words)
        for (int i = 1; i <= 2; ++i) {
          if (eps_i(w, i) == 0) continue;
          auto up = raise_e(w, i);
          Word v = reflect_s(*up, i);
          bool ok = eps_i(v, i) > 0;
          if (ok) {
            Word back = reflect_s(*raise_e(v, i), i);
            ok = back == w;
          }
          if (ok && rows_are_tableau_word(w))
            ok = rows_are_tableau_word(v) && p_tableau(v).shape() == p_tableau(w).shape();
          t.count_lazy(ok, [&] {
            return "reflect-after-raise fails on " + word_to_string(w) + " at letter " +
                   std::to_string(i);
          });
        }
    }
  }

  {  // dual move on row pairs: jeu-de-taquin vs recording tableau, uniqueness
    auto all_rows = [&](int max_len) {
      std::vector<Word> out;
      for (int len = 0; len <= max_len; ++len)
        for (const auto& u : weakly_increasing_words(len, 4)) out.push_back(u);
      return out;
    };
    auto rows4 = all_rows(3);
    for (const auto& lo : rows4)
      for (const auto& hi : rows4) {
        std::vector<Word> rows{lo, hi};
        auto via_q = dual_tuple_op_via_recording(rows, 1, DualOp::SE);
        auto direct = dual_tuple_op(rows, 1, DualOp::SE);
        t.count_lazy(via_q.has_value() == direct.has_value() &&
                         (!direct || *direct == *via_q),
                     [&] {
                       return "dual move differs from its recording-side definition on (" +
                              word_to_string(lo) + "," + word_to_string(hi) + ")";
                     });
        if (!direct) continue;
        const Word& nlo = (*direct)[0];
        const Word& nhi = (*direct)[1];
        bool ok = nhi.size() == lo.size() + 1 && nlo.size() == hi.size() - 1;
        ok = ok && knuth_equivalent(word_concat(nhi, nlo), word_concat(hi, lo));
        // uniqueness: a row word is determined by its letter content
        if (ok) {
          auto combined = content_of(word_concat(hi, lo), 4);
          int matches = 0;
          std::vector<int> cx(4, 0);
          auto rec = [&](auto&& self, int j, int left) -> void {
            if (j == 4) {
              if (left != 0) return;
              Word x, y;
              for (int a = 0; a < 4; ++a) {
                for (int q = 0; q < cx[a]; ++q) x.push_back(a + 1);
                for (int q = 0; q < combined[a] - cx[a]; ++q) y.push_back(a + 1);
              }
              if (knuth_equivalent(word_concat(x, y), word_concat(hi, lo))) {
                ++matches;
                if (!(x == nhi && y == nlo)) ++matches;  // foreign match: force failure
              }
              return;
            }
            for (int v = 0; v <= std::min(left, combined[j]); ++v) {
              cx[j] = v;
              self(self, j + 1, left - v);
            }
            cx[j] = 0;
          };
          rec(rec, 0, static_cast<int>(nhi.size()));
          ok = matches == 1;
        }
        t.count_lazy(ok, [&] {
          return "dual move length/uniqueness law fails on (" + word_to_string(lo) + "," +
                 word_to_string(hi) + ")";
        });
      }
    // the pinned two-row instance
    auto moved = dual_tuple_op({{1, 1, 3, 3, 4}, {2, 2, 3, 4}}, 1, DualOp::SE);
    t.count(moved.has_value() && (*moved)[0] == Word({1, 1, 3}) &&
                (*moved)[1] == Word({2, 2, 3, 3, 4, 4}),
            "pinned dual-move example differs");
  }

  (void)opt;
  return t;
}

// ---------------------------------------------------------------------------
// 8. Catabolism laws and the cascade charge formula.

Tally crit_catabolism(const VerifyOptions& opt) {
  const int max_r = opt.max_r > 0 ? opt.max_r : 3;
  const int max_cells = opt.max_n > 0 ? opt.max_n : 5;
  Tally t;

  {  // pinned worked example
    MultiTableau start(std::vector<Tableau>{
        Tableau({{1, 1, 2, 2, 3, 3}, {2, 2, 4, 4}, {4, 4}}),
        Tableau({{1, 1, 1}, {2, 3}, {3}})});
    auto s1 = cat(start, 0, 0);
    bool ok = s1.has_value() && (*s1)[0] == Tableau({{2, 2, 4, 4}, {4, 4}}) &&
              (*s1)[1] == Tableau({{1, 1, 1, 1, 1, 3, 3, 3}, {2, 2, 2}, {3}});
    t.count(ok, "worked example: first strip step differs");
    if (ok) {
      auto s2 = cat(*s1, 1, 5);
      t.count(s2.has_value() && (*s2)[0] == Tableau({{2, 2, 3, 4, 4, 4, 4}, {3, 3}}) &&
                  (*s2)[1] == Tableau({{2, 2, 2}, {3}}),
              "worked example: second strip step differs");
    }
    t.count(!cat(start, 0, 3).has_value(), "worked example: inadmissible step was accepted");
  }

  // full-cycle admissibility and independence of the distribution
  for (int r = 1; r <= max_r; ++r) {
    Tally part = indexed_sweep(max_cells, opt.jobs, [&](long long Ni, Tally& tt) {
      const int N = static_cast<int>(Ni) + 1;
      for (const auto& shape : all_multipartitions(r, static_cast<int>(N)))
        for (const auto& mt : enumerate_multitableaux(shape, static_cast<int>(N))) {
          DimVector ones = letter_census(mt, 1);
          int x = 0;
          for (int v : ones) x += v;
          DimVector last(r, 0);
          last[r - 1] = x;
          auto all_at_end = ccat(mt, last);
          tt.count_lazy(all_at_end.has_value(),
                        [&] { return "all-at-the-end cycle rejected at " + shape.to_string(); });
          for (const auto& d : compositions(x, r)) {
            auto res = ccat(mt, d);
            bool admit = dominates_nodewise(ones, d);
            bool ok = res.has_value() == admit && (!res || *res == *all_at_end);
            tt.count_lazy(ok, [&] { return "cycle admissibility law fails at " + shape.to_string(); });
          }
        }
    });
    t.merge(std::move(part));
  }

  // single-layer targets: the survivor set is empty or one all-ones filling
  for (int r = 1; r <= max_r; ++r)
    for (int N = 1; N <= max_cells; ++N)
      for (const auto& mu : all_multipartitions(r, N)) {
        bool single_layer = true;
        for (const auto& p : mu.components())
          if (p.length() > 1) single_layer = false;
        if (!single_layer) continue;
        for (const auto& shape : all_multipartitions(r, N)) {
          auto ct = cascade_tableaux(shape, mu);
          DimVector first(r, 0);
          for (int i = 0; i < r; ++i) first[i] = shape[i][0];
          bool expect = dominates_nodewise(first, layer_vector(mu, 1));
          bool ok = ct.empty() == !expect;
          if (ok && !ct.empty()) {
            ok = ct.size() == 1 && cascade_charge_sum(shape, mu) == UniPoly::constant(1);
            for (int i = 0; ok && i < r; ++i)
              ok = letter_census(ct[0], 1)[i] == shape[i].size();
          }
          t.count_lazy(ok, [&] {
            return "single-layer survivor law fails at " + mu.to_string() + " " + shape.to_string();
          });
        }
      }

  // concentrated targets: every filling of the right weight survives, and the
  // charge sum reproduces the operator tables
  for (int r = 1; r <= max_r; ++r)
    for (int N = 1; N <= max_cells; ++N) {
      auto mus = all_partitions(N, N);
      Tally part = indexed_sweep(static_cast<long long>(mus.size()), opt.jobs, [&](long long mi, Tally& tt) {
        const Partition& mup = mus[mi];
        MultiPartition mu(r, Partition{});
        mu[r - 1] = mup;
        for (const auto& shape : all_multipartitions(r, N)) {
          std::set<MultiTableau> ct;
          for (const auto& mt : cascade_tableaux(shape, mu)) ct.insert(mt);
          std::set<MultiTableau> everything;
          for (const auto& mt : enumerate_multitableaux(shape, mup.length())) {
            std::vector<int> cnt = content_of(mt.word(), mup.length());
            bool match = true;
            for (int k = 0; k < mup.length(); ++k)
              if (cnt[k] != mup[k]) match = false;
            if (match) everything.insert(mt);
          }
          tt.count_lazy(ct == everything, [&] {
            return "concentrated survivors differ from all fillings at " + mu.to_string() + " " +
                   shape.to_string();
          });
        }
        std::vector<int> ones(mup.length(), 1);
        RectTriple triple(r, 0, mup.parts(), ones);
        tt.count_lazy(triple.datum().entries() == borel_datum(mu, mup.length()).entries(),
                      [&] { return "column datum differs from the one-row cycle datum"; });
        KsTables tables = ks_tables(triple, Method::operators);
        std::map<MultiPartition, UniPoly> by_charge;
        for (const auto& shape : all_multipartitions(r, N)) {
          UniPoly p = cascade_charge_sum(shape, mu);
          if (!p.is_zero()) by_charge[shape] = p;
        }
        std::map<MultiPartition, UniPoly> nonzero;
        for (const auto& [lam, red] : tables.reduced)
          if (!red.is_zero()) nonzero[lam] = red;
        tt.count_lazy(nonzero == by_charge, [&] {
          return "cascade charge sums differ from the operator tables at " + mu.to_string();
        });
      });
      t.merge(std::move(part));
    }

  // round-by-round census criterion is equivalent to the direct definition
  for (int r = 1; r <= max_r; ++r)
    for (int N = 0; N <= std::min(max_cells, 4); ++N)
      for (const auto& mu : all_multipartitions(r, N))
        for (const auto& shape : all_multipartitions(r, N)) {
          auto sizes = layer_sizes(mu);
          for (const auto& mt : enumerate_multitableaux(shape, N)) {
            bool direct = is_cascade_catabolizable(mt, mu);
            bool alt = true;
            {
              std::vector<int> cnt(sizes.size() + 8, 0);
              for (int c : mt.word()) {
                if (c - 1 >= static_cast<int>(cnt.size())) {
                  alt = false;
                  break;
                }
                ++cnt[c - 1];
              }
              if (alt)
                for (size_t k = 0; k < cnt.size(); ++k)
                  if (cnt[k] != (k < sizes.size() ? sizes[k] : 0)) alt = false;
            }
            if (alt) {
              MultiTableau cur = mt;
              for (size_t k = 1; k <= sizes.size() && alt; ++k) {
                if (!dominates_nodewise(letter_census(cur, 1), layer_vector(mu, static_cast<int>(k)))) {
                  alt = false;
                  break;
                }
                DimVector last(r, 0);
                last[r - 1] = sizes[k - 1];
                auto res = ccat(cur, last);
                if (!res) {
                  alt = false;
                  break;
                }
                std::vector<Tableau> comp;
                for (int i = 0; i < r; ++i) comp.push_back((*res)[i].relabeled(-1));
                cur = MultiTableau(comp);
              }
            }
            t.count_lazy(direct == alt, [&] {
              return "round-by-round criterion disagrees at " + mu.to_string() + " " +
                     shape.to_string();
            });
          }
        }

  return t;
}

// ---------------------------------------------------------------------------
// 9. Wreath-product characteristic of induced modules.

Tally crit_wreath(const VerifyOptions& opt) {
  const int max_r = opt.max_r > 0 ? opt.max_r : 3;
  const int max_n = opt.max_n > 0 ? opt.max_n : 3;
  Tally t;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::pair<std::string, SnClassFunction>> modules = {
        {"trivial", trivial_character(n)},
        {"sign", sign_character(n)},
        {"regular", regular_character(n)},
    };
    for (int r = 1; r <= max_r; ++r)
      for (const auto& [label, cf] : modules) {
        InductionCheck chk = induction_frobenius(cf, n, r);
        t.count_lazy(chk.equal(), [&] {
          return "induction characteristic mismatch: " + label + " n=" + std::to_string(n) +
                 " r=" + std::to_string(r);
        });
        if (r == 1) {
          // one-node collapse: nothing is induced, the plain characteristic returns
          TensorPoly plain;
          plain.r = 1;
          for (const auto& [lam, c] : frobenius_sn(cf, n))
            plain.add_term(MultiPartition(std::vector<Partition>{lam}), c);
          t.count_lazy(chk.by_group == plain, [&] {
            return "one-node collapse fails for " + label + " n=" + std::to_string(n);
          });
        }
      }
  }
  for (int N = 1; N <= 4; ++N)
    for (const auto& mu : all_partitions(N)) {
      RmuCheck chk = rmu_identity(mu, 2);
      t.count_lazy(chk.equal(),
                   [&] { return "column-rectangle induction fails at mu=" + mu.to_string(); });
    }
  (void)opt;
  return t;
}

// ---------------------------------------------------------------------------
// 10. Positivity and prefactor guards; crafted violations must raise.

Tally crit_guards(const VerifyOptions& opt) {
  const int max_r = opt.max_r > 0 ? opt.max_r : 3;
  const int max_n = opt.max_n > 0 ? opt.max_n : 4;
  auto triples = rectangle_sweep(max_r, max_n);
  Tally t = indexed_sweep(static_cast<long long>(triples.size()), opt.jobs, [&](long long i, Tally& tt) {
    const RectTriple& tr = triples[i];
    const LusztigDatum d = tr.datum();
    KsTables tables = ks_tables(tr, Method::operators);
    for (const auto& [lam, red] : tables.reduced) {
      tt.count_lazy(red.nonnegative(), [&] {
        return tr.to_string() + " " + lam.to_string() + ": negative reduced coefficient";
      });
      bool pure = false;
      try {
        pure = full_from_reduced(red, d, lam) == tables.full.at(lam);
      } catch (const integrity_error&) {
        pure = false;
      }
      tt.count_lazy(pure, [&] {
        return tr.to_string() + " " + lam.to_string() + ": prefactor is not a pure monomial";
      });
    }
  });

  {  // crafted violations must raise integrity_error
    RectTriple triple(2, 0, {1}, {1});
    const LusztigDatum d = triple.datum();
    MultiPartition lam(std::vector<Partition>{Partition{1}, Partition{}});
    auto exps = root_lattice_exponents(d, lam);
    bool threw = false;
    if (exps) {
      ArrowLaurent bad = ArrowLaurent::monomial(2, {(*exps)[0] + 1, 0});
      try {
        reduced_ks(bad, d, lam);
      } catch (const integrity_error&) {
        threw = true;
      }
    }
    t.count(exps.has_value() && threw, "non-divisible coefficient slipped through");

    threw = false;
    try {
      CycloPoly one(2);
      one.add(0, 0, 1);
      one.integer_quotient(2);
    } catch (const integrity_error&) {
      threw = true;
    }
    t.count(threw, "non-integral trace quotient slipped through");

    threw = false;
    try {
      SnClassFunction fake;
      fake[Partition{2}] = UniPoly::constant(1);
      frobenius_sn(fake, 2);
    } catch (const integrity_error&) {
      threw = true;
    }
    t.count(threw, "non-character class function slipped through");
  }
  return t;
}

// ---------------------------------------------------------------------------

struct Suite {
  std::string name;
  Tally (*run)(const VerifyOptions&);
};

const std::vector<Suite>& registry() {
  static const std::vector<Suite> suites = {
      {"theorem-main", crit_triangle},
      {"shoji", crit_kostka_foulkes},
      {"plethysm", crit_plethysm},
      {"running-example", crit_running_example},
      {"morris", crit_cancellation},
      {"rotation-charge", crit_rotation_charge},
      {"appendix", crit_word_toolkit},
      {"catabolism", crit_catabolism},
      {"wreath", crit_wreath},
      {"guards", crit_guards},
  };
  return suites;
}

SuiteReport report_from(const std::string& name, Tally&& t) {
  SuiteReport rep;
  rep.name = name;
  rep.cases = t.cases;
  rep.failures = t.failures;
  std::ostringstream os;
  os << t.cases << " checks, " << t.failures << " failures";
  for (const auto& n : t.notes) os << "; " << n;
  rep.summary = os.str();
  return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : registry()) v.push_back(s.name);
    return v;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& opt) {
  for (const auto& s : registry())
    if (s.name == name) return report_from(name, s.run(opt));
  throw std::invalid_argument("unknown verification suite: " + name);
}

std::vector<SuiteReport> run_all_suites(const VerifyOptions& opt) {
  std::vector<SuiteReport> out;
  for (const auto& s : registry()) out.push_back(report_from(s.name, s.run(opt)));
  return out;
}

}  // namespace qks
