#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "qks/partition.hpp"
#include "qks/rsk.hpp"
#include "qks/tableau.hpp"

using namespace qks;

namespace {

// All words over [1,max_letter] of exactly the given length.
std::vector<Word> words_of_length(int len, int max_letter) {
  std::vector<Word> out{{}};
  for (int i = 0; i < len; ++i) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (int x = 1; x <= max_letter; ++x) {
        Word v = w;
        v.push_back(x);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

// Independent expansion of a Schur product: peel one factor at a time.
long long product_coefficient(const Partition& lambda, const std::vector<Partition>& parts) {
  if (parts.empty()) return lambda.empty() ? 1 : 0;
  std::vector<Partition> rest(parts.begin(), parts.end() - 1);
  int inner_size = 0;
  for (const auto& p : rest) inner_size += p.size();
  long long total = 0;
  for (const auto& nu : all_partitions(inner_size)) {
    long long c = lr_coefficient(lambda, nu, parts.back());
    if (c != 0) total += c * product_coefficient(nu, rest);
  }
  return total;
}

}  // namespace

TEST_CASE("row insertion pins") {
  Tableau t;
  for (int x : {3, 1, 2}) t = row_insert(t, x);
  CHECK(t == Tableau({{1, 2}, {3}}));
  CHECK(p_tableau({3, 1, 2}) == t);
  CHECK(t.word() == Word{3, 1, 2});
  CHECK(t.shape() == Partition{2, 1});
  CHECK(p_tableau({}) == Tableau());
}

TEST_CASE("column insertion prepends to the reading word") {
  Tableau t = p_tableau({2, 3, 1});
  for (int x = 1; x <= 4; ++x) {
    Tableau u = column_insert(t, x);
    CHECK(knuth_equivalent(u.word(), word_concat({x}, t.word())));
  }
}

TEST_CASE("knuth classes are the p-tableau fibers") {
  for (const auto& w : words_of_length(4, 3)) {
    auto cls = knuth_class(w);
    std::set<Word> from_moves(cls.begin(), cls.end());
    std::set<Word> from_tableau;
    for (const auto& v : words_of_length(4, 3))
      if (p_tableau(v) == p_tableau(w)) from_tableau.insert(v);
    CHECK(from_moves == from_tableau);
  }
}

TEST_CASE("column rsk builds P of the reversed word with standard Q") {
  for (const auto& w : words_of_length(4, 3)) {
    auto [p, q] = rsk_word(w);
    CHECK(p == p_tableau(Word(w.rbegin(), w.rend())));
    CHECK(p.shape() == q.shape());
    std::vector<int> ones(w.size(), 1);
    CHECK(q.content(static_cast<int>(w.size())) == ones);
  }
}

TEST_CASE("insert and remove row words invert each other") {
  Tableau base({{1, 2, 2}, {3}});
  Word u = {1, 2};
  Tableau big = insert_row_word(base, u);
  CHECK(big.shape().contains(base.shape()));
  auto [v, small] = remove_row_strip(big, base.shape());
  CHECK(v == u);
  CHECK(small == base);
  CHECK(knuth_equivalent(big.word(), word_concat(u, base.word())));
}

TEST_CASE("psi chains round trip") {
  std::vector<Word> rows = {{1, 2}, {1, 3}, {2}};
  PsiResult res = psi_insert(rows, Tableau());
  CHECK(res.chain.front() == Partition{});
  CHECK(res.chain.back() == res.p.shape());
  PsiInverseResult inv = psi_extract(res.p, res.chain);
  CHECK(inv.rows == rows);
  CHECK(inv.base == Tableau());

  Tableau q = chain_to_tableau(res.chain);
  CHECK(tableau_to_chain(q, static_cast<int>(rows.size())) == res.chain);
}

TEST_CASE("kostka numbers") {
  CHECK(kostka_number({2, 1}, {}, {1, 1, 1}) == 2);
  CHECK(kostka_number({2, 1}, {}, {2, 1}) == 1);
  CHECK(kostka_number({3}, {}, {1, 1, 1}) == 1);
  CHECK(kostka_number({1, 1, 1}, {}, {2, 1}) == 0);
  CHECK(kostka_number({2, 1}, {1}, {1, 1}) == 2);  // skew shape, two fillings
  // symmetric in the weight
  CHECK(kostka_number({3, 2, 1}, {}, {1, 2, 2, 1}) == kostka_number({3, 2, 1}, {}, {2, 1, 1, 2}));
}

TEST_CASE("littlewood-richardson pins") {
  CHECK(lr_coefficient({4, 2}, {2, 1}, {2, 1}) == 1);
  CHECK(lr_coefficient({3, 2, 1}, {2, 1}, {2, 1}) == 2);
  CHECK(lr_coefficient({2, 2, 1, 1}, {2, 1}, {2, 1}) == 1);
  CHECK(lr_coefficient({4, 1}, {2, 2}, {1}) == 0);
  // s_mu s_nu = s_nu s_mu
  for (const auto& lam : all_partitions(5))
    CHECK(lr_coefficient(lam, {2, 1}, {2}) == lr_coefficient(lam, {2}, {2, 1}));
}

TEST_CASE("star coefficients count products of schur functions") {
  const std::vector<Partition> blocks = {{2, 1}, {1}};
  for (const auto& lam : all_partitions(4))
    CHECK(star_coefficient(lam, blocks) == lr_coefficient(lam, {2, 1}, {1}));
  // three factors against the iterated LR expansion
  const std::vector<Partition> threes = {{2}, {1, 1}, {1}};
  for (const auto& lam : all_partitions(5))
    CHECK(star_coefficient(lam, threes) == product_coefficient(lam, threes));
}
