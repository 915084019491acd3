#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <utility>
#include <vector>

#include "qks/lr_charge.hpp"
#include "qks/partition.hpp"
#include "qks/tableau.hpp"

using namespace qks;

TEST_CASE("context bookkeeping") {
  LRContext ctx({2, 1}, {2, 2});
  CHECK(ctx.s() == 2);
  CHECK(ctx.n() == 4);
  CHECK(ctx.total_cells() == 6);
  CHECK(ctx.content() == std::vector<int>{2, 2, 1, 1});
  CHECK(ctx.block_range(0) == std::pair<int, int>{1, 2});
  CHECK(ctx.block_range(1) == std::pair<int, int>{3, 4});
  CHECK(ctx.block_of(3) == 1);
  CHECK(ctx.rectangle(0) == Tableau({{1, 1}, {2, 2}}));
  CHECK(ctx.rectangle(1) == Tableau({{3}, {4}}));
  CHECK(ctx.rectangle_word(0) == Word{2, 2, 1, 1});

  LRContext tail = ctx.tail();
  CHECK(tail.s() == 1);
  CHECK(tail.mu() == std::vector<int>{1});
  CHECK(tail.eta() == std::vector<int>{2});

  CHECK_THROWS_AS(LRContext({1, 2}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(LRContext({1}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(LRContext({1, 1}, {1}), std::invalid_argument);
}

TEST_CASE("LR membership in the running context") {
  LRContext ctx({2, 1}, {2, 2});
  CHECK(is_lr_word({2, 4, 2, 1, 3, 1}, ctx));
  CHECK(is_lr_word({4, 2, 1, 3, 2, 1}, ctx));
  // right content, but the first-block subword is a row, not the rectangle
  CHECK(!is_lr_word({1, 1, 2, 4, 2, 3}, ctx));
  // wrong content
  CHECK(!is_lr_word({1, 1, 1, 2, 3, 4}, ctx));
  CHECK(!is_lr_word({2, 4, 2, 1, 3}, ctx));
}

TEST_CASE("charge pins and knuth invariance") {
  LRContext ctx({2, 1}, {2, 2});
  CHECK(lr_charge({2, 4, 2, 1, 3, 1}, ctx) == 1);
  CHECK(lr_charge({4, 2, 1, 3, 2, 1}, ctx) == 0);
  for (const auto& v : knuth_class({2, 4, 2, 1, 3, 1})) {
    CHECK(is_lr_word(v, ctx));
    CHECK(lr_charge(v, ctx) == 1);
  }
}

TEST_CASE("rotation orbit") {
  LRContext ctx({2, 1}, {2, 2});
  const Word uv = {2, 4, 2, 1, 3, 1};
  Word r1 = rotate_once(uv, ctx);
  CHECK(r1 == Word{4, 2, 1, 3, 2, 1});
  CHECK(is_lr_word(r1, ctx));
  CHECK(rotate(uv, ctx, 6) == uv);  // the action has order N = 6
  Word w = uv;
  for (int i = 0; i < 6; ++i) {
    CHECK(is_lr_word(w, ctx));
    w = rotate_once(w, ctx);
  }
  CHECK(w == uv);
}

TEST_CASE("all-ones heights reduce to classical charge") {
  LRContext borel({3, 2, 1}, {1, 1, 1});
  for (const auto& lam : all_partitions(6)) {
    MultiPartition mp(std::vector<Partition>{lam});
    for (const auto& t : lr_multitableaux(mp, borel, 0)) {
      const Word u = t.word();
      CHECK(lr_charge(u, borel) == ls_charge(u, {3, 2, 1}));
    }
  }
}

TEST_CASE("kostka-foulkes columns via the tableau sum") {
  LRContext ones({1, 1, 1}, {1, 1, 1});
  auto col = [&](const Partition& lam) {
    return tableau_ks(MultiPartition(std::vector<Partition>{lam}), ones, 0);
  };
  CHECK(col({1, 1, 1}) == UniPoly::constant(1));
  CHECK(col({2, 1}) == UniPoly({0, 1, 1}));
  CHECK(col({3}) == UniPoly({0, 0, 0, 1}));

  LRContext two({1, 1}, {1, 1});
  CHECK(tableau_ks(MultiPartition(std::vector<Partition>{Partition{2}}), two, 0) ==
        UniPoly::monomial(1));
  CHECK(tableau_ks(MultiPartition(std::vector<Partition>{Partition{1, 1}}), two, 0) ==
        UniPoly::constant(1));
}

TEST_CASE("classical charge pins") {
  CHECK(ls_charge(Tableau::yamanouchi(Partition{3, 2, 1}).word(), {3, 2, 1}) == 0);
  CHECK(ls_charge({1, 1, 1, 2, 2, 3}, {3, 2, 1}) == 4);  // one-row tableau, top degree n(mu)
  CHECK(ls_charge({2, 1, 1}, {2, 1}) == 1);
  CHECK(ls_charge({1, 1, 2}, {2, 1}) == 2);
}

TEST_CASE("empty context") {
  LRContext empty({}, {});
  CHECK(empty.s() == 0);
  CHECK(is_lr_word({}, empty));
  CHECK(lr_charge({}, empty) == 0);
}

TEST_CASE("zero-width rectangles are allowed in data") {
  // mu may end in zeros: the block contributes no letters
  LRContext ctx({2, 0}, {1, 2});
  CHECK(ctx.total_cells() == 2);
  CHECK(ctx.content() == std::vector<int>{2, 0, 0});
  CHECK(is_lr_word({1, 1}, ctx));
  CHECK(lr_charge({1, 1}, ctx) == 0);
}
