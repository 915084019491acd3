#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "qks/crystal.hpp"
#include "qks/tableau.hpp"

using namespace qks;

namespace {

std::vector<Word> words_up_to(int max_len, int max_letter) {
  std::vector<Word> out{{}}, layer{{}};
  for (int i = 0; i < max_len; ++i) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (int x = 1; x <= max_letter; ++x) {
        Word v = w;
        v.push_back(x);
        next.push_back(v);
        out.push_back(std::move(v));
      }
    layer = std::move(next);
  }
  return out;
}

std::vector<Word> increasing_words(int len, int max_letter) {
  std::vector<Word> out;
  Word cur;
  auto rec = [&](auto&& self, int pos, int lo) -> void {
    if (pos == len) {
      out.push_back(cur);
      return;
    }
    for (int x = lo; x <= max_letter; ++x) {
      cur.push_back(x);
      self(self, pos + 1, x);
      cur.pop_back();
    }
  };
  rec(rec, 0, 1);
  return out;
}

}  // namespace

TEST_CASE("bracket counts") {
  // i+1 opens, i closes, openers match closers to their right
  CHECK(eps_i({2, 1}, 1) == 0);
  CHECK(phi_i({2, 1}, 1) == 0);
  CHECK(eps_i({1, 2}, 1) == 1);
  CHECK(phi_i({1, 2}, 1) == 1);
  CHECK(eps_i({2, 2, 1}, 1) == 1);
  CHECK(phi_i({1, 2, 1}, 1) == 1);
  CHECK(eps_i({1, 3, 2}, 2) == 1);  // letters other than i, i+1 are invisible

  auto info = bracket_info({1, 2, 2, 1}, 1);
  CHECK(info.unpaired_low == std::vector<size_t>{0});
  CHECK(info.unpaired_high == std::vector<size_t>{2});
}

TEST_CASE("the two-letter string 11 -> 12 -> 22") {
  CHECK(*lower_f({1, 1}, 1) == Word{1, 2});
  CHECK(*lower_f({1, 2}, 1) == Word{2, 2});
  CHECK(!lower_f({2, 2}, 1).has_value());
  CHECK(*raise_e({2, 2}, 1) == Word{1, 2});
  CHECK(*raise_e({1, 2}, 1) == Word{1, 1});
  CHECK(!raise_e({2, 1}, 1).has_value());  // the matched pair is a singlet
  CHECK(!lower_f({2, 1}, 1).has_value());
}

TEST_CASE("raising and lowering invert each other") {
  for (const auto& w : words_up_to(4, 3))
    for (int i = 1; i <= 2; ++i) {
      if (auto down = lower_f(w, i)) {
        CHECK(*raise_e(*down, i) == w);
        CHECK(phi_i(*down, i) == phi_i(w, i) - 1);
        CHECK(eps_i(*down, i) == eps_i(w, i) + 1);
      }
      if (auto up = raise_e(w, i)) CHECK(*lower_f(*up, i) == w);
      Word s = reflect_s(w, i);
      CHECK(reflect_s(s, i) == w);
      CHECK(eps_i(s, i) == phi_i(w, i));
    }
}

TEST_CASE("yamanouchi words are the highest-weight ones") {
  CHECK(is_yamanouchi(Tableau::yamanouchi(Partition{3, 2, 1}).word()));
  CHECK(is_yamanouchi({2, 1}));  // word of the column tableau on {1,2}
  CHECK(!is_yamanouchi({1, 2, 2}));
  for (const auto& w : words_up_to(4, 3)) {
    bool hw = true;
    for (int i = 1; i <= 2; ++i) hw = hw && eps_i(w, i) == 0;
    CHECK(is_yamanouchi(w) == hw);
  }
}

TEST_CASE("long element pins from the rotation step") {
  CHECK(w0_eta({4, 2, 1, 3, 1}, {2, 2}) == Word{4, 2, 1, 3, 2});
  CHECK(w0_eta({2}, {2, 2}) == Word{1});
  CHECK(w0_block({1, 1, 2}, 1, 2) == Word{1, 2, 2});
  // involution and content reversal on one block
  for (const auto& w : words_up_to(4, 3)) {
    Word v = w0_block(w, 1, 3);
    CHECK(w0_block(v, 1, 3) == w);
    auto c = content_of(w, 3), d = content_of(v, 3);
    std::reverse(d.begin(), d.end());
    CHECK(c == d);
  }
}

TEST_CASE("row overlap pins") {
  CHECK(row_overlap({1, 1, 3, 3, 4}, {2, 2, 3, 4}) == 3);
  CHECK(row_overlap({1, 2}, {1, 2}) == 1);
  CHECK(row_overlap({1, 1}, {2, 2}) == 2);
  CHECK(row_overlap({2, 2}, {3}) == 1);
  CHECK(row_overlap({1}, {}) == 0);
  CHECK(dual_eps_pair({2, 2, 3, 4}, {1, 1, 3, 3, 4}) == 2);
}

TEST_CASE("jeu example: (2234, 11334) slides to (223344, 113)") {
  std::vector<Word> rows = {{1, 1, 3, 3, 4}, {2, 2, 3, 4}};
  auto res = dual_tuple_op(rows, 1, DualOp::SE);
  REQUIRE(res.has_value());
  CHECK((*res)[0] == Word{1, 1, 3});
  CHECK((*res)[1] == Word{2, 2, 3, 3, 4, 4});
}

TEST_CASE("dual operators agree with the recording-tableau oracle") {
  for (const auto& lo : increasing_words(3, 4))
    for (const auto& hi : increasing_words(2, 4)) {
      std::vector<Word> rows = {lo, hi};
      for (DualOp op : {DualOp::E, DualOp::S, DualOp::SE}) {
        auto a = dual_tuple_op(rows, 1, op);
        auto b = dual_tuple_op_via_recording(rows, 1, op);
        CHECK(a.has_value() == b.has_value());
        if (a && b) CHECK(*a == *b);
      }
      // SE swaps lengths (a,b) -> (b-1,a+1) on the (below, above) pair
      if (auto se = dual_tuple_op(rows, 1, DualOp::SE)) {
        CHECK((*se)[0].size() == hi.size() - 1);
        CHECK((*se)[1].size() == lo.size() + 1);
      }
    }
}
