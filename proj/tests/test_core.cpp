#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "qks/laurent.hpp"
#include "qks/partition.hpp"

using namespace qks;

TEST_CASE("partition basics") {
  Partition p{4, 2, 1};
  CHECK(p.size() == 7);
  CHECK(p.length() == 3);
  CHECK(p[0] == 4);
  CHECK(p[5] == 0);  // reads as zero past the end
  CHECK(p.conjugate() == Partition{3, 2, 1, 1});
  CHECK(Partition{3, 1, 0, 0} == Partition{3, 1});  // trailing zeros trimmed
  CHECK(p.contains(Partition{2, 2}));
  CHECK(!p.contains(Partition{2, 2, 2}));
  CHECK(p.with_part(1, 2) == Partition{4, 4, 1});
}

TEST_CASE("conjugate is an involution") {
  for (const auto& p : all_partitions(7)) CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("partition counts") {
  const int expect[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) CHECK(static_cast<int>(all_partitions(n).size()) == expect[n]);
  CHECK(all_partitions(6, 2).size() == 4);  // (6),(5,1),(4,2),(3,3)
}

TEST_CASE("multipartition enumeration is sorted and complete") {
  auto all = all_multipartitions(2, 3);
  CHECK(all.size() == 10);  // sum_k p(k) p(3-k)
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::set<MultiPartition>(all.begin(), all.end()).size() == all.size());
  for (const auto& mp : all) CHECK(mp.size() == 3);
}

TEST_CASE("multipartition order compares size vectors first") {
  MultiPartition a(std::vector<Partition>{{}, {3}});
  MultiPartition b(std::vector<Partition>{{1}, {2}});
  MultiPartition c(std::vector<Partition>{{1}, {1, 1}});
  CHECK(a < b);  // (0,3) before (1,2)
  CHECK(b < c);  // same size vector, lex on the components
}

TEST_CASE("horizontal and vertical strips are conjugate notions") {
  const Partition inner{2, 1};
  auto hs = horizontal_strip_over(inner, 2);
  CHECK(hs.size() == 4);  // (4,1),(3,2),(3,1,1),(2,2,1)
  for (const auto& outer : all_partitions(5)) {
    const bool h = std::count(hs.begin(), hs.end(), outer) > 0;
    if (!outer.contains(inner)) {
      CHECK(!h);
      continue;
    }
    auto vs = vertical_strip_under(outer.conjugate(), 2);
    const bool v = std::count(vs.begin(), vs.end(), inner.conjugate()) > 0;
    CHECK(h == v);
  }
}

TEST_CASE("unipoly arithmetic") {
  UniPoly a({1, 1});     // 1 + t
  UniPoly b({1, 1, 1});  // 1 + t + t^2
  CHECK(a * b == UniPoly({1, 2, 2, 1}));
  CHECK((a - a).is_zero());
  CHECK(a.degree() == 1);
  CHECK(UniPoly().degree() == -1);
  CHECK(UniPoly({1, 2, 2, 1}).eval_at_one() == 6);
  CHECK(UniPoly::monomial(3, 2) == UniPoly({0, 0, 0, 2}));
  CHECK(a.times_power(2) == UniPoly({0, 0, 1, 1}));
  CHECK(stretch_variable(b, 2) == UniPoly({1, 0, 1, 0, 1}));
  CHECK(a.nonnegative());
  CHECK(!UniPoly({1, -1}).nonnegative());
  CHECK(UniPoly({0, 1, 1}).to_string() == "t + t^2");
  CHECK(UniPoly().to_string() == "0");
}

TEST_CASE("arrow variables") {
  ArrowLaurent x = ArrowLaurent::arrow_power(2, 0, 1);  // t01
  ArrowLaurent y = ArrowLaurent::arrow_power(2, 1, 1);  // t10
  CHECK(x * y == ArrowLaurent::monomial(2, {1, 1}));
  CHECK((x + y) * (x + y) == x * x + y * y + ArrowLaurent::monomial(2, {1, 1}, 2));
  CHECK(x.coeff({1, 0}) == 1);
  CHECK(x.coeff({0, 1}) == 0);

  // a polynomial in the full cycle is recognized as one
  ArrowLaurent c = ArrowLaurent::monomial(2, {1, 1}) + ArrowLaurent::monomial(2, {2, 2});
  auto f = c.as_cycle_polynomial();
  REQUIRE(f.has_value());
  CHECK(*f == UniPoly({0, 1, 1}));
  CHECK(!x.as_cycle_polynomial().has_value());

  CHECK(c.specialize_uniform() == UniPoly({0, 0, 1, 0, 1}));
  CHECK(ArrowLaurent::monomial(2, {2, 1}).divided_by({1, 1}) == ArrowLaurent::monomial(2, {1, 0}));

  ArrowLaurent z = x;
  z.scale(-3);
  CHECK(z == ArrowLaurent::arrow_power(2, 0, 1, -3));
  CHECK(!z.nonnegative());
  CHECK((z - z).is_zero());
}

TEST_CASE("single-node laurent uses a self-loop variable") {
  ArrowLaurent t = ArrowLaurent::arrow_power(1, 0, 1);
  CHECK((t * t).as_cycle_polynomial().value() == UniPoly::monomial(2));
}
