#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "qdouble/error.hpp"
#include "qdouble/group.hpp"

using namespace qdouble;

static const char* kCatalog[] = {"zn:1", "zn:2", "zn:3", "zn:4", "zn:6", "prod(zn:2,zn:2)", "s:3", "d:4", "s:4", "d:3"};

TEST_CASE("constructor examples") {
  CHECK(make_group("zn:1")->size() == 1);
  const auto z4 = make_group("zn:4");
  CHECK(z4->mul(2, 3) == 1);
  CHECK(make_group("d:4")->size() == 8);
  CHECK(make_group("s:4")->size() == 24);
  CHECK(make_group("prod(zn:2,zn:3)")->size() == 6);
  CHECK(make_group("prod(zn:2,zn:3)")->is_abelian());
  CHECK_FALSE(make_group("s:3")->is_abelian());
}

TEST_CASE("S3 element orders match the permutation oracle") {
  const auto g = make_group("s:3");
  REQUIRE(g->size() == 6);
  std::multiset<int> got, expect;
  for (int a = 0; a < 6; ++a) got.insert(g->element_order(a));
  for (const auto& p : oracle::s3_perms()) expect.insert(oracle::perm_order(p));
  CHECK(got == expect);
  CHECK(got.count(2) == 3);
}

TEST_CASE("S3 conjugation: a transposition swaps the two 3-cycles") {
  const auto g = make_group("s:3");
  std::vector<int> transpositions, three_cycles;
  for (int a = 0; a < 6; ++a) {
    if (g->element_order(a) == 2) transpositions.push_back(a);
    if (g->element_order(a) == 3) three_cycles.push_back(a);
  }
  REQUIRE(three_cycles.size() == 2);
  for (int t : transpositions) {
    CHECK(g->conj(t, three_cycles[0]) == three_cycles[1]);
    CHECK(g->conj(t, three_cycles[1]) == three_cycles[0]);
  }
  // the table itself composes like the permutations: compare multiplication
  // of orders pattern, (transposition)^2 = e
  for (int t : transpositions) CHECK(g->mul(t, t) == 0);
}

TEST_CASE("conjugation identities") {
  for (const char* d : kCatalog) {
    const auto g = make_group(d);
    CAPTURE(d);
    for (int x = 0; x < g->size(); ++x) {
      CHECK(g->conj(x, 0) == 0);
      CHECK(g->inv(g->inv(x)) == x);
      for (int s = 0; s < g->size(); ++s) {
        if (g->is_abelian()) CHECK(g->conj(x, s) == s);
        for (int y = 0; y < g->size(); ++y) CHECK(g->conj(g->mul(x, y), s) == g->conj(y, g->conj(x, s)));
      }
    }
  }
}

TEST_CASE("catalog groups pass verify_group") {
  for (const char* d : kCatalog) {
    CAPTURE(d);
    CHECK(verify_group(*make_group(d)).passed());
  }
}

TEST_CASE("a corrupted entry gives an associativity witness triple") {
  const auto g = make_group("zn:4");
  auto table = g->table();
  table[1 * 4 + 2] = 0;  // 1 + 2 = 0 instead of 3
  const Report r = verify_group_table(4, table);
  CHECK_FALSE(r.passed());
  const auto* c = r.find("group.associativity");
  REQUIRE(c != nullptr);
  REQUIRE(c->status == Status::fail);
  REQUIRE(c->witness->point.size() == 3);
  const auto& p = c->witness->point;
  auto m = [&](long long a, long long b) { return table[static_cast<std::size_t>(a * 4 + b)]; };
  CHECK(m(m(p[0], p[1]), p[2]) != m(p[0], m(p[1], p[2])));
  // replaying the witness reproduces the failure
  const auto res = replay_clause(group_clauses(4, table), "group.associativity", p);
  CHECK(res.status == Status::fail);
}

TEST_CASE("size-1 table passes") { CHECK(verify_group_table(1, {0}).passed()); }

TEST_CASE("descriptor errors") {
  for (const char* bad : {"zn:0", "s:5", "d:0", "foo", "zn:", "prod(zn:2)", "zn:-3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(make_group(bad), Error);
  }
}

TEST_CASE("out-of-range element is rejected") {
  const auto g = make_group("zn:3");
  CHECK_THROWS_AS(g->mul(GroupElement{3}, GroupElement{0}), Error);
  CHECK_THROWS_AS(g->inv(GroupElement{-1}), Error);
}

TEST_CASE("constructor refuses tables without identity at 0") {
  CHECK_THROWS_AS(FiniteGroup("bad", 2, {1, 0, 0, 1}), Error);
}
