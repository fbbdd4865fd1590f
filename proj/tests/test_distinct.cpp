#include <doctest.h>

#include <random>
#include <string>

#include "leafine/dialect.hpp"
#include "leafine/distinct.hpp"
#include "leafine/errors.hpp"
#include "leafine/fib_trees.hpp"
#include "leafine/induce.hpp"
#include "support/random_trees.hpp"

using namespace leafine;

namespace {

TopTree star(unsigned m) {
  std::vector<TopTree> kids(m, TopTree::leaf());
  return TopTree::branch(std::move(kids));
}

TopTree caterpillar(unsigned height) {
  TopTree t = parse("(L,L)");
  for (unsigned i = 1; i < height; ++i)
    t = TopTree::branch({std::move(t), TopTree::leaf()});
  return t;
}

}  // namespace

TEST_SUITE("distinct") {

TEST_CASE("known small sets") {
  CHECK(distinct_codes(TopTree::leaf()) == std::set<std::string>{"L"});
  CHECK(distinct_codes(parse("(L,L)")) == std::set<std::string>{"L", "(L,L)"});
  CHECK(distinct_codes(parse("((L,L),L)")) ==
        std::set<std::string>{"L", "(L,L)", "(L,(L,L))"});
}

TEST_CASE("counts match the recurrence on small indices") {
  CHECK(count_distinct(leaf_fibonacci(0)) == 1);
  CHECK(count_distinct(leaf_fibonacci(6)) == 1193);
  CHECK(count_distinct(leaf_fibonacci(7)) == 94506);
}

TEST_CASE("stars have one shape per selection size") {
  for (unsigned m = 2; m <= 30; ++m)
    CHECK(count_distinct(star(m)) == m);
}

TEST_CASE("caterpillars count their heights") {
  for (unsigned h : {1u, 2u, 5u, 40u})
    CHECK(count_distinct(caterpillar(h)) == h + 1);
}

TEST_CASE("agrees with brute force on random trees") {
  std::mt19937 rng(101);
  for (int i = 0; i < 80; ++i) {
    TopTree t = testsupport::random_topological(rng, 12, true);
    CHECK(distinct_codes(t) == enumerate_bruteforce(t).codes);
  }
}

TEST_CASE("unfolded generator trees share no structure but agree") {
  TopTree t = parse(serialize(leaf_fibonacci(6)));
  CHECK(count_distinct(t) == 1193);
}

TEST_CASE("root containing sets") {
  CHECK(root_containing_codes(parse("(L,L)")) == std::set<std::string>{"(L,L)"});
  // the triple star under a root: (L,L,L) happens only inside one branch
  TopTree t = parse("((L,L,L),L)");
  CHECK(distinct_codes(t) ==
        std::set<std::string>{"L", "(L,L)", "(L,L,L)", "(L,(L,L))", "(L,(L,L,L))"});
  CHECK(root_containing_codes(t) ==
        std::set<std::string>{"(L,L)", "(L,(L,L))", "(L,(L,L,L))"});
}

TEST_CASE("root identity on generator trees") {
  for (unsigned n = 2; n <= 6; ++n) {
    TopTree t = leaf_fibonacci(n);
    auto all = distinct_codes(t);
    auto rooted = root_containing_codes(t);
    CHECK(rooted.size() + 1 == all.size());
    for (const auto& c : rooted) CHECK(all.count(c) == 1);
    CHECK(rooted.count("L") == 0);
  }
}

TEST_CASE("single leaf has no root containing subtree") {
  CHECK_THROWS_AS(root_containing_codes(TopTree::leaf()), SingleLeafTree);
}

TEST_CASE("cap enforcement") {
  CHECK_THROWS_AS(count_distinct(leaf_fibonacci(5), 10), DistinctSetOverflow);
  CHECK(count_distinct(leaf_fibonacci(5), 82) == 82);
}

TEST_CASE("result does not depend on child order") {
  std::mt19937 rng(131);
  for (int i = 0; i < 20; ++i) {
    TopTree t = testsupport::random_topological(rng, 14, true);
    TopTree back = parse(serialize(t));
    CHECK(distinct_codes(t) == distinct_codes(back));
  }
}

}  // TEST_SUITE("distinct")
