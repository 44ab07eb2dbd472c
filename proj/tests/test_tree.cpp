#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <optional>
#include <set>

#include "oracles.hpp"

using namespace arf;

namespace {

const Collection kSplit{{14, 7, 5}, {7, 3}};          // split bound 4
const Collection kThree{{5, 4}, {6, 4}, {2, 2}};      // six untwisted trees
const Collection kTwin{{5, 3, 2}, {6, 4, 2}, {5, 3, 2}};
const Matrix kTwinTree{{0, 1, 2}, {0, 0, 1}, {0, 0, 0}};

template <class F>
std::optional<Error> caught(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("split bounds") {
  CHECK(k_bound(kSplit, 1, 2) == Level::finite(4));
  CHECK(k_bound(kThree, 1, 2) == Level::finite(3));
  CHECK(k_bound(kThree, 2, 3) == Level::finite(2));
  CHECK(k_bound(kThree, 1, 3) == Level::finite(2));
  CHECK(k_bound(kTwin, 1, 3) == Level::infinite());
  CHECK(k_bound(kTwin, 1, 2) == Level::finite(4));
}

TEST_CASE("matrix validation") {
  CHECK(validate_tree_matrix(kThree, {{0, 1, 2}, {0, 0, 1}, {0, 0, 0}}).ok);
  MatrixReport bound = validate_tree_matrix(kThree, {{0, 4, 1}, {0, 0, 1}, {0, 0, 0}});
  CHECK_FALSE(bound.ok);
  CHECK(bound.issue == "bound");
  CHECK(bound.i == 1);
  CHECK(bound.j == 2);
  MatrixReport triple = validate_tree_matrix(kTwin, {{0, 1, 3}, {0, 0, 2}, {0, 0, 0}});
  CHECK_FALSE(triple.ok);
  CHECK(triple.issue == "triple");
  MatrixReport shape = validate_tree_matrix(kThree, {{0, 1}, {0, 0}});
  CHECK_FALSE(shape.ok);
  CHECK(shape.issue == "shape");
}

TEST_CASE("matrix from consecutive levels") {
  CHECK(untwisted_to_matrix(kThree, {2, 1}) == Matrix{{0, 2, 1}, {0, 0, 1}, {0, 0, 0}});
  CHECK(untwisted_to_matrix(kThree, {3, 2}) == Matrix{{0, 3, 2}, {0, 0, 2}, {0, 0, 0}});
  CHECK(untwisted_to_matrix({{5, 4}}, {}) == Matrix{{0}});
  auto err = caught([] { untwisted_to_matrix(kThree, {4, 1}); });
  REQUIRE(err.has_value());
  CHECK(err->code() == "level_exceeds_bound");
  CHECK(err->args() == std::vector<Int>{1});
}

TEST_CASE("untwisting") {
  CHECK(is_untwisted({{0, 2, 1}, {0, 0, 1}, {0, 0, 0}}));
  CHECK_FALSE(is_untwisted({{0, 1, 2}, {0, 0, 1}, {0, 0, 0}}));
  CHECK(is_untwisted({{0, 3}, {0, 0}}));
  auto [id_perm, id_d] = untwist(kThree, {{0, 2, 1}, {0, 0, 1}, {0, 0, 0}});
  CHECK(id_perm == std::vector<Int>{1, 2, 3});
  CHECK(id_d == Vec{2, 1});
  auto [perm, d] = untwist(kTwin, kTwinTree);
  CHECK(perm == std::vector<Int>{1, 3, 2});
  CHECK(d == Vec{2, 1});
}

TEST_CASE("minimal tree") {
  CHECK(minimal_tree(kThree) == Matrix{{0, 3, 2}, {0, 0, 2}, {0, 0, 0}});
  CHECK(minimal_tree({{5, 4}}) == Matrix{{0}});
  auto err = caught([] { minimal_tree(kTwin); });
  REQUIRE(err.has_value());
  CHECK(err->code() == "unbounded_pair");
  CHECK(err->args() == std::vector<Int>{1, 3});
}

TEST_CASE("untwisted enumeration") {
  std::vector<Vec> vectors = enumerate_untwisted(kThree);
  CHECK(vectors == std::vector<Vec>{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}, {3, 2}});
  CHECK(enumerate_untwisted({{5, 4}}) == std::vector<Vec>{{}});
  CHECK(enumerate_untwisted(kSplit) == std::vector<Vec>{{1}, {2}, {3}, {4}});
  CHECK(caught([] { enumerate_untwisted(kTwin); }).value().code() == "unbounded_pair");
}

TEST_CASE("full enumeration") {
  std::vector<Matrix> trees = enumerate_all(kThree);
  CHECK(trees.size() == 7);
  std::set<Matrix> unique(trees.begin(), trees.end());
  CHECK(unique.size() == 7);
  Int twisted = 0;
  for (const Matrix& m : trees) {
    CHECK(validate_tree_matrix(kThree, m).ok);
    if (!is_untwisted(m)) {
      ++twisted;
      CHECK(m == Matrix{{0, 1, 2}, {0, 0, 1}, {0, 0, 0}});
    }
  }
  CHECK(twisted == 1);
  CHECK(enumerate_all(kSplit).size() == 4);
  CHECK(enumerate_all({{5, 4}}) == std::vector<Matrix>{{{0}}});
  CHECK(caught([] { enumerate_all(kTwin); }).value().code() == "infinite_family");
}

TEST_CASE("tree nodes") {
  std::vector<TreeNode> ex22 = tree_nodes(kThree, {{0, 2, 1}, {0, 0, 1}, {0, 0, 0}}, 2);
  REQUIRE(ex22.size() == 3);
  CHECK(ex22[0].branches == std::vector<Int>{1, 2, 3});
  CHECK(ex22[0].coords == Vec{5, 6, 2});
  CHECK(ex22[1].branches == std::vector<Int>{1, 2});
  CHECK(ex22[1].coords == Vec{4, 4, 0});
  CHECK(ex22[2].branches == std::vector<Int>{3});
  CHECK(ex22[2].coords == Vec{0, 0, 2});
  std::vector<TreeNode> ex23 = tree_nodes(kTwin, kTwinTree, 2);
  REQUIRE(ex23.size() == 3);
  CHECK(ex23[0].coords == Vec{5, 6, 5});
  CHECK(ex23[1].branches == std::vector<Int>{1, 3});
  CHECK(ex23[1].coords == Vec{3, 0, 3});
  CHECK(ex23[2].coords == Vec{0, 4, 0});
  CHECK(tree_nodes(kTwin, kTwinTree, 1).size() == 1);
}

TEST_CASE("conductor") {
  CHECK(conductor(kTwin, kTwinTree) == Vec{10, 12, 10});
  CHECK(conductor({{2}}, {{0}}) == Vec{2});
  CHECK(conductor(kThree, {{0, 2, 1}, {0, 0, 1}, {0, 0, 0}}) == Vec{9, 10, 4});
  CHECK(conductor({{}}, {{0}}) == Vec{0});
}

TEST_CASE("small elements of a tree") {
  SmallElements s = expand_small(kTwin, kTwinTree);
  CHECK(s.conductor == Vec{10, 12, 10});
  std::vector<Vec> expected{
      {5, 6, 5},  {5, 10, 5},  {5, 12, 5},  {8, 6, 8},   {8, 6, 10},  {8, 10, 8},  {8, 10, 10}, {8, 12, 8},
      {8, 12, 10}, {10, 6, 8}, {10, 6, 10}, {10, 10, 8}, {10, 10, 10}, {10, 12, 8}, {10, 12, 10}};
  CHECK(s.elements == expected);
  CHECK(expand_small({{2}}, {{0}}).elements == std::vector<Vec>{{2}});
}

TEST_CASE("membership") {
  CHECK(contains(kTwin, kTwinTree, {5, 6, 5}));
  CHECK_FALSE(contains(kTwin, kTwinTree, {1, 1, 1}));
  CHECK(contains(kTwin, kTwinTree, {50, 50, 50}));
  CHECK(contains(kTwin, kTwinTree, {0, 0, 0}));
  CHECK_FALSE(contains(kTwin, kTwinTree, {5, 6, 0}));
  CHECK(contains({{}}, {{0}}, {7}));
  CHECK(caught([] { return contains(kTwin, kTwinTree, {1, 1}); }).value().code() == "dimension_mismatch");
}

TEST_CASE("semigroup comparison by matrices") {
  Matrix min_tree = minimal_tree(kThree);
  for (const Matrix& m : enumerate_all(kThree)) {
    CHECK(semigroup_leq(min_tree, m));
    CHECK(semigroup_leq(m, m));
  }
  CHECK(semigroup_leq(untwisted_to_matrix(kThree, {3, 2}), untwisted_to_matrix(kThree, {2, 1})));
  CHECK_FALSE(semigroup_leq(untwisted_to_matrix(kThree, {2, 1}), untwisted_to_matrix(kThree, {3, 2})));
}

TEST_CASE("triple law on split bounds") {
  oracle::Rng rng(101);
  for (int t = 0; t < 500; ++t) {
    Int n = oracle::pick(rng, 3, 5);
    Collection e = oracle::random_collection(rng, n);
    for (Int i = 1; i <= n; ++i) {
      for (Int j = i + 1; j <= n; ++j) {
        for (Int k = j + 1; k <= n; ++k) {
          CHECK(oracle::triple_law(k_bound(e, i, j), k_bound(e, j, k), k_bound(e, i, k)));
        }
      }
    }
  }
}

TEST_CASE("count of untwisted trees") {
  oracle::Rng rng(103);
  for (int t = 0; t < 100; ++t) {
    Int n = oracle::pick(rng, 2, 4);
    Collection e = oracle::random_distinct_collection(rng, n);
    Int product = 1;
    for (Int i = 1; i < n; ++i) product *= k_bound(e, i, i + 1).value;
    CHECK(static_cast<Int>(enumerate_untwisted(e).size()) == product);
  }
}

TEST_CASE("enumeration validity and untwist round-trip") {
  oracle::Rng rng(107);
  for (int t = 0; t < 20; ++t) {
    Int n = oracle::pick(rng, 2, 4);
    Collection e = oracle::random_distinct_collection(rng, n, 3, 2);
    for (const Matrix& m : enumerate_all(e)) CHECK(validate_tree_matrix(e, m).ok);
    std::vector<Int> identity(n);
    std::iota(identity.begin(), identity.end(), 1);
    for (const Vec& d : enumerate_untwisted(e)) {
      auto [perm, back] = untwist(e, untwisted_to_matrix(e, d));
      CHECK(perm == identity);
      CHECK(back == d);
    }
  }
}

TEST_CASE("branch projections of the small elements") {
  oracle::Rng rng(109);
  for (int t = 0; t < 40; ++t) {
    Int n = oracle::pick(rng, 2, 4);
    Collection e = oracle::random_distinct_collection(rng, n, 3, 2);
    Matrix m = oracle::random_tree(rng, e);
    SmallElements s = expand_small(e, m);
    for (Int i = 0; i < n; ++i) {
      std::set<Int> projected{0};
      for (const Vec& v : s.elements) projected.insert(v[i]);
      for (Int x = s.conductor[i]; x <= s.conductor[i] + 3; ++x) projected.insert(x);
      std::vector<Int> expected = semigroup_elements(e[i], s.conductor[i] + 3);
      CHECK(std::vector<Int>(projected.begin(), projected.end()) == expected);
    }
  }
}

TEST_CASE("matrix order matches semigroup inclusion") {
  oracle::Rng rng(113);
  for (int t = 0; t < 25; ++t) {
    Int n = oracle::pick(rng, 2, 3);
    Collection e = oracle::random_distinct_collection(rng, n, 3, 1);
    Matrix m1 = oracle::random_tree(rng, e);
    Matrix m2 = oracle::random_tree(rng, e);
    SmallElements s1 = expand_small(e, m1), s2 = expand_small(e, m2);
    bool included = true;
    Vec v(n, 0);
    while (true) {
      bool in1 = small_contains(s1, v), in2 = small_contains(s2, v);
      CHECK(in1 == oracle::fast_contains(e, m1, v));
      CHECK(in2 == oracle::fast_contains(e, m2, v));
      if (in1 && !in2) included = false;
      Int i = n - 1;
      while (i >= 0 && v[i] == s1.conductor[i] + 2) v[i--] = 0;
      if (i < 0) break;
      ++v[i];
    }
    CHECK(semigroup_leq(m1, m2) == included);
  }
}

TEST_CASE("nodes decompose into subtree sums exactly for valid gluings") {
  Matrix glued_high{{0, 5}, {0, 0}};
  std::vector<TreeNode> nodes = tree_nodes(kSplit, glued_high, 5);
  Int level = 0;
  Int failures = 0;
  Vec failing_coords;
  for (size_t idx = 0; idx < nodes.size(); ++idx) {
    if (nodes[idx].branches[0] == 1) ++level;
    if (!oracle::node_expressible(kSplit, glued_high, nodes[idx].branches, level)) {
      ++failures;
      failing_coords = nodes[idx].coords;
    }
  }
  CHECK(failures == 1);
  CHECK(failing_coords == Vec{5, 1});

  oracle::Rng rng(127);
  for (int t = 0; t < 25; ++t) {
    Int n = oracle::pick(rng, 2, 4);
    Collection e = oracle::random_distinct_collection(rng, n, 3, 2);
    for (const Matrix& m : enumerate_all(e)) {
      Int depth = padded_length(e);
      Int lv = 0;
      for (const TreeNode& node : tree_nodes(e, m, depth)) {
        if (node.branches[0] == 1) ++lv;
        CHECK(oracle::node_expressible(e, m, node.branches, lv));
      }
    }
  }
}
