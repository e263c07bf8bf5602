#include <algorithm>
#include <bit>

#include "doctest.h"
#include "sdst/path_hierarchy.hpp"

#include <random>

using namespace sdst;

namespace {

LabeledTree chain(Label universe, const std::vector<Label>& labels, std::vector<TreeNode>* nodes = nullptr) {
  LabeledTree t(universe);
  TreeNode at = LabeledTree::kRoot;
  for (auto l : labels) {
    at = t.add_child(at, l);
    if (nodes) nodes->push_back(at);
  }
  return t;
}

LabeledTree random_tree(std::mt19937_64& rng, std::size_t size, Label universe) {
  LabeledTree t(universe);
  for (std::size_t k = 1; k < size; ++k)
    t.add_child(static_cast<TreeNode>(rng() % t.size()), static_cast<Label>(1 + rng() % universe));
  return t;
}

unsigned ceil_log2(Label L) { return L <= 1 ? 0 : static_cast<unsigned>(std::bit_width(L - 1)); }

}  // namespace

TEST_CASE("labeled tree basics") {
  std::vector<TreeNode> n;
  auto t = chain(8, {2, 5, 2}, &n);
  CHECK(t.size() == 4);
  CHECK(t.depth(n[2]) == 3);
  CHECK(t.path_labels(n[2]) == std::vector<Label>{2, 5, 2});
  CHECK(t.path_labels(LabeledTree::kRoot).empty());
  const auto sib = t.add_child(n[0], 7);
  CHECK(t.children(n[0]) == std::vector<TreeNode>{n[1], sib});
  CHECK(t.preorder() == std::vector<TreeNode>{0, n[0], n[1], n[2], sib});
  CHECK_THROWS_AS(t.add_child(99, 1), std::out_of_range);
  CHECK_THROWS_AS(t.add_child(0, 9), std::out_of_range);
}

TEST_CASE("extraction splices dropped nodes") {
  LabeledTree t(6);
  const auto a = t.add_child(0, 1);
  const auto b = t.add_child(a, 4);
  const auto c = t.add_child(b, 2);
  const auto d = t.add_child(a, 5);
  const auto ex = extract(t, 3, [](TreeNode, Label l) -> std::optional<Label> {
    if (l <= 3) return l;
    return std::nullopt;
  });
  CHECK(ex.tree.size() == 3);
  CHECK(ex.image[b] == ex.image[a]);
  CHECK(ex.image[d] == ex.image[a]);
  CHECK(ex.tree.parent(ex.image[c]) == ex.image[a]);
  CHECK(ex.origin[ex.image[c]] == c);
  CHECK(ex.tree.label(ex.image[c]) == 2);
}

TEST_CASE("first split of a [3,1] chain over L=4") {
  std::vector<TreeNode> n;
  const PathHierarchy h(chain(4, {3, 1}, &n));
  CHECK(h.levels() == 2);
  const auto root = h.view(0, 0);
  REQUIRE(root.image[0] != PathHierarchy::kEmptyTree);
  REQUIRE(root.image[1] != PathHierarchy::kEmptyTree);
  const auto left_root = h.view(1, root.image[0]);
  const auto right_root = h.view(1, root.image[1]);
  CHECK(left_root.lo == 1);
  CHECK(left_root.hi == 2);
  CHECK(right_root.lo == 3);
  // the node labeled 1 sits alone in the [1..2] tree, the node labeled 3 in the [3..4] tree
  const auto labeled1 = h.view(0, 2).image[0];
  const auto labeled3 = h.view(0, 1).image[1];
  CHECK(h.view(1, labeled1).origin == n[1]);
  CHECK(h.view(1, labeled1).depth == 1);
  CHECK(h.view(1, labeled3).origin == n[0]);
  CHECK(h.view(0, 2).zeros == 1);
}

TEST_CASE("single low label leaves the right half root-only") {
  const PathHierarchy h(chain(4, {1}));
  const auto root = h.view(0, 0);
  CHECK(root.image[1] == PathHierarchy::kEmptyTree);
  CHECK(root.image[0] != PathHierarchy::kEmptyTree);
  CHECK(h.level_tree_count(1) == 1);
}

TEST_CASE("all labels equal: every level keeps one side") {
  const PathHierarchy h(chain(16, {6, 6, 6, 6}));
  for (unsigned lvl = 1; lvl <= h.levels(); ++lvl) CHECK(h.level_tree_count(lvl) == 1);
}

TEST_CASE("counting and selection on paths") {
  std::vector<TreeNode> n;
  const PathHierarchy h(chain(8, {2, 3, 4}, &n));
  CHECK(h.count_range(n[2], 1, 3) == 2);
  CHECK(h.count_range(n[2], 1, 8) == 3);
  CHECK(h.count_range(LabeledTree::kRoot, 1, 8) == 0);
  CHECK_THROWS_AS(h.count_range(n[2], 3, 2), std::invalid_argument);

  std::vector<TreeNode> m;
  const PathHierarchy g(chain(8, {5, 2, 2}, &m));
  CHECK(g.select(m[2], 2) == 2);
  CHECK(g.select(m[2], 3) == 5);
  CHECK_THROWS_AS(g.select(m[2], 4), std::out_of_range);
  CHECK_THROWS_AS(g.select(m[2], 0), std::out_of_range);

  std::vector<TreeNode> k;
  const PathHierarchy one(chain(8, {7}, &k));
  CHECK(one.select(k[0], 1) == 7);
}

TEST_CASE("nearest labeled ancestor, rank and select by label") {
  std::vector<TreeNode> n;
  const PathHierarchy h(chain(8, {2, 3, 2}, &n));
  CHECK(h.nearest_labeled(n[2], 2) == n[2]);
  CHECK(h.nearest_labeled(n[1], 2) == n[0]);
  CHECK(h.nearest_labeled(n[2], 5) == std::nullopt);
  CHECK(h.label_rank(n[2], 2) == 2);
  CHECK(h.label_rank(n[2], 6) == 0);
  CHECK(h.label_select(n[2], 2, 1) == n[0]);
  CHECK(h.label_select(n[2], 2, 2) == n[2]);
  CHECK_THROWS_AS(h.label_select(n[2], 2, 3), std::out_of_range);
}

TEST_CASE("property: hierarchy queries match naive parent walks") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const Label L = 1 + rng() % 64;
    const auto t = random_tree(rng, 1 + rng() % 500, L);
    const PathHierarchy h(t);
    REQUIRE(h.levels() == ceil_log2(L));
    for (TreeNode v = 0; v < t.size(); ++v) {
      auto path = t.path_labels(v);
      std::vector<Label> sorted = path;
      std::sort(sorted.begin(), sorted.end());
      for (int q = 0; q < 6; ++q) {
        Label a = 1 + rng() % L, b = 1 + rng() % L;
        if (a > b) std::swap(a, b);
        DescentCounter counter;
        const auto got = h.count_range(v, a, b, &counter);
        const auto want = std::count_if(path.begin(), path.end(), [&](Label l) { return a <= l && l <= b; });
        REQUIRE(got == static_cast<std::uint32_t>(want));
        const auto descents = a == 1 ? 1u : 2u;
        REQUIRE(counter.levels == descents * h.levels());

        const Label alpha = 1 + rng() % L;
        std::optional<TreeNode> nearest;
        for (TreeNode w = v; w != LabeledTree::kRoot; w = t.parent(w))
          if (t.label(w) == alpha) {
            nearest = w;
            break;
          }
        REQUIRE(h.nearest_labeled(v, alpha) == nearest);
      }
      for (std::uint32_t i = 1; i <= sorted.size(); ++i) {
        DescentCounter counter;
        REQUIRE(h.select(v, i, &counter) == sorted[i - 1]);
        REQUIRE(counter.levels == h.levels());
      }
    }
  }
}

TEST_CASE("property: every stored node maps to its nearest kept ancestor") {
  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 30; ++trial) {
    const Label L = 2 + rng() % 40;
    const auto t = random_tree(rng, 1 + rng() % 200, L);
    const PathHierarchy h(t);
    for (unsigned lvl = 0; lvl < h.levels(); ++lvl)
      for (TreeNode w = 0; w < h.level_size(lvl); ++w) {
        const auto nv = h.view(lvl, w);
        const Label mid = nv.lo + (nv.hi - nv.lo) / 2;
        for (int beta = 0; beta < 2; ++beta) {
          if (nv.image[beta] == PathHierarchy::kEmptyTree) continue;
          const auto img = h.view(lvl + 1, nv.image[beta]);
          REQUIRE(img.lo == (beta ? mid + 1 : nv.lo));
          // the image origin is the deepest ancestor-or-self whose label lies in the child interval
          TreeNode expect = LabeledTree::kRoot;
          for (TreeNode x = nv.origin; x != LabeledTree::kRoot; x = t.parent(x))
            if (img.lo <= t.label(x) && t.label(x) <= img.hi) {
              expect = x;
              break;
            }
          REQUIRE(img.origin == expect);
        }
      }
  }
}
