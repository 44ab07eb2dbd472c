#pragma once

#include "arf/sequence.hpp"

namespace arf {

// Common S-vector length for a collection: max canonical length + 2 (min 2).
Int padded_length(const Collection& e);

// k_E(i,j) = min over differing S-vector indices of min(s_i, s_j); unbounded
// when the two branches are identical. Indices are 1-based.
Level k_bound(const Collection& e, Int i, Int j);

struct MatrixReport {
  bool ok = true;
  std::string issue;  // "shape" | "bound" | "triple"
  Int i = 0, j = 0, k = 0;
};

// Checks shape (n x n, zero diagonal and lower part, upper entries >= 1),
// p_{ij} <= k_E(i,j), and {p_ij, p_jk, p_ik} = {x, x, y} with x <= y.
MatrixReport validate_tree_matrix(const Collection& e, const Matrix& m);

// Matrix with p_{ij} = min(d_i,...,d_{j-1}). Throws
// Error("level_exceeds_bound", {i}) when d_i > k_E(i,i+1).
Matrix untwisted_to_matrix(const Collection& e, const Vec& d);

// True when p_{ij} = min(p_{i,i+1},...,p_{j-1,j}) for all i < j.
bool is_untwisted(const Matrix& m);

// Lex-least permutation making the matrix untwisted, plus the consecutive
// level vector. permuted[k] = original[perm[k]], 1-based entries.
std::pair<std::vector<Int>, Vec> untwist(const Collection& e, const Matrix& m);

// Untwisted matrix with d_i = k_E(i,i+1). Throws Error("unbounded_pair",
// {i,j}) when two branches coincide.
Matrix minimal_tree(const Collection& e);

// All level vectors d with 1 <= d_i <= k_E(i,i+1), lex order.
std::vector<Vec> enumerate_untwisted(const Collection& e);

// All distinct matrices over every permutation of the branches; throws
// Error("infinite_family", {i,j}) when two branches coincide. Matrices keep
// first-occurrence order over permutations in lex order of the permutation.
std::vector<Matrix> enumerate_all(const Collection& e);

struct TreeNode {
  std::vector<Int> branches;  // 1-based, ascending
  Vec coords;                 // n entries; 0 where the branch is absent
};

// Nodes of the tree at levels 1..depth, level by level, groups ordered by
// smallest branch. Requires shape and triple consistency only, so gluings
// above the k bound can still be inspected.
std::vector<TreeNode> tree_nodes(const Collection& e, const Matrix& m, Int depth);

// delta_i = prefix_sum_i(l_i) with l_i = max(row/column maximum of m at i,
// canonical length of branch i).
Vec conductor(const Collection& e, const Matrix& m);

struct SmallElements {
  Vec conductor;
  std::vector<Vec> elements;  // lex-sorted, distinct, without 0
};

// All nonzero semigroup elements <= the conductor componentwise.
SmallElements expand_small(const Collection& e, const Matrix& m);

// Membership of v in the semigroup with the given small-element set.
bool small_contains(const SmallElements& s, const Vec& v);

// Membership of v in the semigroup of (e, m).
bool contains(const Collection& e, const Matrix& m, const Vec& v);

// S(m1) included in S(m2) for matrices over the same collection: true iff
// every entry of m2 <= the corresponding entry of m1.
bool semigroup_leq(const Matrix& m1, const Matrix& m2);

}  // namespace arf
