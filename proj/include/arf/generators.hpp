#pragma once

#include "arf/tree.hpp"

namespace arf {

// Coordinate i = m_{i,1} + ... + m_{i,t_i}. Throws
// Error("index_out_of_range", {i}) when t_i < 1.
Vec v_index(const Collection& e, const Vec& t);

// C_E = max branch count of principal character levels; every generator set
// needs at least this many vectors.
Int char_lower_bound(const Collection& e);

struct PairCheck {
  Int q = 0, r = 0;
  bool in_p = false;      // gluing level equals the split bound
  bool all_equal = false; // every tuple has t_q = t_r
  bool defined = false;   // some tuple has t_q != t_r
  Int realized = 0;       // min(k, min over mismatching tuples), when defined
  Int required = 0;       // the gluing level the pair must realize
  bool ok = false;
};

struct GeneratorReport {
  bool valid = true;
  std::vector<std::vector<Int>> missing_chars;  // per branch, uncovered levels
  std::vector<PairCheck> pairs;
};

// Decides whether the index tuples generate the tree (e, m): every branch's
// principal character levels appear among its indices, and every pair (q,r)
// realizes its gluing level — pairs at the split bound may instead agree on
// all tuples.
GeneratorReport check_generator_set(const Collection& e, const Matrix& m, const std::vector<Vec>& g);

// Vectors g with min{min(g_i, g_j) : g_i != g_j over the set} = min(d_i..d_{j-1})
// for all i < j; at most ceil(log2(len(d)+1)) vectors.
std::vector<Vec> solve_distance_vector(const Vec& d);

struct GeneratorSet {
  std::vector<Vec> vectors;      // value vectors in the original branch order
  std::vector<Vec> tuples;       // the matching index tuples
  std::vector<Int> permutation;  // branch order used internally (1-based)
};

// Generator set for the tree (e, m): character-covering tuples plus distance
// solution tuples, built over the untwisted arrangement and mapped back.
// Size <= char_lower_bound(e) + ceil(log2 n).
GeneratorSet build_generators(const Collection& e, const Matrix& m);

// k_E(i,j) never exceeds the smallest level where exactly one of the two
// branches has a principal character; vacuously true when the character
// sets agree.
bool lemma_char_bound(const Collection& e, Int i, Int j);

}  // namespace arf
