#pragma once

#include "arf/tree.hpp"

namespace arf {

struct VectorSetReport {
  bool ok = true;
  std::vector<Int> gcd_failures;                    // coordinates with gcd != 1
  std::vector<std::pair<Int, Int>> pair_failures;   // pairs never separated
};

// Closure preconditions for a finite vector set: per-coordinate gcd 1, and
// for every i < j some vector with g[i] != g[j].
VectorSetReport validate_vector_set(const std::vector<Vec>& g);

// pos(i) = the index j with v[i] = m_{i,1} + ... + m_{i,j}. Throws
// Error("not_in_projection", {i}) when v[i] is not a partial sum of branch i.
Vec positions(const Collection& e, const Vec& v);

struct PairDiagnostic {
  Int i = 0, j = 0;
  bool in_u = false;  // no input vector separates the pair by position
  Level k;            // split bound of the pair
  Int p = 0;          // chosen gluing level
};

struct ClosureResult {
  Collection sequences;
  Matrix matrix;
  std::vector<PairDiagnostic> pairs;
};

// Smallest Arf semigroup containing g: branch i comes from the closure of
// the i-th coordinates, the gluing level of (i,j) is k when no vector
// separates the pair and min(k, min over separating vectors of the smaller
// position) otherwise. Throws Error("gcd_not_one", {i}) or
// Error("indistinguishable_pair", {i,j}).
ClosureResult arf_closure_of_vectors(const std::vector<Vec>& g);

// Smallest Arf semigroup containing a good semigroup given by its small
// elements: closure of the small elements plus the vectors delta + e_i.
// Throws Error("malformed_small_set", {...}).
ClosureResult arf_closure_of_good_semigroup(const std::vector<Vec>& small);

// Checks the small-set shape: nonempty positive vectors of equal dimension,
// componentwise max present as the conductor, closed under componentwise
// min. Returns the inferred set; throws Error("malformed_small_set", {...}).
SmallElements validate_small(const std::vector<Vec>& small);

}  // namespace arf
