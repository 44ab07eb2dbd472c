#include "arf/closure.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace arf {

namespace {

Int common_dimension(const std::vector<Vec>& g, const char* code) {
  if (g.empty()) throw Error(code, {0}, "need at least one vector");
  const Int n = static_cast<Int>(g[0].size());
  for (const Vec& v : g) {
    if (static_cast<Int>(v.size()) != n) throw Error(code, {static_cast<Int>(v.size())}, "vectors must share one dimension");
    for (Int x : v) {
      if (x < 1) throw Error(code, {x}, "entries must be positive");
    }
  }
  if (n < 1) throw Error(code, {0}, "vectors must be nonempty");
  return n;
}

}  // namespace

VectorSetReport validate_vector_set(const std::vector<Vec>& g) {
  const Int n = common_dimension(g, "malformed_vector_set");
  VectorSetReport report;
  for (Int i = 0; i < n; ++i) {
    Int d = 0;
    for (const Vec& v : g) d = std::gcd(d, v[i]);
    if (d != 1) {
      report.ok = false;
      report.gcd_failures.push_back(i + 1);
    }
  }
  for (Int i = 0; i < n; ++i) {
    for (Int j = i + 1; j < n; ++j) {
      if (std::all_of(g.begin(), g.end(), [&](const Vec& v) { return v[i] == v[j]; })) {
        report.ok = false;
        report.pair_failures.emplace_back(i + 1, j + 1);
      }
    }
  }
  return report;
}

Vec positions(const Collection& e, const Vec& v) {
  const Int n = static_cast<Int>(e.size());
  if (static_cast<Int>(v.size()) != n) throw Error("dimension_mismatch", {static_cast<Int>(v.size())}, "vector dimension does not match");
  Vec pos(n);
  for (Int i = 0; i < n; ++i) {
    Int j = 1, sum = entry_at(e[i], 1);
    while (sum < v[i]) sum += entry_at(e[i], ++j);
    if (sum != v[i]) throw Error("not_in_projection", {i + 1}, std::to_string(v[i]) + " is not a partial sum of branch " + std::to_string(i + 1));
    pos[i] = j;
  }
  return pos;
}

ClosureResult arf_closure_of_vectors(const std::vector<Vec>& g) {
  const Int n = common_dimension(g, "malformed_vector_set");
  VectorSetReport report = validate_vector_set(g);
  if (!report.gcd_failures.empty()) throw Error("gcd_not_one", {report.gcd_failures[0]}, "coordinate " + std::to_string(report.gcd_failures[0]) + " has gcd above 1");
  if (!report.pair_failures.empty()) {
    auto [i, j] = report.pair_failures[0];
    throw Error("indistinguishable_pair", {i, j}, "no vector separates coordinates " + std::to_string(i) + " and " + std::to_string(j));
  }
  ClosureResult result;
  result.sequences.reserve(n);
  for (Int i = 0; i < n; ++i) {
    std::vector<Int> values;
    values.reserve(g.size());
    for (const Vec& v : g) values.push_back(v[i]);
    result.sequences.push_back(duval_closure(values));
  }
  std::vector<Vec> pos;
  pos.reserve(g.size());
  for (const Vec& v : g) pos.push_back(positions(result.sequences, v));
  result.matrix.assign(n, std::vector<Int>(n, 0));
  for (Int i = 1; i <= n; ++i) {
    for (Int j = i + 1; j <= n; ++j) {
      PairDiagnostic d;
      d.i = i, d.j = j;
      d.k = k_bound(result.sequences, i, j);
      d.in_u = true;
      Level bound = d.k;
      for (const Vec& p : pos) {
        if (p[i - 1] != p[j - 1]) {
          d.in_u = false;
          bound = Level::finite(min_with(bound, std::min(p[i - 1], p[j - 1])));
        }
      }
      if (!bound.is_finite()) throw Error("indistinguishable_pair", {i, j}, "no finite gluing level for coordinates " + std::to_string(i) + " and " + std::to_string(j));
      d.p = bound.value;
      result.matrix[i - 1][j - 1] = d.p;
      result.pairs.push_back(d);
    }
  }
  MatrixReport check = validate_tree_matrix(result.sequences, result.matrix);
  if (!check.ok) throw Error("invalid_matrix", {check.i, check.j, check.k}, "closure produced an inconsistent matrix (" + check.issue + ")");
  return result;
}

SmallElements validate_small(const std::vector<Vec>& small) {
  const Int n = common_dimension(small, "malformed_small_set");
  SmallElements s;
  s.conductor.assign(n, 0);
  std::set<Vec> set(small.begin(), small.end());
  for (const Vec& v : set) {
    for (Int i = 0; i < n; ++i) s.conductor[i] = std::max(s.conductor[i], v[i]);
  }
  if (!set.count(s.conductor)) throw Error("malformed_small_set", {}, "componentwise maximum is not in the set");
  for (const Vec& a : set) {
    for (const Vec& b : set) {
      Vec lo(n);
      for (Int i = 0; i < n; ++i) lo[i] = std::min(a[i], b[i]);
      if (!set.count(lo)) throw Error("malformed_small_set", {}, "set is not closed under componentwise min");
    }
  }
  s.elements.assign(set.begin(), set.end());
  return s;
}

ClosureResult arf_closure_of_good_semigroup(const std::vector<Vec>& small) {
  if (small.empty()) {
    // Small set of the full one-branch semigroup: closure of {1}.
    return arf_closure_of_vectors({{1}});
  }
  SmallElements s = validate_small(small);
  const Int n = static_cast<Int>(s.conductor.size());
  std::vector<Vec> g = s.elements;
  for (Int i = 0; i < n; ++i) {
    Vec v = s.conductor;
    ++v[i];
    g.push_back(std::move(v));
  }
  return arf_closure_of_vectors(g);
}

}  // namespace arf
