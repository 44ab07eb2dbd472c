#include "arf/tree.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace arf {

namespace {

void check_collection(const Collection& e) {
  if (e.empty()) throw Error("malformed_input", {0}, "collection must be nonempty");
}

Matrix permuted_matrix(const Matrix& m, const std::vector<Int>& perm) {
  const Int n = static_cast<Int>(perm.size());
  Matrix out(n, std::vector<Int>(n, 0));
  for (Int a = 1; a <= n; ++a) {
    for (Int b = a + 1; b <= n; ++b) {
      Int i = perm[a - 1], j = perm[b - 1];
      out[a - 1][b - 1] = m[std::min(i, j) - 1][std::max(i, j) - 1];
    }
  }
  return out;
}

bool shape_ok(const Matrix& m, Int n) {
  if (static_cast<Int>(m.size()) != n) return false;
  for (Int i = 0; i < n; ++i) {
    if (static_cast<Int>(m[i].size()) != n) return false;
    for (Int j = 0; j <= i; ++j) {
      if (m[i][j] != 0) return false;
    }
    for (Int j = i + 1; j < n; ++j) {
      if (m[i][j] < 1) return false;
    }
  }
  return true;
}

bool triples_ok(const Matrix& m, Int n, Int& ti, Int& tj, Int& tk) {
  for (Int i = 0; i < n; ++i) {
    for (Int j = i + 1; j < n; ++j) {
      for (Int k = j + 1; k < n; ++k) {
        Int a = m[i][j], b = m[j][k], c = m[i][k];
        Int lo = std::min({a, b, c}), hi = std::max({a, b, c});
        if (a + b + c - lo - hi != lo) {
          ti = i + 1, tj = j + 1, tk = k + 1;
          return false;
        }
      }
    }
  }
  return true;
}

// Branch groups at the given level: i and h share a node iff p_{i,h} >= level.
std::vector<std::vector<Int>> level_groups(const Matrix& m, Int n, Int level) {
  std::vector<std::vector<Int>> groups;
  std::vector<bool> seen(n, false);
  for (Int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<Int> g{i + 1};
    seen[i] = true;
    for (Int h = i + 1; h < n; ++h) {
      if (!seen[h] && m[i][h] >= level) {
        g.push_back(h + 1);
        seen[h] = true;
      }
    }
    groups.push_back(std::move(g));
  }
  return groups;
}

}  // namespace

Int padded_length(const Collection& e) {
  check_collection(e);
  Int len = 0;
  for (const Seq& q : e) len = std::max(len, static_cast<Int>(q.size()));
  return len + 2;
}

Level k_bound(const Collection& e, Int i, Int j) {
  const Int n = static_cast<Int>(e.size());
  if (i < 1 || j < 1 || i >= j || j > n) throw Error("index_out_of_range", {i, j}, "need 1 <= i < j <= n");
  const Int m = padded_length(e);
  std::vector<Int> si = s_vector(e[i - 1], m), sj = s_vector(e[j - 1], m);
  Level k = Level::infinite();
  for (Int t = 0; t < m; ++t) {
    if (si[t] != sj[t]) k = Level::finite(min_with(k, std::min(si[t], sj[t])));
  }
  return k;
}

MatrixReport validate_tree_matrix(const Collection& e, const Matrix& m) {
  check_collection(e);
  const Int n = static_cast<Int>(e.size());
  MatrixReport report;
  if (!shape_ok(m, n)) {
    report.ok = false;
    report.issue = "shape";
    return report;
  }
  for (Int i = 1; i <= n; ++i) {
    for (Int j = i + 1; j <= n; ++j) {
      if (!level_leq(Level::finite(m[i - 1][j - 1]), k_bound(e, i, j))) {
        report.ok = false;
        report.issue = "bound";
        report.i = i, report.j = j;
        return report;
      }
    }
  }
  if (!triples_ok(m, n, report.i, report.j, report.k)) {
    report.ok = false;
    report.issue = "triple";
  }
  return report;
}

Matrix untwisted_to_matrix(const Collection& e, const Vec& d) {
  check_collection(e);
  const Int n = static_cast<Int>(e.size());
  if (static_cast<Int>(d.size()) != n - 1) throw Error("dimension_mismatch", {static_cast<Int>(d.size())}, "need n - 1 levels");
  for (Int i = 1; i < n; ++i) {
    if (d[i - 1] < 1) throw Error("invalid_matrix", {i}, "levels must be >= 1");
    if (!level_leq(Level::finite(d[i - 1]), k_bound(e, i, i + 1))) {
      throw Error("level_exceeds_bound", {i}, "level " + std::to_string(d[i - 1]) + " exceeds the split bound at " + std::to_string(i));
    }
  }
  Matrix m(n, std::vector<Int>(n, 0));
  for (Int i = 1; i <= n; ++i) {
    for (Int j = i + 1; j <= n; ++j) {
      m[i - 1][j - 1] = *std::min_element(d.begin() + (i - 1), d.begin() + (j - 1));
    }
  }
  return m;
}

bool is_untwisted(const Matrix& m) {
  const Int n = static_cast<Int>(m.size());
  for (Int i = 0; i < n; ++i) {
    for (Int j = i + 2; j < n; ++j) {
      Int lo = m[i][i + 1];
      for (Int t = i + 1; t < j; ++t) lo = std::min(lo, m[t][t + 1]);
      if (m[i][j] != lo) return false;
    }
  }
  return true;
}

std::pair<std::vector<Int>, Vec> untwist(const Collection& e, const Matrix& m) {
  check_collection(e);
  const Int n = static_cast<Int>(e.size());
  if (!shape_ok(m, n)) throw Error("invalid_matrix", {0}, "matrix shape does not fit the collection");
  std::vector<Int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    Matrix pm = permuted_matrix(m, perm);
    if (is_untwisted(pm)) {
      Vec d(n - 1);
      for (Int i = 0; i + 1 < n; ++i) d[i] = pm[i][i + 1];
      return {perm, d};
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw Error("invalid_matrix", {0}, "no permutation untwists the matrix");
}

Matrix minimal_tree(const Collection& e) {
  check_collection(e);
  const Int n = static_cast<Int>(e.size());
  Matrix m(n, std::vector<Int>(n, 0));
  for (Int i = 1; i <= n; ++i) {
    for (Int j = i + 1; j <= n; ++j) {
      Level k = k_bound(e, i, j);
      if (!k.is_finite()) throw Error("unbounded_pair", {i, j}, "branches " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      m[i - 1][j - 1] = k.value;
    }
  }
  return m;
}

std::vector<Vec> enumerate_untwisted(const Collection& e) {
  check_collection(e);
  const Int n = static_cast<Int>(e.size());
  for (Int i = 1; i <= n; ++i) {
    for (Int j = i + 1; j <= n; ++j) {
      if (!k_bound(e, i, j).is_finite()) throw Error("unbounded_pair", {i, j}, "branches " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
    }
  }
  std::vector<Int> bound(n - 1);
  for (Int i = 1; i < n; ++i) bound[i - 1] = k_bound(e, i, i + 1).value;
  std::vector<Vec> out;
  Vec d(n - 1, 1);
  while (true) {
    out.push_back(d);
    Int t = n - 2;
    while (t >= 0 && d[t] == bound[t]) d[t--] = 1;
    if (t < 0) break;
    ++d[t];
  }
  return out;
}

std::vector<Matrix> enumerate_all(const Collection& e) {
  check_collection(e);
  const Int n = static_cast<Int>(e.size());
  for (Int i = 1; i <= n; ++i) {
    for (Int j = i + 1; j <= n; ++j) {
      if (!k_bound(e, i, j).is_finite()) throw Error("infinite_family", {i, j}, "branches " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
    }
  }
  std::vector<Matrix> out;
  std::set<Matrix> seen;
  std::vector<Int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    Collection pe(n);
    std::vector<Int> pos(n + 1);
    for (Int k = 0; k < n; ++k) {
      pe[k] = e[perm[k] - 1];
      pos[perm[k]] = k + 1;
    }
    for (const Vec& d : enumerate_untwisted(pe)) {
      Matrix pm = untwisted_to_matrix(pe, d);
      Matrix m(n, std::vector<Int>(n, 0));
      for (Int a = 1; a <= n; ++a) {
        for (Int b = a + 1; b <= n; ++b) {
          Int ia = pos[a], ib = pos[b];
          m[a - 1][b - 1] = pm[std::min(ia, ib) - 1][std::max(ia, ib) - 1];
        }
      }
      if (seen.insert(m).second) out.push_back(std::move(m));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<TreeNode> tree_nodes(const Collection& e, const Matrix& m, Int depth) {
  check_collection(e);
  const Int n = static_cast<Int>(e.size());
  if (depth < 1) throw Error("index_out_of_range", {depth}, "depth must be >= 1");
  if (!shape_ok(m, n)) throw Error("invalid_matrix", {0}, "matrix shape does not fit the collection");
  Int ti = 0, tj = 0, tk = 0;
  if (!triples_ok(m, n, ti, tj, tk)) throw Error("invalid_matrix", {ti, tj, tk}, "gluing levels are not transitively consistent");
  std::vector<TreeNode> out;
  for (Int level = 1; level <= depth; ++level) {
    for (std::vector<Int>& g : level_groups(m, n, level)) {
      TreeNode node;
      node.coords.assign(n, 0);
      for (Int h : g) node.coords[h - 1] = entry_at(e[h - 1], level);
      node.branches = std::move(g);
      out.push_back(std::move(node));
    }
  }
  return out;
}

Vec conductor(const Collection& e, const Matrix& m) {
  check_collection(e);
  const Int n = static_cast<Int>(e.size());
  if (!shape_ok(m, n)) throw Error("invalid_matrix", {0}, "matrix shape does not fit the collection");
  Vec delta(n);
  for (Int i = 1; i <= n; ++i) {
    Int l = static_cast<Int>(e[i - 1].size());
    for (Int j = 1; j <= n; ++j) {
      if (j != i) l = std::max(l, m[std::min(i, j) - 1][std::max(i, j) - 1]);
    }
    delta[i - 1] = prefix_sum(e[i - 1], l);
  }
  return delta;
}

SmallElements expand_small(const Collection& e, const Matrix& m) {
  check_collection(e);
  const Int n = static_cast<Int>(e.size());
  SmallElements s;
  s.conductor = conductor(e, m);
  std::vector<Int> max_depth(n);
  for (Int i = 0; i < n; ++i) {
    Int d = 1;
    while (prefix_sum(e[i], d) < s.conductor[i] + 1) ++d;
    max_depth[i] = d;
  }
  std::set<Vec> found;
  Vec t(n, 1);
  while (true) {
    bool consistent = true;
    for (Int i = 0; consistent && i < n; ++i) {
      for (Int j = i + 1; consistent && j < n; ++j) {
        if (t[i] != t[j] && (t[i] < m[i][j] || t[j] < m[i][j])) consistent = false;
      }
    }
    if (consistent) {
      Vec v(n);
      bool small = true;
      for (Int i = 0; i < n; ++i) {
        v[i] = prefix_sum(e[i], t[i]);
        if (v[i] > s.conductor[i]) small = false;
      }
      if (small) found.insert(std::move(v));
    }
    Int i = n - 1;
    while (i >= 0 && t[i] == max_depth[i]) t[i--] = 1;
    if (i < 0) break;
    ++t[i];
  }
  for (const Vec& a : found) {
    for (const Vec& b : found) {
      Vec lo(n);
      for (Int i = 0; i < n; ++i) lo[i] = std::min(a[i], b[i]);
      if (!found.count(lo)) throw Error("min_closure_violation", {}, "expanded set is not closed under componentwise min");
    }
  }
  s.elements.assign(found.begin(), found.end());
  return s;
}

bool small_contains(const SmallElements& s, const Vec& v) {
  const Int n = static_cast<Int>(s.conductor.size());
  if (static_cast<Int>(v.size()) != n) throw Error("dimension_mismatch", {static_cast<Int>(v.size())}, "vector dimension does not match");
  for (Int x : v) {
    if (x < 0) return false;
  }
  if (std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; })) return true;
  if (std::all_of(s.conductor.begin(), s.conductor.end(), [](Int x) { return x == 0; })) return true;
  Vec w(n);
  for (Int i = 0; i < n; ++i) w[i] = std::min(v[i], s.conductor[i]);
  return std::binary_search(s.elements.begin(), s.elements.end(), w);
}

bool contains(const Collection& e, const Matrix& m, const Vec& v) {
  if (v.size() != e.size()) throw Error("dimension_mismatch", {static_cast<Int>(v.size())}, "vector dimension does not match");
  return small_contains(expand_small(e, m), v);
}

bool semigroup_leq(const Matrix& m1, const Matrix& m2) {
  const Int n = static_cast<Int>(m1.size());
  if (static_cast<Int>(m2.size()) != n) throw Error("dimension_mismatch", {static_cast<Int>(m2.size())}, "matrix dimensions differ");
  for (Int i = 0; i < n; ++i) {
    if (m1[i].size() != m2[i].size() || static_cast<Int>(m1[i].size()) != n) throw Error("dimension_mismatch", {i + 1}, "matrix dimensions differ");
    for (Int j = i + 1; j < n; ++j) {
      if (m2[i][j] > m1[i][j]) return false;
    }
  }
  return true;
}

}  // namespace arf
