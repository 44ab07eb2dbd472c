#include "arf/generators.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace arf {

namespace {

Int ceil_log2(Int x) {
  Int n = 0;
  while ((Int{1} << n) < x) ++n;
  return n;
}

Int pattern_bit(Int pattern, Int rows, Int row) { return (pattern >> (rows - row)) & 1; }

}  // namespace

Vec v_index(const Collection& e, const Vec& t) {
  const Int n = static_cast<Int>(e.size());
  if (static_cast<Int>(t.size()) != n) throw Error("dimension_mismatch", {static_cast<Int>(t.size())}, "tuple dimension does not match");
  Vec v(n);
  for (Int i = 0; i < n; ++i) {
    if (t[i] < 1) throw Error("index_out_of_range", {i + 1}, "indices must be >= 1");
    v[i] = prefix_sum(e[i], t[i]);
  }
  return v;
}

Int char_lower_bound(const Collection& e) {
  Int c = 0;
  for (const Seq& q : e) c = std::max(c, static_cast<Int>(characters(q).pchar.size()));
  return c;
}

GeneratorReport check_generator_set(const Collection& e, const Matrix& m, const std::vector<Vec>& g) {
  const Int n = static_cast<Int>(e.size());
  MatrixReport mr = validate_tree_matrix(e, m);
  if (!mr.ok) throw Error("invalid_matrix", {mr.i, mr.j, mr.k}, "matrix is not a valid tree (" + mr.issue + ")");
  if (g.empty()) throw Error("malformed_input", {0}, "need at least one tuple");
  for (const Vec& t : g) {
    if (static_cast<Int>(t.size()) != n) throw Error("dimension_mismatch", {static_cast<Int>(t.size())}, "tuple dimension does not match");
    for (Int x : t) {
      if (x < 1) throw Error("index_out_of_range", {x}, "indices must be >= 1");
    }
  }
  GeneratorReport report;
  report.missing_chars.resize(n);
  for (Int i = 0; i < n; ++i) {
    for (Int level : characters(e[i]).pchar) {
      if (std::none_of(g.begin(), g.end(), [&](const Vec& t) { return t[i] == level; })) {
        report.missing_chars[i].push_back(level);
        report.valid = false;
      }
    }
  }
  for (Int q = 1; q <= n; ++q) {
    for (Int r = q + 1; r <= n; ++r) {
      PairCheck c;
      c.q = q, c.r = r;
      Level k = k_bound(e, q, r);
      c.required = m[q - 1][r - 1];
      c.in_p = k.is_finite() && k.value == c.required;
      Level bound = k;
      c.all_equal = true;
      for (const Vec& t : g) {
        if (t[q - 1] != t[r - 1]) {
          c.all_equal = false;
          bound = Level::finite(min_with(bound, std::min(t[q - 1], t[r - 1])));
        }
      }
      c.defined = !c.all_equal;
      if (c.defined) c.realized = bound.value;
      c.ok = c.in_p ? (c.all_equal || c.realized == c.required) : (c.defined && c.realized == c.required);
      if (!c.ok) report.valid = false;
      report.pairs.push_back(c);
    }
  }
  return report;
}

std::vector<Vec> solve_distance_vector(const Vec& d) {
  const Int m = static_cast<Int>(d.size());
  if (m == 0) throw Error("malformed_input", {0}, "distance vector must be nonempty");
  for (Int x : d) {
    if (x < 1) throw Error("malformed_input", {x}, "entries must be positive");
  }
  if (m == 1) return {{d[0], d[0] + 1}};
  const Int inf = *std::min_element(d.begin(), d.end());
  const Int filler = *std::max_element(d.begin(), d.end()) + 1;
  std::vector<Vec> segments;
  Vec current;
  for (Int x : d) {
    if (x == inf) {
      segments.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(x);
    }
  }
  segments.push_back(std::move(current));
  const Int rows = ceil_log2(m + 1);
  std::vector<std::vector<Vec>> sols(segments.size());
  std::vector<Int> order(segments.size());
  for (size_t j = 0; j < segments.size(); ++j) {
    if (!segments[j].empty()) sols[j] = solve_distance_vector(segments[j]);
    order[j] = static_cast<Int>(j);
  }
  std::stable_sort(order.begin(), order.end(), [&](Int a, Int b) { return sols[a].size() > sols[b].size(); });
  std::vector<Int> pattern(segments.size());
  std::vector<bool> used(size_t{1} << rows, false);
  for (Int j : order) {
    const Int need = static_cast<Int>(sols[j].size());
    Int p = 0;
    while (p < (Int{1} << rows) && (used[p] || std::popcount(static_cast<unsigned long long>(p)) < need)) ++p;
    if (p == (Int{1} << rows)) throw Error("internal", {j}, "no pattern left for a subvector");
    used[p] = true;
    pattern[j] = p;
  }
  std::vector<Vec> out(rows);
  for (Int r = 1; r <= rows; ++r) {
    for (size_t j = 0; j < segments.size(); ++j) {
      const Int width = static_cast<Int>(segments[j].size()) + 1;
      if (pattern_bit(pattern[j], rows, r) == 0) {
        out[r - 1].insert(out[r - 1].end(), width, inf);
      } else if (sols[j].empty()) {
        out[r - 1].push_back(filler);
      } else {
        Int idx = 0;
        for (Int rr = 1; rr < r; ++rr) idx += pattern_bit(pattern[j], rows, rr);
        idx = std::min(idx, static_cast<Int>(sols[j].size()) - 1);
        const Vec& row = sols[j][idx];
        out[r - 1].insert(out[r - 1].end(), row.begin(), row.end());
      }
    }
  }
  return out;
}

GeneratorSet build_generators(const Collection& e, const Matrix& m) {
  const Int n = static_cast<Int>(e.size());
  MatrixReport mr = validate_tree_matrix(e, m);
  if (!mr.ok) throw Error("invalid_matrix", {mr.i, mr.j, mr.k}, "matrix is not a valid tree (" + mr.issue + ")");
  GeneratorSet out;
  if (n == 1) {
    out.permutation = {1};
    for (Int c : characters(e[0]).chars) out.vectors.push_back({c});
    for (Int level : characters(e[0]).pchar) out.tuples.push_back({level});
    return out;
  }
  auto [perm, d] = untwist(e, m);
  Collection pe(n);
  for (Int k = 0; k < n; ++k) pe[k] = e[perm[k] - 1];
  Matrix pm = untwisted_to_matrix(pe, d);
  std::vector<std::vector<Int>> pchar(n);
  Int columns = 0, padding = 0;
  for (Int i = 0; i < n; ++i) {
    pchar[i] = characters(pe[i]).pchar;
    columns = std::max(columns, static_cast<Int>(pchar[i].size()));
    padding = std::max(padding, pchar[i].back());
  }
  ++padding;
  std::vector<Vec> tuples;
  for (Int p = 0; p < columns; ++p) {
    Vec t(n);
    for (Int i = 0; i < n; ++i) t[i] = p < static_cast<Int>(pchar[i].size()) ? pchar[i][p] : padding;
    tuples.push_back(std::move(t));
  }
  std::vector<Vec> extra = solve_distance_vector(d);
  size_t next = 0;
  while (!check_generator_set(pe, pm, tuples).valid) {
    if (next == extra.size()) throw Error("internal", {0}, "distance solution did not complete the generators");
    if (std::find(tuples.begin(), tuples.end(), extra[next]) == tuples.end()) tuples.push_back(extra[next]);
    ++next;
  }
  out.permutation = perm;
  for (const Vec& t : tuples) {
    Vec orig(n);
    for (Int k = 0; k < n; ++k) orig[perm[k] - 1] = t[k];
    out.tuples.push_back(orig);
    out.vectors.push_back(v_index(e, orig));
  }
  return out;
}

bool lemma_char_bound(const Collection& e, Int i, Int j) {
  const Int n = static_cast<Int>(e.size());
  if (i < 1 || j < 1 || i >= j || j > n) throw Error("index_out_of_range", {i, j}, "need 1 <= i < j <= n");
  std::set<Int> a, b;
  for (Int level : characters(e[i - 1]).pchar) a.insert(level);
  for (Int level : characters(e[j - 1]).pchar) b.insert(level);
  Level lo = Level::infinite();
  for (Int level : a) {
    if (!b.count(level)) lo = Level::finite(min_with(lo, level));
  }
  for (Int level : b) {
    if (!a.count(level)) lo = Level::finite(min_with(lo, level));
  }
  if (lo.unbounded) return true;
  return level_leq(k_bound(e, i, j), lo);
}

}  // namespace arf
