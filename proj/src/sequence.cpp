#include "arf/sequence.hpp"

#include <algorithm>
#include <numeric>

namespace arf {

Seq canonical(Seq entries) {
  for (Int m : entries) {
    if (m < 1) throw Error("not_arf_sequence", {0}, "entries must be positive");
  }
  while (!entries.empty() && entries.back() == 1) entries.pop_back();
  return entries;
}

Seq validate_sequence(const Seq& entries) {
  Seq q = canonical(entries);
  const Int c = static_cast<Int>(q.size());
  for (Int j = 1; j <= c; ++j) {
    Int sum = 0;
    Int k = j + 1;
    while (sum < q[j - 1]) sum += entry_at(q, k++);
    if (sum != q[j - 1]) throw Error("not_arf_sequence", {j}, "no matching block at index " + std::to_string(j));
  }
  return q;
}

Int entry_at(const Seq& q, Int j) {
  if (j < 1) throw Error("index_out_of_range", {j}, "index must be >= 1");
  return j <= static_cast<Int>(q.size()) ? q[j - 1] : 1;
}

Int prefix_sum(const Seq& q, Int j) {
  if (j < 0) throw Error("index_out_of_range", {j}, "index must be >= 0");
  const Int c = static_cast<Int>(q.size());
  Int sum = std::accumulate(q.begin(), q.begin() + std::min(j, c), Int{0});
  if (j > c) sum += j - c;
  return sum;
}

std::vector<Int> s_vector(const Seq& q, Int padded_length) {
  if (padded_length < static_cast<Int>(q.size()) + 2) {
    throw Error("index_out_of_range", {padded_length}, "padded length too small");
  }
  std::vector<Int> sv(padded_length);
  for (Int j = 1; j <= padded_length; ++j) {
    Int sum = 0;
    Int k = j + 1;
    while (sum < entry_at(q, j)) sum += entry_at(q, k++);
    sv[j - 1] = k - 1;
  }
  return sv;
}

Seq sequence_from_s_vector(const std::vector<Int>& sv) {
  const Int m = static_cast<Int>(sv.size());
  if (m < 2) throw Error("malformed_s_vector", {m}, "need at least two entries");
  for (Int j = 1; j <= m; ++j) {
    if (sv[j - 1] < j + 1) throw Error("malformed_s_vector", {j}, "entry below index + 1");
  }
  Seq q(m, 1);
  for (Int j = m - 1; j >= 1; --j) {
    Int sum = 0;
    for (Int k = j + 1; k <= sv[j - 1]; ++k) sum += k <= m ? q[k - 1] : 1;
    q[j - 1] = sum;
  }
  return canonical(q);
}

Seq duval_closure(const std::vector<Int>& values) {
  std::vector<Int> set;
  for (Int v : values) {
    if (v > 0) set.push_back(v);
  }
  if (set.empty()) throw Error("gcd_not_one", {0}, "no positive values");
  Int d = 0;
  for (Int v : set) d = std::gcd(d, v);
  if (d != 1) throw Error("gcd_not_one", {d}, "gcd is " + std::to_string(d));
  Seq q;
  while (!(set.size() == 1 && set[0] == 1)) {
    Int m = *std::min_element(set.begin(), set.end());
    q.push_back(m);
    std::vector<Int> next{m};
    for (Int v : set) {
      if (v > m) next.push_back(v - m);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    set = std::move(next);
  }
  return canonical(std::move(q));
}

std::vector<Int> semigroup_elements(const Seq& q, Int bound) {
  std::vector<Int> out{0};
  Int sum = 0;
  Int j = 1;
  while (true) {
    sum += entry_at(q, j++);
    if (sum > bound) break;
    out.push_back(sum);
    if (j > static_cast<Int>(q.size())) {
      for (Int v = sum + 1; v <= bound; ++v) out.push_back(v);
      break;
    }
  }
  return out;
}

CharacterData characters(const Seq& q) {
  const Int c = static_cast<Int>(q.size());
  Int n = 2;
  for (Int j = 1; j <= c; ++j) {
    Int sum = 0;
    Int k = j + 1;
    while (sum < q[j - 1]) sum += entry_at(q, k++);
    n = std::max(n, k - 1);
  }
  CharacterData data;
  data.restriction.resize(n);
  for (Int j = 1; j <= n; ++j) {
    Int r = 0;
    for (Int p = 1; p < j; ++p) {
      Int sum = 0;
      Int k = p + 1;
      while (sum < entry_at(q, p)) sum += entry_at(q, k++);
      if (k - 1 >= j) ++r;
    }
    data.restriction[j - 1] = r;
  }
  for (Int j = 1; j < n; ++j) {
    if (data.restriction[j - 1] < data.restriction[j]) {
      data.pchar.push_back(j);
      data.chars.push_back(prefix_sum(q, j));
    }
  }
  return data;
}

}  // namespace arf
