#pragma once

#include "arf/core.hpp"

namespace arf {

// Strips trailing 1s; entries must be positive.
Seq canonical(Seq entries);

// Returns the canonical form or throws Error("not_arf_sequence", {j}) at the
// first index j where no partial sum of the following entries (1-padded)
// equals m_j.
Seq validate_sequence(const Seq& entries);

// m_j of the canonical sequence under 1-padding, 1-based.
Int entry_at(const Seq& q, Int j);

// m_1 + ... + m_j under 1-padding; prefix_sum(q, 0) = 0.
Int prefix_sum(const Seq& q, Int j);

// S(i) = [s_1,...,s_M]: s_j is the unique index with
// m_j = m_{j+1} + ... + m_{s_j}. Requires padded_length >= canonical + 2.
std::vector<Int> s_vector(const Seq& q, Int padded_length);

// Left inverse of s_vector: set m_M = 1 and back-substitute.
Seq sequence_from_s_vector(const std::vector<Int>& sv);

// Multiplicity sequence of the smallest Arf numerical semigroup containing
// the given values. Throws Error("gcd_not_one", {d}) when gcd = d != 1.
Seq duval_closure(const std::vector<Int>& values);

// {0} and all partial sums <= bound.
std::vector<Int> semigroup_elements(const Seq& q, Int bound);

struct CharacterData {
  std::vector<Int> restriction;  // r_1..r_N
  std::vector<Int> pchar;        // indices j with r_j < r_{j+1}, ascending
  std::vector<Int> chars;        // partial sums at the pchar indices
};

CharacterData characters(const Seq& q);

}  // namespace arf
