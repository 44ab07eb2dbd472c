#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace arf {

using Int = long long;

// Multiplicity sequence in canonical form: trailing 1s stripped, so the
// all-ones sequence is the empty vector. Entries beyond the stored length
// are implicitly 1.
using Seq = std::vector<Int>;

using Vec = std::vector<Int>;
using Matrix = std::vector<std::vector<Int>>;
using Collection = std::vector<Seq>;

// Gluing-level bound k_E(i,j); unbounded when two branches share a sequence.
struct Level {
  bool unbounded = false;
  Int value = 0;

  static Level infinite() { return Level{true, 0}; }
  static Level finite(Int v) { return Level{false, v}; }
  bool is_finite() const { return !unbounded; }
  friend bool operator==(const Level&, const Level&) = default;
};

inline Int min_with(const Level& k, Int x) {
  return k.unbounded ? x : (k.value < x ? k.value : x);
}

// a <= b with unbounded as the top element
inline bool level_leq(const Level& a, const Level& b) {
  if (b.unbounded) return true;
  if (a.unbounded) return false;
  return a.value <= b.value;
}

class Error : public std::runtime_error {
 public:
  Error(std::string code, std::vector<Int> args, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)), args_(std::move(args)) {}

  const std::string& code() const noexcept { return code_; }
  const std::vector<Int>& args() const noexcept { return args_; }

 private:
  std::string code_;
  std::vector<Int> args_;
};

}  // namespace arf
