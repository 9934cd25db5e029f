#pragma once

// Shared vocabulary: words, integer vectors, and the error type used by
// every module.  Errors carry a stable machine-readable code (e.g.
// "NotReduced") in addition to a human-readable message.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace strpoly {

using Word = std::vector<int>;
using IntVec = std::vector<int>;
using IntMatrix = std::vector<IntVec>;

// The two extremal wires of a wiring diagram: A refers to the first wire,
// D to the last one.
enum class Bullet { A, D };

class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// n(n+1)/2, the length of the longest element of S_{n+1}.
constexpr int nbar(int n) { return n * (n + 1) / 2; }

// Inverse of nbar; returns -1 when len is not a triangular number.
int rank_from_length(int len);

// "1,3,2" <-> {1,3,2}.  Whitespace around entries is ignored.
std::string join_ints(const std::vector<int>& v, const std::string& sep = ",");
std::vector<int> parse_ints(const std::string& text);

IntVec add(const IntVec& a, const IntVec& b);
IntVec negate(const IntVec& a);
IntVec unit_vector(int d, int index0);

}  // namespace strpoly
