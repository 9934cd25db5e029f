#include "strpoly/common.hpp"

#include <sstream>

namespace strpoly {

int rank_from_length(int len) {
  for (int n = 0; nbar(n) <= len; ++n)
    if (nbar(n) == len) return n;
  return -1;
}

std::string join_ints(const std::vector<int>& v, const std::string& sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << sep;
    out << v[i];
  }
  return out.str();
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    std::size_t b = item.find_first_not_of(" \t");
    std::size_t e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error("ParseError", "empty entry in integer list '" + text + "'");
    item = item.substr(b, e - b + 1);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw Error("ParseError", "not an integer: '" + item + "'");
    }
    if (used != item.size()) throw Error("ParseError", "not an integer: '" + item + "'");
    out.push_back(value);
  }
  return out;
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

IntVec negate(const IntVec& a) {
  IntVec out(a);
  for (int& x : out) x = -x;
  return out;
}

IntVec unit_vector(int d, int index0) {
  IntVec e(d, 0);
  e[index0] = 1;
  return e;
}

}  // namespace strpoly
