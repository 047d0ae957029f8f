#include <qnormal/integer.hpp>

#include <stdexcept>

namespace qnormal {

Integer parse_integer(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("malformed integer literal: " + text);
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("malformed integer literal: " + text);
  }
  return Integer(text);
}

Integer gcd_of(std::span<const Integer> entries) {
  Integer g = 0;
  for (const auto& x : entries) {
    if (x == 0) continue;
    g = boost::multiprecision::gcd(g, abs(x));
    if (g == 1) break;
  }
  return g;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Integer sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) sum += a[i] * b[i];
  }
  return sum;
}

}  // namespace qnormal
