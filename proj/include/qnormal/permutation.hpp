#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace qnormal {

/// A bijection on the tetrahedron vertex labels {0,1,2,3}.
class Permutation4 {
 public:
  /// Identity.
  constexpr Permutation4() : images_{0, 1, 2, 3} {}

  /// Throws std::invalid_argument unless `images` is a bijection on {0,1,2,3}.
  explicit Permutation4(std::array<int, 4> images);

  /// Parses the compact four-digit form, e.g. "1230"; nullopt when malformed.
  static std::optional<Permutation4> parse(std::string_view text);

  constexpr int operator[](int label) const { return images_[static_cast<std::size_t>(label)]; }

  Permutation4 inverse() const;
  /// (a * b)(i) = a(b(i)).
  Permutation4 operator*(const Permutation4& other) const;
  /// +1 for even, -1 for odd.
  int sign() const;
  std::string str() const;

  friend bool operator==(const Permutation4&, const Permutation4&) = default;

 private:
  std::array<std::uint8_t, 4> images_;
};

/// Sign of the arrangement (a,b,c,d) of {0,1,2,3} viewed as a permutation.
int arrangement_sign(int a, int b, int c, int d);

}  // namespace qnormal
