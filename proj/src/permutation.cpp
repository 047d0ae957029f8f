#include <qnormal/permutation.hpp>

#include <stdexcept>

namespace qnormal {

Permutation4::Permutation4(std::array<int, 4> images) {
  std::array<bool, 4> seen{};
  for (std::size_t i = 0; i < 4; ++i) {
    const int v = images[i];
    if (v < 0 || v > 3 || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of {0,1,2,3}");
    }
    seen[static_cast<std::size_t>(v)] = true;
    images_[i] = static_cast<std::uint8_t>(v);
  }
}

std::optional<Permutation4> Permutation4::parse(std::string_view text) {
  if (text.size() != 4) return std::nullopt;
  std::array<int, 4> images{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (text[i] < '0' || text[i] > '3') return std::nullopt;
    images[i] = text[i] - '0';
  }
  try {
    return Permutation4(images);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

Permutation4 Permutation4::inverse() const {
  std::array<int, 4> inv{};
  for (int i = 0; i < 4; ++i) inv[static_cast<std::size_t>((*this)[i])] = i;
  return Permutation4(inv);
}

Permutation4 Permutation4::operator*(const Permutation4& other) const {
  std::array<int, 4> out{};
  for (int i = 0; i < 4; ++i) out[static_cast<std::size_t>(i)] = (*this)[other[i]];
  return Permutation4(out);
}

int Permutation4::sign() const { return arrangement_sign((*this)[0], (*this)[1], (*this)[2], (*this)[3]); }

std::string Permutation4::str() const {
  std::string s;
  for (int i = 0; i < 4; ++i) s.push_back(static_cast<char>('0' + (*this)[i]));
  return s;
}

int arrangement_sign(int a, int b, int c, int d) {
  const int p[4] = {a, b, c, d};
  int inversions = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (p[i] > p[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace qnormal
