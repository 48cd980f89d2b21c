#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace fakepoly {

/// A point of Z^n or of the weak direct product Z_omega: a finitely
/// supported integer sequence. Coordinates are 0-based; zeros are never
/// stored, so the neutral element has empty support.
class GroupElement {
 public:
  using Coords = std::map<std::size_t, std::int64_t>;

  GroupElement() = default;
  GroupElement(std::initializer_list<std::int64_t> dense);
  explicit GroupElement(const std::vector<std::int64_t>& dense);

  static GroupElement unit(std::size_t index, std::int64_t value = 1);

  std::int64_t operator[](std::size_t index) const;
  void set(std::size_t index, std::int64_t value);

  const Coords& coords() const noexcept { return coords_; }
  bool is_zero() const noexcept { return coords_.empty(); }
  /// One past the largest nonzero coordinate (0 for the neutral element).
  std::size_t extent() const noexcept;
  std::vector<std::int64_t> dense(std::size_t n) const;

  GroupElement operator-() const;
  GroupElement& operator+=(const GroupElement& other);
  GroupElement& operator-=(const GroupElement& other);
  friend GroupElement operator+(GroupElement a, const GroupElement& b) { return a += b; }
  friend GroupElement operator-(GroupElement a, const GroupElement& b) { return a -= b; }
  friend GroupElement operator*(std::int64_t k, const GroupElement& a);

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    return a.coords_ < b.coords_;
  }

  std::string to_string() const;

 private:
  Coords coords_;
};

}  // namespace fakepoly
