#include "fakepoly/group_element.hpp"

#include <sstream>

namespace fakepoly {

GroupElement::GroupElement(std::initializer_list<std::int64_t> dense)
    : GroupElement(std::vector<std::int64_t>(dense)) {}

GroupElement::GroupElement(const std::vector<std::int64_t>& dense) {
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) coords_.emplace(i, dense[i]);
  }
}

GroupElement GroupElement::unit(std::size_t index, std::int64_t value) {
  GroupElement e;
  e.set(index, value);
  return e;
}

std::int64_t GroupElement::operator[](std::size_t index) const {
  auto it = coords_.find(index);
  return it == coords_.end() ? 0 : it->second;
}

void GroupElement::set(std::size_t index, std::int64_t value) {
  if (value == 0) {
    coords_.erase(index);
  } else {
    coords_[index] = value;
  }
}

std::size_t GroupElement::extent() const noexcept {
  return coords_.empty() ? 0 : coords_.rbegin()->first + 1;
}

std::vector<std::int64_t> GroupElement::dense(std::size_t n) const {
  std::vector<std::int64_t> out(std::max(n, extent()), 0);
  for (const auto& [i, v] : coords_) out[i] = v;
  return out;
}

GroupElement GroupElement::operator-() const {
  GroupElement out;
  for (const auto& [i, v] : coords_) out.coords_.emplace(i, -v);
  return out;
}

GroupElement& GroupElement::operator+=(const GroupElement& other) {
  for (const auto& [i, v] : other.coords_) set(i, (*this)[i] + v);
  return *this;
}

GroupElement& GroupElement::operator-=(const GroupElement& other) {
  for (const auto& [i, v] : other.coords_) set(i, (*this)[i] - v);
  return *this;
}

GroupElement operator*(std::int64_t k, const GroupElement& a) {
  GroupElement out;
  if (k == 0) return out;
  for (const auto& [i, v] : a.coords_) out.coords_.emplace(i, k * v);
  return out;
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << '(';
  auto values = dense(0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << values[i];
  }
  os << ')';
  return os.str();
}

}  // namespace fakepoly
