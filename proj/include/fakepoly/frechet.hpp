#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fakepoly/polyexpr.hpp"

namespace fakepoly {

/// Variable layout for symbolic increments: block 0 holds x (variables
/// 0 .. stride-1); block j >= 1 holds the j-th increment vector.
struct BlockLayout {
  std::size_t stride = 1;

  static BlockLayout for_polynomial(const PolyExpr& f);
  std::size_t var(std::size_t block, std::size_t coord) const { return block * stride + coord; }
};

/// g(x + y_block) - g(x): one symbolic difference in increment block `block`.
PolyExpr symbolic_difference(const PolyExpr& g, const BlockLayout& layout, std::size_t block);

/// Delta_{y1,...,ym} * f with independent symbolic increments in blocks 1..m.
PolyExpr general_iterated_difference(const PolyExpr& f, const BlockLayout& layout, std::size_t m);

/// Delta_y^m * f with a single symbolic increment (block 1), via the
/// binomial signed sum over f(x + k y).
PolyExpr equal_iterated_difference(const PolyExpr& f, const BlockLayout& layout, std::size_t m);

/// Delta_{y1,...,y_{n+1}} * f == 0 identically.
bool frechet_general_test(const PolyExpr& f, std::size_t n);

/// Delta_y^{n+1} * f == 0 identically.
bool frechet_equal_test(const PolyExpr& f, std::size_t n);

struct DjokovicEntry {
  std::size_t n = 0;
  bool general = false;
  bool equal = false;
  bool agree() const { return general == equal; }
};

struct DjokovicReport {
  std::vector<DjokovicEntry> entries;
  std::vector<std::size_t> disagreements;
  /// Smallest n at which both tests hold, when one was reached.
  std::optional<std::size_t> flip_point;
  bool consistent() const { return disagreements.empty(); }
};

/// Runs both Frechet tests for n = 0..n_max. Without n_max the range is
/// total_degree + 2 (2 for the zero polynomial).
DjokovicReport djokovic_consistency(const PolyExpr& f, std::optional<std::size_t> n_max = std::nullopt);

struct DifferenceDegree {
  enum class Status { Zero, Found, ExceedsCap };
  Status status = Status::Zero;
  std::size_t value = 0;  // meaningful for Found

  friend bool operator==(const DifferenceDegree&, const DifferenceDegree&) = default;
};

/// Smallest n <= cap with Delta_y^{n+1} * f = 0.
DifferenceDegree degree_by_differences(const PolyExpr& f, std::size_t cap);

}  // namespace fakepoly
