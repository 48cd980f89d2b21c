#include "fakepoly/linalg.hpp"

#include <utility>

#include "fakepoly/error.hpp"

namespace fakepoly::linalg {

PolyExpr EchelonBasis::reduce(PolyExpr p) const {
  // A row only introduces monomials below its leading one, so a single
  // descending sweep clears every pivot position.
  for (auto it = rows_.rbegin(); it != rows_.rend() && !p.is_zero(); ++it) {
    Rational c = p.coefficient(it->first);
    if (sgn(c) != 0) p -= it->second * c;
  }
  return p;
}

bool EchelonBasis::insert(const PolyExpr& p) {
  PolyExpr r = reduce(p);
  if (r.is_zero()) return false;
  Monomial lead = r.leading_monomial();
  Rational inv = 1 / r.coefficient(lead);
  rows_.emplace(lead, r * inv);
  return true;
}

std::vector<PolyExpr> EchelonBasis::reduced_rows() const {
  auto rows = rows_;
  for (auto it = rows.begin(); it != rows.end(); ++it) {
    for (auto jt = std::next(it); jt != rows.end(); ++jt) {
      Rational c = jt->second.coefficient(it->first);
      if (sgn(c) != 0) jt->second -= it->second * c;
    }
  }
  std::vector<PolyExpr> out;
  out.reserve(rows.size());
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) out.push_back(it->second);
  return out;
}

std::size_t polynomial_rank(const std::vector<PolyExpr>& polys) {
  EchelonBasis basis;
  for (const auto& p : polys) basis.insert(p);
  return basis.rank();
}

std::vector<PolyExpr> canonical_basis(const std::vector<PolyExpr>& polys) {
  EchelonBasis basis;
  for (const auto& p : polys) basis.insert(p);
  return basis.reduced_rows();
}

std::vector<std::size_t> rref(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && sgn(m[sel][col]) == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    Rational inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix m) {
  std::size_t cols = m.empty() ? 0 : m.front().size();
  return rref(m, cols).size();
}

std::vector<std::vector<Rational>> nullspace(Matrix m, std::size_t cols) {
  auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(const Matrix& m, std::size_t cols,
                                           const std::vector<Rational>& b) {
  if (b.size() != m.size()) throw Error("solve: right-hand side has wrong length");
  Matrix aug = m;
  for (std::size_t r = 0; r < aug.size(); ++r) {
    aug[r].resize(cols);
    aug[r].push_back(b[r]);
  }
  auto pivots = rref(aug, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
  return x;
}

std::size_t bareiss_rank(IntMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && sgn(m[sel][c]) == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

IntMatrix column_hermite_form(IntMatrix cols, std::size_t rows) {
  for (auto& col : cols) {
    if (col.size() != rows) throw Error("column_hermite_form: ragged generator matrix");
  }
  const std::size_t n = cols.size();
  std::size_t c = 0;
  for (std::size_t i = 0; i < rows && c < n; ++i) {
    for (std::size_t j = c + 1; j < n; ++j) {
      if (sgn(cols[j][i]) == 0) continue;
      if (sgn(cols[c][i]) == 0) {
        std::swap(cols[c], cols[j]);
        continue;
      }
      Integer a = cols[c][i], b = cols[j][i], d, s, t;
      mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer ad = a / d, bd = b / d;
      for (std::size_t k = i; k < rows; ++k) {
        Integer x = cols[c][k], y = cols[j][k];
        cols[c][k] = s * x + t * y;
        cols[j][k] = ad * y - bd * x;
      }
    }
    if (sgn(cols[c][i]) == 0) continue;
    if (sgn(cols[c][i]) < 0) {
      for (auto& v : cols[c]) v = -v;
    }
    const Integer& pivot = cols[c][i];
    for (std::size_t k = 0; k < c; ++k) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), cols[k][i].get_mpz_t(), pivot.get_mpz_t());
      if (sgn(q) == 0) continue;
      for (std::size_t r = i; r < rows; ++r) cols[k][r] -= q * cols[c][r];
    }
    ++c;
  }
  cols.resize(c);
  return cols;
}

}  // namespace fakepoly::linalg
