#include "fakepoly/group.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "fakepoly/error.hpp"
#include "fakepoly/linalg.hpp"

namespace fakepoly {

Measure Measure::delta(const GroupElement& at, const Rational& weight) {
  Measure m;
  m.add_atom(at, weight);
  return m;
}

Rational Measure::operator[](const GroupElement& at) const {
  auto it = atoms_.find(at);
  return it == atoms_.end() ? Rational(0) : it->second;
}

void Measure::add_atom(const GroupElement& at, const Rational& weight) {
  if (sgn(weight) == 0) return;
  auto [it, inserted] = atoms_.try_emplace(at, weight);
  if (!inserted) {
    it->second += weight;
    if (sgn(it->second) == 0) atoms_.erase(it);
  }
}

Measure& Measure::operator+=(const Measure& other) {
  for (const auto& [g, c] : other.atoms_) add_atom(g, c);
  return *this;
}

Measure& Measure::operator-=(const Measure& other) {
  for (const auto& [g, c] : other.atoms_) add_atom(g, Rational(-c));
  return *this;
}

Measure& Measure::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    atoms_.clear();
  } else {
    for (auto& [g, c] : atoms_) c *= s;
  }
  return *this;
}

std::string Measure::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [g, c] : atoms_) {
    if (!first) os << ", ";
    first = false;
    os << g.to_string() << ": " << fakepoly::to_string(c);
  }
  os << '}';
  return os.str();
}

Measure convolve(const Measure& mu, const Measure& nu) {
  Measure out;
  for (const auto& [a, ca] : mu.atoms()) {
    for (const auto& [b, cb] : nu.atoms()) out.add_atom(a + b, Rational(ca * cb));
  }
  return out;
}

Measure difference_measure(const GroupElement& y) {
  Measure m = Measure::delta(-y);
  m.add_atom(GroupElement{}, -1);
  return m;
}

Measure iterated_difference(const std::vector<GroupElement>& ys) {
  if (ys.empty()) throw Error("empty difference chain");
  Measure out = difference_measure(ys.front());
  for (std::size_t i = 1; i < ys.size(); ++i) out = convolve(out, difference_measure(ys[i]));
  return out;
}

PolyExpr apply_measure(const Measure& mu, const PolyExpr& f) {
  PolyExpr out;
  for (const auto& [y, c] : mu.atoms()) out += f.translate(-y) * c;
  return out;
}

// --- Subgroup ---------------------------------------------------------------

Subgroup::Subgroup(std::vector<GroupElement> generators, std::size_t ambient_dim)
    : generators_(std::move(generators)), ambient_dim_(ambient_dim) {
  for (const auto& g : generators_) ambient_dim_ = std::max(ambient_dim_, g.extent());
  linalg::IntMatrix cols;
  cols.reserve(generators_.size());
  for (const auto& g : generators_) {
    std::vector<Integer> col;
    for (auto v : g.dense(ambient_dim_)) col.emplace_back(static_cast<long>(v));
    cols.push_back(std::move(col));
  }
  for (const auto& col : linalg::column_hermite_form(std::move(cols), ambient_dim_)) {
    GroupElement e;
    for (std::size_t i = 0; i < col.size(); ++i) {
      if (!col[i].fits_slong_p()) throw Error("Hermite form entry overflows 64 bits");
      e.set(i, col[i].get_si());
    }
    hermite_.push_back(std::move(e));
  }
}

Subgroup Subgroup::coordinate(const std::vector<std::size_t>& indices, std::size_t ambient_dim) {
  std::vector<GroupElement> gens;
  gens.reserve(indices.size());
  for (auto i : indices) gens.push_back(GroupElement::unit(i));
  return Subgroup(std::move(gens), ambient_dim);
}

Subgroup Subgroup::full(std::size_t ambient_dim) {
  std::vector<std::size_t> all(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) all[i] = i;
  return coordinate(all, ambient_dim);
}

std::size_t Subgroup::rank() const {
  linalg::IntMatrix rows(ambient_dim_, std::vector<Integer>(generators_.size()));
  for (std::size_t j = 0; j < generators_.size(); ++j) {
    for (const auto& [i, v] : generators_[j].coords()) rows[i][j] = static_cast<long>(v);
  }
  return linalg::bareiss_rank(std::move(rows));
}

std::vector<std::vector<std::int64_t>> Subgroup::generator_columns() const {
  std::vector<std::vector<std::int64_t>> out;
  out.reserve(generators_.size());
  for (const auto& g : generators_) out.push_back(g.dense(ambient_dim_));
  return out;
}

std::size_t subgroup_rank(const Subgroup& h) { return h.rank(); }

PolyExpr restrict(const PolyExpr& f, const Subgroup& h) {
  const auto& basis = h.hermite_basis();
  std::map<std::size_t, PolyExpr> images;
  const std::size_t vars = f.variable_bound();
  for (std::size_t i = 0; i < vars; ++i) {
    PolyExpr image;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (auto v = basis[j][i]; v != 0) image += PolyExpr::variable(j) * Rational(static_cast<long>(v));
    }
    images.emplace(i, std::move(image));
  }
  return f.substitute(images);
}

// --- Hom dimension ----------------------------------------------------------

GroupDescriptor GroupDescriptor::parse(const std::string& raw) {
  std::string text;
  for (char ch : raw) {
    if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
  }
  if (text == "Z_omega" || text == "Z_w" || text == "Zomega") return weak_direct_product();
  if (text == "Z") return free(1);
  if (text.size() >= 2 && text[0] == 'Z') {
    std::size_t pos = text[1] == '^' ? 2 : 1;
    std::string digits = text.substr(pos);
    if (!digits.empty() && digits.size() < 10 &&
        std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      return free(std::stoul(digits));
    }
  }
  throw Error("unsupported group descriptor '" + raw + "' (expected Z^n or Z_omega)");
}

std::string GroupDescriptor::to_string() const {
  return kind == Kind::WeakDirectProduct ? "Z_omega" : "Z^" + std::to_string(rank);
}

HomDimension hom_dimension(const GroupDescriptor& g) {
  // Hom(Z^n, Q) is spanned by the n coordinate projections; Z_omega has
  // infinitely many independent ones.
  if (g.kind == GroupDescriptor::Kind::WeakDirectProduct) return {true, 0};
  return {false, g.rank};
}

}  // namespace fakepoly
