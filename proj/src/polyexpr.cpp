#include "fakepoly/polyexpr.hpp"

#include <algorithm>
#include <sstream>

#include "fakepoly/error.hpp"

namespace fakepoly {

// --- Monomial ---------------------------------------------------------------

Monomial Monomial::variable(std::size_t var, unsigned exponent) {
  Monomial m;
  if (exponent > 0) m.entries_.emplace_back(var, exponent);
  return m;
}

Monomial Monomial::from_exponents(const std::vector<unsigned>& exponents) {
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > 0) m.entries_.emplace_back(i, exponents[i]);
  }
  return m;
}

unsigned Monomial::degree() const noexcept {
  unsigned d = 0;
  for (const auto& [var, e] : entries_) d += e;
  return d;
}

unsigned Monomial::exponent(std::size_t var) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), var,
                             [](const Entry& e, std::size_t v) { return e.first < v; });
  return it != entries_.end() && it->first == var ? it->second : 0;
}

std::size_t Monomial::variable_bound() const noexcept {
  return entries_.empty() ? 0 : entries_.back().first + 1;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto& r = out.entries_;
  r.reserve(a.entries_.size() + b.entries_.size());
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() || j != b.entries_.end()) {
    if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
      r.push_back(*i++);
    } else if (i == a.entries_.end() || j->first < i->first) {
      r.push_back(*j++);
    } else {
      r.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const noexcept {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da < db;
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  std::size_t i = 0;
  for (; i < ea.size() && i < eb.size(); ++i) {
    if (ea[i].first != eb[i].first) {
      // The monomial carrying the lower variable has the larger exponent there.
      return ea[i].first > eb[i].first;
    }
    if (ea[i].second != eb[i].second) return ea[i].second < eb[i].second;
  }
  return ea.size() < eb.size();
}

// --- PolyExpr ---------------------------------------------------------------

PolyExpr::PolyExpr(const Rational& constant) {
  if (sgn(constant) != 0) terms_.emplace(Monomial{}, constant);
}

PolyExpr PolyExpr::variable(std::size_t var) { return term(Monomial::variable(var), 1); }

PolyExpr PolyExpr::term(const Monomial& m, const Rational& coeff) {
  PolyExpr p;
  p.add_term(m, coeff);
  return p;
}

Rational PolyExpr::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<unsigned> PolyExpr::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.degree();
}

std::size_t PolyExpr::variable_bound() const {
  std::size_t bound = 0;
  for (const auto& [m, c] : terms_) bound = std::max(bound, m.variable_bound());
  return bound;
}

const Monomial& PolyExpr::leading_monomial() const {
  if (terms_.empty()) throw Error("leading monomial of the zero polynomial");
  return terms_.rbegin()->first;
}

void PolyExpr::add_term(const Monomial& m, const Rational& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

PolyExpr& PolyExpr::operator+=(const PolyExpr& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

PolyExpr& PolyExpr::operator-=(const PolyExpr& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, Rational(-c));
  return *this;
}

PolyExpr& PolyExpr::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
  } else {
    for (auto& [m, c] : terms_) c *= scalar;
  }
  return *this;
}

PolyExpr PolyExpr::operator-() const {
  PolyExpr out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

PolyExpr operator*(const PolyExpr& a, const PolyExpr& b) {
  PolyExpr out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, Rational(ca * cb));
  }
  return out;
}

PolyExpr PolyExpr::pow(unsigned exponent) const {
  PolyExpr result(1);
  PolyExpr base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Rational PolyExpr::evaluate(const GroupElement& point) const {
  Rational total;
  for (const auto& [m, c] : terms_) {
    Rational value = c;
    for (const auto& [var, e] : m.entries()) {
      Integer x(static_cast<long>(point[var]));
      Integer xe;
      mpz_pow_ui(xe.get_mpz_t(), x.get_mpz_t(), e);
      value *= xe;
      if (sgn(value) == 0) break;
    }
    total += value;
  }
  return total;
}

PolyExpr PolyExpr::substitute(const std::map<std::size_t, PolyExpr>& images) const {
  std::map<std::pair<std::size_t, unsigned>, PolyExpr> power_cache;
  auto power = [&](std::size_t var, unsigned e) -> const PolyExpr& {
    auto key = std::make_pair(var, e);
    auto it = power_cache.find(key);
    if (it == power_cache.end()) {
      it = power_cache.emplace(key, images.at(var).pow(e)).first;
    }
    return it->second;
  };

  PolyExpr out;
  for (const auto& [m, c] : terms_) {
    Monomial kept;
    PolyExpr product(c);
    for (const auto& [var, e] : m.entries()) {
      if (images.count(var)) {
        product = product * power(var, e);
        if (product.is_zero()) break;
      } else {
        kept = kept * Monomial::variable(var, e);
      }
    }
    if (product.is_zero()) continue;
    if (kept.is_one()) {
      out += product;
    } else {
      for (const auto& [pm, pc] : product.terms_) out.add_term(pm * kept, pc);
    }
  }
  return out;
}

PolyExpr PolyExpr::translate(const GroupElement& shift) const {
  std::map<std::size_t, PolyExpr> images;
  for (const auto& [var, v] : shift.coords()) {
    images.emplace(var, variable(var) + PolyExpr(Rational(static_cast<long>(v))));
  }
  return images.empty() ? *this : substitute(images);
}

PolyExpr PolyExpr::rename(const std::function<std::size_t(std::size_t)>& map) const {
  PolyExpr out;
  for (const auto& [m, c] : terms_) {
    Monomial renamed;
    for (const auto& [var, e] : m.entries()) renamed = renamed * Monomial::variable(map(var), e);
    out.add_term(renamed, c);
  }
  return out;
}

PolyExpr PolyExpr::derivative(std::size_t var) const {
  PolyExpr out;
  for (const auto& [m, c] : terms_) {
    const unsigned e = m.exponent(var);
    if (e == 0) continue;
    Monomial lowered;
    for (const auto& [v, ev] : m.entries()) {
      lowered = lowered * Monomial::variable(v, v == var ? ev - 1 : ev);
    }
    out.add_term(lowered, Rational(c * e));
  }
  return out;
}

PolyExpr PolyExpr::filter_variables(const std::function<bool(std::size_t)>& keep) const {
  PolyExpr out;
  for (const auto& [m, c] : terms_) {
    bool ok = std::all_of(m.entries().begin(), m.entries().end(),
                          [&](const Monomial::Entry& e) { return keep(e.first); });
    if (ok) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

std::string default_variable_name(std::size_t var) { return "x" + std::to_string(var + 1); }

std::string PolyExpr::render(const VariableNamer& namer) const {
  if (terms_.empty()) return "0";
  const VariableNamer& name = namer ? namer : VariableNamer(default_variable_name);
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational magnitude = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << to_string(magnitude);
      continue;
    }
    if (magnitude != 1) os << to_string(magnitude) << '*';
    bool first_factor = true;
    for (const auto& [var, e] : m.entries()) {
      if (!first_factor) os << '*';
      first_factor = false;
      os << name(var);
      if (e > 1) os << '^' << e;
    }
  }
  return os.str();
}

// --- free functions ---------------------------------------------------------

PolyExpr scale(const PolyExpr& p, const Rational& s) { return p * s; }

Rational evaluate(const PolyExpr& p, const GroupElement& point) { return p.evaluate(point); }

std::optional<unsigned> total_degree(const PolyExpr& p) { return p.total_degree(); }

PolyExpr homogeneous_part(const PolyExpr& p, unsigned k) {
  PolyExpr out;
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() == k) out.add_term(m, c);
  }
  return out;
}

std::vector<ShiftTerm> shift_expand(const PolyExpr& q) {
  std::map<Monomial, PolyExpr, GradedLexLess> family;
  for (const auto& [alpha, c] : q.terms()) {
    const auto& entries = alpha.entries();
    // Enumerate every beta <= alpha componentwise.
    std::vector<unsigned> beta(entries.size(), 0);
    while (true) {
      Integer weight = 1;
      Monomial beta_m;
      Monomial rest;
      for (std::size_t i = 0; i < entries.size(); ++i) {
        weight *= binomial(entries[i].second, beta[i]);
        beta_m = beta_m * Monomial::variable(entries[i].first, beta[i]);
        rest = rest * Monomial::variable(entries[i].first, entries[i].second - beta[i]);
      }
      family[beta_m].add_term(rest, Rational(c * weight));

      std::size_t pos = 0;
      while (pos < entries.size() && beta[pos] == entries[pos].second) beta[pos++] = 0;
      if (pos == entries.size()) break;
      ++beta[pos];
    }
  }
  std::vector<ShiftTerm> out;
  out.reserve(family.size());
  for (auto& [beta, h] : family) {
    if (!h.is_zero()) out.push_back({beta, std::move(h)});
  }
  return out;
}

}  // namespace fakepoly
