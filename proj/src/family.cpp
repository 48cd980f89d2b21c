#include "fakepoly/family.hpp"

#include <algorithm>

#include "fakepoly/error.hpp"

namespace fakepoly {

FunctionFamily FunctionFamily::concrete(PolyExpr f, std::size_t ambient) {
  FunctionFamily fam;
  fam.kind_ = Kind::Concrete;
  fam.ambient_ = std::max(ambient, f.variable_bound());
  fam.poly_ = std::move(f);
  return fam;
}

FunctionFamily FunctionFamily::schema(FormulaPtr summand) {
  if (!summand) throw Error("schema family needs a summand");
  FunctionFamily fam;
  fam.kind_ = Kind::Schema;
  fam.summand_ = std::move(summand);
  fam.check_coherence(3);
  return fam;
}

PolyExpr FunctionFamily::materialize(std::size_t level) const {
  if (kind_ == Kind::Concrete) {
    return poly_.filter_variables([level](std::size_t v) { return v < level; });
  }
  PolyExpr out;
  for (std::size_t i = 1; i <= level; ++i) {
    PolyExpr term = summand_->instantiate(i);
    if (term.variable_bound() > i) throw Error("schema summand reaches beyond coordinate x_i");
    out += term;
  }
  return out;
}

void FunctionFamily::check_coherence(std::size_t up_to) const {
  PolyExpr previous = materialize(0);
  for (std::size_t n = 0; n < up_to; ++n) {
    PolyExpr next = materialize(n + 1);
    PolyExpr restricted = next.filter_variables([n](std::size_t v) { return v < n; });
    if (restricted != previous) {
      throw Error("incoherent family: f_" + std::to_string(n + 1) + " restricted to Z^" +
                  std::to_string(n) + " differs from f_" + std::to_string(n) +
                  " (each summand must vanish at 0)");
    }
    previous = std::move(next);
  }
}

std::string FunctionFamily::canonical() const {
  if (kind_ == Kind::Concrete) return poly_.render();
  return "sum_i " + summand_->render();
}

}  // namespace fakepoly
