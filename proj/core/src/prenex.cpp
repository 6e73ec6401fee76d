#include "goedel/prenex.hpp"

#include "goedel/errors.hpp"

namespace goedel {

namespace {

PrenexFormula pf(FormulaPtr matrix) { return {{}, std::move(matrix)}; }

std::vector<std::pair<Quant, std::string>> concat(
    std::vector<std::pair<Quant, std::string>> a,
    const std::vector<std::pair<Quant, std::string>>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

PrenexFormula prenex_rec(const FormulaPtr& f, PrenexRegime regime) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::Bottom:
    case Formula::Kind::Top:
      return pf(f);
    case Formula::Kind::Forall: {
      auto body = prenex_rec(f->left(), regime);
      body.prefix.insert(body.prefix.begin(), {Quant::Forall, f->symbol()});
      return body;
    }
    case Formula::Kind::Exists: {
      auto body = prenex_rec(f->left(), regime);
      body.prefix.insert(body.prefix.begin(), {Quant::Exists, f->symbol()});
      return body;
    }
    case Formula::Kind::And: {
      auto a = prenex_rec(f->left(), regime);
      auto b = prenex_rec(f->right(), regime);
      return {concat(a.prefix, b.prefix),
              Formula::conj(a.matrix, b.matrix)};
    }
    case Formula::Kind::Or: {
      // Existential pulls are intuitionistic; universal pulls use S1,
      // which holds in every Goedel logic.
      auto a = prenex_rec(f->left(), regime);
      auto b = prenex_rec(f->right(), regime);
      return {concat(a.prefix, b.prefix),
              Formula::disj(a.matrix, b.matrix)};
    }
    case Formula::Kind::Implies: {
      auto a = prenex_rec(f->left(), regime);
      auto b = prenex_rec(f->right(), regime);
      std::vector<std::pair<Quant, std::string>> prefix;
      for (const auto& [q, v] : a.prefix) {
        if (q == Quant::Forall) {
          if (regime == PrenexRegime::IntuitionisticSafe)
            throw NotPrenexableError("S3", f->to_string());
          prefix.emplace_back(Quant::Exists, v);
        } else {
          prefix.emplace_back(Quant::Forall, v);
        }
      }
      for (const auto& [q, v] : b.prefix) {
        if (q == Quant::Exists && regime == PrenexRegime::IntuitionisticSafe)
          throw NotPrenexableError("S2", f->to_string());
        prefix.emplace_back(q, v);
      }
      return {std::move(prefix), Formula::implies(a.matrix, b.matrix)};
    }
  }
  return pf(f);
}

}  // namespace

PrenexFormula to_prenex(const FormulaPtr& f, PrenexRegime regime) {
  return prenex_rec(rectify(f), regime);
}

}  // namespace goedel
