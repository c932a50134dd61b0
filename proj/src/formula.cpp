#include "axp/formula.hpp"

#include <sstream>

namespace axp {

Formula::Formula(Kind k, Literal l, std::vector<Formula> kids)
    : kind_(k),
      lit_(l),
      kids_(std::make_shared<const std::vector<Formula>>(std::move(kids))) {
  if (kind_ == Kind::Lit) {
    vars_ = 1u << lit_.feature;
  } else {
    for (const Formula& kid : *kids_) vars_ |= kid.vars_;
  }
}

Formula Formula::constant(bool value) {
  return Formula(value ? Kind::True : Kind::False, {}, {});
}

Formula Formula::lit(Literal l) { return Formula(Kind::Lit, l, {}); }

Formula Formula::negation(Formula f) {
  return Formula(Kind::Not, {}, {std::move(f)});
}

Formula Formula::conjunction(std::vector<Formula> fs) {
  return Formula(Kind::And, {}, std::move(fs));
}

Formula Formula::disjunction(std::vector<Formula> fs) {
  return Formula(Kind::Or, {}, std::move(fs));
}

Formula Formula::implication(Formula body, Formula head) {
  return Formula(Kind::Implies, {}, {std::move(body), std::move(head)});
}

Formula Formula::of_assignment(const PartialAssignment& pa) {
  std::vector<Formula> kids;
  for (Literal l : pa.literals()) kids.push_back(lit(l));
  return conjunction(std::move(kids));
}

bool Formula::evaluate(Individual x) const {
  switch (kind_) {
    case Kind::True:
      return true;
    case Kind::False:
      return false;
    case Kind::Lit:
      return x.satisfies(lit_);
    case Kind::Not:
      return !(*kids_)[0].evaluate(x);
    case Kind::And:
      for (const Formula& kid : *kids_) {
        if (!kid.evaluate(x)) return false;
      }
      return true;
    case Kind::Or:
      for (const Formula& kid : *kids_) {
        if (kid.evaluate(x)) return true;
      }
      return false;
    case Kind::Implies:
      return !(*kids_)[0].evaluate(x) || (*kids_)[1].evaluate(x);
  }
  return false;
}

std::string Formula::to_string(const FeatureSpace& space) const {
  std::ostringstream os;
  auto join = [&](const char* op) {
    os << '(';
    for (std::size_t i = 0; i < kids_->size(); ++i) {
      if (i) os << ' ' << op << ' ';
      os << (*kids_)[i].to_string(space);
    }
    os << ')';
  };
  switch (kind_) {
    case Kind::True:
      os << "true";
      break;
    case Kind::False:
      os << "false";
      break;
    case Kind::Lit:
      os << format_literal(lit_, space);
      break;
    case Kind::Not:
      os << "!" << (*kids_)[0].to_string(space);
      break;
    case Kind::And:
      join("&");
      break;
    case Kind::Or:
      join("|");
      break;
    case Kind::Implies:
      os << '(' << (*kids_)[0].to_string(space) << " -> "
         << (*kids_)[1].to_string(space) << ')';
      break;
  }
  return os.str();
}

}  // namespace axp
