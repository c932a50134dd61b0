#include "axp/types.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace axp {

FeatureSpace::FeatureSpace(std::vector<std::string> names) : names_(std::move(names)) {
  if (static_cast<int>(names_.size()) > kFeatureCap) {
    throw CapError("feature count " + std::to_string(names_.size()) +
                   " exceeds cap of " + std::to_string(kFeatureCap));
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw ParseError("empty feature name");
    for (std::size_t j = i + 1; j < names_.size(); ++j) {
      if (names_[i] == names_[j]) throw ParseError("duplicate feature name: " + names_[i]);
    }
  }
}

int FeatureSpace::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

int FeatureSpace::require(const std::string& name) const {
  int i = index_of(name);
  if (i < 0) throw ParseError("unknown feature: " + name);
  return i;
}

PartialAssignment PartialAssignment::of(std::initializer_list<Literal> ls) {
  PartialAssignment pa;
  for (Literal l : ls) {
    if (!pa.assign(l)) throw DomainError("inconsistent literal set");
  }
  return pa;
}

PartialAssignment PartialAssignment::all_of(Individual x, int n) {
  std::uint32_t m = n >= 32 ? ~0u : ((1u << n) - 1u);
  return {m, x.bits & m};
}

int PartialAssignment::size() const { return std::popcount(mask); }

bool PartialAssignment::assign(Literal l) {
  std::uint32_t bit = 1u << l.feature;
  if (mask & bit) return value(l.feature) == l.positive;
  mask |= bit;
  if (l.positive) bits |= bit;
  return true;
}

PartialAssignment PartialAssignment::with(Literal l) const {
  PartialAssignment pa = *this;
  if (!pa.assign(l)) throw DomainError("inconsistent literal set");
  return pa;
}

PartialAssignment PartialAssignment::without(int f) const {
  std::uint32_t bit = 1u << f;
  return {mask & ~bit, bits & ~bit};
}

PartialAssignment PartialAssignment::restricted(std::uint32_t feature_mask) const {
  return {mask & feature_mask, bits & feature_mask};
}

PartialAssignment PartialAssignment::united(const PartialAssignment& other) const {
  if ((mask & other.mask & (bits ^ other.bits)) != 0) {
    throw DomainError("inconsistent literal set union");
  }
  return {mask | other.mask, bits | other.bits};
}

std::vector<Literal> PartialAssignment::literals() const {
  std::vector<Literal> out;
  for (int f = 0; f < 32; ++f) {
    if (mentions(f)) out.push_back({f, value(f)});
  }
  return out;
}

bool lexicographic_less(const PartialAssignment& a, const PartialAssignment& b) {
  auto la = a.literals(), lb = b.literals();
  auto key = [](const std::vector<Literal>& ls) {
    std::vector<int> ks;
    for (Literal l : ls) ks.push_back(l.feature);
    return ks;
  };
  auto ka = key(la), kb = key(lb);
  if (ka != kb) return ka < kb;
  return la < lb;
}

std::string format_literal(Literal l, const FeatureSpace& space) {
  return (l.positive ? "" : "!") + space.name(l.feature);
}

std::string format_assignment(const PartialAssignment& pa, const FeatureSpace& space) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Literal l : pa.literals()) {
    if (!first) os << ", ";
    os << format_literal(l, space);
    first = false;
  }
  os << '}';
  return os.str();
}

Literal parse_literal(const std::string& text, const FeatureSpace& space) {
  std::string t = text;
  bool positive = true;
  if (!t.empty() && t[0] == '!') {
    positive = false;
    t = t.substr(1);
  }
  if (t.empty()) throw ParseError("empty literal");
  return {space.require(t), positive};
}

}  // namespace axp
