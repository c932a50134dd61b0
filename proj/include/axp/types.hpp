#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace axp {

// All algorithms here are worst-case exponential in the feature count;
// refuse anything wider than this instead of hanging.
inline constexpr int kFeatureCap = 24;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ordered set of named Boolean features. Indices are dense 0..n-1.
class FeatureSpace {
 public:
  FeatureSpace() = default;
  explicit FeatureSpace(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;      // -1 if absent
  int require(const std::string& name) const;       // throws ParseError

  bool operator==(const FeatureSpace&) const = default;

 private:
  std::vector<std::string> names_;
};

struct Literal {
  int feature = 0;
  bool positive = true;

  Literal negated() const { return {feature, !positive}; }
  bool operator==(const Literal&) const = default;
  auto operator<=>(const Literal&) const = default;
};

/// Total assignment over a feature space; value of feature i lives in bit i.
struct Individual {
  std::uint32_t bits = 0;

  bool value(int f) const { return (bits >> f) & 1u; }
  Individual with(int f, bool v) const {
    return {v ? bits | (1u << f) : bits & ~(1u << f)};
  }
  Individual flipped(int f) const { return {bits ^ (1u << f)}; }
  bool satisfies(Literal l) const { return value(l.feature) == l.positive; }

  bool operator==(const Individual&) const = default;
  auto operator<=>(const Individual&) const = default;
};

/// Consistent set of literals, at most one per feature.
struct PartialAssignment {
  std::uint32_t mask = 0;  // features mentioned
  std::uint32_t bits = 0;  // their values; bits & ~mask == 0

  static PartialAssignment of(std::initializer_list<Literal> ls);
  static PartialAssignment all_of(Individual x, int n);

  int size() const;
  bool empty() const { return mask == 0; }
  bool mentions(int f) const { return (mask >> f) & 1u; }
  bool contains(Literal l) const {
    return mentions(l.feature) && value(l.feature) == l.positive;
  }
  bool value(int f) const { return (bits >> f) & 1u; }

  /// False if the literal contradicts an existing one.
  bool assign(Literal l);
  PartialAssignment with(Literal l) const;  // throws DomainError on conflict
  PartialAssignment without(int f) const;
  PartialAssignment restricted(std::uint32_t feature_mask) const;
  PartialAssignment united(const PartialAssignment& other) const;  // throws on conflict

  bool subset_of(const PartialAssignment& other) const {
    return (mask & ~other.mask) == 0 && (other.bits & mask) == bits;
  }
  bool consistent_with(Individual x) const { return (x.bits & mask) == bits; }

  std::vector<Literal> literals() const;

  bool operator==(const PartialAssignment&) const = default;
};

/// Orders by sorted feature-index sequence, then by polarity pattern.
bool lexicographic_less(const PartialAssignment& a, const PartialAssignment& b);

std::string format_literal(Literal l, const FeatureSpace& space);
std::string format_assignment(const PartialAssignment& pa, const FeatureSpace& space);
Literal parse_literal(const std::string& text, const FeatureSpace& space);

}  // namespace axp
